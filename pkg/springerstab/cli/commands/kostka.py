from springerstab.cli.arguments import partition_arg
from springerstab.schemas.invocation import CommandResult
from springerstab.services import kostka_oracle


def register(subparsers, parents):
    parser = subparsers.add_parser("kostka", parents=parents, help="Kostka-Foulkes多项式 K_{μλ}(t)")
    parser.add_argument("mu", type=partition_arg, help="形状 μ")
    parser.add_argument("lam", metavar="lambda", type=partition_arg, help="内容 λ")
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    poly = kostka_oracle.kostka_poly(args.mu, args.lam)
    return CommandResult(
        data={
            "mu": str(args.mu),
            "lambda": str(args.lam),
            "coefficients": list(poly.coefficients),
            "polynomial": poly.to_display(),
        },
        text=poly.to_display(),
        csv_header=["power", "coefficient"],
        csv_rows=[[power, c] for power, c in enumerate(poly.coefficients)],
    )
