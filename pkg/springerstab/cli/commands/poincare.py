from springerstab.cli.arguments import partition_arg
from springerstab.schemas.invocation import CommandResult
from springerstab.services import betti_rec, kostka_oracle

METHODS = {
    "recursion": betti_rec.poincare,
    "kostka": kostka_oracle.poincare_kf,
}


def register(subparsers, parents):
    parser = subparsers.add_parser("poincare", parents=parents, help="用指定路径计算Poincaré多项式")
    parser.add_argument("partition", type=partition_arg, help="分拆, 例如 4,2,1")
    parser.add_argument("--method", choices=sorted(METHODS), default="recursion", help="删格递推或Kostka-Foulkes (默认: recursion)")
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    poly = METHODS[args.method](args.partition)
    return CommandResult(
        data={"partition": str(args.partition), "method": args.method, "poincare": list(poly.coefficients)},
        text=" ".join(str(c) for c in poly.coefficients),
        csv_header=["degree", "betti"],
        csv_rows=[[k, c] for k, c in enumerate(poly.coefficients)],
    )
