from springerstab.cli.arguments import nonnegative_int, partition_arg
from springerstab.schemas.invocation import CommandResult
from springerstab.services import betti_rec


def register(subparsers, parents):
    parser = subparsers.add_parser("betti", parents=parents, help="Poincaré系数或单个Betti数 h^{2k}(λ)")
    parser.add_argument("partition", type=partition_arg, help="分拆, 例如 4,2,1")
    parser.add_argument("--degree", type=nonnegative_int, help="只输出 h^{2K}")
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    lam = args.partition
    poly = betti_rec.poincare(lam)
    if args.degree is not None:
        value = poly.coefficient(args.degree)
        return CommandResult(
            data={"partition": str(lam), "degree": args.degree, "betti": value},
            text=str(value),
            csv_header=["degree", "betti"],
            csv_rows=[[args.degree, value]],
        )
    return CommandResult(
        data={"partition": str(lam), "poincare": list(poly.coefficients)},
        text=" ".join(str(c) for c in poly.coefficients),
        csv_header=["degree", "betti"],
        csv_rows=[[k, c] for k, c in enumerate(poly.coefficients)],
    )
