from springerstab.cli.arguments import nonnegative_int, positive_int
from springerstab.core.exceptions import UsageError
from springerstab.schemas.invocation import CommandResult, OutputFormat
from springerstab.services import betti_rec


def register(subparsers, parents):
    parser = subparsers.add_parser("fpoly", parents=parents, help="稳定多项式 f_{k,r}(x)")
    parser.add_argument("--k", type=nonnegative_int, required=True)
    parser.add_argument("--r", type=positive_int, required=True)
    parser.add_argument("--latex", action="store_true", help="输出LaTeX形式 (仅 text 格式)")
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    if args.latex and invocation.output_format != OutputFormat.TEXT:
        raise UsageError("--latex 只能与 --format text 一起使用")
    poly = betti_rec.f_poly(args.k, args.r)
    return CommandResult(
        data={"k": args.k, "r": args.r, "polynomial": poly.to_display(), "coefficients": poly.to_json()},
        text=poly.to_latex() if args.latex else poly.to_display(),
        csv_header=["r", "k", "polynomial"],
        csv_rows=[[args.r, args.k, poly.to_display()]],
    )
