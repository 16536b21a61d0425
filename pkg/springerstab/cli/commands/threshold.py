from springerstab.cli.arguments import nonnegative_int, positive_int
from springerstab.schemas.invocation import CommandResult
from springerstab.services.partition_core import threshold


def register(subparsers, parents):
    parser = subparsers.add_parser("threshold", parents=parents, help="阈值分拆 A_{k,r}")
    parser.add_argument("--k", type=nonnegative_int, required=True)
    parser.add_argument("--r", type=positive_int, required=True)
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    target = threshold(args.k, args.r)
    return CommandResult(
        data={"k": args.k, "r": args.r, "threshold": str(target), "size": target.size},
        text=str(target),
        csv_header=["k", "r", "threshold", "size"],
        csv_rows=[[args.k, args.r, str(target), target.size]],
    )
