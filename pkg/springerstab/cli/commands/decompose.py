from springerstab.cli.arguments import nonnegative_int, partition_arg
from springerstab.schemas.invocation import CommandResult
from springerstab.services import kostka_oracle


def register(subparsers, parents):
    parser = subparsers.add_parser("decompose", parents=parents, help="H^{2k}(λ) 的不可约分解")
    parser.add_argument("partition", type=partition_arg, help="分拆, 例如 4,2,1")
    parser.add_argument("--degree", type=nonnegative_int, required=True, help="k, 即上同调次数 2k")
    parser.set_defaults(handler=handle)


def handle(args, invocation) -> CommandResult:
    decomposition = kostka_oracle.decompose(args.partition, args.degree)
    entries = [entry.model_dump() for entry in decomposition.multiplicities]
    lines = [f"{entry['mu']}\t{entry['mult']}" for entry in entries]
    return CommandResult(
        data={"partition": str(args.partition), "degree": args.degree, "decomposition": entries},
        text="\n".join(lines) if lines else "0",
        csv_header=["mu", "mult"],
        csv_rows=[[entry["mu"], entry["mult"]] for entry in entries],
    )
