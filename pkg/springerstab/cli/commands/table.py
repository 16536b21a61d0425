from springerstab.cli.arguments import nonnegative_int, positive_int
from springerstab.core.exceptions import UsageError
from springerstab.schemas.invocation import CommandResult, OutputFormat
from springerstab.services import betti_rec


def register(subparsers, parents):
    parser = subparsers.add_parser("table", parents=parents, help="f_{k,r} 表格, 行为 r, 列为 k")
    parser.add_argument("--kmax", type=nonnegative_int, required=True)
    parser.add_argument("--rmax", type=positive_int, required=True)
    parser.add_argument("--latex", action="store_true", help="输出行为 r、列为 k 的LaTeX数组 (仅 text 格式)")
    parser.set_defaults(handler=handle)


def latex_array(grid, kmax: int) -> str:
    """行 r、列 k 的 LaTeX 数组"""
    lines = [
        "\\begin{array}{|c|" + "c|" * (kmax + 1) + "}",
        "\\hline",
        "r\\diagdown k&" + "&".join(str(k) for k in range(kmax + 1)) + "\\\\",
        "\\hline",
    ]
    for r, row in grid:
        lines.append(f"{r}&" + "&".join(poly.to_latex() for poly in row) + "\\\\")
        lines.append("\\hline")
    lines.append("\\end{array}")
    return "\n".join(lines)


def handle(args, invocation) -> CommandResult:
    if args.rmax < 2:
        raise UsageError("表格从 r=2 开始, --rmax 至少为 2")
    if args.latex and invocation.output_format != OutputFormat.TEXT:
        raise UsageError("--latex 只能与 --format text 一起使用")
    grid = [
        (r, [betti_rec.f_poly(k, r) for k in range(args.kmax + 1)])
        for r in range(2, args.rmax + 1)
    ]
    entries = [
        {"r": r, "k": k, "polynomial": poly.to_display(), "coefficients": poly.to_json()}
        for r, row in grid
        for k, poly in enumerate(row)
    ]
    if args.latex:
        text = latex_array(grid, args.kmax)
    else:
        text = "\n".join(f"r={r}: " + " | ".join(poly.to_display() for poly in row) for r, row in grid)
    return CommandResult(
        data={"kmax": args.kmax, "rmax": args.rmax, "entries": entries},
        text=text,
        csv_header=["r", "k", "polynomial"],
        csv_rows=[[entry["r"], entry["k"], entry["polynomial"]] for entry in entries],
    )
