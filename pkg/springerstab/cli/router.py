from springerstab.cli.arguments import CliArgumentParser, global_options
from springerstab.cli.commands import betti, check, decompose, fpoly, kostka, poincare, table, threshold
from springerstab.core.config import settings

COMMANDS = (betti, poincare, kostka, decompose, fpoly, table, threshold, check)


def build_parser() -> CliArgumentParser:
    """组装全部子命令"""
    common = global_options()
    parser = CliArgumentParser(
        prog=settings.APP_NAME,
        description=f"{settings.PROJECT_NAME}: A型Springer纤维的Betti数、分级表示分解与稳定多项式",
        parents=[common],
    )
    subparsers = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser
