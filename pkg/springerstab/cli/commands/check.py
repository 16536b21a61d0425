import json
from typing import List, Optional
from springerstab.cli.arguments import nonnegative_int, positive_int
from springerstab.core.exceptions import UsageError
from springerstab.schemas.invocation import CommandResult
from springerstab.schemas.report import StabilityReport
from springerstab.services.partition_core import threshold
from springerstab.services.stability_checks import StabilityChecker

# 每项检查允许的范围参数及其扫描默认值
ALLOWED_FLAGS = {
    "dim": {"k", "kmax", "r", "rmax", "nmax"},
    "rep": {"k", "kmax", "r", "rmax", "n", "nmax"},
    "mono": {"n", "nmax"},
    "flag": {"n", "nmax", "kmax"},
    "table": set(),
    "descent": {"k", "kmax", "r", "rmax", "nmax"},
}
DEFAULTS = {
    "dim": {"kmax": 5, "rmax": 4, "nmax": 14},
    "rep": {"kmax": 3, "rmax": 4, "nmax": 10},
    "mono": {"nmax": 7},
    "flag": {"nmax": 8, "kmax": 4},
    "table": {},
    "descent": {"kmax": 5, "rmax": 4, "nmax": 12},
}
RANGE_FLAGS = ("k", "kmax", "r", "rmax", "n", "nmax")


def register(subparsers, parents):
    parser = subparsers.add_parser("check", parents=parents, help="运行稳定性检查, 输出 StabilityReport")
    parser.add_argument("name", choices=sorted(ALLOWED_FLAGS), help="检查名称")
    parser.add_argument("--k", type=nonnegative_int, help="单个 k")
    parser.add_argument("--kmax", type=nonnegative_int, help="k 的扫描上限")
    parser.add_argument("--r", type=positive_int, help="单个 r")
    parser.add_argument("--rmax", type=positive_int, help="r 的扫描上限")
    parser.add_argument("--n", type=positive_int, help="单个 n")
    parser.add_argument("--nmax", type=nonnegative_int, help="n 的上限")
    parser.set_defaults(handler=handle)


def _validate(args) -> dict:
    given = {flag for flag in RANGE_FLAGS if getattr(args, flag) is not None}
    unexpected = given - ALLOWED_FLAGS[args.name]
    if unexpected:
        raise UsageError(f"check {args.name} 不接受参数: {', '.join('--' + flag for flag in sorted(unexpected))}")
    for single, bound in (("k", "kmax"), ("r", "rmax"), ("n", "nmax")):
        if single in given and bound in given:
            raise UsageError(f"--{single} 与 --{bound} 不能同时使用")
    values = dict(DEFAULTS[args.name])
    values.update({flag: getattr(args, flag) for flag in given})
    return values


def _sweep(single: Optional[int], bound: Optional[int], start: int) -> List[int]:
    if single is not None:
        return [single]
    return list(range(start, bound + 1))


def run_reports(checker: StabilityChecker, name: str, values: dict) -> List[StabilityReport]:
    """按参数展开并执行检查"""
    if name == "table":
        return [checker.verify_paper_table()]
    if name == "mono":
        return [checker.check_monotonicity(n) for n in _sweep(values.get("n"), values["nmax"], 1)]
    if name == "flag":
        return [checker.check_flag_corollary(n, values["kmax"]) for n in _sweep(values.get("n"), values["nmax"], 1)]
    ks = _sweep(values.get("k"), values["kmax"], 1 if name == "descent" else 0)
    rs = _sweep(values.get("r"), values["rmax"], 2 if name == "descent" else 1)
    reports = []
    for k in ks:
        for r in rs:
            if name == "dim":
                reports.append(checker.check_dim_stability(k, r, values["nmax"]))
            elif name == "descent":
                reports.append(checker.check_threshold_descent(k, r, values["nmax"]))
            elif values.get("n") is not None:
                # 扫描时跳过 n < |A_{k,r}| 的组合; 全部为单值时交给检查本身报错
                if (len(ks) == 1 and len(rs) == 1) or values["n"] >= threshold(k, r).size:
                    reports.append(checker.check_rep_stability(k, r, values["n"]))
            else:
                start = threshold(k, r).size
                reports.extend(checker.check_rep_stability(k, r, n) for n in range(max(start, 1), values["nmax"] + 1))
    return reports


def _text_line(report: StabilityReport) -> str:
    params = " ".join(f"{key}={value}" for key, value in report.params.items())
    line = f"{report.verdict.upper()} {report.check} {params}{' (vacuous)' if report.vacuous else ''} {report.elapsed_ms:.1f}ms"
    if report.counterexample is not None:
        line += " counterexample=" + json.dumps(report.counterexample, ensure_ascii=False)
    return line


def handle(args, invocation) -> CommandResult:
    values = _validate(args)
    checker = StabilityChecker(workers=invocation.workers)
    reports = run_reports(checker, args.name, values)
    payloads = [report.model_dump(mode="json") for report in reports]
    failed = any(not report.passed for report in reports)
    return CommandResult(
        data=payloads[0] if len(payloads) == 1 else payloads,
        text="\n".join(_text_line(report) for report in reports),
        csv_header=["check", "params", "verdict", "vacuous", "elapsed_ms"],
        csv_rows=[
            [report.check, json.dumps(report.params, ensure_ascii=False), report.verdict, report.vacuous, report.elapsed_ms]
            for report in reports
        ],
        exit_code=1 if failed else 0,
    )
