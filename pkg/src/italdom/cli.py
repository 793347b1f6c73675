"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 solver cap refusal,
3 certificate invalid.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .constructions import certificate_for, closed_form_gamma
from .digraph import Digraph, ProductInstance, ProductKind, directed_cycle, directed_path, format_edge_list
from .idf import GridParseError, bound_report, column_profile, first_undominated, format_grid, parse_grid, weight
from .solver import (
    CapExceededError,
    Method,
    SolverConfig,
    SolveResult,
    solve,
    solve_branch_and_bound,
    solve_brute_force,
    solve_profile_dp,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_INVALID = 3

CSV_FIELDS = ["kind", "m", "n", "gamma", "method", "lower", "upper", "closed_form_match", "elapsed_ms"]
METHODS = ["auto", "exact", "closed-form", "dp", "bnb", "brute"]
GRID_CONVENTION = "# rows i = 0..m-1 index C_m, columns j = 0..n-1 index C_n; 1-based vertex is (i+1, j+1)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class TableRow:
    kind: str
    m: int
    n: int
    gamma: Optional[int]
    method: str
    lower: int
    upper: int
    closed_form_match: bool
    elapsed_ms: float
    error: Optional[str] = None

    def record(self) -> dict:
        rec = asdict(self)
        rec.pop("error")
        return rec


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        max_brute=args.max_brute,
        max_dp_rows=args.max_dp_rows,
        max_bnb=args.max_bnb,
        threads=args.threads,
    )


def _run_method(inst: ProductInstance, method: str, cfg: SolverConfig) -> SolveResult:
    d = inst.digraph
    if method == "auto":
        return solve(inst, cfg)
    if method == "exact":
        return solve(inst, SolverConfig(**{**asdict(cfg), "use_closed_form": False}))
    if method == "closed-form":
        res = solve(inst, cfg)
        if res.method is not Method.CLOSED_FORM:
            raise UsageError(f"no closed-form value is known for {inst}")
        return res
    if method == "dp":
        return solve_profile_dp(inst, cfg.max_dp_rows, cfg.threads).check(d)
    if method == "bnb":
        return solve_branch_and_bound(d, cfg.max_bnb).check(d)
    if method == "brute":
        return solve_brute_force(d, cfg.max_brute).check(d)
    raise UsageError(f"unknown method {method!r}")


def compute_row(inst: ProductInstance, method: str, cfg: SolverConfig) -> tuple[TableRow, Optional[SolveResult]]:
    """Solve one instance; a cap refusal becomes a row with ``error`` set and no result."""
    cf = closed_form_gamma(inst)
    bounds = bound_report(inst, cf)
    t0 = time.perf_counter()
    try:
        res = _run_method(inst, method, cfg)
    except CapExceededError as err:
        elapsed = (time.perf_counter() - t0) * 1000
        row = TableRow(inst.kind.value, inst.m, inst.n, None, "refused", bounds.lower, bounds.upper,
                       False, round(elapsed, 3), str(err))
        return row, None
    elapsed = (time.perf_counter() - t0) * 1000
    if not bounds.lower <= res.gamma <= bounds.upper:
        raise AssertionError(f"{inst}: gamma {res.gamma} outside [{bounds.lower}, {bounds.upper}]")
    row = TableRow(inst.kind.value, inst.m, inst.n, res.gamma, res.method.value, bounds.lower,
                   bounds.upper, cf is not None and cf == res.gamma, round(elapsed, 3))
    return row, res


def rows_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        rec = row.record()
        rec["closed_form_match"] = str(rec["closed_form_match"]).lower()
        rec["gamma"] = "" if rec["gamma"] is None else rec["gamma"]
        writer.writerow(rec)
    return buf.getvalue()


def rows_to_json(rows: Sequence[TableRow]) -> str:
    return json.dumps([row.record() for row in rows], indent=2) + "\n"


def rows_to_text(rows: Sequence[TableRow]) -> str:
    if not rows:
        return ""
    cells = [CSV_FIELDS]
    for row in rows:
        rec = row.record()
        cells.append([
            rec["kind"], str(rec["m"]), str(rec["n"]),
            "-" if rec["gamma"] is None else str(rec["gamma"]),
            rec["method"], str(rec["lower"]), str(rec["upper"]),
            "yes" if rec["closed_form_match"] else "no", f"{rec['elapsed_ms']:.1f}",
        ])
    widths = [max(len(r[i]) for r in cells) for i in range(len(CSV_FIELDS))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


FORMATTERS: dict[str, Callable[[Sequence[TableRow]], str]] = {
    "text": rows_to_text,
    "csv": rows_to_csv,
    "json": rows_to_json,
}


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use a..b") from None


def _kind(text: str) -> ProductKind:
    try:
        return ProductKind.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _instance(kind: ProductKind, m: int, n: int) -> ProductInstance:
    try:
        return ProductInstance(kind, m, n)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _write(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    inst = _instance(args.kind, args.m, args.n)
    if args.dump_graph:
        Path(args.dump_graph).write_text(format_edge_list(inst.digraph))
    cfg = _config(args)
    row, res = compute_row(inst, args.method, cfg)
    if res is None:
        print(f"error: {row.error}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(FORMATTERS[args.format]([row]))
    if args.witness:
        sys.stdout.write(f"# witness, weight {res.gamma}, method {res.method.value}\n{GRID_CONVENTION}\n")
        sys.stdout.write(format_grid(res.witness, inst.m, inst.n))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    cfg = _config(args)
    rows = []
    failed = False
    for m in args.m_range:
        for n in args.n_range:
            inst = _instance(args.kind, m, n)
            row, _ = compute_row(inst, args.method, cfg)
            if row.error:
                failed = True
                print(f"error: {inst}: {row.error}", file=sys.stderr)
            rows.append(row)
    sys.stdout.write(FORMATTERS[args.format](rows))
    return EXIT_CAP if failed else EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    inst = _instance(args.kind, args.m, args.n)
    try:
        text = Path(args.path).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {args.path}: {err.strerror}") from None
    try:
        f = parse_grid(text, inst.m, inst.n)
    except GridParseError as err:
        raise UsageError(f"{args.path}: {err}") from None
    bad = first_undominated(inst.digraph, f)
    profile = column_profile(inst, f)
    print("VALID" if bad is None else "INVALID")
    print(f"weight: {weight(f)}")
    print("column profile: " + " ".join(str(a) for a in profile.column_weights))
    if bad is not None:
        i, j = inst.coords(bad)
        print(f"undominated vertex: ({i},{j}) [1-based ({i + 1},{j + 1})]")
        return EXIT_INVALID
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    print("# C4 x Cn (cartesian), odd n: exact value from the profile DP vs the conjectured 2n+2")
    print(f"{'n':>4}  {'gamma':>6}  {'2n+2':>6}  verdict")
    for n in range(3, args.n_max + 1, 2):
        inst = ProductInstance(ProductKind.CARTESIAN, 4, n)
        try:
            res = solve_profile_dp(inst, args.max_dp_rows, args.threads).check(inst.digraph)
        except CapExceededError as err:
            print(f"warning: stopping before n={n}: {err}", file=sys.stderr)
            break
        expected = 2 * n + 2
        verdict = "SUPPORTED" if res.gamma == expected else "REFUTED"
        print(f"{n:>4}  {res.gamma:>6}  {expected:>6}  {verdict}")
    print("# agreement at finitely many n is evidence, not a proof")
    return EXIT_OK


def cmd_emit_certificate(args: argparse.Namespace) -> int:
    inst = _instance(args.kind, args.m, args.n)
    cert = certificate_for(inst)
    if cert is None:
        raise UsageError(f"no explicit construction is known for {inst}")
    text = f"{cert.header()}\n{GRID_CONVENTION}\n{format_grid(cert.labeling, inst.m, inst.n)}"
    _write(text, args.output)
    return EXIT_OK


def cmd_dump_graph(args: argparse.Namespace) -> int:
    d: Digraph
    try:
        if args.kind in ("cycle", "path"):
            d = directed_cycle(args.m) if args.kind == "cycle" else directed_path(args.m)
        else:
            if args.n is None:
                raise UsageError("products need both m and n")
            d = _instance(ProductKind.parse(args.kind), args.m, args.n).digraph
    except ValueError as err:
        raise UsageError(str(err)) from None
    _write(format_edge_list(d), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-brute", type=int, default=SolverConfig.max_brute, metavar="N",
                      help="largest order for exhaustive search (default %(default)s)")
    caps.add_argument("--max-dp-rows", type=int, default=SolverConfig.max_dp_rows, metavar="M",
                      help="largest column height for the transfer-matrix DP (default %(default)s)")
    caps.add_argument("--max-bnb", type=int, default=SolverConfig.max_bnb, metavar="N",
                      help="largest order for branch-and-bound (default %(default)s)")
    caps.add_argument("--threads", type=int, default=1, help="worker threads for min-plus products")

    parser = _Parser(prog="italdom", description="Italian domination numbers of directed cycle products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[caps], help="compute one value")
    p.add_argument("kind", type=_kind)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p.add_argument("--witness", action="store_true", help="also print an optimal labeling")
    p.add_argument("--dump-graph", metavar="PATH", help="write the product digraph as an edge list")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", parents=[caps], help="compute a range of values")
    p.add_argument("kind", type=_kind)
    p.add_argument("m_range", type=parse_range, metavar="M_RANGE")
    p.add_argument("n_range", type=parse_range, metavar="N_RANGE")
    p.add_argument("--method", choices=METHODS, default="exact",
                   help="default 'exact' solves without using closed forms, so the match column is a real check")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", parents=[caps], help="verify a labeling grid file")
    p.add_argument("path")
    p.add_argument("kind", type=_kind)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("conjecture", parents=[caps], help="check C4 x Cn = 2n+2 for odd n up to N_MAX")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("emit-certificate", parents=[caps], help="write the explicit optimal labeling")
    p.add_argument("kind", type=_kind)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_emit_certificate)

    p = sub.add_parser("dump-graph", parents=[caps], help="write a digraph as an edge list")
    p.add_argument("kind", choices=["cartesian", "strong", "cycle", "path"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_dump_graph)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
