"""Command-line entry point: ``powerful-lab <subcommand> [options]``.

Data goes to stdout (or --out) as text, CSV, or JSON lines; a run manifest
with an FNV-1a digest of the data payload goes to stderr (or --manifest).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from decimal import Decimal, InvalidOperation
from typing import List, NamedTuple, Optional, Sequence

from . import __version__
from .abckit import ap_abc_certificate, make_coprime_triple, powerful_gap_scan
from .apsearch import find_3aps, find_consecutive_pairs, find_consecutive_triples, scan_ap_sample
from .counting import (
    euler_product_constant,
    qk_count,
    reciprocal_sum_squarefull,
    short_interval_report,
    verify_main_term,
)
from .generate import (
    Interval,
    enumerate_kfull_interval,
    enumerate_kfull_upto,
    enumerate_smooth_kfull_interval,
    enumerate_squarefull_interval,
)
from .intcore import NatOverflowError
from .intervals import (
    WINDOW_FIELDS,
    case_histogram,
    residue_count,
    rough_count,
    shiu_split,
    smooth_window_count,
    sup_ratio_scan,
    window_count,
)

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def nat(text: str) -> int:
    """Parse 10_000_000 or 1e12 style input into an exact nonnegative int."""
    raw = text.strip().replace("_", "")
    try:
        value = Decimal(raw)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value.is_finite() or value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return n


def nat_list(text: str) -> List[int]:
    return [nat(part) for part in text.split(",") if part.strip()]


class Result(NamedTuple):
    fields: Sequence[str]
    rows: List[dict]
    text_fields: Optional[Sequence[str]] = None
    findings: List[str] = []


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _require(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise ValueError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


def cmd_enumerate(args) -> Result:
    _require(args, "x")
    if args.y is None:
        if args.B is not None:
            values = enumerate_smooth_kfull_interval(Interval(0, max(args.x, 1)), args.k, args.B)
        else:
            values = enumerate_kfull_upto(args.x, args.k)
    else:
        iv = Interval(args.x, args.y)
        if args.B is not None:
            values = enumerate_smooth_kfull_interval(iv, args.k, args.B)
        elif args.method == "param" or (args.method == "auto" and args.k == 2):
            if args.k != 2:
                raise ValueError("--method param needs --k 2")
            values = enumerate_squarefull_interval(iv)
        else:
            values = enumerate_kfull_interval(iv, args.k)
    return Result(("n",), [{"n": n} for n in values])


def cmd_count(args) -> Result:
    _require(args, "x")
    if args.y is None:
        return Result(("x", "k", "count"), [{"x": args.x, "k": args.k, "count": qk_count(args.x, args.k)}], ("count",))
    rep = window_count(args.x, args.y, args.k)
    return Result(WINDOW_FIELDS, [rep.as_dict()], ("count",))


def cmd_constant(args) -> Result:
    r = euler_product_constant(args.k, args.P)
    row = {"k": r.k, "P": r.P, "value": r.value, "tail_bound": r.tail_bound, "upper": r.upper}
    findings = [f"k={r.k} is outside the supported range k <= 12"] if r.beyond_range else []
    return Result(tuple(row), [row], ("value",), findings)


def cmd_ratio(args) -> Result:
    _require(args, "x", "theta")
    row = asdict(short_interval_report(args.x, args.theta, args.k))
    return Result(tuple(row), [row], ("ratio",))


def cmd_scan(args) -> Result:
    _require(args, "x", "y")
    best_x, _ = sup_ratio_scan(args.x, args.y, args.k)
    return Result(WINDOW_FIELDS, [window_count(best_x, args.y, args.k).as_dict()])


def cmd_residue(args) -> Result:
    _require(args, "x", "y", "q", "r")
    rep = residue_count(args.x, args.y, args.q, args.r)
    row = asdict(rep)
    row["normalized"] = rep.normalized
    notes = [] if rep.coprime else [f"gcd(r, q) = {row['r']}, {row['q']} is not 1; bound comparison not meaningful"]
    for note in notes:
        print("note: " + note, file=sys.stderr)
    return Result(tuple(row), [row], ("count",))


def cmd_rough(args) -> Result:
    _require(args, "x", "y", "z")
    row = asdict(rough_count(args.x, args.y, args.q, args.r, args.z))
    return Result(tuple(row), [row], ("count",))


def cmd_smooth(args) -> Result:
    _require(args, "x", "y")
    rep = smooth_window_count(args.x, args.y, args.k, args.exponent)
    row = asdict(rep)
    findings = []
    if args.exponent == 0.5 and rep.count > rep.comparator:
        findings.append(f"smooth count {rep.count} exceeds y^(11/12) = {rep.comparator:.3f}")
    return Result(tuple(row), [row], ("count",), findings)


def cmd_shiu(args) -> Result:
    _require(args, "x", "y", "z")
    if args.histogram:
        hist = case_histogram(args.x, args.y, args.z)
        rows = [{"case_id": c, "count": hist[c]} for c in (1, 2, 3)]
        return Result(("case_id", "count"), rows)
    rows = [
        {"n": s.n, "b_part": s.b_part, "d_part": s.d_part, "case_id": s.case_id}
        for s in (shiu_split(n, args.z) for n in enumerate_squarefull_interval(Interval(args.x, args.y)))
    ]
    return Result(("n", "b_part", "d_part", "case_id"), rows)


def _members_row(kind: str, members) -> dict:
    return {"type": kind, "members": list(members)}


def cmd_aps(args) -> Result:
    _require(args, "x", "y")
    rows = [_members_row("3ap", t.members()) for t in find_3aps(Interval(args.x, args.y))]
    return Result(("type", "members"), rows)


def cmd_consecutive(args) -> Result:
    _require(args, "N")
    if args.triples:
        triples = find_consecutive_triples(args.N)
        findings = [f"three consecutive squarefull numbers: {t}" for t in triples]
        return Result(("type", "members"), [_members_row("triple", t) for t in triples], None, findings)
    return Result(("type", "members"), [_members_row("pair", p) for p in find_consecutive_pairs(args.N)])


def cmd_abc(args) -> Result:
    _require(args, "b", "c")
    row = make_coprime_triple(args.b, args.c).as_dict()
    return Result(tuple(row), [row], ("quality",))


def cmd_gaps(args) -> Result:
    _require(args, "N", "gap_max")
    rows = [g.as_dict() for g in powerful_gap_scan(args.N, args.k, args.gap_max)]
    return Result(("b", "c", "gap", "exponent"), rows)


def cmd_certify(args) -> Result:
    _require(args, "x", "y")
    certs = [ap_abc_certificate(t) for t in find_3aps(Interval(args.x, args.y))]
    certs.sort(key=lambda c: (-c.triple.quality, c.progression.members()))
    if args.top is not None:
        certs = certs[: args.top]
    rows = [c.as_dict() for c in certs]
    fields = ("n1", "n2", "n3", "d", "D", "a", "b", "c", "rad", "quality")
    return Result(fields, rows)


def _noap_row(x: int, exponent: float, c: float) -> dict:
    s = scan_ap_sample(x, exponent, c)
    return {"x": s.x, "y": s.y, "squarefull": s.squarefull, "comparator": s.comparator,
            "hits": [list(t.members()) for t in s.hits]}


def cmd_verify(args) -> Result:
    _require(args, "x")
    xs = args.x
    if args.check == "main-term":
        rows = [asdict(verify_main_term(x, args.k)) for x in xs]
        return Result(tuple(rows[0]) if rows else (), rows)
    if args.check == "reciprocal":
        rows = [asdict(reciprocal_sum_squarefull(x)) for x in xs]
        return Result(("X", "value", "normalized"), rows)
    if args.threads > 1 and len(xs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_noap_row, xs, [args.exponent] * len(xs), [args.c] * len(xs)))
    else:
        rows = [_noap_row(x, args.exponent, args.c) for x in xs]
    findings = [f"3AP of squarefull numbers in short window at x={r['x']}: {h}" for r in rows for h in r["hits"]]
    return Result(("x", "y", "squarefull", "comparator", "hits"), rows, None, findings)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "constant": cmd_constant,
    "ratio": cmd_ratio,
    "scan": cmd_scan,
    "residue": cmd_residue,
    "rough": cmd_rough,
    "smooth": cmd_smooth,
    "shiu": cmd_shiu,
    "aps": cmd_aps,
    "consecutive": cmd_consecutive,
    "abc": cmd_abc,
    "gaps": cmd_gaps,
    "certify": cmd_certify,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(e) for e in v)
    return v


def render(result: Result, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "json":
        for row in result.rows:
            buf.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(result.fields)
        for row in result.rows:
            w.writerow([_csv_cell(row[f]) for f in result.fields])
    else:
        cols = result.text_fields or result.fields
        for row in result.rows:
            buf.write(" ".join(str(_csv_cell(row[f])) for f in cols) + "\n")
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--out", help="write data here instead of stdout")
    common.add_argument("--manifest", help="write the run manifest here instead of stderr")

    parser = argparse.ArgumentParser(prog="powerful-lab", description="Powerful (k-full) number toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    parser.subcommands = {}

    def add(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        parser.subcommands[name] = p
        return p

    p = add("enumerate", "list k-full numbers up to x or in (x, x+y]")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)
    p.add_argument("--B", type=nat, help="largest allowed prime factor")
    p.add_argument("--method", choices=("auto", "param", "dfs"), default="auto")

    p = add("count", "Q_k(x), or a window report for (x, x+y]")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)

    p = add("constant", "truncated Euler-product main-term constant")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--P", type=nat, default=10**6)

    p = add("ratio", "short-interval count over predicted main term")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=nat)
    p.add_argument("--theta", type=float)

    p = add("scan", "best window (x, x+y] with x <= --x")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)

    p = add("residue", "squarefull numbers in a residue class")
    for flag in ("--x", "--y", "--q", "--r"):
        p.add_argument(flag, type=nat)

    p = add("rough", "integers in a residue class free of primes <= z")
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)
    p.add_argument("--q", type=nat, default=1)
    p.add_argument("--r", type=nat, default=0)
    p.add_argument("--z", type=nat)

    p = add("smooth", "k-full numbers with p+(n) <= y^exponent")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)
    p.add_argument("--exponent", type=float, default=0.5)

    p = add("shiu", "prefix split of squarefull numbers and case counts")
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)
    p.add_argument("--z", type=nat)
    p.add_argument("--histogram", action="store_true")

    p = add("aps", "3-term progressions of squarefull numbers in (x, x+y]")
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)

    p = add("consecutive", "consecutive squarefull pairs (or triples) up to N")
    p.add_argument("--N", type=nat)
    p.add_argument("--triples", action="store_true")

    p = add("abc", "coprime abc triple from b < c and its quality")
    p.add_argument("--b", type=nat)
    p.add_argument("--c", type=nat)

    p = add("gaps", "close consecutive k-full pairs up to N")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--N", type=nat)
    p.add_argument("--gap-max", type=nat)

    p = add("certify", "abc certificates of squarefull 3APs in (x, x+y]")
    p.add_argument("--x", type=nat)
    p.add_argument("--y", type=nat)
    p.add_argument("--top", type=nat, help="keep the highest-quality entries only")

    p = add("verify", "empirical checks over a list of sample points")
    p.add_argument("--check", choices=("noap", "main-term", "reciprocal"), default="noap")
    p.add_argument("--x", type=nat_list, help="comma-separated sample points")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--exponent", type=float, default=0.2)
    p.add_argument("--c", type=float, default=0.1, help="log-power constant for the noap comparator")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except NatOverflowError as exc:
        print(f"powerful-lab: overflow: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.subcommands[args.command].print_usage(sys.stderr)
        print(f"powerful-lab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    payload = render(result, args.format)
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    for finding in result.findings:
        print(f"*** FINDING: {finding} ***", file=sys.stderr)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "out", "manifest", "threads")}
    manifest = {
        "subcommand": args.command,
        "params": params,
        "version": __version__,
        "wall_time": round(time.perf_counter() - started, 6),
        "digest": f"{fnv1a64(payload.encode()):016x}",
    }
    line = json.dumps(manifest, sort_keys=True)
    if args.manifest:
        with open(args.manifest, "w") as fh:
            fh.write(line + "\n")
    else:
        print(line, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
