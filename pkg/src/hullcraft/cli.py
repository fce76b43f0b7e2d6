"""hullcraft command line: enumerate, verify, mindist.

Exit codes: 0 success, 1 a verified claim failed, 2 invalid input,
3 distance enumeration over budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verify
from .eaqec import CSV_COLUMNS, DiscoveryRecord, choose_family_spec, generic_code, level_records
from .errors import BudgetExceeded, HullcraftError, ParseError
from .field import prime_power, tower_for_q
from .lincode import LinearCode, default_budget, is_mds, min_distance
from .rsfam import FamilySpec, build_family, default_representatives, valid_coset_orders
from .twistrs import TwistSpec, eta_in_alpha, twisted_hull_candidate

FAMILY_CHOICES = ("auto", "subgroup", "coset", "punctured", "twisted", "generic")


class ConfigError(Exception):
    pass


def parse_range(text: str | None) -> list[int] | None:
    """'7' -> [7]; '4:10' -> [4, ..., 10] (inclusive)."""
    if text is None:
        return None
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise ConfigError(f"bad range {text!r}") from None


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def _coset_spec(q, n, k, t_cut, n_1, family):
    tower = tower_for_q(q)
    full = n + t_cut
    orders = [n_1] if n_1 else sorted(valid_coset_orders(q), reverse=True)
    for m in orders:
        if full % m == 0 and 1 <= full // m <= q - 1:
            v = full // m
            fam = "punctured-coset" if family == "punctured" else "coset"
            spec = FamilySpec(fam, q, n, k, m, v, default_representatives(tower, v), t_cut)
            spec.validate()
            return spec
    raise HullcraftError(f"no coset family of length {full} over GF({q * q})")


def _eta_default(q, n, k):
    for eta in range(1, q * q):
        if not eta_in_alpha(TwistSpec(q, n, k, eta)):
            return eta
    return 1


def records_for(job) -> list[DiscoveryRecord]:
    """All records for one (family, q, n, k) tuple; [] if the tuple is invalid."""
    family, q, n, k, t_cut, n_1, eta, budget = job
    try:
        if family == "twisted":
            spec = TwistSpec(q, n, k, eta if eta is not None else _eta_default(q, n, k))
            C, _ = twisted_hull_candidate(spec)
            mds = is_mds(C, budget)
            d = n - k + 1 if mds else min_distance(C, budget)
            return level_records(C, d, "twisted", spec.to_json())
        if family == "generic":
            C = generic_code(q, n, k)
            return level_records(C, n - k + 1, "generic", None)
        if family == "auto":
            spec = choose_family_spec(q, n, k)
            if spec is None:
                return level_records(generic_code(q, n, k), n - k + 1, "generic", None)
        elif family == "subgroup":
            spec = FamilySpec("subgroup", q, n, k)
        else:
            spec = _coset_spec(q, n, k, t_cut if family == "punctured" else 0, n_1, family)
        C, _ = build_family(spec)
        return level_records(C, n - k + 1, spec.family, spec.to_json())
    except (HullcraftError, BudgetExceeded) as exc:
        print(f"skipped {family} q={q} n={n} k={k}: {exc}", file=sys.stderr)
        return []


def _jobs(args, q):
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    ds = parse_range(args.d)
    if ns is None:
        raise ConfigError("--n is required")
    if (ks is None) == (ds is None):
        raise ConfigError("give exactly one of --k or --d")
    jobs = []
    for n in ns:
        if not 2 <= n <= q * q + 1:
            continue
        if ks is not None:
            pairs = [(n, k) for k in ks if 1 <= k < n and 2 * k >= n]
        else:
            pairs = [(n, n - d + 1) for d in ds if 2 <= d and 2 * d <= n + 2]
        for n_, k in pairs:
            jobs.append((args.family, q, n_, k, args.t, args.n1, args.eta, args.budget))
    if not jobs:
        raise ConfigError("no valid (n, k) tuple in the requested ranges")
    return jobs


def write_records(records, fmt, stream):
    if fmt == "jsonl":
        for r in records:
            stream.write(json.dumps(r.to_json(), sort_keys=False) + "\n")
    else:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.csv_row())


def cmd_enumerate(args) -> int:
    q = args.q
    if q < 3:
        raise ConfigError("hull reduction needs q >= 3")
    jobs = _jobs(args, q)
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            chunks = list(pool.map(records_for, jobs))
    else:
        chunks = [records_for(j) for j in jobs]
    records = sorted((r for c in chunks for r in c), key=DiscoveryRecord.sort_key)
    buf = io.StringIO()
    write_records(records, args.format, buf)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# verify / mindist
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    claim = verify.resolve(args.theorem)
    if claim is None:
        choices = ", ".join([*verify.ALIASES, *verify.SWEEPS])
        raise ConfigError(f"unknown claim {args.theorem!r}; choose from {choices}")
    checks = verify.run(claim, args.q)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{claim} q={args.q}: {len(checks) - failed}/{len(checks)} passed")
    return 1 if failed else 0


def cmd_mindist(args) -> int:
    try:
        with open(args.path) as fh:
            code = LinearCode.from_text(fh.read())
    except OSError as exc:
        raise ConfigError(str(exc)) from None
    if code.k < 1:
        raise ConfigError("the zero code has no minimum distance")
    try:
        d = min_distance(code, args.budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    flag = "MDS" if d == code.n - code.k + 1 else "non-MDS"
    print(f"{code.n} {code.k} {d} {flag}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hullcraft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=None,
                       help="max codeword evaluations for exhaustive checks (env HULLCRAFT_BUDGET)")

    p = sub.add_parser("enumerate", help="emit EAQEC discovery records")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--family", choices=FAMILY_CHOICES, default="auto")
    p.add_argument("--n", required=True, help="length, value or a:b range")
    p.add_argument("--k", help="classical dimension, value or a:b range")
    p.add_argument("--d", help="distance, value or a:b range")
    p.add_argument("--t", type=int, default=0, help="punctured positions (punctured family)")
    p.add_argument("--n1", type=int, default=None, help="subgroup order for coset families")
    p.add_argument("--eta", type=int, default=None, help="twist coefficient, Elt encoding")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a claimed bound on every desk-scale instance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--theorem", required=True, metavar="CLAIM",
                   help="claim id: " + ", ".join([*verify.ALIASES, *verify.SWEEPS]))
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mindist", help="exact minimum distance of a code file")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_mindist)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "budget", None) is None:
        args.budget = default_budget()
    if args.budget < 1:
        print("error: budget must be >= 1", file=sys.stderr)
        return 2
    try:
        if hasattr(args, "q"):
            prime_power(args.q)
        return args.func(args)
    except (ConfigError, ParseError, HullcraftError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
