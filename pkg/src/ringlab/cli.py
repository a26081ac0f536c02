"""Command-line interface: classify, audit, search, witness."""

from __future__ import annotations

import argparse
import sys
import time

from . import report as rpt
from .audit import REGISTRY, AuditContext, audit, default_inventory, recheck_witness
from .audit.claims import Status
from .dsl import parse_element, parse_ideal, ring_from_text
from .errors import RingLabError, SourceError, TooLarge
from .ideals import enumerate_ideals
from .intpoly import PREDICATE_NAMES, classify_integer_ideal
from .predicates import Mode, check_cdf_pair, evaluate, quotient_char

EXIT_OK = 0
EXIT_INVALID_WITNESS = 1
EXIT_INPUT = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_TOO_LARGE = 4

CLASSIFY_PREDICATES = ("cdf", "sdf", "prime", "star_prime", "cube_condition")


class Timer:
    def __init__(self, enabled):
        self.enabled = enabled
        self.sections = {}

    def section(self, name):
        timer = self

        class _Section:
            def __enter__(self):
                self.t0 = time.perf_counter()

            def __exit__(self, *exc):
                timer.sections[name] = timer.sections.get(name, 0.0) + time.perf_counter() - self.t0

        return _Section()

    def attach(self, report):
        if self.enabled:
            report["timings"] = {k: round(v, 6) for k, v in self.sections.items()}
        return report


def _mode(args):
    return Mode.NONZERO_PAIRS if args.nonzero_only else None


def _echo(args, *keys):
    # --jobs and --timings are deliberately absent: they must not change the report
    out = {"name": args.command}
    for k in keys:
        out[k] = getattr(args, k)
    out["nonzero_only"] = args.nonzero_only
    return out


def ideal_result(I, mode, jobs):
    entry = {
        "ring": I.ring.name,
        "ideal": I.dsl(),
        "size": I.size,
        "members": I.labels(),
        "proper": I.is_proper,
        "verdicts": [],
        "quotient_char": 1,
    }
    if I.is_proper:
        entry["verdicts"] = [rpt.verdict_entry(evaluate(p, I, mode, jobs), I) for p in CLASSIFY_PREDICATES]
        entry["quotient_char"] = quotient_char(I)
    return entry


def cmd_classify(args, timer):
    with timer.section("build"):
        R = ring_from_text(args.ring)
        ideals = [parse_ideal(R, args.ideal)] if args.ideal else enumerate_ideals(R)
    mode = _mode(args)
    with timer.section("scan"):
        results = [ideal_result(I, mode, args.jobs) for I in ideals]
    report = rpt.envelope("classify", _echo(args, "ring", "ideal"))
    report.update(ring=R.name, order=R.order, mode=(mode or Mode.ALL_PAIRS).value, results=results)
    return report, EXIT_OK


def cmd_audit(args, timer):
    tags = list(REGISTRY) if args.claim == "all" else [args.claim]
    for tag in tags:
        if tag not in REGISTRY:
            raise RingLabError(f"unknown claim {tag!r}; known: all, " + ", ".join(REGISTRY))
    with timer.section("inventory"):
        inventory = [ring_from_text(t) for t in args.ring] if args.ring else default_inventory()
    ctx = AuditContext(inventory, args.jobs)
    claims = []
    for tag in tags:
        with timer.section(tag):
            r = audit(tag, ctx)
        entry = r.to_dict()
        entry["statement"] = REGISTRY[tag].statement
        entry["witness_rechecked"] = recheck_witness(r.witness) if r.witness else None
        claims.append(entry)
    summary = {"claims": len(claims)}
    for status in Status:
        summary[status.value] = sum(c["status"] == status.value for c in claims)
    report = rpt.envelope("audit", _echo(args, "claim", "ring"))
    report.update(inventory=[R.name for R in inventory], claims=claims, summary=summary)
    failed = summary[Status.COUNTEREXAMPLE.value] > 0
    return report, EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_search(args, timer):
    if not 2 <= args.lo <= args.hi:
        raise RingLabError(f"invalid range [{args.lo}, {args.hi}]; need 2 <= lo <= hi")
    mode = _mode(args)
    results, exclusions = [], []
    with timer.section("scan"):
        for n in range(args.lo, args.hi + 1):
            rep = classify_integer_ideal(n, mode, jobs=args.jobs)
            v = getattr(rep, args.predicate)
            if v.holds:
                results.append(n)
            elif args.witnesses:
                exclusions.append({"n": n, "witness": [str(w) for w in v.witness]})
    report = rpt.envelope("search", _echo(args, "lo", "hi", "predicate", "witnesses"))
    report.update(lo=args.lo, hi=args.hi, predicate=args.predicate, mode=(mode or Mode.ALL_PAIRS).value, results=results)
    if args.witnesses:
        report["exclusions"] = exclusions
    return report, EXIT_OK


def cmd_witness(args, timer):
    R = ring_from_text(args.ring)
    I = parse_ideal(R, args.ideal)
    a, b = parse_element(R, args.a), parse_element(R, args.b)
    check = check_cdf_pair(I, a, b)
    valid = check.is_counterexample and not (args.nonzero_only and R.zero in (a, b))
    mode = Mode.NONZERO_PAIRS if args.nonzero_only else Mode.ALL_PAIRS
    report = rpt.envelope("witness", _echo(args, "ring", "ideal", "a", "b"))
    report.update(
        ring=R.name,
        ideal=I.dsl(),
        predicate="cdf",
        holds=not valid,
        witness=[R.labels[a], R.labels[b]],
        witness_indices=[a, b],
        mode=mode.value,
        memberships={
            "cube_difference": check.cube_difference_in_ideal,
            "difference": check.difference_in_ideal,
            "factor": check.factor_in_ideal,
        },
        counterexample=valid,
    )
    return report, EXIT_OK if valid else EXIT_INVALID_WITNESS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for pair scans")
    common.add_argument("--nonzero-only", action="store_true", help="quantify over nonzero elements only")
    common.add_argument("--timings", action="store_true", help="include wall-clock seconds per section")

    p = argparse.ArgumentParser(prog="ringlab", description="Ideal predicates over small finite commutative rings.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="evaluate predicates on one ideal or all ideals")
    c.add_argument("ring")
    c.add_argument("--ideal")
    c.set_defaults(run=cmd_classify)

    a = sub.add_parser("audit", parents=[common], help="audit a claim (or all) over the ring inventory")
    a.add_argument("claim", help="claim tag or 'all'")
    a.add_argument("--ring", action="append", help="replace the default inventory (repeatable)")
    a.set_defaults(run=cmd_audit)

    s = sub.add_parser("search", parents=[common], help="list n in [lo, hi] with nZ satisfying a predicate")
    s.add_argument("lo", type=int)
    s.add_argument("hi", type=int)
    s.add_argument("predicate", nargs="?", default="cdf", choices=PREDICATE_NAMES)
    s.add_argument("--witnesses", action="store_true", help="report a witness for each excluded n")
    s.set_defaults(run=cmd_search)

    w = sub.add_parser("witness", parents=[common], help="check whether (a, b) defeats cdf for an ideal")
    w.add_argument("ring")
    w.add_argument("ideal")
    w.add_argument("a")
    w.add_argument("b")
    w.set_defaults(run=cmd_witness)
    return p


def _describe(err: RingLabError) -> str:
    msg = f"ringlab: error: {err}"
    if isinstance(err, SourceError) and err.source is not None:
        line = err.source.splitlines()[err.line - 1] if err.source else ""
        msg += f"\n  {line}\n  {' ' * (err.column - 1)}^"
    return msg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("ringlab: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    timer = Timer(args.timings)
    try:
        report, code = args.run(args, timer)
    except TooLarge as err:
        print(f"ringlab: error: {err} (raise RINGLAB_CUTOFF to allow it)", file=sys.stderr)
        return EXIT_TOO_LARGE
    except RingLabError as err:
        print(_describe(err), file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rpt.render(timer.attach(report), args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
