"""Acceptance criteria, one test per criterion.

Each test gathers every sub-check before asserting, so a failure message
lists all failing items rather than only the first.
"""

import contextlib
import io
import json
import time

from oracles import FIXTURES, naive_cdf, quotient_has_no_zero_divisors

from ringlab.audit import default_inventory, recheck_witness, run_all
from ringlab.audit.claims import Status
from ringlab.cli import main
from ringlab.dsl import parse_ideal, ring_from_text
from ringlab.ideals import enumerate_ideals
from ringlab.intpoly import classify_integer_ideal, poly_principal_witness
from ringlab.polys import is_prime as prime_number, poly_mul
from ringlab.predicates import is_cdf, is_prime, is_star_prime

WITNESS_CASES = [
    ("Z35", "zero", "3", "-2"),
    ("Z8", "zero", "4", "2"),
    ("Z9", "zero", "1", "-2"),
    ("Z9 x Z9", "gen((0,1))", "(4,0)", "(1,0)"),
    ("Z9 x Z9 x Z9", "gen((0,0,1))", "(2,1,0)", "(8,1,0)"),
    ("idealize(Z8; zero)", "gen((0,1))", "(2,0)", "(0,2)"),
    ("amalg(Z8; gen(1))", "gen((0,1))", "(2,0)", "(0,2)"),
]

POSITIVE_RINGS = ["bool(3)", "Z3 x Z3[x]/(x^2+1)"]

MUST_CONFIRM = [
    "REM_SUMFORM", "REM_PRIME_IMPLIES_CDF", "PROP_CUBE", "THM_CHAR3", "COR_VNR", "THM_EQUIV3",
    "THM_LOCALIZATION", "THM_HOM_PRE", "THM_HOM_IMG", "COR_CONTRACT_QUOT", "THM_IDEALIZATION_B", "THM_AMALGAMATION",
]
MUST_BE_DETERMINISTIC = ["THM_STAR_EQUIV", "THM_LINSYS", "THM_PRODUCT_A", "THM_PRODUCT_B", "THM_IDEALIZATION_A",
                         "PROP_ZERO_IDEALIZATION"]


def cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(list(argv))
    return code, buf.getvalue()


def report(failures):
    assert not failures, "\n".join(failures)


def test_criterion_1_explicit_counterexamples():
    failures = []
    t0 = time.perf_counter()
    for ring, ideal, a, b in WITNESS_CASES:
        code, out = cli("witness", ring, ideal, a, b)
        if code != 0 or not json.loads(out)["counterexample"]:
            failures.append(f"witness {ring} {ideal} ({a},{b}) exit {code}")
    R = ring_from_text("Z39")
    I = parse_ideal(R, "zero")
    q = R.add(R.add(1, R.mul(1, 3)), R.mul(3, 3))
    if not (I.members[R.mul(3, q)] and not I.members[3] and not I.members[q]):
        failures.append("39: (1,3) is not a *-prime violation")
    if is_star_prime(I).holds:
        failures.append("39: zero ideal reported *-prime")
    for p in (2, 3, 5, 7):
        f = poly_mul([1, 1, 1], [p - 1, 1], p)
        checks = [(poly_principal_witness(p, f, [p - 1, 0, 0, 1]), True),
                  (poly_principal_witness(p, f, [p - 1, 1]), False),
                  (poly_principal_witness(p, f, [1, 1, 1]), False)]
        if any(got != want for got, want in checks):
            failures.append(f"K[X] membership over Z{p}: {checks}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    report(failures)


def test_criterion_2_positive_fixtures():
    failures = []
    t0 = time.perf_counter()
    if not classify_integer_ideal(12).cdf.holds:
        failures.append("12Z not cdf")
    Z8 = ring_from_text("Z8")
    for gen in ("gen(2)", "gen(4)"):
        if not is_cdf(parse_ideal(Z8, gen)).holds:
            failures.append(f"{gen} in Z8 not cdf")
    for text in POSITIVE_RINGS:
        R = ring_from_text(text)
        for I in enumerate_ideals(R):
            if I.is_proper and not is_cdf(I).holds:
                failures.append(f"{I.dsl()} in {text} not cdf")
    for n in (6, 15, 21, 33, 39):
        if not classify_integer_ideal(n).cdf.holds:
            failures.append(f"{n}Z not cdf")
    elapsed = time.perf_counter() - t0
    if elapsed >= 5.0:
        failures.append(f"runtime {elapsed:.2f}s >= 5s")
    report(failures)


def test_criterion_3_audit_baseline():
    failures = []
    t0 = time.perf_counter()
    reports, _ = run_all(default_inventory(), jobs=4)
    elapsed = time.perf_counter() - t0
    again, _ = run_all(default_inventory(), jobs=4)
    as_json = [json.dumps(r.to_dict(), sort_keys=True) for r in reports]
    if as_json != [json.dumps(r.to_dict(), sort_keys=True) for r in again]:
        failures.append("two runs differ")
    by_tag = {r.claim: r for r in reports}
    for tag in MUST_CONFIRM:
        r = by_tag[tag]
        if r.status is not Status.CONFIRMED or r.nonvacuous_instances < 1:
            failures.append(f"{tag}: {r.status.value}, {r.nonvacuous_instances} non-vacuous")
    for tag in MUST_BE_DETERMINISTIC:
        if tag not in by_tag:
            failures.append(f"{tag}: missing")
    for r in reports:
        if r.status is Status.COUNTEREXAMPLE and not recheck_witness(r.witness):
            failures.append(f"{r.claim}: witness fails the definition-level recheck")
    linsys = by_tag["THM_LINSYS"].details["readings"]
    if set(linsys) != {"any-solution", "nonzero-solution"}:
        failures.append("THM_LINSYS readings missing")
    for reading, summary in linsys.items():
        if summary["witness"] and not recheck_witness(summary["witness"]):
            failures.append(f"THM_LINSYS {reading}: witness fails recheck")
    if elapsed >= 60.0:
        failures.append(f"runtime {elapsed:.2f}s >= 60s")
    report(failures)


def test_criterion_4_oracle_equivalence():
    failures = []
    rings = [R for R in default_inventory() if R.order <= 81]
    for R in rings:
        for I in enumerate_ideals(R):
            if not I.is_proper:
                continue
            holds, _ = naive_cdf(R, I.indices)
            if is_cdf(I).holds != holds:
                failures.append(f"cdf disagrees on {I.dsl()} in {R.name}")
            if is_prime(I).holds != quotient_has_no_zero_divisors(R, I.indices):
                failures.append(f"prime disagrees on {I.dsl()} in {R.name}")
    report(failures)


def test_criterion_5_integer_search_regression():
    failures = []
    t0 = time.perf_counter()
    code, out = cli("search", "2", "200", "cdf")
    elapsed = time.perf_counter() - t0
    got = json.loads(out)["results"]
    frozen = json.loads((FIXTURES / "search_cdf_2_200.json").read_text())
    if json.dumps(got) != json.dumps(frozen):
        failures.append("result list differs from the frozen oracle fixture")
    primes = [p for p in range(2, 201) if prime_number(p)]
    missing = [p for p in primes if p not in got]
    missing += [3 * p for p in primes if p != 3 and 3 * p <= 200 and 3 * p not in got]
    if 12 not in got:
        missing.append(12)
    if missing:
        failures.append(f"missing {missing}")
    present = [n for n in (8, 9, 16, 25, 27, 35, 49) if n in got]
    if present:
        failures.append(f"should be excluded but are cdf: {present}")
    if elapsed >= 10.0:
        failures.append(f"runtime {elapsed:.2f}s >= 10s")
    report(failures)


def _criteria_outputs(jobs):
    outs = []
    for ring, ideal, a, b in WITNESS_CASES:
        outs.append(cli("witness", ring, ideal, a, b, "--jobs", jobs)[1])
    for text in ["Z8", "Z12", *POSITIVE_RINGS]:
        outs.append(cli("classify", text, "--jobs", jobs)[1])
    outs.append(cli("audit", "all", "--jobs", jobs)[1])
    for R in default_inventory():
        if R.order <= 81:
            outs.append(cli("classify", R.name, "--jobs", jobs)[1])
    outs.append(cli("search", "2", "200", "cdf", "--jobs", jobs)[1])
    return outs


def test_criterion_6_determinism():
    first = _criteria_outputs("1")
    second = _criteria_outputs("1")
    parallel = _criteria_outputs("4")
    failures = []
    if first != second:
        failures.append("two consecutive runs differ")
    if first != parallel:
        failures.append("--jobs 1 and --jobs 4 differ")
    if not all(first):
        failures.append("a command produced no JSON")
    report(failures)
