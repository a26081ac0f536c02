"""Naive reference checkers, coded independently of the numpy scan engine.

Run as a script to regenerate the frozen integer-search fixture:

    python tests/oracles.py
"""

import json
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def integer_cdf_oracle(n):
    """nZ is cdf iff no residue pair violates the definition (plain ints)."""
    for a in range(n):
        for b in range(n):
            if (a**3 - b**3) % n == 0 and (a - b) % n != 0 and (a * a + a * b + b * b) % n != 0:
                return False
    return True


def integer_prime_oracle(n):
    return all((a * b) % n != 0 or a % n == 0 or b % n == 0 for a in range(n) for b in range(n))


def _member(ring, members, x):
    # linear search, deliberately not a table lookup
    for m in members:
        if m == x:
            return True
    return False


def naive_cdf(ring, members, nonzero=False):
    """Triple loop: pairs (a, b), then a search over the ideal's members."""
    members = [int(m) for m in members]
    add, mul, neg = ring.add, ring.mul, ring.negate
    for a in range(ring.order):
        for b in range(ring.order):
            if nonzero and (a == ring.zero or b == ring.zero):
                continue
            a3 = mul(mul(a, a), a)
            b3 = mul(mul(b, b), b)
            if not _member(ring, members, add(a3, neg(b3))):
                continue
            if _member(ring, members, add(a, neg(b))):
                continue
            q = add(add(mul(a, a), mul(a, b)), mul(b, b))
            if _member(ring, members, q):
                continue
            return False, (a, b)
    return True, None


def quotient_has_no_zero_divisors(ring, members):
    """Primality oracle: build R/I by cosets and look for zero divisors there."""
    members = set(int(m) for m in members)
    cosets = {}
    for r in range(ring.order):
        key = frozenset(ring.add(r, m) for m in members)
        cosets.setdefault(key, r)
    reps = list(cosets.values())
    zero_key = frozenset(members)

    def coset(x):
        return frozenset(ring.add(x, m) for m in members)

    for x in reps:
        for y in reps:
            if coset(x) != zero_key and coset(y) != zero_key and coset(ring.mul(x, y)) == zero_key:
                return False
    return True


def frozen_search_path(lo, hi, predicate):
    return FIXTURES / f"search_{predicate}_{lo}_{hi}.json"


def write_search_fixture(lo=2, hi=200):
    result = [n for n in range(lo, hi + 1) if integer_cdf_oracle(n)]
    path = frozen_search_path(lo, hi, "cdf")
    path.write_text(json.dumps(result) + "\n")
    return result


if __name__ == "__main__":
    print(write_search_fixture())
