"""Definition-level recheck of audit witnesses.

This checker shares no code with the vectorized scanner: rings and ideals are
rebuilt from the DSL text stored in the witness, and every definition is
evaluated with scalar ring operations in plain loops.
"""

from __future__ import annotations

from ..dsl import parse_element, parse_ideal, ring_from_text


def _ops(R):
    add, mul = R.add, R.mul

    def sub(a, b):
        return add(a, R.negate(b))

    def sq(a):
        return mul(a, a)

    def cube(a):
        return mul(mul(a, a), a)

    def factor(a, b):
        return add(add(sq(a), mul(a, b)), sq(b))

    return add, sub, mul, sq, cube, factor


def _pair_ok(pred, R, inside, a, b):
    """True when the pair (a, b) satisfies the predicate's implication."""
    add, sub, mul, sq, cube, factor = _ops(R)
    if pred == "cdf":
        return not inside(sub(cube(a), cube(b))) or inside(sub(a, b)) or inside(factor(a, b))
    if pred == "cdf_sumform":
        alt = add(sub(sq(a), mul(a, b)), sq(b))
        return not inside(add(cube(a), cube(b))) or inside(add(a, b)) or inside(alt)
    if pred == "cdf_strong":
        return not inside(sub(cube(a), cube(b))) or (inside(sq(sub(a, b))) and inside(factor(a, b)))
    if pred == "cdf_squared":
        return not inside(sub(cube(a), cube(b))) or inside(factor(a, b)) or inside(sq(sub(a, b)))
    if pred == "prime":
        return not inside(mul(a, b)) or inside(a) or inside(b)
    if pred == "sdf":
        return not inside(sub(sq(a), sq(b))) or inside(add(a, b)) or inside(sub(a, b))
    if pred == "star_prime":
        q = factor(a, b)
        return not inside(mul(b, q)) or inside(b) or inside(q)
    raise KeyError(pred)


def _element_ok(pred, R, inside, x):
    _, _, mul, sq, cube, _ = _ops(R)
    if pred == "cube_condition":
        return not inside(cube(x)) or inside(sq(x)) or inside(x)
    if pred == "semi_absorbing_2":
        return not inside(mul(sq(x), x)) or inside(sq(x))
    raise KeyError(pred)


def _linsys_solution_ok(R, inside, a, b, x, y, nonzero):
    add, sub, mul, sq, cube, factor = _ops(R)
    if nonzero and x == R.zero and y == R.zero:
        return False
    return b == sub(y, x) and a == add(y, add(x, x))


def _linsys_violation(R, inside, a, b, x, y, nonzero):
    """(a, b, x, y) shows the linear-system condition failing."""
    _, _, mul, _, _, factor = _ops(R)
    if inside(a) or inside(b) or not inside(mul(b, factor(a, b))):
        return False
    return _linsys_solution_ok(R, inside, a, b, x, y, nonzero)


def _linsys_holds(R, inside, nonzero):
    n = R.order
    _, sub, mul, _, _, factor = _ops(R)
    for a in range(n):
        if inside(a):
            continue
        for b in range(n):
            if inside(b) or not inside(mul(b, factor(a, b))):
                continue
            for x in range(n):
                y = R.add(b, x)
                if _linsys_solution_ok(R, inside, a, b, x, y, nonzero):
                    return False
    return True


PAIR_PREDICATES = ("cdf", "cdf_sumform", "cdf_strong", "cdf_squared", "prime", "sdf", "star_prime")
ELEMENT_PREDICATES = ("cube_condition", "semi_absorbing_2")


def _poly_member(p, f, g):
    """Schoolbook long division of g by monic-able f over Z_p."""
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    g = [c % p for c in g]
    inv = pow(f[-1], p - 2, p)
    while len(g) >= len(f):
        lead = g[-1] * inv % p
        shift = len(g) - len(f)
        for i, c in enumerate(f):
            g[shift + i] = (g[shift + i] - lead * c) % p
        g.pop()
    return not any(g)


def recheck_fact(fact: dict) -> bool:
    """True when the fact's stated outcome is reproduced from the raw definition."""
    if fact["predicate"] == "poly_member":
        return _poly_member(fact["p"], fact["f"], fact["g"]) == fact["holds"]
    R = ring_from_text(fact["ring"])
    members = set(int(i) for i in parse_ideal(R, fact["ideal"]).indices)

    def inside(e):
        return e in members

    pred = fact["predicate"]
    holds = fact["holds"]
    elems = [parse_element(R, lab) for lab in (fact.get("witness") or [])]
    nonzero = fact.get("mode") == "nonzero-pairs"

    if pred.startswith("pair:"):
        a, b = elems
        return _pair_ok(pred[5:], R, inside, a, b) == holds
    if pred in PAIR_PREDICATES:
        if holds:
            rng = [e for e in range(R.order) if not (nonzero and e == R.zero)]
            return all(_pair_ok(pred, R, inside, a, b) for a in rng for b in rng)
        a, b = elems
        if nonzero and R.zero in (a, b):
            return False
        return not _pair_ok(pred, R, inside, a, b)
    if pred in ELEMENT_PREDICATES:
        if holds:
            return all(_element_ok(pred, R, inside, x) for x in range(R.order))
        return not _element_ok(pred, R, inside, elems[0])
    if pred == "member":
        return inside(elems[0]) == holds
    if pred in ("linsys_any", "linsys_nonzero"):
        nz = pred == "linsys_nonzero"
        if holds:
            return _linsys_holds(R, inside, nz)
        return _linsys_violation(R, inside, *elems, nz)
    if pred == "cube_root_clause":
        i, c = elems
        _, sub, _, _, cube, _ = _ops(R)
        ok = not (inside(i) and i != R.zero and cube(c) == R.add(i, R.one)) or inside(sub(c, R.one))
        return ok == holds
    if pred == "absorption":
        u, v = elems
        ok = not (inside(u) and not inside(v)) or inside(R.mul(u, v))
        return ok == holds
    if pred == "radical":
        def nil_mod(x):
            y = x
            for _ in range(R.order):
                if inside(y):
                    return True
                y = R.mul(y, x)
            return False

        return all(inside(x) or not nil_mod(x) for x in range(R.order)) == holds
    if pred == "quotient_char":
        x, k = R.one, 1
        while not inside(x):
            x, k = R.add(x, R.one), k + 1
        return k == fact["value"]
    raise KeyError(f"no recheck for predicate {pred!r}")


def recheck_witness(witness: dict) -> bool:
    return all(recheck_fact(f) for f in witness["facts"])
