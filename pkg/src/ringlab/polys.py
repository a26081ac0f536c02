"""Dense univariate polynomials over Z/p.

Polynomials are little-endian coefficient lists (constant term first) with
no trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def trim(f, p=None):
    out = [c % p for c in f] if p is not None else list(f)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(f) -> int:
    f = trim(f)
    return len(f) - 1 if f else -1


def poly_add(f, g, p):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def poly_sub(f, g, p):
    return poly_add(f, [-c for c in g], p)


def poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def poly_divmod(f, g, p):
    """Quotient and remainder of f by a nonzero g over Z/p."""
    f, g = trim(f, p), trim(g, p)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    rem = list(f)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g):
        shift = len(rem) - len(g)
        c = rem[-1] * inv % p
        quot[shift] = c
        for i, gc in enumerate(g):
            rem[shift + i] = (rem[shift + i] - c * gc) % p
        rem = trim(rem)
    return trim(quot, p), rem


def is_irreducible(f, p) -> bool:
    """Brute-force irreducibility: no monic factor of degree 1..deg/2 divides f."""
    f = trim(f, p)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for code in range(p ** k):
            cand = [(code // p ** i) % p for i in range(k)] + [1]
            if not poly_divmod(f, cand, p)[1]:
                return False
    return True


def render_poly(f, var="x") -> str:
    """Render descending by degree, e.g. ``[1, 0, 2] -> "2x^2+1"``."""
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("-" if c < 0 else "+") + body)
    return "".join(terms) or "0"
