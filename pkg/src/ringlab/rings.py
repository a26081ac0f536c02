"""Finite commutative rings with identity, and homomorphisms between them.

Elements are addressed by canonical integer indices ``0 .. order-1``.  Every
constructor documents its encoding:

* ``make_zn``: index ``i`` is the residue ``i``.
* ``make_product``: mixed radix, leftmost factor most significant.
* ``make_poly_quotient``: little-endian coefficient vector, index
  ``sum(c_i * p**i)``.
* ``make_quotient`` / ``make_localization``: cosets ordered by their minimal
  representative index.
* ``make_idealization``: index ``r * |M| + m``.
* ``make_amalgamation``: pairs ``(a, f(a) + j)`` in lexicographic ``(a, j)``
  order, with ``j`` running over the ideal's members ascending.

Arithmetic methods accept Python ints or numpy integer arrays (broadcasting).
Rings of order at most ``TABLE_LIMIT`` keep materialized operation tables;
larger rings compute through the constructor's vectorized rule.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .errors import (
    CollapsesToZero,
    InvalidArity,
    InvalidModulus,
    InvalidOrder,
    NotAHom,
    NotPrime,
    NotProper,
    RingMismatch,
    ZeroModule,
)
from .polys import is_prime, render_poly, trim

TABLE_LIMIT = 256

CONSTRUCTIONS = (
    "Zn",
    "Product",
    "PolyQuotient",
    "Quotient",
    "Idealization",
    "Amalgamation",
    "Localization",
    "Relabeled",
)

BinOp = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _scalar(x):
    if np.ndim(x) == 0:
        return int(x)
    return x


def _readonly(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite commutative ring with identity on indices ``0..order-1``.

    Instances are immutable once built.  ``name`` is DSL text that
    elaborates back to an equal ring whenever the ring was built through a
    DSL-expressible constructor.
    """

    def __init__(
        self,
        order: int,
        add: BinOp,
        mul: BinOp,
        zero: int,
        one: int,
        labels: Sequence[str],
        construction: str,
        name: str = "",
        parts: dict | None = None,
    ):
        if order < 2:
            raise InvalidOrder(f"a ring with 1 != 0 needs at least 2 elements, got {order}")
        if construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction tag {construction!r}")
        if zero == one:
            raise InvalidOrder("one must differ from zero")
        self.order = int(order)
        self.zero = int(zero)
        self.one = int(one)
        self.construction = construction
        self.name = name
        self.parts = dict(parts or {})
        self.labels = tuple(labels)
        if len(self.labels) != order or len(set(self.labels)) != order:
            raise ValueError("labels must be unique, one per element")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._add_fn = add
        self._mul_fn = mul
        self._add_table = self._mul_table = None
        if order <= TABLE_LIMIT:
            idx = np.arange(order, dtype=np.int64)
            self._add_table = _readonly(add(idx[:, None], idx[None, :]))
            self._mul_table = _readonly(mul(idx[:, None], idx[None, :]))
        self.neg = _readonly(self._compute_neg())

    def _compute_neg(self):
        idx = np.arange(self.order, dtype=np.int64)
        neg = np.empty(self.order, dtype=np.int64)
        step = max(1, 2**18 // self.order)
        for lo in range(0, self.order, step):
            rows = idx[lo : lo + step]
            hit = self.add(rows[:, None], idx[None, :]) == self.zero
            if not hit.any(axis=1).all():
                raise ValueError("addition has no inverses")
            neg[lo : lo + step] = hit.argmax(axis=1)
        return neg

    # arithmetic ---------------------------------------------------------

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @property
    def materialized(self) -> bool:
        return self._add_table is not None

    def add(self, a, b):
        if self._add_table is not None:
            return _scalar(self._add_table[a, b])
        return _scalar(self._add_fn(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)))

    def mul(self, a, b):
        if self._mul_table is not None:
            return _scalar(self._mul_table[a, b])
        return _scalar(self._mul_fn(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)))

    def negate(self, a):
        return _scalar(self.neg[a])

    def sub(self, a, b):
        return self.add(a, self.neg[b])

    def power(self, a, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = np.full(np.shape(a), self.one, dtype=np.int64)
        base = np.asarray(a, dtype=np.int64)
        while k:
            if k & 1:
                result = np.asarray(self.mul(result, base))
            base = np.asarray(self.mul(base, base))
            k >>= 1
        return _scalar(result)

    def from_int(self, k: int) -> int:
        """The element ``k * 1``."""
        acc = self.zero
        unit = self.one if k >= 0 else self.negate(self.one)
        for _ in range(abs(k)):
            acc = self.add(acc, unit)
        return acc

    @cached_property
    def squares(self) -> np.ndarray:
        return _readonly(self.mul(self.elements, self.elements))

    @cached_property
    def cubes(self) -> np.ndarray:
        return _readonly(self.mul(self.squares, self.elements))

    # labels -------------------------------------------------------------

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        return self._index[label]

    def check_element(self, a) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range for ring of order {self.order}")
        return a

    def __repr__(self):
        return f"FiniteRing({self.name or self.construction!s}, order={self.order})"


# Z_n ---------------------------------------------------------------------


def make_zn(n: int) -> FiniteRing:
    if n < 2:
        raise InvalidOrder(f"Z{n}: need n >= 2")
    return FiniteRing(
        n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        0,
        1,
        [str(i) for i in range(n)],
        "Zn",
        name=f"Z{n}",
        parts={"n": n},
    )


# products ---------------------------------------------------------------


def _product_name(factors):
    names = []
    for f in factors:
        nm = f.name
        if f.construction == "Product" and not nm.startswith("bool("):
            nm = f"({nm})"
        names.append(nm)
    return " x ".join(names)


def product_decode(orders, idx):
    """Split mixed-radix indices into one component array per factor."""
    idx = np.asarray(idx, dtype=np.int64)
    comps = []
    for o in reversed(orders):
        comps.append(idx % o)
        idx = idx // o
    return comps[::-1]


def product_encode(orders, comps):
    idx = np.zeros(np.broadcast(*[np.asarray(c) for c in comps]).shape, dtype=np.int64)
    for o, c in zip(orders, comps):
        idx = idx * o + c
    return idx


def make_product(factors: Sequence[FiniteRing], name: str | None = None) -> FiniteRing:
    factors = tuple(factors)
    if not factors:
        raise InvalidArity("a product needs at least one factor")
    orders = [f.order for f in factors]

    def lift(op):
        def run(a, b):
            ca, cb = product_decode(orders, a), product_decode(orders, b)
            return product_encode(orders, [np.asarray(op(f)(x, y)) for f, x, y in zip(factors, ca, cb)])

        return run

    total = int(np.prod(orders))
    zero = int(product_encode(orders, [f.zero for f in factors]))
    one = int(product_encode(orders, [f.one for f in factors]))
    comps = product_decode(orders, np.arange(total))
    labels = [
        "(" + ",".join(f.labels[c[k]] for f, c in zip(factors, comps)) + ")" for k in range(total)
    ]
    return FiniteRing(
        total,
        lift(lambda f: f.add),
        lift(lambda f: f.mul),
        zero,
        one,
        labels,
        "Product",
        name=name or _product_name(factors),
        parts={"factors": factors},
    )


def make_boolean(k: int) -> FiniteRing:
    """The boolean ring Z2^k, named ``bool(k)``."""
    if k < 1:
        raise InvalidOrder("bool(k) needs k >= 1")
    z2 = make_zn(2)
    return make_product([z2] * k, name=f"bool({k})")


# polynomial quotients -----------------------------------------------------


def make_poly_quotient(p: int, modulus: Sequence[int]) -> FiniteRing:
    """Z_p[x]/(f) for a monic f given little-endian (constant term first)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    f = trim(modulus, p)
    d = len(f) - 1
    if d < 1:
        raise InvalidModulus("modulus must have degree >= 1")
    if f[-1] != 1:
        raise InvalidModulus("modulus must be monic")
    low = np.array(f[:d], dtype=np.int64)
    weights = p ** np.arange(d, dtype=np.int64)

    def decode(idx):
        return (np.asarray(idx, dtype=np.int64)[..., None] // weights) % p

    def encode(coeffs):
        return (coeffs % p) @ weights

    def add(a, b):
        return encode(decode(a) + decode(b))

    def mul(a, b):
        A, B = np.broadcast_arrays(decode(a), decode(b))
        prod = np.zeros(A.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                prod[..., i + j] += A[..., i] * B[..., j]
        prod %= p
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[..., k].copy()
            prod[..., k - d : k] -= c[..., None] * low
            prod[..., k] = 0
            prod %= p
        return encode(prod[..., :d])

    order = p**d
    coeffs = decode(np.arange(order))
    labels = [render_poly([int(c) for c in row]) for row in coeffs]
    return FiniteRing(
        order,
        add,
        mul,
        0,
        1,
        labels,
        "PolyQuotient",
        name=f"Z{p}[x]/({render_poly(f)})",
        parts={"p": p, "modulus": tuple(f), "degree": d},
    )


# homomorphisms -------------------------------------------------------------


class RingHom:
    """A unital ring homomorphism stored as an element map."""

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, mapping, check: bool = True, name: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.map = _readonly(np.asarray(mapping, dtype=np.int64))
        self.name = name
        if self.map.shape != (domain.order,):
            raise NotAHom("map must assign one codomain element per domain element")
        if self.map.min() < 0 or self.map.max() >= codomain.order:
            raise NotAHom("map leaves the codomain")
        if check:
            self._validate()
        self.surjective = bool(np.unique(self.map).size == codomain.order)

    def _validate(self):
        D, C, f = self.domain, self.codomain, self.map
        if f[D.zero] != C.zero or f[D.one] != C.one:
            raise NotAHom("map must send 0 to 0 and 1 to 1")
        idx = D.elements
        step = max(1, 2**18 // D.order)
        for lo in range(0, D.order, step):
            a = idx[lo : lo + step, None]
            b = idx[None, :]
            if not np.array_equal(f[D.add(a, b)], C.add(f[a], f[b])):
                raise NotAHom("map is not additive")
            if not np.array_equal(f[D.mul(a, b)], C.mul(f[a], f[b])):
                raise NotAHom("map is not multiplicative")

    def __call__(self, a):
        return _scalar(self.map[a])

    @property
    def kernel_mask(self) -> np.ndarray:
        return self.map == self.codomain.zero

    def __repr__(self):
        return f"RingHom({self.domain.name} -> {self.codomain.name})"


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, R.elements, check=False, name=f"id[{R.name}]")


def product_projection(P: FiniteRing, i: int) -> RingHom:
    if P.construction != "Product":
        raise InvalidArity("product_projection needs a ring built by make_product")
    factors = P.parts["factors"]
    if not 0 <= i < len(factors):
        raise IndexError(f"factor index {i} out of range for arity {len(factors)}")
    comps = product_decode([f.order for f in factors], P.elements)
    return RingHom(P, factors[i], comps[i], check=False, name=f"proj{i}[{P.name}]")


# quotients and constructions over ideals ----------------------------------


def _ideal_mask(R, I):
    if I.ring is not R:
        raise RingMismatch("ideal belongs to a different ring")
    return I.members


def _coset_data(R, mask):
    """Per-element minimal coset representative, and the sorted representatives."""
    members = np.flatnonzero(mask)
    reps_of = np.empty(R.order, dtype=np.int64)
    step = max(1, 2**18 // max(1, members.size))
    idx = R.elements
    for lo in range(0, R.order, step):
        rows = idx[lo : lo + step]
        reps_of[lo : lo + step] = np.asarray(R.add(rows[:, None], members[None, :])).min(axis=1)
    reps = np.unique(reps_of)
    proj = np.searchsorted(reps, reps_of)
    return reps, proj


def _quotient(R, I, construction, name, extra=None):
    mask = _ideal_mask(R, I)
    if mask.all():
        raise NotProper("cannot take the quotient by the whole ring")
    reps, proj = _coset_data(R, mask)

    def add(a, b):
        return proj[R.add(reps[a], reps[b])]

    def mul(a, b):
        return proj[R.mul(reps[a], reps[b])]

    parts = {"parent": R, "ideal": I, "representatives": _readonly(reps), "projection": _readonly(proj)}
    parts.update(extra or {})
    Q = FiniteRing(
        len(reps),
        add,
        mul,
        int(proj[R.zero]),
        int(proj[R.one]),
        [R.labels[r] for r in reps],
        construction,
        name=name,
        parts=parts,
    )
    return Q, RingHom(R, Q, proj, check=False, name=f"proj[{name}]")


def make_quotient(R: FiniteRing, I) -> tuple[FiniteRing, RingHom]:
    """R/I with the canonical projection."""
    return _quotient(R, I, "Quotient", f"quot({R.name}; {I.dsl()})")


def make_idealization(R: FiniteRing, J) -> FiniteRing:
    """R(+)M with M = R/J and (r, m)(s, n) = (rs, rn + sm)."""
    mask = _ideal_mask(R, J)
    if mask.all():
        raise ZeroModule("M = R/J is zero when J is the whole ring")
    M, pi = make_quotient(R, J)
    m = M.order
    proj = pi.map

    def split(idx):
        idx = np.asarray(idx, dtype=np.int64)
        return idx // m, idx % m

    def add(a, b):
        (r, u), (s, v) = split(a), split(b)
        return np.asarray(R.add(r, s)) * m + M.add(u, v)

    def mul(a, b):
        (r, u), (s, v) = split(a), split(b)
        mod = M.add(M.mul(proj[r], v), M.mul(proj[s], u))
        return np.asarray(R.mul(r, s)) * m + mod

    labels = [f"({R.labels[k // m]},{M.labels[k % m]})" for k in range(R.order * m)]
    return FiniteRing(
        R.order * m,
        add,
        mul,
        R.zero * m + M.zero,
        R.one * m + M.zero,
        labels,
        "Idealization",
        name=f"idealize({R.name}; {J.dsl()})",
        parts={"base": R, "ideal": J, "module": M, "module_projection": pi},
    )


def make_amalgamation(f: RingHom, J) -> FiniteRing:
    """A ⋈_J B = {(a, f(a) + j)} as a subring of A x B."""
    if not isinstance(f, RingHom):
        raise NotAHom("amalgamation needs a RingHom")
    A, B = f.domain, f.codomain
    jmask = _ideal_mask(B, J)
    js = np.flatnonzero(jmask)
    a_part = np.repeat(A.elements, js.size)
    b_part = np.asarray(B.add(f.map[a_part], np.tile(js, A.order)))
    lookup = np.full(A.order * B.order, -1, dtype=np.int64)
    lookup[a_part * B.order + b_part] = np.arange(a_part.size)
    if (lookup >= 0).sum() != a_part.size:
        raise NotAHom("amalgamation pairs collide")

    def op(opa, opb):
        def run(x, y):
            x = np.asarray(x, dtype=np.int64)
            y = np.asarray(y, dtype=np.int64)
            code = np.asarray(opa(a_part[x], a_part[y])) * B.order + opb(b_part[x], b_part[y])
            out = lookup[code]
            if (out < 0).any():
                raise ValueError("amalgamation is not closed; is J an ideal?")
            return out

        return run

    same = A is B and np.array_equal(f.map, A.elements)
    name = f"amalg({A.name}; {J.dsl()})" if same else f"amalg[{A.name} -> {B.name}]({J.dsl()})"
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in zip(a_part, b_part)]
    return FiniteRing(
        a_part.size,
        op(A.add, B.add),
        op(A.mul, B.mul),
        int(lookup[A.zero * B.order + B.zero]),
        int(lookup[A.one * B.order + B.one]),
        labels,
        "Amalgamation",
        name=name,
        parts={"hom": f, "ideal": J, "first": _readonly(a_part), "second": _readonly(b_part), "lookup": _readonly(lookup)},
    )


def multiplicative_closure(R: FiniteRing, S) -> list[int]:
    """All finite products of elements of S, including the empty product 1."""
    closed = {R.one}
    frontier = [R.one]
    gens = [R.check_element(s) for s in S]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = R.mul(x, s)
                if y not in closed:
                    closed.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(closed)


def make_localization(R: FiniteRing, S) -> tuple[FiniteRing, RingHom]:
    """S^{-1}R realized as R/K, K = {r : sr = 0 for some s in closure(S)}."""
    from .ideals import Ideal

    S = [R.check_element(s) for s in S]
    if not S:
        raise ValueError("S must be nonempty")
    closure = multiplicative_closure(R, S)
    if R.zero in closure:
        raise CollapsesToZero("0 lies in the multiplicative closure of S")
    cl = np.array(closure, dtype=np.int64)
    kmask = (np.asarray(R.mul(cl[:, None], R.elements[None, :])) == R.zero).any(axis=0)
    K = Ideal(R, kmask)
    name = f"loc({R.name}; {','.join(R.labels[s] for s in S)})"
    return _quotient(R, K, "Localization", name, {"multiplicative_set": tuple(closure), "generators": tuple(S)})


def relabel(R: FiniteRing, perm) -> FiniteRing:
    """An isomorphic copy in which element ``a`` of R gets index ``perm[a]``."""
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(R.order)):
        raise ValueError("perm must be a permutation of the element indices")
    inv = np.argsort(perm)

    def add(a, b):
        return perm[R.add(inv[a], inv[b])]

    def mul(a, b):
        return perm[R.mul(inv[a], inv[b])]

    labels = [R.labels[inv[k]] for k in range(R.order)]
    return FiniteRing(
        R.order,
        add,
        mul,
        int(perm[R.zero]),
        int(perm[R.one]),
        labels,
        "Relabeled",
        name=R.name,
        parts={"source": R, "perm": _readonly(perm)},
    )


# interrogation --------------------------------------------------------------


def ring_char(R: FiniteRing) -> int:
    x, k = R.one, 1
    while x != R.zero:
        x = R.add(x, R.one)
        k += 1
    return k


def units(R: FiniteRing) -> list[int]:
    tab = np.asarray(R.mul(R.elements[:, None], R.elements[None, :]))
    return np.flatnonzero((tab == R.one).any(axis=1)).tolist()


def is_unit(R: FiniteRing, a: int) -> bool:
    return bool((np.asarray(R.mul(a, R.elements)) == R.one).any())


def is_field(R: FiniteRing) -> bool:
    return len(units(R)) == R.order - 1


def is_von_neumann_regular(R: FiniteRing) -> bool:
    """True iff every a has some x with a = a^2 x."""
    tab = np.asarray(R.mul(R.squares[:, None], R.elements[None, :]))
    return bool((tab == R.elements[:, None]).any(axis=1).all())


def cube_roots(R: FiniteRing, y: int) -> list[int]:
    return np.flatnonzero(R.cubes == y).tolist()


def zero_divisor_free(R: FiniteRing) -> bool:
    tab = np.asarray(R.mul(R.elements[:, None], R.elements[None, :]))
    nz = R.elements != R.zero
    return not (tab[np.ix_(nz, nz)] == R.zero).any()


def axiom_violations(R: FiniteRing, exhaustive_limit: int = 512, samples: int = 100_000, seed: int = 0) -> list[str]:
    """Check the commutative-ring axioms; exhaustive up to the limit, sampled above."""
    problems = []
    idx = R.elements
    a, b = idx[:, None], idx[None, :]
    if not np.array_equal(R.add(a, b), R.add(b, a)):
        problems.append("addition not commutative")
    if not np.array_equal(R.mul(a, b), R.mul(b, a)):
        problems.append("multiplication not commutative")
    if not np.array_equal(R.add(idx, R.zero), idx):
        problems.append("zero is not additive identity")
    if not np.array_equal(R.mul(idx, R.one), idx):
        problems.append("one is not multiplicative identity")
    if not (np.asarray(R.add(idx, R.neg)) == R.zero).all():
        problems.append("negation is not an additive inverse")
    if R.order <= exhaustive_limit:
        for x in idx:
            y, z = idx[:, None], idx[None, :]
            if not np.array_equal(R.add(R.add(x, y), z), R.add(x, R.add(y, z))):
                problems.append(f"addition not associative at x={x}")
                break
            if not np.array_equal(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z))):
                problems.append(f"multiplication not associative at x={x}")
                break
            if not np.array_equal(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z))):
                problems.append(f"distributivity fails at x={x}")
                break
    else:
        rng = np.random.default_rng(seed)
        x, y, z = (rng.integers(0, R.order, samples) for _ in range(3))
        if not np.array_equal(R.add(R.add(x, y), z), R.add(x, R.add(y, z))):
            problems.append("addition not associative (sampled)")
        if not np.array_equal(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z))):
            problems.append("multiplication not associative (sampled)")
        if not np.array_equal(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z))):
            problems.append("distributivity fails (sampled)")
    return problems
