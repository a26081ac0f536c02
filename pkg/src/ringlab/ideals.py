"""Ideals of finite rings: generation, enumeration and transport along homs."""

from __future__ import annotations

import os

import numpy as np

from .errors import NotAnIdeal, NotSurjective, RingMismatch, TooLarge
from .rings import FiniteRing, RingHom, product_decode

DEFAULT_CUTOFF = 512


def enumeration_cutoff() -> int:
    """The enumeration cutoff, overridable through ``RINGLAB_CUTOFF``."""
    raw = os.environ.get("RINGLAB_CUTOFF")
    return int(raw) if raw else DEFAULT_CUTOFF


class Ideal:
    """An ideal stored as a boolean membership table over element indices.

    Equality is membership equality within the same ring object;
    ``generators`` is provenance only.
    """

    def __init__(self, ring: FiniteRing, members, generators=None, check: bool = True):
        mask = np.zeros(ring.order, dtype=bool)
        members = np.asarray(members)
        if members.dtype == bool:
            if members.shape != (ring.order,):
                raise NotAnIdeal("membership table has the wrong length")
            mask[:] = members
        else:
            mask[members.astype(np.int64)] = True
        mask.setflags(write=False)
        self.ring = ring
        self.members = mask
        self.generators = tuple(int(g) for g in generators) if generators is not None else None
        if check:
            self._validate()

    def _validate(self):
        R, m = self.ring, self.members
        if not m[R.zero]:
            raise NotAnIdeal("an ideal must contain zero")
        idx = self.indices
        if not m[R.add(idx[:, None], idx[None, :])].all():
            raise NotAnIdeal("not closed under addition")
        if not m[R.neg[idx]].all():
            raise NotAnIdeal("not closed under negation")
        if not m[R.mul(R.elements[:, None], idx[None, :])].all():
            raise NotAnIdeal("not closed under ring multiples")

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    @property
    def size(self) -> int:
        return int(self.members.sum())

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_proper(self) -> bool:
        return not self.members[self.ring.one]

    def __contains__(self, a) -> bool:
        return bool(self.members[int(a)])

    def contains(self, a):
        return self.members[a]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, Ideal) and other.ring is self.ring and np.array_equal(other.members, self.members)

    def __le__(self, other):
        _same_ring(self, other)
        return bool((~self.members | other.members).all())

    def __hash__(self):
        return hash((id(self.ring), self.members.tobytes()))

    def sort_key(self):
        return (self.size, self.members.astype(np.uint8).tobytes())

    def generating_set(self) -> list[int]:
        """Stored generators, else a greedy ascending generating set."""
        if self.generators is not None:
            return list(self.generators)
        R = self.ring
        gens: list[int] = []
        cur = np.zeros(R.order, dtype=bool)
        cur[R.zero] = True
        for a in self.indices:
            if not cur[a]:
                gens.append(int(a))
                cur = cur | _principal_mask(R, int(a))
                cur = _sum_mask(R, cur, cur)
        return gens

    def dsl(self) -> str:
        gens = [g for g in self.generating_set() if g != self.ring.zero]
        if not gens:
            return "zero"
        return "gen(" + ",".join(self.ring.labels[g] for g in gens) + ")"

    def labels(self) -> list[str]:
        return [self.ring.labels[a] for a in self.indices]

    def __repr__(self):
        return f"Ideal({self.dsl()} in {self.ring.name}, size={self.size})"


def _same_ring(I, J):
    if I.ring is not J.ring:
        raise RingMismatch("ideals live in different rings")


def _principal_mask(R, g):
    mask = np.zeros(R.order, dtype=bool)
    mask[np.asarray(R.mul(R.elements, g))] = True
    return mask


def _sum_mask(R, m1, m2):
    a, b = np.flatnonzero(m1), np.flatnonzero(m2)
    mask = np.zeros(R.order, dtype=bool)
    mask[np.asarray(R.add(a[:, None], b[None, :])).ravel()] = True
    return mask


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, [R.zero], generators=[], check=False)


def whole_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, np.ones(R.order, dtype=bool), generators=[R.one], check=False)


def principal_ideal(R: FiniteRing, g: int) -> Ideal:
    g = R.check_element(g)
    return Ideal(R, _principal_mask(R, g), generators=[g], check=False)


def ideal_from_generators(R: FiniteRing, gens) -> Ideal:
    """Smallest ideal containing ``gens``: the sum of their principal ideals."""
    gens = [R.check_element(g) for g in gens]
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        mask = _sum_mask(R, mask, _principal_mask(R, g))
    return Ideal(R, mask, generators=gens, check=False)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    gens = None
    if I.generators is not None and J.generators is not None:
        gens = list(I.generators) + [g for g in J.generators if g not in I.generators]
    return Ideal(I.ring, _sum_mask(I.ring, I.members, J.members), generators=gens, check=False)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.members & J.members, check=False)


def enumerate_ideals(R: FiniteRing, cutoff: int | None = None) -> list[Ideal]:
    """All ideals of R, sorted by (size, membership table).

    Principal ideals are collected first, then closed under pairwise sums.
    """
    limit = enumeration_cutoff() if cutoff is None else cutoff
    if R.order > limit:
        raise TooLarge(f"ring of order {R.order} exceeds the enumeration cutoff {limit}")
    found: dict[bytes, Ideal] = {}
    for g in R.elements:
        I = principal_ideal(R, int(g))
        found.setdefault(I.members.tobytes(), I)
    frontier = list(found.values())
    while frontier:
        nxt = []
        current = list(found.values())
        for I in frontier:
            for J in current:
                S = ideal_sum(I, J)
                key = S.members.tobytes()
                if key not in found:
                    found[key] = S
                    nxt.append(S)
        frontier = nxt
    return sorted(found.values(), key=Ideal.sort_key)


def proper_ideals(R: FiniteRing, cutoff: int | None = None) -> list[Ideal]:
    return [I for I in enumerate_ideals(R, cutoff) if I.is_proper]


def ideal_preimage(h: RingHom, J: Ideal) -> Ideal:
    if J.ring is not h.codomain:
        raise RingMismatch("ideal does not live in the codomain")
    return Ideal(h.domain, J.members[h.map], check=False)


def ideal_image(h: RingHom, I: Ideal) -> Ideal:
    if I.ring is not h.domain:
        raise RingMismatch("ideal does not live in the domain")
    if not h.surjective:
        raise NotSurjective("images of ideals are only ideals along surjective homs")
    mask = np.zeros(h.codomain.order, dtype=bool)
    mask[h.map[I.indices]] = True
    return Ideal(h.codomain, mask, check=False)


def kernel(h: RingHom) -> Ideal:
    return Ideal(h.domain, h.kernel_mask, check=False)


def radical(I: Ideal) -> Ideal:
    """{a : a^k in I for some 1 <= k <= order}."""
    R = I.ring
    mask = I.members.copy()
    power = R.elements
    for _ in range(R.order):
        power = np.asarray(R.mul(power, R.elements))
        mask |= I.members[power]
    return Ideal(R, mask, check=False)


# ideals of constructed rings ------------------------------------------------


def product_ideal(P: FiniteRing, ideals) -> Ideal:
    """I_1 x ... x I_k inside a ring built by make_product."""
    factors = P.parts["factors"]
    if len(ideals) != len(factors):
        raise RingMismatch("one ideal per factor is required")
    comps = product_decode([f.order for f in factors], P.elements)
    mask = np.ones(P.order, dtype=bool)
    for I, F, c in zip(ideals, factors, comps):
        if I.ring is not F:
            raise RingMismatch("ideal does not live in the matching factor")
        mask &= I.members[c]
    return Ideal(P, mask, check=False)


def idealization_ideal(RM: FiniteRing, I: Ideal, N: Ideal) -> Ideal:
    """I(+)N inside R(+)M; raises NotAnIdeal unless IM is contained in N."""
    R, M = RM.parts["base"], RM.parts["module"]
    if I.ring is not R or N.ring is not M:
        raise RingMismatch("I must live in R and N in M = R/J")
    m = M.order
    idx = RM.elements
    mask = I.members[idx // m] & N.members[idx % m]
    return Ideal(RM, mask)


def amalgamation_ideal(AB: FiniteRing, I: Ideal) -> Ideal:
    """I ⋈_J B = {(i, f(i) + j) : i in I, j in J}."""
    f = AB.parts["hom"]
    if I.ring is not f.domain:
        raise RingMismatch("I must live in the domain of the amalgamation hom")
    return Ideal(AB, I.members[AB.parts["first"]], check=False)
