"""Exhaustive decision procedures for ideal predicates.

Every predicate scans its quantifier range in lexicographic index order and
reports the first failing pair (or element) as the witness.  With
``jobs > 1`` row blocks are scanned concurrently; the reported witness is
still the global lexicographic minimum.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NotProper
from .ideals import Ideal
from .rings import FiniteRing, is_unit

BLOCK = 2**16


class Mode(str, enum.Enum):
    ALL_PAIRS = "all-pairs"
    NONZERO_PAIRS = "nonzero-pairs"


@dataclass(frozen=True)
class Verdict:
    predicate: str
    holds: bool
    witness: tuple[int, ...] | None
    pairs_scanned: int
    mode: Mode

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a verdict fails exactly when it carries a witness")

    def witness_labels(self, ring: FiniteRing):
        if self.witness is None:
            return None
        return [ring.labels[a] for a in self.witness]


def _require_proper(I: Ideal) -> FiniteRing:
    if not I.is_proper:
        raise NotProper("predicates are defined for proper ideals only")
    return I.ring


def _scan_pairs(name, R, fails: Callable, mode: Mode, jobs: int) -> Verdict:
    """First (a, b) in lexicographic order with ``fails(a, b)`` true."""
    valid = R.elements != R.zero if mode is Mode.NONZERO_PAIRS else np.ones(R.order, dtype=bool)
    rows = np.flatnonzero(valid)
    cols = rows
    step = max(1, BLOCK // max(1, cols.size))
    blocks = [rows[lo : lo + step] for lo in range(0, rows.size, step)]

    def first_in(block):
        bad = np.asarray(fails(block[:, None], cols[None, :]))
        bad = np.broadcast_to(bad, (block.size, cols.size))
        flat = np.flatnonzero(bad.ravel())
        if flat.size == 0:
            return None
        r, c = divmod(int(flat[0]), cols.size)
        return int(block[r]), int(cols[c])

    witness = None
    if jobs <= 1 or len(blocks) == 1:
        for block in blocks:
            witness = first_in(block)
            if witness is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            found = [w for w in pool.map(first_in, blocks) if w is not None]
        witness = min(found) if found else None
    total = rows.size * cols.size
    if witness is None:
        return Verdict(name, True, None, total, mode)
    a, b = witness
    before_rows = int(np.searchsorted(rows, a))
    scanned = before_rows * cols.size + int(np.searchsorted(cols, b)) + 1
    return Verdict(name, False, witness, scanned, mode)


def _scan_elements(name, R, fails: Callable, mode: Mode) -> Verdict:
    xs = R.elements[R.elements != R.zero] if mode is Mode.NONZERO_PAIRS else R.elements
    bad = np.flatnonzero(np.asarray(fails(xs)))
    if bad.size == 0:
        return Verdict(name, True, None, int(xs.size), mode)
    return Verdict(name, False, (int(xs[bad[0]]),), int(bad[0]) + 1, mode)


def cdf_factor(R: FiniteRing, a, b):
    """a^2 + ab + b^2."""
    return R.add(R.add(R.squares[a], R.mul(a, b)), R.squares[b])


def is_cdf(I: Ideal, mode: Mode = Mode.ALL_PAIRS, jobs: int = 1) -> Verdict:
    """a^3 - b^3 in I implies a - b in I or a^2 + ab + b^2 in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        return m[R.sub(R.cubes[a], R.cubes[b])] & ~m[R.sub(a, b)] & ~m[cdf_factor(R, a, b)]

    return _scan_pairs("cdf", R, fails, mode, jobs)


def is_cdf_sumform(I: Ideal, mode: Mode = Mode.ALL_PAIRS, jobs: int = 1) -> Verdict:
    """a^3 + b^3 in I implies a + b in I or a^2 - ab + b^2 in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        alt = R.add(R.sub(R.squares[a], R.mul(a, b)), R.squares[b])
        return m[R.add(R.cubes[a], R.cubes[b])] & ~m[R.add(a, b)] & ~m[alt]

    return _scan_pairs("cdf_sumform", R, fails, mode, jobs)


def is_cdf_strong(I: Ideal, mode: Mode = Mode.ALL_PAIRS, jobs: int = 1) -> Verdict:
    """a^3 - b^3 in I implies both (a - b)^2 in I and a^2 + ab + b^2 in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        d = R.sub(a, b)
        return m[R.sub(R.cubes[a], R.cubes[b])] & ~(m[R.squares[d]] & m[cdf_factor(R, a, b)])

    return _scan_pairs("cdf_strong", R, fails, mode, jobs)


def is_cdf_squared(I: Ideal, mode: Mode = Mode.NONZERO_PAIRS, jobs: int = 1) -> Verdict:
    """a^3 - b^3 in I implies a^2 + ab + b^2 in I or (a - b)^2 in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        d = R.sub(a, b)
        return m[R.sub(R.cubes[a], R.cubes[b])] & ~m[cdf_factor(R, a, b)] & ~m[R.squares[d]]

    return _scan_pairs("cdf_squared", R, fails, mode, jobs)


def is_prime(I: Ideal, mode: Mode = Mode.ALL_PAIRS, jobs: int = 1) -> Verdict:
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        return m[R.mul(a, b)] & ~m[a] & ~m[b]

    return _scan_pairs("prime", R, fails, mode, jobs)


def is_sdf(I: Ideal, mode: Mode = Mode.NONZERO_PAIRS, jobs: int = 1) -> Verdict:
    """For nonzero a, b: a^2 - b^2 in I implies a + b in I or a - b in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        return m[R.sub(R.squares[a], R.squares[b])] & ~m[R.add(a, b)] & ~m[R.sub(a, b)]

    return _scan_pairs("sdf", R, fails, mode, jobs)


def is_star_prime(I: Ideal, mode: Mode = Mode.ALL_PAIRS, jobs: int = 1) -> Verdict:
    """b(a^2 + ab + b^2) in I implies b in I or a^2 + ab + b^2 in I."""
    R = _require_proper(I)
    m = I.members

    def fails(a, b):
        q = cdf_factor(R, a, b)
        return m[R.mul(b, q)] & ~m[b] & ~m[q]

    return _scan_pairs("star_prime", R, fails, mode, jobs)


def is_semi_absorbing(I: Ideal, n: int, mode: Mode = Mode.ALL_PAIRS) -> Verdict:
    """x^(n+1) in I implies x^n in I."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    R = _require_proper(I)
    m = I.members

    def fails(x):
        return m[R.power(x, n + 1)] & ~m[R.power(x, n)]

    return _scan_elements(f"semi_absorbing_{n}", R, fails, mode)


def cube_condition(I: Ideal, mode: Mode = Mode.ALL_PAIRS) -> Verdict:
    """a^3 in I implies a^2 in I or a in I."""
    R = _require_proper(I)
    m = I.members

    def fails(x):
        return m[R.cubes[x]] & ~m[R.squares[x]] & ~m[x]

    return _scan_elements("cube_condition", R, fails, mode)


def quotient_char(I: Ideal) -> int:
    """Smallest k >= 1 with k*1 in I, i.e. char(R/I)."""
    R = _require_proper(I)
    x, k = R.one, 1
    while not I.members[x]:
        x = R.add(x, R.one)
        k += 1
    return k


@dataclass(frozen=True)
class ThreeStatus:
    three_in_ideal: bool
    three_is_unit: bool


def three_status(I: Ideal) -> ThreeStatus:
    R = I.ring
    three = R.from_int(3)
    return ThreeStatus(bool(I.members[three]), is_unit(R, three))


@dataclass(frozen=True)
class CdfPairCheck:
    cube_difference_in_ideal: bool
    difference_in_ideal: bool
    factor_in_ideal: bool

    @property
    def is_counterexample(self) -> bool:
        return self.cube_difference_in_ideal and not (self.difference_in_ideal or self.factor_in_ideal)


def check_cdf_pair(I: Ideal, a: int, b: int) -> CdfPairCheck:
    R = I.ring
    a, b = R.check_element(a), R.check_element(b)
    return CdfPairCheck(
        bool(I.members[R.sub(R.cubes[a], R.cubes[b])]),
        bool(I.members[R.sub(a, b)]),
        bool(I.members[cdf_factor(R, a, b)]),
    )


PREDICATES = {
    "cdf": is_cdf,
    "cdf_sumform": is_cdf_sumform,
    "cdf_strong": is_cdf_strong,
    "cdf_squared": is_cdf_squared,
    "prime": is_prime,
    "sdf": is_sdf,
    "star_prime": is_star_prime,
    "cube_condition": cube_condition,
    "semi_absorbing_2": lambda I, mode=Mode.ALL_PAIRS, jobs=1: is_semi_absorbing(I, 2, mode),
}

PAIR_PREDICATES = ("cdf", "cdf_sumform", "cdf_strong", "cdf_squared", "prime", "sdf", "star_prime")


def evaluate(name: str, I: Ideal, mode: Mode | None = None, jobs: int = 1) -> Verdict:
    """Run a predicate by name; ``mode=None`` picks the predicate's default."""
    fn = PREDICATES[name]
    if name in PAIR_PREDICATES:
        return fn(I, mode, jobs=jobs) if mode is not None else fn(I, jobs=jobs)
    return fn(I, mode) if mode is not None else fn(I)
