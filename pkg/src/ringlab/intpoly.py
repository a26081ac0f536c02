"""Ideals nZ of the integers, and principal ideals of Z_p[X].

Every condition the predicates test on nZ is a congruence modulo n, so
quantifying over all integers is the same as quantifying over residues.
Each claim about nZ is therefore decided on the zero ideal of Z_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidModulus, InvalidOrder, NotPrime
from .ideals import zero_ideal
from .polys import is_prime, poly_divmod, trim
from .predicates import Mode, Verdict, cube_condition, is_cdf, is_prime as prime_verdict, is_sdf, is_star_prime
from .rings import make_zn

PREDICATE_NAMES = ("cdf", "sdf", "prime", "star_prime", "cube_condition")


def to_residue(k: int, n: int) -> int:
    return k % n


@dataclass(frozen=True)
class IntegerIdealReport:
    n: int
    cdf: Verdict
    sdf: Verdict
    prime: Verdict
    star_prime: Verdict
    cube_condition: Verdict
    notes: tuple[str, ...] = field(default=())

    def verdict(self, name: str) -> Verdict:
        return getattr(self, name)

    def witnesses(self) -> dict[str, tuple[int, ...] | None]:
        """Witnesses as residues in 0..n-1."""
        return {name: self.verdict(name).witness for name in PREDICATE_NAMES}


def classify_integer_ideal(n: int, mode: Mode | None = None, representatives=(), jobs: int = 1) -> IntegerIdealReport:
    """Decide every predicate for nZ via the zero ideal of Z_n.

    ``representatives`` are integer witnesses as written by hand (possibly
    negative); each is recorded in ``notes`` with its residue.
    """
    if n < 2:
        raise InvalidOrder(f"nZ needs n >= 2, got {n}")
    I = zero_ideal(make_zn(n))
    pair_mode = {} if mode is None else {"mode": mode}
    notes = tuple(f"{k} = {to_residue(k, n)} (mod {n})" for k in representatives if k != to_residue(k, n))
    return IntegerIdealReport(
        n,
        is_cdf(I, jobs=jobs, **pair_mode),
        is_sdf(I, jobs=jobs, **pair_mode),
        prime_verdict(I, jobs=jobs, **pair_mode),
        is_star_prime(I, jobs=jobs, **pair_mode),
        cube_condition(I, **pair_mode),
        notes,
    )


def search_integer_ideals(lo: int, hi: int, predicate: str = "cdf", mode: Mode | None = None, jobs: int = 1) -> list[int]:
    """All n in [lo, hi] for which nZ satisfies the predicate, ascending."""
    if not 2 <= lo <= hi:
        raise ValueError(f"invalid range [{lo}, {hi}]; need 2 <= lo <= hi")
    if predicate not in PREDICATE_NAMES:
        raise ValueError(f"unknown predicate {predicate!r}")
    from .predicates import evaluate

    return [n for n in range(lo, hi + 1) if evaluate(predicate, zero_ideal(make_zn(n)), mode, jobs).holds]


def poly_principal_witness(p: int, f, g) -> bool:
    """Membership of g in the principal ideal (f) of Z_p[X].

    Polynomials are little-endian coefficient lists.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not trim(f, p):
        raise InvalidModulus("f must be nonzero")
    return not poly_divmod(g, f, p)[1]
