"""Executable claims about cdf-absorbing ideals, audited over a ring inventory.

Each claim quantifies its hypothesis over instances built from the
inventory, checks the conclusion on every instance where the hypothesis
holds (a *non-vacuous* instance), and stops at the first counterexample.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..dsl import parse_element, parse_ideal, ring_from_text
from ..errors import NotAnIdeal, UnknownClaim
from ..ideals import (
    Ideal,
    amalgamation_ideal,
    enumerate_ideals,
    ideal_image,
    ideal_preimage,
    idealization_ideal,
    kernel,
    product_ideal,
    radical,
    whole_ideal,
    zero_ideal,
)
from ..intpoly import classify_integer_ideal, poly_principal_witness
from ..polys import poly_mul, render_poly
from ..predicates import (
    Mode,
    Verdict,
    cdf_factor,
    check_cdf_pair,
    evaluate,
    quotient_char,
    three_status,
)
from ..rings import (
    FiniteRing,
    RingHom,
    cube_roots,
    identity_hom,
    is_von_neumann_regular,
    make_amalgamation,
    make_idealization,
    make_localization,
    make_poly_quotient,
    make_product,
    make_quotient,
    multiplicative_closure,
    product_projection,
    ring_char,
)

# Rings at most this large seed the derived constructions (products of pairs,
# idealizations, amalgamations) so every derived ring stays small.
SMALL_ORDER = 9
IDEALIZATION_BASE_ORDER = 12
AMALGAMATION_BASE_ORDER = 16


class Status(str, enum.Enum):
    CONFIRMED = "Confirmed"
    COUNTEREXAMPLE = "CounterexampleFound"
    SKIPPED = "Skipped"


@dataclass
class AuditReport:
    claim: str
    status: Status
    instances_checked: int
    nonvacuous_instances: int
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "tag": self.claim,
            "status": self.status.value,
            "instances": self.instances_checked,
            "nonvacuous": self.nonvacuous_instances,
            "witness": self.witness,
            "notes": list(self.notes),
            "details": self.details,
        }


class Tally:
    """Counts instances and keeps the first counterexample."""

    def __init__(self):
        self.instances = 0
        self.nonvacuous = 0
        self.witness = None
        self.notes: list[str] = []

    def record(self, hypothesis: bool, conclusion: Callable[[], bool] | bool = True, witness: Callable[[], dict] | None = None):
        self.instances += 1
        if not hypothesis:
            return
        self.nonvacuous += 1
        ok = conclusion() if callable(conclusion) else conclusion
        if not ok and self.witness is None:
            self.witness = witness() if witness else {"facts": []}

    def expect(self, description: str, actual: bool, expected: bool, witness: Callable[[], dict]):
        """A concrete assertion: counts as a non-vacuous instance."""
        self.record(True, actual == expected, witness)
        if actual != expected:
            self.notes.append(f"expected {description} to be {expected}, found {actual}")

    def report(self, tag: str, details: dict | None = None) -> AuditReport:
        status = Status.COUNTEREXAMPLE if self.witness is not None else Status.CONFIRMED
        notes = list(self.notes)
        if status is Status.CONFIRMED and self.nonvacuous == 0:
            notes.append("vacuous: the hypothesis never fired on this inventory")
        return AuditReport(tag, status, self.instances, self.nonvacuous, self.witness, notes, details or {})

    def summary(self) -> dict:
        return {
            "status": (Status.COUNTEREXAMPLE if self.witness is not None else Status.CONFIRMED).value,
            "instances": self.instances,
            "nonvacuous": self.nonvacuous,
            "witness": self.witness,
        }


def poly_fact(p, f, g, holds) -> dict:
    return {"predicate": "poly_member", "p": p, "f": list(f), "g": list(g), "holds": bool(holds)}


def pair_fact(predicate: str, I: Ideal, a: int, b: int) -> dict:
    """States whether the single pair (a, b) satisfies the predicate's implication."""
    R = I.ring
    m = I.members
    if predicate == "cdf":
        ok = not check_cdf_pair(I, a, b).is_counterexample
    else:
        q = cdf_factor(R, a, b)
        ok = not m[R.mul(b, q)] or bool(m[b]) or bool(m[q])
    return fact(f"pair:{predicate}", I, holds=ok, witness=(a, b))


def fact(predicate: str, I: Ideal, verdict: Verdict | None = None, *, holds=None, witness=None, **extra) -> dict:
    R = I.ring
    if verdict is not None:
        holds = verdict.holds
        witness = verdict.witness
        extra.setdefault("mode", verdict.mode.value)
    out = {
        "ring": R.name,
        "ideal": I.dsl(),
        "predicate": predicate,
        "holds": bool(holds),
        "witness": None if witness is None else [R.labels[int(e)] for e in witness],
    }
    out.update(extra)
    return out


class AuditContext:
    """Inventory plus per-run caches of ideals and verdicts."""

    def __init__(self, inventory, jobs: int = 1):
        self.inventory = list(inventory)
        self.jobs = jobs
        self._ideals: dict[int, list[Ideal]] = {}
        self._verdicts: dict = {}
        self._keep: list = []

    def ideals(self, R: FiniteRing) -> list[Ideal]:
        if id(R) not in self._ideals:
            self._keep.append(R)
            self._ideals[id(R)] = enumerate_ideals(R)
        return self._ideals[id(R)]

    def proper(self, R):
        return [I for I in self.ideals(R) if I.is_proper]

    def nonzero_proper(self, R):
        return [I for I in self.ideals(R) if I.is_proper and not I.is_zero]

    def verdict(self, name: str, I: Ideal, mode: Mode | None = None) -> Verdict:
        key = (name, I, mode)
        if key not in self._verdicts:
            self._keep.append(I.ring)
            self._verdicts[key] = evaluate(name, I, mode, self.jobs)
        return self._verdicts[key]

    def holds(self, name, I, mode=None) -> bool:
        return self.verdict(name, I, mode).holds

    def small_rings(self, limit):
        return [R for R in self.inventory if R.order <= limit]

    def find(self, name: str) -> FiniteRing:
        for R in self.inventory:
            if R.name == name:
                return R
        return ring_from_text(name)


def _pair_facts(ctx, left, I, right, J, mode=None):
    return {"facts": [fact(left, I, ctx.verdict(left, I, mode)), fact(right, J, ctx.verdict(right, J, mode))]}


# homomorphisms drawn from the inventory ----------------------------------------


def _inclusion(sub: FiniteRing, sup: FiniteRing) -> RingHom:
    return RingHom(sub, sup, [sup.index_of(lab) for lab in sub.labels], name=f"incl[{sub.name} -> {sup.name}]")


def localizations(ctx, R):
    """One localization per distinct multiplicative closure of a single element."""
    seen = {}
    for s in R.elements:
        closure = tuple(multiplicative_closure(R, [int(s)]))
        if R.zero in closure or closure in seen:
            continue
        L, h = make_localization(R, [int(s)])
        seen[closure] = (int(s), L, h)
    return list(seen.values())


def hom_set(ctx):
    """Identities, quotient maps, product projections, localization maps and
    subring inclusions built from the inventory, in a fixed order."""
    if hasattr(ctx, "_homs"):
        return ctx._homs
    homs = []
    for R in ctx.inventory:
        homs.append(identity_hom(R))
        for J in ctx.nonzero_proper(R):
            homs.append(make_quotient(R, J)[1])
        if R.construction == "Product":
            homs.extend(product_projection(R, i) for i in range(len(R.parts["factors"])))
        for _, _, h in localizations(ctx, R):
            if not kernel(h).is_zero:
                homs.append(h)
        if R.construction == "Amalgamation":
            A = R.parts["hom"].domain
            diag = RingHom(A, R, [R.parts["lookup"][a * A.order + a] for a in A.elements], name=f"diag[{R.name}]")
            homs.append(diag)
            homs.append(_inclusion(R, make_product([A, R.parts["hom"].codomain])))
    ctx._homs = homs
    return homs


# claims ---------------------------------------------------------------------------


def audit_rem_sumform(ctx):
    t = Tally()
    for R in ctx.inventory:
        for I in ctx.proper(R):
            t.record(True, lambda: ctx.holds("cdf", I) == ctx.holds("cdf_sumform", I),
                     lambda: _pair_facts(ctx, "cdf", I, "cdf_sumform", I))
    return t.report("REM_SUMFORM")


def audit_rem_prime_implies_cdf(ctx):
    t = Tally()
    for R in ctx.inventory:
        for I in ctx.proper(R):
            t.record(ctx.holds("prime", I), lambda: ctx.holds("cdf", I), lambda: _pair_facts(ctx, "prime", I, "cdf", I))
    return t.report("REM_PRIME_IMPLIES_CDF")


def audit_prop_cube(ctx):
    t = Tally()
    for R in ctx.inventory:
        for I in ctx.proper(R):
            t.record(ctx.holds("cdf", I), lambda: ctx.holds("cube_condition", I),
                     lambda: _pair_facts(ctx, "cdf", I, "cube_condition", I))
    return t.report("PROP_CUBE")


def _integer_expectations(t, n, a, b, cdf_expected):
    """Check nZ's cdf status and that the hand witness (a, b) defeats it."""
    R = ring_from_text(f"Z{n}")
    I = zero_ideal(R)
    rep = classify_integer_ideal(n, representatives=() if a is None else (a, b))
    t.expect(f"cdf({n}Z)", rep.cdf.holds, cdf_expected, lambda: {"facts": [fact("cdf", I, rep.cdf)]})
    t.notes.extend(rep.notes)
    if a is not None:
        ra, rb = a % n, b % n
        bad = check_cdf_pair(I, ra, rb).is_counterexample
        t.expect(f"({a},{b}) defeats {n}Z", bad, True,
                 lambda: {"facts": [pair_fact("cdf", I, ra, rb)]})
    return rep


def audit_ex_35z(ctx):
    t = Tally()
    rep = _integer_expectations(t, 35, 3, -2, False)
    I = zero_ideal(ring_from_text("Z35"))
    t.expect("cube condition on 35Z", rep.cube_condition.holds, True,
             lambda: {"facts": [fact("cube_condition", I, rep.cube_condition)]})
    t.expect("35Z radical", radical(I) == I, True, lambda: {"facts": [fact("radical", I, holds=radical(I) == I)]})
    return t.report("EX_35Z")


def audit_thm_char3(ctx):
    t = Tally()
    for R in ctx.inventory:
        if ring_char(R) != 3:
            continue
        for I in ctx.proper(R):
            t.record(ctx.holds("cube_condition", I), lambda: ctx.holds("cdf", I),
                     lambda: _pair_facts(ctx, "cube_condition", I, "cdf", I))
    return t.report("THM_CHAR3")


def audit_cor_vnr(ctx):
    t = Tally()
    rings = []
    for R in ctx.inventory:
        hyp = ring_char(R) == 3 and is_von_neumann_regular(R)
        if hyp:
            rings.append(R.name)
        for I in ctx.proper(R):
            t.record(hyp, lambda: ctx.holds("cdf", I), lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    return t.report("COR_VNR", {"rings": rings})


def audit_ex_z8_family(ctx):
    t = Tally()
    Z8 = ctx.find("Z8")
    for I in ctx.nonzero_proper(Z8):
        t.expect(f"cdf({I.dsl()} in Z8)", ctx.holds("cdf", I), True, lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    _integer_expectations(t, 8, 4, 2, False)
    cases = [
        ("Z9 x Z9", "gen((0,1))", "(4,0)", "(1,0)"),
        ("Z9 x Z9", "zero", "(4,0)", "(1,0)"),
        ("Z9 x Z9 x Z9", "gen((0,0,1))", "(2,1,0)", "(8,1,0)"),
    ]
    for ring_text, ideal_text, a_text, b_text in cases:
        R = ctx.find(ring_text)
        I = parse_ideal(R, ideal_text)
        a, b = parse_element(R, a_text), parse_element(R, b_text)
        t.expect(f"({a_text},{b_text}) defeats {ideal_text} in {ring_text}", check_cdf_pair(I, a, b).is_counterexample, True,
                 lambda: {"facts": [pair_fact("cdf", I, a, b)]})
        t.expect(f"cdf({ideal_text} in {ring_text})", ctx.holds("cdf", I), False,
                 lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    _integer_expectations(t, 9, 1, -2, False)
    return t.report("EX_Z8_FAMILY")


def audit_thm_equiv3(ctx):
    t = Tally()
    for R in ctx.inventory:
        for I in ctx.proper(R):
            def agree():
                a = ctx.holds("cdf_strong", I)
                b = three_status(I).three_in_ideal
                c = quotient_char(I) == 3
                return a == b == c

            def witness():
                return {"facts": [
                    fact("cdf", I, ctx.verdict("cdf", I)),
                    fact("cdf_strong", I, ctx.verdict("cdf_strong", I)),
                    fact("member", I, holds=three_status(I).three_in_ideal, witness=(R.from_int(3),)),
                    fact("quotient_char", I, holds=True, value=quotient_char(I)),
                ]}

            t.record(ctx.holds("cdf", I), agree, witness)
    return t.report("THM_EQUIV3")


def audit_def_star_ex_39z(ctx):
    t = Tally()
    R = ctx.find("Z39")
    I = zero_ideal(R)
    q = cdf_factor(R, 1, 3)
    defeats = bool(I.members[R.mul(3, q)]) and not I.members[3] and not I.members[q]
    t.expect("(1,3) defeats *-primeness of 39Z", defeats, True,
             lambda: {"facts": [pair_fact("star_prime", I, 1, 3)]})
    t.expect("cdf(39Z)", ctx.holds("cdf", I), True, lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    t.expect("star_prime(39Z)", ctx.holds("star_prime", I), False,
             lambda: {"facts": [fact("star_prime", I, ctx.verdict("star_prime", I))]})
    return t.report("DEF_STAR_EX_39Z")


def audit_thm_star_equiv(ctx):
    t = Tally()
    for R in ctx.inventory:
        for I in ctx.proper(R):
            t.record(three_status(I).three_is_unit, lambda: ctx.holds("cdf", I) == ctx.holds("star_prime", I),
                     lambda: _pair_facts(ctx, "cdf", I, "star_prime", I))
    return t.report("THM_STAR_EQUIV")


def linear_system_violation(I: Ideal, nonzero: bool):
    """First (a, b, x, y) with a, b outside I, b(a^2+ab+b^2) in I and
    b = y - x, a = y + 2x; None when no such quadruple exists.

    ``nonzero`` discards the solution x = y = 0.
    """
    R = I.ring
    m = I.members
    a = R.elements[:, None]
    b = R.elements[None, :]
    hyp = ~m[a] & ~m[b] & m[R.mul(b, cdf_factor(R, a, b))]
    three_x = np.asarray(R.mul(R.from_int(3), R.elements))
    for ai, bi in zip(*np.nonzero(hyp)):
        ai, bi = int(ai), int(bi)
        # b = y - x and a = y + 2x force y = b + x and 3x = a - b
        for x in np.flatnonzero(three_x == R.sub(ai, bi)):
            x = int(x)
            y = R.add(bi, x)
            if nonzero and x == R.zero and y == R.zero:
                continue
            return ai, bi, x, y
    return None


def audit_thm_linsys(ctx):
    readings = {}
    overall = None
    for reading, nonzero in (("any-solution", False), ("nonzero-solution", True)):
        t = Tally()
        pred = "linsys_nonzero" if nonzero else "linsys_any"
        for R in ctx.inventory:
            for I in ctx.proper(R):
                def check():
                    violation = linear_system_violation(I, nonzero)
                    return ctx.holds("cdf", I) == (violation is None)

                def witness():
                    violation = linear_system_violation(I, nonzero)
                    lin = fact(pred, I, holds=violation is None, witness=violation)
                    return {"reading": reading, "facts": [fact("cdf", I, ctx.verdict("cdf", I)), lin]}

                t.record(True, check, witness)
        readings[reading] = t.summary()
        if overall is None or t.witness is not None and overall.witness is None:
            overall = t
    rep = overall.report("THM_LINSYS", {"readings": readings})
    rep.notes.append("the two readings coincide whenever b lies outside I, since then (x, y) != (0, 0)")
    return rep


def audit_ex_cdf_list(ctx):
    t = Tally()
    for p in (2, 5, 7, 11, 13):
        _integer_expectations(t, 3 * p, None, None, True)
    for name in ("Z2", "bool(3)"):
        R = ctx.find(name)
        for I in ctx.proper(R):
            t.expect(f"cdf({I.dsl()} in {name})", ctx.holds("cdf", I), True,
                     lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    _integer_expectations(t, 12, None, None, True)
    for p in (2, 3, 5, 7):
        f = poly_mul([1, 1, 1], [p - 1, 1], p)  # (x^2+x+1)(x-1)
        for g, expected in (([p - 1, 0, 0, 1], True), ([p - 1, 1], False), ([1, 1, 1], False)):
            t.expect(f"{render_poly(g)} in ({render_poly(f)}) over Z{p}", poly_principal_witness(p, f, g), expected,
                     lambda: {"facts": [poly_fact(p, f, g, poly_principal_witness(p, f, g))]})
        Q = make_poly_quotient(p, f)
        I = zero_ideal(Q)
        x, one = parse_element(Q, "x"), Q.one
        t.expect(f"(x,1) defeats zero of {Q.name}", check_cdf_pair(I, x, one).is_counterexample, True,
                 lambda: {"facts": [pair_fact("cdf", I, x, one)]})
    return t.report("EX_CDF_LIST")


def audit_thm_localization(ctx):
    t = Tally()
    for R in ctx.inventory:
        locs = localizations(ctx, R)
        for I in ctx.proper(R):
            cdf_I = ctx.holds("cdf", I)
            for s, L, h in locs:
                S = multiplicative_closure(R, [s])
                hyp = cdf_I and not I.members[S].any()
                if not hyp:
                    t.record(False)
                    continue
                J = ideal_image(h, I)
                t.record(True, lambda: J.is_proper and ctx.holds("cdf", J),
                         lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I)), fact("cdf", J, ctx.verdict("cdf", J))]})
    return t.report("THM_LOCALIZATION")


def audit_thm_hom_pre(ctx):
    t = Tally()
    whole = 0
    for h in hom_set(ctx):
        for J in ctx.proper(h.codomain):
            hyp = ctx.holds("cdf", J)
            if not hyp:
                t.record(False)
                continue
            P = ideal_preimage(h, J)
            if not P.is_proper:
                whole += 1
                t.record(True)
                continue
            t.record(True, lambda: ctx.holds("cdf", P), lambda: _pair_facts(ctx, "cdf", J, "cdf", P))
    return t.report("THM_HOM_PRE", {"homs": len(hom_set(ctx)), "whole_ring_preimages": whole})


def audit_thm_hom_img(ctx):
    t = Tally()
    for h in hom_set(ctx):
        if not h.surjective:
            continue
        ker = h.kernel_mask
        for I in ctx.proper(h.domain):
            hyp = ctx.holds("cdf", I) and bool((~ker | I.members).all())
            if not hyp:
                t.record(False)
                continue
            J = ideal_image(h, I)
            t.record(True, lambda: J.is_proper and ctx.holds("cdf", J), lambda: _pair_facts(ctx, "cdf", I, "cdf", J))
    return t.report("THM_HOM_IMG")


def audit_cor_contract_quot(ctx):
    quot = Tally()
    for R in ctx.inventory:
        for J in ctx.proper(R):
            if J.is_zero:
                continue
            pi = make_quotient(R, J)[1]
            for I in ctx.proper(R):
                if not J <= I:
                    continue
                IJ = ideal_image(pi, I)
                quot.record(True, lambda: ctx.holds("cdf", I) == ctx.holds("cdf", IJ),
                            lambda: _pair_facts(ctx, "cdf", I, "cdf", IJ))
    contract = Tally()
    for h in hom_set(ctx):
        if not h.name.startswith(("incl", "diag")):
            continue
        for J in ctx.proper(h.codomain):
            hyp = ctx.holds("cdf", J)
            if not hyp:
                contract.record(False)
                continue
            P = ideal_preimage(h, J)
            contract.record(True, lambda: ctx.holds("cdf", P), lambda: _pair_facts(ctx, "cdf", J, "cdf", P))
    t = quot if quot.witness is not None or contract.witness is None else contract
    rep = AuditReport(
        "COR_CONTRACT_QUOT",
        Status.COUNTEREXAMPLE if (quot.witness or contract.witness) else Status.CONFIRMED,
        quot.instances + contract.instances,
        quot.nonvacuous + contract.nonvacuous,
        t.witness,
        details={"quotient": quot.summary(), "contraction": contract.summary()},
    )
    return rep


def audit_ex_kernel_needed(ctx):
    t = Tally()
    _integer_expectations(t, 8, 4, 2, False)
    t.notes.append("primality of (X + 8) in Z[X] is taken as given; only the 8Z conclusion is checked")
    return t.report("EX_KERNEL_NEEDED")


def binary_products(ctx):
    """Inventory products of arity 2, then products of pairs of small inventory rings."""
    out = [R for R in ctx.inventory if R.construction == "Product" and len(R.parts["factors"]) == 2]
    small = [R for R in ctx.small_rings(SMALL_ORDER) if ctx.nonzero_proper(R)]
    for R1 in small:
        for R2 in small:
            out.append(make_product([R1, R2]))
    return out


def _product_instances(ctx):
    if not hasattr(ctx, "_products"):
        ctx._products = binary_products(ctx)
    for P in ctx._products:
        R1, R2 = P.parts["factors"]
        for I1 in ctx.nonzero_proper(R1):
            for I2 in ctx.nonzero_proper(R2):
                yield P, R1, R2, I1, I2, product_ideal(P, [I1, I2])


def cube_root_clause_violation(I1: Ideal):
    """First (i, c) with 0 != i in I1, c^3 = i + 1 and c - 1 outside I1."""
    R = I1.ring
    for i in I1.indices:
        i = int(i)
        if i == R.zero:
            continue
        for c in cube_roots(R, R.add(i, R.one)):
            if not I1.members[R.sub(c, R.one)]:
                return i, c
    return None


def audit_thm_product_a(ctx):
    t = Tally()
    fired = 0
    for P, R1, R2, I1, I2, I in _product_instances(ctx):
        hyp = ctx.holds("cdf", I)
        if hyp and not three_status(I2).three_in_ideal:
            fired += 1

        def check():
            if not (ctx.holds("cdf", I1) and ctx.holds("cdf", I2)):
                return False
            return three_status(I2).three_in_ideal or cube_root_clause_violation(I1) is None

        def witness():
            facts = [fact("cdf", I, ctx.verdict("cdf", I))]
            for K in (I1, I2):
                if not ctx.holds("cdf", K):
                    return {"facts": facts + [fact("cdf", K, ctx.verdict("cdf", K))]}
            i, c = cube_root_clause_violation(I1)
            return {"facts": facts + [
                fact("member", I2, holds=False, witness=(R2.from_int(3),)),
                fact("cube_root_clause", I1, holds=False, witness=(i, c)),
            ]}

        t.record(hyp, check, witness)
    return t.report("THM_PRODUCT_A", {"products": len(ctx._products), "cube_root_clause_fired": fired})


def audit_thm_product_b(ctx):
    modes = {}
    main = None
    for mode in (Mode.NONZERO_PAIRS, Mode.ALL_PAIRS):
        t = Tally()
        for P, R1, R2, I1, I2, I in _product_instances(ctx):
            hyp = ctx.holds("cdf", I1) and ctx.holds("cdf", I2) and three_status(I2).three_in_ideal
            t.record(hyp, lambda: ctx.holds("cdf_squared", I, mode),
                     lambda: {"facts": [fact("cdf", I1, ctx.verdict("cdf", I1)), fact("cdf", I2, ctx.verdict("cdf", I2)),
                                        fact("member", I2, holds=True, witness=(R2.from_int(3),)),
                                        fact("cdf_squared", I, ctx.verdict("cdf_squared", I, mode))]})
        modes[mode.value] = t.summary()
        if main is None:
            main = t
    rep = main.report("THM_PRODUCT_B", {"modes": modes})
    rep.notes.append("status uses nonzero pairs as stated; the all-pairs reading is in details")
    return rep


def idealizations(ctx):
    """Inventory idealizations plus R(+)R/J for small inventory rings."""
    if hasattr(ctx, "_idealizations"):
        return ctx._idealizations
    out = [R for R in ctx.inventory if R.construction == "Idealization"]
    names = {R.name for R in out}
    for R in ctx.small_rings(IDEALIZATION_BASE_ORDER):
        for J in ctx.proper(R):
            RM = make_idealization(R, J)
            if RM.name not in names and RM.order <= 144:
                names.add(RM.name)
                out.append(RM)
    ctx._idealizations = out
    return out


def absorption_violation(RM, I: Ideal, N: Ideal, IN: Ideal):
    """First ((i,0), (0,u)) with i in I, u outside N and their product outside I(+)N."""
    M = RM.parts["module"]
    for i in I.indices:
        for u in np.flatnonzero(~N.members):
            x, y = int(i) * M.order + M.zero, RM.parts["base"].zero * M.order + int(u)
            if not IN.members[RM.mul(x, y)]:
                return x, y
    return None


def audit_thm_idealization_a(ctx):
    t = Tally()
    not_ideal = 0
    inhomogeneous = 0
    for RM in idealizations(ctx):
        R, M = RM.parts["base"], RM.parts["module"]
        homogeneous = set()
        for I in ctx.proper(R):
            for N in ctx.ideals(M):
                try:
                    IN = idealization_ideal(RM, I, N)
                except NotAnIdeal:
                    not_ideal += 1
                    continue
                homogeneous.add(IN)
                if I.is_zero:
                    continue

                def check():
                    return ctx.holds("cdf", I) and absorption_violation(RM, I, N, IN) is None

                def witness():
                    facts = [fact("cdf", IN, ctx.verdict("cdf", IN))]
                    if not ctx.holds("cdf", I):
                        return {"facts": facts + [fact("cdf", I, ctx.verdict("cdf", I))]}
                    bad = absorption_violation(RM, I, N, IN)
                    return {"facts": facts + [fact("absorption", IN, holds=False, witness=bad)]}

                t.record(ctx.holds("cdf", IN), check, witness)
        inhomogeneous += sum(1 for K in ctx.ideals(RM) if K not in homogeneous)
    rep = t.report("THM_IDEALIZATION_A", {
        "idealizations": len(idealizations(ctx)),
        "pairs_not_ideals": not_ideal,
        "ideals_not_of_form_I(+)N": inhomogeneous,
    })
    if inhomogeneous:
        rep.notes.append(f"{inhomogeneous} ideals of the idealizations are not of the form I(+)N and are outside the claim")
    return rep


def audit_thm_idealization_b(ctx):
    t = Tally()
    for RM in idealizations(ctx):
        R, M = RM.parts["base"], RM.parts["module"]
        for I in ctx.nonzero_proper(R):
            IM = idealization_ideal(RM, I, whole_ideal(M))
            t.record(ctx.holds("cdf", I), lambda: ctx.holds("cdf", IM), lambda: _pair_facts(ctx, "cdf", I, "cdf", IM))
    return t.report("THM_IDEALIZATION_B")


def _zero_side_assertion(t, ctx):
    Z8 = ctx.find("Z8")
    side = ctx.holds("cdf", zero_ideal(Z8))
    if not side:
        t.notes.append("side assertion 'zero ideal of Z8 is cdf' is false: "
                       f"witness {ctx.verdict('cdf', zero_ideal(Z8)).witness_labels(Z8)}; the main assertion is unaffected")
    return side


def audit_ex_idealization_zero(ctx):
    t = Tally()
    RM = ctx.find("idealize(Z8; zero)")
    I = idealization_ideal(RM, zero_ideal(RM.parts["base"]), whole_ideal(RM.parts["module"]))
    x, y = parse_element(RM, "(2,0)"), parse_element(RM, "(0,2)")
    t.expect("(2,0),(0,2) defeats {0}(+)Z8", check_cdf_pair(I, x, y).is_counterexample, True,
             lambda: {"facts": [pair_fact("cdf", I, x, y)]})
    t.expect("cdf({0}(+)Z8)", ctx.holds("cdf", I), False, lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    side = _zero_side_assertion(t, ctx)
    return t.report("EX_IDEALIZATION_ZERO", {"zero_ideal_of_Z8_cdf": side})


def audit_prop_zero_idealization(ctx):
    bicond = Tally()
    for RM in idealizations(ctx):
        R, M = RM.parts["base"], RM.parts["module"]
        Z = idealization_ideal(RM, zero_ideal(R), whole_ideal(M))
        zR = zero_ideal(R)
        bicond.record(True, lambda: ctx.holds("cdf", Z) == (ctx.holds("semi_absorbing_2", zR) and ctx.holds("cdf", zR)),
                      lambda: {"facts": [fact("cdf", Z, ctx.verdict("cdf", Z)), fact("cdf", zR, ctx.verdict("cdf", zR)),
                                         fact("semi_absorbing_2", zR, ctx.verdict("semi_absorbing_2", zR))]})
    redundant = Tally()
    for R in ctx.inventory:
        zR = zero_ideal(R)
        redundant.record(ctx.holds("cdf", zR), lambda: ctx.holds("semi_absorbing_2", zR),
                         lambda: _pair_facts(ctx, "cdf", zR, "semi_absorbing_2", zR))
    rep = bicond.report("PROP_ZERO_IDEALIZATION", {"biconditional": bicond.summary(), "semi_absorbing_redundant": redundant.summary()})
    if redundant.witness is None:
        rep.notes.append("whenever {0} is cdf it is also 2-semi-absorbing on this inventory")
    else:
        rep.notes.append("redundancy hypothesis refuted; see details")
    return rep


def amalgamations(ctx):
    if hasattr(ctx, "_amalgamations"):
        return ctx._amalgamations
    out = []
    for A in ctx.small_rings(AMALGAMATION_BASE_ORDER):
        if A.construction == "Amalgamation":
            continue
        for J in ctx.ideals(A):
            out.append(make_amalgamation(identity_hom(A), J))
    ctx._amalgamations = out
    return out


def audit_thm_amalgamation(ctx):
    t = Tally()
    for AB in amalgamations(ctx):
        A = AB.parts["hom"].domain
        for I in ctx.nonzero_proper(A):
            IJ = amalgamation_ideal(AB, I)
            t.record(True, lambda: ctx.holds("cdf", IJ) == ctx.holds("cdf", I), lambda: _pair_facts(ctx, "cdf", I, "cdf", IJ))
    return t.report("THM_AMALGAMATION", {"amalgamations": len(amalgamations(ctx))})


def audit_ex_amalgamation_zero(ctx):
    t = Tally()
    AB = ctx.find("amalg(Z8; gen(1))")
    I = amalgamation_ideal(AB, zero_ideal(AB.parts["hom"].domain))
    x, y = parse_element(AB, "(2,0)"), parse_element(AB, "(0,2)")
    t.expect("(2,0),(0,2) defeats {0}⋈Z8", check_cdf_pair(I, x, y).is_counterexample, True,
             lambda: {"facts": [pair_fact("cdf", I, x, y)]})
    t.expect("cdf({0}⋈Z8)", ctx.holds("cdf", I), False, lambda: {"facts": [fact("cdf", I, ctx.verdict("cdf", I))]})
    side = _zero_side_assertion(t, ctx)
    return t.report("EX_AMALGAMATION_ZERO", {"zero_ideal_of_Z8_cdf": side})


@dataclass(frozen=True)
class Claim:
    tag: str
    statement: str
    run: Callable


REGISTRY: dict[str, Claim] = {
    c.tag: c
    for c in (
        Claim("REM_SUMFORM", "I is cdf iff: a^3+b^3 in I implies a+b in I or a^2-ab+b^2 in I", audit_rem_sumform),
        Claim("REM_PRIME_IMPLIES_CDF", "every prime ideal is cdf", audit_rem_prime_implies_cdf),
        Claim("PROP_CUBE", "if I is cdf then a^3 in I implies a^2 in I or a in I", audit_prop_cube),
        Claim("EX_35Z", "35Z is not cdf, witness (3,-2); 35Z satisfies the cube condition", audit_ex_35z),
        Claim("THM_CHAR3", "char R = 3 and the cube condition imply cdf", audit_thm_char3),
        Claim("COR_VNR", "in a von Neumann regular ring of characteristic 3 every proper ideal is cdf", audit_cor_vnr),
        Claim("EX_Z8_FAMILY", "Z8, 8Z, Z9xZ9, Z9^3 and 9Z examples and their witnesses", audit_ex_z8_family),
        Claim("THM_EQUIV3", "for cdf I: the strong form, 3 in I, and char(R/I) = 3 are equivalent", audit_thm_equiv3),
        Claim("DEF_STAR_EX_39Z", "39Z is cdf but not *-prime, witness a=1, b=3", audit_def_star_ex_39z),
        Claim("THM_STAR_EQUIV", "if 3 is a unit, cdf iff *-prime", audit_thm_star_equiv),
        Claim("THM_LINSYS", "cdf iff no a,b outside I with b(a^2+ab+b^2) in I admit b=Y-X, a=Y+2X", audit_thm_linsys),
        Claim("EX_CDF_LIST", "3pZ, boolean rings and 12Z are cdf; (X^3-1) in K[X] is not", audit_ex_cdf_list),
        Claim("THM_LOCALIZATION", "S^-1 I is cdf for cdf I disjoint from S", audit_thm_localization),
        Claim("THM_HOM_PRE", "preimages of cdf ideals are cdf", audit_thm_hom_pre),
        Claim("THM_HOM_IMG", "images of cdf ideals containing the kernel are cdf under surjections", audit_thm_hom_img),
        Claim("COR_CONTRACT_QUOT", "contractions of cdf ideals are cdf; I/J cdf iff I cdf", audit_cor_contract_quot),
        Claim("EX_KERNEL_NEEDED", "8Z is not cdf (the image of a cdf ideal whose kernel is not contained)", audit_ex_kernel_needed),
        Claim("THM_PRODUCT_A", "I1 x I2 cdf implies I1, I2 cdf and the cube-root clause", audit_thm_product_a),
        Claim("THM_PRODUCT_B", "I1, I2 cdf and 3 in I2 imply the squared form on I1 x I2", audit_thm_product_b),
        Claim("THM_IDEALIZATION_A", "I(+)N cdf implies I cdf and IM-absorption into N", audit_thm_idealization_a),
        Claim("THM_IDEALIZATION_B", "I cdf implies I(+)M cdf", audit_thm_idealization_b),
        Claim("EX_IDEALIZATION_ZERO", "{0}(+)Z8 is not cdf in Z8(+)Z8, witness (2,0),(0,2)", audit_ex_idealization_zero),
        Claim("PROP_ZERO_IDEALIZATION", "{0}(+)M cdf iff {0} is 2-semi-absorbing and cdf", audit_prop_zero_idealization),
        Claim("THM_AMALGAMATION", "I⋈_J B cdf iff I cdf, for nonzero proper I", audit_thm_amalgamation),
        Claim("EX_AMALGAMATION_ZERO", "{0}⋈Z8 is not cdf in Z8⋈Z8, witness (2,0),(0,2)", audit_ex_amalgamation_zero),
    )
}


def audit(tag: str, ctx: AuditContext) -> AuditReport:
    if tag not in REGISTRY:
        raise UnknownClaim(f"unknown claim {tag!r}")
    return REGISTRY[tag].run(ctx)


def run_all(inventory, jobs: int = 1) -> tuple[list[AuditReport], dict]:
    ctx = AuditContext(inventory, jobs)
    reports = [audit(tag, ctx) for tag in REGISTRY]
    summary = {"claims": len(reports)}
    for status in Status:
        summary[status.value] = sum(r.status is status for r in reports)
    summary["confirmed_nonvacuous"] = sum(r.status is Status.CONFIRMED and r.nonvacuous_instances > 0 for r in reports)
    return reports, summary
