"""A small DSL for rings, elements and ideals.

Grammar (whitespace-insensitive)::

    ring  := atom { "x" atom }
    atom  := "Z" nat | "Z" nat "[x]/(" poly ")" | "bool(" nat ")"
           | "quot(" ring ";" ideal ")" | "idealize(" ring ";" ideal ")"
           | "amalg(" ring ";" ideal ")" | "loc(" ring ";" elem {"," elem} ")"
           | "(" ring ")"
    ideal := "zero" | "gen(" elem { "," elem } ")"
    elem  := poly | "(" elem { "," elem } ")"
    poly  := ["-"] term { ("+" | "-") term }
    term  := int ["*"] ["x" ["^" nat]] | "x" ["^" nat]

``x`` between ring atoms is the product; everywhere else it is the
indeterminate.  ``amalg`` always uses the identity hom (A = B).

Parsing yields a tree; ``elaborate`` turns it into a ``FiniteRing``.
``render`` is the inverse of parsing up to source spans.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ElaborationError, InvalidModulus, NotPrime, ParseError, RingLabError
from .ideals import Ideal, ideal_from_generators, zero_ideal
from .polys import is_prime, render_poly
from .rings import (
    FiniteRing,
    identity_hom,
    make_amalgamation,
    make_boolean,
    make_idealization,
    make_localization,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_zn,
    product_encode,
)

Span = tuple[int, int]


def _span():
    return field(default=(0, 0), compare=False, repr=False)


# trees -----------------------------------------------------------------------


@dataclass(frozen=True)
class IntElem:
    value: int
    span: Span = _span()


@dataclass(frozen=True)
class PolyElem:
    terms: tuple[tuple[int, int], ...]  # (degree, coefficient), descending, nonzero
    span: Span = _span()


@dataclass(frozen=True)
class TupleElem:
    items: tuple
    span: Span = _span()


@dataclass(frozen=True)
class ZeroIdeal:
    span: Span = _span()


@dataclass(frozen=True)
class GenIdeal:
    elems: tuple
    span: Span = _span()


@dataclass(frozen=True)
class Zn:
    n: int
    span: Span = _span()


@dataclass(frozen=True)
class PolyQuotient:
    p: int
    modulus: object
    span: Span = _span()


@dataclass(frozen=True)
class Bool:
    n: int
    span: Span = _span()


@dataclass(frozen=True)
class Product:
    factors: tuple
    span: Span = _span()


@dataclass(frozen=True)
class Quotient:
    ring: object
    ideal: object
    span: Span = _span()


@dataclass(frozen=True)
class Idealize:
    ring: object
    ideal: object
    span: Span = _span()


@dataclass(frozen=True)
class Amalg:
    ring: object
    ideal: object
    span: Span = _span()


@dataclass(frozen=True)
class Loc:
    ring: object
    elems: tuple
    span: Span = _span()


# lexer -----------------------------------------------------------------------

KEYWORDS = ("idealize", "amalg", "quot", "zero", "bool", "gen", "loc")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<word>" + "|".join(KEYWORDS) + r"|Z|x)|(?P<punct>[()\[\]/;,^+\-*]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "word", "punct" or "eof"
    text: str
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            start = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, start + 1, text)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind), m.end(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", len(text), len(text)))
    return tokens


# parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, text):
        return self.tok.kind != "eof" and self.tok.text == text

    def fail(self, *expected):
        tok = self.tok
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        start = min(tok.start, max(len(self.text) - 1, 0))
        raise ParseError(f"unexpected {what}", start, tok.end, self.text, expected)

    def expect(self, text):
        if not self.at(text):
            self.fail(repr(text))
        tok = self.tok
        self.i += 1
        return tok

    def nat(self):
        if self.tok.kind != "num":
            self.fail("natural number")
        tok = self.tok
        self.i += 1
        return int(tok.text)

    def done(self):
        if self.tok.kind != "eof":
            self.fail("end of input")

    # rings

    def ring(self):
        start = self.tok.start
        factors = [self.atom()]
        while self.at("x"):
            self.i += 1
            factors.append(self.atom())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), (start, self.tokens[self.i - 1].end))

    def atom(self):
        tok = self.tok
        start = tok.start
        if self.at("Z"):
            self.i += 1
            n = self.nat()
            if self.at("["):
                self.i += 1
                self.expect("x")
                self.expect("]")
                self.expect("/")
                self.expect("(")
                modulus = self.poly()
                end = self.expect(")").end
                return PolyQuotient(n, modulus, (start, end))
            return Zn(n, (start, self.tokens[self.i - 1].end))
        if self.at("bool"):
            self.i += 1
            self.expect("(")
            n = self.nat()
            return Bool(n, (start, self.expect(")").end))
        for word, node in (("quot", Quotient), ("idealize", Idealize), ("amalg", Amalg)):
            if self.at(word):
                self.i += 1
                self.expect("(")
                inner = self.ring()
                self.expect(";")
                ideal = self.ideal()
                return node(inner, ideal, (start, self.expect(")").end))
        if self.at("loc"):
            self.i += 1
            self.expect("(")
            inner = self.ring()
            self.expect(";")
            elems = self.elem_list()
            return Loc(inner, elems, (start, self.expect(")").end))
        if self.at("("):
            self.i += 1
            inner = self.ring()
            self.expect(")")
            return inner
        self.fail("'Z'", "'bool'", "'quot'", "'idealize'", "'amalg'", "'loc'", "'('")

    # ideals and elements

    def ideal(self):
        start = self.tok.start
        if self.at("zero"):
            self.i += 1
            return ZeroIdeal((start, self.tokens[self.i - 1].end))
        if self.at("gen"):
            self.i += 1
            self.expect("(")
            elems = self.elem_list()
            return GenIdeal(elems, (start, self.expect(")").end))
        self.fail("'zero'", "'gen'")

    def elem_list(self):
        elems = [self.elem()]
        while self.at(","):
            self.i += 1
            elems.append(self.elem())
        return tuple(elems)

    def elem(self):
        if self.at("("):
            start = self.tok.start
            self.i += 1
            items = self.elem_list()
            return TupleElem(items, (start, self.expect(")").end))
        return self.poly()

    def poly(self):
        start = self.tok.start
        coeffs: dict[int, int] = {}
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        while True:
            deg, c = self.term()
            coeffs[deg] = coeffs.get(deg, 0) + sign * c
            if self.at("+"):
                sign = 1
            elif self.at("-"):
                sign = -1
            else:
                break
            self.i += 1
        span = (start, self.tokens[self.i - 1].end)
        terms = tuple((d, c) for d, c in sorted(coeffs.items(), reverse=True) if c != 0 and d > 0)
        if not terms:
            return IntElem(coeffs.get(0, 0), span)
        const = coeffs.get(0, 0)
        if const:
            terms += ((0, const),)
        return PolyElem(terms, span)

    def term(self):
        coef = None
        if self.tok.kind == "num":
            coef = int(self.tok.text)
            self.i += 1
            if self.at("*"):
                self.i += 1
                if not self.at("x"):
                    self.fail("'x'")
        if self.at("x"):
            self.i += 1
            deg = 1
            if self.at("^"):
                self.i += 1
                deg = self.nat()
            return deg, 1 if coef is None else coef
        if coef is None:
            self.fail("integer", "'x'")
        return 0, coef


def _wrap(text, fn):
    try:
        return fn()
    except ParseError as exc:
        raise exc.with_source(text) from None


def parse_ring(text: str):
    """Parse ring DSL text into a tree (no elaboration)."""

    def go():
        p = _Parser(text)
        tree = p.ring()
        p.done()
        return tree

    return _wrap(text, go)


def parse_ideal_tree(text: str):
    def go():
        p = _Parser(text)
        tree = p.ideal()
        p.done()
        return tree

    return _wrap(text, go)


def parse_elem_tree(text: str):
    def go():
        p = _Parser(text)
        tree = p.elem()
        p.done()
        return tree

    return _wrap(text, go)


# rendering ----------------------------------------------------------------------


def render_elem(node) -> str:
    if isinstance(node, IntElem):
        return str(node.value)
    if isinstance(node, PolyElem):
        top = max(d for d, _ in node.terms)
        coeffs = [0] * (top + 1)
        for d, c in node.terms:
            coeffs[d] = c
        return render_poly(coeffs)
    return "(" + ",".join(render_elem(e) for e in node.items) + ")"


def render_ideal(node) -> str:
    if isinstance(node, ZeroIdeal):
        return "zero"
    return "gen(" + ",".join(render_elem(e) for e in node.elems) + ")"


def render(node) -> str:
    if isinstance(node, Zn):
        return f"Z{node.n}"
    if isinstance(node, PolyQuotient):
        return f"Z{node.p}[x]/({render_elem(node.modulus)})"
    if isinstance(node, Bool):
        return f"bool({node.n})"
    if isinstance(node, Product):
        return " x ".join(f"({render(f)})" if isinstance(f, Product) else render(f) for f in node.factors)
    if isinstance(node, Quotient):
        return f"quot({render(node.ring)}; {render_ideal(node.ideal)})"
    if isinstance(node, Idealize):
        return f"idealize({render(node.ring)}; {render_ideal(node.ideal)})"
    if isinstance(node, Amalg):
        return f"amalg({render(node.ring)}; {render_ideal(node.ideal)})"
    if isinstance(node, Loc):
        return f"loc({render(node.ring)}; {','.join(render_elem(e) for e in node.elems)})"
    raise TypeError(f"not a ring tree: {node!r}")


# elaboration -------------------------------------------------------------------


def _elab_error(msg, node, source):
    start, end = node.span
    return ElaborationError(msg, start, end, source)


def _poly_coeffs(node):
    if isinstance(node, IntElem):
        return [node.value]
    top = max(d for d, _ in node.terms)
    coeffs = [0] * (top + 1)
    for d, c in node.terms:
        coeffs[d] = c
    return coeffs


def element_from_tree(R: FiniteRing, node, source=None) -> int:
    """Resolve an element tree against R's construction."""
    kind = R.construction
    if isinstance(node, TupleElem) and len(node.items) == 1 and kind != "Product":
        return element_from_tree(R, node.items[0], source)
    if kind == "Zn":
        if not isinstance(node, IntElem):
            raise _elab_error(f"expected an integer for {R.name}", node, source)
        return node.value % R.order
    if kind == "Product":
        factors = R.parts["factors"]
        if not isinstance(node, TupleElem) or len(node.items) != len(factors):
            raise _elab_error(f"expected a tuple of arity {len(factors)} for {R.name}", node, source)
        comps = [element_from_tree(F, e, source) for F, e in zip(factors, node.items)]
        return int(product_encode([F.order for F in factors], comps))
    if kind == "PolyQuotient":
        if isinstance(node, TupleElem):
            raise _elab_error(f"expected a polynomial for {R.name}", node, source)
        p, d = R.parts["p"], R.parts["degree"]
        coeffs = [c % p for c in _poly_coeffs(node)]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > d:
            raise _elab_error(f"degree {len(coeffs) - 1} is out of range for {R.name} (max {d - 1})", node, source)
        return sum(c * p**i for i, c in enumerate(coeffs))
    if kind in ("Quotient", "Localization"):
        parent = R.parts["parent"]
        return int(R.parts["projection"][element_from_tree(parent, node, source)])
    if kind == "Idealization":
        if not isinstance(node, TupleElem) or len(node.items) != 2:
            raise _elab_error("expected a pair (r,m) for an idealization", node, source)
        base, M = R.parts["base"], R.parts["module"]
        r = element_from_tree(base, node.items[0], source)
        m = element_from_tree(M, node.items[1], source)
        return r * M.order + m
    if kind == "Amalgamation":
        if not isinstance(node, TupleElem) or len(node.items) != 2:
            raise _elab_error("expected a pair (a,b) for an amalgamation", node, source)
        f = R.parts["hom"]
        a = element_from_tree(f.domain, node.items[0], source)
        b = element_from_tree(f.codomain, node.items[1], source)
        idx = int(R.parts["lookup"][a * f.codomain.order + b])
        if idx < 0:
            raise _elab_error(f"{render_elem(node)} is not an element of {R.name}", node, source)
        return idx
    if kind == "Relabeled":
        src = R.parts["source"]
        return int(R.parts["perm"][element_from_tree(src, node, source)])
    raise _elab_error(f"cannot read elements of a {kind} ring", node, source)


def ideal_from_tree(R: FiniteRing, node, source=None) -> Ideal:
    if isinstance(node, ZeroIdeal):
        return zero_ideal(R)
    return ideal_from_generators(R, [element_from_tree(R, e, source) for e in node.elems])


def elaborate(node, source=None) -> FiniteRing:
    """Build the ring a tree denotes; semantic errors carry the node's span."""
    try:
        if isinstance(node, Zn):
            return make_zn(node.n)
        if isinstance(node, PolyQuotient):
            if not is_prime(node.p):
                raise NotPrime(f"{node.p} is not prime")
            try:
                return make_poly_quotient(node.p, _poly_coeffs(node.modulus))
            except InvalidModulus as exc:
                raise _elab_error(f"InvalidModulus: {exc}", node.modulus, source) from None
        if isinstance(node, Bool):
            return make_boolean(node.n)
        if isinstance(node, Product):
            return make_product([elaborate(f, source) for f in node.factors])
        if isinstance(node, Loc):
            R = elaborate(node.ring, source)
            return make_localization(R, [element_from_tree(R, e, source) for e in node.elems])[0]
        R = elaborate(node.ring, source)
        I = ideal_from_tree(R, node.ideal, source)
        if isinstance(node, Quotient):
            return make_quotient(R, I)[0]
        if isinstance(node, Idealize):
            return make_idealization(R, I)
        if isinstance(node, Amalg):
            return make_amalgamation(identity_hom(R), I)
    except ElaborationError:
        raise
    except RingLabError as exc:
        raise _elab_error(f"{type(exc).__name__}: {exc}", node, source) from None
    raise TypeError(f"not a ring tree: {node!r}")


def ring_from_text(text: str) -> FiniteRing:
    return elaborate(parse_ring(text), text)


def parse_element(R: FiniteRing, text: str) -> int:
    return element_from_tree(R, parse_elem_tree(text), text)


def parse_ideal(R: FiniteRing, text: str) -> Ideal:
    return ideal_from_tree(R, parse_ideal_tree(text), text)
