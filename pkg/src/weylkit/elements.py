"""Normal-ordered arithmetic in the first Weyl algebra.

The algebra has two generators p, q with pq - qp = 1, and the monomials
p^i q^j form a basis.  An element is stored as a sparse map from exponent
pairs (i, j) to nonzero Scalar coefficients, so equality of values is
equality of maps.  Multiplication normal-orders on the fly via the closed
form

    q^j p^k = sum_m (-1)^m C(j,m) C(k,m) m! p^{k-m} q^{j-m}.

Also here: the symmetrisation map onto the grading subspaces W_n (the image
of the n-th symmetric power of span{p, q}), the decomposition of an element
along that grading, the weight decomposition under ad(pq), and exact linear
spans over the monomial basis.

Printing convention: terms in descending total degree, ties broken by
descending p-exponent; the same order is used for echelon pivots.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from sympy.utilities.iterables import multiset_permutations

from .errors import BadParams, ExprSyntaxError, NotInjective
from .scalars import ONE, ZERO, Scalar, ScalarSyntaxError, format_scalar, scan_scalar

__all__ = [
    "WeylElement", "SymTensor", "WeightComponent", "ElementSpan",
    "bracket", "ad_pow", "symmetrize", "weight_decompose", "wn_components",
    "linear_span_dim", "coordinates", "parse_element", "format_element",
    "p", "q", "one", "zero",
]

Monomial = tuple[int, int]
ScalarLike = Union[Scalar, int, Fraction]


def _term_order(m: Monomial):
    """Sort key for printing order: descending total degree, then descending i."""
    return (-(m[0] + m[1]), -m[0])


@lru_cache(maxsize=None)
def _swap_coeff(j: int, k: int, m: int) -> int:
    return (-1) ** m * math.comb(j, m) * math.comb(k, m) * math.factorial(m)


class WeylElement:
    """A finite Scalar combination of normal-ordered monomials p^i q^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean: dict[Monomial, Scalar] = {}
        for (i, j), c in (terms or {}).items():
            c = c if isinstance(c, Scalar) else Scalar(c)
            if c:
                clean[(i, j)] = c
        self.terms = clean

    @staticmethod
    def monomial(i: int, j: int, coeff: ScalarLike = ONE) -> "WeylElement":
        assert i >= 0 and j >= 0
        return WeylElement({(i, j): coeff})

    # -- structure queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0, 0), ZERO)

    def is_poly_in_p(self) -> bool:
        return all(j == 0 for (_, j) in self.terms)

    def is_poly_in_q(self) -> bool:
        return all(i == 0 for (i, _) in self.terms)

    def degree(self) -> int:
        """Total degree; the zero element has degree -1."""
        return max((i + j for (i, j) in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        assert self.terms, "zero element has no leading monomial"
        return min(self.terms, key=_term_order)

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), ZERO)

    # -- linear structure ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> Optional["WeylElement"]:
        if isinstance(x, WeylElement):
            return x
        if isinstance(x, (Scalar, int, Fraction)):
            return WeylElement({(0, 0): x})
        return None

    def __add__(self, other):
        other = WeylElement._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = WeylElement.__new__(WeylElement)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = WeylElement.__new__(WeylElement)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = WeylElement._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike) -> "WeylElement":
        c = c if isinstance(c, Scalar) else Scalar(c)
        if not c:
            return zero
        res = WeylElement.__new__(WeylElement)
        res.terms = {m: c * v for m, v in self.terms.items()}
        return res

    def __truediv__(self, c):
        if isinstance(c, (Scalar, int, Fraction)):
            c = c if isinstance(c, Scalar) else Scalar(c)
            return self.scale(c.inverse())
        return NotImplemented

    # -- the product -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        out: dict[Monomial, Scalar] = {}
        for (a, b), cx in self.terms.items():
            for (c, d), cy in other.terms.items():
                cc = cx * cy
                for m in range(min(b, c) + 1):
                    key = (a + c - m, b + d - m)
                    v = out.get(key, ZERO) + cc * _swap_coeff(b, c, m)
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        res = WeylElement.__new__(WeylElement)
        res.terms = out
        return res

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        assert isinstance(n, int) and n >= 0
        result = one
        for _ in range(n):
            result = result * self
        return result

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        other = WeylElement._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<Weyl {format_element(self)}>"

    def as_records(self) -> list[dict]:
        """Machine form: one record per term, in printing order."""
        out = []
        for (i, j) in sorted(self.terms, key=_term_order):
            c = self.terms[(i, j)]
            out.append({"i": i, "j": j,
                        "re_num": c.re.numerator, "re_den": c.re.denominator,
                        "im_num": c.im.numerator, "im_den": c.im.denominator})
        return out


p = WeylElement.monomial(1, 0)
q = WeylElement.monomial(0, 1)
one = WeylElement.monomial(0, 0)
zero = WeylElement({})


def bracket(x: WeylElement, y: WeylElement) -> WeylElement:
    """The commutator xy - yx."""
    return x * y - y * x


def ad_pow(x: WeylElement, y: WeylElement, n: int) -> WeylElement:
    """The n-fold iterated bracket ad(x)^n(y); n = 0 returns y."""
    assert n >= 0
    for _ in range(n):
        y = bracket(x, y)
    return y


# -- symmetrisation and the W_n grading ---------------------------------------


class SymTensor:
    """A symmetric word v1 ⊙ … ⊙ vn of elements of span{p, q}.

    Each factor is a pair (a, b) of Scalars standing for a*p + b*q; the order
    of factors is irrelevant to the image under symmetrize.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable):
        fs = []
        for f in factors:
            a, b = f
            fs.append((a if isinstance(a, Scalar) else Scalar(a),
                       b if isinstance(b, Scalar) else Scalar(b)))
        if not fs:
            raise BadParams("symmetric tensor needs at least one factor")
        self.factors = tuple(fs)

    def __len__(self):
        return len(self.factors)


def symmetrize(t) -> WeylElement:
    """The symmetrised product (1/n!) Σ_σ v_{σ(1)} … v_{σ(n)}; lands in W_n."""
    factors = t.factors if isinstance(t, SymTensor) else SymTensor(t).factors
    n = len(factors)
    index: dict[tuple[Scalar, Scalar], int] = {}
    distinct: list[WeylElement] = []
    word = []
    for f in factors:
        if f not in index:
            index[f] = len(distinct)
            distinct.append(f[0] * p + f[1] * q)
        word.append(index[f])
    counts: dict[int, int] = {}
    for k in word:
        counts[k] = counts.get(k, 0) + 1
    # each distinct ordering stands for prod(mult!) identical permutations
    weight = Fraction(math.prod(math.factorial(c) for c in counts.values()),
                      math.factorial(n))
    total = zero
    for perm in multiset_permutations(word):
        total = total + reduce(lambda acc, k: acc * distinct[k], perm, one)
    return total.scale(weight)


@lru_cache(maxsize=None)
def _delta_monomial(i: int, j: int) -> WeylElement:
    """δ(p^⊙i ⊙ q^⊙j): leading monomial p^i q^j with coefficient 1."""
    if i == 0 and j == 0:
        return one
    return symmetrize([(ONE, ZERO)] * i + [(ZERO, ONE)] * j)


def wn_components(x: WeylElement) -> dict[int, WeylElement]:
    """Decompose x along A₁ = ⊕ W_n; keys in decreasing n, values nonzero.

    Works down from the top total degree: the degree-d part of the remainder
    fixes the W_d component via δ images of the matching monomial tensors.
    """
    out: dict[int, WeylElement] = {}
    rem = x
    while not rem.is_zero():
        d = rem.degree()
        comp = zero
        for (i, j), c in rem.terms.items():
            if i + j == d:
                comp = comp + _delta_monomial(i, j).scale(c)
        out[d] = comp
        rem = rem - comp
    return out


class WeightComponent(NamedTuple):
    weight: int
    value: WeylElement


def weight_decompose(x: WeylElement) -> list[WeightComponent]:
    """Partition the terms of x by weight j - i (the ad(pq) eigenvalue)."""
    buckets: dict[int, dict[Monomial, Scalar]] = {}
    for (i, j), c in x.terms.items():
        buckets.setdefault(j - i, {})[(i, j)] = c
    return [WeightComponent(w, WeylElement(t)) for w, t in sorted(buckets.items())]


# -- exact spans over the monomial basis ---------------------------------------


class ElementSpan:
    """Incremental echelon form of a span of elements.

    Pivots are leading monomials in printing order, normalised to coefficient
    one; rows keep insertion order, and each row carries its expression in
    terms of the inserted generators (dict generator-index -> Scalar), so
    membership queries can report exact coordinates.
    """

    def __init__(self):
        self.rows: list[tuple[Monomial, WeylElement, dict[int, Scalar]]] = []
        self._by_lead: dict[Monomial, int] = {}
        self.ngens = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, x: WeylElement):
        """Eliminate pivot monomials from x; returns (remainder, row coords)."""
        used: dict[int, Scalar] = {}
        while not x.is_zero():
            lead = x.leading_monomial()
            ridx = self._by_lead.get(lead)
            if ridx is None:
                break
            c = x.coeff(*lead)
            x = x - self.rows[ridx][1].scale(c)
            used[ridx] = used.get(ridx, ZERO) + c
        return x, used

    def insert(self, x: WeylElement) -> Optional[WeylElement]:
        """Add a generator; returns the new pivot row if the span grew."""
        gen = self.ngens
        self.ngens += 1
        rem, used = self._reduce(x)
        if rem.is_zero():
            return None
        c = rem.coeff(*rem.leading_monomial())
        row = rem.scale(c.inverse())
        coords = {gen: c.inverse()}
        for ridx, d in used.items():
            for g, v in self.rows[ridx][2].items():
                s = coords.get(g, ZERO) - d * v / c
                if s:
                    coords[g] = s
                else:
                    coords.pop(g, None)
        self._by_lead[row.leading_monomial()] = len(self.rows)
        self.rows.append((row.leading_monomial(), row, coords))
        return row

    def contains(self, x: WeylElement) -> bool:
        rem, _ = self._reduce(x)
        return rem.is_zero()

    def express(self, x: WeylElement) -> Optional[list[Scalar]]:
        """Coordinates of x over the inserted generators, or None if outside."""
        rem, used = self._reduce(x)
        if not rem.is_zero():
            return None
        out = [ZERO] * self.ngens
        for ridx, d in used.items():
            for g, v in self.rows[ridx][2].items():
                out[g] = out[g] + d * v
        return out

    def row_coordinates(self, x: WeylElement) -> Optional[list[Scalar]]:
        """Coordinates of x over the pivot rows, or None if outside."""
        rem, used = self._reduce(x)
        if not rem.is_zero():
            return None
        return [used.get(r, ZERO) for r in range(len(self.rows))]

    def reduced_basis(self) -> list[WeylElement]:
        """Canonical fully-reduced basis, pivots in printing order."""
        order = sorted(range(len(self.rows)), key=lambda r: _term_order(self.rows[r][0]))
        basis = [self.rows[r][1] for r in order]
        leads = [self.rows[r][0] for r in order]
        for a in range(len(basis)):
            for b in range(len(basis)):
                if a != b:
                    c = basis[a].coeff(*leads[b])
                    if c:
                        basis[a] = basis[a] - basis[b].scale(c)
        return basis


def linear_span_dim(xs: Sequence[WeylElement]):
    """Dimension of the span of xs, plus a canonical echelonised basis."""
    span = ElementSpan()
    for x in xs:
        span.insert(x)
    return span.dim, span.reduced_basis()


def coordinates(x: WeylElement, basis: Sequence[WeylElement]) -> Optional[list[Scalar]]:
    """Coordinates of x in the given (independent) basis; None if outside."""
    span = ElementSpan()
    for b in basis:
        if span.insert(b) is None:
            raise NotInjective("basis elements are linearly dependent")
    return span.express(x)


# -- text forms -----------------------------------------------------------------
#
#   expr   := [('+'|'-')] term (('+'|'-') term)*
#   term   := atom ('*' atom)*
#   atom   := '(' scalar ')' | scalar | ('p'|'q') ['^' nat]
#
# An unparenthesised scalar is scanned greedily, so a coefficient with both a
# real and an imaginary part must be parenthesised ("(1+2i)*p"); formatting
# always does this, and parse_element ∘ format_element is the identity.


def _format_body(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("p" if i == 1 else f"p^{i}")
    if j:
        parts.append("q" if j == 1 else f"q^{j}")
    return "*".join(parts)


def format_element(x: WeylElement) -> str:
    if x.is_zero():
        return "0"
    pieces = []
    for (i, j) in sorted(x.terms, key=_term_order):
        c = x.terms[(i, j)]
        body = _format_body(i, j)
        if c.re and c.im:
            neg = False
            coeff = f"({format_scalar(c)})" if body else format_scalar(c)
        else:
            if c.im:
                neg = c.im < 0
                mag = Scalar(0, abs(c.im))
            else:
                neg = c.re < 0
                mag = Scalar(abs(c.re))
            coeff = format_scalar(mag)
        if body and coeff == "1":
            text = body
        elif body:
            text = f"{coeff}*{body}"
        else:
            text = coeff
        pieces.append((neg, text))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out


class _ElementParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ExprSyntaxError(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.peek() in (" ", "\t"):
            self.pos += 1

    def take_nat(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def atom(self) -> WeylElement:
        self.skip_ws()
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            try:
                value, self.pos = scan_scalar(self.text, self.pos)
            except ScalarSyntaxError as exc:
                raise ExprSyntaxError("bad scalar literal", exc.pos) from exc
            self.skip_ws()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return one.scale(value)
        if ch in ("p", "q"):
            self.pos += 1
            n = 1
            if self.peek() == "^":
                self.pos += 1
                n = self.take_nat()
            return WeylElement.monomial(n, 0) if ch == "p" else WeylElement.monomial(0, n)
        if not ch:
            self.error("unexpected end of input")
        try:
            value, self.pos = scan_scalar(self.text, self.pos)
        except ScalarSyntaxError as exc:
            raise ExprSyntaxError("bad scalar literal", exc.pos) from exc
        return one.scale(value)

    def term(self) -> WeylElement:
        value = self.atom()
        while True:
            self.skip_ws()
            if self.peek() != "*":
                return value
            self.pos += 1
            value = value * self.atom()

    def expr(self) -> WeylElement:
        self.skip_ws()
        if self.pos == len(self.text):
            self.error("empty element expression")
        sign = 1
        if self.peek() in "+-":
            # a leading sign belongs to the term unless it starts a scalar
            if self.peek() == "-" and self.text[self.pos + 1:self.pos + 2] not in ("i",) + tuple("0123456789"):
                sign = -1
                self.pos += 1
            elif self.peek() == "+":
                self.pos += 1
        total = self.term().scale(sign)
        while True:
            self.skip_ws()
            if self.pos == len(self.text):
                return total
            op = self.peek()
            if op not in "+-":
                self.error("expected '+' or '-'")
            self.pos += 1
            total = total + self.term().scale(-1 if op == "-" else 1)


def parse_element(text: str) -> WeylElement:
    return _ElementParser(text).expr()
