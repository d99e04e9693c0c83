"""sl(2) triplets in the Weyl algebra and the group actions moving them.

The two basic families are the quadratic triplet (X = -q²/2, Y = p²/2,
H = pq - 1/2) and the one-parameter family X = (b+pq)q, Y = -p, H = 2pq+b,
together with a variant obtained by swapping the roles of the generators.
On top of them:

* formal words in the letters x, y, h, evaluated through a triplet — enough
  of the enveloping algebra to express the Casimir element and the
  substitution that produces the exotic triplet;
* the Casimir scalar of a triplet, an orbit invariant;
* the two-sided group action (α, g)·f = α ∘ f ∘ Ad(g)⁻¹ with the adjoint
  matrices written out over the basis (e₊, e₋, e₀);
* the isotropy morphisms of both families and a pointwise isotropy check;
* the exotic triplet built by substitution, with a report adjudicating
  between the two transposed expansions of its H that circulate in print;
* a truncated test for the weight ±2 eigenspace pattern D(H, ±2) = X·ℂ[H],
  Y·ℂ[H] characterising the orbit of the one-parameter family.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from . import morphisms
from .dixmier import eigenvectors_truncated
from .elements import (ElementSpan, WeylElement, bracket, format_element,
                       one, p, parse_element, q, zero)
from .errors import (BadParams, NonScalarCasimir, NotInBorel, NotInvertible,
                     NotUnimodular, RelationFailed)
from .morphisms import WeylMorphism
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Sl2Realization", "UWord", "SL2Element", "ExoticReport", "S11Side",
    "S11Report", "triplet_check", "f_I", "f_II", "f_II_variant",
    "eval_uword", "casimir_word", "casimir", "group_act", "alpha1_hat",
    "beta_hat", "isotropy_check", "exotic_g", "exotic_report", "s11_test",
    "u_x", "u_y", "u_h",
]


def _scalar(v) -> Scalar:
    return v if isinstance(v, Scalar) else Scalar(v)


class Sl2Realization(NamedTuple):
    """Images of the standard basis e₊, e₋, e₀; build via triplet_check."""

    X: WeylElement
    Y: WeylElement
    H: WeylElement


def triplet_check(X: WeylElement, Y: WeylElement, H: WeylElement) -> Sl2Realization:
    """Verify [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H exactly."""
    if X.is_zero() or Y.is_zero() or H.is_zero():
        raise RelationFailed("triplet members must be nonzero")
    if bracket(H, X) != X.scale(2):
        raise RelationFailed("[H,X] = 2X")
    if bracket(H, Y) != Y.scale(-2):
        raise RelationFailed("[H,Y] = -2Y")
    if bracket(X, Y) != H:
        raise RelationFailed("[X,Y] = H")
    return Sl2Realization(X, Y, H)


def f_I() -> Sl2Realization:
    """The quadratic triplet: X = -q²/2, Y = p²/2, H = pq - 1/2."""
    return triplet_check((q * q).scale(Fraction(-1, 2)),
                         (p * p).scale(Fraction(1, 2)),
                         p * q - one.scale(Fraction(1, 2)))


def f_II(b) -> Sl2Realization:
    """The one-parameter family: X = (b+pq)q, Y = -p, H = 2pq + b."""
    b = _scalar(b)
    return triplet_check((one.scale(b) + p * q) * q, -p,
                         (p * q).scale(2) + one.scale(b))


def f_II_variant(b) -> Sl2Realization:
    """The swapped variant: X = -q, Y = p(b+pq), H = 2pq + b."""
    b = _scalar(b)
    return triplet_check(-q, p * (one.scale(b) + p * q),
                         (p * q).scale(2) + one.scale(b))


# -- formal words --------------------------------------------------------------------


class UWord:
    """A finite sum of words in the letters x, y, h with scalar coefficients.

    Multiplication is concatenation; no reordering is attempted, since
    evaluation through a triplet multiplies in the Weyl algebra anyway.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[str, ...], Scalar]):
        self.terms = {w: c for w, c in terms.items() if c}

    @staticmethod
    def letter(ch: str) -> "UWord":
        if ch not in ("x", "y", "h"):
            raise BadParams("letters are x, y and h")
        return UWord({(ch,): ONE})

    def __add__(self, other: "UWord") -> "UWord":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return UWord(out)

    def __sub__(self, other: "UWord") -> "UWord":
        return self + other.scale(Scalar(-1))

    def __mul__(self, other: "UWord") -> "UWord":
        out: dict[tuple[str, ...], Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return UWord(out)

    def scale(self, c) -> "UWord":
        c = _scalar(c)
        return UWord({w: v * c for w, v in self.terms.items()})

    def __neg__(self) -> "UWord":
        return self.scale(Scalar(-1))

    def __eq__(self, other) -> bool:
        return isinstance(other, UWord) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "UWord(0)"
        parts = ["*".join(w) if w else "1" for w in sorted(self.terms)]
        return f"UWord({' + '.join(parts)})"


u_x = UWord.letter("x")
u_y = UWord.letter("y")
u_h = UWord.letter("h")


def casimir_word() -> UWord:
    """The Casimir element h²/2 + xy + yx."""
    return (u_h * u_h).scale(Fraction(1, 2)) + u_x * u_y + u_y * u_x


def eval_uword(r: Sl2Realization, w: UWord) -> WeylElement:
    """Substitute the triplet images for the letters and multiply."""
    sub = {"x": r.X, "y": r.Y, "h": r.H}
    total = zero
    for word, c in w.terms.items():
        prod = one
        for ch in word:
            prod = prod * sub[ch]
        total = total + prod.scale(c)
    return total


def casimir(r: Sl2Realization) -> Scalar:
    """The scalar the Casimir element maps to; an orbit invariant."""
    v = eval_uword(r, casimir_word())
    if not v.is_scalar():
        raise NonScalarCasimir(
            "the Casimir image is not scalar; the input is not a triplet")
    return v.constant_term()


# -- the adjoint action --------------------------------------------------------------


class SL2Element:
    """A unimodular 2×2 matrix of scalars."""

    __slots__ = ("a1", "a2", "a3", "a4")

    def __init__(self, a1, a2, a3, a4):
        self.a1, self.a2, self.a3, self.a4 = (_scalar(v) for v in (a1, a2, a3, a4))
        if self.a1 * self.a4 - self.a2 * self.a3 != ONE:
            raise NotUnimodular("matrix must have determinant 1")

    @staticmethod
    def identity() -> "SL2Element":
        return SL2Element(1, 0, 0, 1)

    def inverse(self) -> "SL2Element":
        return SL2Element(self.a4, -self.a2, -self.a3, self.a1)

    def __neg__(self) -> "SL2Element":
        return SL2Element(-self.a1, -self.a2, -self.a3, -self.a4)

    def __mul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(self.a1 * other.a1 + self.a2 * other.a3,
                          self.a1 * other.a2 + self.a2 * other.a4,
                          self.a3 * other.a1 + self.a4 * other.a3,
                          self.a3 * other.a2 + self.a4 * other.a4)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SL2Element)
                and (self.a1, self.a2, self.a3, self.a4)
                == (other.a1, other.a2, other.a3, other.a4))

    def __repr__(self):
        return f"SL2Element({self.a1!r}, {self.a2!r}, {self.a3!r}, {self.a4!r})"


def _ad_rows(g: SL2Element) -> list[tuple[Scalar, Scalar, Scalar]]:
    """Coefficients of Ad(g)(e₊), Ad(g)(e₋), Ad(g)(e₀) over (e₊, e₋, e₀)."""
    a1, a2, a3, a4 = g.a1, g.a2, g.a3, g.a4
    return [
        (a1 * a1, -(a3 * a3), -(a1 * a3)),
        (-(a2 * a2), a4 * a4, a2 * a4),
        (a1 * a2 * Scalar(-2), a3 * a4 * Scalar(2), a1 * a4 + a2 * a3),
    ]


def group_act(alpha: WeylMorphism, g: SL2Element, r: Sl2Realization) -> Sl2Realization:
    """(α, g)·f = α ∘ f ∘ Ad(g)⁻¹, returned as a checked triplet."""
    if alpha.inverse is None:
        raise NotInvertible("the action needs an invertible substitution")
    rows = _ad_rows(g.inverse())
    imgs = []
    for cx, cy, ch in rows:
        imgs.append(alpha(r.X.scale(cx) + r.Y.scale(cy) + r.H.scale(ch)))
    return triplet_check(*imgs)


def alpha1_hat(g: SL2Element) -> WeylMorphism:
    """The linear substitution intertwining the quadratic triplet with Ad(g)."""
    m = morphisms.alpha1_hat(((g.a1, g.a2), (g.a3, g.a4)))
    base = f_I()
    rows = _ad_rows(g)
    for img, (cx, cy, ch) in zip(base, rows):
        assert m(img) == base.X.scale(cx) + base.Y.scale(cy) + base.H.scale(ch)
    return m


def beta_hat(g: SL2Element) -> WeylMorphism:
    """The substitution p ↦ p/a₁², q ↦ a₁²q - a₁a₃ for lower-triangular g."""
    if g.a2:
        raise NotInBorel("the matrix must be lower triangular")
    a1, a3 = g.a1, g.a3
    s = a1 * a1
    si = s.inverse()
    m = WeylMorphism(p.scale(si), q.scale(s) - one.scale(a1 * a3),
                     inverse=(p.scale(s), q.scale(si) + one.scale(a3 * a1.inverse())))
    base = f_II(1)
    rows = _ad_rows(g)
    for img, (cx, cy, ch) in zip(base, rows):
        assert m(img) == base.X.scale(cx) + base.Y.scale(cy) + base.H.scale(ch)
    return m


def isotropy_check(r: Sl2Realization, alpha: WeylMorphism, g: SL2Element) -> bool:
    """True iff (α, g) fixes the triplet componentwise."""
    acted = group_act(alpha, g, r)
    return acted.X == r.X and acted.Y == r.Y and acted.H == r.H


# -- the exotic triplet --------------------------------------------------------------


def _exotic_substitution() -> tuple[UWord, UWord, UWord]:
    wx = u_x
    wy = u_y + u_h * u_x + u_x * u_h - (u_x * u_x * u_x).scale(4)
    wh = u_h - (u_x * u_x).scale(4)
    return wx, wy, wh


def exotic_g() -> Sl2Realization:
    """The substituted triplet f_II(1) ∘ (x, y+hx+xh-4x³, h-4x²)."""
    base = f_II(1)
    wx, wy, wh = _exotic_substitution()
    return triplet_check(eval_uword(base, wx), eval_uword(base, wy),
                         eval_uword(base, wh))


class ExoticReport(NamedTuple):
    """Computed exotic triplet versus the printed closed forms.

    The X and Y expansions have a single printed form each; H circulates
    in two transposed variants, and exactly one of them should match the
    computed product — which one is recorded here.
    """

    realization: Sl2Realization
    x_matches: bool
    y_matches: bool
    h_candidates: tuple[WeylElement, WeylElement]
    h_matches: tuple[bool, bool]


def exotic_report() -> ExoticReport:
    r = exotic_g()
    x_ref = parse_element("q + p*q^2")
    y_ref = parse_element("-p + 4*p^2*q^3 - 4*p^3*q^6 + 12*p^2*q^5")
    h_a = parse_element("2*p*q - 4*p^2*q^4 + 1")
    h_b = parse_element("2*p*q + 1 - 4*p^4*q^2")
    return ExoticReport(r, r.X == x_ref, r.Y == y_ref, (h_a, h_b),
                        (r.H == h_a, r.H == h_b))


# -- the weight ±2 pattern -----------------------------------------------------------


class S11Side(NamedTuple):
    matches: bool
    eigen_dim: int
    pattern_dim: int
    witness: Optional[WeylElement]


class S11Report(NamedTuple):
    plus: S11Side
    minus: S11Side

    @property
    def in_pattern(self) -> bool:
        return self.plus.matches and self.minus.matches


def _pattern_span(factor: WeylElement, h: WeylElement, max_degree: int) -> list[WeylElement]:
    out = []
    t = factor
    while t.degree() <= max_degree:
        out.append(t)
        t = t * h
    return out


def _compare_side(h: WeylElement, lam: int, factor: WeylElement,
                  max_degree: int) -> S11Side:
    eig = eigenvectors_truncated(h, lam, max_degree)
    pattern = _pattern_span(factor, h, max_degree)
    eig_span = ElementSpan()
    for v in eig:
        eig_span.insert(v)
    pat_span = ElementSpan()
    for v in pattern:
        pat_span.insert(v)
    witness = next((v for v in eig if not pat_span.contains(v)), None)
    if witness is None:
        witness = next((v for v in pattern if not eig_span.contains(v)), None)
    return S11Side(witness is None, eig_span.dim, pat_span.dim, witness)


def s11_test(r: Sl2Realization, max_degree: int) -> S11Report:
    """Compare the truncated ±2 eigenspaces of ad(H) against X·ℂ[H], Y·ℂ[H].

    Equality up to the truncation degree is pattern evidence, not proof;
    a witness element is returned for whichever side fails.
    """
    return S11Report(_compare_side(r.H, 2, r.X, max_degree),
                     _compare_side(r.H, -2, r.Y, max_degree))
