"""Endomorphisms and automorphisms of the Weyl algebra.

A morphism is determined by where p and q go, provided the images keep the
canonical commutation relation [P, Q] = 1; application then expands each
monomial as P^i Q^j.  Inverses are never *computed* from forward images
(deciding invertibility of an arbitrary endomorphism is exactly the open
Dixmier problem) — they exist on a morphism only when the construction
supplies them, as all the generators here do.

Implemented generators: the triangular automorphisms fixing p (resp. q),
weight scaling, ad-exponentials of locally nilpotent elements, the
unimodular linear substitutions with their translation part, and the two
explicit solvable automorphism-group families in exponential coordinates
(the unit s plays e^v, which quotients away their discrete kernels).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .elements import (WeylElement, bracket, format_element, one, p, q, zero)
from .errors import (BadParams, ExprSyntaxError, IndexMismatch, NotInvertible,
                     NotLocallyNilpotent, NotUnimodular, PreconditionFailed,
                     SizeMismatch, ZeroScale)
from .scalars import ONE, Scalar, ScalarSyntaxError, scan_scalar

__all__ = [
    "WeylMorphism", "identity_morphism", "phi", "phi_prime", "scale",
    "translation", "alpha1_hat", "alpha2_hat", "sl2_semidirect_aut",
    "apply", "compose", "invert", "exp_ad",
    "RGroupElement", "r_group_identity", "r_group_mul", "r_group_inv", "r_to_aut",
    "LTildeGroupElement", "ltilde_group_identity", "ltilde_group_mul",
    "ltilde_group_inv", "ltilde_to_aut",
    "parse_morphism",
]


def _apply_images(image_p: WeylElement, image_q: WeylElement, x: WeylElement) -> WeylElement:
    if x.is_zero():
        return zero
    max_i = max(i for (i, _) in x.terms)
    max_j = max(j for (_, j) in x.terms)
    powers_p = [one]
    for _ in range(max_i):
        powers_p.append(powers_p[-1] * image_p)
    powers_q = [one]
    for _ in range(max_j):
        powers_q.append(powers_q[-1] * image_q)
    total = zero
    for (i, j), c in x.terms.items():
        total = total + (powers_p[i] * powers_q[j]).scale(c)
    return total


class WeylMorphism:
    """An algebra endomorphism given by the images of p and q.

    `inverse`, when present, is the pair (image of p, image of q) under the
    inverse automorphism.
    """

    __slots__ = ("image_p", "image_q", "inverse")

    def __init__(self, image_p: WeylElement, image_q: WeylElement,
                 inverse: Optional[tuple[WeylElement, WeylElement]] = None):
        if bracket(image_p, image_q) != one:
            raise PreconditionFailed(
                "images do not satisfy the canonical commutation relation [P, Q] = 1")
        self.image_p = image_p
        self.image_q = image_q
        self.inverse = tuple(inverse) if inverse is not None else None
        if self.inverse is not None:
            inv_p, inv_q = self.inverse
            assert _apply_images(image_p, image_q, inv_p) == p
            assert _apply_images(image_p, image_q, inv_q) == q
            assert _apply_images(inv_p, inv_q, image_p) == p
            assert _apply_images(inv_p, inv_q, image_q) == q

    def __call__(self, x: WeylElement) -> WeylElement:
        return _apply_images(self.image_p, self.image_q, x)

    def is_identity(self) -> bool:
        return self.image_p == p and self.image_q == q

    def __eq__(self, other):
        if not isinstance(other, WeylMorphism):
            return NotImplemented
        return self.image_p == other.image_p and self.image_q == other.image_q

    def __hash__(self):
        return hash((self.image_p, self.image_q))

    def __repr__(self):
        return f"<WeylMorphism p -> {format_element(self.image_p)}, q -> {format_element(self.image_q)}>"


def identity_morphism() -> WeylMorphism:
    return WeylMorphism(p, q, inverse=(p, q))


def apply(m: WeylMorphism, x: WeylElement) -> WeylElement:
    """The image of x; multiplicative and bracket-preserving."""
    return m(x)


def compose(m1: WeylMorphism, m2: WeylMorphism) -> WeylMorphism:
    """The morphism applying m2 first, then m1."""
    inverse = None
    if m1.inverse is not None and m2.inverse is not None:
        back = invert(m2)
        inverse = (back(m1.inverse[0]), back(m1.inverse[1]))
    return WeylMorphism(m1(m2.image_p), m1(m2.image_q), inverse=inverse)


def invert(m: WeylMorphism) -> WeylMorphism:
    if m.inverse is None:
        raise NotInvertible("morphism carries no inverse images")
    return WeylMorphism(m.inverse[0], m.inverse[1], inverse=(m.image_p, m.image_q))


def phi(n: int, lam) -> WeylMorphism:
    """The automorphism fixing p with q ↦ q + λpⁿ; inverse has -λ."""
    if not isinstance(n, int) or n < 0:
        raise BadParams("exponent must be a natural number")
    lam = lam if isinstance(lam, Scalar) else Scalar(lam)
    pn = WeylElement.monomial(n, 0)
    return WeylMorphism(p, q + pn.scale(lam), inverse=(p, q - pn.scale(lam)))


def phi_prime(n: int, lam) -> WeylMorphism:
    """The automorphism fixing q with p ↦ p + λqⁿ; inverse has -λ."""
    if not isinstance(n, int) or n < 0:
        raise BadParams("exponent must be a natural number")
    lam = lam if isinstance(lam, Scalar) else Scalar(lam)
    qn = WeylElement.monomial(0, n)
    return WeylMorphism(p + qn.scale(lam), q, inverse=(p - qn.scale(lam), q))


def scale(u) -> WeylMorphism:
    """p ↦ u⁻¹p, q ↦ uq; multiplies a monomial p^i q^j by u^{j-i}."""
    u = u if isinstance(u, Scalar) else Scalar(u)
    if not u:
        raise ZeroScale("scaling unit must be nonzero")
    v = u.inverse()
    return WeylMorphism(p.scale(v), q.scale(u), inverse=(p.scale(u), q.scale(v)))


def translation(b1, b2) -> WeylMorphism:
    """p ↦ p - b₁, q ↦ q + b₂ — the ad-exponential of b₁q + b₂p."""
    b1 = b1 if isinstance(b1, Scalar) else Scalar(b1)
    b2 = b2 if isinstance(b2, Scalar) else Scalar(b2)
    return WeylMorphism(p - one.scale(b1), q + one.scale(b2),
                        inverse=(p + one.scale(b1), q - one.scale(b2)))


alpha2_hat = translation


def alpha1_hat(g: Sequence[Sequence]) -> WeylMorphism:
    """The unimodular linear substitution p ↦ a₂q + a₄p, q ↦ a₁q + a₃p."""
    (a1, a2), (a3, a4) = g
    a1, a2, a3, a4 = (x if isinstance(x, Scalar) else Scalar(x) for x in (a1, a2, a3, a4))
    if a1 * a4 - a2 * a3 != ONE:
        raise NotUnimodular("matrix parameter must have determinant 1")
    return WeylMorphism(q.scale(a2) + p.scale(a4), q.scale(a1) + p.scale(a3),
                        inverse=(q.scale(-a2) + p.scale(a1), q.scale(a4) + p.scale(-a3)))


def sl2_semidirect_aut(g: Sequence[Sequence], b: Sequence) -> WeylMorphism:
    """The automorphism α̂₁(g)∘α̂₂(b) of the unimodular-affine family."""
    return compose(alpha1_hat(g), translation(b[0], b[1]))


def exp_ad(z: WeylElement, x: WeylElement, max_iter: int = 64) -> WeylElement:
    """Σ ad(z)^k(x)/k!, summed until the iterated bracket vanishes.

    Division by k! is exact; if no power of ad(z) kills x within max_iter
    steps the element is reported as (locally) non-nilpotent on x.
    """
    total = x
    term = x
    for k in range(1, max_iter + 1):
        term = bracket(z, term) / k
        if term.is_zero():
            return total
        total = total + term
    raise NotLocallyNilpotent(format_element(z), max_iter)


# -- the solvable automorphism group families, in exponential coordinates -----


class RGroupElement:
    """A point (a₁,…,a_n, s) of the diagonal-times-unipotent family.

    The indices i₁<…<i_n are fixed positive integers attached to the group;
    s is the exponential coordinate (a unit standing for e^v).
    """

    __slots__ = ("indices", "a", "s")

    def __init__(self, indices: Sequence[int], a: Sequence, s):
        idx = tuple(indices)
        if not all(isinstance(i, int) and i >= 1 for i in idx):
            raise BadParams("indices must be positive integers")
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise BadParams("indices must be strictly increasing")
        if len(a) != len(idx):
            raise IndexMismatch("one coordinate per index required")
        self.indices = idx
        self.a = tuple(x if isinstance(x, Scalar) else Scalar(x) for x in a)
        self.s = s if isinstance(s, Scalar) else Scalar(s)
        if not self.s:
            raise ZeroScale("exponential coordinate must be a unit")

    def __mul__(self, other):
        return r_group_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, RGroupElement):
            return NotImplemented
        return (self.indices, self.a, self.s) == (other.indices, other.a, other.s)

    def __hash__(self):
        return hash((self.indices, self.a, self.s))

    def __repr__(self):
        return f"RGroupElement({self.indices}, {self.a}, s={self.s})"


def r_group_identity(indices: Sequence[int]) -> RGroupElement:
    return RGroupElement(indices, [Scalar(0)] * len(tuple(indices)), ONE)


def r_group_mul(g: RGroupElement, h: RGroupElement) -> RGroupElement:
    if g.indices != h.indices:
        raise IndexMismatch("group elements carry different index lists")
    a = [ga + ha * g.s ** (-ik) for ga, ha, ik in zip(g.a, h.a, g.indices)]
    return RGroupElement(g.indices, a, g.s * h.s)


def r_group_inv(g: RGroupElement) -> RGroupElement:
    a = [-ga * g.s ** ik for ga, ik in zip(g.a, g.indices)]
    return RGroupElement(g.indices, a, g.s.inverse())


def _r_images(g: RGroupElement) -> tuple[WeylElement, WeylElement]:
    shift = zero
    for ak, ik in zip(g.a, g.indices):
        shift = shift + WeylElement.monomial(ik - 1, 0).scale(ak / _factorial(ik - 1))
    return p.scale(g.s.inverse()), (q + shift).scale(g.s)


def _factorial(n: int) -> Scalar:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return Scalar(out)


def r_to_aut(g: RGroupElement) -> WeylMorphism:
    """p ↦ s⁻¹p, q ↦ s(q + Σ a_k/(i_k-1)!·p^{i_k-1}); a group homomorphism."""
    return WeylMorphism(*_r_images(g), inverse=_r_images(r_group_inv(g)))


class LTildeGroupElement:
    """A point (a₁,…,a_n, t, s) of the extended family, s the unit for e^v."""

    __slots__ = ("a", "t", "s")

    def __init__(self, a: Sequence, t, s):
        if not a:
            raise BadParams("at least one a-coordinate required")
        self.a = tuple(x if isinstance(x, Scalar) else Scalar(x) for x in a)
        self.t = t if isinstance(t, Scalar) else Scalar(t)
        self.s = s if isinstance(s, Scalar) else Scalar(s)
        if not self.s:
            raise ZeroScale("exponential coordinate must be a unit")

    def __mul__(self, other):
        return ltilde_group_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, LTildeGroupElement):
            return NotImplemented
        return (self.a, self.t, self.s) == (other.a, other.t, other.s)

    def __hash__(self):
        return hash((self.a, self.t, self.s))

    def __repr__(self):
        return f"LTildeGroupElement({self.a}, t={self.t}, s={self.s})"


def ltilde_group_identity(n: int) -> LTildeGroupElement:
    return LTildeGroupElement([Scalar(0)] * n, Scalar(0), ONE)


def ltilde_group_mul(g: LTildeGroupElement, h: LTildeGroupElement) -> LTildeGroupElement:
    if len(g.a) != len(h.a):
        raise SizeMismatch("group elements have different sizes")
    n = len(g.a)
    a = []
    for k in range(1, n + 1):
        total = g.a[k - 1] * h.s ** (n - k) + h.a[k - 1]
        for j in range(1, k):
            total = total + (g.t ** (k - j) / _factorial(k - j)) * h.a[j - 1] * h.s ** (-(k - j))
        a.append(total)
    return LTildeGroupElement(a, h.t + g.t * h.s.inverse(), g.s * h.s)


def ltilde_group_inv(g: LTildeGroupElement) -> LTildeGroupElement:
    n = len(g.a)
    s_inv = g.s.inverse()
    a: list[Scalar] = []
    for k in range(1, n + 1):
        total = -g.a[k - 1] * s_inv ** (n - k)
        for j in range(1, k):
            total = total - (g.t ** (k - j) / _factorial(k - j)) * a[j - 1] * g.s ** (k - j)
        a.append(total)
    return LTildeGroupElement(a, -g.t * g.s, s_inv)


def _ltilde_images(g: LTildeGroupElement) -> tuple[WeylElement, WeylElement]:
    n = len(g.a)
    shift = zero
    for k in range(1, n):
        c = g.a[k - 1] * g.s ** (k - n) / _factorial(n - k - 1)
        shift = shift + WeylElement.monomial(n - k - 1, 0).scale(c)
    return p.scale(g.s.inverse()) + one.scale(g.t), (q + shift).scale(g.s)


def ltilde_to_aut(g: LTildeGroupElement) -> WeylMorphism:
    """p ↦ s⁻¹p + t, q ↦ s(q + Σ_{k<n} a_k s^{k-n}/(n-k-1)!·p^{n-k-1}).

    The last coordinate a_n acts trivially — it spans the connected part of
    the kernel, so the map factors through the quotient as expected.
    """
    return WeylMorphism(*_ltilde_images(g), inverse=_ltilde_images(ltilde_group_inv(g)))


# -- morphism literals ---------------------------------------------------------
#
#   chain   := literal (';' literal)*          applied left to right
#   literal := 'id' | name '(' scalar (',' scalar)* ')'
#
# with names phi, phiP, scale, alpha1, translate.  "phi(2,1); scale(i)" means:
# apply phi(2,1) first, then scale(i).


def _arity(args, n, name):
    if len(args) != n:
        raise ExprSyntaxError(f"{name} takes {n} argument(s), got {len(args)}")
    return args


def _nat_arg(args, k, name):
    v = args[k]
    if not v.is_integer() or v.re < 0:
        raise ExprSyntaxError(f"{name} needs a natural number in position {k + 1}")
    return int(v.re)


def _literal_phi(args):
    _arity(args, 2, "phi")
    return phi(_nat_arg(args, 0, "phi"), args[1])


def _literal_phi_prime(args):
    _arity(args, 2, "phiP")
    return phi_prime(_nat_arg(args, 0, "phiP"), args[1])


def _literal_alpha1(args):
    _arity(args, 4, "alpha1")
    return alpha1_hat(((args[0], args[1]), (args[2], args[3])))


_LITERALS = {
    "phi": _literal_phi,
    "phiP": _literal_phi_prime,
    "scale": lambda args: scale(*_arity(args, 1, "scale")),
    "translate": lambda args: translation(*_arity(args, 2, "translate")),
    "alpha1": _literal_alpha1,
}


def parse_morphism(text: str, extra=None) -> WeylMorphism:
    """Parse a ';'-chain of named generators, composed left to right."""
    table = dict(_LITERALS)
    if extra:
        table.update(extra)
    total = None
    for piece in text.split(";"):
        piece = piece.strip()
        if piece == "id":
            m = identity_morphism()
        else:
            head, sep, rest = piece.partition("(")
            name = head.strip()
            if name not in table:
                raise ExprSyntaxError(f"unknown morphism literal {name!r}")
            if not sep or not rest.rstrip().endswith(")"):
                raise ExprSyntaxError(f"expected {name}(...)")
            body = rest.rstrip()[:-1]
            args = []
            if body.strip():
                for chunk in body.split(","):
                    chunk = chunk.strip()
                    try:
                        value, end = scan_scalar(chunk)
                    except ScalarSyntaxError as exc:
                        raise ExprSyntaxError(f"bad scalar in {name}(...)", exc.pos) from exc
                    if chunk[end:].strip():
                        raise ExprSyntaxError(f"trailing input in argument of {name}(...)")
                    args.append(value)
            m = table[name](args)
        total = m if total is None else compose(m, total)
    if total is None:
        raise ExprSyntaxError("empty morphism expression")
    return total
