"""Partition tests for Weyl-algebra elements.

Dixmier sorts the non-scalar elements of the algebra into five classes by
the behaviour of the inner derivation ad(x); only the first and third — the
locally nilpotent-ish and semisimple-ish ones — exponentiate to one-parameter
automorphism groups.  Full classification of an arbitrary element is out of
reach, so this module provides exactly what is decidable:

* a complete decision for elements of total degree at most two, through the
  determinant of ad of the quadratic part acting on span{p, q};
* a certified semi-decision for everything else, by watching whether the
  iterated ad-orbit of probe elements spans a finite-dimensional space;
* exact eigenvector searches [x, v] = λv in a truncated degree window; and
* the commuting-eigenvector power relation X₁^{|λ₂|} = a·X₂^{|λ₁|}.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .elements import (ElementSpan, WeylElement, bracket, coordinates,
                       linear_span_dim, one, p, q, wn_components, zero)
from .errors import (DegreeTooHigh, NoProportionality, PreconditionFailed,
                     ZeroElement)
from .linalg import nullspace
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "DixmierClass", "classify_low_degree",
    "FTestResult", "f_test",
    "eigenvectors_truncated",
    "ExponentiabilityReport", "is_exponentiable", "DEFAULT_PROBES",
    "power_relation",
]


class DixmierClass(NamedTuple):
    """A partition verdict with the evidence that produced it."""

    tag: str  # Delta1 | Delta3 | Scalar | Undetermined (Delta2/4/5 reserved)
    certificate: Optional[dict] = None


def classify_low_degree(x: WeylElement) -> DixmierClass:
    """Decide the partition class of an element of total degree ≤ 2.

    The quadratic grading component acts on span{p, q}; its 2×2 matrix is
    traceless, so the action is nilpotent exactly when the determinant
    vanishes (first class), and invertible-semisimple otherwise (third).
    Scalars sit outside the partition and are tagged as such.
    """
    comps = wn_components(x)
    if any(n > 2 for n in comps):
        raise DegreeTooHigh("no decision procedure above total degree 2")
    if x.is_scalar():
        return DixmierClass("Scalar")
    w2 = comps.get(2, zero)
    col_p = coordinates(bracket(w2, p), [p, q])
    col_q = coordinates(bracket(w2, q), [p, q])
    assert col_p is not None and col_q is not None
    matrix = [[col_p[0], col_q[0]], [col_p[1], col_q[1]]]
    assert matrix[0][0] + matrix[1][1] == ZERO
    det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    cert = {"matrix": matrix, "det": det}
    return DixmierClass("Delta1" if not det else "Delta3", cert)


class FTestResult(NamedTuple):
    """Outcome of the ad-orbit span test."""

    stabilized: bool
    dim: int
    iterations: int


def f_test(z: WeylElement, a: WeylElement, max_iter: int = 64) -> FTestResult:
    """Grow span{ad(z)^k(a) : k ≤ m} until it closes or the budget runs out.

    The span is ad(z)-stable as soon as one iterate fails to enlarge it, so
    a single non-growing step certifies stabilisation; conversely max_iter
    strictly growing steps certify that a is outside the finite-orbit part
    of ad(z) up to that bound.
    """
    span = ElementSpan()
    span.insert(a)
    cur = a
    for k in range(1, max_iter + 1):
        cur = bracket(z, cur)
        if span.insert(cur) is None:
            assert span.contains(bracket(z, cur))
            return FTestResult(True, span.dim, k)
    return FTestResult(False, span.dim, max_iter)


def _monomials_up_to(degree: int) -> list[tuple[int, int]]:
    out = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    out.sort(key=lambda m: (-(m[0] + m[1]), -m[0]))
    return out


def eigenvectors_truncated(x: WeylElement, lam, max_degree: int) -> list[WeylElement]:
    """All v of total degree ≤ max_degree with [x, v] = λ·v, exactly.

    The unknowns are the coefficients in the truncation window but the
    bracket equations are written untruncated, so every returned element
    satisfies the eigen-equation in the full algebra, not just modulo high
    degree.  Returns a canonical echelon basis (possibly empty).
    """
    lam = lam if isinstance(lam, Scalar) else Scalar(lam)
    unknowns = _monomials_up_to(max_degree)
    images = [bracket(x, WeylElement.monomial(i, j)) for (i, j) in unknowns]
    rows: dict[tuple[int, int], int] = {}
    for m in unknowns:
        rows.setdefault(m, len(rows))
    for img in images:
        for m in img.terms:
            rows.setdefault(m, len(rows))
    a = [[ZERO] * len(unknowns) for _ in rows]
    for c, (m, img) in enumerate(zip(unknowns, images)):
        for mono, coeff in img.terms.items():
            a[rows[mono]][c] = coeff
        a[rows[m]][c] = a[rows[m]][c] - lam
    basis = []
    for vec in nullspace(a):
        v = zero
        for c, m in enumerate(unknowns):
            if vec[c]:
                v = v + WeylElement.monomial(*m, coeff=vec[c])
        basis.append(v)
    return linear_span_dim(basis)[1]


class ExponentiabilityReport(NamedTuple):
    """Verdict of the exponentiability probe battery."""

    verdict: str  # yes | no_evidence | undetermined
    dixmier: Optional[DixmierClass] = None
    witness: Optional[WeylElement] = None
    max_iter: int = 0


DEFAULT_PROBES = (p, q, p * q, p * p, q * q)


def is_exponentiable(x: WeylElement, probes: Sequence[WeylElement] = DEFAULT_PROBES,
                     max_iter: int = 64) -> ExponentiabilityReport:
    """Decide or gather evidence on whether ad(x) exponentiates.

    Positive answers come from the low-degree decision procedure or from
    recognising a polynomial in p alone (or q alone), which acts locally
    nilpotently.  Negative evidence is a probe whose ad-orbit span keeps
    growing: such an element lies outside both exponentiable classes.
    """
    if x.is_zero():
        raise ZeroElement("the zero element has no partition class")
    if x.is_scalar():
        return ExponentiabilityReport("yes", DixmierClass("Scalar"), max_iter=max_iter)
    if x.is_poly_in_p() or x.is_poly_in_q():
        return ExponentiabilityReport(
            "yes", DixmierClass("Delta1", {"reason": "polynomial in a single generator"}),
            max_iter=max_iter)
    if x.degree() <= 2:
        return ExponentiabilityReport("yes", classify_low_degree(x), max_iter=max_iter)
    for probe in probes:
        if not f_test(x, probe, max_iter).stabilized:
            return ExponentiabilityReport("no_evidence", witness=probe, max_iter=max_iter)
    return ExponentiabilityReport("undetermined", max_iter=max_iter)


def _eigenvalue_of(h: WeylElement, x: WeylElement) -> Scalar:
    """The λ with [h, x] = λ·x; errors if x is not an exact eigenvector."""
    b = bracket(h, x)
    if b.is_zero():
        return ZERO
    lead = x.leading_monomial()
    lam = b.coeff(*lead) / x.coeff(*lead)
    if b != x.scale(lam):
        raise PreconditionFailed("input is not an ad-eigenvector of h")
    return lam


def power_relation(h: WeylElement, x1: WeylElement, x2: WeylElement):
    """For commuting ad(h)-eigenvectors, the forced relation X₁^{|λ₂|} = a·X₂^{|λ₁|}.

    Requires integer eigenvalues of the same sign (their product positive);
    returns (λ₁, λ₂, a) with the identity re-verified by exact expansion.
    A failure of proportionality cannot happen for genuine inputs and is
    reported as its own error.
    """
    if x1.is_zero() or x2.is_zero():
        raise ZeroElement("eigenvectors must be nonzero")
    lam1 = _eigenvalue_of(h, x1)
    lam2 = _eigenvalue_of(h, x2)
    for lam in (lam1, lam2):
        if not lam.is_integer():
            raise PreconditionFailed(f"eigenvalue {lam} is not a rational integer")
    if not bracket(x1, x2).is_zero():
        raise PreconditionFailed("the two eigenvectors do not commute")
    n1 = int(lam1.re)
    n2 = int(lam2.re)
    if n1 * n2 <= 0:
        raise PreconditionFailed("eigenvalues must be nonzero and of equal sign")
    p1 = x1 ** abs(n2)
    p2 = x2 ** abs(n1)
    lead = p2.leading_monomial()
    if p1.leading_monomial() != lead:
        raise NoProportionality("the two powers have different leading monomials")
    a = p1.coeff(*lead) / p2.coeff(*lead)
    if p1 != p2.scale(a):
        raise NoProportionality("the two powers are not proportional")
    return n1, n2, a
