"""Ring arithmetic on elements, implemented through their matrices.

The product of alpha and beta is read off by applying alpha's multiplication
matrix to beta's coordinate column (the matrix of a product is the product of
the matrices, and column 1 of a matrix is its element's coordinates).  Norm,
trace, inverse and the characteristic polynomial are the determinant, trace,
inverse-matrix column and characteristic polynomial of the same matrix.  An
independent resultant-based norm is provided as a cross-check oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, ZeroElementError
from .field import Element, NumberField, arithmetic_matrix, basis_change_matrix
from .polyring import ExactMatrix, UniPoly, det_exact, resultant


def _require_same_field(F: NumberField, *elements: Element) -> None:
    for e in elements:
        if e.field != F:
            raise FieldMismatchError("elements belong to different fields")


def add(F: NumberField, alpha: Element, beta: Element) -> Element:
    """Coordinate-wise sum."""
    _require_same_field(F, alpha, beta)
    return Element(F, [a + b for a, b in zip(alpha.coords, beta.coords)])


def sub(F: NumberField, alpha: Element, beta: Element) -> Element:
    _require_same_field(F, alpha, beta)
    return Element(F, [a - b for a, b in zip(alpha.coords, beta.coords)])


def scale(F: NumberField, c, alpha: Element) -> Element:
    _require_same_field(F, alpha)
    return Element(F, [Fraction(c) * a for a in alpha.coords])


def mul(F: NumberField, alpha: Element, beta: Element) -> Element:
    """Exact product: alpha's matrix applied to beta's coordinate column."""
    _require_same_field(F, alpha, beta)
    return Element(F, arithmetic_matrix(F, alpha).apply(list(beta.coords)))


def trace(F: NumberField, alpha: Element) -> Fraction:
    """Trace of alpha: the trace of its multiplication matrix."""
    _require_same_field(F, alpha)
    return arithmetic_matrix(F, alpha).trace()


def norm(F: NumberField, alpha: Element) -> Fraction:
    """Norm of alpha: the determinant of its multiplication matrix."""
    _require_same_field(F, alpha)
    return det_exact(arithmetic_matrix(F, alpha))


def norm_resultant_oracle(F: NumberField, alpha: Element) -> Fraction:
    """Independent norm: express alpha as P(zeta) and take Res(f, P) / a1^deg P."""
    _require_same_field(F, alpha)
    if alpha.is_zero():
        raise ZeroElementError("the zero element has no resultant norm")
    power_coeffs = basis_change_matrix(F).apply(list(alpha.coords))
    P = UniPoly(power_coeffs)
    f = F.pair.form.dehomogenized()
    return resultant(f, P) / Fraction(F.coeff(1)) ** P.degree


def inverse(F: NumberField, alpha: Element) -> Element:
    """Coordinates of 1/alpha: column 1 of the exact inverse matrix."""
    _require_same_field(F, alpha)
    if alpha.is_zero():
        raise ZeroElementError("cannot invert the zero element")
    inv = arithmetic_matrix(F, alpha).inverse()
    return Element(F, inv.column(0))


def char_poly(F: NumberField, alpha: Element) -> UniPoly:
    """Monic degree-n characteristic polynomial of alpha's matrix.

    Computed by the Faddeev-LeVerrier recurrence over exact rationals, which
    avoids symbolic determinants entirely.
    """
    _require_same_field(F, alpha)
    n = F.n
    N = arithmetic_matrix(F, alpha)
    ident = ExactMatrix.identity(n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = N
    c = -M.trace()
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        M = N @ (M + c * ident)
        c = -M.trace() / k
        coeffs[n - k] = c
    return UniPoly(coeffs)


def is_integral(F: NumberField, alpha: Element) -> bool:
    """True when every coordinate is a rational integer."""
    _require_same_field(F, alpha)
    return all(c.denominator == 1 for c in alpha.coords)


def evaluate_poly_at(F: NumberField, p: UniPoly, alpha: Element) -> Element:
    """Evaluate a rational polynomial at an element via Horner over mul()."""
    _require_same_field(F, alpha)
    acc = F.zero()
    for c in reversed(p.coeffs):
        acc = add(F, mul(F, acc, alpha), scale(F, c, F.one()))
    return acc
