"""Classical covariants of cubic and quartic forms, syzygies, norm equations.

For a quartic form with coefficients (a, b, c, d, e) the determinant of the
multiplication matrix, rewritten in terms of the trace t via
u = (t + b*x + 2*c*y + 3*d*z)/4 and scaled by 256, collapses to

    t^4 - 2*G*t^2 - 8*H*t + F

with G, H, F ternary forms in the coordinates (x, y, z) of degrees 2, 3, 4.
G has an explicit classical expression; H and F are defined operationally by
this expansion (the t^3 coefficient cancels identically, which is what makes
the trace substitution work).  G and H restrict to the classical quartic
covariants and satisfy the invariant-theory syzygy with I and J.

For a cubic form the analogous objects are the Hessian Q, the Jacobian F,
Cayley's syzygy F^2 + 27*D*C^2 = 4*Q^3, and the norm-one equation
t^3 - 3*t*Q + F = 27.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArithmatError, UnsupportedDegreeError
from .field import matrix_from_coefficients, generic_form_coeffs
from .forms import BinaryForm, form_discriminant
from .polyring import MultiPoly, collect_coeffs, det_cofactor

_XYZ = ("x", "y", "z")


class TernaryForm:
    """A MultiPoly homogeneous in (x, y, z) of a declared degree.

    Coefficients may involve further symbols (the generic quartic letters),
    so homogeneity is checked in the x, y, z exponents only.
    """

    __slots__ = ("poly", "degree")

    def __init__(self, poly: MultiPoly, degree: int):
        idx = [poly.vars.index(v) for v in _XYZ if v in poly.vars]
        for expt in poly.terms:
            d = sum(expt[i] for i in idx)
            if d != degree:
                raise ArithmatError(
                    f"term of (x,y,z)-degree {d} in a declared degree-{degree} form"
                )
        self.poly = poly
        self.degree = degree

    def __call__(self, x, y, z):
        """Substitute values (scalars or MultiPoly) for x, y, z."""
        return self.poly.subs({"x": x, "y": y, "z": z})

    def coefficient(self, i: int, j: int, k: int):
        """Coefficient of x^i y^j z^k (a MultiPoly in any remaining symbols)."""
        out = self.poly
        for v, e in zip(_XYZ, (i, j, k)):
            if v in out.vars:
                split = collect_coeffs(out, v)
                out = split[e] if e < len(split) else MultiPoly.const(0)
            elif e:
                return MultiPoly.const(0)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, TernaryForm):
            return self.degree == other.degree and self.poly == other.poly
        return self.poly == other

    def __repr__(self) -> str:
        return f"TernaryForm(deg {self.degree}: {self.poly})"


def _require_degree(V: BinaryForm, n: int) -> None:
    if V.degree != n:
        raise UnsupportedDegreeError(f"expected a degree-{n} form, got {V.degree}")


def _binary_poly(coeffs) -> MultiPoly:
    """Binary form as a MultiPoly in (x, y); coefficients scalar or symbolic."""
    n = len(coeffs) - 1
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    return sum(
        (c * x ** (n + 1 - k) * y ** (k - 1) for k, c in enumerate(coeffs, start=1)),
        MultiPoly.const(0),
    )


# ----------------------------------------------------------------------
# Quartic forms
# ----------------------------------------------------------------------


def quartic_invariants(V: BinaryForm) -> tuple[int, int]:
    """The classical degree-2 and degree-3 invariants of a quartic form."""
    _require_degree(V, 4)
    a, b, c, d, e = V.coeffs
    i_inv = 12 * a * e - 3 * b * d + c * c
    j_inv = (
        72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c**3
    )
    return i_inv, j_inv


def _ghf_from_coeffs(coeffs) -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    """Expand 256 * det(N) under the trace substitution and collect t powers."""
    a, b, c, d, e = coeffs
    N = matrix_from_coefficients([a, b, c, d, e])
    det = det_cofactor(N)
    t = MultiPoly.var("t")
    x, y, z = (MultiPoly.var(v) for v in _XYZ)
    u_image = (t + b * x + 2 * c * y + 3 * d * z) * Fraction(1, 4)
    expanded = (256 * det).subs({"u": u_image})
    by_t = collect_coeffs(expanded, "t")
    by_t += [MultiPoly.const(0)] * (5 - len(by_t))
    if by_t[4] != 1 or by_t[3]:
        raise ArithmatError("trace substitution did not cancel as expected")
    g = -by_t[2] * Fraction(1, 2)
    h = -by_t[1] * Fraction(1, 8)
    f = by_t[0]
    return TernaryForm(g, 2), TernaryForm(h, 3), TernaryForm(f, 4)


def quartic_ghf(V: BinaryForm) -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    """The ternary forms G (deg 2), H (deg 3), F (deg 4) of a quartic form."""
    _require_degree(V, 4)
    forms = _ghf_from_coeffs(V.coeffs)
    for form in forms:
        if not form.poly.is_integer_coefficients():
            raise ArithmatError("covariant with non-integer coefficients")
    return forms


def quartic_ghf_generic() -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    """G, H, F over generic symbolic coefficients a..e."""
    return _ghf_from_coeffs(generic_form_coeffs(4))


def _quartic_syzygy_residual(coeffs) -> MultiPoly:
    g, h, _ = _ghf_from_coeffs(coeffs)
    a, b, c, d, e = coeffs
    i_inv = 12 * a * e - 3 * b * d + c * c
    j_inv = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c**3
    x = MultiPoly.var("x")
    g4 = g(x * x, x, 1)
    g6 = h(x * x, x, 1)
    v = _binary_poly(coeffs).subs({"y": 1})
    return g4**3 - 48 * i_inv * g4 * v**2 - 64 * j_inv * v**3 - 27 * g6**2


def quartic_syzygy_check(V: BinaryForm) -> bool:
    """Exact check of g4^3 - 48*I*g4*v^2 - 64*J*v^3 = 27*g6^2 for this quartic."""
    _require_degree(V, 4)
    return _quartic_syzygy_residual(V.coeffs).is_zero()


def quartic_syzygy_check_generic() -> bool:
    """The same syzygy as a polynomial identity in generic coefficients."""
    return _quartic_syzygy_residual(generic_form_coeffs(4)).is_zero()


def _quartic_norm_equation_residual(coeffs) -> MultiPoly:
    a, b, c, d, e = coeffs
    g, h, f = _ghf_from_coeffs(coeffs)
    N = matrix_from_coefficients([a, b, c, d, e])
    det = det_cofactor(N)
    u, x, y, z = (MultiPoly.var(v) for v in ("u", "x", "y", "z"))
    t_of_u = 4 * u - b * x - 2 * c * y - 3 * d * z
    rhs = t_of_u**4 - 2 * g.poly * t_of_u**2 - 8 * h.poly * t_of_u + f.poly
    return 256 * det - rhs


def quartic_norm_equation_check(V: BinaryForm) -> bool:
    """Exact check that 256*det(N) = t^4 - 2*G*t^2 - 8*H*t + F with t the trace."""
    _require_degree(V, 4)
    return _quartic_norm_equation_residual(V.coeffs).is_zero()


def quartic_norm_equation_check_generic() -> bool:
    return _quartic_norm_equation_residual(generic_form_coeffs(4)).is_zero()


def _quartic_hessian_residual(coeffs) -> MultiPoly:
    g, _, _ = _ghf_from_coeffs(coeffs)
    v = _binary_poly(coeffs)
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    hess = v.diff("x").diff("x") * v.diff("y").diff("y") - v.diff("x").diff("y") ** 2
    return g(x * x, x * y, y * y) + hess * Fraction(1, 3)


def quartic_hessian_identity_check(V: BinaryForm) -> bool:
    """Exact check of G(x^2, x*y, y^2) = -det(Hessian of V)/3."""
    _require_degree(V, 4)
    return _quartic_hessian_residual(V.coeffs).is_zero()


def quartic_hessian_identity_check_generic() -> bool:
    return _quartic_hessian_residual(generic_form_coeffs(4)).is_zero()


# ----------------------------------------------------------------------
# Cubic forms
# ----------------------------------------------------------------------


def cubic_covariants(C: BinaryForm):
    """Hessian and Jacobian covariants of a cubic form, as coefficient tuples.

    Returned as plain tuples because either covariant can have a zero end
    coefficient, which the BinaryForm type (a field-defining datum) forbids.
    Normalizations are the classical ones making Cayley's syzygy hold as
    F^2 + 27*D*C^2 = 4*Q^3.
    """
    _require_degree(C, 3)
    q_poly, f_poly = _cubic_covariant_polys(C.coeffs)
    return _poly_to_binary_coeffs(q_poly, 2), _poly_to_binary_coeffs(f_poly, 3)


def _cubic_covariant_polys(coeffs) -> tuple[MultiPoly, MultiPoly]:
    a, b, c, d = coeffs
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    q_poly = (
        (b * b - 3 * a * c) * x * x
        + (b * c - 9 * a * d) * x * y
        + (c * c - 3 * b * d) * y * y
    )
    cpoly = _binary_poly(coeffs)
    f_poly = cpoly.diff("x") * q_poly.diff("y") - cpoly.diff("y") * q_poly.diff("x")
    return q_poly, f_poly


def _poly_to_binary_coeffs(poly: MultiPoly, degree: int) -> tuple:
    out = []
    for k in range(degree, -1, -1):
        coeff = poly
        for v, e in (("x", k), ("y", degree - k)):
            if v in coeff.vars:
                split = collect_coeffs(coeff, v)
                coeff = split[e] if e < len(split) else MultiPoly.const(0)
            elif e:
                coeff = MultiPoly.const(0)
        if coeff.total_degree() == 0:
            val = coeff.constant_value()
            out.append(int(val) if val.denominator == 1 else val)
        else:
            out.append(coeff)
    return tuple(out)


def _cubic_syzygy_residual(coeffs) -> MultiPoly:
    a, b, c, d = coeffs
    q_poly, f_poly = _cubic_covariant_polys(coeffs)
    disc = (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b * b * c * c
        - 4 * a * c**3
        - 27 * a * a * d * d
    )
    cpoly = _binary_poly(coeffs)
    return f_poly**2 + 27 * disc * cpoly**2 - 4 * q_poly**3


def cubic_syzygy_check(C: BinaryForm) -> bool:
    """Exact check of Cayley's syzygy F^2 + 27*D*C^2 = 4*Q^3 for this cubic."""
    _require_degree(C, 3)
    return _cubic_syzygy_residual(C.coeffs).is_zero()


def cubic_syzygy_check_generic() -> bool:
    return _cubic_syzygy_residual(generic_form_coeffs(3)).is_zero()


def _cubic_norm_equation_residual(coeffs) -> MultiPoly:
    a, b, c, d = coeffs
    q_poly, f_poly = _cubic_covariant_polys(coeffs)
    N = matrix_from_coefficients([a, b, c, d])
    det = det_cofactor(N)
    u, x, y = (MultiPoly.var(v) for v in ("u", "x", "y"))
    t_of_u = 3 * u - b * x - 2 * c * y
    rhs = t_of_u**3 - 3 * t_of_u * q_poly + f_poly
    return 27 * det - rhs


def cubic_norm_equation_check(C: BinaryForm) -> bool:
    """Exact check that 27*det(N) = t^3 - 3*t*Q + F with t the trace."""
    _require_degree(C, 3)
    return _cubic_norm_equation_residual(C.coeffs).is_zero()


def cubic_norm_equation_check_generic() -> bool:
    return _cubic_norm_equation_residual(generic_form_coeffs(3)).is_zero()
