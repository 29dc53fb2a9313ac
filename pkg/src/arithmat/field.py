"""Number-field contexts from essential pairs, and arithmetic matrices.

A field context is built from a pair (a0, B) where B is an irreducible
integer binary form of degree n whose discriminant equals a0^2 times the
field discriminant, with a0^2 | a1 and a0 | a2.  The context fixes the
integral basis

    omega_0 = 1,  omega_1 = (a1/a0) * zeta,
    omega_j = a1*zeta^j + a2*zeta^(j-1) + ... + aj*zeta   (j >= 2)

where zeta is a root of B(x, 1).  Multiplication by an element alpha with
coordinates (x0, ..., x_{n-1}) over this basis is encoded in an n x n matrix
whose first column is the coordinate vector; the remaining entries are
integer-coefficient polynomials in the coordinates.  Two constructions are
provided: the explicit entry formulas, and substitution of x1/a0 into the
a0 = 1 matrix followed by conjugation with diag(1, 1/a0, 1, ..., 1).  They
agree identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    DivisibilityError,
    FieldMismatchError,
    ReducibleFormError,
    ZeroDiscriminantError,
)
from .forms import BinaryForm, form_discriminant, irreducibility_certificate, is_irreducible
from .polyring import ExactMatrix, MultiPoly, UniPoly, format_rational, parse_rational

# Coordinate and coefficient letters used for symbolic displays of small
# degrees; higher degrees fall back to indexed names.
_COORD_LETTERS = ("u", "x", "y", "z", "w")
_COEFF_LETTERS = ("a", "b", "c", "d", "e", "f")

# Symbolic matrices use cofactor expansion downstream, so cap the degree.
SYMBOLIC_DEGREE_CAP = 16


class EssentialPair:
    """A scale factor a0 >= 1 together with a binary form."""

    __slots__ = ("a0", "form")

    def __init__(self, a0: int, form: BinaryForm):
        self.a0 = int(a0)
        self.form = form

    @classmethod
    def from_text(cls, text: str) -> EssentialPair:
        """Parse the 'a0:a1,a2,...' wire format."""
        head, _, tail = text.partition(":")
        if not tail:
            raise ValueError("pair format is 'a0:a1,a2,...'")
        return cls(int(head), BinaryForm.from_text(tail))

    def text(self) -> str:
        return f"{self.a0}:{self.form.text()}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, EssentialPair):
            return NotImplemented
        return self.a0 == other.a0 and self.form == other.form

    def __hash__(self):
        return hash((self.a0, self.form))

    def __repr__(self) -> str:
        return f"EssentialPair({self.a0}, {self.form!r})"


class NumberField:
    """Validated field context: pair, degree, and trusted discriminant."""

    __slots__ = ("pair", "n", "disc")

    def __init__(self, pair: EssentialPair, n: int, disc: int):
        self.pair = pair
        self.n = n
        self.disc = disc

    @property
    def a0(self) -> int:
        return self.pair.a0

    def coeff(self, k: int) -> int:
        """Form coefficient a_k, 1-indexed as written."""
        return self.pair.form.coeffs[k - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.pair == other.pair

    def __hash__(self):
        return hash(self.pair)

    def __repr__(self) -> str:
        return f"NumberField(disc={self.disc}, n={self.n}, pair={self.pair.text()!r})"

    def element(self, coords) -> Element:
        return Element(self, coords)

    def one(self) -> Element:
        return Element(self, [1] + [0] * (self.n - 1))

    def zero(self) -> Element:
        return Element(self, [0] * self.n)

    def basis_element(self, j: int) -> Element:
        coords = [0] * self.n
        coords[j] = 1
        return Element(self, coords)


class Element:
    """Coordinate vector over the omega-basis of a field context."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence):
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != field.n:
            raise DimensionMismatchError(
                f"expected {field.n} coordinates, got {len(cs)}"
            )
        self.field = field
        self.coords = cs

    @classmethod
    def from_text(cls, field: NumberField, text: str) -> Element:
        """Parse the 'x0,x1,...' wire format (entries int or p/q)."""
        return cls(field, [parse_rational(t) for t in text.split(",")])

    def text(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return f"Element({self.text()})"


def make_field(pair: EssentialPair) -> NumberField:
    """Validate an essential pair and return the field context.

    Checks, in order: positivity of a0, the divisibility conditions
    a0^2 | a1 and a0 | a2, a nonzero form discriminant divisible by a0^2,
    and irreducibility of the form.  Each failure raises its own error type.
    """
    a0 = pair.a0
    form = pair.form
    if a0 < 1:
        raise DivisibilityError("a0 must be a positive integer")
    a1, a2 = form.coeffs[0], form.coeffs[1]
    if a1 % (a0 * a0) != 0:
        raise DivisibilityError(f"a0^2 = {a0 * a0} does not divide a1 = {a1}")
    if a2 % a0 != 0:
        raise DivisibilityError(f"a0 = {a0} does not divide a2 = {a2}")
    D = form_discriminant(form)
    if D == 0:
        raise ZeroDiscriminantError("form has a repeated root")
    if D % (a0 * a0) != 0:
        raise DivisibilityError(
            f"form discriminant {D} is not divisible by a0^2 = {a0 * a0}"
        )
    if form.degree <= 5:
        if not is_irreducible(form):
            raise ReducibleFormError("form is reducible over the rationals")
    else:
        cert = irreducibility_certificate(form)
        if cert is not True:
            raise ReducibleFormError(
                "form is reducible or could not be certified irreducible"
            )
    return NumberField(pair, form.degree, D // (a0 * a0))


# ----------------------------------------------------------------------
# Matrix entry construction
# ----------------------------------------------------------------------


def _entries_standard(n: int, a, xs):
    """Entries for a0 = 1; a is 1-indexed (a[1]..a[n+1]), xs 0-indexed."""

    def entry(i, j):
        if j == 1:
            return xs[i - 1]
        if i == 1:
            return -a[n + 1] * sum(a[k] * xs[k + n - j] for k in range(1, j))
        if i > j:
            return sum(a[k] * xs[k + i - j - 1] for k in range(1, j))
        m = min(n - i + j, n + 1)
        acc = xs[0] if i == j else 0
        return acc - sum(a[k] * xs[k + i - j - 1] for k in range(j, m + 1))

    return [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _entries_generalized(n: int, a, a0: int, xs):
    """Explicit entries for a general pair; reduces to the standard ones at a0=1."""
    q0 = Fraction(1, a0)
    q00 = Fraction(1, a0 * a0)
    if n == 2:
        return [
            [xs[0], -(a[1] * a[3] * q00) * xs[1]],
            [xs[1], xs[0] - (a[2] * q0) * xs[1]],
        ]

    def entry(i, j):
        if j == 1:
            return xs[i - 1]
        if j == 2:
            if i == 1:
                return -(a[1] * a[n + 1] * q0) * xs[n - 1]
            if i == 2:
                return (
                    xs[0]
                    - (a[2] * q0) * xs[1]
                    - sum(a[k] * xs[k - 1] for k in range(3, n + 1))
                )
            if i == 3:
                return (a[1] * q00) * xs[1]
            return (a[1] * q0) * xs[i - 2]
        # j >= 3
        if i == 1:
            if j == n:
                return -(a[1] * a[n + 1] * q0) * xs[1] - a[n + 1] * sum(
                    a[k] * xs[k] for k in range(2, n)
                )
            return -a[n + 1] * sum(a[k] * xs[k + n - j] for k in range(1, j))
        if i == 2:
            return -a[j] * xs[1] - a0 * sum(
                a[k] * xs[k + 1 - j] for k in range(j + 1, n + 2)
            )
        if j <= i - 2:
            return sum(a[k] * xs[k + i - j - 1] for k in range(1, j))
        if j == i - 1:
            return (a[1] * q0) * xs[1] + sum(a[k] * xs[k] for k in range(2, i - 1))
        m = min(n - i + j, n + 1)
        acc = xs[0] if i == j else 0
        return acc - sum(a[k] * xs[k + i - j - 1] for k in range(j, m + 1))

    return [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _entries_substitution(n: int, a, a0: int, xs):
    """Generalized entries via x1 -> x1/a0 followed by diag(1, 1/a0, 1, ...) conjugation."""
    subbed = list(xs)
    subbed[1] = xs[1] * Fraction(1, a0)
    rows = _entries_standard(n, a, subbed)
    for j in range(n):
        rows[1][j] = rows[1][j] * a0
    for i in range(n):
        rows[i][1] = rows[i][1] * Fraction(1, a0)
    return rows


def _matrix_rows(n: int, coeffs, a0: int, xs, method: str = "explicit"):
    a = {k + 1: c for k, c in enumerate(coeffs)}
    if a0 == 1:
        return _entries_standard(n, a, list(xs))
    if method == "explicit":
        return _entries_generalized(n, a, a0, list(xs))
    if method == "substitution":
        return _entries_substitution(n, a, a0, list(xs))
    raise ValueError(f"unknown construction method {method!r}")


def _flatten(rows) -> ExactMatrix:
    n = len(rows)
    return ExactMatrix(n, n, [e for row in rows for e in row])


def arithmetic_matrix(F: NumberField, alpha: Element, method: str = "explicit") -> ExactMatrix:
    """The n x n multiplication matrix of alpha over the omega-basis.

    Column 1 carries alpha's coordinates; integer coordinates give integer
    entries and conversely.
    """
    if alpha.field != F:
        raise FieldMismatchError("element belongs to a different field")
    return _flatten(_matrix_rows(F.n, F.pair.form.coeffs, F.a0, alpha.coords, method))


def symbolic_coords(n: int) -> list[MultiPoly]:
    """Coordinate symbols: u, x, y, z, w for n <= 5, else x0..x_{n-1}."""
    if n <= len(_COORD_LETTERS):
        names = _COORD_LETTERS[:n]
    else:
        names = [f"x{i}" for i in range(n)]
    return [MultiPoly.var(nm) for nm in names]


def generic_form_coeffs(n: int) -> list[MultiPoly]:
    """Coefficient symbols a..f for n <= 5, else a1..a_{n+1}."""
    if n + 1 <= len(_COEFF_LETTERS):
        names = _COEFF_LETTERS[: n + 1]
    else:
        names = [f"a{k}" for k in range(1, n + 2)]
    return [MultiPoly.var(nm) for nm in names]


def symbolic_arithmetic_matrix(F: NumberField, method: str = "explicit") -> ExactMatrix:
    """Arithmetic matrix of F with symbolic coordinates (concrete coefficients)."""
    if F.n > SYMBOLIC_DEGREE_CAP:
        raise DimensionMismatchError(
            f"symbolic mode supports degree <= {SYMBOLIC_DEGREE_CAP}"
        )
    return _flatten(
        _matrix_rows(F.n, F.pair.form.coeffs, F.a0, symbolic_coords(F.n), method)
    )


def generic_arithmetic_matrix(n: int, a0: int = 1, method: str = "explicit") -> ExactMatrix:
    """Fully symbolic arithmetic matrix: generic coefficients and coordinates."""
    if n > SYMBOLIC_DEGREE_CAP:
        raise DimensionMismatchError(
            f"symbolic mode supports degree <= {SYMBOLIC_DEGREE_CAP}"
        )
    return _flatten(
        _matrix_rows(n, generic_form_coeffs(n), a0, symbolic_coords(n), method)
    )


def matrix_from_coefficients(coeffs, a0: int = 1, coords=None, method: str = "explicit") -> ExactMatrix:
    """Arithmetic matrix for raw coefficient values, without field validation.

    Useful for polynomial identities that hold for arbitrary forms (covariant
    derivations run here with symbolic or concrete coefficients alike).
    Coordinates default to the symbolic letters.
    """
    n = len(coeffs) - 1
    if coords is None:
        coords = symbolic_coords(n)
    if len(coords) != n:
        raise DimensionMismatchError(f"expected {n} coordinates")
    return _flatten(_matrix_rows(n, list(coeffs), a0, list(coords), method))


# ----------------------------------------------------------------------
# Basis data
# ----------------------------------------------------------------------


def basis_change_matrix(F: NumberField) -> ExactMatrix:
    """Rational matrix sending omega-basis coordinates to zeta-power coefficients.

    Row 1 is e1; for i >= 2 the (i, j) entry is a_{j-i+1}, with the (2, 2)
    entry scaled to a1/a0.  The matrix is upper triangular and invertible.
    """
    n = F.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[0][0] = Fraction(1)
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            rows[i - 1][j - 1] = Fraction(F.coeff(j - i + 1))
    if n >= 2:
        rows[1][1] = Fraction(F.coeff(1), F.a0)
    return ExactMatrix.from_rows(rows)


def integral_basis_description(F: NumberField) -> list[UniPoly]:
    """The basis elements written as exact polynomials in zeta."""
    M = basis_change_matrix(F)
    return [UniPoly(M.column(j), "zeta") for j in range(F.n)]
