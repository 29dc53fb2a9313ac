"""Exact polynomial arithmetic and exact linear algebra.

Univariate polynomials (UniPoly) are dense coefficient lists over Fraction,
multivariate polynomials (MultiPoly) are sparse maps from exponent tuples to
Fraction, and ExactMatrix is a dense matrix whose entries are either Fraction
scalars or MultiPoly values (symbolic mode).  Everything here is immutable
after construction and every operation is a pure function, so values can be
shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatchError,
    NonSquareMatrixError,
    SingularMatrixError,
    ZeroPolynomialError,
)

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse an integer or 'p/q' token into a Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Render a Fraction as 'n' or 'p/q'."""
    x = _frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ----------------------------------------------------------------------
# Univariate polynomials
# ----------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored low-to-high; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar], var: str = "x"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, var: str = "x") -> UniPoly:
        return cls((), var)

    @classmethod
    def constant(cls, c: Scalar, var: str = "x") -> UniPoly:
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "x") -> UniPoly:
        return cls((0, 1), var)

    @classmethod
    def from_text(cls, text: str, var: str = "x") -> UniPoly:
        """Parse the 'c0,c1,...,cd' wire format."""
        return cls([parse_rational(t) for t in text.split(",")], var)

    def text(self) -> str:
        """Serialize as 'c0,c1,...,cd' (low-to-high); zero is '0'."""
        if not self.coeffs:
            return "0"
        return ",".join(format_rational(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.constant(other, self.var)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coeff(k) + other.coeff(k) for k in range(n)], self.var
        )

    def __radd__(self, other) -> UniPoly:
        return self + other

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> UniPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        other = self._coerce(other)
        return poly_mul_schoolbook(self, other)

    def __rmul__(self, other) -> UniPoly:
        return self * other

    def __pow__(self, k: int) -> UniPoly:
        out = UniPoly.constant(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other, self.var)

    def __call__(self, x: Scalar):
        """Horner evaluation; works for any value supporting + and *."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.var
        )

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Exact rational division with remainder."""
        if other.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(self.var), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return UniPoly(quo, self.var), UniPoly(rem, self.var)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            elif k == 1:
                body = self.var if mag == 1 else f"{format_rational(mag)}*{self.var}"
            else:
                head = "" if mag == 1 else f"{format_rational(mag)}*"
                body = f"{head}{self.var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def poly_mul_schoolbook(p: UniPoly, q: UniPoly) -> UniPoly:
    """Exact convolution of coefficient sequences (the quadratic algorithm)."""
    if p.is_zero() or q.is_zero():
        return UniPoly.zero(p.var)
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return UniPoly(out, p.var)


# ----------------------------------------------------------------------
# Multivariate polynomials
# ----------------------------------------------------------------------


def _grlex_key(expt: tuple[int, ...]):
    # graded lexicographic, largest first
    return (-sum(expt), tuple(-e for e in expt))


class MultiPoly:
    """Sparse multivariate polynomial over Fraction coefficients.

    Variables are kept as a sorted tuple of names; terms map exponent tuples
    (aligned with the variable tuple) to nonzero coefficients.  Binary
    operations align the two variable sets by union, so polynomials over
    different variables combine transparently.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Scalar]):
        vs = tuple(sorted(variables))
        clean: dict[tuple[int, ...], Fraction] = {}
        for expt, c in terms.items():
            c = _frac(c)
            if c == 0:
                continue
            expt = tuple(expt)
            if len(expt) != len(vs):
                raise DimensionMismatchError(
                    f"exponent tuple {expt} does not match variables {vs}"
                )
            clean[expt] = clean.get(expt, Fraction(0)) + c
        self.vars = vs
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, c: Scalar, variables: Iterable[str] = ()) -> MultiPoly:
        vs = tuple(sorted(variables))
        return cls(vs, {(0,) * len(vs): c})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls((name,), {(1,): 1})

    @classmethod
    def variables(cls, names: str | Iterable[str]) -> list[MultiPoly]:
        """Convenience: MultiPoly.variables('a b c') -> [a, b, c]."""
        if isinstance(names, str):
            names = names.split()
        return [cls.var(n) for n in names]

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if non-constant)."""
        if not self.terms:
            return Fraction(0)
        if self.total_degree() > 0:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def is_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def _aligned(self, other: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        if self.vars == other.vars:
            return self, other
        union = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._embed(union), other._embed(union)

    def _embed(self, union: tuple[str, ...]) -> MultiPoly:
        if self.vars == union:
            return self
        pos = [union.index(v) for v in self.vars]
        terms = {}
        for expt, c in self.terms.items():
            new = [0] * len(union)
            for p, e in zip(pos, expt):
                new[p] = e
            terms[tuple(new)] = c
        return MultiPoly(union, terms)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other, self.vars)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        stripped = self.strip_unused()
        return hash((stripped.vars, tuple(sorted(stripped.terms.items()))))

    def __add__(self, other) -> MultiPoly:
        a, b = self._aligned(self._coerce(other))
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(a.vars, terms)

    def __radd__(self, other) -> MultiPoly:
        return self + other

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        a, b = self._aligned(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(a.vars, terms)

    def __rmul__(self, other) -> MultiPoly:
        return self * other

    def __truediv__(self, scalar) -> MultiPoly:
        s = _frac(scalar)
        return MultiPoly(self.vars, {e: c / s for e, c in self.terms.items()})

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(1, self.vars)
        base = self
        while k > 0:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point; every variable must be assigned."""
        vals = [_frac(point[v]) for v in self.vars]
        total = Fraction(0)
        for expt, c in self.terms.items():
            term = c
            for v, e in zip(vals, expt):
                if e:
                    term *= v**e
            total += term
        return total

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> MultiPoly:
        """Substitute polynomials (or scalars) for some of the variables."""
        images = {
            name: (val if isinstance(val, MultiPoly) else MultiPoly.const(val))
            for name, val in mapping.items()
        }
        keep = [v for v in self.vars if v not in images]
        out = MultiPoly.const(0, keep)
        for expt, c in self.terms.items():
            term = MultiPoly.const(c, keep)
            for v, e in zip(self.vars, expt):
                if not e:
                    continue
                factor = images.get(v, MultiPoly.var(v))
                term = term * factor**e
            out = out + term
        return out

    def diff(self, name: str) -> MultiPoly:
        """Partial derivative with respect to one variable."""
        if name not in self.vars:
            return MultiPoly.const(0, self.vars)
        i = self.vars.index(name)
        terms = {}
        for expt, c in self.terms.items():
            if expt[i] == 0:
                continue
            new = list(expt)
            new[i] -= 1
            terms[tuple(new)] = c * expt[i]
        return MultiPoly(self.vars, terms)

    def strip_unused(self) -> MultiPoly:
        """Drop variables that appear in no term."""
        used = [i for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
        vs = tuple(self.vars[i] for i in used)
        return MultiPoly(vs, {tuple(e[i] for i in used): c for e, c in self.terms.items()})

    # -- rendering -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]))

    def serialize(self) -> str:
        """Canonical wire format: sorted 'coeff*v^e*...' terms joined by '+'."""
        if not self.terms:
            return "0"
        parts = []
        for expt, c in self.sorted_terms():
            factors = [format_rational(c)]
            factors += [f"{v}^{e}" for v, e in zip(self.vars, expt) if e]
            parts.append("*".join(factors))
        return "+".join(parts)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expt, c in self.sorted_terms():
            mag = abs(c)
            factors = [f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, expt) if e]
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def collect_coeffs(p: MultiPoly, var: str) -> list[MultiPoly]:
    """Split p into coefficients of powers of var: p = sum c_i * var^i.

    The returned polynomials no longer mention var.  Raises on an unknown
    variable name.
    """
    if var not in p.vars:
        raise DimensionMismatchError(f"unknown variable {var!r}")
    i = p.vars.index(var)
    rest = tuple(v for v in p.vars if v != var)
    d = p.degree_in(var)
    buckets: list[dict[tuple[int, ...], Fraction]] = [dict() for _ in range(d + 1)]
    for expt, c in p.terms.items():
        stripped = tuple(e for j, e in enumerate(expt) if j != i)
        buckets[expt[i]][stripped] = c
    return [MultiPoly(rest, b) for b in buckets]


# ----------------------------------------------------------------------
# Exact matrices
# ----------------------------------------------------------------------


class ExactMatrix:
    """Dense matrix of exact scalars, or of MultiPoly entries in symbolic mode."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"need {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(
            e if isinstance(e, MultiPoly) else _frac(e) for e in entries
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise DimensionMismatchError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def is_symbolic(self) -> bool:
        return any(isinstance(e, MultiPoly) for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("matrix addition shape mismatch")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("matrix subtraction shape mismatch")
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError("matrix product shape mismatch")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    term = self.entries[i * self.cols + k] * other.entries[k * other.cols + j]
                    acc = term if acc is None else acc + term
                out.append(acc if acc is not None else Fraction(0))
        return ExactMatrix(self.rows, other.cols, out)

    def __mul__(self, scalar) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, [e * scalar for e in self.entries])

    __rmul__ = __mul__

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector, returned as a list."""
        if len(vector) != self.cols:
            raise DimensionMismatchError("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = None
            for k, v in enumerate(vector):
                term = self.entries[i * self.cols + k] * v
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else Fraction(0))
        return out

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def inverse(self) -> ExactMatrix:
        """Exact inverse via Gauss-Jordan elimination (rational entries only)."""
        if not self.is_square():
            raise NonSquareMatrixError("inverse of a non-square matrix")
        if self.is_symbolic():
            raise NonSquareMatrixError("symbolic inverse is not supported")
        n = self.rows
        aug = [
            list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return ExactMatrix.from_rows([row[n:] for row in aug])

    def trace(self):
        if not self.is_square():
            raise NonSquareMatrixError("trace of a non-square matrix")
        acc = None
        for i in range(self.rows):
            e = self.entries[i * self.cols + i]
            acc = e if acc is None else acc + e
        return acc if acc is not None else Fraction(0)

    def __repr__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)
        )


def det_bareiss(M: ExactMatrix) -> Fraction:
    """Fraction-free (Bareiss) determinant for rational-entry matrices."""
    if not M.is_square():
        raise NonSquareMatrixError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = [list(M.row(i)) for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) / prev
            rowi[k] = Fraction(0)
        prev = akk
    return sign * a[n - 1][n - 1]


def det_cofactor(M: ExactMatrix):
    """Cofactor-expansion determinant; works for symbolic (MultiPoly) entries."""
    if not M.is_square():
        raise NonSquareMatrixError("determinant of a non-square matrix")
    n = M.rows
    rows = [list(M.row(i)) for i in range(n)]

    def det(cols: tuple[int, ...], r: int):
        if not cols:
            return Fraction(1)
        acc = None
        for pos, c in enumerate(cols):
            e = rows[r][c]
            if not e:
                continue
            sub = det(cols[:pos] + cols[pos + 1 :], r + 1)
            term = e * sub
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    return det(tuple(range(n)), 0)


def det_exact(M: ExactMatrix):
    """Exact determinant: Bareiss for rational entries, cofactor for symbolic."""
    if M.is_symbolic():
        return det_cofactor(M)
    return det_bareiss(M)


def sylvester_matrix(p: UniPoly, q: UniPoly) -> ExactMatrix:
    """Sylvester matrix of two nonzero polynomials.

    The matrix is (deg p + deg q) square: deg q shifted rows of p's
    coefficients (highest first) followed by deg p shifted rows of q's.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomialError("Sylvester matrix needs nonzero polynomials")
    m, l = p.degree, q.degree
    size = m + l
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(l):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - i - l - 1))
    if size == 0:
        return ExactMatrix(0, 0, [])
    return ExactMatrix.from_rows(rows)


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant of p and q, the exact determinant of their Sylvester matrix."""
    return det_bareiss(sylvester_matrix(p, q))


def poly_discriminant(p: UniPoly) -> Fraction:
    """Discriminant of a univariate polynomial via the resultant with p'."""
    n = p.degree
    if n < 1:
        raise ZeroPolynomialError("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    dp = p.derivative()
    if dp.is_zero():
        return Fraction(0)
    return sign * resultant(p, dp) / p.leading()
