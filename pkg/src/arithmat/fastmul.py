"""Fast multiplication: counted matrix products and exact convolution.

The even-dimension matrix algorithm computes AB in m^3/2 + m^2 - m/2 scalar
multiplications by forming, for row i and column j,

    X[i][j] = sum_k (a[i][2k-1] + b[2k][j]) * (a[i][2k] + b[2k-1][j])
    Z[i][j] = sum_k (a[i][2k-1] - b[2k][j]) * (a[i][2k] - b[2k-1][j])

so that X + Z is twice a rank-one correction R_i + S_j and X - (X+Z)/2
recovers AB.  Z is only needed for j in {1, i}; the remaining corrections
follow from Y[i][j] = Y[i][1] + Y[1][j] - Y[1][1].  The recursive variant
splits into half-size blocks and uses the seven-product scheme, padding to an
even dimension at every level.

Polynomial products are computed by a number-theoretic transform: the
transform / pointwise product / inverse transform structure runs over roots
of unity modulo primes p = c * 2^k + 1, with enough primes that Chinese
remaindering reconstructs the exact integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NonIntegerEntryError,
)
from .field import Element, NumberField, arithmetic_matrix, basis_change_matrix
from .polyring import ExactMatrix, UniPoly


class MulCounter:
    """Running totals of scalar multiplications and additions."""

    __slots__ = ("scalar_mults", "scalar_adds")

    def __init__(self):
        self.scalar_mults = 0
        self.scalar_adds = 0

    def tally(self, mults: int = 0, adds: int = 0) -> None:
        self.scalar_mults += mults
        self.scalar_adds += adds

    def __repr__(self) -> str:
        return f"MulCounter(mults={self.scalar_mults}, adds={self.scalar_adds})"


def _int_rows(M: ExactMatrix) -> list[list[int]]:
    rows = []
    for i in range(M.rows):
        row = []
        for e in M.row(i):
            if isinstance(e, Fraction):
                if e.denominator != 1:
                    raise NonIntegerEntryError("integer matrix algorithm fed a fraction")
                row.append(e.numerator)
            elif isinstance(e, int):
                row.append(e)
            else:
                raise NonIntegerEntryError("integer matrix algorithm fed a symbolic entry")
        rows.append(row)
    return rows


def schoolbook_multiply(A: ExactMatrix, B: ExactMatrix, counter: MulCounter | None = None) -> ExactMatrix:
    """Plain cubic matrix product with exact counting (m*n*p multiplications)."""
    if A.cols != B.rows:
        raise DimensionMismatchError("matrix product shape mismatch")
    C = A @ B
    if counter is not None:
        counter.tally(
            mults=A.rows * A.cols * B.cols,
            adds=A.rows * (A.cols - 1) * B.cols,
        )
    return C


def ww_multiply(A: ExactMatrix, B: ExactMatrix, counter: MulCounter | None = None) -> ExactMatrix:
    """Counted even-dimension product; exact on integer matrices.

    The division in the correction step is an exact shift: X + Z is always
    even because the cross terms cancel.  Odd dimensions must be padded by
    the caller.
    """
    if not (A.is_square() and B.is_square() and A.rows == B.rows):
        raise DimensionMismatchError("need square matrices of equal dimension")
    m = A.rows
    if m % 2:
        raise DimensionMismatchError("dimension must be even; pad before calling")
    a = _int_rows(A)
    b = _int_rows(B)
    if counter is None:
        counter = MulCounter()
    h = m // 2

    def x_entry(i, j):
        acc = 0
        for k in range(h):
            acc += (a[i][2 * k] + b[2 * k + 1][j]) * (a[i][2 * k + 1] + b[2 * k][j])
        counter.tally(mults=h, adds=3 * h - 1)
        return acc

    def z_entry(i, j):
        acc = 0
        for k in range(h):
            acc += (a[i][2 * k] - b[2 * k + 1][j]) * (a[i][2 * k + 1] - b[2 * k][j])
        counter.tally(mults=h, adds=3 * h - 1)
        return acc

    X = [[x_entry(i, j) for j in range(m)] for i in range(m)]
    Z: dict[tuple[int, int], int] = {}
    Z[0, 0] = z_entry(0, 0)
    for i in range(1, m):
        Z[i, 0] = z_entry(i, 0)
        Z[i, i] = z_entry(i, i)

    Y = [[0] * m for _ in range(m)]
    for (i, j), z in Z.items():
        s = X[i][j] + z
        assert s % 2 == 0
        Y[i][j] = s // 2
        counter.tally(adds=1)
    for j in range(1, m):
        Y[0][j] = Y[0][0] + Y[j][j] - Y[j][0]
        counter.tally(adds=2)
    for i in range(1, m):
        for j in range(1, m):
            if i != j:
                Y[i][j] = Y[i][0] + Y[0][j] - Y[0][0]
                counter.tally(adds=2)

    out = [X[i][j] - Y[i][j] for i in range(m) for j in range(m)]
    counter.tally(adds=m * m)
    return ExactMatrix(m, m, out)


def ww_mult_count(m: int) -> int:
    """Scalar multiplications used by ww_multiply at even dimension m."""
    return m**3 // 2 + m * m - m // 2


# -- recursive seven-product variant -----------------------------------


def _blocks(rows, h):
    a11 = [r[:h] for r in rows[:h]]
    a12 = [r[h:] for r in rows[:h]]
    a21 = [r[:h] for r in rows[h:]]
    a22 = [r[h:] for r in rows[h:]]
    return a11, a12, a21, a22


def _badd(A, B, counter):
    counter.tally(adds=len(A) * len(A[0]) if A else 0)
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def _bsub(A, B, counter):
    counter.tally(adds=len(A) * len(A[0]) if A else 0)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def _rec(a, b, counter):
    m = len(a)
    if m <= 2:
        out = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                acc = 0
                for k in range(m):
                    acc += a[i][k] * b[k][j]
                out[i][j] = acc
        counter.tally(mults=m**3, adds=m * m * (m - 1))
        return out
    if m % 2:
        a = [row + [0] for row in a] + [[0] * (m + 1)]
        b = [row + [0] for row in b] + [[0] * (m + 1)]
        return [row[:m] for row in _rec(a, b, counter)[:m]]
    h = m // 2
    a11, a12, a21, a22 = _blocks(a, h)
    b11, b12, b21, b22 = _blocks(b, h)
    s1 = _badd(a21, a22, counter)
    s2 = _bsub(s1, a11, counter)
    s3 = _bsub(a11, a21, counter)
    s4 = _bsub(a12, s2, counter)
    t1 = _bsub(b12, b11, counter)
    t2 = _bsub(b22, t1, counter)
    t3 = _bsub(b22, b12, counter)
    t4 = _bsub(t2, b21, counter)
    p1 = _rec(a11, b11, counter)
    p2 = _rec(a12, b21, counter)
    p3 = _rec(s4, b22, counter)
    p4 = _rec(a22, t4, counter)
    p5 = _rec(s1, t1, counter)
    p6 = _rec(s2, t2, counter)
    p7 = _rec(s3, t3, counter)
    u1 = _badd(p1, p6, counter)
    u2 = _badd(u1, p7, counter)
    u3 = _badd(u1, p5, counter)
    c11 = _badd(p1, p2, counter)
    c12 = _badd(u3, p3, counter)
    c21 = _bsub(u2, p4, counter)
    c22 = _badd(u2, p5, counter)
    return [r1 + r2 for r1, r2 in zip(c11, c12)] + [
        r1 + r2 for r1, r2 in zip(c21, c22)
    ]


def _plain_rows(M: ExactMatrix) -> list[list]:
    """Rows as ints where possible (fast path), Fractions otherwise."""
    return [
        [
            e.numerator if isinstance(e, Fraction) and e.denominator == 1 else e
            for e in M.row(i)
        ]
        for i in range(M.rows)
    ]


def ww_recursive(A: ExactMatrix, B: ExactMatrix, counter: MulCounter | None = None) -> ExactMatrix:
    """Recursive seven-product multiplication for any square dimension.

    The block scheme uses no divisions, so rational entries are accepted.
    """
    if not (A.is_square() and B.is_square() and A.rows == B.rows):
        raise DimensionMismatchError("need square matrices of equal dimension")
    if counter is None:
        counter = MulCounter()
    m = A.rows
    if m == 0:
        return ExactMatrix(0, 0, [])
    rows = _rec(_plain_rows(A), _plain_rows(B), counter)
    return ExactMatrix(m, m, [e for row in rows for e in row])


# ----------------------------------------------------------------------
# Exact convolution over number-theoretic transforms
# ----------------------------------------------------------------------

# Primes c * 2^k + 1 with a primitive root, largest 2-adic headroom first.
_NTT_PRIMES: list[tuple[int, int]] = [
    (3221225473, 5),    # 3 * 2^30 + 1
    (2281701377, 3),    # 17 * 2^27 + 1
    (2013265921, 31),   # 15 * 2^27 + 1
    (1811939329, 13),   # 27 * 2^26 + 1
    (469762049, 3),     # 7 * 2^26 + 1
    (2113929217, 5),    # 63 * 2^25 + 1
    (167772161, 3),     # 5 * 2^25 + 1
    (754974721, 11),    # 45 * 2^24 + 1
    (998244353, 3),     # 119 * 2^23 + 1
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_small(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int) -> int:
    factors = _factor_small(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
        g += 1


def _extra_primes(k: int, needed: int, skip: set[int]) -> list[tuple[int, int]]:
    """Find more primes of the form c * 2^k + 1 when the table runs out."""
    out = []
    c = 1
    while len(out) < needed:
        p = c * (1 << k) + 1
        if p not in skip and p.bit_length() <= 62 and _is_prime(p):
            out.append((p, _primitive_root(p)))
        c += 2 if c > 1 else 1
    return out


def _ntt(a: list[int], p: int, root: int) -> None:
    """In-place iterative radix-2 transform modulo p."""
    n = len(a)
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            a[i], a[j] = a[j], a[i]
    length = 2
    while length <= n:
        w = pow(root, (p - 1) // length, p)
        half = length // 2
        for start in range(0, n, length):
            wn = 1
            for k in range(start, start + half):
                u = a[k]
                v = a[k + half] * wn % p
                a[k] = (u + v) % p
                a[k + half] = (u - v) % p
                wn = wn * w % p
        length *= 2


def _convolve_mod(F: list[int], G: list[int], size: int, p: int, g: int) -> list[int]:
    fa = [x % p for x in F] + [0] * (size - len(F))
    fb = [x % p for x in G] + [0] * (size - len(G))
    _ntt(fa, p, g)
    _ntt(fb, p, g)
    fa = [x * y % p for x, y in zip(fa, fb)]
    ginv = pow(g, p - 2, p)
    _ntt(fa, p, ginv)
    ninv = pow(size, p - 2, p)
    return [x * ninv % p for x in fa]


def _as_int(v) -> int:
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise NonIntegerEntryError("convolution inputs must be integers")
        return v.numerator
    return int(v)


def exact_convolve(F: list[int], G: list[int]) -> list[int]:
    """Exact integer convolution via transforms modulo several primes.

    The prime set is sized from the coefficient bound len * max|F| * max|G|
    and extended on demand, so the reconstruction is exact for any inputs.
    """
    F = [_as_int(v) for v in F]
    G = [_as_int(v) for v in G]
    if not F or not G:
        return []
    out_len = len(F) + len(G) - 1
    maxf = max(abs(v) for v in F)
    maxg = max(abs(v) for v in G)
    if maxf == 0 or maxg == 0:
        return [0] * out_len
    bound = min(len(F), len(G)) * maxf * maxg
    size = 1
    while size < out_len:
        size *= 2
    k = size.bit_length() - 1

    primes: list[tuple[int, int]] = []
    modulus = 1
    for p, g in _NTT_PRIMES:
        if (p - 1) % size == 0:
            primes.append((p, g))
            modulus *= p
            if modulus > 2 * bound:
                break
    if modulus <= 2 * bound:
        extra = _extra_primes(k, 1, {p for p, _ in primes})
        while modulus <= 2 * bound:
            primes.extend(extra)
            for p, _ in extra:
                modulus *= p
            if modulus > 2 * bound:
                break
            extra = _extra_primes(k, 1, {p for p, _ in primes})

    residue_sets = [_convolve_mod(F, G, size, p, g) for p, g in primes]

    # Chinese remaindering, mapped back to the symmetric range.
    out = []
    for idx in range(out_len):
        x = 0
        m = 1
        for (p, _), residues in zip(primes, residue_sets):
            r = residues[idx]
            t = (r - x) * pow(m % p, p - 2, p) % p
            x += m * t
            m *= p
        if x > m // 2:
            x -= m
        out.append(x)
    return out


# ----------------------------------------------------------------------
# Element multiplication through the transform pipeline
# ----------------------------------------------------------------------


def mul_via_fft(F: NumberField, alpha: Element, beta: Element) -> Element:
    """Multiply by converting to the power basis, convolving, and converting back.

    Coordinates are mapped to zeta-power coefficients through the basis-change
    matrix (denominators cleared), the coefficient sequences are convolved
    exactly, the result is reduced modulo the defining polynomial, and the
    triangular basis-change system is solved back to omega-coordinates.
    """
    if alpha.field != F or beta.field != F:
        raise FieldMismatchError("elements belong to different fields")
    AZ = basis_change_matrix(F)
    ca = AZ.apply(list(alpha.coords))
    cb = AZ.apply(list(beta.coords))
    da = lcm(*(c.denominator for c in ca))
    db = lcm(*(c.denominator for c in cb))
    ia = [int(c * da) for c in ca]
    ib = [int(c * db) for c in cb]
    conv = exact_convolve(ia, ib)
    prod = UniPoly([Fraction(v, da * db) for v in conv])
    f = F.pair.form.dehomogenized()
    _, reduced = prod.divmod(f)
    power_coeffs = [reduced.coeff(k) for k in range(F.n)]
    back = AZ.inverse().apply(power_coeffs)
    return Element(F, back)


def batch_multiply(
    F: NumberField,
    alpha: Element,
    betas: list[Element],
    strategy: str = "schoolbook",
    counter: MulCounter | None = None,
) -> list[Element]:
    """Multiply alpha by up to n elements at once as one matrix product.

    The multiplicand coordinates form the columns of a square matrix U and
    the result columns are read from N * U.  Strategies: 'schoolbook', 'ww'
    (even-padded counted algorithm), 'ww_recursive'.  All strategies agree
    exactly.
    """
    n = F.n
    if len(betas) > n:
        raise DimensionMismatchError(f"at most {n} multiplicands per batch")
    for b in betas:
        if b.field != F:
            raise FieldMismatchError("elements belong to different fields")
    if alpha.field != F:
        raise FieldMismatchError("elements belong to different fields")
    count = len(betas)
    padded = list(betas) + [F.zero()] * (n - count)
    N = arithmetic_matrix(F, alpha)
    U = ExactMatrix(
        n, n, [padded[j].coords[i] for i in range(n) for j in range(n)]
    )
    if strategy == "schoolbook":
        C = schoolbook_multiply(N, U, counter)
    elif strategy == "ww":
        m = n if n % 2 == 0 else n + 1
        if m != n:
            N = _pad_matrix(N, m)
            U = _pad_matrix(U, m)
        C = ww_multiply(N, U, counter)
    elif strategy == "ww_recursive":
        C = ww_recursive(N, U, counter)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return [Element(F, [C[i, j] for i in range(n)]) for j in range(count)]


def _pad_matrix(M: ExactMatrix, m: int) -> ExactMatrix:
    out = []
    for i in range(m):
        for j in range(m):
            out.append(M[i, j] if i < M.rows and j < M.cols else Fraction(0))
    return ExactMatrix(m, m, out)
