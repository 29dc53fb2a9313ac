"""Integer binary forms: evaluation, discriminants, irreducibility.

A degree-n binary form is stored as its coefficient tuple (a1, ..., a_{n+1})
with a1 the coefficient of x^n and a_{n+1} the coefficient of y^n.  Both end
coefficients must be nonzero, so the dehomogenization B(x, 1) always has
degree exactly n.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ArithmatError, UnsupportedDegreeError, ZeroPolynomialError
from .polyring import UniPoly, det_bareiss, sylvester_matrix

# Primes used for the sufficient irreducibility accept.  A form that is
# irreducible modulo any of these (with degree preserved) is irreducible.
_ACCEPT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class BinaryForm:
    """Integer binary form a1*x^n + a2*x^(n-1)*y + ... + a_{n+1}*y^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(int(c) for c in coeffs)
        if len(cs) < 3:
            raise UnsupportedDegreeError("binary forms need degree >= 2")
        if cs[0] == 0 or cs[-1] == 0:
            raise ZeroPolynomialError(
                "both end coefficients of a binary form must be nonzero"
            )
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_text(cls, text: str) -> BinaryForm:
        """Parse the 'a1,a2,...,a{n+1}' wire format (degree inferred)."""
        return cls([int(t) for t in text.split(",")])

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(tuple(-c for c in self.coeffs))

    def __repr__(self) -> str:
        return f"BinaryForm({', '.join(str(c) for c in self.coeffs)})"

    def dehomogenized(self, var: str = "x") -> UniPoly:
        """B(x, 1) as an exact univariate polynomial."""
        return UniPoly(list(reversed(self.coeffs)), var)

    def norm2(self) -> float:
        return math.sqrt(sum(c * c for c in self.coeffs))


def evaluate(B: BinaryForm, x: int, y: int) -> int:
    """Evaluate the form at an integer point."""
    n = B.degree
    total = 0
    for k, a in enumerate(B.coeffs, start=1):
        total += a * x ** (n + 1 - k) * y ** (k - 1)
    return total


def form_discriminant(B: BinaryForm) -> int:
    """Exact discriminant via the Sylvester determinant of B(x,1) and its derivative.

    The sign follows the degree: negated when n = 2, 3 (mod 4).  The division
    by the leading coefficient is always exact; a non-exact division would
    indicate a construction bug and raises.
    """
    n = B.degree
    f = B.dehomogenized()
    det = det_bareiss(sylvester_matrix(f, f.derivative()))
    s = 1 if n % 4 in (2, 3) else 0
    value = (-det if s else det) / Fraction(B.coeffs[0])
    if value.denominator != 1:
        raise ArithmatError(
            "discriminant division by the leading coefficient was not exact"
        )
    return int(value)


# ----------------------------------------------------------------------
# Irreducibility over the rationals
# ----------------------------------------------------------------------


def _content(cs) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
    return g or 1


def _primitive_monic_sign(cs: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive part, normalized to positive leading coefficient (high index)."""
    g = _content(cs)
    out = tuple(c // g for c in cs)
    if out[-1] < 0:
        out = tuple(-c for c in out)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _has_rational_root(cs: tuple[int, ...]) -> bool:
    # cs low-to-high, primitive, nonzero ends
    lead, const = cs[-1], cs[0]
    n = len(cs) - 1
    for q in _divisors(lead):
        for p in _divisors(const):
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                # f(sp/q) * q^n, evaluated in integers
                acc = 0
                for k, c in enumerate(cs):
                    acc += c * sp**k * q ** (n - k)
                if acc == 0:
                    return True
    return False


# -- arithmetic in GF(p)[x], coefficient lists low-to-high, trimmed ------


def _gfp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    # reduce modulo monic f
    df = len(f) - 1
    for k in range(len(out) - 1, df - 1, -1):
        c = out[k]
        if not c:
            continue
        out[k] = 0
        for j in range(df):
            out[k - df + j] = (out[k - df + j] - c * f[j]) % p
    return _gfp_trim(out)


def _gfp_powmod_x(e: int, f, p):
    """x^e modulo the monic polynomial f over GF(p)."""
    result = [1]
    if len(f) - 1 == 1:
        base = _gfp_trim([(-f[0]) % p])
    else:
        base = [0, 1]
    while e:
        if e & 1:
            result = _gfp_mulmod(result, base, f, p)
        base = _gfp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _gfp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b with b made monic
        inv = pow(b[-1], p - 2, p)
        b = [(c * inv) % p for c in b]
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1]
            da = len(a) - 1
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
            _gfp_trim(a)
        a, b = b, a
    return _gfp_trim(a)


def _gfp_is_irreducible(cs: tuple[int, ...], p: int) -> bool:
    """Rabin's irreducibility test for the reduction of cs modulo p."""
    if cs[-1] % p == 0:
        return False
    n = len(cs) - 1
    inv = pow(cs[-1] % p, p - 2, p)
    f = [(c * inv) % p for c in cs]
    # x^(p^n) == x mod f
    xq = _gfp_powmod_x(p**n, f, p)
    x_itself = [0, 1] if n > 1 else [(-f[0]) % p]
    if _gfp_trim([(a - b) % p for a, b in _pad_pair(xq, x_itself)]):
        return False
    for q in _prime_divisors(n):
        h = _gfp_powmod_x(p ** (n // q), f, p)
        diff = _gfp_trim([(a - b) % p for a, b in _pad_pair(h, x_itself)])
        if not diff:
            return False
        if len(_gfp_gcd(list(f), diff, p)) != 1:
            return False
    return True


def _pad_pair(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _prime_divisors(n: int) -> list[int]:
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


def _quadratic_factor_exists(cs: tuple[int, ...], bound: int) -> bool:
    """Search for an integer quadratic factor with coefficients up to bound."""
    f = UniPoly(cs)
    n = len(cs) - 1
    f1 = sum(cs)
    fm1 = sum(c if k % 2 == 0 else -c for k, c in enumerate(cs))
    for g2 in _divisors(cs[-1]):
        for g0 in _divisors(cs[0]):
            for sg0 in (g0, -g0):
                for g1 in range(-bound, bound + 1):
                    s1 = g2 + g1 + sg0
                    if s1 == 0 or (f1 % s1):
                        continue
                    sm1 = g2 - g1 + sg0
                    if sm1 == 0 or (fm1 % sm1):
                        continue
                    q, r = f.divmod(UniPoly((sg0, g1, g2)))
                    if r.is_zero():
                        return True
    return False


def is_irreducible(B: BinaryForm) -> bool:
    """Exact irreducibility of B(x,1) over the rationals, degrees 2 to 5.

    Rational roots are excluded first; degrees 4 and 5 then search for an
    integer quadratic factor with coefficients below a Mignotte-style bound.
    A fast sufficient accept (irreducibility modulo a small prime) runs before
    the exhaustive phase.
    """
    n = B.degree
    if n > 5:
        raise UnsupportedDegreeError(f"exact irreducibility supports degree <= 5, got {n}")
    cs = _primitive_monic_sign(tuple(reversed(B.coeffs)))
    if form_discriminant(B) == 0:
        return False
    if _has_rational_root(cs):
        return False
    if n <= 3:
        return True
    for p in _ACCEPT_PRIMES:
        if cs[-1] % p and _gfp_is_irreducible(cs, p):
            return True
    bound = (1 << n) * (1 + math.ceil(B.norm2()))
    return not _quadratic_factor_exists(cs, bound)


def irreducibility_certificate(B: BinaryForm):
    """Cheap one-sided test usable at any degree.

    Returns True when irreducibility is certified (mod-p accept), False when
    reducibility is certified (zero discriminant or a rational root), and
    None when undecided.
    """
    if B.degree <= 5:
        return is_irreducible(B)
    cs = _primitive_monic_sign(tuple(reversed(B.coeffs)))
    if form_discriminant(B) == 0:
        return False
    if _has_rational_root(cs):
        return False
    for p in _ACCEPT_PRIMES:
        if cs[-1] % p and _gfp_is_irreducible(cs, p):
            return True
    return None
