"""Exact integer (Laurent) polynomials and the family-specific constructions.

The central object is the bimonic Laurent polynomial

    spectral_poly(k, l) = (3 - z^k - z^-k)(3 - z^l - z^-l) - 1,

whose values at the n-th roots of unity multiply out to n times the spanning
tree count of I(n, k, l), together with its two derived forms: the companion
matrix of its monic normalization and the Chebyshev-substituted quotient in
w = (z + 1/z)/2.  Resultants are computed with the subresultant PRS, so all
arithmetic stays in Z.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from .bigmat import IntMatrix
from .errors import InternalInconsistency, InvalidParams, NotBimonic, ZeroPolynomial


def _trimmed(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    for c in cs:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("coefficients must be ints")
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if not cs:
        cs = [0]
    return tuple(cs)


class IntPoly:
    """Univariate integer polynomial, coefficients ascending by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _trimmed(coeffs))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPoly([0])
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def shifted(self, m: int) -> "IntPoly":
        """Multiply by x**m (m >= 0)."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero:
            return self
        return IntPoly((0,) * m + self.coeffs)

    def deflate(self, root: int) -> tuple["IntPoly", int]:
        """Synthetic division by (x - root); returns (quotient, remainder)."""
        if self.is_zero:
            raise ZeroPolynomial("cannot deflate the zero polynomial")
        rev = list(reversed(self.coeffs))
        out = [rev[0]]
        for c in rev[1:]:
            out.append(c + root * out[-1])
        rem = out.pop()
        return IntPoly(list(reversed(out))), rem

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"


class IntLaurentPoly:
    """Integer Laurent polynomial: coeffs ascending from exponent ``lo``."""

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int, coeffs):
        cs = [c for c in coeffs]
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be ints")
        while cs and cs[-1] == 0:
            cs.pop()
        while cs and cs[0] == 0:
            cs.pop(0)
            lo += 1
        if not cs:
            lo, cs = 0, [0]
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_bimonic(self) -> bool:
        """Both extreme coefficients equal to 1."""
        return len(self.coeffs) >= 2 and self.coeffs[0] == 1 and self.coeffs[-1] == 1

    def __call__(self, z):
        if isinstance(z, int) and not isinstance(z, bool):
            z = Fraction(z)
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z**self.lo

    def derivative(self) -> "IntLaurentPoly":
        terms = {}
        for i, c in enumerate(self.coeffs):
            e = self.lo + i
            if c and e:
                terms[e - 1] = c * e
        if not terms:
            return IntLaurentPoly(0, [0])
        lo = min(terms)
        hi = max(terms)
        return IntLaurentPoly(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    def to_poly(self) -> IntPoly:
        """The ordinary polynomial z^(-lo) * p, i.e. exponents reindexed from 0."""
        return IntPoly(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, IntLaurentPoly)
            and self.lo == other.lo
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def __repr__(self):
        return f"IntLaurentPoly(lo={self.lo}, coeffs={list(self.coeffs)!r})"


def _check_steps(k: int, l: int):
    for name, v in (("k", k), ("l", l)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidParams(f"{name} must be a positive int")
    if gcd(k, l) != 1:
        raise InvalidParams(f"steps must be coprime, got k={k}, l={l}")


def spectral_poly(k: int, l: int) -> IntLaurentPoly:
    """(3 - z^k - z^-k)(3 - z^l - z^-l) - 1, the eigenvalue-product polynomial.

    Its value at each n-th root of unity is the product of the paired
    Laplacian eigenvalues of I(n, k, l); it is bimonic of span 2(k+l), has a
    double root at z = 1, and its second derivative there is -2(k^2 + l^2).
    """
    _check_steps(k, l)
    terms: dict[int, int] = {}
    for e1, c1 in ((-k, -1), (0, 3), (k, -1)):
        for e2, c2 in ((-l, -1), (0, 3), (l, -1)):
            e = e1 + e2
            terms[e] = terms.get(e, 0) + c1 * c2
    terms[0] -= 1
    lo = -(k + l)
    hi = k + l
    return IntLaurentPoly(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])


def companion_matrix(p: IntLaurentPoly) -> IntMatrix:
    """Companion matrix of the monic normalization z^(-lo) * p.

    Requires p bimonic; the result is s x s for span s, with determinant
    (-1)^s (so +1 for even span) and characteristic polynomial z^(-lo) p(z).
    """
    if not p.is_bimonic:
        raise NotBimonic(f"extreme coefficients must be 1, got {p.coeffs[0]}, {p.coeffs[-1]}")
    s = len(p.coeffs) - 1
    rows = []
    for i in range(s - 1):
        row = [0] * s
        row[i + 1] = 1
        rows.append(row)
    rows.append([-c for c in p.coeffs[:-1]])
    return IntMatrix(rows)


def chebyshev_t_poly(n: int) -> IntPoly:
    """Coefficients of the degree-n Chebyshev polynomial of the first kind."""
    if n < 0:
        raise InvalidParams("n must be nonnegative")
    t0, t1 = IntPoly([1]), IntPoly([0, 1])
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, IntPoly((0,) + tuple(2 * c for c in t1.coeffs)) - t0
    return t1


def chebyshev_quotient(k: int, l: int) -> IntPoly:
    """((3 - 2T_k(w))(3 - 2T_l(w)) - 1) / (w - 1).

    This is spectral_poly after the substitution w = (z + 1/z)/2, with the
    known root at w = 1 divided out.  Degree k+l-1, leading coefficient
    2^(k+l), value -2(k^2 + l^2) at w = 1.
    """
    _check_steps(k, l)
    three = IntPoly([3])
    full = (three - 2 * chebyshev_t_poly(k)) * (three - 2 * chebyshev_t_poly(l)) - IntPoly([1])
    quot, rem = full.deflate(1)
    if rem != 0:
        raise InternalInconsistency("w = 1 must be a root before deflation")
    return quot


def _cheb_exact(n: int, x, second_kind: bool):
    one = x - x + 1 if not isinstance(x, int) else 1
    prev = one
    cur = (2 * x if second_kind else x) * one
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def chebyshev_t(n: int, x):
    """T_n(x), exact for int/Fraction input, mpmath otherwise.

    The numeric branch uses ((x+s)^n + (x-s)^n)/2 with s = sqrt(x^2-1) away
    from [-1, 1] and cos(n*acos x) inside it, at the caller's mp precision.
    """
    if n < 0:
        raise InvalidParams("n must be nonnegative")
    if isinstance(x, int) and not isinstance(x, bool) or isinstance(x, Fraction):
        return _cheb_exact(n, x, second_kind=False)
    x = mpmath.mpmathify(x)
    if isinstance(x, mpmath.mpc):
        s = mpmath.sqrt(x * x - 1)
        return ((x + s) ** n + (x - s) ** n) / 2
    if -1 <= x <= 1:
        return mpmath.cos(n * mpmath.acos(x))
    s = mpmath.sqrt(x * x - 1)
    return ((x + s) ** n + (x - s) ** n) / 2


def chebyshev_u(n: int, x):
    """U_n(x), exact for int/Fraction input, mpmath otherwise."""
    if n < 0:
        raise InvalidParams("n must be nonnegative")
    if isinstance(x, int) and not isinstance(x, bool) or isinstance(x, Fraction):
        return _cheb_exact(n, x, second_kind=True)
    x = mpmath.mpmathify(x)
    if x == 1:
        return type(x)(n + 1)
    if x == -1:
        return type(x)((n + 1) * (-1) ** n)
    if not isinstance(x, mpmath.mpc) and -1 < x < 1:
        theta = mpmath.acos(x)
        return mpmath.sin((n + 1) * theta) / mpmath.sin(theta)
    s = mpmath.sqrt(x * x - 1)
    return ((x + s) ** (n + 1) - (x - s) ** (n + 1)) / (2 * s)


def all_ones_poly(n: int) -> IntPoly:
    """1 + x + ... + x^(n-1); its roots are the nontrivial n-th roots of unity."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParams("n must be an int >= 2")
    return IntPoly([1] * n)


def _content(coeffs) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g if g else 1


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, ascending lists."""
    db = len(b) - 1
    lb = b[-1]
    r = a[:]
    e = (len(a) - 1) - db + 1
    while True:
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if dr < db or r == [0]:
            break
        lr = r[-1]
        shift = dr - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        r.pop()
        e -= 1
    if e > 0 and r != [0]:
        f = lb**e
        r = [c * f for c in r]
    return r


def _div_coeffs(coeffs: list[int], d: int) -> list[int]:
    out = []
    for c in coeffs:
        q, rem = divmod(c, d)
        if rem:
            raise InternalInconsistency("subresultant division was not exact")
        out.append(q)
    return out


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) over Z via the subresultant PRS (Collins/Brown-Traub).

    Follows the standard Sylvester-determinant convention, so for monic f it
    equals the product of g over the roots of f, and swapping the arguments
    multiplies by (-1)^(deg f * deg g).
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    s = 1
    a, b = list(f.coeffs), list(g.coeffs)
    if len(a) < len(b):
        if (len(a) % 2 == 0) and (len(b) % 2 == 0):  # both degrees odd
            s = -s
        a, b = b, a
    ca, cb = _content(a), _content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    gg = 1
    hh = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2 == 1) and (db % 2 == 1):
            s = -s
        r = _prem(a, b)
        if r == [0]:
            return 0  # common factor
        a = b
        b = _div_coeffs(r, gg * hh**delta)
        gg = a[-1]
        if delta:
            num, rem = divmod(gg**delta, hh ** (delta - 1))
            if rem:
                raise InternalInconsistency("subresultant h-update was not exact")
            hh = num
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    num, rem = divmod(b[0] ** da, hh ** (da - 1))
    if rem:
        raise InternalInconsistency("final subresultant division was not exact")
    return s * t * num
