"""Spanning tree counts of I-graphs by three routes, plus the square split.

kirchhoff  - determinant of a principal Laplacian minor (matrix-tree); exact,
             the small-n oracle.
resultant  - tau = (-1)^((n-1)(k+l)) Res(1 + z + ... + z^(n-1), z^(k+l) P) / n
             with P = spectral_poly(k, l); exact for any n, and the default
             for large n.
chebyshev  - tau = (-1)^((n-1)(k+l)) n prod_s (T_n(w_s) - 1)/(w_s - 1) over
             the roots w_s of chebyshev_quotient(k, l); floating point with a
             rounding guard, mainly a numerically independent cross-check.

Every count tau is divisible by n, is at least n^3, and splits as
tau = multiplier * n * a^2 with multiplier 6 when n is even and the exact
value of P(-1) is 24 (both steps odd), 1 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt

import mpmath
from mpmath import mp

from .asymptotics import DEFAULT_PRECISION, poly_roots
from .bigmat import IntMatrix, determinant
from .errors import InternalInconsistency, NotASquare, PrecisionExhausted
from .igraph import GraphParams, laplacian_matrix
from .polyring import (
    all_ones_poly,
    chebyshev_quotient,
    chebyshev_t,
    chebyshev_u,
    resultant,
    spectral_poly,
)

ROUNDING_GUARD = 0.25


class TreeCountMethod(str, Enum):
    KIRCHHOFF = "kirchhoff"
    RESULTANT = "resultant"
    CHEBYSHEV = "chebyshev"


@dataclass(frozen=True)
class TreeCount:
    tau: int
    method: TreeCountMethod


@dataclass(frozen=True)
class Decomposition:
    """tau = multiplier * n * a**2."""

    a: int
    multiplier: int


def _sign(p: GraphParams) -> int:
    return -1 if ((p.n - 1) * (p.k + p.l)) % 2 else 1


def tree_count_kirchhoff(p: GraphParams) -> TreeCount:
    """Spanning trees as the determinant of the Laplacian with row and
    column 0 deleted."""
    lap = laplacian_matrix(p).to_lists()
    minor = IntMatrix([row[1:] for row in lap[1:]])
    det = determinant(minor)
    if det <= 0:
        raise InternalInconsistency(f"matrix-tree minor determinant {det} is not positive")
    return TreeCount(det, TreeCountMethod.KIRCHHOFF)


def tree_count_resultant(p: GraphParams) -> TreeCount:
    """Exact count via the resultant with the all-ones polynomial."""
    res = resultant(all_ones_poly(p.n), spectral_poly(p.k, p.l).to_poly())
    signed = _sign(p) * res
    tau, rem = divmod(signed, p.n)
    if rem or tau <= 0:
        raise InternalInconsistency(
            f"resultant {signed} is not a positive multiple of n={p.n}"
        )
    return TreeCount(tau, TreeCountMethod.RESULTANT)


@lru_cache(maxsize=None)
def _quotient_roots(k: int, l: int, precision_bits: int):
    return poly_roots(chebyshev_quotient(k, l), precision_bits).roots


def tree_count_chebyshev(
    p: GraphParams,
    precision_bits: int = DEFAULT_PRECISION,
    second_kind: bool = False,
) -> TreeCount:
    """Floating-point count from the Chebyshev closed formula, then rounded.

    Rounding is only accepted when the computed value sits within
    ROUNDING_GUARD of an integer (and its imaginary part is just as small);
    otherwise PrecisionExhausted asks the caller for more bits.

    second_kind evaluates the equivalent product n * |prod U_(n-1)(
    sqrt((1+w_s)/2))|^2 instead, as an extra cross-check.
    """
    roots = _quotient_roots(p.k, p.l, precision_bits)
    with mp.workprec(precision_bits + 64):
        if second_kind:
            acc = mp.mpc(1)
            for w in roots:
                acc *= chebyshev_u(p.n - 1, mpmath.sqrt((1 + mp.mpc(w)) / 2))
            value = p.n * abs(acc) ** 2
            distance = abs(value - mpmath.nint(value))
        else:
            acc = mp.mpc(1)
            for w in roots:
                acc *= (chebyshev_t(p.n, mp.mpc(w)) - 1) / (w - 1)
            signed = _sign(p) * p.n * acc
            value = mp.re(signed)
            distance = max(abs(value - mpmath.nint(value)), abs(mp.im(signed)))
        # once the unit in the last place reaches 1 every float is an
        # integer and the distance test below stops meaning anything
        if value != 0 and mpmath.mag(value) > mp.prec - 4:
            raise PrecisionExhausted(
                f"count magnitude 2^{mpmath.mag(value)} leaves no headroom "
                f"at {precision_bits} bits; increase precision_bits"
            )
        if distance >= ROUNDING_GUARD:
            raise PrecisionExhausted(
                f"pre-rounding distance {mpmath.nstr(distance, 8)} at "
                f"{precision_bits} bits; increase precision_bits"
            )
        tau = int(mpmath.nint(value))
    if tau <= 0:
        raise PrecisionExhausted(f"rounded count {tau} is not positive")
    return TreeCount(tau, TreeCountMethod.CHEBYSHEV)


def decompose(t: TreeCount, p: GraphParams) -> Decomposition:
    """Split tau as multiplier * n * a^2 with an exactness guarantee.

    The multiplier comes from the exact value of spectral_poly at z = -1:
    24 there (both steps odd) combines with even n to force the factor 6.
    """
    value_at_minus_one = spectral_poly(p.k, p.l)(Fraction(-1))
    if value_at_minus_one not in (4, 24):
        raise InternalInconsistency(
            f"spectral polynomial at -1 must be 4 or 24, got {value_at_minus_one}"
        )
    multiplier = 6 if (p.n % 2 == 0 and value_at_minus_one == 24) else 1
    base, rem = divmod(t.tau, multiplier * p.n)
    if rem:
        raise NotASquare(
            f"tau={t.tau} is not divisible by multiplier*n = {multiplier * p.n}"
        )
    a = isqrt(base)
    if a * a != base:
        raise NotASquare(f"tau/(multiplier*n) = {base} is not a perfect square")
    return Decomposition(a, multiplier)


def check_lower_bound(p: GraphParams, t: TreeCount) -> bool:
    """tau(n) >= n^3 for every connected I-graph."""
    return t.tau >= p.n**3


def sixfold_rule_report(samples) -> dict:
    """Which parity rule governs the multiplier 6 on even n?

    Published statements of the square split disagree on whether the factor 6
    attaches to even or odd k+l; the exact P(-1) criterion settles it.  Given
    (GraphParams, Decomposition) pairs, tally the even-n cases and report
    which labeling the data supports.
    """
    even_sum_six = even_sum_one = odd_sum_six = odd_sum_one = 0
    conflicts = []
    for p, dec in samples:
        if p.n % 2:
            if dec.multiplier != 1:
                conflicts.append((p, dec.multiplier))
            continue
        if (p.k + p.l) % 2 == 0:
            if dec.multiplier == 6:
                even_sum_six += 1
            else:
                even_sum_one += 1
        else:
            if dec.multiplier == 6:
                odd_sum_six += 1
            else:
                odd_sum_one += 1
    supports_even_sum = even_sum_one == 0 and odd_sum_six == 0
    supports_odd_sum = even_sum_six == 0 and odd_sum_one == 0
    if supports_even_sum and not supports_odd_sum:
        rule = "multiplier 6 iff n even and k+l even"
    elif supports_odd_sum and not supports_even_sum:
        rule = "multiplier 6 iff n even and k+l odd"
    else:
        rule = "inconclusive"
    return {
        "rule": rule,
        "even_n_cases": even_sum_six + even_sum_one + odd_sum_six + odd_sum_one,
        "six_with_even_sum": even_sum_six,
        "six_with_odd_sum": odd_sum_six,
        "odd_n_conflicts": conflicts,
    }
