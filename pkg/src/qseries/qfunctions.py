"""Constructors for the named q-series of the partition-congruence toolkit.

Everything here is built from three primitive expansions:

* the Euler product f_k = (q^k;q^k)_inf, expanded by the pentagonal
  number theorem;
* the Ramanujan theta f(-q^a, -q^b), expanded as a bilateral sum over
  triangular-number exponents;
* the cubic theta a(q) = sum over the triangular lattice of
  q^(m^2 + m*n + n^2).

Note on conventions: the one-argument "f(-q^k)" that appears alongside
two-argument thetas denotes the Euler product (q^k;q^k)_inf and is
produced by :func:`euler_f`, not by :func:`ramanujan_theta`.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from .series import EXACT, CoefficientRing, TruncatedSeries


class ThetaSpec(NamedTuple):
    """Exponent pair (a, b) of a theta series f(-q^a, -q^b)."""

    a: int
    b: int


def euler_f(k: int, order: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """The Euler product f_k = prod_{m>=1} (1 - q^{m*k}), truncated.

    Expanded by the pentagonal number theorem: the exponents are
    k*j*(3j-1)/2 for all integers j, with sign (-1)^j.
    """
    if k < 1:
        raise ValueError(f"Euler product index must be positive, got {k}")
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [0] * order
    coeffs[0] = 1
    j = 1
    while True:
        e = k * j * (3 * j - 1) // 2
        if e >= order:
            break
        s = -1 if j & 1 else 1
        coeffs[e] = s
        e = k * j * (3 * j + 1) // 2
        if e < order:
            coeffs[e] = s
        j += 1
    return TruncatedSeries(ring, coeffs)


def pk_series(k: int, order: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """The k-th power f_1^k; k = -1 gives the partition numbers p(n)."""
    if k == 0:
        raise ValueError("power index must be nonzero")
    return euler_f(1, order, ring) ** k


def ramanujan_theta(spec: ThetaSpec | tuple[int, int], order: int,
                    ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """The theta series f(-q^a, -q^b) = sum_n (-1)^n q^{a n(n+1)/2 + b n(n-1)/2}.

    The bilateral sum runs over all integers n; the loop stops once both
    the +n and -n exponents pass the truncation order, which they do
    monotonically for n >= 1.
    """
    a, b = spec
    if a < 1 or b < 1:
        raise ValueError(f"theta exponents must be positive, got ({a}, {b})")
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [0] * order
    coeffs[0] += 1  # n = 0
    n = 1
    while True:
        t_up = n * (n + 1) // 2
        t_dn = n * (n - 1) // 2
        e_pos = a * t_up + b * t_dn   # term at +n
        e_neg = a * t_dn + b * t_up   # term at -n
        if e_pos >= order and e_neg >= order:
            break
        s = -1 if n & 1 else 1
        if e_pos < order:
            coeffs[e_pos] += s
        if e_neg < order:
            coeffs[e_neg] += s
        n += 1
    return TruncatedSeries(ring, coeffs)


def septic_ABC(order: int, ring: CoefficientRing = EXACT
               ) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """The three theta quotients driving the 7-dissection of f_1:

    A = f(-q^3,-q^4)/f(-q^2),  B = f(-q^2,-q^5)/f(-q^2),
    C = f(-q,-q^6)/f(-q^2).

    All three have constant term 1.
    """
    den = euler_f(2, order, ring)
    a = ramanujan_theta((3, 4), order, ring).divide(den)
    b = ramanujan_theta((2, 5), order, ring).divide(den)
    c = ramanujan_theta((1, 6), order, ring).divide(den)
    return a, b, c


def borwein_a(k: int, order: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """The cubic theta a(q^k) = sum_{m,n} q^{k(m^2+mn+n^2)}, truncated.

    The quadratic form satisfies m^2+mn+n^2 >= 3*max(|m|,|n|)^2/4, which
    bounds the lattice box that can contribute below the truncation order.
    """
    if k < 1:
        raise ValueError(f"argument power must be positive, got {k}")
    if order < 1:
        raise ValueError("order must be positive")
    e_max = (order - 1) // k
    box = isqrt(4 * e_max // 3) + 1
    coeffs = [0] * order
    for m in range(-box, box + 1):
        mm = m * m
        for n in range(-box, box + 1):
            e = mm + m * n + n * n
            if e <= e_max:
                coeffs[k * e] += 1
    return TruncatedSeries(ring, coeffs)


def regular_series(ell: int, order: int,
                   ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Generating function of ell-regular partitions: f_ell / f_1."""
    if ell <= 1:
        raise ValueError(f"regularity index must exceed 1, got {ell}")
    return euler_f(ell, order, ring).divide(euler_f(1, order, ring))


def bipartition_series(s: int, t: int, order: int,
                       ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Generating function of (s,t)-regular bipartitions: f_s f_t / f_1^2.

    Coefficient n counts pairs (lambda, mu) with |lambda| + |mu| = n,
    lambda s-regular and mu t-regular.
    """
    if s <= 1 or t <= 1:
        raise ValueError(f"regularity indices must exceed 1, got ({s}, {t})")
    f1 = euler_f(1, order, ring)
    num = euler_f(s, order, ring) * euler_f(t, order, ring)
    return num.divide(f1).divide(f1)
