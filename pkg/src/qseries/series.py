"""Truncated formal power series in one variable q.

A :class:`TruncatedSeries` is a finite prefix c_0 .. c_{N-1} of a formal
power series, together with the coefficient ring the entries live in:
exact arbitrary-precision integers, or residues modulo m.  The order N
means the series is known modulo q^N; every operation propagates the
order it can actually guarantee, so downstream equality checks always
know how far they are valid.

All values are immutable after construction and every operation is a
pure function, so series can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


class SeriesError(Exception):
    """Base class for arithmetic errors on truncated series."""


class RingMismatchError(SeriesError):
    """Operands live in different coefficient rings."""


class NonUnitError(SeriesError):
    """A coefficient that must be a unit (for inversion/division) is not."""


class ValuationError(SeriesError):
    """A q-valuation precondition failed, or no known coefficients remain."""


@dataclass(frozen=True)
class CoefficientRing:
    """Coefficient domain: exact integers (modulus 0) or Z/m with m >= 2."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"modulus must be 0 or >= 2, got {self.modulus}")

    @property
    def exact(self) -> bool:
        return self.modulus == 0

    def normalize(self, v: int) -> int:
        return v % self.modulus if self.modulus else v

    def is_unit(self, v: int) -> bool:
        if self.modulus == 0:
            return v in (1, -1)
        return gcd(v, self.modulus) == 1

    def inverse(self, v: int) -> int:
        if self.modulus == 0:
            if v in (1, -1):
                return v
            raise NonUnitError(f"{v} is not invertible over the integers")
        try:
            return pow(v, -1, self.modulus)
        except ValueError:
            raise NonUnitError(
                f"{v} is not invertible modulo {self.modulus}"
            ) from None

    def __str__(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"


EXACT = CoefficientRing(0)


def mod_ring(m: int) -> CoefficientRing:
    """The residue ring Z/m."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return CoefficientRing(m)


class TruncatedSeries:
    """A power series prefix c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N).

    Coefficients are plain Python ints: signed and arbitrary-precision in
    the exact ring, normalized into [0, m) in a modular ring.  The dense
    representation is deliberate; inversion makes every series dense, so
    sparse storage would buy nothing here.
    """

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Sequence[int]):
        if len(coeffs) < 1:
            raise ValueError("a series needs a positive truncation order")
        m = ring.modulus
        if m:
            coeffs = tuple(c % m for c in coeffs)
        else:
            coeffs = tuple(coeffs)
        self.ring = ring
        self.order = len(coeffs)
        self.coeffs = coeffs

    # --- construction helpers -------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> TruncatedSeries:
        return cls(ring, [0] * order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> TruncatedSeries:
        return cls(ring, [1] + [0] * (order - 1))

    @classmethod
    def monomial(cls, ring: CoefficientRing, order: int, exponent: int,
                 coefficient: int = 1) -> TruncatedSeries:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        coeffs = [0] * order
        if exponent < order:
            coeffs[exponent] = coefficient
        return cls(ring, coeffs)

    # --- inspection ------------------------------------------------------

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} unknown: series is O(q^{self.order})")
        return self.coeffs[n]

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, or None if zero to order."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def first_mismatch(self, other: TruncatedSeries) -> tuple[int, int, int] | None:
        """First index below min(order) where the two series differ.

        Returns (index, own value, other value), or None if they agree on
        the whole shared window.
        """
        self._check_ring(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        for i in range(n):
            if a[i] != b[i]:
                return (i, a[i], b[i])
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.order > 8:
            shown += ", ..."
        return f"TruncatedSeries({self.ring}, [{shown}] + O(q^{self.order}))"

    def q_string(self, max_terms: int = 10) -> str:
        """Human-readable polynomial prefix, e.g. '1 - q - q^2 + q^5 + O(q^13)'."""
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if len(parts) >= max_terms:
                parts.append("...")
                break
            mag = abs(c)
            if n == 0:
                term = str(mag)
            elif n == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{n}" if mag == 1 else f"{mag}*q^{n}"
            sign = "-" if c < 0 else "+"
            parts.append(term if not parts else f"{sign} {term}")
            if c < 0 and len(parts) == 1:
                parts[0] = "-" + term
        body = " ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order})"

    # --- ring plumbing ----------------------------------------------------

    def _check_ring(self, other: TruncatedSeries) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine series over {self.ring} and {other.ring}")

    # --- linear operations -------------------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_ring(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(self.ring, [a[i] + b[i] for i in range(n)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_ring(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(self.ring, [a[i] - b[i] for i in range(n)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.ring, [-c for c in self.coeffs])

    def scalar_mul(self, c: int) -> TruncatedSeries:
        return TruncatedSeries(self.ring, [c * v for v in self.coeffs])

    def shift(self, t: int, cap: int | None = None) -> TruncatedSeries:
        """Multiply by q^t.  The order grows by t unless capped."""
        if t < 0:
            raise ValueError("shift distance must be nonnegative")
        n = self.order + t if cap is None else min(self.order + t, cap)
        if n < 1:
            raise ValuationError("shift cap leaves no known coefficients")
        coeffs = [0] * n
        for i, c in enumerate(self.coeffs):
            if t + i >= n:
                break
            coeffs[t + i] = c
        return TruncatedSeries(self.ring, coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Restrict to a smaller (or equal) truncation order."""
        if order < 1:
            raise ValueError("truncation order must be positive")
        if order >= self.order:
            return self
        return TruncatedSeries(self.ring, self.coeffs[:order])

    def reduce_mod(self, m: int) -> TruncatedSeries:
        """Map an exact series into Z/m (a no-op if already in Z/m)."""
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        if self.ring.modulus == m:
            return self
        if self.ring.modulus:
            raise RingMismatchError(
                f"series is already modulo {self.ring.modulus}, not {m}")
        return TruncatedSeries(CoefficientRing(m), self.coeffs)

    # --- multiplicative operations ------------------------------------------

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return self.scalar_mul(other)
        self._check_ring(other)
        n = min(self.order, other.order)
        a = self.coeffs[:n]
        b = other.coeffs[:n]
        # Convolve from the side with fewer nonzero terms; lacunary series
        # such as Euler products then cost O(N*sqrt(N)) instead of O(N^2).
        anz = [(i, v) for i, v in enumerate(a) if v]
        bnz = [(j, w) for j, w in enumerate(b) if w]
        if len(bnz) < len(anz):
            anz, bnz = bnz, anz
        res = [0] * n
        for i, v in anz:
            lim = n - i
            for j, w in bnz:
                if j >= lim:
                    break
                res[i + j] += v * w
        return TruncatedSeries(self.ring, res)

    def __rmul__(self, other: int) -> TruncatedSeries:
        if isinstance(other, int):
            return self.scalar_mul(other)
        return NotImplemented

    def __pow__(self, e: int) -> TruncatedSeries:
        if not isinstance(e, int):
            raise TypeError("series exponent must be an integer")
        if e < 0:
            return self.invert() ** (-e)
        if e == 0:
            return TruncatedSeries.one(self.ring, self.order)
        if e == 1:
            return self
        nnz = sum(1 for c in self.coeffs if c)
        if (e - 1) * nnz <= e.bit_length() * self.order:
            # Lacunary base: e-1 sparse multiplies beat binary squaring,
            # whose intermediates are dense.  Result is identical.
            acc = self
            for _ in range(e - 1):
                acc = acc * self
            return acc
        acc = TruncatedSeries.one(self.ring, self.order)
        base = self
        k = e
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def _quotient_prefix(self, num: Sequence[int], den: Sequence[int],
                         n: int) -> list[int]:
        """Coefficients of num/den to order n; den[0] must be a unit."""
        ring = self.ring
        c0 = den[0]
        c0inv = ring.inverse(c0)  # raises NonUnitError if not a unit
        dnz = [(k, v) for k, v in enumerate(den[:n]) if v and k > 0]
        g = [0] * n
        m = ring.modulus
        if m:
            for i in range(n):
                s = num[i]
                for k, v in dnz:
                    if k > i:
                        break
                    s -= v * g[i - k]
                g[i] = s * c0inv % m
        else:
            for i in range(n):
                s = num[i]
                for k, v in dnz:
                    if k > i:
                        break
                    s -= v * g[i - k]
                g[i] = s * c0inv  # c0inv is +-1
        return g

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse: the series b with self*b = 1 + O(q^N).

        The constant term must be a unit (so +-1 over the integers, or
        coprime to the modulus).
        """
        n = self.order
        num = [0] * n
        num[0] = 1
        return TruncatedSeries(self.ring,
                               self._quotient_prefix(num, self.coeffs, n))

    def divide(self, other: TruncatedSeries) -> TruncatedSeries:
        """Quotient self/other, cancelling a common q-valuation.

        If other = q^v * u with u having a unit constant term, self must
        also vanish to order v; the result is known to min(order) - v.
        """
        self._check_ring(other)
        v = other.valuation()
        if v is None:
            raise NonUnitError(
                f"divisor vanishes identically to its order {other.order}")
        if v:
            if any(self.coeffs[i] for i in range(min(v, self.order))):
                raise ValuationError(
                    f"dividend has q-valuation below the divisor's ({v})")
        n = min(self.order, other.order) - v
        if n < 1:
            raise ValuationError("no known coefficients remain after division")
        num = list(self.coeffs[v:v + n])
        num += [0] * (n - len(num))
        den = other.coeffs[v:v + n]
        return TruncatedSeries(self.ring, self._quotient_prefix(num, den, n))

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self.divide(other)

    # --- dissection -----------------------------------------------------------

    def extract(self, p: int, r: int) -> TruncatedSeries:
        """Arithmetic-progression slice: coefficient n of the result is
        coefficient p*n + r of self ("extract, divide by q^r, replace q^p by q").
        """
        if p < 1:
            raise ValueError(f"step must be positive, got {p}")
        if not 0 <= r < p:
            raise ValueError(f"residue must lie in [0, {p}), got {r}")
        n = (self.order - r + p - 1) // p
        if n < 1:
            raise ValuationError(
                f"extraction ({p},{r}) leaves no known coefficients "
                f"(order {self.order})")
        return TruncatedSeries(self.ring, self.coeffs[r::p])

    def substitute_power(self, k: int, cap: int | None = None) -> TruncatedSeries:
        """Replace q by q^k; the inverse of extract on a residue class."""
        if k < 1:
            raise ValueError(f"substitution power must be positive, got {k}")
        n = self.order * k if cap is None else min(self.order * k, cap)
        if n < 1:
            raise ValuationError("substitution cap leaves no known coefficients")
        coeffs = [0] * n
        for i, c in enumerate(self.coeffs):
            j = i * k
            if j >= n:
                break
            coeffs[j] = c
        return TruncatedSeries(self.ring, coeffs)
