"""Tour of the truncated-series layer: rings, arithmetic, dissection.

Run as: python demos/01_series_basics.py
"""

from qseries import EXACT, TruncatedSeries, mod_ring

# A series is a coefficient prefix plus the ring it lives in.  Orders are
# explicit everywhere: this object is 1 - q + 3q^3, known modulo q^5.
s = TruncatedSeries(EXACT, [1, -1, 0, 3, 0])
print("s          =", s.q_string())

# Arithmetic is by operators; orders propagate as the minimum.
t = TruncatedSeries(EXACT, [1, 1, 1, 1, 1])
print("s + t      =", (s + t).q_string())
print("s * t      =", (s * t).q_string())
print("s^2        =", (s ** 2).q_string())

# Anything with a unit constant term can be inverted or divided by.
geom = TruncatedSeries(EXACT, [1, -1, 0, 0, 0, 0, 0, 0]).invert()
print("1/(1-q)    =", geom.q_string())

# Division cancels a shared power of q and the order shrinks honestly:
num = TruncatedSeries(EXACT, [0, 0, 1, 1])   # q^2 + q^3
den = TruncatedSeries(EXACT, [0, 0, 1, 0])   # q^2
quot = num / den
print("(q^2+q^3)/q^2 =", quot.q_string(), " <- order dropped to", quot.order)

# extract(p, r) keeps the coefficients at exponents p*n + r: the
# "extract, divide by q^r, replace q^p by q" move used throughout the
# congruence proofs.
a = TruncatedSeries(EXACT, [1, 2, 3, 4, 5, 6])
print("extract(3,2) of 1+2q+...+6q^5 =", a.extract(3, 2).q_string())

# substitute_power is its inverse on one residue class, and shift
# multiplies by a power of q; together they reassemble the original.
pieces = [a.extract(3, r).substitute_power(3).shift(r).truncate(6)
          for r in range(3)]
total = pieces[0] + pieces[1] + pieces[2]
print("reassembled  =", total.q_string(), " equal:", total == a)

# Modular coefficients: reduce an exact series into Z/m, or compute in
# Z/m from the start.  -90 = 9 (mod 11), so these two agree:
x = TruncatedSeries(EXACT, [1, 4, 7])
print("(-90*x) mod 11 =", x.scalar_mul(-90).reduce_mod(11).coeffs)
print("9*(x mod 11)   =", x.reduce_mod(11).scalar_mul(9).coeffs)

# Rings never mix silently:
try:
    _ = x + x.reduce_mod(11)
except Exception as exc:
    print("mixing rings ->", type(exc).__name__, "-", exc)
