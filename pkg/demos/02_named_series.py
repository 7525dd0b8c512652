"""The named series: Euler products, thetas, and partition families.

Run as: python demos/02_named_series.py
"""

from qseries import (
    bipartition_series,
    borwein_a,
    euler_f,
    pk_series,
    ramanujan_theta,
    regular_series,
    septic_ABC,
)
from qseries.series import EXACT, TruncatedSeries

N = 60

# f_k = (q^k; q^k)_infinity, expanded by the pentagonal number theorem.
f1 = euler_f(1, 13)
print("f_1  =", f1.q_string())

# Its reciprocal generates the partition numbers.
print("p(n) =", pk_series(-1, 10).coeffs)

# Ramanujan's five-divisibility, live: every p(5n+4) is divisible by 5.
p = pk_series(-1, 5 * 12 + 4)
print("p(5n+4) =", p.extract(5, 4).coeffs)

# The two-variable theta at negated powers of q.  The (1,2) case *is*
# the pentagonal number theorem:
print("theta(1,2) == f_1:", ramanujan_theta((1, 2), 40) == euler_f(1, 40))

# The cubic theta a(q) counts lattice points of the hexagonal form.
print("a(q) =", borwein_a(1, 8).coeffs)

# ... and satisfies a clean 3-dissection:
lhs = borwein_a(1, N)
rhs = borwein_a(3, N) + (euler_f(9, N) ** 3 / euler_f(3, N)).shift(1, cap=N) * 6
print("a(q) = a(q^3) + 6q f9^3/f3:", lhs == rhs)

# The septic quotients A, B, C drive the 7-dissection of f_1:
A, B, C = septic_ABC(N)
combo = (B ** 5 / (A * C ** 4) - A ** 5 / (B ** 4 * C)
         - (C ** 5 / (A ** 4 * B)).shift(3, cap=N))
print("B^5/AC^4 - A^5/B^4C - q^3 C^5/A^4B =", combo.q_string())

# Partition families: ell-regular partitions and (s,t)-regular
# bipartitions, straight from their generating functions.
print("2-regular (odd parts):", regular_series(2, 8).coeffs)
b215 = bipartition_series(2, 15, 10)
print("B_{2,15}(n):          ", b215.coeffs)

# One of the verified congruences, seen directly in the coefficients:
big = bipartition_series(2, 15, 9 * 10 + 9)
print("B_{2,15}(9n+8) mod 5: ",
      tuple(v % 5 for v in big.extract(9, 8).coeffs[:10]))
