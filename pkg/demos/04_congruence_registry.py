"""The verification registry: re-checking whole congruence families.

Run as: python demos/04_congruence_registry.py
"""

from qseries import REGISTRY, run_item, run_registry
from qseries.verify import family_series

# Every claim lives in a registry keyed by a stable id.  Items fall into
# four kinds: single identities, link-wise dissection chains, congruence
# scans over a bipartition family, and the prime-power congruence.
print(f"{len(REGISTRY)} registry items;")
for item in list(REGISTRY.values())[:4]:
    print(f"  {item.id:<10s} [{item.kind}] {item.description}")

# Run one family end to end.  "b215" selects the three scans, the
# dissection chain, and the two base-case instances of the parameterized
# family for the (2,15)-regular bipartitions mod 5.
run = run_registry("b215", order=120, count=200)
for rep in run.reports:
    print(f"  {rep.status:4s} {rep.id:<12s} order={rep.order}"
          + (f"  [{rep.note}]" if rep.note else ""))

# Chains are verified link-wise: each extraction step is an independent
# order-N identity whose stated output seeds the next link, so an
# eleven-step chain never needs an order 7^11 series.
rep = run_item(REGISTRY["b711-chain-11"], order=100)
print("final chain link:", rep.status, "to order", rep.order)

# A report of a deliberately broken claim pinpoints the first bad
# coefficient (the engine's sensitivity is itself a tested property):
rep = run_item(REGISTRY["lemma-1.1"], order=50, perturb=3)
print("perturbed lemma:", rep.status, "first mismatch:", rep.mismatch)

# Scans read coefficients straight off a big modular series.  Here is a
# progression nobody claims vanishes, as a control:
series = family_series(2, 15, 5, 9 * 30 + 8)
claimed = [series.coeffs[9 * n + 8] for n in range(30)]
control = [series.coeffs[9 * n + 7] for n in range(30)]
print("B_{2,15}(9n+8) mod 5 :", claimed)
print("B_{2,15}(9n+7) mod 5 :", control)
