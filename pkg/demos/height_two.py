"""Height two: Split equals mu, and bar sits between delta01 and mu.

Run with: python3 demos/height_two.py
"""

from toricsplit import Configuration
from toricsplit.families import symmetric_curve
from toricsplit.splitting import split_numbers
from toricsplit.supports import bar_bounds, circuits, cmin, delta01, gamma_graph
from toricsplit.toric import graver_basis, minimal_markov

# the twisted cubic
A = Configuration([[3, 2, 1, 0], [0, 1, 2, 3]])
print("height", A.height)

M = minimal_markov(A)
for v in M.generators:
    print("  ", v.binomial())
print("mu =", len(M), "unique:", M.unique)

# every minimal generator is primitive
G = graver_basis(A)
print("Graver basis has", len(G), "elements")

C = circuits(A)
print("circuits:", [c.coords for c in C])
print("minimal circuit supports:", [sorted(s) for s in cmin(A, C)])

gamma = gamma_graph(A)
d, matching = delta01(gamma)
print("Gamma_A edges:", gamma.edges, " delta01 =", d, matching.parts)

bb = bar_bounds(A)
print(f"{bb.lo} <= bar <= {bb.hi}   ({bb.lo_reason} / {bb.hi_reason})")

rep = split_numbers(A)
print("Split     =", rep.split)
print("Split_rad =", rep.split_rad)
print("cover:", rep.certificate.parts)

# symmetric curves: mu grows with b - a
for a, b in [(1, 2), (1, 4), (2, 5), (1, 6)]:
    inst = symmetric_curve(a, b)
    r = split_numbers(inst.config, assume_circuit_radical=True)
    print(f"symmetric curve ({a},{b}): Split = {r.split.exact}, Split_rad in [{r.split_rad.lo}, {r.split_rad.hi}]")
