"""Edge-addition adversaries and the exact resilience oracles.

The clique-planting construction is the benchmark adversary: completing a
clique on n/log2(np) vertices costs about a quarter of that squared in new
edges and forces the chromatic number up to the clique size. At tiny n the
oracles compute the exact minimum cost of beating a chromatic cap.
"""

import math

from chromres import (
    GnpParams,
    Graph,
    bounded_degree_h,
    chromatic_exact,
    dsatur,
    generate_gnp,
    global_resilience_witness,
    local_resilience_witness,
    plant_clique,
    random_budget,
    union,
)

# the clique construction at n=150: the certified floor jumps to t, though
# DSATUR already burns ~t colors on the bare graph at this size, so the
# heuristic count barely moves; the planted clique is the binding bound
n, p = 150, 0.5
g = generate_gnp(GnpParams(n, p, seed=0))
t = math.ceil(n / math.log2(n * p))
added = plant_clique(g, range(t))
print(f"clique on t={t} of n={n}: {added.m} edges added "
      f"(~t^2/4 = {t * t / 4:.0f}), certified chi floor {t}")
print(f"dsatur before {dsatur(g).num_colors}, after {dsatur(union(g, added)).num_colors}")

# random budgets of the same size rarely move the needle
e = random_budget(g, added.m, seed=1)
print(f"random budget of {e.m} edges: dsatur {dsatur(union(g, e)).num_colors}")

# at n=80 the same construction is visible in the heuristic count too
g80 = generate_gnp(GnpParams(80, p, seed=0))
t80 = math.ceil(80 / math.log2(80 * p))
added80 = plant_clique(g80, range(t80))
print(f"n=80, t={t80}: dsatur before {dsatur(g80).num_colors}, "
      f"after {dsatur(union(g80, added80)).num_colors}")

# bounded-degree additions respect the per-vertex cap by construction
h, max_deg = bounded_degree_h(n, delta=6, seed=2)
print(f"bounded-degree addition: {h.m} edges, realized max degree {max_deg}")

# exact oracles at tiny n: the five-cycle with cap 3
c5 = Graph.cycle(5)
m, witness = global_resilience_witness(c5, chi_cap=3, m_max=5)
print(f"\nC5, cap 3: global resilience {m}, witness {witness.sorted_pairs()}")
print(f"chi after witness: {chromatic_exact(union(c5, witness))}")

delta, h_witness = local_resilience_witness(c5, chi_cap=3, delta_max=4)
print(f"C5, cap 3: local resilience {delta} "
      f"(witness max degree {h_witness.max_degree()}, {h_witness.m} edges)")
