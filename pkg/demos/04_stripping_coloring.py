"""The stripping coloring procedure, with and without adversarial edges.

Each round pulls a nearly-maximal independent set of the base graph that
contains few added pairs, keeps the part that stays independent after the
addition, and spends one color on it. The trace shows colors per dyadic
size bucket, the residual phase, and which route each round took.
"""

from chromres import (
    EdgeSet,
    GnpParams,
    build_profile,
    chromatic_exact,
    dsatur,
    generate_gnp,
    plant_clique,
    strip_color,
    union,
    verify_coloring,
)

n, p = 100, 0.5
base = generate_gnp(GnpParams(n, p, seed=5))
profile = build_profile(n, p, theta=1.0)

# clean run: no added edges
coloring, trace = strip_color(base, EdgeSet(frozenset()), epsilon=1.0, profile=profile)
print(f"strip: {coloring.num_colors} colors, dsatur: {dsatur(base).num_colors}, "
      f"proper: {verify_coloring(base, coloring)}")
print(f"buckets {trace.bucket_counts} + residual {trace.residual_colors} "
      f"= {coloring.num_colors}")
routes = [r for _, _, r, _, _ in trace.rounds]
print("routes:", {r: routes.count(r) for r in set(routes)})

# adversarial run: plant a clique on 15 vertices and color the union
added = plant_clique(base, range(15))
attacked, trace2 = strip_color(base, added, epsilon=1.0, profile=profile)
full = union(base, added)
print(f"\nafter planting {added.m} clique edges: {attacked.num_colors} colors "
      f"(proper: {verify_coloring(full, attacked)})")
print("planted pairs met per round:", [pl for _, _, _, _, pl in trace2.rounds])

# small graphs allow the exact yardstick
small = generate_gnp(GnpParams(30, 0.5, seed=2))
small_profile = build_profile(30, 0.5)
small_coloring, _ = strip_color(small, EdgeSet(frozenset()), 1.0, small_profile)
print(f"\nn=30: strip {small_coloring.num_colors} vs exact chi "
      f"{chromatic_exact(small)} vs dsatur {dsatur(small).num_colors}")
