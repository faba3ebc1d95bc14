"""Seeded random graphs, set algebra, and the two text formats.

Everything downstream depends on one convention: a PCG64 stream seeded with
a 64-bit integer emits one float per unordered vertex pair in row-major
order (i, j), i < j, and the pair becomes an edge iff the draw is < p.
Same (n, p, seed) in, same graph out, byte for byte.
"""

from chromres import (
    EdgeSet,
    GnpParams,
    generate_gnp,
    induced_subgraph,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
    union,
)

# draw a graph twice; the serializations are identical bytes
g = generate_gnp(GnpParams(n=12, p=0.5, seed=42))
again = generate_gnp(GnpParams(n=12, p=0.5, seed=42))
print(f"n={g.n}, edges={g.edge_count}")
print("identical bytes across draws:", to_edge_list(g) == to_edge_list(again))

# the edge-list format round-trips exactly
text = to_edge_list(g)
print("\nedge-list head:")
print("\n".join(text.splitlines()[:4]))
print("round-trip equal:", parse_edge_list(text) == g)

# DIMACS is the same graph shifted to 1-based labels
print("\nDIMACS head:")
print("\n".join(to_dimacs(g).splitlines()[:3]))

# graphs are immutable: union returns a new value
chords = EdgeSet.from_pairs([(0, 5), (2, 9)])
h = union(g, chords)
print(f"\nafter union with {chords.m} pairs: {g.edge_count} -> {h.edge_count} edges")

# induced subgraphs relabel to 0..k-1 and report the mapping back
sub, mapping = induced_subgraph(g, [3, 5, 8, 11])
print(f"induced on {mapping}: {sub.n} vertices, {sub.edge_count} edges")
