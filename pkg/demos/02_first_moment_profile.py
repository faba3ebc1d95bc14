"""First-moment analytics: k0, expected family sizes, tail bounds.

k0(n, p, theta) is the largest set size whose expected number of independent
sets still clears theta. With theta = 1 it shadows the independence number
of a typical draw to within a small constant; mu and mu0 are the expected
counts of independent k0-sets in total and through one fixed pair.
"""

import math

from chromres import (
    GnpParams,
    build_profile,
    generate_gnp,
    max_independent_set,
    predicted_chromatic,
    tail_bounds,
)

print(f"{'n':>5} {'k0':>4} {'mu':>12} {'mu0':>10} {'chi_pred':>9} {'alpha':>6}")
for n in (30, 60, 120, 200):
    profile = build_profile(n, 0.5, theta=1.0)
    alpha = len(max_independent_set(generate_gnp(GnpParams(n, 0.5, 1)), limit=200))
    print(f"{n:>5} {profile.k0:>4} {profile.mu:>12.4f} {profile.mu0:>10.4f} "
          f"{profile.chi_predicted:>9.2f} {alpha:>6}")

# the ratio identity mu0/mu = k0(k0-1)/(n(n-1)) is exact
profile = build_profile(120, 0.5)
ratio = math.exp(profile.log_mu0 - profile.log_mu)
exact = profile.k0 * (profile.k0 - 1) / (120 * 119)
print(f"\nmu0/mu = {ratio:.12f}, k0(k0-1)/(n(n-1)) = {exact:.12f}")

# evaluable concentration bounds for the capped family size (often vacuous
# at desk scale; they only bite once mu/mu0 is large)
bounds = tail_bounds(profile, delta=0.4)
print(f"lower-tail bound {bounds.lower_tail:.4f}, two-sided bound {bounds.two_sided:.4f}")

# the coloring target the stripping procedure aims for
for eps in (0.0, 0.5, 1.0):
    target, k = predicted_chromatic(120, 0.5, eps)
    print(f"eps={eps}: target {target:.2f} colors (working size floor {k})")
