"""The continuous walk on [0, 1] and its discrete shadows.

The polynomial walk kappa(a, b) has step operator eigenfunctions that are
shifted Jacobi polynomials; the trigonometric walk swaps them for a cosine
ladder with eigenvalues (-1)^d/(d+1).  Rescaled exact eigenvectors of the
n-state discrete walk converge to the continuous eigenfunctions; the
distances below halve as n doubles.
"""

from involute.continuum import (
    cts_invariant,
    discrete_convergence,
    eigen_residual,
    fixed_point_residual,
    jacobi_eigenfunctions,
    kappa_walk,
    trig_walk,
    walk_eigenvalue,
)

for walk, name in ((kappa_walk(0, 0), "kappa(0,0)"),
                   (kappa_walk(1, 2), "kappa(1,2)"),
                   (trig_walk(), "trig")):
    residuals = [eigen_residual(walk, d) for d in range(4)]
    values = [walk_eigenvalue(walk, d) for d in range(4)]
    print(f"{name}: eigenvalues {['%.4f' % v for v in values]}")
    print(f"  eigen residuals {['%.1e' % r for r in residuals]}")
    print(f"  fixed-point residual {fixed_point_residual(walk):.1e}")
    print(f"  invariant density at 1/2: {cts_invariant(walk, 0.5):.6f}")
print()

g = jacobi_eigenfunctions(0, 0, 2)
print("kappa(0,0) eigenfunctions: g1 root at",
      -g[1].coefficients[0] / g[1].coefficients[1])
print()

print("discrete -> continuous sup-distances (a=b=0):")
print("n,distance_d1,distance_d2")
sizes = [10, 20, 40, 80]
d1 = discrete_convergence(0, 0, 1, sizes)
d2 = discrete_convergence(0, 0, 2, sizes)
for n, u, v in zip(sizes, d1, d2):
    print(f"{n},{u:.6f},{v:.6f}")
