"""Asymptotic solutions of L phi = ((lambda,lambda) - (rho,rho)) phi by the
Freudenthal-type recurrence, in exact rational arithmetic."""

from fractions import Fraction as Q

from hccycles import diagrams as dg
from hccycles import rootsystem as rs
from hccycles import series as se

sp = se.SpectralParam(rs.vec([Q(3, 10), Q(-3, 10)]), k=Q(3, 2))
print("eigenvalue (lambda,lambda)-(rho,rho) =", se.gamma_L(sp))

# One solution per Weyl element; coefficients are exact rationals.
for w in dg.all_permutations(2):
    table = se.freudenthal_table_for_w(w, sp, depth=6)
    print(f"w = {w.images}: mu = {tuple(map(str, table.mu))}")
    print("  coefficients:", [str(table.entries[(c,)]) for c in range(4)], "...")
    # residual of the expanded operator on the truncated series: exactly 0
    print("  residual_L =", se.residual_L(table))

# Deep in the asymptotic zone the truncated series is numerically converged.
table = se.freudenthal_table_for_w(dg.Permutation.identity(2), sp, depth=10)
z = [1e-3, 1.0]
print("phi(z) ~", se.phi_eval(table, z))
print("per-depth term magnitudes:", ["%.2e" % m for m in se.series_terms_by_depth(table, z)[:5]])

# Non-generic spectral parameters are rejected with the colliding exponent.
try:
    se.freudenthal_table_for_w(dg.Permutation.identity(2), se.SpectralParam((Q(0), Q(0)), Q(1, 2)), 2)
except se.ResonanceError as exc:
    print("resonance:", exc)

# Rank 2, exact again, all six Weyl translates.
lam = rs.vec([Q(3, 10), Q(1, 7), Q(-31, 70)])
sp2 = se.SpectralParam(lam, Q(2, 3))
residuals = [
    str(se.residual_L(se.freudenthal_table_for_w(w, sp2, 4))) for w in dg.all_permutations(3)
]
print("rank-2 residuals:", residuals)
