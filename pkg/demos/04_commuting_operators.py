"""Building differential operators that commute with L from symmetric
polynomials, symbol by symbol, and checking they commute pairwise."""

from fractions import Fraction as Q

from hccycles import rootsystem as rs
from hccycles import series as se
from hccycles.polynomial import Poly

n, k = 2, Q(5, 7)
nv = n + 1

# sigma = sum(lam_i^2) must reproduce L + (rho,rho).
tab = se.commuting_symbol_table(se.elementary_power_sum(nv, 2), n, k, depth=2)
L = se.l_operator_symbols(n, k, depth=2)
rho = rs.rho(n, k)
print("p_0 == L's constant term + (rho,rho):",
      tab[(0, 0)] == L[(0, 0)] + Poly.const(nv, rs.inner(rho, rho)))
print("depth-1 symbol at alpha_1:", tab[(1, 0)], " (matches -2k(lam_1 - lam_2))")

# The trivial cases: sigma = 1 is the identity, sigma = sum(lam) is sum d_i.
t_one = se.commuting_symbol_table(Poly.const(nv, 1), n, k, 2)
print("sigma=1 higher symbols all zero:", all(p.is_zero for o, p in t_one.items() if sum(o) > 0))

# Weyl invariance is equivalent to symmetry of p_0(lam + rho).
print("invariant:", se.weyl_invariance_check(tab, n, k))

# Degree-3 generator; the two truncated operators commute exactly.
tab3 = se.commuting_symbol_table(se.elementary_power_sum(nv, 3), n, k, depth=3)
tab2 = se.commuting_symbol_table(se.elementary_power_sum(nv, 2), n, k, depth=3)
comm = se.operator_commutator(tab2, tab3, n)
print("[P_2, P_3] symbols all zero through depth 3:", all(p.is_zero for p in comm.values()))
