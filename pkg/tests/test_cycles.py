import cmath
import json
import math
import random
from fractions import Fraction as Q

import numpy as np
import pytest

from hccycles import closedforms as cf
from hccycles import cycles as cy
from hccycles import diagrams as dg
from hccycles import rootsystem as rs
from hccycles.series import SpectralParam, freudenthal_table_for_w, gamma_L, phi_eval

W_ID = dg.Permutation((1, 2))
W_S = dg.Permutation((2, 1))


def sp1(s=Q(3, 10), k=Q(3, 2)):
    return SpectralParam(rs.vec([s, -s]), k)


def sp2(k=Q(3, 2)):
    lam = [Q(3, 10), Q(1, 7)]
    return SpectralParam(rs.vec(lam + [-sum(lam)]), k)


def test_bump():
    b = cy.BumpFn(0.1)
    assert b(0.0) == 0.0 and b(1.0) == 0.0
    assert abs(b(0.5) - 0.1) < 1e-16
    assert abs(b(0.25) - 0.05) < 1e-16
    xs = np.linspace(1e-6, 1 - 1e-6, 101)
    assert np.all(b(xs) > 0) and np.all(b(xs) <= 0.1)
    # C1: derivative matches a central difference
    for x in (0.2, 0.5, 0.83):
        fd = (b(x + 1e-6) - b(x - 1e-6)) / 2e-6
        assert abs(b.deriv(x) - fd) < 1e-8
    with pytest.raises(ValueError):
        b(1.5)
    with pytest.raises(ValueError):
        cy.BumpFn(0.0)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        cy.QuadratureSpec(points_per_axis=4)
    with pytest.raises(ValueError):
        cy.QuadratureSpec(epsilon=0.3)
    with pytest.raises(ValueError):
        cy.QuadratureSpec(scheme="simpson")


def test_rules_integrate_smooth():
    for rule in (cy.tanh_sinh_rule, cy.gauss_legendre_rule):
        x, w = rule(80)
        assert abs(np.sum(w * x**3) - 0.25) < 1e-12
    # tanh-sinh handles an endpoint singularity (cutoff widened so the
    # truncated tail exp(-pi sinh(c)/2) is below the tolerance)
    x, w = cy.tanh_sinh_rule(140, cutoff=4.3)
    assert abs(np.sum(w / np.sqrt(x)) - 2.0) < 1e-12


def test_cycle_validation():
    with pytest.raises(ValueError):
        cy.cycle_for_w(W_ID, [1.0, 0.5])
    with pytest.raises(ValueError):
        cy.cycle_for_w(W_ID, [0.95, 1.0])  # too close for loop separation
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0])
    assert c.naxes == 1 and c.rank == 1


def test_cycle_point_collapse_and_half_turn():
    for w in dg.all_permutations(3):
        c = cy.cycle_for_w(w, [1e-4, 1e-2, 1.0], 0.1)
        t0 = cy.cycle_point(c, [0.0] * c.naxes)
        for p in c.points:
            assert abs(t0[p] - t0[c.diagram.target(p)]) < 1e-14 * abs(t0[p])
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    th = cy.cycle_point(c, [0.5])
    assert abs(th[(1, 1)] - (-(1 - 0.1) * th[(2, 2)])) < 1e-14


def test_anchoring_rule_follows_marks():
    # marks (1,1): t_11 anchored at z_2; marks (1,2): anchored at z_1
    c_id = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    assert c_id.collapse[(1, 1)] == 2
    c_s = cy.cycle_for_w(W_S, [1e-2, 1.0], 0.1)
    assert c_s.collapse[(1, 1)] == 1


def test_modulus_inequality_bulk():
    # over 1e5 samples per rank across all diagrams
    rng = np.random.default_rng(0)
    for n, z, m in ((1, [1e-2, 1.0], 60000), (2, [1e-4, 1e-2, 1.0], 20000)):
        for w in dg.all_permutations(n + 1):
            c = cy.cycle_for_w(w, z, 0.1)
            tau = rng.random((c.naxes, m))
            t = c.t_values(tau)
            for p in c.points:
                assert np.all(np.abs(t[p]) <= np.abs(t[c.diagram.target(p)]) + 1e-15)


def test_factor_census():
    sp = sp2()
    for w in dg.all_permutations(3):
        c = cy.cycle_for_w(w, [1e-4, 1e-2, 1.0], 0.1)
        _, factors = cy.omega_factor_list(c, sp)
        kinds = {}
        for f in factors:
            kinds[f.kind] = kinds.get(f.kind, 0) + 1
        assert kinds["mono"] == 3 and kinds["vanish"] == 3
        assert kinds["diff"] == (1 + 4) + 1  # cross-row minus vanishing, plus the row-2 pair


def test_k1_reduces_to_mellin():
    sp_1 = sp1(Q(3, 10), Q(1))
    for w in (W_ID, W_S):
        c = cy.cycle_for_w(w, [1e-2, 1.0], 0.1)
        _, factors = cy.omega_factor_list(c, sp_1)
        assert all(f.kind == "mono" for f in factors)
        val = cy.integrate_for_w(w, [1e-2, 1.0], sp_1, cy.QuadratureSpec(points_per_axis=121))
        mell = cy.mellin_value_at_unit_coupling(w, [1e-2, 1.0], sp_1)
        assert abs(val - mell) < 1e-10 * abs(mell)
    lam = [Q(3, 10), Q(1, 7)]
    sp_2 = SpectralParam(rs.vec(lam + [-sum(lam)]), Q(1))
    for w in dg.all_permutations(3):
        z = [1e-4, 1e-2, 1.0]
        val = cy.integrate_for_w(w, z, sp_2, cy.QuadratureSpec(points_per_axis=61))
        mell = cy.mellin_value_at_unit_coupling(w, z, sp_2)
        assert abs(val - mell) < 1e-8 * abs(mell)


def test_omega_positive_at_anchor_direction():
    # all nonvanishing factor arguments ~ 0, vanishing ones ~ -pi/2 at the anchor
    sp = sp1()
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    _, args = cy.anchor_arguments(c, sp, eta=1e-5)
    _, factors = cy.omega_factor_list(c, sp)
    for f, a in zip(factors, args):
        if f.kind == "vanish":
            assert abs(a + math.pi / 2) < 1e-2
        else:
            assert abs(a) < 1e-3


def test_phase_tracking_matches_closed_form():
    rng = random.Random(11)
    for n, z in ((1, [1e-2, 1.0]), (2, [1e-4, 1e-2, 1.0])):
        sp = sp1() if n == 1 else sp2()
        for w in dg.all_permutations(n + 1):
            c = cy.cycle_for_w(w, z, 0.1)
            tau0, args0 = cy.anchor_arguments(c, sp)
            for _ in range(3):
                tau1 = np.array([rng.uniform(0.05, 0.95) for _ in range(c.naxes)])
                coarse = cy.phase_continuation(c, sp, tau0, tau1, args0, steps=24)
                fine = cy.phase_continuation(c, sp, tau0, tau1, args0, steps=96)
                analytic = cy.factor_arguments(c, sp, tau1)
                assert max(abs(a - b) for a, b in zip(coarse, fine)) < 1e-6
                assert max(abs(a - b) for a, b in zip(coarse, analytic)) < 1e-6


def test_phase_loop_winding_and_reversal():
    sp = sp1()
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    eta = 1e-4
    a0 = cy.factor_arguments(c, sp, [eta])
    a1 = cy.factor_arguments(c, sp, [1 - eta])
    assert abs((a1[0] - a0[0]) - 2 * math.pi * (1 - 2 * eta)) < 1e-9
    tau0, args0 = cy.anchor_arguments(c, sp)
    fwd = cy.phase_continuation(c, sp, tau0, [0.6], args0, steps=24)
    back = cy.phase_continuation(c, sp, [0.6], tau0, fwd, steps=24)
    assert max(abs(a - b) for a, b in zip(back, args0)) < 1e-9


def test_schwarz_reflection_with_monodromy():
    for n, z in ((1, [1e-2, 1.0]), (2, [1e-4, 1e-2, 1.0])):
        sp = sp1() if n == 1 else sp2()
        rng = np.random.default_rng(3)
        for w in dg.all_permutations(n + 1):
            c = cy.cycle_for_w(w, z, 0.1)
            _, factors = cy.omega_factor_list(c, sp)
            winding = 0.0
            for f in factors:
                p = c.diagram.target(f.pts[0]) if f.kind == "vanish" else f.pts[0]
                winding += f.expo * len(c.chain[p])
            for _ in range(4):
                tau = rng.uniform(0.05, 0.95, c.naxes)
                v = cy.omega_w_eval(c, sp, tau).value
                vr = cy.omega_w_eval(c, sp, 1.0 - tau).value
                assert abs(vr * cmath.exp(-2j * math.pi * winding) - v.conjugate()) < 1e-10 * abs(v)


def test_singular_locus_error():
    sp = sp1()
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    with pytest.raises(ValueError):
        cy.omega_w_eval(c, sp, [0.0])


def test_endpoint_vanishing_for_k_above_one():
    sp = sp1()
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    interior = abs(cy.omega_w_eval(c, sp, [0.5]).value)
    assert abs(cy.omega_w_eval(c, sp, [1e-8]).value) < 1e-3 * interior
    assert abs(cy.omega_w_eval(c, sp, [1 - 1e-8]).value) < 1e-3 * interior
    # rank 2: decay on every face of the cube separately
    sp_2 = sp2()
    c2 = cy.cycle_for_w(dg.Permutation((2, 3, 1)), [1e-4, 1e-2, 1.0], 0.1)
    mid = [0.5] * c2.naxes
    interior2 = abs(cy.omega_w_eval(c2, sp_2, mid).value)
    for axis in range(c2.naxes):
        for edge in (1e-8, 1 - 1e-8):
            tau = list(mid)
            tau[axis] = edge
            assert abs(cy.omega_w_eval(c2, sp_2, tau).value) < 1e-3 * interior2


def test_integrate_bit_determinism():
    sp = sp2()
    z = [1e-4, 1e-2, 1.0]
    quad = cy.QuadratureSpec(points_per_axis=25)
    v1 = cy.integrate_for_w(dg.Permutation((3, 1, 2)), z, sp, quad)
    v2 = cy.integrate_for_w(dg.Permutation((3, 1, 2)), z, sp, quad)
    assert v1 == v2


def test_phased_value_multiplication():
    a = cy.PhasedValue(0.0, math.pi)
    b = cy.PhasedValue(math.log(2.0), math.pi)
    prod = a * b
    assert abs(prod.value - 2.0) < 1e-14
    assert prod.argument == 2 * math.pi  # unwound, not reduced


def test_integrate_matches_a_w_rank1():
    sp = sp1()
    quad = cy.QuadratureSpec(points_per_axis=121)
    for w in (W_ID, W_S):
        est = cy.leading_coeff_estimate(w, sp, 1e-3, quad)
        a = cf.a_w(w, sp)
        assert abs(est - a) < 1e-3 * abs(a)
        # raw ratio carries the first series correction ~ G_1 * r
        z = [1e-3, 1.0]
        ratio = cy.integrate_for_w(w, z, sp, quad) / cy.leading_power(w, sp, z)
        assert abs(ratio - a) < 5e-3 * abs(a)
        assert abs(ratio - a) > 1e-4 * abs(a)


def test_integrate_self_convergence_and_epsilon_independence():
    sp = sp1()
    z = [1e-3, 1.0]
    i1 = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(points_per_axis=121))
    i2 = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(points_per_axis=241))
    assert abs(i2 - i1) < 1e-8 * abs(i2)
    ia = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(points_per_axis=161, epsilon=0.05))
    ib = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(points_per_axis=161, epsilon=0.1))
    assert abs(ia - ib) < 1e-6 * abs(ib)


def test_gauss_legendre_agrees_at_k2():
    # integer k: integrand smooth, both schemes converge to the same value
    sp = sp1(Q(3, 10), Q(2))
    z = [1e-2, 1.0]
    its = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(points_per_axis=121))
    igl = cy.integrate_for_w(W_ID, z, sp, cy.QuadratureSpec(scheme="gauss-legendre", points_per_axis=121))
    assert abs(its - igl) < 1e-9 * abs(its)


def test_series_integral_consistency():
    sp = sp1()
    z = [1e-2, 1.0]
    for w in (W_ID, W_S):
        table = freudenthal_table_for_w(w, sp, 12)
        lhs = cy.integrate_for_w(w, z, sp, cy.QuadratureSpec(points_per_axis=161)) / cf.a_w(w, sp)
        rhs = phi_eval(table, z)
        assert abs(lhs - rhs) < 1e-4 * abs(rhs)


def test_series_integral_consistency_rank2_all_w():
    # integrate / a(w) equals the full truncated series for every cycle:
    # end-to-end agreement of recurrence, phases, quadrature, and a(w)
    sp = sp2()
    r = 0.02
    z = [r * r, r, 1.0]
    quad = cy.QuadratureSpec(points_per_axis=61)
    for w in dg.all_permutations(3):
        table = freudenthal_table_for_w(w, sp, 6)
        lhs = cy.integrate_for_w(w, z, sp, quad) / cf.a_w(w, sp)
        rhs = phi_eval(table, z)
        assert abs(lhs - rhs) < 1e-7 * abs(rhs)


def test_fd_eigenvalue_rank1():
    sp = sp1()
    target = float(gamma_L(sp))
    quad = cy.QuadratureSpec(points_per_axis=121)
    for w in (W_ID, W_S):
        got = cy.fd_eigenvalue(w, [1e-2, 1.0], sp, quad, h=1e-3)
        assert abs(got - target) < 1e-3 * abs(target)


def test_fd_eigenvalue_rank2():
    sp = sp2()
    target = float(gamma_L(sp))
    got = cy.fd_eigenvalue(
        dg.Permutation((2, 3, 1)), [4e-4, 2e-2, 1.0], sp, cy.QuadratureSpec(points_per_axis=41), h=1e-3
    )
    assert abs(got - target) < 1e-3 * abs(target)


def test_nonfinite_guard():
    # a wildly negative coupling overflows the endpoint factors
    sp = sp1(Q(3, 10), Q(-800))
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.1)
    with pytest.raises(ArithmeticError):
        cy.integrate(c, sp, cy.QuadratureSpec(points_per_axis=33))


def test_integrate_epsilon_mismatch_guard():
    sp = sp1()
    c = cy.cycle_for_w(W_ID, [1e-2, 1.0], 0.05)
    with pytest.raises(ValueError):
        cy.integrate(c, sp, cy.QuadratureSpec(points_per_axis=33, epsilon=0.1))


def test_result_json_schema():
    sp = sp1()
    quad = cy.QuadratureSpec(points_per_axis=33)
    val = cy.integrate_for_w(W_ID, [1e-2, 1.0], sp, quad)
    doc = json.loads(cy.result_json(W_ID, [1e-2, 1.0], sp, quad, val))
    assert set(doc) >= {"w", "z", "lambda", "k", "integral", "spec"}
    assert doc["w"] == [1, 2]
    assert doc["integral"]["re"] == val.real and doc["integral"]["im"] == val.imag
    assert doc["spec"]["points_per_axis"] == 33
