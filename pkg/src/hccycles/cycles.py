"""Tower-of-loops cycles and quadrature of the multivalued form over them.

Geometry
--------
For w in S_{n+1} take its diagram with n+1 rows.  Row n+1 carries the fixed
arguments z_1..z_{n+1} with 0 < |z_1| < ... < |z_{n+1}|; every other point
(i,j) carries an integration variable looping around the origin anchored at
its target:

    t_{ij}(tau_{ij}) = e^{2 pi i tau_{ij}} (1 - f_eps(tau_{ij})) t_{tar(i,j)},

with the bump f_eps(x) = eps sin^2(pi x).  The integrand is an Euler-type
product of complex powers: per-variable monomials, cross-row and
within-row differences with exponents k-1 and 2-2k, and z-only factors.

Branches
--------
Every factor is raised to its power through a continuously chosen logarithm
anchored at tau -> 0+, where all bases are principal (for real lambda, k and
positive increasing z the non-vanishing bases are positive reals with
argument 0, and each collapsing base t_tar (1 - e^{2 pi i tau}(1-f)) has
principal argument -> -pi/2).  Because each difference factor is big - small
with |small/big| < 1 over the whole cube (enforced by the z-moduli
separation check), 1 - small/big stays in the right half-plane and the
argument decomposes in closed form:

    arg(big - small) = arg_unwound(big) + Arg(1 - small/big),
    arg_unwound(t_{ij}) = 2 pi * (sum of tau along the chain up from (i,j))
                          + Arg(z_collapse).

The winding therefore sits entirely in the explicit chain monomials and no
numerical continuation is needed on the quadrature path; a step-by-step
tracker (`phase_continuation`) is provided anyway and is tested against the
closed form.

Quadrature is a tensor product of one-dimensional rules per tau-axis;
tanh-sinh by default (the integrand has algebraic endpoint behavior
tau^{k-1} for non-integer k), Gauss-Legendre optionally.  Node evaluation
is vectorized with numpy and summed in a fixed order, so results are
bit-stable for a fixed spec.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Mapping, Sequence

import numpy as np

from . import rootsystem as rs
from .diagrams import Diagram, Permutation
from .series import SpectralParam

Point = tuple[int, int]

_SEPARATION_MARGIN = 0.85


@dataclass(frozen=True)
class BumpFn:
    """f_eps(x) = eps sin^2(pi x): smooth, range [0, eps], zero exactly at 0 and 1."""

    epsilon: float = 0.1

    def __post_init__(self):
        if not 0.0 < self.epsilon < 0.5:
            raise ValueError("bump height must lie in (0, 1/2)")

    def __call__(self, x):
        xs = np.asarray(x, dtype=float)
        if np.any(xs < 0.0) or np.any(xs > 1.0):
            raise ValueError("bump argument outside [0, 1]")
        # evaluate on the nearer endpoint's side so f vanishes exactly there
        u = np.where(xs <= 0.5, xs, 1.0 - xs)
        out = self.epsilon * np.sin(np.pi * u) ** 2
        return float(out) if np.isscalar(x) or xs.ndim == 0 else out

    def deriv(self, x):
        xs = np.asarray(x, dtype=float)
        u = np.where(xs <= 0.5, xs, 1.0 - xs)
        sign = np.where(xs <= 0.5, 1.0, -1.0)
        out = self.epsilon * np.pi * sign * np.sin(2.0 * np.pi * u)
        return float(out) if np.isscalar(x) or xs.ndim == 0 else out


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: str = "tanh-sinh"
    points_per_axis: int = 65
    epsilon: float = 0.1
    continuation_steps: int = 16

    def __post_init__(self):
        if self.scheme not in ("tanh-sinh", "gauss-legendre"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.points_per_axis < 8:
            raise ValueError("need at least 8 points per axis")
        if not 0.0 < self.epsilon < 0.25:
            raise ValueError("epsilon must lie in (0, 1/4)")
        if self.continuation_steps < 1:
            raise ValueError("continuation_steps must be positive")

    def as_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "points_per_axis": self.points_per_axis,
            "epsilon": self.epsilon,
            "continuation_steps": self.continuation_steps,
        }


@dataclass
class PhasedValue:
    """Complex value as log-magnitude plus a continuously tracked argument."""

    log_magnitude: float
    argument: float

    @property
    def value(self) -> complex:
        return cmath.exp(complex(self.log_magnitude, self.argument))

    def __mul__(self, other: "PhasedValue") -> "PhasedValue":
        return PhasedValue(self.log_magnitude + other.log_magnitude, self.argument + other.argument)


@dataclass(frozen=True)
class Factor:
    """One multivalued factor of the form.

    kind 'mono':   t_{pts[0]} ^ expo
    kind 'vanish': (t_{tar(p)} - t_p) ^ expo, the base collapsing at tau_p in {0,1}
    kind 'diff':   (t_{pts[0]} - t_{pts[1]}) ^ expo with |t_{pts[1]}| < |t_{pts[0]}|
    """

    kind: str
    expo: float
    pts: tuple[Point, ...]


class CyclePath:
    """Cycle for one diagram at fixed arguments z."""

    def __init__(self, diagram: Diagram, z: Sequence[complex], bump: BumpFn | None = None):
        self.diagram = diagram
        self.z = tuple(complex(v) for v in z)
        self.bump = bump or BumpFn()
        n = diagram.rows - 1
        if n < 1:
            raise ValueError("need a diagram with at least 2 rows")
        if len(self.z) != n + 1:
            raise ValueError("z must have one entry per top-row point")
        mods = [abs(v) for v in self.z]
        if mods[0] <= 0 or any(a >= b for a, b in zip(mods, mods[1:])):
            raise ValueError("need 0 < |z_1| < ... < |z_{n+1}|")
        sep = (1.0 - self.bump.epsilon) ** n * _SEPARATION_MARGIN
        worst = max(a / b for a, b in zip(mods, mods[1:]))
        if worst > sep:
            raise ValueError(
                f"consecutive |z| ratio {worst:.3g} too close to 1 for loop separation "
                f"(need <= {sep:.3g} at bump height {self.bump.epsilon})"
            )

        self.rank = n
        self.points: list[Point] = [(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]
        self.axis: dict[Point, int] = {p: a for a, p in enumerate(self.points)}
        # chain of integration points from each point up to row n+1, and the
        # index of the z anchor it collapses to at tau = 0
        self.chain: dict[Point, tuple[Point, ...]] = {}
        self.collapse: dict[Point, int] = {}
        for i in range(1, n + 2):
            self.chain[(i, n + 1)] = ()
            self.collapse[(i, n + 1)] = i
        for j in range(n, 0, -1):
            for i in range(1, j + 1):
                tar = diagram.target((i, j))
                self.chain[(i, j)] = ((i, j),) + self.chain[tar]
                self.collapse[(i, j)] = self.collapse[tar]

    @property
    def naxes(self) -> int:
        return len(self.points)

    def t_values(self, tau: np.ndarray) -> dict[Point, np.ndarray]:
        """All t-points for a (naxes, M) batch of tau vectors."""
        tau = np.atleast_2d(np.asarray(tau, dtype=float))
        out: dict[Point, np.ndarray] = {}
        m = tau.shape[1]
        for i, zi in enumerate(self.z, start=1):
            out[(i, self.rank + 1)] = np.full(m, zi, dtype=complex)
        for j in range(self.rank, 0, -1):
            for i in range(1, j + 1):
                tj = tau[self.axis[(i, j)]]
                f = self.bump(tj)
                out[(i, j)] = np.exp(2j * np.pi * tj) * (1.0 - f) * out[self.diagram.target((i, j))]
        return out


def cycle_for_w(w: Permutation, z: Sequence[complex], epsilon: float = 0.1) -> CyclePath:
    return CyclePath(Diagram.from_permutation(w), z, BumpFn(epsilon))


def cycle_point(c: CyclePath, tau: Sequence[float]) -> dict[Point, complex]:
    """The t-assignment at one tau vector (top row included, fixed at z)."""
    arr = np.asarray(tau, dtype=float).reshape(c.naxes, 1)
    return {p: complex(v[0]) for p, v in c.t_values(arr).items()}


# -- the multivalued form ------------------------------------------------------


def omega_factor_list(c: CyclePath, sp: SpectralParam) -> tuple[complex, list[Factor]]:
    """Constant log (z-only factors, principal branch) and the t-factors.

    Factors with exponent exactly 0 are dropped (their base may vanish on
    the cycle boundary; 0-th powers are 1).
    """
    n = c.rank
    if sp.rank != n:
        raise ValueError("spectral parameter rank does not match the cycle")
    lam = [float(x) for x in sp.lam]
    k = float(sp.k)

    const = 0.0 + 0.0j
    head = lam[0] + k * n / 2.0
    for zi in c.z:
        const += head * cmath.log(zi)
    ezv = 1.0 - 2.0 * k
    if ezv != 0.0:
        for i2 in range(1, n + 2):
            for i1 in range(i2 + 1, n + 2):
                const += ezv * cmath.log(c.z[i1 - 1] - c.z[i2 - 1])

    factors: list[Factor] = []
    e_cross = k - 1.0
    e_within = 2.0 - 2.0 * k
    for j in range(1, n + 1):
        e_row = lam[n - j + 1] - lam[n - j] - k
        for i in range(1, j + 1):
            p = (i, j)
            if e_row != 0.0:
                factors.append(Factor("mono", e_row, (p,)))
            x = c.diagram.target(p)[0]
            for i1 in range(1, j + 2):
                if e_cross == 0.0:
                    break
                if i1 == x:
                    factors.append(Factor("vanish", e_cross, (p,)))
                elif i1 < x:
                    factors.append(Factor("diff", e_cross, (p, (i1, j + 1))))
                else:
                    factors.append(Factor("diff", e_cross, ((i1, j + 1), p)))
        if e_within != 0.0:
            for i2 in range(1, j + 1):
                for i1 in range(i2 + 1, j + 1):
                    factors.append(Factor("diff", e_within, ((i1, j), (i2, j))))

    for f in factors:
        if f.kind == "diff" and c.collapse[f.pts[0]] <= c.collapse[f.pts[1]]:
            raise AssertionError(f"difference factor {f} not oriented big-minus-small")
    return const, factors


def _log_data(c: CyclePath, tau: np.ndarray):
    """t values plus log-moduli and unwound arguments for a tau batch."""
    tau = np.atleast_2d(np.asarray(tau, dtype=float))
    m = tau.shape[1]
    t: dict[Point, np.ndarray] = {}
    logabs: dict[Point, np.ndarray] = {}
    arg: dict[Point, np.ndarray] = {}
    n = c.rank
    for i, zi in enumerate(c.z, start=1):
        p = (i, n + 1)
        t[p] = np.full(m, zi, dtype=complex)
        logabs[p] = np.full(m, math.log(abs(zi)))
        arg[p] = np.full(m, cmath.phase(zi))
    for j in range(n, 0, -1):
        for i in range(1, j + 1):
            p = (i, j)
            tar = c.diagram.target(p)
            tj = tau[c.axis[p]]
            f = c.bump(tj)
            t[p] = np.exp(2j * np.pi * tj) * (1.0 - f) * t[tar]
            logabs[p] = np.log1p(-f) + logabs[tar]
            arg[p] = 2.0 * np.pi * tj + arg[tar]
    return t, logabs, arg


def _vanish_base(c: CyclePath, tau_axis: np.ndarray) -> np.ndarray:
    """1 - e^{2 pi i tau}(1 - f), evaluated without cancellation.

    Equals f + (1-f)(2 sin^2(pi tau) - i sin(2 pi tau)); real part is
    nonnegative, so the principal argument lies in [-pi/2, pi/2] and is
    continuous on 0 < tau < 1.
    """
    f = c.bump(tau_axis)
    s = np.sin(np.pi * tau_axis)
    return f + (1.0 - f) * (2.0 * s * s - 1j * np.sin(2.0 * np.pi * tau_axis))


def _factor_logs(c: CyclePath, sp: SpectralParam, tau: np.ndarray):
    """Per-factor (log-modulus, argument) arrays under the anchored branch."""
    tau = np.atleast_2d(np.asarray(tau, dtype=float))
    const, factors = omega_factor_list(c, sp)
    t, logabs, arg = _log_data(c, tau)
    logs = []
    with np.errstate(divide="ignore"):  # log(0) on the boundary is caught downstream
        for f in factors:
            if f.kind == "mono":
                p = f.pts[0]
                logs.append((logabs[p], arg[p]))
            elif f.kind == "vanish":
                p = f.pts[0]
                tar = c.diagram.target(p)
                g = _vanish_base(c, tau[c.axis[p]])
                logs.append((logabs[tar] + 0.5 * np.log(g.real**2 + g.imag**2),
                             arg[tar] + np.arctan2(g.imag, g.real)))
            else:
                big, small = f.pts
                ratio = t[small] / t[big]
                wv = 1.0 - ratio
                logs.append((logabs[big] + 0.5 * np.log(wv.real**2 + wv.imag**2),
                             arg[big] + np.arctan2(wv.imag, wv.real)))
    return const, factors, logs, t


def omega_w_eval(c: CyclePath, sp: SpectralParam, tau: Sequence[float]) -> PhasedValue:
    """Value of the coefficient function of the form at one interior point.

    The differential (the dt/dtau Jacobian) is not included; `integrate`
    applies it.  Raises if any factor base vanishes at tau.
    """
    arr = np.asarray(tau, dtype=float).reshape(c.naxes, 1)
    const, factors, logs, _ = _factor_logs(c, sp, arr)
    lm, ar = const.real, const.imag
    for f, (la, aa) in zip(factors, logs):
        if not np.isfinite(la[0]):
            raise ValueError(f"factor {f} evaluated on the singular locus at tau={list(tau)}")
        lm += f.expo * float(la[0])
        ar += f.expo * float(aa[0])
    return PhasedValue(lm, ar)


def factor_arguments(c: CyclePath, sp: SpectralParam, tau: Sequence[float]) -> list[float]:
    """Per-factor anchored arguments at one tau (closed-form branch)."""
    arr = np.asarray(tau, dtype=float).reshape(c.naxes, 1)
    _, _, logs, _ = _factor_logs(c, sp, arr)
    return [float(aa[0]) for _, aa in logs]


def _factor_bases(c: CyclePath, sp: SpectralParam, tau: Sequence[float]) -> list[complex]:
    arr = np.asarray(tau, dtype=float).reshape(c.naxes, 1)
    const, factors = omega_factor_list(c, sp)
    t = c.t_values(arr)
    out = []
    for f in factors:
        if f.kind == "mono":
            out.append(complex(t[f.pts[0]][0]))
        elif f.kind == "vanish":
            p = f.pts[0]
            out.append(complex(t[c.diagram.target(p)][0] - t[p][0]))
        else:
            big, small = f.pts
            out.append(complex(t[big][0] - t[small][0]))
    return out


def phase_continuation(
    c: CyclePath,
    sp: SpectralParam,
    tau_from: Sequence[float],
    tau_to: Sequence[float],
    args_from: Sequence[float],
    steps: int = 16,
    max_refinements: int = 20,
) -> list[float]:
    """Transport per-factor arguments along the straight tau-segment.

    Subdivides until every factor's per-step principal argument change is
    below pi/2; raises if refinement exceeds `max_refinements` doublings
    (segment passing too near the singular locus).
    """
    a = np.asarray(tau_from, dtype=float)
    b = np.asarray(tau_to, dtype=float)
    for _ in range(max_refinements):
        ok = True
        args = list(args_from)
        bases = _factor_bases(c, sp, a)
        for s in range(1, steps + 1):
            nxt = _factor_bases(c, sp, a + (b - a) * (s / steps))
            for idx, (b0, b1) in enumerate(zip(bases, nxt)):
                if b0 == 0 or b1 == 0:
                    raise ValueError("phase tracking failed near singular locus")
                d = cmath.phase(b1 / b0)
                if abs(d) >= math.pi / 2:
                    ok = False
                    break
                args[idx] += d
            if not ok:
                break
            bases = nxt
        if ok:
            return args
        steps *= 2
    raise ValueError("phase tracking failed near singular locus")


def anchor_arguments(c: CyclePath, sp: SpectralParam, eta: float = 1e-3) -> tuple[np.ndarray, list[float]]:
    """Base point tau = eta*(1,..,1) and the principal arguments there."""
    tau = np.full(c.naxes, eta)
    return tau, [cmath.phase(b) for b in _factor_bases(c, sp, tau)]


# -- quadrature ----------------------------------------------------------------


def tanh_sinh_rule_with_complement(
    npoints: int, cutoff: float = 3.2
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes x, complements 1-x (cancellation-free), and weights on (0, 1)."""
    u = np.linspace(-cutoff, cutoff, npoints)
    h = u[1] - u[0]
    y = np.pi * np.sinh(u)
    x = 1.0 / (1.0 + np.exp(-y))
    xm = 1.0 / (1.0 + np.exp(y))
    w = h * np.pi * np.cosh(u) * x * xm
    return x, xm, w


def tanh_sinh_rule(npoints: int, cutoff: float = 3.2) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on (0, 1); double-exponential in the trapezoid variable."""
    x, _, w = tanh_sinh_rule_with_complement(npoints, cutoff)
    return x, w


def gauss_legendre_rule(npoints: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(npoints)
    return 0.5 * (x + 1.0), 0.5 * w


def _rule(quad: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    if quad.scheme == "tanh-sinh":
        return tanh_sinh_rule(quad.points_per_axis)
    return gauss_legendre_rule(quad.points_per_axis)


def integrate(
    c: CyclePath,
    sp: SpectralParam,
    quad: QuadratureSpec | None = None,
    block: int = 1 << 17,
) -> complex:
    """Quadrature of the pulled-back form over [0,1]^N, N = n(n+1)/2.

    Includes the triangular Jacobian prod dt_{ij}/dtau_{ij} with
    dt/dtau = e^{2 pi i tau} (2 pi i (1-f) - f') t_tar.  The tensor grid is
    evaluated in fixed-size blocks in C order, so memory stays bounded and
    the summation order (hence the result) is deterministic for a spec.
    """
    quad = quad or QuadratureSpec(epsilon=c.bump.epsilon)
    if abs(quad.epsilon - c.bump.epsilon) > 1e-12:
        raise ValueError("quadrature epsilon disagrees with the cycle's bump height")
    x, wts = _rule(quad)
    naxes = c.naxes
    shape = (len(x),) * naxes
    total_nodes = len(x) ** naxes
    acc = 0.0 + 0.0j
    for start in range(0, total_nodes, block):
        flat = np.arange(start, min(start + block, total_nodes))
        idx = np.unravel_index(flat, shape)
        tau = np.stack([x[ix] for ix in idx])
        weight = np.ones(len(flat))
        for ix in idx:
            weight = weight * wts[ix]

        const, factors, logs, t = _factor_logs(c, sp, tau)
        with np.errstate(over="ignore", invalid="ignore"):
            total_log = np.full(len(flat), const, dtype=complex)
            for f, (la, aa) in zip(factors, logs):
                total_log = total_log + f.expo * (la + 1j * aa)
            vals = np.exp(total_log)
            for p in c.points:
                tj = tau[c.axis[p]]
                f = c.bump(tj)
                fp = c.bump.deriv(tj)
                vals = vals * np.exp(2j * np.pi * tj) * (2j * np.pi * (1.0 - f) - fp) * t[c.diagram.target(p)]
        bad = ~np.isfinite(vals)
        if np.any(bad):
            j = int(np.argmax(bad))
            raise ArithmeticError(f"non-finite integrand at tau = {tau[:, j].tolist()}")
        acc += complex(np.sum(vals * weight))
    return acc


def integrate_for_w(
    w: Permutation, z: Sequence[complex], sp: SpectralParam, quad: QuadratureSpec | None = None
) -> complex:
    quad = quad or QuadratureSpec()
    return integrate(cycle_for_w(w, z, quad.epsilon), sp, quad)


def leading_power(w: Permutation, sp: SpectralParam, z: Sequence[complex]) -> complex:
    """z^{w.lambda + rho} with principal powers."""
    mu = rs.add(rs.weyl_apply(w, sp.lam), sp.rho)
    return cmath.exp(sum(float(m) * cmath.log(complex(zi)) for m, zi in zip(mu, z)))


def leading_coeff_estimate(
    w: Permutation,
    sp: SpectralParam,
    r: float,
    quad: QuadratureSpec | None = None,
    scale: float = 1.0,
) -> complex:
    """Estimate of the leading coefficient from geometric z = scale*(r^n,...,1).

    Richardson extrapolation over ratios r and r/2 removes the first
    correction term of the asymptotic series.
    """
    quad = quad or QuadratureSpec()
    n = sp.rank

    def ratio_at(rv: float) -> complex:
        z = [scale * rv ** (n - i) for i in range(n + 1)]
        return integrate_for_w(w, z, sp, quad) / leading_power(w, sp, z)

    a1 = ratio_at(r)
    a2 = ratio_at(r / 2.0)
    return 2.0 * a2 - a1


def mellin_value_at_unit_coupling(w: Permutation, z: Sequence[complex], sp: SpectralParam) -> complex:
    """Closed form of the integral at k = 1, where the form degenerates to
    per-variable monomials and the loops separate.

    Substituting v_{ij} = t_{ij}/t_{tar(i,j)} makes each axis an independent
    loop integral of v^G dv with an accumulated exponent

        G(i,j) = e_j + sum over children (p, j-1) of (G(p,j-1) + 1),

    e_j the row-monomial exponent, each contributing (e^{2 pi i G} - 1)/(G+1);
    the top row collects z_i powers and the Vandermonde carries power -1.
    """
    if sp.k != 1:
        raise ValueError("closed form holds at k = 1 only")
    n = sp.rank
    lam = [float(x) for x in sp.lam]
    d = Diagram.from_permutation(w)
    z = [complex(v) for v in z]
    g: dict[Point, float] = {}
    out = 1.0 + 0.0j
    for j in range(1, n + 1):
        e_row = lam[n - j + 1] - lam[n - j] - 1.0
        for i in range(1, j + 1):
            acc = e_row
            if j > 1:
                for p in range(1, j):
                    if d.target((p, j - 1)) == (i, j):
                        acc += g[(p, j - 1)] + 1.0
            g[(i, j)] = acc
            out *= (cmath.exp(2j * math.pi * acc) - 1.0) / (acc + 1.0)
    head = lam[0] + n / 2.0
    for i in range(1, n + 2):
        gz = head
        for p in range(1, n + 1):
            if d.target((p, n)) == (i, n + 1):
                gz += g[(p, n)] + 1.0
        out *= z[i - 1] ** gz
    for i2 in range(1, n + 2):
        for i1 in range(i2 + 1, n + 2):
            out /= z[i1 - 1] - z[i2 - 1]
    return out


def fd_eigenvalue(
    w: Permutation,
    z: Sequence[float],
    sp: SpectralParam,
    quad: QuadratureSpec | None = None,
    h: float = 1e-3,
) -> complex:
    """Apply L to the integral by central differences in u_i = log z_i.

    Returns (L phi)/phi at z; for a solution this is (lambda,lambda)-(rho,rho).
    """
    quad = quad or QuadratureSpec()
    z = [float(v) for v in z]
    n = sp.rank
    k = float(sp.k)

    def phi(zv: Sequence[float]) -> complex:
        return integrate_for_w(w, zv, sp, quad)

    base = phi(z)
    plus = []
    minus = []
    for i in range(n + 1):
        zp = list(z)
        zm = list(z)
        zp[i] = z[i] * math.exp(h)
        zm[i] = z[i] * math.exp(-h)
        plus.append(phi(zp))
        minus.append(phi(zm))
    acc = 0.0 + 0.0j
    for i in range(n + 1):
        acc += (plus[i] - 2.0 * base + minus[i]) / h**2
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            di = (plus[i] - minus[i]) / (2.0 * h)
            dj = (plus[j] - minus[j]) / (2.0 * h)
            acc -= k * (z[j] + z[i]) / (z[j] - z[i]) * (di - dj)
    return acc / base


def result_json(
    w: Permutation,
    z: Sequence[complex],
    sp: SpectralParam,
    quad: QuadratureSpec,
    value: complex,
    extra: Mapping | None = None,
) -> str:
    doc = {
        "w": list(w.images),
        "z": [v.real if v.imag == 0 else [v.real, v.imag] for v in map(complex, z)],
        "lambda": [str(x) for x in sp.lam],
        "k": str(sp.k),
        "integral": {"re": value.real, "im": value.imag},
        "spec": quad.as_dict(),
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, sort_keys=True)
