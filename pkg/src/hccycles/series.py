"""Asymptotic series for the hypergeometric system of type A_n.

Solutions of L phi = ((lambda,lambda) - (rho,rho)) phi of the form
phi = sum_{nu >= mu} G_nu e^{nu(u)} with mu = w.lambda + rho are built from
the Freudenthal-type recurrence

  {(nu-rho, nu-rho) - (mu-rho, mu-rho)} G_nu
      = 2k sum_{alpha; R+} sum_{j>=1} (nu - j alpha, alpha) G_{nu - j alpha}

in exact rational arithmetic, normalized by G_mu = 1.  Exponent offsets
nu - mu are stored in simple-root coordinates (nonnegative integers); the
coordinate sum is the grading ("depth").

The same module builds symbol tables p_mu(lambda) of differential operators
commuting with L from their constant term p_0(lambda) = sigma(lambda - rho),
again by exact recurrence, and checks truncated commutators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterator, Mapping, Sequence

from . import rootsystem as rs
from .polynomial import Poly

Offset = tuple[int, ...]


class ResonanceError(ValueError):
    """Spectral parameter hits the resonant set of the recurrence."""

    def __init__(self, message: str, nu=None):
        super().__init__(message)
        self.nu = nu


@dataclass(frozen=True)
class SpectralParam:
    """Sum-zero spectral parameter lambda with coupling k, exact rationals."""

    lam: tuple[Q, ...]
    k: Q

    def __post_init__(self):
        lam = rs.vec(self.lam)
        if sum(lam) != 0:
            raise ValueError("lambda coordinates must sum to 0")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "k", Q(self.k))

    @property
    def rank(self) -> int:
        return len(self.lam) - 1

    @property
    def rho(self) -> tuple[Q, ...]:
        return rs.rho(self.rank, self.k)

    def is_generic(self) -> bool:
        """(lambda, alpha_check) not an integer, for every root."""
        for alpha in rs.positive_roots(self.rank):
            pairing = rs.inner(self.lam, rs.coroot(alpha))
            if pairing.denominator == 1:
                return False
        return True


def gamma_L(sp: SpectralParam) -> Q:
    """(lambda,lambda) - (rho,rho), the eigenvalue of L; Weyl invariant."""
    return rs.inner(sp.lam, sp.lam) - rs.inner(sp.rho, sp.rho)


# -- offset bookkeeping -------------------------------------------------------


def root_offset_coords(n: int) -> list[Offset]:
    """Positive roots as 0/1 vectors in simple-root coordinates."""
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 2):
            out.append(tuple(1 if a - 1 <= i <= b - 2 else 0 for i in range(n)))
    return out


def offsets_of_height(n: int, h: int) -> Iterator[Offset]:
    if n == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in offsets_of_height(n - 1, h - first):
            yield (first,) + rest


def offset_vector(n: int, offset: Offset) -> tuple[Q, ...]:
    v = rs.zero_vec(n + 1)
    for c, alpha in zip(offset, rs.simple_roots(n)):
        if c:
            v = rs.add(v, rs.scale(c, alpha))
    return v


# -- Freudenthal-type coefficient tables --------------------------------------


@dataclass
class CoeffTable:
    """Coefficients G_nu of one asymptotic solution, keyed by nu - mu."""

    mu: tuple[Q, ...]
    k: Q
    depth: int
    entries: dict[Offset, Q] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.mu) - 1

    @property
    def wlam(self) -> tuple[Q, ...]:
        """mu - rho, the Weyl translate of lambda carried by this solution."""
        return rs.sub(self.mu, rs.rho(self.rank, self.k))

    def to_json(self) -> str:
        return json.dumps(
            {
                "mu": [str(c) for c in self.mu],
                "k": str(self.k),
                "entries": [
                    {"offset": list(off), "value": str(val)}
                    for off, val in self.entries.items()
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CoeffTable":
        raw = json.loads(text)
        entries = {tuple(e["offset"]): Q(e["value"]) for e in raw["entries"]}
        depth = max((sum(off) for off in entries), default=0)
        return cls(
            mu=rs.vec(raw["mu"]),
            k=Q(raw["k"]),
            depth=depth,
            entries=entries,
        )


def _validate_mu(mu: Sequence, sp: SpectralParam) -> tuple[Q, ...]:
    mu = rs.vec(mu)
    wlam = rs.sub(mu, sp.rho)
    if sorted(wlam) != sorted(sp.lam):
        raise ValueError("mu - rho is not a Weyl translate of lambda")
    return mu


def freudenthal_table(
    mu: Sequence, sp: SpectralParam, depth: int, require_generic: bool = True
) -> CoeffTable:
    """Solve the recurrence for G_nu, nu = mu + (height <= depth) offsets.

    Raises ResonanceError if lambda pairs integrally with a root (the
    asymptotic exponents of two solutions then collide) or if a recurrence
    bracket vanishes at some nu.
    """
    mu = _validate_mu(mu, sp)
    n = sp.rank
    if require_generic:
        for alpha in rs.positive_roots(n):
            pairing = rs.inner(sp.lam, rs.coroot(alpha))
            if pairing.denominator == 1:
                j = abs(int(pairing))
                nu = rs.add(mu, rs.scale(j, alpha))
                raise ResonanceError(
                    "resonant spectral parameter: (lambda, coroot of "
                    f"{tuple(map(str, alpha))}) = {pairing} is an integer; "
                    f"exponents collide at nu = {tuple(map(str, nu))}",
                    nu=nu,
                )

    wlam = rs.sub(mu, sp.rho)
    roots = rs.positive_roots(n)
    root_coords = root_offset_coords(n)
    table: dict[Offset, Q] = {(0,) * n: Q(1)}

    for h in range(1, depth + 1):
        for offset in sorted(offsets_of_height(n, h)):
            beta = offset_vector(n, offset)
            nu_minus_rho = rs.add(wlam, beta)
            bracket = rs.inner(nu_minus_rho, nu_minus_rho) - rs.inner(wlam, wlam)
            rhs = Q(0)
            nu = rs.add(mu, beta)
            for alpha, coords in zip(roots, root_coords):
                j = 1
                while True:
                    lower = tuple(c - j * rc for c, rc in zip(offset, coords))
                    if any(c < 0 for c in lower):
                        break
                    term = rs.inner(rs.sub(nu, rs.scale(j, alpha)), alpha)
                    rhs += term * table[lower]
                    j += 1
            rhs *= 2 * sp.k
            if bracket == 0:
                raise ResonanceError(
                    "resonant spectral parameter: recurrence bracket vanishes "
                    f"at nu = {tuple(map(str, nu))}",
                    nu=nu,
                )
            table[offset] = rhs / bracket

    return CoeffTable(mu=mu, k=sp.k, depth=depth, entries=table)


def freudenthal_table_for_w(
    w, sp: SpectralParam, depth: int, require_generic: bool = True
) -> CoeffTable:
    """Table for mu = w.lambda + rho."""
    mu = rs.add(rs.weyl_apply(w, sp.lam), sp.rho)
    return freudenthal_table(mu, sp, depth, require_generic)


def residual_L(table: CoeffTable) -> Q:
    """Max |coefficient| of (L - eigenvalue) applied to the truncated series.

    L is applied through its expansion
    L = sum d_i^2 - 2 sum (rho,e_i) d_i - 2k sum_{i<j} sum_m e^{m(u_i-u_j)}(d_i-d_j),
    coefficient by coefficient in the e^{nu(u)} basis; exact zero expected.
    """
    n = table.rank
    k = table.k
    rho = rs.rho(n, k)
    wlam = table.wlam
    lam_norm2 = rs.inner(wlam, wlam)
    eigen = lam_norm2 - rs.inner(rho, rho)
    roots = rs.positive_roots(n)
    root_coords = root_offset_coords(n)

    worst = Q(0)
    for offset, g in table.entries.items():
        nu = rs.add(rs.add(wlam, rho), offset_vector(n, offset))
        acc = (rs.inner(nu, nu) - 2 * rs.inner(rho, nu) - eigen) * g
        for alpha, coords in zip(roots, root_coords):
            m = 1
            while True:
                lower = tuple(c - m * rc for c, rc in zip(offset, coords))
                if any(c < 0 for c in lower):
                    break
                acc -= 2 * k * rs.inner(rs.sub(nu, rs.scale(m, alpha)), alpha) * table.entries[lower]
                m += 1
        worst = max(worst, abs(acc))
    return worst


def phi_eval(table: CoeffTable, z: Sequence[complex], depth: int | None = None) -> complex:
    """z^mu * sum G_nu z^{nu-mu}, truncated; principal powers.

    Requires 0 < |z_1| < ... < |z_{n+1}| (the asymptotic zone).
    """
    import cmath

    zs = [complex(v) for v in z]
    if len(zs) != table.rank + 1:
        raise ValueError("z has wrong length")
    mods = [abs(v) for v in zs]
    if mods[0] <= 0 or any(a >= b for a, b in zip(mods, mods[1:])):
        raise ValueError("need 0 < |z_1| < ... < |z_{n+1}| for the asymptotic zone")

    head = cmath.exp(sum(float(m) * cmath.log(zi) for m, zi in zip(table.mu, zs)))
    ratios = [zs[i] / zs[i + 1] for i in range(table.rank)]
    if depth is None:
        depth = table.depth
    total = 0j
    for offset in sorted(table.entries, key=lambda o: (sum(o), o)):
        if sum(offset) > depth:
            continue
        term = complex(table.entries[offset])
        for r, c in zip(ratios, offset):
            term *= r ** c
        total += term
    return head * total


def series_terms_by_depth(table: CoeffTable, z: Sequence[complex]) -> list[float]:
    """|sum of depth-h terms| of the normalized series, h = 0..depth."""
    zs = [complex(v) for v in z]
    ratios = [zs[i] / zs[i + 1] for i in range(table.rank)]
    sums = [0j] * (table.depth + 1)
    for offset, g in table.entries.items():
        term = complex(g)
        for r, c in zip(ratios, offset):
            term *= r ** c
        sums[sum(offset)] += term
    return [abs(s) for s in sums]


def a1_hypergeometric_coefficients(sp: SpectralParam, w, depth: int) -> list[Q]:
    """Rank-1 oracle: solve the hypergeometric ODE for g(x) term by term.

    For phi = z_1^a z_2^b g(z_1/z_2) with (a, b) = w.lambda + rho, the
    eigenvalue equation reduces to a one-variable ODE whose power-series
    coefficients satisfy a two-term recursion; derived independently of the
    exponential-basis recurrence.
    """
    if sp.rank != 1:
        raise ValueError("rank-1 oracle only")
    mu = rs.add(rs.weyl_apply(w, sp.lam), sp.rho)
    a, b = mu
    k = sp.k
    e_val = rs.inner(sp.lam, sp.lam) - rs.inner(sp.rho, sp.rho)
    coeffs = [Q(1)]
    for c in range(1, depth + 1):
        num = (a + c - 1) ** 2 + (b - c + 1) ** 2 - e_val + k * (a - b + 2 * c - 2)
        den = (a + c) ** 2 + (b - c) ** 2 - e_val - k * (a - b + 2 * c)
        if den == 0:
            raise ResonanceError(f"ODE recursion denominator vanishes at order {c}")
        coeffs.append(coeffs[-1] * num / den)
    return coeffs


# -- commuting-operator symbols ------------------------------------------------


def commuting_symbol_table(
    sigma: Poly, n: int, k: Q, depth: int
) -> dict[Offset, Poly]:
    """Symbols p_mu of the operator with Harish-Chandra image sigma.

    p_0(lambda) = sigma(lambda - rho); higher symbols solve

      (2 lambda - 2 rho + mu, mu) p_mu(lambda) =
        2k sum_alpha sum_j {(lambda+mu-j alpha, alpha) p_{mu-j alpha}(lambda)
                            - (lambda, alpha) p_{mu-j alpha}(lambda + j alpha)}

    by exact polynomial division; a nonzero remainder is a hard error.
    """
    k = Q(k)
    nvars = n + 1
    if sigma.nvars != nvars:
        raise ValueError(f"sigma must be a polynomial in {nvars} variables")
    if not sigma.is_symmetric():
        raise ValueError("sigma must be a symmetric polynomial")

    rho = rs.rho(n, k)
    roots = rs.positive_roots(n)
    root_coords = root_offset_coords(n)

    table: dict[Offset, Poly] = {(0,) * n: sigma.shift([-r for r in rho])}
    for h in range(1, depth + 1):
        for offset in sorted(offsets_of_height(n, h)):
            m = offset_vector(n, offset)
            bracket = Poly.linear([2 * c for c in m], rs.inner(rs.sub(m, rs.scale(2, rho)), m))
            if bracket.is_zero:
                raise ArithmeticError(f"vanishing symbol bracket at offset {offset}")
            rhs = Poly.zero(nvars)
            for alpha, coords in zip(roots, root_coords):
                j = 1
                while True:
                    lower = tuple(c - j * rc for c, rc in zip(offset, coords))
                    if any(c < 0 for c in lower):
                        break
                    p_low = table[lower]
                    lin1 = Poly.linear(list(alpha), rs.inner(rs.sub(m, rs.scale(j, alpha)), alpha))
                    lin2 = Poly.linear(list(alpha), 0)
                    shifted = p_low.shift([j * c for c in alpha])
                    rhs = rhs + lin1 * p_low - lin2 * shifted
                    j += 1
            rhs = rhs * (2 * k)
            quotient, rem = rhs.divide_by_linear(bracket)
            if not rem.is_zero:
                raise ArithmeticError(
                    f"symbol recurrence not divisible by its bracket at offset {offset}"
                )
            table[offset] = quotient
    return table


def symbol_recurrence_residuals(table: Mapping[Offset, Poly], n: int, k: Q) -> dict[Offset, Poly]:
    """bracket*p_mu - rhs recomputed from the table; all zero iff it commutes with L."""
    k = Q(k)
    nvars = n + 1
    rho = rs.rho(n, k)
    roots = rs.positive_roots(n)
    root_coords = root_offset_coords(n)
    out: dict[Offset, Poly] = {}
    for offset, p in table.items():
        if sum(offset) == 0:
            continue
        m = offset_vector(n, offset)
        bracket = Poly.linear([2 * c for c in m], rs.inner(rs.sub(m, rs.scale(2, rho)), m))
        rhs = Poly.zero(nvars)
        for alpha, coords in zip(roots, root_coords):
            j = 1
            while True:
                lower = tuple(c - j * rc for c, rc in zip(offset, coords))
                if any(c < 0 for c in lower):
                    break
                p_low = table.get(lower, Poly.zero(nvars))
                lin1 = Poly.linear(list(alpha), rs.inner(rs.sub(m, rs.scale(j, alpha)), alpha))
                lin2 = Poly.linear(list(alpha), 0)
                rhs = rhs + lin1 * p_low - lin2 * p_low.shift([j * c for c in alpha])
                j += 1
        out[offset] = bracket * p - rhs * (2 * k)
    return out


def weyl_invariance_check(table: Mapping[Offset, Poly], n: int, k: Q) -> bool:
    """Whether the truncated operator is Weyl-group invariant.

    Equivalent criterion: the table solves the commutation recurrence
    exactly and p_0(lambda + rho) is a symmetric polynomial (the constant
    term determines the operator, and symmetric images are exactly the
    invariant operators).
    """
    zero_off = (0,) * n
    if zero_off not in table:
        return False
    residuals = symbol_recurrence_residuals(table, n, k)
    if any(not r.is_zero for r in residuals.values()):
        return False
    p0 = table[zero_off]
    return p0.shift(list(rs.rho(n, Q(k)))).is_symmetric()


def operator_commutator(
    table_a: Mapping[Offset, Poly], table_b: Mapping[Offset, Poly], n: int
) -> dict[Offset, Poly]:
    """Symbols of [A,B] at every offset both tables fully determine.

    Coefficient at kappa: sum over mu+nu=kappa of
    a_mu(lambda+nu) b_nu(lambda) - b_nu(lambda+mu) a_mu(lambda).
    """
    nvars = n + 1
    depth_a = max(sum(o) for o in table_a)
    depth_b = max(sum(o) for o in table_b)
    depth = min(depth_a, depth_b)
    out: dict[Offset, Poly] = {}
    for h in range(depth + 1):
        for kappa in offsets_of_height(n, h):
            acc = Poly.zero(nvars)
            for mu in table_a:
                nu = tuple(c - d for c, d in zip(kappa, mu))
                if any(c < 0 for c in nu) or nu not in table_b:
                    continue
                a_mu, b_nu = table_a[mu], table_b[nu]
                shift_nu = list(offset_vector(n, nu))
                shift_mu = list(offset_vector(n, mu))
                acc = acc + a_mu.shift(shift_nu) * b_nu - b_nu.shift(shift_mu) * a_mu
            out[kappa] = acc
    return out


def l_operator_symbols(n: int, k: Q, depth: int) -> dict[Offset, Poly]:
    """Direct expansion of L: p_0 = sum x_i^2 - 2 sum rho_i x_i,
    p_{m(e_i-e_j)} = -2k (x_i - x_j)."""
    k = Q(k)
    nvars = n + 1
    rho = rs.rho(n, k)
    p0 = Poly.zero(nvars)
    for i in range(nvars):
        p0 = p0 + Poly.var(nvars, i) ** 2 - 2 * rho[i] * Poly.var(nvars, i)
    out: dict[Offset, Poly] = {(0,) * n: p0}
    for h in range(1, depth + 1):
        for offset in offsets_of_height(n, h):
            out[offset] = Poly.zero(nvars)
    for coords, alpha in zip(root_offset_coords(n), rs.positive_roots(n)):
        m = 1
        while m * sum(coords) <= depth:
            offset = tuple(m * c for c in coords)
            out[offset] = Poly.linear([-2 * k * c for c in alpha], 0)
            m += 1
    return out


def elementary_power_sum(nvars: int, power: int) -> Poly:
    """sum_i x_i^power."""
    out = Poly.zero(nvars)
    for i in range(nvars):
        out = out + Poly.var(nvars, i) ** power
    return out
