"""Sparse multivariate polynomials with exact Fraction coefficients.

Terms are stored as ``{exponent_tuple: Fraction}`` with zero coefficients
dropped, so equality of dictionaries is equality of polynomials.  A fixed
number of variables is part of the value; mixing arities is an error.

Used for q-polynomials of the symmetric-group identities, for operator
symbols p_mu(lambda_1..lambda_{n+1}), and for the Vandermonde differential
identities.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _coerce(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


class Poly:
    """Polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Scalar] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = _coerce(c)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        c = _coerce(c)
        return cls(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        """The variable x_i (0-based)."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar], const: Scalar = 0) -> "Poly":
        """c_0*x_0 + ... + c_{m-1}*x_{m-1} + const."""
        n = len(coeffs)
        p = cls.const(n, const)
        for i, c in enumerate(coeffs):
            if _coerce(c) != 0:
                e = [0] * n
                e[i] = 1
                p = p + cls(n, {tuple(e): c})
        return p

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, 1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __call__(self, values: Sequence[Scalar]) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        vals = [_coerce(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, p in zip(vals, e):
                if p:
                    t *= v ** p
            total += t
        return total

    # -- substitutions -----------------------------------------------------

    def shift(self, deltas: Sequence[Scalar]) -> "Poly":
        """Substitute x_i -> x_i + deltas[i]."""
        if len(deltas) != self.nvars:
            raise ValueError("wrong number of shifts")
        ds = [_coerce(d) for d in deltas]
        # Expand each monomial prod (x_i + d_i)^{e_i} by binomials.
        from math import comb

        out = Poly.zero(self.nvars)
        for e, c in self.terms.items():
            expanded = Poly.const(self.nvars, c)
            for i, (p, d) in enumerate(zip(e, ds)):
                if p == 0:
                    continue
                if d == 0:
                    expanded = expanded * Poly.var(self.nvars, i) ** p
                    continue
                binom = Poly.zero(self.nvars)
                for j in range(p + 1):
                    ev = [0] * self.nvars
                    ev[i] = j
                    binom = binom + Poly(self.nvars, {tuple(ev): comb(p, j) * d ** (p - j)})
                expanded = expanded * binom
            out = out + expanded
        return out

    def permute_vars(self, images: Sequence[int]) -> "Poly":
        """Substitute x_i -> x_{images[i]} (0-based images, a bijection)."""
        if sorted(images) != list(range(self.nvars)):
            raise ValueError("images must be a permutation of the variables")
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, p in enumerate(e):
                ne[images[i]] = p
            key = tuple(ne)
            out[key] = out.get(key, Fraction(0)) + c
        return Poly(self.nvars, out)

    def is_symmetric(self) -> bool:
        """Invariance under every transposition of adjacent variables."""
        for i in range(self.nvars - 1):
            images = list(range(self.nvars))
            images[i], images[i + 1] = images[i + 1], images[i]
            if self.permute_vars(images) != self:
                return False
        return True

    def deriv(self, i: int) -> "Poly":
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return Poly(self.nvars, out)

    def divide_by_linear(self, linear: "Poly") -> tuple["Poly", "Poly"]:
        """Divide by a polynomial of total degree 1; returns (quotient, remainder).

        The remainder has degree 0 in the pivot variable (the first variable
        with a nonzero linear coefficient).
        """
        self._check(linear)
        if linear.degree() != 1:
            raise ValueError("divisor must have total degree 1")
        pivot = None
        for e, c in linear.terms.items():
            if sum(e) == 1:
                pivot = e.index(1)
                break
        assert pivot is not None
        ev = [0] * self.nvars
        ev[pivot] = 1
        lead = linear.terms[tuple(ev)]

        quotient = Poly.zero(self.nvars)
        rem = self
        while True:
            top = {e: c for e, c in rem.terms.items() if e[pivot] > 0}
            if not top:
                break
            d = max(e[pivot] for e in top)
            qterms: dict[tuple, Fraction] = {}
            for e, c in top.items():
                if e[pivot] == d:
                    ne = list(e)
                    ne[pivot] -= 1
                    qterms[tuple(ne)] = c / lead
            q = Poly(self.nvars, qterms)
            quotient = quotient + q
            rem = rem - q * linear
        return quotient, rem

    # -- display -----------------------------------------------------------

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[e]
            mono = "*".join(f"x{i}^{p}" if p > 1 else f"x{i}" for i, p in enumerate(e) if p)
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(bits)


def univariate_coeffs(p: Poly) -> list[Fraction]:
    """Ascending coefficient list of a 1-variable polynomial."""
    if p.nvars != 1:
        raise ValueError("not univariate")
    if p.is_zero:
        return [Fraction(0)]
    d = max(e[0] for e in p.terms)
    return [p.terms.get((i,), Fraction(0)) for i in range(d + 1)]


def geometric_sum(nvars: int, i: int, length: int) -> Poly:
    """1 + x_i + ... + x_i^{length-1}."""
    out = Poly.zero(nvars)
    for j in range(length):
        ev = [0] * nvars
        ev[i] = j
        out = out + Poly(nvars, {tuple(ev): 1})
    return out


def vandermonde(nvars: int) -> Poly:
    """prod_{p<q} (x_p - x_q)."""
    out = Poly.const(nvars, 1)
    for p, q in product(range(nvars), repeat=2):
        if p < q:
            out = out * (Poly.var(nvars, p) - Poly.var(nvars, q))
    return out


def from_exponent_dict(nvars: int, d: Mapping[tuple, Scalar]) -> Poly:
    return Poly(nvars, d)
