"""Exact arithmetic for the A_n root system.

Vectors live in V = Q^{n+1} in the orthonormal e-basis; weight-type vectors
(spectral parameters) are constrained to the sum-zero subspace E.  All
values are tuples of Fractions and immutable.

Convention: a permutation w acts on coordinates by (w.v)_i = v_{w(i)}, so
that w.lambda = (lambda_{w(1)}, ..., lambda_{w(n+1)}).  This is a right
action: apply(w1*w2, v) = apply(w2, apply(w1, v)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence, Union

Scalar = Union[int, Q]
Vector = tuple[Q, ...]


def vec(values: Sequence) -> Vector:
    """Coerce a sequence of ints/Fractions/strings like '1/2' to a Vector."""
    return tuple(Q(v) for v in values)


def zero_vec(dim: int) -> Vector:
    return (Q(0),) * dim


def add(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Scalar, a: Vector) -> Vector:
    c = Q(c)
    return tuple(c * x for x in a)


def inner(a: Vector, b: Vector) -> Q:
    """Standard Euclidean product; exact."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return sum((x * y for x, y in zip(a, b)), Q(0))


def coroot(alpha: Vector) -> Vector:
    """2*alpha/(alpha,alpha); equals alpha for A_n roots."""
    norm2 = inner(alpha, alpha)
    if norm2 == 0:
        raise ValueError("coroot of the zero vector")
    return scale(Q(2) / norm2, alpha)


def basis_vector(dim: int, i: int) -> Vector:
    """e_i with 1-based index i."""
    if not 1 <= i <= dim:
        raise ValueError("basis index out of range")
    return tuple(Q(1) if j == i - 1 else Q(0) for j in range(dim))


def root(n: int, i: int, j: int) -> Vector:
    """e_i - e_j in Q^{n+1} (1-based, i != j)."""
    if i == j:
        raise ValueError("i and j must differ")
    return sub(basis_vector(n + 1, i), basis_vector(n + 1, j))


def simple_roots(n: int) -> list[Vector]:
    return [root(n, i, i + 1) for i in range(1, n + 1)]


def positive_roots(n: int) -> list[Vector]:
    return [root(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


def delta(n: int) -> Vector:
    """Half sum of positive roots: (n/2, (n-2)/2, ..., -n/2)."""
    return tuple(Q(n - 2 * i, 2) for i in range(n + 1))


def rho(n: int, k: Scalar) -> Vector:
    """k * delta."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return scale(k, delta(n))


def fundamental_weights(n: int) -> list[Vector]:
    """Lambda_i with (Lambda_i, alpha_j) = delta_ij, in the sum-zero subspace."""
    total = tuple(Q(1) for _ in range(n + 1))
    out = []
    for i in range(1, n + 1):
        head = tuple(Q(1) if j < i else Q(0) for j in range(n + 1))
        out.append(sub(head, scale(Q(i, n + 1), total)))
    return out


def _images(w) -> tuple[int, ...]:
    images = tuple(w.images) if hasattr(w, "images") else tuple(w)
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
    return images


def weyl_apply(w, v: Vector) -> Vector:
    """(w.v)_i = v_{w(i)}; w is a Permutation or a 1-based image tuple."""
    images = _images(w)
    if len(images) != len(v):
        raise ValueError("permutation size does not match vector dimension")
    return tuple(v[images[i] - 1] for i in range(len(v)))


def reflection(n: int, i: int, j: int):
    """Image tuple of r_{e_i - e_j}: swaps the i-th and j-th coordinate."""
    images = list(range(1, n + 2))
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return tuple(images)


def dominance_leq(mu: Vector, lam: Vector) -> bool:
    """True iff lam - mu is a nonnegative-integer combination of simple roots.

    lam - mu = sum l_j alpha_j means the partial sums of the coordinate
    differences are the l_j; all must be nonnegative integers and the total
    must vanish.
    """
    if len(mu) != len(lam):
        raise ValueError("dimension mismatch")
    if sum(mu) != sum(lam):
        return False
    partial = Q(0)
    for d in (x - y for x, y in zip(lam[:-1], mu[:-1])):
        partial += d
        if partial < 0 or partial.denominator != 1:
            return False
    return True


@dataclass(frozen=True)
class RootSystemAn:
    """Rank-n root data with a coupling constant k."""

    rank: int
    k: Q = Q(1)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        object.__setattr__(self, "k", Q(self.k))

    @property
    def positive_roots(self) -> list[Vector]:
        return positive_roots(self.rank)

    @property
    def simple_roots(self) -> list[Vector]:
        return simple_roots(self.rank)

    @property
    def delta(self) -> Vector:
        return delta(self.rank)

    @property
    def rho(self) -> Vector:
        return rho(self.rank, self.k)

    @property
    def fundamental_weights(self) -> list[Vector]:
        return fundamental_weights(self.rank)
