"""Diagram calculus for the symmetric group.

A diagram on r rows is the triangular point set {(i,j) | 1 <= i <= j <= r}
with one marked point (i_j, j) per row and the induced target map

    tar(i,j) = (i, j+1)   if i <  i_{j+1}
             = (i+1, j+1) if i >= i_{j+1}.

The marks determine everything, so a Diagram stores only the mark vector.
Diagrams with r rows are in bijection with S_r; w(i) is the number of
points in the connected component of (i, r).

Permutations are stored as 1-based image tuples and compose as functions:
(w1 * w2)(i) = w1(w2(i)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterator, Sequence

from .polynomial import Poly, geometric_sum

Point = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def longest(cls, r: int) -> "Permutation":
        return cls(tuple(range(r, 0, -1)))

    @classmethod
    def generator(cls, i: int, r: int) -> "Permutation":
        """Adjacent transposition sigma_i swapping i and i+1."""
        if not 1 <= i <= r - 1:
            raise ValueError(f"generator index {i} out of range for S_{r}")
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.rank + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.rank
        for i, im in enumerate(self.images, start=1):
            inv[im - 1] = i
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        """Number of pairs i < j with w(i) > w(j); the Coxeter length oracle."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def all_permutations(r: int) -> Iterator[Permutation]:
    for images in _itperms(range(1, r + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class Diagram:
    marks: tuple[int, ...]

    def __post_init__(self):
        marks = tuple(int(m) for m in self.marks)
        for j, ij in enumerate(marks, start=1):
            if not 1 <= ij <= j:
                raise ValueError(f"mark {ij} in row {j} violates 1 <= i_j <= j")
        object.__setattr__(self, "marks", marks)

    @property
    def rows(self) -> int:
        return len(self.marks)

    def points(self) -> Iterator[Point]:
        for j in range(1, self.rows + 1):
            for i in range(1, j + 1):
                yield (i, j)

    def is_marked(self, point: Point) -> bool:
        i, j = point
        return self.marks[j - 1] == i

    def target(self, point: Point) -> Point:
        i, j = point
        if not (1 <= i <= j < self.rows):
            raise ValueError(f"point {point} has no target in a {self.rows}-row diagram")
        return (i, j + 1) if i < self.marks[j] else (i + 1, j + 1)

    def source(self, point: Point) -> Point:
        """Inverse of target; defined exactly on the unmarked points."""
        i, j = point
        if j < 2 or not 1 <= i <= j:
            raise ValueError(f"point {point} outside rows 2..{self.rows}")
        if self.is_marked(point):
            raise ValueError(f"marked point {point} has no source")
        return (i, j - 1) if i < self.marks[j - 1] else (i - 1, j - 1)

    def chain_down(self, point: Point) -> list[Point]:
        """point, source(point), ... down to the marked point of its component."""
        out = [point]
        while not self.is_marked(out[-1]):
            out.append(self.source(out[-1]))
        return out

    def to_permutation(self) -> Permutation:
        """w(i) = size of the connected component of (i, r)."""
        r = self.rows
        return Permutation(tuple(len(self.chain_down((i, r))) for i in range(1, r + 1)))

    @classmethod
    def from_permutation(cls, w: Permutation) -> "Diagram":
        """Inverse of to_permutation: i_r = w^{-1}(1), then strip and recurse."""
        images = list(w.images)
        marks: list[int] = []
        while images:
            pos = images.index(1) + 1
            marks.append(pos)
            images = [v - 1 for v in images[:pos - 1] + images[pos:]]
        return cls(tuple(reversed(marks)))

    def length(self) -> int:
        """Coxeter length of the associated permutation: sum (i_j - 1)."""
        return sum(m - 1 for m in self.marks)

    def left_arrow_count(self) -> int:
        """Arrows keeping their column, tar(i,j) = (i, j+1); equals length()."""
        return sum(
            1
            for j in range(1, self.rows)
            for i in range(1, j + 1)
            if self.target((i, j)) == (i, j + 1)
        )

    def reduced_word(self) -> tuple[int, ...]:
        """Generator indices of the block presentation w = w_r w_{r-1} ... w_1.

        Block w_k is sigma_k sigma_{k+1} ... sigma_{i_{r-k+1}+k-2} when the
        mark i_{r-k+1} exceeds 1, and empty otherwise.  The word multiplies
        back to to_permutation() in the written order and has length().
        """
        r = self.rows
        word: list[int] = []
        for k in range(r, 0, -1):
            mark = self.marks[r - k]
            if mark > 1:
                word.extend(range(k, mark + k - 1))
        return tuple(word)

    def to_json(self) -> str:
        return json.dumps(list(self.marks))

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        return cls(tuple(json.loads(text)))


def all_diagrams(r: int) -> Iterator[Diagram]:
    """All r! diagrams with r rows, in lexicographic mark order."""
    def rec(j: int, acc: list[int]) -> Iterator[Diagram]:
        if j > r:
            yield Diagram(tuple(acc))
            return
        for i in range(1, j + 1):
            acc.append(i)
            yield from rec(j + 1, acc)
            acc.pop()

    yield from rec(1, [])


def evaluate_word(word: Sequence[int], r: int) -> Permutation:
    """Product of generators in the written order, composing as functions."""
    out = Permutation.identity(r)
    for g in word:
        out = out * Permutation.generator(g, r)
    return out


def stripped_relation_holds(w: Permutation) -> bool:
    """Deleting the top diagram row matches the w' <- w reindexing rule.

    With i = i_r the top mark: w(i) = 1, w(i') = w'(i') + 1 for i' < i and
    w(i') = w'(i'-1) + 1 for i' > i, where w' is the permutation of the
    stripped diagram.
    """
    d = Diagram.from_permutation(w)
    if d.rows < 2:
        return True
    wp = Diagram(d.marks[:-1]).to_permutation()
    top = d.marks[-1]
    for i in range(1, d.rows + 1):
        if i == top:
            expected = 1
        elif i < top:
            expected = wp(i) + 1
        else:
            expected = wp(i - 1) + 1
        if w(i) != expected:
            return False
    return True


# -- counting identities -----------------------------------------------------


def poincare_sum(n: int) -> Poly:
    """Brute-force sum over S_n of q^{l(w)}."""
    out = Poly.zero(1)
    for d in all_diagrams(n):
        out = out + Poly(1, {(d.length(),): 1})
    return out


def poincare_product(n: int) -> Poly:
    """prod_j (1 - q^j)/(1 - q) expanded as geometric sums."""
    out = Poly.const(1, 1)
    for j in range(1, n + 1):
        out = out * geometric_sum(1, 0, j)
    return out


def multiparam_sum(n: int) -> Poly:
    """Brute-force sum over diagrams of prod_j q_j^{i_j(w)-1}."""
    out = Poly.zero(n)
    for d in all_diagrams(n):
        out = out + Poly(n, {tuple(m - 1 for m in d.marks): 1})
    return out


def multiparam_product(n: int) -> Poly:
    """prod_j (1 + q_j + ... + q_j^{j-1})."""
    out = Poly.const(n, 1)
    for j in range(1, n + 1):
        out = out * geometric_sum(n, j - 1, j)
    return out


def specialize_to_single_q(p: Poly) -> Poly:
    """Set every q_j = q in a multiparametric polynomial."""
    out = Poly.zero(1)
    for e, c in p.terms.items():
        out = out + Poly(1, {(sum(e),): c})
    return out


# -- partial order of marks (componentwise) ----------------------------------


def partial_leq(w1: Permutation, w2: Permutation) -> bool:
    """Componentwise comparison of diagram marks."""
    if w1.rank != w2.rank:
        raise ValueError("rank mismatch")
    m1 = Diagram.from_permutation(w1).marks
    m2 = Diagram.from_permutation(w2).marks
    return all(a <= b for a, b in zip(m1, m2))


def count_geq(w: Permutation) -> int:
    """prod_j (j - i_j + 1)."""
    marks = Diagram.from_permutation(w).marks
    out = 1
    for j, ij in enumerate(marks, start=1):
        out *= j - ij + 1
    return out


def count_leq(w: Permutation) -> int:
    """prod_j i_j."""
    out = 1
    for ij in Diagram.from_permutation(w).marks:
        out *= ij
    return out


def qpoly_geq(w: Permutation) -> Poly:
    """q^{l(w)} prod_j (1 - q^{j-i_j+1})/(1 - q)."""
    d = Diagram.from_permutation(w)
    out = Poly(1, {(d.length(),): 1})
    for j, ij in enumerate(d.marks, start=1):
        out = out * geometric_sum(1, 0, j - ij + 1)
    return out


def qpoly_leq(w: Permutation) -> Poly:
    """prod_j (1 - q^{i_j})/(1 - q)."""
    out = Poly.const(1, 1)
    for ij in Diagram.from_permutation(w).marks:
        out = out * geometric_sum(1, 0, ij)
    return out


def count_and_generating(w: Permutation) -> tuple[int, int, Poly, Poly]:
    """(count above, count below, q-polynomial above, q-polynomial below)."""
    return count_geq(w), count_leq(w), qpoly_geq(w), qpoly_leq(w)


def qpoly_geq_bruteforce(w: Permutation) -> Poly:
    out = Poly.zero(1)
    for v in all_permutations(w.rank):
        if partial_leq(w, v):
            out = out + Poly(1, {(Diagram.from_permutation(v).length(),): 1})
    return out


def qpoly_leq_bruteforce(w: Permutation) -> Poly:
    out = Poly.zero(1)
    for v in all_permutations(w.rank):
        if partial_leq(v, w):
            out = out + Poly(1, {(Diagram.from_permutation(v).length(),): 1})
    return out


# -- Gelfand-Zetlin patterns --------------------------------------------------


@dataclass(frozen=True)
class GZPattern:
    """Triangular integer array, rows stored top-first (row n, ..., row 1).

    Betweenness uses the reversed convention m_{p,q+1} <= m_{p,q} <= m_{p+1,q+1}.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = len(rows)
        for q, row in enumerate(rows):
            if len(row) != n - q:
                raise ValueError("rows must have lengths n, n-1, ..., 1")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def row(self, q: int) -> tuple[int, ...]:
        """Row q (length q), 1-based from the bottom as in m_{pq}."""
        return self.rows[self.size - q]

    def entry(self, p: int, q: int) -> int:
        return self.row(q)[p - 1]

    def betweenness_holds(self) -> bool:
        for q in range(1, self.size):
            lower, upper = self.row(q), self.row(q + 1)
            for p in range(1, q + 1):
                if not upper[p - 1] <= lower[p - 1] <= upper[p]:
                    return False
        return True

    def weight(self) -> tuple[int, ...]:
        """weight_i = sum(row n-i+1) - sum(row n-i); weight_n = m_11."""
        sums = [sum(r) for r in self.rows] + [0]
        return tuple(sums[i] - sums[i + 1] for i in range(self.size))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "GZPattern":
        return cls(tuple(tuple(r) for r in json.loads(text)))


def gz_pattern(w: Permutation, m: Sequence[int]) -> GZPattern:
    """Pattern with top row m and every other entry copied from its target.

    m must be weakly increasing (lowest-weight convention); the result is
    the unique pattern of weight w.m under the left action
    (w.m)_i = m_{w^{-1}(i)}, i.e. entry m_i sits at position w(i).
    """
    m = [int(x) for x in m]
    if any(a > b for a, b in zip(m, m[1:])):
        raise ValueError("weight must be weakly increasing")
    n = w.rank
    if len(m) != n:
        raise ValueError("weight length must equal the permutation rank")
    d = Diagram.from_permutation(w)
    entries: dict[Point, int] = {(i, n): m[i - 1] for i in range(1, n + 1)}
    for q in range(n - 1, 0, -1):
        for p in range(1, q + 1):
            entries[(p, q)] = entries[d.target((p, q))]
    rows = tuple(tuple(entries[(p, q)] for p in range(1, q + 1)) for q in range(n, 0, -1))
    return GZPattern(rows)
