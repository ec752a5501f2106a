"""Permutations of {0, ..., n-1} stored as image tables.

The composition convention used throughout the package is "left argument
acts first": ``(p * q)[i] == q[p[i]]``, i.e. points are acted on from the
right, as in ``point ^ p ^ q``.  All serialized data uses this single
convention.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A bijection on {0, ..., n-1}, immutable and hashable."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[x] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build a permutation of degree n from disjoint cycles (0-based)."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                if images[a] != a:
                    raise ValueError("cycles are not disjoint")
                images[a] = b
            if cycle:
                if images[cycle[-1]] != cycle[-1]:
                    raise ValueError("cycles are not disjoint")
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def apply(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """self, then other (left argument acts first)."""
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        q = other.images
        return Permutation([q[i] for i in self.images])

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        square = self
        while k:
            if k & 1:
                result = result * square
            square = square * square
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, least element first."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        """Least k >= 1 with self**k equal to the identity."""
        return math.lcm(*(len(c) for c in self.cycles()))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def is_semiregular(self) -> bool:
        """True iff no non-identity power fixes a point.

        Equivalently, every cycle (fixed points counted as 1-cycles) has
        length equal to the order of the permutation.
        """
        k = self.order()
        return all(len(c) == k for c in self.cycles())

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation(identity, degree={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
        return f"Permutation({text}, degree={self.degree})"

    def to_line(self) -> str:
        """Serialize as ``"n: i0 i1 ... i(n-1)"``."""
        return f"{self.degree}: " + " ".join(map(str, self.images))

    @classmethod
    def from_line(cls, line: str) -> Permutation:
        head, _, body = line.partition(":")
        n = int(head)
        images = [int(tok) for tok in body.split()]
        if len(images) != n:
            raise ValueError(f"expected {n} images, got {len(images)}")
        return cls(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    return p * q


def identity(n: int) -> Permutation:
    return Permutation.identity(n)
