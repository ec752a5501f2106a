"""Finite groups as permutation groups with an indexed element list.

The element list is the vertex/element numbering used by every graph
construction, so it is deterministic: either an explicit list supplied by
a builder, or breadth-first order from the identity over the generator
list (right multiplication).  Index 0 is always the identity.

The product ``mult(i, j)`` composes left-to-right: element i acts first.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from ..group import BoundExceededError, ENUMERATION_BOUND, PermutationGroup
from ..perm import Permutation


class FiniteGroup:
    """A concrete finite group: permutation realization plus element index."""

    def __init__(self, perm_group: PermutationGroup,
                 elements: Sequence[Permutation] | None = None,
                 bound: int = ENUMERATION_BOUND):
        self.perm_group = perm_group
        self.degree = perm_group.degree
        if elements is None:
            elements = _bfs_elements(perm_group, bound)
        else:
            elements = list(elements)
            if perm_group.order() != len(elements):
                raise ValueError("element list does not match the group order")
        if not elements[0].is_identity():
            raise ValueError("element index 0 must be the identity")
        self.elements = elements
        self.index_of = {g.images: i for i, g in enumerate(elements)}
        if len(self.index_of) != len(elements):
            raise ValueError("element list contains duplicates")
        self._inverse = [self.index_of[g.inverse().images] for g in elements]

    @classmethod
    def from_generators(cls, degree: int, gens: Iterable[Permutation],
                        bound: int = ENUMERATION_BOUND) -> FiniteGroup:
        return cls(PermutationGroup(degree, gens), bound=bound)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> list[Permutation]:
        return self.perm_group.generators

    def generator_indices(self) -> list[int]:
        return [self.index_of[g.images] for g in self.generators]

    def element(self, i: int) -> Permutation:
        return self.elements[i]

    def index(self, g: Permutation) -> int:
        try:
            return self.index_of[g.images]
        except KeyError:
            raise ValueError("permutation is not an element of the group") from None

    def mult(self, i: int, j: int) -> int:
        """Index of the product "ij" (element i acts first)."""
        return self.index_of[(self.elements[i] * self.elements[j]).images]

    def inv(self, i: int) -> int:
        return self._inverse[i]

    def element_order(self, i: int) -> int:
        return self.elements[i].order()

    def conjugate(self, i: int, by: int) -> int:
        """Index of by^-1 * i * by."""
        return self.mult(self.mult(self.inv(by), i), by)

    def subgroup_closure(self, seeds: Iterable[int]) -> tuple[int, ...]:
        """Indices of the subgroup generated by the seed elements."""
        members = {0}
        queue = deque(seeds)
        while queue:
            x = queue.popleft()
            if x in members:
                continue
            members.add(x)
            for y in list(members):
                for prod in (self.mult(x, y), self.mult(y, x)):
                    if prod not in members:
                        queue.append(prod)
        return tuple(sorted(members))

    def is_subgroup_set(self, indices: Iterable[int]) -> bool:
        idx = set(indices)
        if 0 not in idx:
            return False
        return all(self.mult(a, b) in idx for a in idx for b in idx)

    def automorphisms(self, bound: int = 512) -> list[Permutation]:
        """Every automorphism of the group, as a permutation of element
        indices, found by exhaustive search over generator images.

        Returned in a canonical order (sorted by image table).
        """
        n = self.order
        if n > bound:
            raise BoundExceededError(
                f"group order {n} exceeds the automorphism search bound {bound}")
        gen_idx = self.generator_indices()
        if not gen_idx:
            return [Permutation.identity(1)] if n == 1 else []
        # express every element as (parent, generator position), BFS order
        parent: dict[int, tuple[int, int]] = {}
        bfs_order = [0]
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for pos, s in enumerate(gen_idx):
                y = self.mult(x, s)
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, pos)
                    bfs_order.append(y)
                    queue.append(y)
        if len(seen) != n:
            raise ValueError("generators do not generate the group")

        orders = [self.element_order(i) for i in range(n)]
        candidates_per_gen = [
            [i for i in range(n) if orders[i] == orders[g]] for g in gen_idx]

        autos = []
        def assign(pos: int, chosen: list[int]) -> None:
            if pos == len(gen_idx):
                image = [0] * n
                for x in bfs_order[1:]:
                    px, gpos = parent[x]
                    image[x] = self.mult(image[px], chosen[gpos])
                if len(set(image)) != n:
                    return
                # homomorphism check on (element, generator) pairs suffices
                for x in range(n):
                    for gpos, s in enumerate(gen_idx):
                        if image[self.mult(x, s)] != self.mult(image[x], chosen[gpos]):
                            return
                autos.append(Permutation(image))
                return
            for cand in candidates_per_gen[pos]:
                assign(pos + 1, chosen + [cand])

        assign(0, [])
        autos.sort(key=lambda a: a.images)
        return autos

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, degree={self.degree})"


def _bfs_elements(perm_group: PermutationGroup,
                  bound: int) -> list[Permutation]:
    n = perm_group.order()
    if n > bound:
        raise BoundExceededError(
            f"group order {n} exceeds element-indexing bound {bound}")
    identity = Permutation.identity(perm_group.degree)
    elements = [identity]
    seen = {identity.images}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in perm_group.generators:
            y = x * s
            if y.images not in seen:
                seen.add(y.images)
                elements.append(y)
                queue.append(y)
    if len(elements) != n:
        raise RuntimeError("BFS enumeration does not match the group order")
    return elements


# --- stock groups used by the graph families --------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n as the n-cycle on points 0..n-1; element k is rotation by k."""
    c = Permutation([(i + 1) % n for i in range(n)])
    elements = [c ** k for k in range(n)]
    return FiniteGroup(PermutationGroup(n, [c]), elements)


_S3_TABLES = [
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]


def s3_times_zp(p: int) -> FiniteGroup:
    """S3 x Z_p on 3+p points, elements indexed lexicographically by
    (S3 part, Z_p part)."""
    degree = 3 + p

    def embed(s3: Sequence[int], k: int) -> Permutation:
        images = list(s3) + [3 + ((i + k) % p) for i in range(p)]
        return Permutation(images)

    elements = [embed(s3, k) for s3 in _S3_TABLES for k in range(p)]
    a = embed((1, 0, 2), 0)          # transposition (0 1)
    b = embed((0, 2, 1), 0)          # transposition (1 2); (ab) has order 3
    c = embed((0, 1, 2), 1)          # generator of the Z_p factor
    group = PermutationGroup(degree, [a, b, c])
    fg = FiniteGroup(group, elements)
    fg.a = fg.index(a)
    fg.b = fg.index(b)
    fg.c = fg.index(c)
    return fg
