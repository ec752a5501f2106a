"""Cayley graphs and coset graphs Cos(G, H, D) with canonical numbering.

Vertex numbering for coset graphs is breadth-first from the identity coset
using the group's generator list (right multiplication), so serialized
output is reproducible byte for byte.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterable, Sequence

from ..graph import Graph
from ..group import PermutationGroup
from ..perm import Permutation
from .finite_groups import FiniteGroup


def cayley_graph(group: FiniteGroup, connection: Iterable[int]) -> Graph:
    """Cay(G, S): vertices are element indices, edges {g, sg} for s in S."""
    s_set = sorted(set(connection))
    if 0 in s_set:
        raise ValueError("the identity may not be in the connection set")
    if any(group.inv(s) not in s_set for s in s_set):
        raise ValueError("connection set is not inverse-closed")
    edges = [(g, group.mult(s, g)) for g in range(group.order) for s in s_set]
    return Graph.from_edges(group.order, edges)


def right_regular_representation(group: FiniteGroup) -> PermutationGroup:
    """R(G) acting on element indices by x -> xg."""
    gens = [
        Permutation([group.mult(x, g) for x in range(group.order)])
        for g in group.generator_indices()]
    return PermutationGroup(group.order, gens)


def double_coset(group: FiniteGroup, subgroup: Sequence[int],
                 a: int) -> tuple[int, ...]:
    """HaH as a sorted set of element indices."""
    if not 0 <= a < group.order:
        raise ValueError("element index out of range")
    out = {group.mult(group.mult(h1, a), h2)
           for h1 in subgroup for h2 in subgroup}
    return tuple(sorted(out))


class CosetSpace:
    """Right cosets [G:H] with a canonical breadth-first numbering."""

    def __init__(self, group: FiniteGroup, subgroup: Sequence[int]):
        subgroup = tuple(sorted(subgroup))
        if not group.is_subgroup_set(subgroup):
            raise ValueError("subgroup indices are not closed under the product")
        self.group = group
        self.subgroup = subgroup
        coset_key = {}
        for g in range(group.order):
            if g in coset_key:
                continue
            members = sorted(group.mult(h, g) for h in subgroup)
            key = members[0]
            for x in members:
                coset_key[x] = key
        self._coset_key = coset_key

        # BFS numbering from the identity coset over the generator list
        index_of_key: dict[int, int] = {}
        reps: list[int] = []
        start = coset_key[0]
        index_of_key[start] = 0
        reps.append(start)
        queue = deque([start])
        gens = group.generator_indices()
        while queue:
            rep = queue.popleft()
            for s in gens:
                key = coset_key[group.mult(rep, s)]
                if key not in index_of_key:
                    index_of_key[key] = len(reps)
                    reps.append(key)
                    queue.append(key)
        self.reps = reps
        self._index_of_key = index_of_key
        if len(reps) != group.order // len(subgroup):
            raise RuntimeError("coset numbering did not reach every coset")

    def __len__(self) -> int:
        return len(self.reps)

    def coset_of(self, element: int) -> int:
        """Index of the coset containing the given group element."""
        return self._index_of_key[self._coset_key[element]]

    def right_action(self) -> PermutationGroup:
        """Right multiplication action of G on the cosets."""
        n = len(self.reps)
        gens = []
        for s in self.group.generator_indices():
            images = [self.coset_of(self.group.mult(rep, s))
                      for rep in self.reps]
            gens.append(Permutation(images))
        return PermutationGroup(n, gens)


def coset_graph(group: FiniteGroup, subgroup: Sequence[int],
                union_d: Sequence[int],
                space: CosetSpace | None = None) -> Graph:
    """Cos(G, H, D): vertices [G:H], edges {Hg, Hdg} for d in D.

    D must be inverse-closed and a union of H-double cosets.  If D meets H
    the identity double coset contributes loops; they are dropped with a
    warning (the graph is then not a simple cover of the double coset
    structure).
    """
    d_set = set(union_d)
    if any(group.inv(d) not in d_set for d in d_set):
        raise ValueError("D is not inverse-closed")
    for d in sorted(d_set):
        if any(x not in d_set for x in double_coset(group, subgroup, d)):
            raise ValueError("D is not a union of double cosets of H")
    if space is None:
        space = CosetSpace(group, subgroup)
    if set(subgroup) & d_set:
        warnings.warn(
            "D meets H: identity double coset yields loops, dropped "
            "(non-simple cover)", stacklevel=2)
    edges = []
    for idx, rep in enumerate(space.reps):
        for d in d_set:
            other = space.coset_of(group.mult(d, rep))
            if other != idx:
                edges.append((idx, other))
    return Graph.from_edges(len(space), edges)
