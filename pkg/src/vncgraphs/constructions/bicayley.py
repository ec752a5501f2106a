"""Bi-Cayley graphs BiCay(H, R, L, S) and their canonical automorphisms.

Vertices are two copies of H: the right part h_0 at index(h) and the left
part h_1 at |H| + index(h).  For a group automorphism alpha of H (given as
a permutation of element indices) the two induced vertex maps are

    delta_alpha: h_0 -> (h^alpha)_1,  h_1 -> (h^alpha)_0   (swaps the parts)
    sigma_alpha: h_i -> (h^alpha)_i                        (preserves them)

and the sets I and F collect the delta/sigma maps whose alpha respects the
connection sets in the crossed, respectively fixed, way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..graph import Graph
from ..group import PermutationGroup
from ..perm import Permutation
from .finite_groups import FiniteGroup


@dataclass(frozen=True)
class BiCayleySpec:
    group: FiniteGroup
    right: tuple[int, ...]
    left: tuple[int, ...]
    spokes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "right", tuple(sorted(set(self.right))))
        object.__setattr__(self, "left", tuple(sorted(set(self.left))))
        object.__setattr__(self, "spokes", tuple(sorted(set(self.spokes))))
        g = self.group
        for name, subset in (("R", self.right), ("L", self.left)):
            if any(g.inv(x) not in subset for x in subset):
                raise ValueError(f"{name} is not inverse-closed")
        if 0 in self.right or 0 in self.left:
            raise ValueError("the identity may not lie in R or L")

    @property
    def half(self) -> int:
        return self.group.order

    def right_vertex(self, h: int) -> int:
        return h

    def left_vertex(self, h: int) -> int:
        return self.half + h


def bicayley_graph(spec: BiCayleySpec) -> Graph:
    """BiCay(H, R, L, S) on 2|H| vertices."""
    g = spec.group
    n = g.order
    edges = []
    for h in range(n):
        for r in spec.right:
            edges.append((h, g.mult(r, h)))                  # {h_0, (rh)_0}
        for l in spec.left:
            edges.append((n + h, n + g.mult(l, h)))          # {h_1, (lh)_1}
        for s in spec.spokes:
            edges.append((h, n + g.mult(s, h)))              # {h_0, (sh)_1}
    return Graph.from_edges(2 * n, edges)


def bicayley_right_regular(spec: BiCayleySpec) -> PermutationGroup:
    """R(H) acting by h_i -> (hg)_i; semiregular with the parts as orbits."""
    g = spec.group
    n = g.order
    gens = []
    for x in g.generator_indices():
        images = [g.mult(h, x) for h in range(n)]
        images += [n + g.mult(h, x) for h in range(n)]
        gens.append(Permutation(images))
    return PermutationGroup(2 * n, gens)


def _check_automorphism(group: FiniteGroup, alpha: Permutation) -> None:
    if alpha.degree != group.order:
        raise ValueError("alpha must permute the element indices of H")
    gen_idx = group.generator_indices()
    for x in range(group.order):
        for s in gen_idx:
            if alpha[group.mult(x, s)] != group.mult(alpha[x], alpha[s]):
                raise ValueError("alpha is not an automorphism of H")


def delta_map(spec: BiCayleySpec, alpha: Permutation) -> Permutation:
    """The part-swapping map of alpha: h_0 -> (h^alpha)_1, h_1 -> (h^alpha)_0."""
    _check_automorphism(spec.group, alpha)
    n = spec.half
    images = [n + alpha[h] for h in range(n)] + [alpha[h] for h in range(n)]
    return Permutation(images)


def sigma_map(spec: BiCayleySpec, alpha: Permutation) -> Permutation:
    """The part-preserving map of alpha: h_i -> (h^alpha)_i."""
    _check_automorphism(spec.group, alpha)
    n = spec.half
    images = [alpha[h] for h in range(n)] + [n + alpha[h] for h in range(n)]
    return Permutation(images)


@dataclass
class BiCayleySymmetries:
    """The delta maps I and the sigma group F of a bi-Cayley spec."""
    part_swappers: list[Permutation]            # the set I, as vertex maps
    part_swapper_alphas: list[Permutation]      # the underlying alphas
    part_preservers: PermutationGroup           # the group F
    part_preserver_alphas: list[Permutation] = field(default_factory=list)


def compute_symmetries(spec: BiCayleySpec,
                       aut_bound: int = 512) -> BiCayleySymmetries:
    """Find I and F by exhausting Aut(H).

    Every returned vertex map is verified to be an automorphism of the
    bi-Cayley graph before it is reported.
    """
    g = spec.group
    graph = bicayley_graph(spec)
    r_set, l_set, s_set = set(spec.right), set(spec.left), set(spec.spokes)
    s_inv = {g.inv(x) for x in s_set}
    deltas, delta_alphas = [], []
    sigma_gens, sigma_alphas = [], []
    for alpha in g.automorphisms(bound=aut_bound):
        img_r = {alpha[x] for x in r_set}
        img_l = {alpha[x] for x in l_set}
        img_s = {alpha[x] for x in s_set}
        if img_r == l_set and img_l == r_set and img_s == s_inv:
            d = delta_map(spec, alpha)
            _assert_graph_automorphism(graph, d)
            deltas.append(d)
            delta_alphas.append(alpha)
        if img_r == r_set and img_l == l_set and img_s == s_set:
            s = sigma_map(spec, alpha)
            _assert_graph_automorphism(graph, s)
            sigma_gens.append(s)
            sigma_alphas.append(alpha)
    return BiCayleySymmetries(
        part_swappers=deltas,
        part_swapper_alphas=delta_alphas,
        part_preservers=PermutationGroup(2 * spec.half, sigma_gens),
        part_preserver_alphas=sigma_alphas)


def _assert_graph_automorphism(graph: Graph, p: Permutation) -> None:
    for u, v in graph.edges():
        if not graph.has_edge(p[u], p[v]):
            raise RuntimeError("computed map fails to preserve adjacency")
