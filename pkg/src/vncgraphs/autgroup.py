"""Graph automorphism groups, canonical forms and isomorphism testing.

The engine is equitable-partition refinement with individualization
backtracking.  The automorphism search walks a first path ("spine") to a
discrete base leaf, then enumerates images of the spine choices, pruning
siblings lying in the orbit of an already-processed one under the
automorphisms discovered so far; off-spine subtrees stop at their first
automorphism.  The canonical form reuses the computed group: at each node
it branches over one representative per orbit of the exact stabilizer of
the individualized prefix, so the certificate minimum ranges over every
leaf up to symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .group import BoundExceededError, OrbitPartition, PermutationGroup
from .perm import Permutation

SOLVER_BOUND = 1024

CERT_VERSION = "cert/v1"


@dataclass
class AutomorphismResult:
    generators: list[Permutation]
    order: int
    orbits: OrbitPartition
    group: PermutationGroup


@dataclass
class CanonicalForm:
    labeling: list[int]          # original vertex -> canonical position
    graph: Graph                 # relabeled graph
    certificate: str


# --- partition refinement ----------------------------------------------------


def _initial_cells(graph: Graph) -> list[list[int]]:
    # invariant: (degree, sorted neighbor degrees, triangles through vertex)
    keys = {}
    for v in range(graph.n):
        nbrs = graph.adj[v]
        tri = sum(1 for i, u in enumerate(nbrs) for w in nbrs[i + 1:]
                  if graph.has_edge(u, w))
        keys[v] = (len(nbrs), tuple(sorted(len(graph.adj[u]) for u in nbrs)), tri)
    cells: dict[tuple, list[int]] = {}
    for v in range(graph.n):
        cells.setdefault(keys[v], []).append(v)
    return [sorted(cells[k]) for k in sorted(cells)]


def _refine(graph: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Refine to the coarsest equitable partition below the given one."""
    adj = graph.adj
    cells = [list(c) for c in cells]
    queue = list(cells)
    while queue:
        splitter = queue.pop(0)
        counts: dict[int, int] = {}
        for u in splitter:
            for w in adj[u]:
                counts[w] = counts.get(w, 0) + 1
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault(counts.get(v, 0), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                parts = [buckets[k] for k in sorted(buckets)]
                new_cells.extend(parts)
                queue.extend(parts)
        cells = new_cells
    return cells


def _individualize(cells: list[list[int]], cell_idx: int, v: int) -> list[list[int]]:
    out = []
    for i, cell in enumerate(cells):
        if i == cell_idx:
            out.append([v])
            out.append([w for w in cell if w != v])
        else:
            out.append(cell)
    return out


def _target_cell(cells: list[list[int]]) -> int | None:
    """First smallest non-singleton cell; None if discrete."""
    best = None
    best_size = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best_size is None or len(cell) < best_size):
            best, best_size = i, len(cell)
    return best


def _shape(cells: list[list[int]]) -> tuple[int, ...]:
    return tuple(len(c) for c in cells)


def _is_automorphism(graph: Graph, images: list[int]) -> bool:
    for u in range(graph.n):
        row = graph.adj[u]
        iu = images[u]
        target = graph.adj[iu]
        if len(row) != len(target):
            return False
        if sorted(images[w] for w in row) != list(target):
            return False
    return True


# --- automorphism group ------------------------------------------------------


def automorphism_generators(graph: Graph, bound: int = SOLVER_BOUND) -> list[Permutation]:
    if graph.n > bound:
        raise BoundExceededError(
            f"graph order {graph.n} exceeds solver bound {bound}")
    if graph.n == 0:
        return []
    root = _refine(graph, _initial_cells(graph))

    # spine: always individualize the least vertex of the target cell
    spine_partitions = [root]
    spine_vertices: list[int] = []
    spine_shapes = [_shape(root)]
    pi = root
    while True:
        idx = _target_cell(pi)
        if idx is None:
            break
        v = pi[idx][0]
        spine_vertices.append(v)
        pi = _refine(graph, _individualize(pi, idx, v))
        spine_partitions.append(pi)
        spine_shapes.append(_shape(pi))
    base_label = [cell[0] for cell in pi]       # canonical position -> vertex

    gens: list[Permutation] = []

    def orbit_reaches(w: int, targets: list[int], prefix: list[int]) -> bool:
        """Is w in the orbit of any target under the gens fixing the prefix?"""
        useful = [g for g in gens if all(g[x] == x for x in prefix)]
        if not useful:
            return False
        seen = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for g in useful:
                y = g[x]
                if y not in seen:
                    if y in targets:
                        return True
                    seen.add(y)
                    stack.append(y)
        return any(t in seen for t in targets)

    def search(level: int, cells: list[list[int]], on_spine: bool) -> bool:
        idx = _target_cell(cells)
        if idx is None:
            images = [0] * graph.n
            for pos, cell in enumerate(cells):
                images[base_label[pos]] = cell[0]
            if all(i == j for i, j in enumerate(images)):
                return False
            if _is_automorphism(graph, images):
                gens.append(Permutation(images))
                return True
            return False
        if on_spine:
            prefix = spine_vertices[:level]
            processed: list[int] = []
            for w in cells[idx]:
                if w != spine_vertices[level] and orbit_reaches(w, processed, prefix):
                    continue
                child = _refine(graph, _individualize(cells, idx, w))
                if _shape(child) == spine_shapes[level + 1]:
                    search(level + 1, child, w == spine_vertices[level])
                processed.append(w)
            return False
        for w in cells[idx]:
            child = _refine(graph, _individualize(cells, idx, w))
            if _shape(child) != spine_shapes[level + 1]:
                continue
            if search(level + 1, child, False):
                return True
        return False

    search(0, root, True)
    return gens


def automorphism_group(graph: Graph, bound: int = SOLVER_BOUND) -> AutomorphismResult:
    """Full automorphism group; generators verified to preserve adjacency."""
    gens = automorphism_generators(graph, bound)
    group = PermutationGroup(graph.n, gens)
    return AutomorphismResult(
        generators=gens,
        order=group.order(),
        orbits=group.orbits() if graph.n else OrbitPartition([], 0),
        group=group)


# --- canonical form ----------------------------------------------------------


def canonical_form(graph: Graph, bound: int = SOLVER_BOUND,
                   aut: AutomorphismResult | None = None) -> CanonicalForm:
    """Canonical relabeling: identical output for all isomorphic inputs."""
    if graph.n > bound:
        raise BoundExceededError(
            f"graph order {graph.n} exceeds solver bound {bound}")
    if aut is None:
        aut = automorphism_group(graph, bound)
    root = _refine(graph, _initial_cells(graph))
    best: list[tuple[int, int]] | None = None
    best_labeling: list[int] | None = None

    def leaf_edges(cells: list[list[int]]) -> tuple[list[tuple[int, int]], list[int]]:
        labeling = [0] * graph.n
        for pos, cell in enumerate(cells):
            labeling[cell[0]] = pos
        edges = sorted((min(labeling[u], labeling[v]), max(labeling[u], labeling[v]))
                       for u, v in graph.edges())
        return edges, labeling

    def walk(cells: list[list[int]], stab: PermutationGroup) -> None:
        nonlocal best, best_labeling
        idx = _target_cell(cells)
        if idx is None:
            edges, labeling = leaf_edges(cells)
            if best is None or edges < best:
                best, best_labeling = edges, labeling
            return
        blocks = stab.orbits().block_of if stab.generators else None
        tried_blocks: set[int] = set()
        for w in cells[idx]:
            if blocks is not None:
                if blocks[w] in tried_blocks:
                    continue
                tried_blocks.add(blocks[w])
            child_stab = stab.point_stabilizer(w) if stab.generators else stab
            walk(_refine(graph, _individualize(cells, idx, w)), child_stab)

    walk(root, aut.group)
    assert best is not None and best_labeling is not None
    canon = Graph.from_edges(graph.n, best)
    cert = (f"{CERT_VERSION} {graph.n} {len(best)} | "
            + " ".join(f"{u}-{v}" for u, v in best))
    return CanonicalForm(labeling=best_labeling, graph=canon, certificate=cert)


# --- isomorphism -------------------------------------------------------------


def are_isomorphic(x: Graph, y: Graph,
                   bound: int = SOLVER_BOUND) -> list[int] | None:
    """A certified vertex bijection x -> y, or None.

    Cheap invariants screen first (order, degree sequence, girth, s-arc
    counts), then canonical certificates decide.
    """
    if x.n != y.n or x.num_edges() != y.num_edges():
        return None
    if x.degree_sequence() != y.degree_sequence():
        return None
    if x.is_connected() != y.is_connected():
        return None
    if x.girth() != y.girth():
        return None
    if any(x.count_s_arcs(s) != y.count_s_arcs(s) for s in (2, 3)):
        return None
    cx = canonical_form(x, bound)
    cy = canonical_form(y, bound)
    if cx.certificate != cy.certificate:
        return None
    position_to_y = [0] * y.n
    for v, pos in enumerate(cy.labeling):
        position_to_y[pos] = v
    mapping = [position_to_y[cx.labeling[v]] for v in range(x.n)]
    for u, v in x.edges():
        if not y.has_edge(mapping[u], mapping[v]):
            raise RuntimeError("certificate collision: mapping is not an isomorphism")
    return mapping
