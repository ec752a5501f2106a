"""The decision procedures behind the classification claims.

Covers vertex/arc-transitivity, s-regularity (with explicit transitivity
verification on s-arcs, not just the counting identity), the Cayley test
via exhaustive regular-subgroup search over fixed-point-free elements,
full VNC certification, and the quotient-theorem checker for normal
subgroups of arc-transitive groups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .autgroup import AutomorphismResult, automorphism_group
from .graph import Graph
from .group import (BoundExceededError, ENUMERATION_BOUND, OrbitPartition,
                    PermutationGroup)
from .perm import Permutation

REPORT_VERSION = 1

TUTTE_CAP = 5  # no cubic s-regular graphs exist for s >= 6


# --- transitivity ------------------------------------------------------------


def is_vertex_transitive(graph: Graph,
                         aut: AutomorphismResult | None = None) -> bool:
    aut = aut or automorphism_group(graph)
    return len(aut.orbits) == 1


def _tuple_orbit_size(gens: list[Permutation], start: tuple[int, ...],
                      cap: int | None = None) -> int:
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for g in gens:
            image = tuple(g[x] for x in t)
            if image not in seen:
                seen.add(image)
                stack.append(image)
                if cap is not None and len(seen) > cap:
                    return len(seen)
    return len(seen)


def is_arc_transitive(graph: Graph,
                      aut: AutomorphismResult | None = None,
                      group: PermutationGroup | None = None) -> bool:
    """Transitivity on ordered adjacent pairs, by orbit closure of one arc."""
    if graph.num_edges() == 0:
        return True
    gens = group.generators if group is not None else (
        (aut or automorphism_group(graph)).generators)
    u = next(v for v in range(graph.n) if graph.adj[v])
    arc = (u, graph.adj[u][0])
    total = 2 * graph.num_edges()
    return _tuple_orbit_size(gens, arc, cap=total) == total


def s_regularity(graph: Graph,
                 aut: AutomorphismResult | None = None,
                 group: PermutationGroup | None = None) -> int | None:
    """The s with the group acting regularly on s-arcs; None if not symmetric.

    The group defaults to the full automorphism group.  Regularity is
    certified by the counting identity |G| = #s-arcs together with
    verified transitivity on s-arcs.
    """
    if not graph.is_cubic():
        raise ValueError("s-regularity is defined here for cubic graphs only")
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    if group is None:
        aut = aut or automorphism_group(graph)
        group = aut.group
    if not is_arc_transitive(graph, group=group):
        return None
    order = group.order()
    gens = group.generators
    for s in range(1, TUTTE_CAP + 1):
        count = graph.count_s_arcs(s)
        if order == count:
            start = _first_s_arc(graph, s)
            if _tuple_orbit_size(gens, start) == count:
                return s
        if order < count:
            break
    raise RuntimeError(
        "arc-transitive cubic graph without s-regularity in 1..5; "
        "this contradicts the Tutte bound")


def _first_s_arc(graph: Graph, s: int) -> tuple[int, ...]:
    walk = [0, graph.adj[0][0]]
    while len(walk) < s + 1:
        u, v = walk[-2], walk[-1]
        walk.append(next(w for w in graph.adj[v] if w != u))
    return tuple(walk)


# --- regular subgroup search --------------------------------------------------


@dataclass
class RegularSubgroupSearch:
    """Outcome of the fixed-point-free backtrack over subgroups."""
    witness: PermutationGroup | None
    explored: int
    note: str


def find_regular_subgroup(aut_group: PermutationGroup, n: int,
                          bound: int = ENUMERATION_BOUND
                          ) -> RegularSubgroupSearch:
    """Search Aut for a subgroup of order n acting regularly on the points.

    Every non-identity element of a regular subgroup is fixed-point-free
    with order dividing n, so the search extends partial subgroups by such
    candidate elements (one representative per cyclic subgroup), pruning
    whenever the closure's order fails to divide n or a non-fixed-point-free
    element appears.  A definitive negative means the search space was
    exhausted.
    """
    if aut_group.degree != n:
        raise ValueError("regular subgroups must have order = degree = n")
    if not aut_group.is_transitive():
        raise ValueError("the ambient group is not transitive")
    order = aut_group.order()
    if order > bound:
        raise BoundExceededError(
            f"group order {order} exceeds enumeration bound {bound}")

    identity = tuple(range(n))
    candidates = []
    for raw in aut_group.chain.elements():
        if raw == identity:
            continue
        if any(i == j for i, j in enumerate(raw)):
            continue
        p = Permutation(raw)
        if n % p.order() == 0:
            candidates.append(p)
    candidates.sort(key=lambda p: (-p.order(), p.images))

    # Cauchy screen: a regular subgroup needs a fixed-point-free element of
    # order q for every prime q dividing n
    for q in _prime_factors(n):
        if not any(p.order() == q for p in candidates):
            return RegularSubgroupSearch(
                None, 0,
                f"no fixed-point-free element of prime order {q} dividing {n}")

    # transversal reachability: the candidates together must act transitively
    pool = PermutationGroup(n, candidates)
    if not pool.is_transitive():
        return RegularSubgroupSearch(
            None, 0, "fixed-point-free elements do not reach every vertex")

    # extending by e or by another generator of <e> closes to the same
    # subgroup, so one representative per cyclic subgroup suffices
    reps: list[Permutation] = []
    seen_cyclic: set[frozenset] = set()
    for p in candidates:
        cyc = frozenset((p ** k).images for k in range(1, p.order() + 1))
        if cyc not in seen_cyclic:
            seen_cyclic.add(cyc)
            reps.append(p)

    visited: set[frozenset] = {frozenset({identity})}
    explored = 0
    # stack entries: (generators, element set, order)
    stack: list[tuple[list[Permutation], frozenset, int]] = [
        ([], frozenset({identity}), 1)]
    while stack:
        gens, elems, group_order = stack.pop()
        explored += 1
        if group_order == n:
            witness = PermutationGroup(n, gens)
            if witness.order() == n and witness.is_transitive() \
                    and witness.is_semiregular_group():
                return RegularSubgroupSearch(
                    witness, explored, "witness found and validated")
            raise RuntimeError("closed set of order n failed validation")
        for e in reps:
            if e.images in elems:
                continue
            extended = PermutationGroup(n, gens + [e])
            m = extended.order()
            if m > n or n % m != 0:
                continue
            new_elems = frozenset(extended.chain.elements())
            if new_elems in visited:
                continue
            visited.add(new_elems)
            if any(any(i == j for i, j in enumerate(raw))
                   for raw in new_elems if raw != identity):
                continue
            stack.append((gens + [e], new_elems, m))
    return RegularSubgroupSearch(
        None, explored,
        f"search exhausted after {explored} partial subgroups")


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def validate_regular_witness(graph: Graph, aut_group: PermutationGroup,
                             witness: PermutationGroup) -> None:
    """Check a claimed regular subgroup: inside Aut, order n, regular."""
    if witness.degree != graph.n:
        raise ValueError("witness degree does not match the graph")
    for g in witness.generators:
        if not aut_group.membership(g):
            raise ValueError("witness generator is not an automorphism")
    if witness.order() != graph.n:
        raise ValueError("witness order differs from the vertex count")
    if not witness.is_transitive() or not witness.is_semiregular_group():
        raise ValueError("witness does not act regularly")


# --- certification -----------------------------------------------------------


@dataclass
class CertificationReport:
    graph_id: str
    order: int
    valency: int | None
    girth: float
    connected: bool
    vertex_transitive: bool
    arc_transitive: bool
    s_regularity: int | None
    aut_order: int
    aut_solvable: bool
    cayley: bool
    regular_subgroup: list[str] | None      # witness generators, serialized
    cayley_note: str

    @property
    def is_vnc(self) -> bool:
        return self.vertex_transitive and not self.cayley

    def to_json_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "graph_id": self.graph_id,
            "order": self.order,
            "valency": self.valency,
            "girth": "infinity" if self.girth == float("inf") else int(self.girth),
            "connected": self.connected,
            "vertex_transitive": self.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "s_regularity": self.s_regularity,
            "aut_order": self.aut_order,
            "aut_solvable": self.aut_solvable,
            "cayley": self.cayley,
            "regular_subgroup": self.regular_subgroup,
            "cayley_note": self.cayley_note,
            "vnc": self.is_vnc,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def certify(graph: Graph, graph_id: str,
            regular_witness: PermutationGroup | None = None,
            bound: int = ENUMERATION_BOUND) -> CertificationReport:
    """Populate every certification field for a graph.

    A NonCayley verdict is only ever reported with an exhausted search.
    ``regular_witness``, when supplied, is validated and short-circuits the
    search (used for families whose automorphism group is too large to
    enumerate but whose regular subgroup is known by construction).
    """
    aut = automorphism_group(graph)
    degrees = {len(row) for row in graph.adj}
    valency = degrees.pop() if len(degrees) == 1 else None
    connected = graph.is_connected()
    vt = len(aut.orbits) == 1
    at = vt and is_arc_transitive(graph, aut)
    s_reg = None
    if at and valency == 3 and connected:
        s_reg = s_regularity(graph, aut)
    cayley = False
    witness_lines = None
    if not vt:
        note = "not vertex-transitive, hence not a Cayley graph"
    elif regular_witness is not None:
        validate_regular_witness(graph, aut.group, regular_witness)
        cayley = True
        witness_lines = regular_witness.to_lines()
        note = "supplied regular subgroup validated inside Aut"
    else:
        search = find_regular_subgroup(aut.group, graph.n, bound)
        if search.witness is not None:
            cayley = True
            witness_lines = search.witness.to_lines()
        note = search.note
    return CertificationReport(
        graph_id=graph_id,
        order=graph.n,
        valency=valency,
        girth=graph.girth(),
        connected=connected,
        vertex_transitive=vt,
        arc_transitive=at,
        s_regularity=s_reg,
        aut_order=aut.order,
        aut_solvable=aut.group.is_solvable(),
        cayley=cayley,
        regular_subgroup=witness_lines,
        cayley_note=note)


# --- quotient theorem checker --------------------------------------------------


@dataclass
class QuotientChecklist:
    """Per-hypothesis and per-conclusion outcome of the quotient theorem.

    Hypotheses: G acts on the graph by automorphisms, G is arc-transitive,
    N is normal in G, N has more than two orbits.  Conclusions (checked on
    the instance whenever their data makes sense): N semiregular, N equals
    the kernel of G on the N-orbits, the quotient is cubic, and the induced
    group is s-regular on the quotient for the same s.
    """
    g_acts_by_automorphisms: bool
    g_arc_transitive: bool
    n_normal_in_g: bool
    n_has_more_than_two_orbits: bool
    n_semiregular: bool
    n_is_kernel: bool
    quotient_cubic: bool
    quotient_s_regular: bool | None
    s_on_graph: int | None
    s_on_quotient: int | None
    orbit_partition: OrbitPartition = field(repr=False, default=None)
    quotient: Graph = field(repr=False, default=None)

    @property
    def hypotheses_hold(self) -> bool:
        return (self.g_acts_by_automorphisms and self.g_arc_transitive
                and self.n_normal_in_g and self.n_has_more_than_two_orbits)

    def failed_hypotheses(self) -> list[str]:
        out = []
        if not self.g_acts_by_automorphisms:
            out.append("G does not act by graph automorphisms")
        if not self.g_arc_transitive:
            out.append("G is not arc-transitive on the graph")
        if not self.n_normal_in_g:
            out.append("N is not normal in G")
        if not self.n_has_more_than_two_orbits:
            out.append("N does not have more than two orbits")
        return out


def check_quotient_theorem(graph: Graph, g: PermutationGroup,
                           n_sub: PermutationGroup,
                           bound: int = ENUMERATION_BOUND) -> QuotientChecklist:
    """Verify the quotient theorem's hypotheses and conclusions on an instance."""
    acts = all(_preserves_adjacency(graph, p) for p in g.generators)
    arc_t = acts and is_arc_transitive(graph, group=g)
    normal = n_sub.is_subgroup(g) and all(
        n_sub.membership(h.conjugate(x))
        for h in n_sub.generators for x in g.generators)
    orbits = n_sub.orbits()
    many_orbits = len(orbits) > 2

    semiregular = n_sub.is_semiregular_group()
    quotient = graph.quotient_graph(orbits)
    quotient_cubic = quotient.is_cubic()

    # kernel of G acting on the orbit partition
    block_of = orbits.block_of
    kernel_raw = []
    if g.order() <= bound:
        for raw in g.chain.elements():
            if all(block_of[raw[v]] == block_of[v] for v in range(graph.n)):
                kernel_raw.append(raw)
    kernel = PermutationGroup.from_raw(graph.n, kernel_raw)
    n_is_kernel = (n_sub.order() == kernel.order()
                   and n_sub.is_subgroup(kernel))

    s_graph = None
    s_quot = None
    quotient_s_regular = None
    if arc_t and graph.is_cubic() and graph.is_connected():
        s_graph = s_regularity(graph, group=g)
        if quotient_cubic and quotient.is_connected() and s_graph is not None:
            induced = _induced_block_action(g, orbits)
            if is_arc_transitive(quotient, group=induced):
                s_quot = s_regularity(quotient, group=induced)
            quotient_s_regular = s_quot == s_graph
    return QuotientChecklist(
        g_acts_by_automorphisms=acts,
        g_arc_transitive=arc_t,
        n_normal_in_g=normal,
        n_has_more_than_two_orbits=many_orbits,
        n_semiregular=semiregular,
        n_is_kernel=n_is_kernel,
        quotient_cubic=quotient_cubic,
        quotient_s_regular=quotient_s_regular,
        s_on_graph=s_graph,
        s_on_quotient=s_quot,
        orbit_partition=orbits,
        quotient=quotient)


def _preserves_adjacency(graph: Graph, p: Permutation) -> bool:
    return all(graph.has_edge(p[u], p[v]) for u, v in graph.edges())


def _induced_block_action(g: PermutationGroup,
                          partition: OrbitPartition) -> PermutationGroup:
    reps = [block[0] for block in partition.blocks]
    block_of = partition.block_of
    gens = []
    for p in g.generators:
        gens.append(Permutation([block_of[p[r]] for r in reps]))
    return PermutationGroup(len(partition), gens)


# --- normal subgroup probes -----------------------------------------------------


def probe_semiregular_normal_subgroups(
        group: PermutationGroup, odd_prime: int | None = None,
        bound: int = ENUMERATION_BOUND) -> list[PermutationGroup]:
    """Candidate normal subgroups for the quotient checker.

    Probes the normal closures of central involutions and, when an odd
    prime is given, of single elements of that order.  Only semiregular
    candidates with more than two orbits are returned.
    """
    candidates: list[PermutationGroup] = []
    seen_orders: set[tuple] = set()

    def consider(seed: Permutation) -> None:
        closure = group.normal_closure([seed], check_membership=False)
        if closure.order() <= 1:
            return
        orbits = closure.orbits()
        if not closure.is_semiregular_group() or len(orbits) <= 2:
            return
        key = (closure.order(), tuple(tuple(b) for b in orbits.blocks))
        if key not in seen_orders:
            seen_orders.add(key)
            candidates.append(closure)

    if group.order() <= bound:
        elements = [Permutation(raw) for raw in group.chain.elements()]
        gens = group.generators
        for p in elements:
            if p.order() == 2 and all(p * g == g * p for g in gens):
                consider(p)
        if odd_prime is not None:
            for p in elements:
                if p.order() == odd_prime:
                    consider(p)
                    break
    return candidates
