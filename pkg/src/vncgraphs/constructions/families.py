"""The named graph families: X(n,2), the NC catalogue, NC9, Petersen.

Catalogue generator data is stored 0-based; the published tables are
1-based, so every cycle below is the published one shifted down by one.
The nine sporadic coset-graph rows live over four groups: S5 and A5 x Z2
and S5 x Z2 realized on 7 points (the last point pair carrying the Z2
factor), and PGL(2,7) realized on 8 points.
"""

from __future__ import annotations

from ..graph import Graph
from ..group import PermutationGroup
from ..perm import Permutation
from .cayley import CosetSpace, coset_graph, double_coset
from .bicayley import BiCayleySpec, bicayley_graph
from .finite_groups import FiniteGroup, s3_times_zp


# --- X(n,2) ------------------------------------------------------------


def x_n_2(n: int) -> Graph:
    """Cubic graph on 4n vertices; vertex x_k^r sits at index 2k + r."""
    if n < 2:
        raise ValueError("X(n,2) requires n >= 2")
    m = 2 * n
    edges = []
    for i in range(n):
        for r in (0, 1):
            edges.append((2 * (2 * i) + r, 2 * (2 * i + 1) + r))
            for s in (0, 1):
                edges.append((2 * (2 * i + 1) + r, 2 * ((2 * i + 2) % m) + s))
    return Graph.from_edges(4 * n, edges)


def x_n_2_regular_group(n: int) -> PermutationGroup:
    """The dihedral group of order 4n acting regularly on V(X(n,2)).

    Generators: the shift x_k^r -> x_{k+2}^r, the superscript swap
    x_k^0 <-> x_k^1, and the reversal x_k^r -> x_{2n-1-k}^r.
    """
    if n < 2:
        raise ValueError("X(n,2) requires n >= 2")
    m = 2 * n
    shift = Permutation(
        [2 * ((k + 2) % m) + r for k in range(m) for r in (0, 1)])
    swap = Permutation(
        [2 * k + (1 - r) for k in range(m) for r in (0, 1)])
    reverse = Permutation(
        [2 * ((2 * n - 1 - k) % m) + r for k in range(m) for r in (0, 1)])
    return PermutationGroup(4 * n, [shift, swap, reverse])


# --- the sporadic NC rows ---------------------------------------------------

# (degree, expected |G|, H generators, a, b), all cycles 0-based
_NC_TABLE = {
    0: (7, 120,
        [[(0, 2), (1, 4)]],
        [(0, 1, 3, 4, 2)],
        [(1, 4)]),
    1: (7, 120,
        [[(1, 2), (3, 4)]],
        [(1, 4), (2, 3), (5, 6)],
        [(0, 1), (2, 3), (5, 6)]),
    2: (7, 120,
        [[(1, 2), (3, 4)]],
        [(0, 1, 3, 4, 2)],
        [(1, 3), (2, 4), (5, 6)]),
    3: (7, 120,
        [[(1, 2), (3, 4)]],
        [(0, 2, 4, 3, 1), (5, 6)],
        [(1, 3), (2, 4)]),
    4: (7, 240,
        [[(0, 2)], [(3, 4)]],
        [(0, 2, 1), (3, 4)],
        [(0, 4, 2, 3), (5, 6)]),
    5: (7, 240,
        [[(0, 2), (5, 6)], [(3, 4), (5, 6)]],
        [(1, 4)],
        [(0, 3, 2, 4), (5, 6)]),
    6: (7, 240,
        [[(0, 2), (5, 6)], [(3, 4), (5, 6)]],
        [(1, 3)],
        [(0, 3), (2, 4), (5, 6)]),
    7: (8, 336,
        [[(0, 6), (1, 3), (2, 7)], [(0, 3), (1, 6), (4, 5)]],
        [(0, 7, 3), (1, 6, 2)],
        [(0, 3, 1, 6), (2, 5, 7, 4)]),
    8: (8, 336,
        [[(0, 5), (1, 3), (2, 6), (4, 7)], [(0, 3), (1, 5), (2, 7), (4, 6)]],
        [(0, 2, 4, 1, 5, 6, 7, 3)],
        [(0, 4, 1, 2), (3, 7, 5, 6)]),
}


def nc_catalogue_data(i: int) -> tuple[FiniteGroup, tuple[int, ...], tuple[int, ...]]:
    """Group, subgroup and connection union (G, H, HaH u HbH) for row i."""
    if i not in _NC_TABLE:
        raise ValueError(f"catalogue index {i} out of range 0..8")
    degree, expected_order, h_cycles, a_cycles, b_cycles = _NC_TABLE[i]
    h_gens = [Permutation.from_cycles(degree, cyc) for cyc in h_cycles]
    a = Permutation.from_cycles(degree, a_cycles)
    b = Permutation.from_cycles(degree, b_cycles)
    group = FiniteGroup.from_generators(degree, h_gens + [a, b])
    if group.order != expected_order:
        raise RuntimeError(
            f"catalogue row {i}: group order {group.order}, "
            f"expected {expected_order}")
    subgroup = group.subgroup_closure([group.index(g) for g in h_gens])
    d_union = tuple(sorted(
        set(double_coset(group, subgroup, group.index(a)))
        | set(double_coset(group, subgroup, group.index(b)))))
    return group, subgroup, d_union


def nc_catalogue(i: int) -> Graph:
    """The i-th sporadic coset graph (order 60 for i <= 6, 84 for i in {7,8})."""
    group, subgroup, d_union = nc_catalogue_data(i)
    graph = coset_graph(group, subgroup, d_union)
    expected_order = 60 if i <= 6 else 84
    if graph.n != expected_order or not graph.is_cubic() or not graph.is_connected():
        raise RuntimeError(f"catalogue row {i} failed its shape validation")
    return graph


def nc_catalogue_transitive_action(i: int) -> PermutationGroup:
    """The right-multiplication action of the row's group on the vertices."""
    group, subgroup, _ = nc_catalogue_data(i)
    return CosetSpace(group, subgroup).right_action()


# --- the infinite family ----------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def order_four_unit(p: int) -> int:
    """Smallest element of multiplicative order 4 modulo p."""
    for x in range(2, p):
        if pow(x, 2, p) == p - 1:
            return x
    raise ValueError(f"no element of order 4 modulo {p}")


def nc9_spec(p: int, lam: int | None = None) -> BiCayleySpec:
    """The one-matching bi-Cayley spec over S3 x Z_p behind the 12p family.

    R = {ac, ac^-1} and L = {bc^lam, bc^-lam} with lam of multiplicative
    order 4 mod p (smallest such by default).
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p % 4 != 1:
        raise ValueError(
            f"the order-12p family requires p congruent to 1 mod 4; p = {p} "
            "admits no such graph")
    if lam is None:
        lam = order_four_unit(p)
    elif pow(lam, 2, p) != p - 1:
        raise ValueError(f"lambda = {lam} does not have order 4 modulo {p}")
    h = s3_times_zp(p)
    c_pow = {k: h.index_of[h.element(h.c).__pow__(k).images] for k in range(p)}
    ac = h.mult(h.a, c_pow[1])
    ac_inv = h.mult(h.a, c_pow[p - 1])
    bcl = h.mult(h.b, c_pow[lam % p])
    bcl_inv = h.mult(h.b, c_pow[(p - lam) % p])
    return BiCayleySpec(h, (ac, ac_inv), (bcl, bcl_inv), (0,))


def nc9(p: int, lam: int | None = None) -> Graph:
    """The unique cubic VNC graph of order 12p for prime p = 1 mod 4."""
    graph = bicayley_graph(nc9_spec(p, lam))
    if graph.n != 12 * p or not graph.is_cubic() or not graph.is_connected():
        raise RuntimeError("12p family construction failed its shape validation")
    return graph


# --- small named graphs -----------------------------------------------------


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n,k): outer n-cycle 0..n-1, inner star polygon n..2n-1, spokes."""
    if n < 3 or not 1 <= k < n or 2 * k == n:
        raise ValueError("invalid generalized Petersen parameters")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph.from_edges(2 * n, edges)


def petersen_graph() -> Graph:
    return generalized_petersen(5, 2)
