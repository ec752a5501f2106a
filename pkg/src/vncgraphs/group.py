"""Permutation groups backed by deterministic Schreier-Sims stabilizer chains.

Base points are chosen as the smallest point moved by the generator that
forced the new level, transversal representatives are frozen once assigned,
and Schreier generators are processed in sorted point order, so chains,
orders and element enumeration are reproducible run to run.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import product as _iter_product
from typing import Iterable, Iterator, Sequence

from .perm import Permutation

ENUMERATION_BOUND = 10**6

Raw = tuple  # raw image tuple used inside chains


class BoundExceededError(RuntimeError):
    """An enumeration or search exceeded its configured hard bound."""


def _compose(p: Raw, q: Raw) -> Raw:
    # apply p first, then q
    return tuple(q[i] for i in p)


def _inverse(p: Raw) -> Raw:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _min_moved(p: Raw) -> int:
    for i, j in enumerate(p):
        if i != j:
            return i
    raise ValueError("identity permutation moves no point")


class StabilizerChain:
    """Base and strong generating set for a group of degree-n permutations.

    ``level_gens[i]`` holds every strong generator fixing ``base[:i]``
    pointwise; ``transversals[i]`` maps each point of the orbit of
    ``base[i]`` under those generators to a representative with
    ``base[i] ^ rep == point``.
    """

    def __init__(self, degree: int, gens: Iterable[Raw],
                 initial_base: Sequence[int] = ()):
        self.degree = degree
        self.base: list[int] = []
        self.level_gens: list[list[Raw]] = []
        self.transversals: list[dict[int, Raw]] = []
        self._pending: list[deque] = []
        for b in initial_base:
            self._new_level(b)
        identity = tuple(range(degree))
        for g in gens:
            if g != identity:
                self.insert(g)

    def _new_level(self, b: int) -> None:
        self.base.append(b)
        self.level_gens.append([])
        self.transversals.append({b: tuple(range(self.degree))})
        self._pending.append(deque())

    def strip(self, g: Raw, start: int = 0) -> tuple[Raw, int]:
        """Sift g through levels from ``start``; return (residue, level)."""
        for i in range(start, len(self.base)):
            w = g[self.base[i]]
            if w == self.base[i]:
                continue
            rep = self.transversals[i].get(w)
            if rep is None:
                return g, i
            g = _compose(g, _inverse(rep))
        return g, len(self.base)

    def contains(self, g: Raw) -> bool:
        residue, _ = self.strip(g)
        return residue == tuple(range(self.degree))

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def insert(self, g: Raw) -> bool:
        """Add a generator; returns True if the group grew."""
        residue, level = self.strip(g)
        if residue == tuple(range(self.degree)):
            return False
        self._add_strong_gen(residue, level)
        self._process(level)
        return True

    def _add_strong_gen(self, h: Raw, level: int) -> None:
        if level == len(self.base):
            self._new_level(_min_moved(h))
        for i in range(level + 1):
            gens = self.level_gens[i]
            gens.append(h)
            idx = len(gens) - 1
            orbit = sorted(self.transversals[i])
            self._pending[i].extend((w, idx) for w in orbit)
            self._extend_transversal(i)

    def _extend_transversal(self, i: int) -> None:
        # representatives are frozen once assigned; only new points appear
        trans = self.transversals[i]
        gens = self.level_gens[i]
        queue = deque(sorted(trans))
        while queue:
            w = queue.popleft()
            rep = trans[w]
            for s in gens:
                ws = s[w]
                if ws not in trans:
                    trans[ws] = _compose(rep, s)
                    self._pending[i].extend(
                        (ws, k) for k in range(len(gens)))
                    queue.append(ws)

    def _process(self, start_level: int) -> None:
        identity = tuple(range(self.degree))
        i = min(start_level, len(self.base) - 1)
        while i >= 0:
            pending = self._pending[i]
            inserted_at = None
            while pending:
                w, gen_idx = pending.popleft()
                s = self.level_gens[i][gen_idx]
                rep = self.transversals[i][w]
                schreier = _compose(_compose(rep, s),
                                    _inverse(self.transversals[i][s[w]]))
                if schreier == identity:
                    continue
                residue, level = self.strip(schreier, i + 1)
                if residue != identity:
                    # retest this pair after the residue has been absorbed
                    pending.appendleft((w, gen_idx))
                    self._add_strong_gen(residue, level)
                    inserted_at = level
                    break
            if inserted_at is not None:
                i = inserted_at
            else:
                i -= 1

    def elements(self) -> Iterator[Raw]:
        """Every element exactly once, via transversal products."""
        if not self.base:
            yield tuple(range(self.degree))
            return
        rep_lists = [
            [t[w] for w in sorted(t)] for t in self.transversals]
        for choice in _iter_product(*rep_lists):
            g = choice[-1]
            for rep in reversed(choice[:-1]):
                g = _compose(g, rep)
            yield g


class OrbitPartition:
    """Disjoint blocks covering {0,...,n-1}, each closed under the group."""

    def __init__(self, blocks: Sequence[Sequence[int]], degree: int):
        self.degree = degree
        self.blocks = [tuple(sorted(b)) for b in blocks]
        self.blocks.sort(key=lambda b: b[0])
        self.block_of = [-1] * degree
        for idx, block in enumerate(self.blocks):
            for v in block:
                self.block_of[v] = idx
        if any(i < 0 for i in self.block_of):
            raise ValueError("blocks do not cover the domain")

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrbitPartition)
                and self.blocks == other.blocks)

    def __repr__(self) -> str:
        return f"OrbitPartition({len(self.blocks)} blocks, degree={self.degree})"


class PermutationGroup:
    """A group of permutations of {0,...,n-1} given by generators."""

    def __init__(self, degree: int, generators: Iterable[Permutation]):
        self.degree = degree
        gens: list[Permutation] = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity() and g.images not in seen:
                seen.add(g.images)
                gens.append(g)
        self.generators = gens
        self._chain: StabilizerChain | None = None

    @classmethod
    def trivial(cls, degree: int) -> PermutationGroup:
        return cls(degree, [])

    @classmethod
    def from_raw(cls, degree: int, raw_gens: Iterable[Raw]) -> PermutationGroup:
        return cls(degree, [Permutation(g) for g in raw_gens])

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(
                self.degree, (g.images for g in self.generators))
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def membership(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {p.degree} vs {self.degree}")
        return self.chain.contains(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.membership(p)

    def is_subgroup(self, other: PermutationGroup) -> bool:
        """True iff every generator of self lies in other."""
        return all(other.membership(g) for g in self.generators)

    def enumerate_elements(self, bound: int = ENUMERATION_BOUND) -> Iterator[Permutation]:
        n = self.order()
        if n > bound:
            raise BoundExceededError(
                f"group order {n} exceeds enumeration bound {bound}")
        return (Permutation(raw) for raw in self.chain.elements())

    # --- orbits and actions -------------------------------------------------

    def orbits(self) -> OrbitPartition:
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g.images):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for v in range(self.degree):
            groups.setdefault(find(v), []).append(v)
        return OrbitPartition(list(groups.values()), self.degree)

    def orbit_of(self, v: int) -> list[int]:
        orbit = {v}
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for g in self.generators:
                x = g[w]
                if x not in orbit:
                    orbit.add(x)
                    queue.append(x)
        return sorted(orbit)

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit_of(0)) == self.degree

    def is_semiregular_group(self) -> bool:
        n = self.order()
        return all(len(b) == n for b in self.orbits().blocks)

    def is_regular_action(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def point_stabilizer(self, v: int) -> PermutationGroup:
        """Subgroup fixing v, via a chain rebased at v."""
        if not 0 <= v < self.degree:
            raise ValueError(f"point {v} out of range for degree {self.degree}")
        chain = StabilizerChain(
            self.degree, (g.images for g in self.generators), initial_base=[v])
        stab_raw = chain.level_gens[1] if len(chain.base) > 1 else []
        stab = PermutationGroup.from_raw(self.degree, stab_raw)
        orbit_len = len(chain.transversals[0])
        if orbit_len * stab.order() != self.order():
            raise RuntimeError(
                "orbit-stabilizer mismatch; stabilizer chain is inconsistent")
        return stab

    # --- derived structure --------------------------------------------------

    def normal_closure(self, seeds: Iterable[Permutation],
                       check_membership: bool = True) -> PermutationGroup:
        """Smallest subgroup containing seeds and closed under conjugation
        by the generators of self."""
        seeds = list(seeds)
        if check_membership:
            for s in seeds:
                if not self.membership(s):
                    raise ValueError("seed is not an element of the group")
        chain = StabilizerChain(self.degree, [])
        closure_gens: list[Raw] = []
        queue = deque(s.images for s in seeds)
        conj = [(g.images, _inverse(g.images)) for g in self.generators]
        while queue:
            x = queue.popleft()
            if chain.contains(x):
                continue
            chain.insert(x)
            closure_gens.append(x)
            for g, g_inv in conj:
                queue.append(_compose(_compose(g_inv, x), g))
        result = PermutationGroup.from_raw(self.degree, closure_gens)
        result._chain = chain
        return result

    def derived_subgroup(self) -> PermutationGroup:
        commutators = []
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity():
                    commutators.append(c)
        return self.normal_closure(commutators, check_membership=False)

    def derived_series(self) -> list[PermutationGroup]:
        series = [self]
        while True:
            current = series[-1]
            if current.order() == 1:
                break
            nxt = current.derived_subgroup()
            if nxt.order() == current.order():
                break
            series.append(nxt)
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order() == 1

    # --- normalizer / centralizer -------------------------------------------

    def normalizer_and_centralizer(
            self, sub: PermutationGroup,
            bound: int = ENUMERATION_BOUND) -> tuple[PermutationGroup, PermutationGroup]:
        """Brute-force N_G(sub) and C_G(sub) by filtering every element.

        Checks the textbook containment C <= N and C normal in N.
        """
        if not sub.is_subgroup(self):
            raise ValueError("sub is not a subgroup of the group")
        sub_gens = [h.images for h in sub.generators]
        norm_raw: list[Raw] = []
        cent_raw: list[Raw] = []
        count = 0
        n = self.order()
        if n > bound:
            raise BoundExceededError(
                f"group order {n} exceeds enumeration bound {bound}")
        for g in self.chain.elements():
            count += 1
            g_inv = _inverse(g)
            centralizes = True
            normalizes = True
            for h in sub_gens:
                conj = _compose(_compose(g_inv, h), g)
                if conj != h:
                    centralizes = False
                    if not sub.chain.contains(conj):
                        normalizes = False
                        break
            if normalizes:
                norm_raw.append(g)
            if centralizes:
                cent_raw.append(g)
        normalizer = PermutationGroup.from_raw(self.degree, norm_raw)
        centralizer = PermutationGroup.from_raw(self.degree, cent_raw)
        if not centralizer.is_subgroup(normalizer):
            raise RuntimeError("centralizer escaped the normalizer")
        for g in normalizer.generators:
            for c in centralizer.generators:
                if not centralizer.membership(c.conjugate(g)):
                    raise RuntimeError("centralizer is not normal in normalizer")
        return normalizer, centralizer

    def normalizer(self, sub: PermutationGroup,
                   bound: int = ENUMERATION_BOUND) -> PermutationGroup:
        return self.normalizer_and_centralizer(sub, bound)[0]

    def centralizer(self, sub: PermutationGroup,
                    bound: int = ENUMERATION_BOUND) -> PermutationGroup:
        return self.normalizer_and_centralizer(sub, bound)[1]

    # --- serialization ------------------------------------------------------

    def to_lines(self) -> list[str]:
        return [g.to_line() for g in self.generators]

    @classmethod
    def from_lines(cls, degree: int, lines: Iterable[str]) -> PermutationGroup:
        return cls(degree, [Permutation.from_line(line) for line in lines])

    def __repr__(self) -> str:
        return (f"PermutationGroup(degree={self.degree}, "
                f"ngens={len(self.generators)})")
