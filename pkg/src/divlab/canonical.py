"""Canonical relabeling of small k-uniform families.

Two families are isomorphic iff their canonical forms are equal; no other
meaning is attached to the particular labeling that comes out.  The search
refines an element coloring (Weisfeiler-Lehman style on the incidence
structure), then backtracks over individualizations, pruning branches that
a transposition automorphism maps onto an explored sibling.
"""
from __future__ import annotations

from .family import Family, elements_of

_LEAF_LIMIT = 200_000


def canonical_form(fam: Family) -> Family:
    """A canonical representative of the isomorphism class of `fam`."""
    if not fam.members:
        return fam
    return Family(fam.n, fam.k, _Canonicalizer(fam).run())


def are_isomorphic(a: Family, b: Family) -> bool:
    if (a.n, a.k, len(a)) != (b.n, b.k, len(b)):
        return False
    if sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a) == canonical_form(b)


class _Canonicalizer:
    def __init__(self, fam: Family):
        self.n = fam.n
        self.masks = fam.members
        self.member_set = set(fam.members)
        # element -> tuple of indices of members containing it (0-indexed elems)
        self.incidence = [[] for _ in range(self.n)]
        for idx, m in enumerate(self.masks):
            for e in elements_of(m):
                self.incidence[e - 1].append(idx)
        self.best: tuple[int, ...] | None = None
        self.leaves = 0

    def run(self) -> tuple[int, ...]:
        colors = self._refine([0] * self.n)
        self._descend(colors)
        assert self.best is not None
        return self.best

    # colors: list elem(0-indexed) -> color id; ids are dense, assigned by
    # sorting invariant signatures, so they agree across isomorphic inputs.
    def _refine(self, colors: list[int]) -> list[int]:
        while True:
            sigs = []
            for e in range(self.n):
                inc = tuple(
                    sorted(
                        tuple(sorted(colors[x - 1] for x in elements_of(self.masks[i]) if x - 1 != e))
                        for i in self.incidence[e]
                    )
                )
                sigs.append((colors[e], inc))
            order = sorted(set(sigs))
            new = [order.index(s) for s in sigs]
            if new == colors:
                return new
            colors = new

    def _cells(self, colors: list[int]) -> list[list[int]]:
        cells: dict[int, list[int]] = {}
        for e, c in enumerate(colors):
            cells.setdefault(c, []).append(e)
        return [cells[c] for c in sorted(cells)]

    def _descend(self, colors: list[int]) -> None:
        cells = self._cells(colors)
        target = next((cell for cell in cells if len(cell) > 1), None)
        if target is None:
            self._leaf(colors)
            return
        for rep in self._orbit_reps(target):
            branched = [2 * c for c in colors]
            branched[rep] -= 1
            self._descend(self._refine(branched))

    def _orbit_reps(self, cell: list[int]) -> list[int]:
        """One element per block of the cell under transposition automorphisms."""
        parent = {e: e for e in cell}

        def find(e: int) -> int:
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for i in range(len(cell)):
            for j in range(i + 1, len(cell)):
                a, b = cell[i], cell[j]
                if find(a) == find(b):
                    continue
                if self._swap_is_automorphism(a, b):
                    parent[find(b)] = find(a)
        return sorted({find(e) for e in cell})

    def _swap_is_automorphism(self, a: int, b: int) -> bool:
        bit_a, bit_b = 1 << a, 1 << b
        both = bit_a | bit_b
        for m in self.masks:
            hit = m & both
            if hit == bit_a or hit == bit_b:
                if m ^ both not in self.member_set:
                    return False
        return True

    def _leaf(self, colors: list[int]) -> None:
        self.leaves += 1
        if self.leaves > _LEAF_LIMIT:
            raise RuntimeError("canonical form search exceeded its leaf limit")
        # all cells singleton: element e gets new 0-indexed label colors[e]
        relabeled = []
        for m in self.masks:
            out = 0
            while m:
                low = m & -m
                out |= 1 << colors[low.bit_length() - 1]
                m ^= low
            relabeled.append(out)
        cand = tuple(sorted(relabeled))
        if self.best is None or cand < self.best:
            self.best = cand
