"""Constructors for the named intersecting families, plus lex and shifting."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .family import Family, mask_of

# A fixed labeling of the seven lines of the Fano plane.  Any labeling is
# isomorphic; canonical_form makes the choice immaterial.
FANO_LINES: tuple[frozenset[int], ...] = tuple(
    frozenset(line)
    for line in ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
)


def _outside_combos(n: int, excluded: int, size: int):
    """Masks of size-subsets of [1,n] avoiding the excluded mask."""
    rest = [e for e in range(1, n + 1) if not excluded >> (e - 1) & 1]
    for combo in itertools.combinations(rest, size):
        yield mask_of(combo)


def full_star(n: int, k: int, center: int = 1) -> Family:
    """All k-subsets of [n] containing `center`; size C(n-1, k-1)."""
    if not 1 <= center <= n:
        raise ValueError(f"center {center} outside [1,{n}]")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    c = 1 << (center - 1)
    return Family(n, k, (c | rest for rest in _outside_combos(n, c, k - 1)))


def family_fi(n: int, k: int, i: int) -> Family:
    """Sets containing 1 and meeting [2,i], united with the sets containing [2,i].

    Size C(n-1,k-1) - C(n-i,k-1) + C(n-i,k-i+1); i = k+1 gives the
    Hilton-Milner family.
    """
    if not 3 <= i <= k + 1:
        raise ValueError(f"i={i} outside [3, k+1] for k={k}")
    if i > n:
        raise ValueError(f"i={i} exceeds the ground set")
    one = 1
    window = mask_of(range(2, i + 1))
    members = set()
    for rest in _outside_combos(n, one, k - 1):
        if rest & window:
            members.add(one | rest)
    for rest in _outside_combos(n, window, k - (i - 1)):
        members.add(window | rest)
    return Family(n, k, members)


def family_uvw(n: int, k: int, triple: tuple[int, int, int]) -> Family:
    """All k-sets meeting the triple in exactly 2 elements."""
    t = mask_of(triple)
    if t.bit_count() != 3:
        raise ValueError(f"triple {triple} must have three distinct elements")
    if any(not 1 <= e <= n for e in triple):
        raise ValueError(f"triple {triple} exceeds the ground set [1,{n}]")
    if k < 2:
        raise ValueError("uniformity must be at least 2")
    members = []
    for pair in itertools.combinations(sorted(set(triple)), 2):
        pm = mask_of(pair)
        members.extend(pm | rest for rest in _outside_combos(n, t, k - 2))
    return Family(n, k, members)


def family_uvw_star(n: int, k: int, triple: tuple[int, int, int]) -> Family:
    """All k-sets meeting the triple in at least 2 elements."""
    base = family_uvw(n, k, triple)
    t = mask_of(triple)
    extra = []
    if k >= 3:
        extra = [t | rest for rest in _outside_combos(n, t, k - 3)]
    return Family(n, k, base.members + tuple(extra))


def family_triangle(n: int, k: int) -> Family:
    """The pure triangle family: k-sets meeting {1,2,3} in exactly 2 elements."""
    return family_uvw(n, k, (1, 2, 3))


def lex_rank(n: int, k: int, elements: tuple[int, ...]) -> int:
    """0-based rank of a k-set in the lexicographic order on [n]."""
    rank = 0
    prev = 0
    for pos, e in enumerate(sorted(elements)):
        for skipped in range(prev + 1, e):
            rank += math.comb(n - skipped, k - pos - 1)
        prev = e
    return rank


def lex_unrank(n: int, k: int, rank: int) -> tuple[int, ...]:
    """The k-set of [n] with the given 0-based lexicographic rank."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError(f"rank {rank} outside [0, C({n},{k}))")
    out = []
    e = 1
    for pos in range(k):
        while True:
            block = math.comb(n - e, k - pos - 1)
            if rank < block:
                break
            rank -= block
            e += 1
        out.append(e)
        e += 1
    return tuple(out)


def lex_family(n: int, k: int, m: int) -> Family:
    """The first m k-subsets of [n] in lexicographic order, by unranking."""
    if not 0 <= m <= math.comb(n, k):
        raise ValueError(f"m={m} outside [0, C({n},{k})]")
    return Family(n, k, (mask_of(lex_unrank(n, k, r)) for r in range(m)))


def shift_masks(masks: frozenset[int] | set[int], i: int, j: int) -> set[int]:
    """The i <- j shift on a set of bitmasks (replace j by i unless taken)."""
    if not i < j:
        raise ValueError(f"shift needs i < j, got ({i},{j})")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out = set()
    for m in masks:
        if m & bj and not m & bi:
            moved = m ^ bj | bi
            out.add(m if moved in masks else moved)
        else:
            out.add(m)
    return out


def shift(fam: Family, i: int, j: int) -> Family:
    """Memberwise i <- j shift; preserves size, uniformity and intersection."""
    if not 1 <= i < j <= fam.n:
        raise ValueError(f"shift indices ({i},{j}) invalid for n={fam.n}")
    return Family(fam.n, fam.k, shift_masks(set(fam.members), i, j))


def shift_closure(fam: Family) -> Family:
    """Apply all shifts S_ij (i < j) until the family stops changing."""
    current = set(fam.members)
    changed = True
    while changed:
        changed = False
        for i in range(1, fam.n):
            for j in range(i + 1, fam.n + 1):
                nxt = shift_masks(current, i, j)
                if nxt != current:
                    current = nxt
                    changed = True
    return Family(fam.n, fam.k, current)


def fano_families(n: int, k: int) -> tuple[Family, Family]:
    """(F_L, F_L+): k-sets whose trace on [7] is a Fano line, resp. a line
    or a 4-subset of [7] other than a line complement."""
    if n < 7:
        raise ValueError(f"Fano families need n >= 7, got {n}")
    if k < 3:
        raise ValueError(f"Fano families need k >= 3, got {k}")
    seven = mask_of(range(1, 8))
    lines = [mask_of(line) for line in FANO_LINES]
    complements = {seven ^ lm for lm in lines}
    base = []
    for lm in lines:
        base.extend(lm | rest for rest in _outside_combos(n, seven, k - 3))
    plus = list(base)
    if k >= 4:
        for quad in itertools.combinations(range(1, 8), 4):
            qm = mask_of(quad)
            if qm in complements:
                continue
            plus.extend(qm | rest for rest in _outside_combos(n, seven, k - 4))
    return Family(n, k, base), Family(n, k, plus)


@dataclass(frozen=True)
class KernelTriple:
    """Three pairwise-intersecting kernels inside [4,n], each of size in [2,k)."""

    a1: frozenset[int]
    a2: frozenset[int]
    a3: frozenset[int]

    @classmethod
    def uniform(cls, kernel: tuple[int, ...]) -> "KernelTriple":
        s = frozenset(kernel)
        return cls(s, s, s)

    def parts(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.a1, self.a2, self.a3)

    def validate(self, n: int, k: int) -> None:
        for a in self.parts():
            if not a <= set(range(4, n + 1)):
                raise ValueError(f"kernel {sorted(a)} must lie inside [4,{n}]")
            if not 2 <= len(a) < k:
                raise ValueError(f"kernel {sorted(a)} size must be in [2,{k})")
        for a, b in itertools.combinations(self.parts(), 2):
            if not a & b:
                raise ValueError(f"kernels {sorted(a)} and {sorted(b)} are disjoint")

    def common_size(self) -> int | None:
        sizes = {len(a) for a in self.parts()}
        return sizes.pop() if len(sizes) == 1 else None


def sample_kernels(ell: int) -> KernelTriple:
    """Three distinct pairwise-intersecting kernels of common size ell,
    packed into [4, ell+4].  Distinct parts avoid the degeneracy of equal
    kernels, whose shared elements outdegree [3]."""
    if ell < 2:
        raise ValueError("kernel size must be at least 2")
    a1 = frozenset(range(4, ell + 4))
    a2 = frozenset(range(4, ell + 3)) | {ell + 4}
    a3 = frozenset(range(4, ell + 2)) | {ell + 3, ell + 4}
    return KernelTriple(a1, a2, a3)


def example_t(n: int, k: int, kernels: KernelTriple) -> Family:
    """Three-block family: for each i, sets tracing [3] at [3]\\{i} that meet
    the i-th kernel, plus sets tracing [3] at {i} that contain the kernel."""
    kernels.validate(n, k)
    three = mask_of((1, 2, 3))
    members = []
    for i, kern in zip((1, 2, 3), kernels.parts()):
        km = mask_of(kern)
        pair = three ^ (1 << (i - 1))
        for rest in _outside_combos(n, three, k - 2):
            if rest & km:
                members.append(pair | rest)
        own = (1 << (i - 1)) | km
        members.extend(own | rest for rest in _outside_combos(n, three | km, k - 1 - len(kern)))
    return Family(n, k, members)
