"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

import itertools
import random

from divlab.family import Family, iter_ksets, mask_of


def random_family(rng: random.Random, n: int, k: int, density: float = 0.3) -> Family:
    """An arbitrary (not necessarily intersecting) family."""
    return Family(n, k, [m for m in iter_ksets(n, k) if rng.random() < density])


def random_intersecting(rng: random.Random, n: int, k: int, tries: int = 30) -> Family:
    universe = list(iter_ksets(n, k))
    rng.shuffle(universe)
    out: list[int] = []
    for m in universe[:tries]:
        if all(m & x for x in out):
            out.append(m)
    return Family(n, k, out)


def random_cross_pair(rng: random.Random, n: int, a: int, b: int) -> tuple[Family, Family]:
    """A cross-intersecting pair built by filtering b-sets against a random A."""
    fam_a = random_family(rng, n, a, 0.2)
    compat = [m for m in iter_ksets(n, b) if all(m & x for x in fam_a.members)]
    fam_b = Family(n, b, [m for m in compat if rng.random() < 0.5])
    return fam_a, fam_b


def brute_shadow(fam: Family, size: int) -> set[int]:
    """Shadow by scanning all size-subsets of the ground set."""
    out = set()
    for combo in itertools.combinations(range(1, fam.n + 1), size):
        cm = mask_of(combo)
        if any(cm & m == cm for m in fam.members):
            out.add(cm)
    return out


def brute_matching(fam: Family) -> int:
    """Maximum pairwise-disjoint subfamily by scanning all subfamilies."""
    best = 0
    ms = fam.members
    for r in range(len(ms), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(ms, r):
            if all(not a & b for a, b in itertools.combinations(combo, 2)):
                best = max(best, r)
                break
    return best


def brute_max_size_with_cap(n: int, k: int, cap: int) -> int:
    """Max intersecting family size under a degree cap, by scanning all
    subsets of the universe (exponential; tiny inputs only)."""
    universe = list(iter_ksets(n, k))
    best = 0
    for r in range(1 << len(universe)):
        chosen = [universe[i] for i in range(len(universe)) if r >> i & 1]
        if len(chosen) <= best:
            continue
        if any(not a & b for a, b in itertools.combinations(chosen, 2)):
            continue
        deg: dict[int, int] = {}
        ok = True
        for m in chosen:
            mm = m
            while mm:
                low = mm & -mm
                e = low.bit_length()
                deg[e] = deg.get(e, 0) + 1
                if deg[e] > cap:
                    ok = False
                mm ^= low
        if ok:
            best = len(chosen)
    return best


def brute_max_diversity(n: int, k: int) -> int:
    """Max |F| - Delta(F) over intersecting families by direct DFS.

    Independent of the degree-cap decomposition: the bound only uses the
    facts that Delta never decreases and size grows by one per added set.
    """
    universe = list(iter_ksets(n, k))
    best = 0

    def grow(cands, chosen_count, deg):
        nonlocal best
        delta = max(deg) if chosen_count else 0
        best = max(best, chosen_count - delta)
        if chosen_count + len(cands) - delta <= best:
            return
        for idx, c in enumerate(cands):
            nd = list(deg)
            mm = c
            while mm:
                low = mm & -mm
                nd[low.bit_length() - 1] += 1
                mm ^= low
            grow([d for d in cands[idx + 1 :] if d & c], chosen_count + 1, nd)

    grow(universe, 0, [0] * n)
    return best


def all_intersecting_families(n: int, k: int):
    """Every intersecting family on (n, k), by DFS over lex-ordered k-sets."""
    universe = list(iter_ksets(n, k))

    def extend(start: int, chosen: list[int]):
        yield tuple(chosen)
        for i in range(start, len(universe)):
            if all(universe[i] & m for m in chosen):
                chosen.append(universe[i])
                yield from extend(i + 1, chosen)
                chosen.pop()

    for members in extend(0, []):
        yield Family(n, k, members)
