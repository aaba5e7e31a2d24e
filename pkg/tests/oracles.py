"""Independent brute-force reference implementations used by the test suite.

Everything here works on raw image tuples, not on the package's own classes,
so a bug in the package cannot hide inside its oracle.
"""

from __future__ import annotations

from itertools import combinations


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # p applied first, then q
    return tuple(q[x] for x in p)


def closure(gens: list[tuple[int, ...]], limit: int = 200_000) -> set[tuple[int, ...]]:
    """The full element set generated by BFS closure; fails the test if huge."""
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise AssertionError("closure exceeded %d elements" % limit)
        frontier = nxt
    return seen


def closure_order(gens: list[tuple[int, ...]], limit: int = 200_000) -> int:
    return len(closure(gens, limit))


def stabilizer_of_set(elements: set[tuple[int, ...]], s: frozenset[int]) -> set[tuple[int, ...]]:
    return {p for p in elements if frozenset(p[x] for x in s) == s}


def orbit_of_point(elements: set[tuple[int, ...]], point: int) -> set[int]:
    return {p[point] for p in elements}


def blocks_through_zero(elements: set[tuple[int, ...]], degree: int) -> list[frozenset[int]]:
    """All nontrivial blocks (of imprimitivity) containing the point 0."""
    out = []
    for size in range(2, degree):
        if degree % size:
            continue
        for rest in combinations(range(1, degree), size - 1):
            b = frozenset((0,) + rest)
            if all(frozenset(p[x] for x in b) in (b,) or not (frozenset(p[x] for x in b) & b)
                   for p in elements):
                out.append(b)
    return out


def block_systems(elements: set[tuple[int, ...]], degree: int) -> list[tuple[tuple[int, ...], ...]]:
    """All nontrivial block systems of a transitive permutation group."""
    systems = []
    for b in blocks_through_zero(elements, degree):
        classes = {frozenset(p[x] for x in b) for p in elements}
        part = tuple(sorted(tuple(sorted(c)) for c in classes))
        if part not in systems:
            systems.append(part)
    return systems


def pair_count_matrix(v: int, blocks: list[frozenset[int]]) -> dict[tuple[int, int], int]:
    """How many blocks contain each unordered point pair."""
    counts = {(x, y): 0 for x in range(v) for y in range(x + 1, v)}
    for b in blocks:
        for x, y in combinations(sorted(b), 2):
            counts[(x, y)] += 1
    return counts


def _maps_blocks(p: tuple[int, ...], blocks1: list[tuple[int, ...]],
                 blockset2: set[tuple[int, ...]],
                 counter2: dict[tuple[int, ...], int]) -> bool:
    # fail fast on the set test, then settle multiplicities
    mapped = []
    for b in blocks1:
        m = tuple(sorted(p[x] for x in b))
        if m not in blockset2:
            return False
        mapped.append(m)
    left = dict(counter2)
    for m in mapped:
        left[m] -= 1
        if left[m] < 0:
            return False
    return True


def isomorphisms(v: int, blocks1: list[tuple[int, ...]],
                 blocks2: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Every point bijection carrying one block multiset onto the other.

    Tries all v! candidates, so keep v small.
    """
    from collections import Counter
    from itertools import permutations

    if len(blocks1) != len(blocks2):
        return []
    blockset2 = set(blocks2)
    counter2 = dict(Counter(blocks2))
    return [p for p in permutations(range(v))
            if _maps_blocks(p, blocks1, blockset2, counter2)]


def first_isomorphism(v: int, blocks1: list[tuple[int, ...]],
                      blocks2: list[tuple[int, ...]]) -> tuple[int, ...] | None:
    from collections import Counter
    from itertools import permutations

    if len(blocks1) != len(blocks2):
        return None
    blockset2 = set(blocks2)
    counter2 = dict(Counter(blocks2))
    for p in permutations(range(v)):
        if _maps_blocks(p, blocks1, blockset2, counter2):
            return p
    return None
