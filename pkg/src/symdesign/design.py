"""Incidence structures and 2-design checks.

An incidence structure is a point count v together with a list of blocks,
each a sorted tuple of distinct points from {0, ..., v-1}.  Repeated blocks
are allowed and count with multiplicity (unions of copies of a design are
legitimate structures here).  Structure equality compares v and the block
multiset; isomorphism is a different question and lives in the iso module.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from typing import NamedTuple

from .perm import Perm, PermGroup, minimal_block_systems


class DesignError(ValueError):
    """A design axiom failed; the message carries the first witness found."""


class DesignParams(NamedTuple):
    v: int
    b: int
    k: int
    r: int
    lam: int

    @property
    def symmetric(self) -> bool:
        return self.v == self.b

    def __str__(self) -> str:
        return "2-(%d,%d,%d) design, b=%d, r=%d, symmetric=%s" % (
            self.v, self.k, self.lam, self.b, self.r,
            "true" if self.symmetric else "false",
        )


class IncidenceStructure:
    """Points 0..v-1 and a list of blocks (sorted tuples, duplicates kept)."""

    __slots__ = ("v", "blocks", "_index")

    def __init__(self, v: int, blocks: Iterable[Iterable[int]]):
        if v < 1:
            raise ValueError("need at least one point")
        cleaned = []
        for i, blk in enumerate(blocks):
            t = tuple(sorted(blk))
            if not t:
                raise ValueError("block %d is empty" % i)
            if len(set(t)) != len(t):
                raise ValueError("block %d repeats a point" % i)
            if t[0] < 0 or t[-1] >= v:
                raise ValueError("block %d leaves the point range" % i)
            cleaned.append(t)
        self.v = v
        self.blocks = tuple(cleaned)
        index: dict[tuple[int, ...], list[int]] = {}
        for i, t in enumerate(self.blocks):
            index.setdefault(t, []).append(i)
        self._index = index

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_multiset(self) -> Counter:
        return Counter(self.blocks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IncidenceStructure)
            and self.v == other.v
            and self.block_multiset() == other.block_multiset()
        )

    def __hash__(self) -> int:
        return hash((self.v, tuple(sorted(self.blocks))))

    def __repr__(self) -> str:
        return "IncidenceStructure(v=%d, b=%d)" % (self.v, self.b)


def verify_design(s: IncidenceStructure) -> DesignParams:
    """Check the 2-design axioms, returning the parameters.

    Raises DesignError naming the first violated axiom with a witness
    (a block, point, or point pair).
    """
    if s.v < 2:
        raise DesignError("need v >= 2 points, got v=%d" % s.v)
    if not s.blocks:
        raise DesignError("no blocks")
    k = len(s.blocks[0])
    for i, blk in enumerate(s.blocks):
        if len(blk) != k:
            raise DesignError(
                "blocks have unequal sizes: block 0 has %d points, block %d has %d"
                % (k, i, len(blk))
            )
    if k < 2:
        raise DesignError("block size k=%d is below 2" % k)

    rcount = [0] * s.v
    for blk in s.blocks:
        for x in blk:
            rcount[x] += 1
    r = rcount[0]
    for x in range(s.v):
        if rcount[x] != r:
            raise DesignError(
                "replication is not constant: point 0 lies in %d blocks, point %d in %d"
                % (r, x, rcount[x])
            )

    paircount = [[0] * s.v for _ in range(s.v)]
    for blk in s.blocks:
        for a in range(len(blk)):
            xa = blk[a]
            row = paircount[xa]
            for bidx in range(a + 1, len(blk)):
                row[blk[bidx]] += 1
    lam = paircount[0][1] if s.v > 1 else 0
    for x in range(s.v):
        for y in range(x + 1, s.v):
            if paircount[x][y] != lam:
                raise DesignError(
                    "pair coverage is not constant: pair (0,1) lies in %d blocks, "
                    "pair (%d,%d) in %d" % (lam, x, y, paircount[x][y])
                )
    if lam == 0:
        raise DesignError("no pair lies in any block (lambda = 0)")
    return DesignParams(s.v, s.b, k, r, lam)


def complement(s: IncidenceStructure) -> IncidenceStructure:
    """The structure whose blocks are the point-set complements."""
    params = verify_design(s)
    if s.v - params.k < 2:
        raise DesignError(
            "complement blocks would have %d < 2 points" % (s.v - params.k)
        )
    points = frozenset(range(s.v))
    return IncidenceStructure(s.v, [sorted(points.difference(blk)) for blk in s.blocks])


def develop(g: PermGroup | Sequence[Perm], base: Iterable[int]) -> IncidenceStructure:
    """The orbit of a base block under a group, as an incidence structure."""
    gens = g.generators if isinstance(g, PermGroup) else tuple(g)
    degree = max(p.degree for p in gens) if gens else 0
    start = frozenset(base)
    if not start:
        raise ValueError("base block is empty")
    degree = max(degree, max(start) + 1)
    seen = {start}
    queue = [start]
    while queue:
        blk = queue.pop()
        for p in gens:
            img = p.apply_to_set(blk)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return IncidenceStructure(degree, sorted(tuple(sorted(blk)) for blk in seen))


def induced_block_action(s: IncidenceStructure, p: Perm) -> Perm:
    """The permutation of block indices induced by a point permutation.

    Raises DesignError with a witness block if some block image is not a
    block of the structure.  Duplicate blocks are matched up in index order,
    which makes the result deterministic.
    """
    if p.degree != s.v:
        raise ValueError("permutation degree %d does not match v=%d" % (p.degree, s.v))
    spare = {content: list(ids) for content, ids in s._index.items()}
    img = [0] * s.b
    for i, blk in enumerate(s.blocks):
        target = tuple(sorted(p[x] for x in blk))
        ids = spare.get(target)
        if not ids:
            raise DesignError(
                "image of block %d = %r is not a block (maps to %r)" % (i, blk, target)
            )
        img[i] = ids.pop(0)
    return Perm(img)


def is_automorphism(s: IncidenceStructure, p: Perm) -> bool:
    try:
        induced_block_action(s, p)
    except DesignError:
        return False
    return True


def is_flag_transitive(s: IncidenceStructure, g: PermGroup) -> bool:
    """Whether g is transitive on flags (incident point-block pairs).

    Every generator must be an automorphism; the flag orbit is grown
    breadth-first and compared against the total flag count.
    """
    actions = []
    for p in g.generators:
        actions.append((p, induced_block_action(s, p)))
    nflags = sum(len(blk) for blk in s.blocks)
    if nflags == 0:
        return False
    start = (s.blocks[0][0], 0)
    seen = {start}
    queue = [start]
    while queue:
        x, bi = queue.pop()
        for p, sigma in actions:
            flag = (p[x], sigma[bi])
            if flag not in seen:
                seen.add(flag)
                queue.append(flag)
    return len(seen) == nflags


def is_point_primitive(s: IncidenceStructure, g: PermGroup) -> bool:
    """Whether g acts primitively on the points (no nontrivial block system)."""
    if g.degree != s.v:
        raise ValueError("group degree %d does not match v=%d" % (g.degree, s.v))
    if not g.is_transitive():
        raise ValueError("primitivity requires a transitive group")
    return not minimal_block_systems(g)


# -- serialization -----------------------------------------------------------

def design_to_json(s: IncidenceStructure) -> str:
    """Serialize; point lists are 1-based in the text format."""
    return json.dumps(
        {"v": s.v, "blocks": [[x + 1 for x in blk] for blk in s.blocks]},
        separators=(",", ":"),
    )


def design_from_json(text: str) -> IncidenceStructure:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "v" not in obj or "blocks" not in obj:
        raise ValueError("design JSON must be an object with 'v' and 'blocks'")
    v = obj["v"]
    blocks = [[x - 1 for x in blk] for blk in obj["blocks"]]
    return IncidenceStructure(v, blocks)
