"""Design isomorphism and automorphism groups by partition refinement.

A structure is viewed as a bipartite graph on point-vertices and
block-vertices.  Colorings (ordered partitions) are refined to equitability
by neighbor counts, using Python integers as vertex bitsets.  Branching
individualizes one point at a time: the reference path always takes the
smallest vertex of the first smallest non-singleton point cell, and
candidate paths must reproduce the reference refinement trace exactly.

The automorphism search prunes candidate images by orbit-minimality under
the group found so far, restarting after each new generator; the same
pruning drives the isomorphism search, using the target's automorphism
group.  Exhausted search is the non-isomorphism certificate; no canonical
certificates are produced.
"""

from __future__ import annotations

from collections import Counter, deque

from .design import IncidenceStructure
from .perm import Perm, PermGroup


class _Graph:
    """Bipartite incidence graph with bitset adjacency."""

    __slots__ = ("v", "b", "n", "adj", "block_counter")

    def __init__(self, s: IncidenceStructure):
        v, b = s.v, s.b
        self.v = v
        self.b = b
        self.n = v + b
        adj = [0] * (v + b)
        for j, blk in enumerate(s.blocks):
            mask = 0
            for x in blk:
                mask |= 1 << x
                adj[x] |= 1 << (v + j)
            adj[v + j] = mask
        self.adj = adj
        self.block_counter = Counter(s.blocks)


def _mask(cell: tuple[int, ...]) -> int:
    m = 0
    for u in cell:
        m |= 1 << u
    return m


def _refine(adj: list[int], cells: list[tuple[int, ...]],
            splitters: deque[int]) -> tuple:
    """Refine to equitability; returns the trace of splits performed.

    Cells are replaced in place by their fragments, ordered by ascending
    neighbor count into the splitter, so the procedure is deterministic
    and two isomorphic colorings produce identical traces.
    """
    trace = []
    while splitters:
        s_mask = splitters.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                groups: dict[int, list[int]] = {}
                for u in cell:
                    groups.setdefault((adj[u] & s_mask).bit_count(), []).append(u)
                if len(groups) > 1:
                    counts = sorted(groups)
                    parts = [tuple(groups[c]) for c in counts]
                    cells[i:i + 1] = parts
                    trace.append((i, tuple(counts), tuple(len(p) for p in parts)))
                    for p in parts:
                        splitters.append(_mask(p))
                    i += len(parts)
                    continue
            i += 1
    return tuple(trace)


def _individualize(cells: list[tuple[int, ...]], idx: int,
                   u: int) -> list[tuple[int, ...]]:
    """A copy of the coloring with u split off at the front of cell idx."""
    cell = cells[idx]
    rest = tuple(x for x in cell if x != u)
    return cells[:idx] + [(u,), rest] + cells[idx + 1:]


def _target_cell(cells: list[tuple[int, ...]], v: int) -> int | None:
    """Index of the first smallest non-singleton point cell, if any."""
    best = None
    best_size = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and cell[0] < v:
            if best_size is None or len(cell) < best_size:
                best, best_size = i, len(cell)
    return best


class _ReferencePath:
    """The leftmost individualization path of a graph, computed once."""

    def __init__(self, g: _Graph):
        self.graph = g
        cells = [tuple(range(g.v)), tuple(range(g.v, g.n))]
        splitters = deque([_mask(c) for c in cells])
        self.root_trace = _refine(g.adj, cells, splitters)
        self.targets: list[int] = []
        self.traces: list[tuple] = []
        while True:
            idx = _target_cell(cells, g.v)
            if idx is None:
                break
            u = min(cells[idx])
            cells = _individualize(cells, idx, u)
            trace = _refine(g.adj, cells, deque([1 << u, _mask(cells[idx + 1])]))
            self.targets.append(idx)
            self.traces.append(trace)
        self.depth = len(self.targets)
        self.leaf_points = [c[0] for c in cells if c[0] < g.v]


def _map_blocks_ok(src: _Graph, dst: _Graph, img: list[int]) -> bool:
    """Does the point map img carry src's block multiset onto dst's?"""
    remaining = dict(dst.block_counter)
    for j in range(src.b):
        blk = src.adj[src.v + j]
        mapped = []
        x = blk
        while x:
            low = x & -x
            mapped.append(img[low.bit_length() - 1])
            x ^= low
        key = tuple(sorted(mapped))
        left = remaining.get(key, 0)
        if not left:
            return False
        remaining[key] = left - 1
    return True


def _leaf_permutation(ref: _ReferencePath, cells: list[tuple[int, ...]],
                      dst: _Graph) -> list[int]:
    leaf_points = [c[0] for c in cells if c[0] < dst.v]
    img = [0] * len(leaf_points)
    for a, b in zip(ref.leaf_points, leaf_points):
        img[a] = b
    return img


def _search(ref: _ReferencePath, dst: _Graph, known: PermGroup,
            accept) -> Perm | None:
    """DFS over candidate images of the reference path, one result per call.

    known prunes sibling candidates lying in one orbit of the stabilizer of
    the images chosen so far; accept(img) decides whether a discrete leaf is
    a result.  Returns the first accepted leaf permutation, else None.
    """
    g = dst

    def walk(level: int, cells: list[tuple[int, ...]], kgroup: PermGroup):
        if level == ref.depth:
            img = _leaf_permutation(ref, cells, g)
            return accept(img)
        idx = ref.targets[level]
        cell = cells[idx]
        for u in sorted(cell):
            orb = kgroup.orbit(u)
            if orb[0] < u:
                continue
            branched = _individualize(cells, idx, u)
            trace = _refine(g.adj, branched,
                            deque([1 << u, _mask(branched[idx + 1])]))
            if trace != ref.traces[level]:
                continue
            result = walk(level + 1, branched, kgroup.point_stabilizer(u))
            if result is not None:
                return result
        return None

    cells = [tuple(range(g.v)), tuple(range(g.v, g.n))]
    if _refine(g.adj, cells, deque([_mask(c) for c in cells])) != ref.root_trace:
        return None
    return walk(0, cells, known)


def automorphism_group(s: IncidenceStructure,
                       known: PermGroup | None = None) -> PermGroup:
    """The full automorphism group of a structure, as a permutation group.

    A known subgroup may be passed as a starting point; it only speeds up
    the search.  The result is deterministic either way.
    """
    if s.v > 100:
        raise ValueError("supported up to 100 points, got v=%d" % s.v)
    g = _Graph(s)
    ref = _ReferencePath(g)
    gens: list[Perm] = []
    if known is not None:
        if known.degree != s.v:
            raise ValueError("known subgroup degree mismatch")
        gens.extend(known.generators)
    while True:
        kgroup = PermGroup(gens, s.v)

        def accept(img: list[int]) -> Perm | None:
            p = Perm(img)
            if kgroup.contains(p):
                return None
            if _map_blocks_ok(g, g, img):
                return p
            return None

        new = _search(ref, g, kgroup, accept)
        if new is None:
            return kgroup
        gens.append(new)


def are_isomorphic(s1: IncidenceStructure,
                   s2: IncidenceStructure) -> Perm | None:
    """A point bijection carrying s1's blocks onto s2's, or None.

    Exhaustive over the pruned refinement tree, so None is a proof.  The
    target's automorphism group is computed first and used to skip
    equivalent branches.
    """
    if s1.v != s2.v or s1.b != s2.b:
        return None
    if sorted(len(b) for b in s1.blocks) != sorted(len(b) for b in s2.blocks):
        return None
    g1, g2 = _Graph(s1), _Graph(s2)
    ref = _ReferencePath(g1)
    cells2 = [tuple(range(g2.v)), tuple(range(g2.v, g2.n))]
    if _refine(g2.adj, cells2, deque([_mask(c) for c in cells2])) != ref.root_trace:
        return None
    aut2 = automorphism_group(s2)

    def accept(img: list[int]) -> Perm | None:
        if _map_blocks_ok(g1, g2, img):
            return Perm(img)
        return None

    return _search(ref, g2, aut2, accept)
