"""Permutations and permutation groups with deterministic stabilizer chains.

Points are 0-based integers throughout this package; the text formats
(cycle strings, generator files) are 1-based, matching the usual printed
convention, and are converted on parse/render.

Composition acts on the right: ``(p * q)[x] == q[p[x]]``, i.e. ``p`` is
applied first.  Everything here is deterministic — base points are chosen
as the smallest moved point, orbits are grown breadth-first in generator
order — so group data (orders, orbits, block systems) is reproducible
byte-for-byte across runs.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence


class Perm:
    """An immutable permutation of {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ("img",)

    def __init__(self, img: Sequence[int]):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise ValueError("not a permutation of 0..n-1: %r" % (img,))
        self.img = img

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build from disjoint 0-based cycles; points not mentioned are fixed."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValueError("point %d out of range for degree %d" % (x, degree))
                if x in seen:
                    raise ValueError("point %d appears in two cycles" % x)
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __getitem__(self, x: int) -> int:
        return self.img[x]

    def __call__(self, x: int) -> int:
        return self.img[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        oi = other.img
        return Perm(tuple(oi[x] for x in self.img))

    def inv(self) -> "Perm":
        img = self.img
        out = [0] * len(img)
        for x, y in enumerate(img):
            out[y] = x
        return Perm(out)

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inv() ** (-n)
        result = Perm.identity(self.degree)
        p = self
        while n:
            if n & 1:
                result = result * p
            p = p * p
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def moved(self) -> list[int]:
        return [x for x, y in enumerate(self.img) if x != y]

    def min_moved(self) -> int | None:
        for x, y in enumerate(self.img):
            if x != y:
                return x
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by it."""
        img = self.img
        seen = [False] * len(img)
        out: list[tuple[int, ...]] = []
        for start in range(len(img)):
            if seen[start] or img[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = img[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = img[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        cycs = self.cycles()
        return math.lcm(*(len(c) for c in cycs)) if cycs else 1

    def extended(self, degree: int) -> "Perm":
        """Same permutation viewed on a larger domain (new points fixed)."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Perm(self.img + tuple(range(self.degree, degree)))

    def apply_to_set(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self.img[x] for x in points)

    def cycle_string(self, one_based: bool = True) -> str:
        off = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x + off) for x in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self) -> int:
        return hash(self.img)

    def __repr__(self) -> str:
        return "Perm[%s]" % self.cycle_string()


def parse_permutation(text: str, degree: int) -> Perm:
    """Parse a product of 1-based cycles, e.g. ``(1,4)(2,3)``.

    Whitespace is ignored; ``()`` and the empty string denote the identity.
    A trailing ``;`` or ``.`` (as printed in generator listings) is allowed.
    """
    s = "".join(text.split()).rstrip(";.")
    if s in ("", "()"):
        return Perm.identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("cycle string must be wrapped in parentheses: %r" % text)
    cycles: list[list[int]] = []
    for part in s[1:-1].split(")("):
        if not part:
            continue
        cyc = []
        for tok in part.split(","):
            x = int(tok)
            if not 1 <= x <= degree:
                raise ValueError("point %d out of range 1..%d" % (x, degree))
            cyc.append(x - 1)
        cycles.append(cyc)
    return Perm.from_cycles(cycles, degree)


def parse_generator_file(text: str) -> tuple[int, list[Perm]]:
    """Parse the generator file format.

    The first significant line is ``degree n``; every following significant
    line is one permutation as a product of 1-based cycles.  ``#`` starts a
    comment, blank lines are skipped.
    """
    degree: int | None = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ValueError("line %d: expected 'degree n', got %r" % (lineno, raw))
            degree = int(parts[1])
            if degree <= 0:
                raise ValueError("line %d: degree must be positive" % lineno)
            continue
        gens.append(parse_permutation(line, degree))
    if degree is None:
        raise ValueError("no 'degree n' line found")
    return degree, gens


def render_generator_file(degree: int, gens: Sequence[Perm]) -> str:
    lines = ["degree %d" % degree]
    lines.extend(g.cycle_string() for g in gens)
    return "\n".join(lines) + "\n"


class PermGroup:
    """A permutation group with a deterministic Schreier-Sims stabilizer chain.

    The chain is built eagerly at construction.  Base points are the smallest
    point moved by the relevant stabilizer, except that points listed in
    ``base_hint`` are preferred while they are still moved; transversals are
    grown breadth-first in generator order.
    """

    def __init__(
        self,
        generators: Sequence[Perm],
        degree: int | None = None,
        base_hint: Sequence[int] = (),
    ):
        gens = [g for g in generators if not g.is_identity()]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a trivial generator list")
            degree = max(g.degree for g in gens)
        gens = [g.extended(degree) if g.degree < degree else g for g in gens]
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree %d exceeds group degree %d" % (g.degree, degree))
        self.degree = degree
        self.generators = tuple(gens)
        self._base: list[int] = []
        self._lvl_gens: list[list[Perm]] = []  # _lvl_gens[i] generates the stabilizer of _base[:i]
        self._trans: list[dict[int, Perm]] = []
        self._base_hint = tuple(base_hint)
        self._build_chain()

    # -- chain construction ------------------------------------------------

    def _new_base_point(self, g: Perm) -> int:
        """Pick the base point a new strong generator will be anchored at."""
        m = g.min_moved()
        assert m is not None
        return m

    def _append_level(self, point: int) -> None:
        self._base.append(point)
        self._lvl_gens.append([])
        self._trans.append({point: Perm.identity(self.degree)})

    def _recompute_transversal(self, i: int) -> None:
        ident = Perm.identity(self.degree)
        trans = {self._base[i]: ident}
        queue = [self._base[i]]
        gens = self._lvl_gens[i]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            ux = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = ux * g
                    queue.append(y)
        self._trans[i] = trans

    def _strip(self, g: Perm, from_level: int) -> tuple[Perm, int]:
        """Sift g through levels >= from_level; return (residue, level reached)."""
        h = g
        for i in range(from_level, len(self._base)):
            x = h[self._base[i]]
            rep = self._trans[i].get(x)
            if rep is None:
                return h, i
            h = h * rep.inv()
        return h, len(self._base)

    def _syntactic_level(self, g: Perm) -> int:
        """Largest l with g fixing _base[:l], extending the base if g fixes all of it."""
        for i, b in enumerate(self._base):
            if g[b] != b:
                return i
        self._append_level(self._new_base_point(g))
        return len(self._base) - 1

    def _insert_generator(self, g: Perm, level: int, from_level: int) -> None:
        """Record g as a generator for levels from_level..level inclusive."""
        if level == len(self._base):
            self._append_level(self._new_base_point(g))
        for i in range(from_level, level + 1):
            self._lvl_gens[i].append(g)

    def _verify_level(self, i: int) -> None:
        """Schreier-Sims step: complete level i, assuming deeper levels are complete.

        New strong generators found here are anchored strictly below level i,
        so the generator list and transversal of level i stay valid for the
        whole scan.
        """
        self._recompute_transversal(i)
        trans = self._trans[i]
        points = list(trans.keys())
        gens = list(self._lvl_gens[i])
        for x in points:
            ux = trans[x]
            for g in gens:
                y = g[x]
                schreier = ux * g * trans[y].inv()
                if schreier.is_identity():
                    continue
                residue, j = self._strip(schreier, i + 1)
                if residue.is_identity():
                    continue
                self._insert_generator(residue, j, i + 1)
                for l in range(min(j, len(self._base) - 1), i, -1):
                    self._verify_level(l)

    def _build_chain(self) -> None:
        # hint points become the leading base points unconditionally; a point
        # the group barely moves just yields a singleton transversal
        for p in self._base_hint:
            if not 0 <= p < self.degree:
                raise ValueError("base hint point %d out of range" % p)
            if p not in self._base:
                self._append_level(p)
        for g in self.generators:
            level = self._syntactic_level(g)
            for i in range(level + 1):
                self._lvl_gens[i].append(g)
        for i in range(len(self._base) - 1, -1, -1):
            self._verify_level(i)

    # -- queries -----------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(self._base)

    def strong_generators(self) -> tuple[Perm, ...]:
        seen: dict[Perm, None] = {}
        for gens in self._lvl_gens:
            for g in gens:
                seen[g] = None
        return tuple(seen)

    def order(self) -> int:
        n = 1
        for t in self._trans:
            n *= len(t)
        return n

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            if g.degree < self.degree:
                g = g.extended(self.degree)
            elif any(g[x] != x for x in range(self.degree, g.degree)):
                return False
            else:
                g = Perm(g.img[: self.degree])
        residue, _ = self._strip(g, 0)
        return residue.is_identity()

    def __contains__(self, g: Perm) -> bool:
        return self.contains(g)

    def orbit(self, point: int) -> list[int]:
        return orbit(self.generators, point, self.degree)

    def orbits(self) -> list[list[int]]:
        """All orbits on {0..degree-1}, including fixed points, each sorted."""
        seen = [False] * self.degree
        out = []
        for p in range(self.degree):
            if seen[p]:
                continue
            orb = self.orbit(p)
            for x in orb:
                seen[x] = True
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def point_stabilizer(self, point: int) -> "PermGroup":
        """The stabilizer of one point, as a group with its own chain."""
        if not 0 <= point < self.degree:
            raise ValueError("point %d out of range" % point)
        rebased = self if (self._base and self._base[0] == point) else PermGroup(
            self.generators, self.degree, base_hint=[point]
        )
        gens = rebased._lvl_gens[1] if len(rebased._base) > 1 else []
        return PermGroup([g for g in gens if g[point] == point], self.degree)

    def coset_representative(self, level: int, point: int) -> Perm:
        return self._trans[level][point]

    def iter_elements(self) -> Iterator[Perm]:
        """All elements, via the transversal product; only sane for small orders."""

        def rec(i: int, prefix: Perm) -> Iterator[Perm]:
            if i == len(self._trans):
                yield prefix
                return
            for x in sorted(self._trans[i]):
                yield from rec(i + 1, self._trans[i][x] * prefix)

        if not self._trans:
            yield Perm.identity(self.degree)
            return
        yield from rec(0, Perm.identity(self.degree))

    def __repr__(self) -> str:
        return "PermGroup(degree=%d, order=%d, ngens=%d)" % (
            self.degree,
            self.order(),
            len(self.generators),
        )


def group_from_generators(generators: Sequence[Perm], degree: int | None = None) -> PermGroup:
    return PermGroup(generators, degree)


def orbit(gens: Sequence[Perm], point: int, degree: int | None = None) -> list[int]:
    """The orbit of a point under a generator list, sorted ascending."""
    if degree is None:
        degree = max((g.degree for g in gens), default=point + 1)
    if not 0 <= point < degree:
        raise ValueError("point %d out of range 0..%d" % (point, degree - 1))
    seen = {point}
    queue = [point]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g in gens:
            y = g[x] if x < g.degree else x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    return group.point_stabilizer(point)


def is_regular(group: PermGroup) -> bool:
    return group.is_regular()


def rank_and_subdegrees(group: PermGroup) -> tuple[int, tuple[int, ...]]:
    """Rank and sorted subdegrees of a transitive group (stabilizer of point 0)."""
    if not group.is_transitive():
        raise ValueError("rank/subdegrees require a transitive group")
    stab = group.point_stabilizer(0)
    sizes = tuple(sorted(len(o) for o in stab.orbits()))
    return len(sizes), sizes


def _finest_system_joining(gens: Sequence[Perm], degree: int, p: int, q: int) -> tuple[int, ...]:
    """Union-find closure: the finest G-congruence with p and q in one class.

    Returns the class-label vector (each class labelled by its smallest member).
    """
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> tuple[int, int] | None:
        ra, rb = find(a), find(b)
        if ra == rb:
            return None
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        return ra, rb

    stack = [(p, q)]
    union(p, q)
    while stack:
        a, b = stack.pop()
        for g in gens:
            merged = union(g[a], g[b])
            if merged is not None:
                stack.append(merged)
    return tuple(find(x) for x in range(degree))


def minimal_block_systems(group: PermGroup) -> list[tuple[tuple[int, ...], ...]]:
    """All minimal nontrivial block systems of a transitive group.

    Each system is a tuple of classes (sorted tuples), ordered by smallest
    member; systems are ordered by class size then lexicographically.  An
    empty result means the group is primitive.
    """
    if not group.is_transitive():
        raise ValueError("block systems require a transitive group")
    n = group.degree
    gens = group.generators
    labelings: set[tuple[int, ...]] = set()
    for q in range(1, n):
        lab = _finest_system_joining(gens, n, 0, q)
        nclasses = len(set(lab))
        if 1 < nclasses < n:
            labelings.add(lab)

    def to_partition(lab: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        classes: dict[int, list[int]] = {}
        for x, l in enumerate(lab):
            classes.setdefault(l, []).append(x)
        return tuple(tuple(c) for _, c in sorted(classes.items()))

    def refines(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        # a refines b: each a-class sits inside one b-class
        rep: dict[int, int] = {}
        for x in range(n):
            la, lb = a[x], b[x]
            if la in rep:
                if rep[la] != lb:
                    return False
            else:
                rep[la] = lb
        return True

    systems = []
    for lab in labelings:
        if any(other != lab and refines(other, lab) for other in labelings):
            continue
        systems.append(to_partition(lab))
    systems.sort(key=lambda s: (len(s[0]), s))
    return systems


def block_system_action(group_gens: Sequence[Perm], system: Sequence[Sequence[int]]) -> list[Perm]:
    """Induced permutations on the classes of an invariant partition."""
    index_of: dict[int, int] = {}
    for i, cls in enumerate(system):
        for x in cls:
            index_of[x] = i
    out = []
    for g in group_gens:
        img = [0] * len(system)
        for i, cls in enumerate(system):
            img[i] = index_of[g[cls[0]]]
        out.append(Perm(img))
    return out


def set_stabilizer(group: PermGroup, points: Iterable[int]) -> PermGroup:
    """The subgroup preserving a point set, by backtracking over base images.

    The chain is rebased so points of the set come first; partial images are
    pruned by set membership (base points inside the set must land inside it,
    points outside must land outside) and by minimality in the orbits of the
    already-found stabilizer elements.  Each search pass either produces one
    new stabilizer element or proves the found subgroup complete.
    """
    s = frozenset(points)
    degree = group.degree
    if any(not 0 <= x < degree for x in s):
        raise ValueError("set contains points outside the domain")
    if not group.generators:
        return PermGroup((), degree)
    chain = PermGroup(group.generators, degree, base_hint=sorted(s))
    base = chain._base
    in_set = [b in s for b in base]
    found: list[Perm] = []

    def dfs(level: int, partial: Perm, known: PermGroup, kgroup: PermGroup) -> Perm | None:
        if level == len(base):
            if partial.apply_to_set(s) == s and not known.contains(partial):
                return partial
            return None
        trans = chain._trans[level]
        pimg = partial.img
        for x in sorted(trans, key=lambda t: pimg[t]):
            image = pimg[x]
            if (image in s) != in_set[level]:
                continue
            orb = kgroup.orbit(image)
            if orb[0] < image:
                continue  # a smaller image in the same coset was explored first
            result = dfs(level + 1, trans[x] * partial, known, kgroup.point_stabilizer(image))
            if result is not None:
                return result
        return None

    while True:
        known = PermGroup(found, degree) if found else PermGroup((), degree)
        new = dfs(0, Perm.identity(degree), known, known)
        if new is None:
            return known
        found.append(new)
