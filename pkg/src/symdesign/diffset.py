"""Difference sets in regularly acting groups and their developments.

A group acting regularly on the point set identifies points with group
elements; a k-subset is a (n, k, lambda) difference set when every
non-identity element has exactly lambda representations as a quotient of
two of its elements.  Developing the subset under the action yields a
symmetric design with the group as a point-regular automorphism group.

find_regular_subgroups recovers such actions inside a given automorphism
group by depth-first search over the elements mapping the base point to
each successive uncovered point.  In a regular group every non-identity
element is fixed-point-free with all cycles of equal length, so candidates
are filtered to that shape before any closure is computed.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .design import IncidenceStructure
from .perm import Perm, PermGroup


class BudgetExhausted(RuntimeError):
    """The subgroup search hit its node bound before finding anything."""


class RegularAction:
    """A group acting regularly, with the point-to-element bijection."""

    def __init__(self, group: PermGroup, base: int, element_of: dict[int, Perm]):
        if not group.is_regular():
            raise ValueError("group of order %d is not regular on %d points"
                             % (group.order(), group.degree))
        if len(element_of) != group.degree:
            raise ValueError("element_of must cover all %d points" % group.degree)
        for point, g in element_of.items():
            if g[base] != point:
                raise ValueError("element for point %d moves base to %d"
                                 % (point, g[base]))
        self.group = group
        self.base = base
        self.element_of = dict(element_of)

    @classmethod
    def from_group(cls, group: PermGroup, base: int = 0) -> "RegularAction":
        if group.order() != group.degree:
            raise ValueError("group of order %d cannot act regularly on %d points"
                             % (group.order(), group.degree))
        element_of = {g[base]: g for g in group.iter_elements()}
        return cls(group, base, element_of)

    @property
    def degree(self) -> int:
        return self.group.degree

    def __repr__(self) -> str:
        return "RegularAction(order %d, base %d)" % (self.group.order(), self.base)


def is_difference_set(action: RegularAction, d: Iterable[int],
                      lam: int) -> tuple[bool, list[tuple[Perm, int]]]:
    """Count quotients d_i * d_j^{-1}; report elements missing lambda.

    The report pairs each deviant non-identity group element with its
    actual representation count (empty exactly when d is a difference set).
    """
    points = sorted(set(d))
    if any(p not in action.element_of for p in points):
        raise ValueError("subset contains points outside the action")
    els = [action.element_of[p] for p in points]
    inverses = [g.inv() for g in els]
    counts: Counter[Perm] = Counter()
    for i, gi in enumerate(els):
        for j, gj_inv in enumerate(inverses):
            if i != j:
                counts[gi * gj_inv] += 1
    report = []
    for h in action.element_of.values():
        if h.is_identity():
            continue
        c = counts.get(h, 0)
        if c != lam:
            report.append((h, c))
    report.sort(key=lambda pair: pair[0][action.base])
    return (not report, report)


def develop_difference_set(action: RegularAction, d: Iterable[int]) -> IncidenceStructure:
    """One block per group element: the images of d under the action."""
    points = sorted(set(d))
    if not points:
        raise ValueError("cannot develop an empty subset")
    n = action.degree
    blocks = [tuple(sorted(action.element_of[x].apply_to_set(points)))
              for x in range(n)]
    return IncidenceStructure(n, blocks)


def _uniform_cycle_length(p: Perm) -> int | None:
    """Common cycle length of a fixed-point-free permutation, else None."""
    cycles = p.cycles()
    if not cycles:
        return 1
    length = len(cycles[0])
    if any(len(c) != length for c in cycles) or length * len(cycles) != p.degree:
        return None
    return length


def find_regular_subgroups(group: PermGroup, limit: int = 1,
                           budget: int = 100_000) -> list[RegularAction]:
    """Up to `limit` regular subgroups of a transitive group, depth-first.

    Each regular subgroup contains exactly one element sending the base
    point 0 to any given point, so extending by the least uncovered point
    visits every regular subgroup along a unique path; the enumeration
    order is therefore deterministic.  `budget` bounds the number of
    subgroup closures computed.  An empty result means none exist; running
    out of budget before anything is found raises BudgetExhausted.
    """
    n = group.degree
    if not group.is_transitive():
        raise ValueError("regular subgroups require a transitive overgroup")
    ident = Perm.identity(n)

    # one witness mapping 0 to each point
    reps: dict[int, Perm] = {0: ident}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in group.generators:
            y = g[x]
            if y not in reps:
                reps[y] = reps[x] * g
                frontier.append(y)

    stab = sorted(group.point_stabilizer(0).iter_elements(),
                  key=lambda p: tuple(p[i] for i in range(n)))

    def shaped(p: Perm) -> bool:
        length = _uniform_cycle_length(p)
        return length is not None and n % length == 0

    def closure(gens: Sequence[Perm]) -> set[Perm] | None:
        # abandon as soon as the subgroup exceeds n elements or an element
        # acquires a fixed point; survivors are semiregular of order <= n
        elems = {ident}
        queue = [ident]
        while queue:
            x = queue.pop()
            for g in gens:
                y = x * g
                if y not in elems:
                    if len(elems) >= n:
                        return None
                    if any(y[i] == i for i in range(n)):
                        return None
                    elems.add(y)
                    queue.append(y)
        return elems

    found: list[RegularAction] = []
    nodes = 0

    class _Budget(Exception):
        pass

    def action_from(elems: set[Perm], gens: list[Perm]) -> RegularAction:
        sub = PermGroup(gens, n)
        assert sub.order() == n
        return RegularAction(sub, 0, {h[0]: h for h in elems})

    def dfs(gens: list[Perm], elems: set[Perm]) -> None:
        nonlocal nodes
        if len(elems) == n:
            found.append(action_from(elems, gens))
            return
        covered = {h[0] for h in elems}
        target = min(x for x in range(n) if x not in covered)
        base_rep = reps[target]
        for s in stab:
            cand = s * base_rep
            if not shaped(cand):
                continue
            # products with current generators also lie in the subgroup
            if any(not shaped(g * cand) or not shaped(cand * g) for g in gens):
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            new = closure(gens + [cand])
            if new is None or n % len(new):
                continue
            dfs(gens + [cand], new)
            if len(found) >= limit:
                return

    try:
        dfs([], {ident})
    except _Budget:
        if not found:
            raise BudgetExhausted(
                "no regular subgroup found within %d closure nodes" % budget)
    return found
