"""Named designs with embedded construction data and verified claims.

Each entry carries the design, the group it was built with, and a claims
record (parameters, automorphism group order, transitivity properties)
that run_claims re-checks from scratch.  The two 64-point developments
are read from the generator strings shipped in data/, the third 64-point
design comes from an elliptic quadratic form, and the 16-point biplanes
fall out of an exhaustive difference-set search over the regular
representations of all fourteen groups of order 16: three designs arise,
and the two whose full automorphism groups are flag-transitive are the
ones carried here.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from pathlib import Path

from .design import (
    DesignError,
    IncidenceStructure,
    complement,
    design_from_json,
    develop,
    induced_block_action,
    is_flag_transitive,
    is_point_primitive,
    verify_design,
)
from .diffset import RegularAction, develop_difference_set, is_difference_set
from .geometry import (
    affine_group_order,
    build_affine_design,
    build_projective_design,
    projective_group_order,
)
from .iso import are_isomorphic, automorphism_group
from .perm import Perm, PermGroup, minimal_block_systems, parse_generator_file, \
    rank_and_subdegrees

DATA_DIR = Path(__file__).parent / "data"

# base blocks of the two developments, 1-based as printed
B1 = (9, 11, 13, 15, 17, 20, 22, 23, 25, 26, 31, 32, 33, 35, 38, 40,
      41, 42, 43, 44, 49, 50, 53, 54, 57, 58, 61, 62)
B2 = (10, 12, 14, 16, 18, 19, 21, 24, 27, 28, 29, 30, 34, 36, 37, 39,
      45, 46, 47, 48, 51, 52, 55, 56, 59, 60, 63, 64)

AUT_ORDER_LIMIT = 10 ** 11


@dataclass
class CatalogEntry:
    name: str
    design: IncidenceStructure
    group: PermGroup
    claims: dict = field(default_factory=dict)
    note: str = ""


@lru_cache(maxsize=None)
def _embedded_group() -> tuple[int, tuple[Perm, ...]]:
    degree, gens = parse_generator_file(
        (DATA_DIR / "d64_generators.txt").read_text())
    return degree, tuple(gens)


def build_d64(h: int) -> CatalogEntry:
    """Development of base block B1 or B2 under the order-43008 group."""
    if h not in (1, 2):
        raise ValueError("h must be 1 or 2")
    degree, gens = _embedded_group()
    base = B1 if h == 1 else B2
    group = PermGroup(list(gens), degree)
    design = develop(list(gens), [p - 1 for p in base])
    return CatalogEntry(
        name="d64-%d" % h,
        design=design,
        group=group,
        claims={
            "params": (64, 28, 12),
            "aut_order": 43008,
            "flag_transitive": True,
            "primitive": False,
            "class_shape": (8, 8),
            "subdegrees": (1, 7, 56),
        },
        note="base block development over an invariant 8x8 partition",
    )


def _quadric_zero_set() -> list[int]:
    # x1*x2 + x3*x4 + x5^2 + x5*x6 + x6^2 over F_2, minus type: 28 zeros
    pts = []
    for x in range(64):
        b = [(x >> i) & 1 for i in range(6)]
        if ((b[0] & b[1]) ^ (b[2] & b[3]) ^ b[4] ^ (b[4] & b[5]) ^ b[5]) == 0:
            pts.append(x)
    return pts


def _boolean_translations(dim: int) -> PermGroup:
    n = 1 << dim
    gens = [Perm(tuple(x ^ (1 << i) for x in range(n))) for i in range(dim)]
    return PermGroup(gens, n)


def build_s_minus_3() -> CatalogEntry:
    """Development of an elliptic quadric's zero set under translations."""
    action = RegularAction.from_group(_boolean_translations(6))
    zeros = _quadric_zero_set()
    ok, report = is_difference_set(action, zeros, 12)
    assert ok, report
    design = develop_difference_set(action, zeros)
    return CatalogEntry(
        name="s-minus-3",
        design=design,
        group=action.group,
        claims={
            "params": (64, 28, 12),
            "aut_order": 92897280,
            "flag_transitive": False,
            "primitive": False,
        },
        note="the carried group is the point-regular translation group, "
             "not a flag-transitive subgroup",
    )


def _regular_rep(elements: list, mul, gens: list) -> PermGroup:
    """Right-multiplication action of a 16-element group on itself."""
    idx = {e: i for i, e in enumerate(elements)}
    perms = [Perm(tuple(idx[mul(x, g)] for x in elements)) for g in gens]
    group = PermGroup(perms, len(elements))
    assert group.order() == len(elements) and group.is_regular()
    return group


def order16_specs() -> list[tuple]:
    """(label, elements, product, generators) for every group of order 16.

    Elements are exponent tuples over each group's generating letters; the
    product rules push the right factor's letters past the left factor's
    using the defining relations.
    """
    def direct(moduli):
        return lambda x, y: tuple((a + b) % n for a, b, n in zip(x, y, moduli))

    def dihedral16(x, y):
        # r^8 = s^2 = 1, s r s = r^-1
        return ((x[0] + (y[0] if x[1] == 0 else -y[0])) % 8, (x[1] + y[1]) % 2)

    def semidihedral16(x, y):
        # r^8 = s^2 = 1, s r s = r^3
        return ((x[0] + y[0] * 3 ** x[1]) % 8, (x[1] + y[1]) % 2)

    def quaternion16(x, y):
        # r^8 = 1, s^2 = r^4, s^-1 r s = r^-1
        return ((x[0] + (y[0] if x[1] == 0 else -y[0]) + 4 * (x[1] * y[1])) % 8,
                (x[1] + y[1]) % 2)

    def modular16(x, y):
        # r^8 = s^2 = 1, s r s = r^5
        return ((x[0] + y[0] * 5 ** x[1]) % 8, (x[1] + y[1]) % 2)

    def dihedral8_c2(x, y):
        return ((x[0] + (y[0] if x[1] == 0 else -y[0])) % 4, (x[1] + y[1]) % 2,
                (x[2] + y[2]) % 2)

    def quaternion8_c2(x, y):
        return ((x[0] + (y[0] if x[1] == 0 else -y[0]) + 2 * (x[1] * y[1])) % 4,
                (x[1] + y[1]) % 2, (x[2] + y[2]) % 2)

    def c4_by_c4(x, y):
        # a^4 = b^4 = 1, b a b^-1 = a^-1
        return ((x[0] + (y[0] if x[1] % 2 == 0 else -y[0])) % 4,
                (x[1] + y[1]) % 4)

    def c4xc2_by_c2(x, y):
        # a^4 = b^2 = c^2 = 1, ab = ba, cb = bc, c a c = a b
        return ((x[0] + y[0]) % 4, (x[1] + y[1] + x[2] * y[0]) % 2,
                (x[2] + y[2]) % 2)

    def c4_circ_d8(x, y):
        # z^4 = a^2 = b^2 = 1, z central, b a = z^2 a b
        return ((x[0] + y[0] + 2 * (x[2] * y[1])) % 4, (x[1] + y[1]) % 2,
                (x[2] + y[2]) % 2)

    pairs8 = [(i, j) for i in range(8) for j in range(2)]
    pairs44 = [(i, j) for i in range(4) for j in range(4)]
    triples = [(i, j, k) for i in range(4) for j in range(2) for k in range(2)]
    return [
        ("C16", [(i,) for i in range(16)], direct((16,)), [(1,)]),
        ("C8xC2", pairs8, direct((8, 2)), [(1, 0), (0, 1)]),
        ("C4xC4", pairs44, direct((4, 4)), [(1, 0), (0, 1)]),
        ("C4xC2xC2", triples, direct((4, 2, 2)),
         [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        ("C2^4", list(itertools.product(range(2), repeat=4)),
         direct((2, 2, 2, 2)),
         [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
        ("D16", pairs8, dihedral16, [(1, 0), (0, 1)]),
        ("SD16", pairs8, semidihedral16, [(1, 0), (0, 1)]),
        ("Q16", pairs8, quaternion16, [(1, 0), (0, 1)]),
        ("M16", pairs8, modular16, [(1, 0), (0, 1)]),
        ("D8xC2", triples, dihedral8_c2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        ("Q8xC2", triples, quaternion8_c2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        ("C4:C4", pairs44, c4_by_c4, [(1, 0), (0, 1)]),
        ("(C4xC2):C2", triples, c4xc2_by_c2,
         [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        ("C4oD8", triples, c4_circ_d8, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ]


@lru_cache(maxsize=None)
def order16_groups() -> tuple[tuple[str, PermGroup], ...]:
    return tuple((label, _regular_rep(elements, mul, gens))
                 for label, elements, mul, gens in order16_specs())


def _division_table(action: RegularAction) -> list[list[int]]:
    n = action.degree
    inverses = {x: action.element_of[x].inv() for x in range(n)}
    return [[(action.element_of[p] * inverses[q])[action.base] for q in range(n)]
            for p in range(n)]


def _difference_sets_16_6_2(action: RegularAction) -> list[tuple[int, ...]]:
    """All 6-subsets whose nonzero difference counts are uniformly 2."""
    table = _division_table(action)
    out = []
    for d in itertools.combinations(range(16), 6):
        counts = [0] * 16
        good = True
        for p in d:
            row = table[p]
            for q in d:
                if p != q:
                    c = row[q]
                    counts[c] += 1
                    if counts[c] > 2:
                        good = False
                        break
            if not good:
                break
        if good and all(counts[c] == 2 for c in range(1, 16)):
            out.append(d)
    return out


@lru_cache(maxsize=None)
def biplane_classes() -> tuple[tuple[IncidenceStructure, PermGroup], ...]:
    """Isomorphism classes of difference-set developable 2-(16,6,2) designs.

    Searches every group of order 16; each class is returned with its full
    automorphism group, largest group first.
    """
    reps: list[IncidenceStructure] = []
    for label, group in order16_groups():
        action = RegularAction.from_group(group)
        seen_blocks = set()
        for d in _difference_sets_16_6_2(action):
            ok, report = is_difference_set(action, d, 2)
            assert ok, (label, d, report)
            dev = develop_difference_set(action, d)
            key = frozenset(dev.blocks)
            if key in seen_blocks:
                continue
            seen_blocks.add(key)
            if all(are_isomorphic(dev, r) is None for r in reps):
                reps.append(dev)
    classes = [(dev, automorphism_group(dev)) for dev in reps]
    classes.sort(key=lambda pair: -pair[1].order())
    return tuple(classes)


_BIPLANE_CLAIMS = {
    1: {"params": (16, 6, 2), "aut_order": 11520,
        "flag_transitive": True, "primitive": True},
    2: {"params": (16, 6, 2), "aut_order": 768,
        "flag_transitive": True, "primitive": False},
}


def build_biplane(h: int) -> CatalogEntry:
    """One of the two flag-transitive 2-(16,6,2) designs, largest group first."""
    if h not in (1, 2):
        raise ValueError("h must be 1 or 2")
    flagged = [(dev, aut) for dev, aut in biplane_classes()
               if is_flag_transitive(dev, aut)]
    assert len(flagged) == 2, "expected exactly two flag-transitive biplanes"
    dev, aut = flagged[h - 1]
    return CatalogEntry(
        name="biplane-%d" % h,
        design=dev,
        group=aut,
        claims=dict(_BIPLANE_CLAIMS[h]),
        note="difference-set development in a group of order 16; the carried "
             "group is the full automorphism group",
    )


def _symmetric_group(v: int) -> PermGroup:
    gens = [Perm.from_cycles([(0, 1)], v), Perm(tuple((x + 1) % v for x in range(v)))]
    return PermGroup(gens, v)


def build_complete(v: int, k: int) -> CatalogEntry:
    if not 2 <= k <= v - 1 or v > 100:
        raise ValueError("complete design needs 2 <= k <= v-1 and v <= 100")
    design = IncidenceStructure(v, itertools.combinations(range(v), k))
    lam = 1
    for i in range(k - 2):
        lam = lam * (v - 2 - i) // (i + 1)
    return CatalogEntry(
        name="complete(%d,%d)" % (v, k),
        design=design,
        group=_symmetric_group(v),
        claims={
            "params": (v, k, lam),
            "aut_order": factorial(v),
            "flag_transitive": True,
            "primitive": True,
        },
        note="all k-subsets",
    )


def _geometry_entry(name: str, gd, params: tuple[int, int, int],
                    aut: int, use_complement: bool = False) -> CatalogEntry:
    design = complement(gd.structure) if use_complement else gd.structure
    return CatalogEntry(
        name=name,
        design=design,
        group=gd.group,
        claims={
            "params": params,
            "aut_order": aut,
            "flag_transitive": True,
            "primitive": True,
        },
        note=gd.kind,
    )


_CLASSICAL = {
    "fano": lambda: _geometry_entry(
        "fano", build_projective_design(2, 2), (7, 3, 1),
        projective_group_order(2, 2)),
    "fano_complement": lambda: _geometry_entry(
        "fano_complement", build_projective_design(2, 2), (7, 4, 2),
        projective_group_order(2, 2), use_complement=True),
    "ag2_3": lambda: _geometry_entry(
        "ag2_3", build_affine_design(2, 3, 1), (9, 3, 1),
        affine_group_order(2, 3)),
    "ag2_3_complement": lambda: _geometry_entry(
        "ag2_3_complement", build_affine_design(2, 3, 1), (9, 6, 5),
        affine_group_order(2, 3), use_complement=True),
    "ag3_2_planes": lambda: _geometry_entry(
        "ag3_2_planes", build_affine_design(3, 2, 2), (8, 4, 3),
        affine_group_order(3, 2)),
    "ag2_4_lines": lambda: _geometry_entry(
        "ag2_4_lines", build_affine_design(2, 4, 1), (16, 4, 1),
        affine_group_order(2, 4)),
    "pg2_3": lambda: _geometry_entry(
        "pg2_3", build_projective_design(2, 3), (13, 4, 1),
        projective_group_order(2, 3)),
    "pg2_3_complement": lambda: _geometry_entry(
        "pg2_3_complement", build_projective_design(2, 3), (13, 9, 6),
        projective_group_order(2, 3), use_complement=True),
    "pg2_4": lambda: _geometry_entry(
        "pg2_4", build_projective_design(2, 4), (21, 5, 1),
        projective_group_order(2, 4)),
    "pg2_4_complement": lambda: _geometry_entry(
        "pg2_4_complement", build_projective_design(2, 4), (21, 16, 12),
        projective_group_order(2, 4), use_complement=True),
    "pg5_2_hyperplanes": lambda: _geometry_entry(
        "pg5_2_hyperplanes", build_projective_design(5, 2, hyperplanes=True),
        (63, 31, 15), projective_group_order(5, 2)),
    "pg5_2_complement": lambda: _geometry_entry(
        "pg5_2_complement", build_projective_design(5, 2, hyperplanes=True),
        (63, 32, 16), projective_group_order(5, 2), use_complement=True),
}

_COMPLETE_RE = re.compile(r"^complete\((\d+),(\d+)\)$")


def build_classical(name: str) -> CatalogEntry:
    if name in _CLASSICAL:
        return _CLASSICAL[name]()
    m = _COMPLETE_RE.match(name.replace(" ", ""))
    if m:
        return build_complete(int(m.group(1)), int(m.group(2)))
    raise ValueError("unknown classical design %r" % name)


def load_design(text: str, expected: tuple[int, int, int],
                name: str = "external") -> CatalogEntry:
    """Verify a serialized design against claimed parameters.

    For parameter sets whose constructions are not carried here, the entry
    holds only the checked design; the trivial group is attached and no
    transitivity claims are made.
    """
    design = design_from_json(text)
    params = verify_design(design)
    if (params.v, params.k, params.lam) != tuple(expected):
        raise DesignError("file holds a 2-(%d,%d,%d) design, expected 2-(%d,%d,%d)"
                          % ((params.v, params.k, params.lam) + tuple(expected)))
    return CatalogEntry(
        name=name,
        design=design,
        group=PermGroup([], design.v),
        claims={"params": tuple(expected)},
        note="loaded from a design file and checked, not constructed",
    )


def names() -> list[str]:
    return (["d64-1", "d64-2", "s-minus-3", "biplane-1", "biplane-2"]
            + sorted(_CLASSICAL) + ["complete(v,k)"])


def entry(name: str) -> CatalogEntry:
    if name == "d64-1":
        return build_d64(1)
    if name == "d64-2":
        return build_d64(2)
    if name == "s-minus-3":
        return build_s_minus_3()
    if name == "biplane-1":
        return build_biplane(1)
    if name == "biplane-2":
        return build_biplane(2)
    try:
        return build_classical(name)
    except ValueError:
        raise ValueError("unknown catalog name %r; available: %s"
                         % (name, ", ".join(names())))


def run_claims(e: CatalogEntry) -> list[tuple[str, bool, str]]:
    """Re-check every claim of an entry; failures become report lines."""
    report: list[tuple[str, bool, str]] = []

    def check(label: str, fn) -> None:
        try:
            ok, detail = fn()
        except Exception as err:  # a broken claim must not stop the rest
            ok, detail = False, "%s: %s" % (type(err).__name__, err)
        report.append((label, bool(ok), detail))

    claims = e.claims
    if "params" in claims:
        def _params():
            dp = verify_design(e.design)
            want = tuple(claims["params"])
            return (dp.v, dp.k, dp.lam) == want, str(dp)
        check("params", _params)

    def _acts():
        for g in e.group.generators:
            induced_block_action(e.design, g)
        return True, "%d generators preserve the block multiset" % len(
            e.group.generators)
    check("group_acts", _acts)

    if "flag_transitive" in claims:
        def _flags():
            got = is_flag_transitive(e.design, e.group)
            return got == claims["flag_transitive"], "flag_transitive=%s" % got
        check("flag_transitive", _flags)

    if "primitive" in claims:
        def _prim():
            got = is_point_primitive(e.design, e.group)
            return got == claims["primitive"], "primitive=%s" % got
        check("primitive", _prim)

    if "class_shape" in claims:
        def _classes():
            want = tuple(claims["class_shape"])
            shapes = sorted({(len(sys), len(sys[0]))
                             for sys in minimal_block_systems(e.group)})
            return want in shapes, "minimal class shapes %s" % shapes
        check("class_shape", _classes)

    if "subdegrees" in claims:
        def _subdeg():
            _, got = rank_and_subdegrees(e.group)
            return got == tuple(claims["subdegrees"]), "subdegrees %s" % (got,)
        check("subdegrees", _subdeg)

    if "aut_order" in claims:
        want = int(claims["aut_order"])
        if want <= AUT_ORDER_LIMIT:
            def _aut():
                known = e.group if e.group.order() > 1 else None
                got = automorphism_group(e.design, known=known).order()
                return got == want, "|Aut| = %d" % got
            check("aut_order", _aut)
        else:
            report.append(("aut_order", True,
                           "claimed order %d above the %d computation limit, "
                           "not recomputed" % (want, AUT_ORDER_LIMIT)))

    return report
