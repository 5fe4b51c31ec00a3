"""Finite-scale deciders for k-projectivity, e-projectivity, i-injectivity
and e-injectivity relative to a fixed module.

Normal surjections out of M are represented, up to isomorphism, by the
canonical quotients M -> M/K for subtractive K (they are exactly the
k-normal surjections), and normal injections into M by inclusions of
subtractive subsemimodules.  Quantifiers over "every semimodule" are
bounded to the family built by :func:`bounded_family`; every report says
so through its ``family`` field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_LIMITS,
    LinearMap,
    Limits,
    SemimoduleTable,
    SemiringTable,
    SubStructure,
    Table,
    bourne_congruence,
    enumerate_congruences,
    enumerate_subsemimodules,
    inclusion_map,
    quotient_by_congruence,
    sub_module,
)
from .errors import LimitExceeded
from .homs import are_isomorphic, canonical_short_exact, enumerate_homs
from .core import product_module


# ---------------------------------------------------------------------------
# the bounded test family


def bounded_family(s: SemiringTable, limits: Limits = DEFAULT_LIMITS,
                   with_sums: bool = True) -> list[tuple[str, SemimoduleTable]]:
    """S itself, its subsemimodules and quotients, and binary direct sums
    thereof, deduplicated up to isomorphism (the deciders are iso-invariant).
    """
    m = s.left_module()
    raw: list[tuple[str, SemimoduleTable]] = [("S", m)]
    subs = enumerate_subsemimodules(m, limits)
    cons = enumerate_congruences(m, limits)
    if not subs.exhaustive or not cons.exhaustive:
        raise LimitExceeded("family enumeration truncated")
    for sub in subs:
        raw.append((f"sub{sub.members:#x}", sub_module(sub)[0]))
    for rho in cons:
        raw.append((f"quot{''.join(map(str, rho.class_of))}", quotient_by_congruence(m, rho)[0]))
    base = _dedupe_by_iso(raw)
    if not with_sums:
        return base
    with_pairs = list(base)
    for i, (la, a) in enumerate(base):
        for lb, b in base[i:]:
            with_pairs.append((f"{la}+{lb}", product_module(a, b)))
    return _dedupe_by_iso(with_pairs)


def _dedupe_by_iso(mods: list[tuple[str, SemimoduleTable]]) -> list[tuple[str, SemimoduleTable]]:
    kept: list[tuple[str, SemimoduleTable]] = []
    for label, mod in mods:
        if not any(are_isomorphic(mod, seen) for _, seen in kept):
            kept.append((label, mod))
    return kept


# ---------------------------------------------------------------------------
# commutative monoids of homs


@dataclass(frozen=True)
class Monoid:
    order: int
    add: Table
    zero: int


def hom_monoid(source: SemimoduleTable, target: SemimoduleTable,
               limits: Limits = DEFAULT_LIMITS) -> tuple[Monoid, tuple[LinearMap, ...]]:
    """Hom(source, target) under pointwise addition."""
    homs = enumerate_homs(source, target, limits)
    if not homs.exhaustive:
        raise LimitExceeded("hom enumeration truncated")
    maps = homs.items
    index = {f.image_of: i for i, f in enumerate(maps)}
    n = source.order
    add = tuple(
        tuple(index[tuple(target.add[f.image_of[x]][g.image_of[x]] for x in range(n))]
              for g in maps)
        for f in maps
    )
    zero = index[(target.zero,) * n]
    return Monoid(order=len(maps), add=add, zero=zero), maps


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _monoid_junction_exact(src: Monoid, mid: Monoid, tgt: Monoid,
                           first: tuple[int, ...], second: tuple[int, ...]) -> bool:
    image_mask = 0
    for v in first:
        image_mask |= 1 << v
    kernel_mask = sum(1 << i for i, v in enumerate(second) if v == tgt.zero)
    if image_mask != kernel_mask:
        return False
    # k-normality of the second map at the monoid level
    reach = [0] * mid.order
    for x in range(mid.order):
        row = mid.add[x]
        r = 0
        for k in _bits(kernel_mask):
            r |= 1 << row[k]
        reach[x] = r
    by_value: dict[int, list[int]] = {}
    for x, v in enumerate(second):
        by_value.setdefault(v, []).append(x)
    for xs in by_value.values():
        for i, x in enumerate(xs):
            for y in xs[i + 1:]:
                if not reach[x] & reach[y]:
                    return False
    return True


def _monoid_short_exact(h_l: Monoid, h_m: Monoid, h_n: Monoid,
                        first: tuple[int, ...], second: tuple[int, ...]) -> dict[str, bool]:
    injective = len(set(first)) == h_l.order
    surjective = len(set(second)) == h_n.order
    middle = _monoid_junction_exact(h_l, h_m, h_n, first, second)
    return {"left": injective, "middle": middle, "right": surjective,
            "exact": injective and middle and surjective}


# ---------------------------------------------------------------------------
# instance records


@dataclass(frozen=True)
class LiftingProblem:
    """One lifting/extension instance and its resolution."""

    kind: str
    kernel_mask: int
    test_map: tuple[int, ...]
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class SequenceTransferRecord:
    """Exactness of one induced monoid sequence."""

    kernel_mask: int
    left: bool
    middle: bool
    right: bool

    @property
    def exact(self) -> bool:
        return self.left and self.middle and self.right


@dataclass(frozen=True)
class DeciderReport:
    kind: str
    holds: bool
    records: tuple

    def failures(self):
        if self.kind in ("k-projective", "i-injective"):
            return [r for r in self.records if r.witness is None]
        return [r for r in self.records if not r.exact]


def _subtractive_subs(m: SemimoduleTable, limits: Limits) -> list[SubStructure]:
    subt = enumerate_subsemimodules(m, limits, subtractive_only=True)
    if not subt.exhaustive:
        raise LimitExceeded("subtractive enumeration truncated")
    return list(subt)


def is_k_projective(p: SemimoduleTable, m: SemimoduleTable,
                    limits: Limits = DEFAULT_LIMITS) -> DeciderReport:
    """Every map p -> M/K lifts through the canonical projection."""
    records = []
    holds = True
    for sub in _subtractive_subs(m, limits):
        quot, proj = quotient_by_congruence(m, bourne_congruence(m, sub))
        candidates = enumerate_homs(p, m, limits)
        if not candidates.exhaustive:
            raise LimitExceeded("hom enumeration truncated")
        lifted = {proj.compose(h).image_of: h for h in reversed(candidates.items)}
        for g in enumerate_homs(p, quot, limits):
            h = lifted.get(g.image_of)
            records.append(LiftingProblem(
                kind="k-projective", kernel_mask=sub.members,
                test_map=g.image_of,
                witness=None if h is None else h.image_of))
            if h is None:
                holds = False
    return DeciderReport(kind="k-projective", holds=holds, records=tuple(records))


def is_i_injective(j: SemimoduleTable, m: SemimoduleTable,
                   limits: Limits = DEFAULT_LIMITS) -> DeciderReport:
    """Every map K -> j from a subtractive K <= M extends over M."""
    records = []
    holds = True
    for sub in _subtractive_subs(m, limits):
        part, incl = inclusion_map(sub)
        candidates = enumerate_homs(m, j, limits)
        if not candidates.exhaustive:
            raise LimitExceeded("hom enumeration truncated")
        restricted = {h.compose(incl).image_of: h for h in reversed(candidates.items)}
        for g in enumerate_homs(part, j, limits):
            h = restricted.get(g.image_of)
            records.append(LiftingProblem(
                kind="i-injective", kernel_mask=sub.members,
                test_map=g.image_of,
                witness=None if h is None else h.image_of))
            if h is None:
                holds = False
    return DeciderReport(kind="i-injective", holds=holds, records=tuple(records))


def is_e_projective(p: SemimoduleTable, m: SemimoduleTable,
                    limits: Limits = DEFAULT_LIMITS) -> DeciderReport:
    """Hom(p, -) sends every short exact 0->K->M->M/K->0 to a short exact
    sequence of commutative monoids."""
    records = []
    holds = True
    for sub in _subtractive_subs(m, limits):
        seq = canonical_short_exact(m, sub)
        l, mid, n = seq.modules[1], seq.modules[2], seq.modules[3]
        f, g = seq.maps[1], seq.maps[2]
        h_l, maps_l = hom_monoid(p, l, limits)
        h_m, maps_m = hom_monoid(p, mid, limits)
        h_n, maps_n = hom_monoid(p, n, limits)
        index_m = {q.image_of: i for i, q in enumerate(maps_m)}
        index_n = {q.image_of: i for i, q in enumerate(maps_n)}
        first = tuple(index_m[f.compose(q).image_of] for q in maps_l)
        second = tuple(index_n[g.compose(q).image_of] for q in maps_m)
        flags = _monoid_short_exact(h_l, h_m, h_n, first, second)
        records.append(SequenceTransferRecord(
            kernel_mask=sub.members, left=flags["left"],
            middle=flags["middle"], right=flags["right"]))
        if not flags["exact"]:
            holds = False
    return DeciderReport(kind="e-projective", holds=holds, records=tuple(records))


def is_e_injective(j: SemimoduleTable, m: SemimoduleTable,
                   limits: Limits = DEFAULT_LIMITS) -> DeciderReport:
    """Hom(-, j) sends every short exact 0->K->M->M/K->0 to a short exact
    sequence 0 -> Hom(M/K, j) -> Hom(M, j) -> Hom(K, j) -> 0."""
    records = []
    holds = True
    for sub in _subtractive_subs(m, limits):
        seq = canonical_short_exact(m, sub)
        l, mid, n = seq.modules[1], seq.modules[2], seq.modules[3]
        f, g = seq.maps[1], seq.maps[2]
        h_n, maps_n = hom_monoid(n, j, limits)
        h_m, maps_m = hom_monoid(mid, j, limits)
        h_l, maps_l = hom_monoid(l, j, limits)
        index_m = {q.image_of: i for i, q in enumerate(maps_m)}
        index_l = {q.image_of: i for i, q in enumerate(maps_l)}
        first = tuple(index_m[q.compose(g).image_of] for q in maps_n)
        second = tuple(index_l[q.compose(f).image_of] for q in maps_m)
        flags = _monoid_short_exact(h_n, h_m, h_l, first, second)
        records.append(SequenceTransferRecord(
            kernel_mask=sub.members, left=flags["left"],
            middle=flags["middle"], right=flags["right"]))
        if not flags["exact"]:
            holds = False
    return DeciderReport(kind="e-injective", holds=holds, records=tuple(records))
