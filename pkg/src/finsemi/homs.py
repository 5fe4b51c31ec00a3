"""Linear maps between finite semimodules: Hom-set enumeration, kernels,
normality classification, sequence exactness, splitting, and isomorphism
search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    DEFAULT_LIMITS,
    Enumeration,
    LinearMap,
    Limits,
    SemimoduleTable,
    SubStructure,
    bits,
    bourne_congruence,
    identity_map,
    inclusion_map,
    linear_map_violations,
    quotient_by_congruence,
    zero_map,
    zero_module,
)
from .errors import NotComposable


# ---------------------------------------------------------------------------
# generating sets and derivations


@lru_cache(maxsize=65536)
def generating_set(m: SemimoduleTable) -> tuple[int, ...]:
    """A small generating set, grown greedily in ascending element order."""
    from .core import _closure_mask

    gens: list[int] = []
    closed = _closure_mask(m, 0)
    while closed != (1 << m.order) - 1:
        x = next(i for i in range(m.order) if not closed >> i & 1)
        gens.append(x)
        closed = _closure_mask(m, closed | 1 << x)
    return tuple(gens)


@lru_cache(maxsize=65536)
def _derivations(m: SemimoduleTable) -> tuple[tuple, ...]:
    """How each element is built from the generators, in dependency order.

    Entries are ("zero",), ("gen", i), ("add", x, y) or ("act", s, x) where
    x, y are earlier-derived elements.
    """
    gens = generating_set(m)
    how: dict[int, tuple] = {m.zero: ("zero",)}
    order: list[int] = [m.zero]
    for i, g in enumerate(gens):
        if g not in how:
            how[g] = ("gen", i)
            order.append(g)
        frontier = True
        while frontier:
            frontier = False
            known = list(order)
            for x in known:
                for y in known:
                    z = m.add[x][y]
                    if z not in how:
                        how[z] = ("add", x, y)
                        order.append(z)
                        frontier = True
                for s in range(m.base.order):
                    z = m.act[s][x]
                    if z not in how:
                        how[z] = ("act", s, x)
                        order.append(z)
                        frontier = True
    return tuple((x, how[x]) for x in order)


def _replay(m: SemimoduleTable, target: SemimoduleTable, gen_images: tuple[int, ...]):
    """Image array forced by the generator images (no consistency check)."""
    img = [-1] * m.order
    for x, rule in _derivations(m):
        kind = rule[0]
        if kind == "zero":
            img[x] = target.zero
        elif kind == "gen":
            img[x] = gen_images[rule[1]]
        elif kind == "add":
            img[x] = target.add[img[rule[1]]][img[rule[2]]]
        else:
            img[x] = target.act[rule[1]][img[rule[2]]]
    return img


@lru_cache(maxsize=65536)
def _stages(m: SemimoduleTable) -> tuple[tuple[tuple, ...], ...]:
    """Derivation entries grouped by which generator unlocks them."""
    gens = generating_set(m)
    stages: list[list[tuple]] = [[] for _ in range(len(gens) + 1)]
    stage = 0
    for x, rule in _derivations(m):
        if rule[0] == "gen":
            stage = rule[1] + 1
        stages[stage].append((x, rule))
    return tuple(tuple(st) for st in stages)


@lru_cache(maxsize=262144)
def _scalar_signature(m: SemimoduleTable, x: int) -> tuple[tuple[int, ...], int, int]:
    """Iso-invariant collapse data of one element: the partition of scalars
    by their action on x, and the tail/period of x, 2x, 3x, ..."""
    col = tuple(m.act[s][x] for s in range(m.base.order))
    remap: dict[int, int] = {}
    part = []
    for v in col:
        if v not in remap:
            remap[v] = len(remap)
        part.append(remap[v])
    seen = {x: 0}
    cur = x
    step = 0
    while True:
        cur = m.add[cur][x]
        step += 1
        if cur in seen:
            return tuple(part), seen[cur], step - seen[cur]
        seen[cur] = step


def _hom_candidates(source: SemimoduleTable, target: SemimoduleTable, g: int) -> list[int]:
    """Target elements not ruled out as images of generator ``g``.

    Collapses of g must be reproduced: equal scalar actions on g force
    equal actions on the image, and the additive tail/period of the image
    must divide into g's.
    """
    part_g, tail_g, period_g = _scalar_signature(source, g)
    blocks: dict[int, list[int]] = {}
    for s, b in enumerate(part_g):
        blocks.setdefault(b, []).append(s)
    out = []
    for v in range(target.order):
        part_v, tail_v, period_v = _scalar_signature(target, v)
        if tail_v > tail_g or period_g % period_v:
            continue
        if all(len({part_v[s] for s in ss}) == 1 for ss in blocks.values()):
            out.append(v)
    return out


def enumerate_homs(source: SemimoduleTable, target: SemimoduleTable,
                   limits: Limits = DEFAULT_LIMITS) -> Enumeration:
    """All S-linear maps source -> target, ordered by image tuple.

    Backtracks over images of a generating set with forced propagation
    after every choice; the zero map is always present.  A non-exhaustive
    result only ever drops maps, never invents them.
    """
    return _enumerate_homs_cached(source, target, limits.max_hom_nodes)


@lru_cache(maxsize=65536)
def _enumerate_homs_cached(source: SemimoduleTable, target: SemimoduleTable,
                           max_nodes: int) -> Enumeration:
    gens = generating_set(source)
    stages = _stages(source)
    candidates = [_hom_candidates(source, target, g) for g in gens]
    n = source.order
    sadd, sact = source.add, source.act
    tadd, tact = target.add, target.act
    n_scalars = source.base.order
    found: list[LinearMap] = []
    img = [-1] * n
    known: list[int] = []
    nodes = 0
    exhaustive = True

    def replay_stage(si: int) -> int:
        """Force images for stage ``si``; return how many were set, or -1."""
        added = 0
        for x, rule in stages[si]:
            kind = rule[0]
            if kind == "zero":
                v = target.zero
            elif kind == "gen":
                v = img[x] if img[x] >= 0 else -2
            elif kind == "add":
                v = tadd[img[rule[1]]][img[rule[2]]]
            else:
                v = tact[rule[1]][img[rule[2]]]
            if kind != "gen":
                if img[x] >= 0 and img[x] != v:
                    _undo(added)
                    return -1
                if img[x] < 0:
                    img[x] = v
                    known.append(x)
                    added += 1
        # consistency among all currently known elements
        for x in known:
            fx = img[x]
            row, trow = sadd[x], tadd[fx]
            for y in known:
                z = row[y]
                if img[z] >= 0 and img[z] != trow[img[y]]:
                    _undo(added)
                    return -1
            for s in range(n_scalars):
                z = sact[s][x]
                if img[z] >= 0 and img[z] != tact[s][fx]:
                    _undo(added)
                    return -1
        return added

    def _undo(count: int) -> None:
        for _ in range(count):
            img[known.pop()] = -1

    def dfs(depth: int) -> None:
        nonlocal nodes, exhaustive
        if not exhaustive:
            return
        if depth == len(gens):
            result = tuple(img)
            if not linear_map_violations(source, target, result):
                found.append(LinearMap(source, target, result))
            return
        g = gens[depth]
        for v in candidates[depth]:
            nodes += 1
            if nodes > max_nodes:
                exhaustive = False
                return
            img[g] = v
            known.append(g)
            added = replay_stage(depth + 1)
            if added >= 0:
                dfs(depth + 1)
                _undo(added)
            img[known.pop()] = -1

    base = replay_stage(0)
    if base >= 0:
        dfs(0)
    found.sort(key=lambda f: f.image_of)
    return Enumeration(items=tuple(found), exhaustive=exhaustive)


# ---------------------------------------------------------------------------
# kernels, images, normality


def kernel_image(f: LinearMap) -> tuple[SubStructure, SubStructure, SubStructure]:
    """(Ker f, f(L), closure of f(L)); the kernel is always subtractive."""
    ker = SubStructure(f.source, f.kernel_mask())
    img = SubStructure(f.target, f.image_mask())
    return ker, img, SubStructure(f.target, img.subtractive_closure_members)


@dataclass(frozen=True)
class NormalityProfile:
    k_normal: bool
    i_normal: bool

    @property
    def normal(self) -> bool:
        return self.k_normal and self.i_normal


def normality_profile(f: LinearMap) -> NormalityProfile:
    src, tgt = f.source, f.target
    ker_mask = f.kernel_mask()
    reach = [0] * src.order
    for x in range(src.order):
        row = src.add[x]
        r = 0
        for k in bits(ker_mask):
            r |= 1 << row[k]
        reach[x] = r
    k_normal = True
    by_value: dict[int, list[int]] = {}
    for x, v in enumerate(f.image_of):
        by_value.setdefault(v, []).append(x)
    for xs in by_value.values():
        for i, x in enumerate(xs):
            for y in xs[i + 1:]:
                if not reach[x] & reach[y]:
                    k_normal = False
                    break
            if not k_normal:
                break
        if not k_normal:
            break
    img = SubStructure(tgt, f.image_mask())
    i_normal = img.is_subtractive()
    return NormalityProfile(k_normal=k_normal, i_normal=i_normal)


# ---------------------------------------------------------------------------
# isomorphism search


def _element_profile(m: SemimoduleTable, x: int) -> tuple:
    seen = {x: 0}
    cur = x
    step = 0
    while True:
        cur = m.add[cur][x]
        step += 1
        if cur in seen:
            tail = seen[cur]
            return (
                tail,
                step - tail,
                sum(1 for s in range(m.base.order) if m.act[s][x] == m.zero),
                sum(1 for s in range(m.base.order) if m.act[s][x] == x),
            )
        seen[cur] = step


def find_isomorphism(m: SemimoduleTable, n: SemimoduleTable) -> LinearMap | None:
    """First S-linear bijection m -> n in canonical order, or None."""
    if m.base != n.base or m.order != n.order:
        return None
    prof_m = [_element_profile(m, x) for x in range(m.order)]
    prof_n = [_element_profile(n, x) for x in range(n.order)]
    if sorted(prof_m) != sorted(prof_n):
        return None
    gens = generating_set(m)
    candidates = [
        [v for v in range(n.order) if prof_n[v] == prof_m[g]] for g in gens
    ]

    def rec(i: int, partial: tuple[int, ...]):
        if i == len(gens):
            img = _replay(m, n, partial)
            if img is None or len(set(img)) != n.order:
                return None
            if linear_map_violations(m, n, img):
                return None
            return LinearMap(m, n, tuple(img))
        for v in candidates[i]:
            got = rec(i + 1, partial + (v,))
            if got is not None:
                return got
        return None

    return rec(0, ())


def are_isomorphic(m: SemimoduleTable, n: SemimoduleTable) -> bool:
    return find_isomorphism(m, n) is not None


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class SequenceSpec:
    """A composable chain of linear maps, optionally flanked by zero modules."""

    modules: tuple[SemimoduleTable, ...]
    maps: tuple[LinearMap, ...]

    def __post_init__(self):
        if len(self.modules) != len(self.maps) + 1:
            raise NotComposable("need one more module than maps")
        for i, f in enumerate(self.maps):
            if f.source != self.modules[i] or f.target != self.modules[i + 1]:
                raise NotComposable(f"map {i} does not match its endpoints")


def zero_flanked(l: SemimoduleTable, f: LinearMap, m: SemimoduleTable,
                 g: LinearMap, n: SemimoduleTable) -> SequenceSpec:
    """0 -> L -f-> M -g-> N -> 0 with explicit zero modules at the ends."""
    z = zero_module(l.base)
    return SequenceSpec(
        modules=(z, l, m, n, z),
        maps=(zero_map(z, l), f, g, zero_map(n, z)),
    )


@dataclass(frozen=True)
class JunctionClass:
    """Exactness flags at one inner module of a sequence."""

    proper_exact: bool
    semi_exact: bool
    exact: bool


def classify_junction(f: LinearMap, g: LinearMap) -> JunctionClass:
    if f.target != g.source:
        raise NotComposable("junction maps do not meet")
    img = SubStructure(f.target, f.image_mask())
    ker_mask = g.kernel_mask()
    proper = img.members == ker_mask
    semi = img.subtractive_closure_members == ker_mask
    exact = proper and normality_profile(g).k_normal
    return JunctionClass(proper_exact=proper, semi_exact=semi, exact=exact)


def classify_sequence(seq: SequenceSpec) -> tuple[JunctionClass, ...]:
    return tuple(
        classify_junction(seq.maps[i], seq.maps[i + 1])
        for i in range(len(seq.maps) - 1)
    )


def is_short_exact(seq: SequenceSpec) -> bool:
    if len(seq.modules) != 5:
        return False
    if seq.modules[0].order != 1 or seq.modules[4].order != 1:
        return False
    return all(j.exact for j in classify_sequence(seq))


def short_exact_equivalences(seq: SequenceSpec) -> dict[str, bool]:
    """The three equivalent descriptions of a five-term sequence.

    ``iso``: f corestricts to an isomorphism L -> Ker(g) and the induced map
    M/f(L) -> N is an isomorphism.  ``explicit``: f injective, f(L) = Ker(g),
    g surjective and k-normal.  All three agree with ``exact`` on every
    finite instance; the auditor asserts that.
    """
    z0, l, m, n, z1 = seq.modules
    f, g = seq.maps[1], seq.maps[2]
    exact = is_short_exact(seq)

    explicit = (
        f.is_injective()
        and f.image_mask() == g.kernel_mask()
        and g.is_surjective()
        and normality_profile(g).k_normal
    )

    iso = False
    if f.is_injective() and f.image_mask() == g.kernel_mask():
        # f corestricted to its image is then automatically an isomorphism
        img_sub = SubStructure(m, f.image_mask())
        if img_sub.is_subtractive():
            quot, proj = quotient_by_congruence(m, bourne_congruence(m, img_sub))
            induced = [-1] * quot.order
            ok = True
            for x in range(m.order):
                c = proj.image_of[x]
                v = g.image_of[x]
                if induced[c] not in (-1, v):
                    ok = False
                    break
                induced[c] = v
            if ok and not linear_map_violations(quot, n, induced):
                witness = LinearMap(quot, n, tuple(induced))
                iso = witness.is_injective() and witness.is_surjective()
    return {"exact": exact, "iso": iso, "explicit": explicit}


def canonical_short_exact(m: SemimoduleTable, sub: SubStructure) -> SequenceSpec:
    """0 -> K -> M -> M/K -> 0 for a subtractive K; exact by construction."""
    if not sub.is_subtractive():
        raise NotComposable("canonical short exact sequences need a subtractive kernel")
    _, incl = inclusion_map(sub)
    quot, proj = quotient_by_congruence(m, bourne_congruence(m, sub))
    return zero_flanked(incl.source, incl, m, proj, quot)


# ---------------------------------------------------------------------------
# splitting


@dataclass(frozen=True)
class SplittingProfile:
    """Retraction/section witnesses for a short exact sequence.

    ``left``/``right`` hold a witness map or None; the ``*_exhaustive``
    markers distinguish a definite absence from a truncated search.
    """

    left: LinearMap | None
    right: LinearMap | None
    left_exhaustive: bool
    right_exhaustive: bool

    @property
    def left_splits(self) -> bool | None:
        if self.left is not None:
            return True
        return False if self.left_exhaustive else None

    @property
    def right_splits(self) -> bool | None:
        if self.right is not None:
            return True
        return False if self.right_exhaustive else None


def splitting_profile(seq: SequenceSpec, limits: Limits = DEFAULT_LIMITS) -> SplittingProfile:
    l, m, n = seq.modules[1], seq.modules[2], seq.modules[3]
    f, g = seq.maps[1], seq.maps[2]
    id_l, id_n = identity_map(l), identity_map(n)
    retractions = enumerate_homs(m, l, limits)
    left = next((h for h in retractions if h.compose(f) == id_l), None)
    sections = enumerate_homs(n, m, limits)
    right = next((h for h in sections if g.compose(h) == id_n), None)
    return SplittingProfile(left=left, right=right,
                            left_exhaustive=retractions.exhaustive,
                            right_exhaustive=sections.exhaustive)
