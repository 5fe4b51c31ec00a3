"""Finite semirings and semimodules as validated dense tables.

Elements are indices 0..order-1; the distinguished zero/one are explicit
indices and need not sit at positions 0/1.  Subsets of a carrier are plain
Python ints with bitset semantics, iterated in ascending index order so
every enumeration in the package is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import (
    AxiomViolations,
    IncompatiblePartition,
    NotComposable,
    ShapeError,
    Violation,
)

Table = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# bitset helpers


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(order: int) -> int:
    return (1 << order) - 1


# ---------------------------------------------------------------------------
# limits and enumeration results


@dataclass(frozen=True)
class Limits:
    """Search bounds; every enumeration carries an exhaustiveness marker."""

    max_results: int = 200_000
    max_steps: int = 20_000_000
    max_hom_nodes: int = 2_000_000
    max_carrier: int = 4096


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class Enumeration:
    """A deterministic list of results plus an ``exhaustive`` marker.

    ``exhaustive=False`` means a limit was hit: the items are a correct
    prefix of the full answer but "only"-style conclusions must not be
    drawn from them.
    """

    items: tuple
    exhaustive: bool

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


# ---------------------------------------------------------------------------
# table shape checking


def _as_table(rows: Sequence[Sequence[int]], n_rows: int, n_cols: int, what: str) -> Table:
    if len(rows) != n_rows:
        raise ShapeError(f"{what}: expected {n_rows} rows, got {len(rows)}")
    out = []
    for r, row in enumerate(rows):
        row = tuple(row)
        if len(row) != n_cols:
            raise ShapeError(f"{what}: row {r} has {len(row)} entries, expected {n_cols}")
        for c, v in enumerate(row):
            if not isinstance(v, int) or v < 0:
                raise ShapeError(f"{what}[{r}][{c}] = {v!r} is not a valid index")
        out.append(row)
    return tuple(out)


def _check_entries(tab: Table, bound: int, what: str) -> None:
    for r, row in enumerate(tab):
        for c, v in enumerate(row):
            if v >= bound:
                raise ShapeError(f"{what}[{r}][{c}] = {v} out of range 0..{bound - 1}")


# ---------------------------------------------------------------------------
# semirings


@dataclass(frozen=True)
class SemiringTable:
    """A validated finite semiring given by addition/multiplication tables."""

    order: int
    add: Table
    mul: Table
    zero: int
    one: int
    commutative: bool
    zerosumfree: bool
    cancellative: bool

    def left_module(self) -> SemimoduleTable:
        """This semiring as a left semimodule over itself."""
        return SemimoduleTable(base=self, order=self.order, add=self.add,
                               act=self.mul, zero=self.zero)

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"SemiringTable(order={self.order}, zero={self.zero}, one={self.one})"


def semiring_violations(add: Table, mul: Table, zero: int, one: int) -> list[Violation]:
    """All semiring axiom failures for the given tables, in a fixed order."""
    n = len(add)
    rng = range(n)
    out: list[Violation] = []
    if zero == one:
        out.append(Violation("zero-ne-one", (zero,)))
    for a in rng:
        if add[zero][a] != a or add[a][zero] != a:
            out.append(Violation("additive-identity", (a,)))
        if mul[one][a] != a or mul[a][one] != a:
            out.append(Violation("multiplicative-identity", (a,)))
        if mul[zero][a] != zero or mul[a][zero] != zero:
            out.append(Violation("absorbing-zero", (a,)))
    for a in rng:
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                out.append(Violation("additive-commutativity", (a, b)))
    for a in rng:
        for b in rng:
            ab_add = add[a][b]
            ab_mul = mul[a][b]
            for c in rng:
                if add[ab_add][c] != add[a][add[b][c]]:
                    out.append(Violation("additive-associativity", (a, b, c)))
                if mul[ab_mul][c] != mul[a][mul[b][c]]:
                    out.append(Violation("multiplicative-associativity", (a, b, c)))
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    out.append(Violation("left-distributivity", (a, b, c)))
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    out.append(Violation("right-distributivity", (a, b, c)))
    return out


def validate_semiring(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                      zero: int, one: int) -> SemiringTable:
    """Validate raw tables and return a SemiringTable with computed flags."""
    n = len(add)
    if n == 0:
        raise ShapeError("empty carrier")
    add_t = _as_table(add, n, n, "add")
    mul_t = _as_table(mul, n, n, "mul")
    _check_entries(add_t, n, "add")
    _check_entries(mul_t, n, "mul")
    if not 0 <= zero < n or not 0 <= one < n:
        raise ShapeError("zero/one index out of range")
    violations = semiring_violations(add_t, mul_t, zero, one)
    if violations:
        raise AxiomViolations(violations)
    commutative = all(mul_t[a][b] == mul_t[b][a] for a in range(n) for b in range(a + 1, n))
    v_mask, k_mask = _v_and_k_masks(add_t, zero, n)
    return SemiringTable(order=n, add=add_t, mul=mul_t, zero=zero, one=one,
                         commutative=commutative,
                         zerosumfree=v_mask == 1 << zero,
                         cancellative=k_mask == full_mask(n))


def _v_and_k_masks(add: Table, zero: int, n: int) -> tuple[int, int]:
    v = 0
    for s in range(n):
        if any(add[s][t] == zero for t in range(n)):
            v |= 1 << s
    k = 0
    for x in range(n):
        row = add[x]
        if len(set(row)) == n:
            k |= 1 << x
    return v, k


def v_and_k_sets(s: SemiringTable) -> tuple[int, int]:
    """(V(S), K+(S)) as bitmasks: zero-sum elements and cancellative elements."""
    return _v_and_k_masks(s.add, s.zero, s.order)


# ---------------------------------------------------------------------------
# semimodules


@dataclass(frozen=True)
class SemimoduleTable:
    """A validated finite left semimodule over a SemiringTable.

    ``act[s][m]`` is the action of scalar ``s`` on element ``m``.
    """

    base: SemiringTable
    order: int
    add: Table
    act: Table
    zero: int

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"SemimoduleTable(order={self.order}, base_order={self.base.order})"


def semimodule_violations(base: SemiringTable, add: Table, act: Table, zero: int) -> list[Violation]:
    n = len(add)
    rng = range(n)
    out: list[Violation] = []
    for m in rng:
        if add[zero][m] != m or add[m][zero] != m:
            out.append(Violation("additive-identity", (m,)))
    for a in rng:
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                out.append(Violation("additive-commutativity", (a, b)))
    for a in rng:
        for b in rng:
            ab = add[a][b]
            for c in rng:
                if add[ab][c] != add[a][add[b][c]]:
                    out.append(Violation("additive-associativity", (a, b, c)))
    S = base
    for s in S.elements():
        row = act[s]
        for m in rng:
            for m2 in rng:
                if row[add[m][m2]] != add[row[m]][row[m2]]:
                    out.append(Violation("action-distributes-over-module-add", (s, m, m2)))
    for s in S.elements():
        for s2 in S.elements():
            for m in rng:
                if act[S.add[s][s2]][m] != add[act[s][m]][act[s2][m]]:
                    out.append(Violation("action-distributes-over-scalar-add", (s, s2, m)))
                if act[S.mul[s][s2]][m] != act[s][act[s2][m]]:
                    out.append(Violation("action-associativity", (s, s2, m)))
    for m in rng:
        if act[S.one][m] != m:
            out.append(Violation("unit-action", (m,)))
        if act[S.zero][m] != zero:
            out.append(Violation("zero-scalar-kills", (m,)))
    for s in S.elements():
        if act[s][zero] != zero:
            out.append(Violation("zero-element-absorbs", (s,)))
    return out


def validate_semimodule(base: SemiringTable, add: Sequence[Sequence[int]],
                        act: Sequence[Sequence[int]], zero: int) -> SemimoduleTable:
    n = len(add)
    if n == 0:
        raise ShapeError("empty carrier")
    add_t = _as_table(add, n, n, "add")
    act_t = _as_table(act, base.order, n, "act")
    _check_entries(add_t, n, "add")
    _check_entries(act_t, n, "act")
    if not 0 <= zero < n:
        raise ShapeError("zero index out of range")
    violations = semimodule_violations(base, add_t, act_t, zero)
    if violations:
        raise AxiomViolations(violations)
    return SemimoduleTable(base=base, order=n, add=add_t, act=act_t, zero=zero)


def zero_module(base: SemiringTable) -> SemimoduleTable:
    return SemimoduleTable(base=base, order=1, add=((0,),),
                           act=tuple((0,) for _ in range(base.order)), zero=0)


def product_module(a: SemimoduleTable, b: SemimoduleTable) -> SemimoduleTable:
    """External direct sum; index of (x, y) is ``x * b.order + y``."""
    if a.base is not b.base and a.base != b.base:
        raise IncompatiblePartition("product needs a shared base semiring")
    nb = b.order
    n = a.order * nb
    idx = lambda x, y: x * nb + y
    add = tuple(
        tuple(idx(a.add[x][x2], b.add[y][y2]) for x2 in range(a.order) for y2 in range(nb))
        for x in range(a.order) for y in range(nb)
    )
    act = tuple(
        tuple(idx(a.act[s][x], b.act[s][y]) for x in range(a.order) for y in range(nb))
        for s in range(a.base.order)
    )
    return SemimoduleTable(base=a.base, order=n, add=add, act=act,
                           zero=idx(a.zero, b.zero))


# ---------------------------------------------------------------------------
# substructures


@dataclass(frozen=True)
class SubStructure:
    """A subset of a semimodule carrier closed under addition and action."""

    parent: SemimoduleTable
    members: int

    def __post_init__(self):
        m, mask = self.parent, self.members
        if not mask >> m.zero & 1:
            raise IncompatiblePartition("substructure must contain zero")
        for x in bits(mask):
            row = m.add[x]
            for y in bits(mask):
                if not mask >> row[y] & 1:
                    raise IncompatiblePartition(f"not closed under addition at ({x}, {y})")
            for s in range(m.base.order):
                if not mask >> m.act[s][x] & 1:
                    raise IncompatiblePartition(f"not closed under the action at ({s}, {x})")

    def elements(self) -> Iterator[int]:
        return bits(self.members)

    def size(self) -> int:
        return self.members.bit_count()

    def contains(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    @property
    def subtractive_closure_members(self) -> int:
        return _subtractive_closure_mask(self.parent, self.members)

    def is_subtractive(self) -> bool:
        return self.subtractive_closure_members == self.members

    def __repr__(self) -> str:
        return f"SubStructure({sorted(bits(self.members))})"


def _closure_mask(m: SemimoduleTable, seed: int) -> int:
    """Smallest add/act-closed subset containing ``seed`` and zero."""
    add, act = m.add, m.act
    mask = seed | 1 << m.zero
    work = list(bits(mask))
    n_base = m.base.order
    while work:
        x = work.pop()
        row = add[x]
        for y in bits(mask):
            z = row[y]
            if not mask >> z & 1:
                mask |= 1 << z
                work.append(z)
        for s in range(n_base):
            z = act[s][x]
            if not mask >> z & 1:
                mask |= 1 << z
                work.append(z)
    return mask


def _subtractive_extend(m: SemimoduleTable, mask: int) -> int:
    """One subtractive step: add every x with x + l inside ``mask``."""
    add = m.add
    out = mask
    for x in range(m.order):
        if out >> x & 1:
            continue
        row = add[x]
        if any(mask >> row[l] & 1 for l in bits(mask)):
            out |= 1 << x
    return out


def _subtractive_closed_closure(m: SemimoduleTable, seed: int) -> int:
    """Smallest subtractive subsemimodule containing ``seed``."""
    mask = _closure_mask(m, seed)
    while True:
        bigger = _subtractive_extend(m, mask)
        if bigger == mask:
            return mask
        mask = _closure_mask(m, bigger)


@lru_cache(maxsize=200_000)
def _subtractive_closure_mask(m: SemimoduleTable, mask: int) -> int:
    return _subtractive_extend(m, mask)


def generated_subsemimodule(m: SemimoduleTable, seed) -> SubStructure:
    """Smallest SubStructure of ``m`` containing ``seed`` (iterable or mask)."""
    seed_mask = seed if isinstance(seed, int) else mask_of(seed)
    return SubStructure(m, _closure_mask(m, seed_mask))


def principal_subsemimodule(m: SemimoduleTable, x: int) -> SubStructure:
    return generated_subsemimodule(m, 1 << x)


def subtractive_closure(sub: SubStructure) -> SubStructure:
    """The subtractive closure, itself a SubStructure of the same parent."""
    return SubStructure(sub.parent, sub.subtractive_closure_members)


def sub_module(sub: SubStructure) -> tuple[SemimoduleTable, tuple[int, ...]]:
    """Promote a SubStructure to its own SemimoduleTable.

    Returns the promoted module plus ``to_parent``: new index -> parent index.
    """
    parent = sub.parent
    to_parent = tuple(sorted(bits(sub.members)))
    back = {p: i for i, p in enumerate(to_parent)}
    add = tuple(tuple(back[parent.add[x][y]] for y in to_parent) for x in to_parent)
    act = tuple(tuple(back[parent.act[s][x]] for x in to_parent)
                for s in range(parent.base.order))
    mod = SemimoduleTable(base=parent.base, order=len(to_parent), add=add, act=act,
                          zero=back[parent.zero])
    return mod, to_parent


# ---------------------------------------------------------------------------
# congruences

Parent = Union[SemimoduleTable, SemiringTable]


def _normalize_class_of(raw: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


@dataclass(frozen=True)
class CongruencePartition:
    """A partition compatible with every operation of ``parent``.

    Class ids are normalized by first occurrence in carrier order, so equal
    partitions compare equal as dataclasses.
    """

    parent: Parent
    class_of: tuple[int, ...]

    def n_classes(self) -> int:
        return max(self.class_of) + 1

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_masks(self) -> list[int]:
        masks = [0] * self.n_classes()
        for x, c in enumerate(self.class_of):
            masks[c] |= 1 << x
        return masks

    def zero_class_mask(self) -> int:
        zero = self.parent.zero
        c = self.class_of[zero]
        return self.class_masks()[c]

    def is_discrete(self) -> bool:
        return self.n_classes() == len(self.class_of)

    def is_universal(self) -> bool:
        return self.n_classes() == 1

    def __repr__(self) -> str:
        return f"CongruencePartition({self.class_of})"


def discrete_partition(parent: Parent) -> CongruencePartition:
    n = parent.order
    return CongruencePartition(parent, tuple(range(n)))


def universal_partition(parent: Parent) -> CongruencePartition:
    return CongruencePartition(parent, (0,) * parent.order)


def _translations(parent: Parent) -> list[tuple[int, ...]]:
    """Unary polynomial translations generating all compatibility constraints."""
    n = parent.order
    out: list[tuple[int, ...]] = []
    for c in range(n):
        out.append(tuple(parent.add[x][c] for x in range(n)))
    if isinstance(parent, SemimoduleTable):
        for s in range(parent.base.order):
            out.append(tuple(parent.act[s]))
    else:
        for c in range(n):
            out.append(tuple(parent.mul[c][x] for x in range(n)))
            out.append(tuple(parent.mul[x][c] for x in range(n)))
    return out


class _UnionFind:
    __slots__ = ("p",)

    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.p[rb] = ra
        return True


def congruence_closure(parent: Parent, pairs, base: CongruencePartition | None = None) -> CongruencePartition:
    """Smallest congruence relating all ``pairs`` (on top of ``base`` if given)."""
    n = parent.order
    uf = _UnionFind(n)
    queue: list[tuple[int, int]] = []
    if base is not None:
        for cls_mask in base.class_masks():
            members = list(bits(cls_mask))
            for other in members[1:]:
                if uf.union(members[0], other):
                    queue.append((members[0], other))
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    trans = _translations(parent)
    while queue:
        a, b = queue.pop()
        for t in trans:
            x, y = t[a], t[b]
            if uf.union(x, y):
                queue.append((x, y))
    return CongruencePartition(parent, _normalize_class_of([uf.find(x) for x in range(n)]))


def partition_violations(parent: Parent, class_of: Sequence[int]) -> list[Violation]:
    """Compatibility failures of an equivalence given by ``class_of``."""
    n = parent.order
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if class_of[a] == class_of[b]]
    out: list[Violation] = []
    for t in _translations(parent):
        for a, b in pairs:
            if class_of[t[a]] != class_of[t[b]]:
                out.append(Violation("translation-compatibility", (a, b, t[a], t[b])))
    return out


def make_partition(parent: Parent, class_of: Sequence[int]) -> CongruencePartition:
    if len(class_of) != parent.order:
        raise ShapeError("class_of length must equal the carrier size")
    violations = partition_violations(parent, class_of)
    if violations:
        raise IncompatiblePartition(str(violations[0]))
    return CongruencePartition(parent, _normalize_class_of(class_of))


def bourne_congruence(m: SemimoduleTable, sub: SubStructure) -> CongruencePartition:
    """The congruence with x ~ y iff x + n = y + n' for some n, n' in ``sub``."""
    if sub.parent != m:
        raise IncompatiblePartition("substructure belongs to a different module")
    n = m.order
    add = m.add
    reach = [0] * n
    for x in range(n):
        r = 0
        row = add[x]
        for u in sub.elements():
            r |= 1 << row[u]
        reach[x] = r
    uf = _UnionFind(n)
    for a in range(n):
        ra = reach[a]
        for b in range(a + 1, n):
            if ra & reach[b]:
                uf.union(a, b)
    part = CongruencePartition(m, _normalize_class_of([uf.find(x) for x in range(n)]))
    # the kernel of the canonical projection is exactly the subtractive closure
    if part.zero_class_mask() != sub.subtractive_closure_members:
        raise IncompatiblePartition("zero class differs from the subtractive closure")
    return part


def quotient_by_congruence(m: SemimoduleTable, rho: CongruencePartition):
    """Quotient module plus the canonical (surjective, k-normal) projection."""
    if rho.parent != m:
        raise IncompatiblePartition("partition belongs to a different parent")
    bad = partition_violations(m, rho.class_of)
    if bad:
        raise IncompatiblePartition(str(bad[0]))
    class_of = rho.class_of
    k = rho.n_classes()
    rep = [0] * k
    for x in range(m.order - 1, -1, -1):
        rep[class_of[x]] = x
    add = tuple(tuple(class_of[m.add[rep[i]][rep[j]]] for j in range(k)) for i in range(k))
    act = tuple(tuple(class_of[m.act[s][rep[i]]] for i in range(k))
                for s in range(m.base.order))
    quot = SemimoduleTable(base=m.base, order=k, add=add, act=act,
                           zero=class_of[m.zero])
    proj = LinearMap(source=m, target=quot, image_of=class_of)
    return quot, proj


# ---------------------------------------------------------------------------
# linear maps (shared foundation; analysis lives in the homs module)


@dataclass(frozen=True)
class LinearMap:
    """A total map between semimodules over the same base, kept as an image array."""

    source: SemimoduleTable
    target: SemimoduleTable
    image_of: tuple[int, ...]

    def __post_init__(self):
        bad = linear_map_violations(self.source, self.target, self.image_of)
        if bad:
            raise AxiomViolations(bad)

    def __call__(self, x: int) -> int:
        return self.image_of[x]

    def image_mask(self) -> int:
        return mask_of(self.image_of)

    def kernel_mask(self) -> int:
        tz = self.target.zero
        return mask_of(x for x, y in enumerate(self.image_of) if y == tz)

    def is_injective(self) -> bool:
        return len(set(self.image_of)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.image_of)) == self.target.order

    def is_zero(self) -> bool:
        tz = self.target.zero
        return all(y == tz for y in self.image_of)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.target != self.source:
            raise NotComposable("endpoints do not match")
        return LinearMap(inner.source, self.target,
                         tuple(self.image_of[y] for y in inner.image_of))

    def __repr__(self) -> str:
        return f"LinearMap({list(self.image_of)})"


def linear_map_violations(source: SemimoduleTable, target: SemimoduleTable,
                          image_of: Sequence[int]) -> list[Violation]:
    if source.base != target.base:
        return [Violation("shared-base", ())]
    if len(image_of) != source.order:
        return [Violation("total-map", (len(image_of),))]
    out: list[Violation] = []
    if image_of[source.zero] != target.zero:
        out.append(Violation("preserves-zero", (source.zero,)))
    for x in range(source.order):
        fx = image_of[x]
        for y in range(x, source.order):
            if image_of[source.add[x][y]] != target.add[fx][image_of[y]]:
                out.append(Violation("additive", (x, y)))
    for s in range(source.base.order):
        src_row, tgt_row = source.act[s], target.act[s]
        for x in range(source.order):
            if image_of[src_row[x]] != tgt_row[image_of[x]]:
                out.append(Violation("scalar", (s, x)))
    return out


def identity_map(m: SemimoduleTable) -> LinearMap:
    return LinearMap(m, m, tuple(range(m.order)))


def zero_map(source: SemimoduleTable, target: SemimoduleTable) -> LinearMap:
    return LinearMap(source, target, (target.zero,) * source.order)


def inclusion_map(sub: SubStructure) -> tuple[SemimoduleTable, LinearMap]:
    """Promote ``sub`` and return (promoted module, inclusion into the parent)."""
    mod, to_parent = sub_module(sub)
    return mod, LinearMap(mod, sub.parent, to_parent)


# ---------------------------------------------------------------------------
# enumeration of subsemimodules and congruences


def enumerate_subsemimodules(m: SemimoduleTable, limits: Limits = DEFAULT_LIMITS,
                             subtractive_only: bool = False) -> Enumeration:
    """All SubStructures of ``m`` in ascending bitset order.

    With ``subtractive_only`` the search walks the lattice of subtractive
    subsemimodules directly (closing each extension subtractively), which
    reaches exactly the subtractive ones at far lower cost.
    """
    close = _subtractive_closed_closure if subtractive_only else _closure_mask
    start = close(m, 0)
    seen = {start}
    queue = [start]
    exhaustive = True
    steps = 0
    while queue:
        current = queue.pop()
        for x in range(m.order):
            if current >> x & 1:
                continue
            steps += 1
            if steps > limits.max_steps or len(seen) >= limits.max_results:
                exhaustive = False
                queue.clear()
                break
            nxt = close(m, current | 1 << x)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    subs = tuple(SubStructure(m, mask) for mask in sorted(seen))
    return Enumeration(items=subs, exhaustive=exhaustive)


def enumerate_congruences(parent: Parent, limits: Limits = DEFAULT_LIMITS) -> Enumeration:
    """All congruences of a semimodule (or semiring), canonically ordered.

    Works by join-closing the principal congruences above the diagonal.
    """
    n = parent.order
    delta = discrete_partition(parent)
    seen = {delta.class_of: delta}
    queue = [delta]
    exhaustive = True
    steps = 0
    while queue:
        rho = queue.pop()
        for a in range(n):
            for b in range(a + 1, n):
                if rho.class_of[a] == rho.class_of[b]:
                    continue
                steps += 1
                if steps > limits.max_steps or len(seen) >= limits.max_results:
                    exhaustive = False
                    queue.clear()
                    break
                bigger = congruence_closure(parent, [(a, b)], base=rho)
                if bigger.class_of not in seen:
                    seen[bigger.class_of] = bigger
                    queue.append(bigger)
            else:
                continue
            break
    ordered = tuple(seen[key] for key in sorted(seen))
    return Enumeration(items=ordered, exhaustive=exhaustive)
