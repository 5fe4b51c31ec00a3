"""Core table validation, closures, congruences, quotients, enumerations.

Expected values are either forced by the definitions or computed by the
inline brute-force oracles next to the assertion that freezes them.
"""

import pytest

from finsemi.core import (
    Limits,
    SubStructure,
    bits,
    bourne_congruence,
    congruence_closure,
    discrete_partition,
    enumerate_congruences,
    enumerate_subsemimodules,
    full_mask,
    generated_subsemimodule,
    make_partition,
    mask_of,
    product_module,
    quotient_by_congruence,
    sub_module,
    subtractive_closure,
    universal_partition,
    v_and_k_sets,
    validate_semiring,
    zero_module,
)
from finsemi.errors import AxiomViolations, IncompatiblePartition, ShapeError
from finsemi.catalog import make_B


# ---------------------------------------------------------------------------
# validation


def test_boolean_semiring_flags(B):
    assert B.order == 2
    assert B.add == ((0, 1), (1, 1))
    assert B.mul == ((0, 0), (0, 1))
    assert B.commutative and B.zerosumfree and not B.cancellative


def test_b31_tables_built_by_hand(B31):
    # wrap rule applied cell by cell: overflow lands in [1, 3) mod 2
    assert B31.add == ((0, 1, 2), (1, 2, 1), (2, 1, 2))
    assert B31.mul == ((0, 0, 0), (0, 1, 2), (0, 2, 2))


def test_zero_equals_one_rejected():
    with pytest.raises(AxiomViolations) as err:
        validate_semiring(((0, 1), (1, 1)), ((0, 0), (0, 1)), zero=0, one=0)
    assert any(v.law == "zero-ne-one" for v in err.value.violations)


def test_ragged_table_rejected():
    with pytest.raises(ShapeError):
        validate_semiring(((0, 1), (1,)), ((0, 0), (0, 1)), zero=0, one=1)


def test_out_of_range_entry_rejected():
    with pytest.raises(ShapeError):
        validate_semiring(((0, 1), (1, 7)), ((0, 0), (0, 1)), zero=0, one=1)


def test_violation_names_the_failing_triple():
    # break left distributivity only: an ad-hoc corrupt 3-element table
    add = [[0, 1, 2], [1, 2, 1], [2, 1, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(AxiomViolations) as err:
        validate_semiring(add, mul, zero=0, one=1)
    laws = {v.law for v in err.value.violations}
    assert laws  # at least one named law with a concrete witness
    assert all(isinstance(v.witness, tuple) for v in err.value.violations)


def test_nonstandard_zero_one_positions():
    # the boolean semiring with its two elements swapped
    s = validate_semiring(((0, 0), (0, 1)), ((0, 1), (1, 1)), zero=1, one=0)
    assert s.zerosumfree


# ---------------------------------------------------------------------------
# V(S) and K+(S)


def _brute_v_and_k(s):
    v = mask_of(a for a in range(s.order)
                if any(s.add[a][b] == s.zero for b in range(s.order)))
    k = mask_of(x for x in range(s.order)
                if all(s.add[x][y] != s.add[x][z]
                       for y in range(s.order) for z in range(s.order) if y != z))
    return v, k


def test_v_and_k_boolean(B):
    assert v_and_k_sets(B) == (0b01, 0b01)


def test_v_and_k_ring(Z2):
    v, _ = v_and_k_sets(Z2)
    assert v == full_mask(2)  # V(S) is everything exactly on rings
    assert Z2.cancellative


def test_v_and_k_b31(B31):
    v, k = v_and_k_sets(B31)
    assert v == 1 << B31.zero
    assert (v, k) == _brute_v_and_k(B31)


@pytest.mark.parametrize("n,i", [(2, 0), (2, 1), (3, 1), (3, 2), (4, 3), (5, 2)])
def test_v_and_k_against_brute_force(n, i):
    s = make_B(n, i)
    assert v_and_k_sets(s) == _brute_v_and_k(s)


# ---------------------------------------------------------------------------
# generated subsemimodules and subtractive closure


def test_generated_ideal_of_two(B31):
    m = B31.left_module()
    assert generated_subsemimodule(m, [2]).members == 0b101


def test_generated_empty_seed(B31):
    m = B31.left_module()
    assert generated_subsemimodule(m, []).members == 0b001


def test_generated_in_product(B):
    mb = B.left_module()
    m = product_module(mb, mb)  # (x, y) -> index 2 x + y
    assert generated_subsemimodule(m, [2]).members == mask_of([0, 2])


def test_subtractive_closure_examples(B31, B43):
    m31 = B31.left_module()
    assert subtractive_closure(SubStructure(m31, 0b101)).members == 0b101
    m43 = B43.left_module()
    assert subtractive_closure(SubStructure(m43, 0b1001)).members == full_mask(4)
    assert subtractive_closure(SubStructure(m43, full_mask(4))).members == full_mask(4)


def test_closure_idempotent_and_detects_subtractive(B31, B43, BxB):
    for s in (B31, B43, BxB):
        m = s.left_module()
        for sub in enumerate_subsemimodules(m):
            once = subtractive_closure(sub)
            assert subtractive_closure(once).members == once.members
            assert sub.is_subtractive() == (once.members == sub.members)


def test_closure_equals_kernel_of_projection(B31, B43, BxB):
    # independent route: quotient by the Bourne relation, take the kernel
    for s in (B31, B43, BxB):
        m = s.left_module()
        for sub in enumerate_subsemimodules(m):
            _, proj = quotient_by_congruence(m, bourne_congruence(m, sub))
            assert proj.kernel_mask() == sub.subtractive_closure_members


def test_ring_subsemimodules_all_subtractive():
    for n in (2, 3, 4, 5):
        s = make_B(n, 0)
        m = s.left_module()
        for sub in enumerate_subsemimodules(m):
            assert sub.is_subtractive()


# ---------------------------------------------------------------------------
# Bourne congruences and quotients


def test_bourne_classes_b31(B31):
    m = B31.left_module()
    rho = bourne_congruence(m, SubStructure(m, 0b101))
    assert rho.class_of == (0, 1, 0)


def test_bourne_zero_ideal_is_discrete(B31):
    m = B31.left_module()
    rho = bourne_congruence(m, SubStructure(m, 0b001))
    assert rho.is_discrete()


def test_bourne_whole_module_is_universal(B31):
    m = B31.left_module()
    rho = bourne_congruence(m, SubStructure(m, full_mask(3)))
    assert rho.is_universal()


def test_quotient_b31_by_ideal(B31):
    # the two-class quotient gains a zero sum: [1] + [1] = [1 + 1] = [2] = [0]
    m = B31.left_module()
    quot, proj = quotient_by_congruence(m, bourne_congruence(m, SubStructure(m, 0b101)))
    assert quot.order == 2
    nz = 1 - quot.zero
    assert quot.add[nz][nz] == quot.zero
    assert proj.is_surjective()
    assert sorted(bits(proj.kernel_mask())) == [0, 2]


def test_quotient_by_discrete_is_same_module(B31):
    m = B31.left_module()
    quot, proj = quotient_by_congruence(m, discrete_partition(m))
    assert quot.order == m.order
    assert proj.is_injective() and proj.is_surjective()


def test_quotient_by_universal_is_zero(B31):
    m = B31.left_module()
    quot, _ = quotient_by_congruence(m, universal_partition(m))
    assert quot.order == 1


def test_incompatible_partition_rejected(B31):
    m = B31.left_module()
    with pytest.raises(IncompatiblePartition):
        make_partition(m, (0, 0, 1))  # 0 ~ 1 forces everything together


# ---------------------------------------------------------------------------
# congruence closure against a brute-force oracle


def _all_partitions(n):
    if n == 0:
        yield []
        return
    for part in _all_partitions(n - 1):
        for i, block in enumerate(part):
            yield part[:i] + [block + [n - 1]] + part[i + 1:]
        yield part + [[n - 1]]


def _brute_congruences(m):
    """Compatible partitions found by filtering every set partition."""
    out = []
    for part in _all_partitions(m.order):
        class_of = [0] * m.order
        for ci, block in enumerate(part):
            for x in block:
                class_of[x] = ci
        ok = True
        for a in range(m.order):
            for b in range(m.order):
                if class_of[a] != class_of[b]:
                    continue
                for c in range(m.order):
                    if class_of[m.add[a][c]] != class_of[m.add[b][c]]:
                        ok = False
                for s in range(m.base.order):
                    if class_of[m.act[s][a]] != class_of[m.act[s][b]]:
                        ok = False
        if ok:
            out.append(tuple(class_of))
    return out


def test_congruence_closure_oracle(B31):
    m = B31.left_module()
    compatible = _brute_congruences(m)

    def smallest_containing(pairs):
        best = None
        for class_of in compatible:
            if all(class_of[a] == class_of[b] for a, b in pairs):
                size = sum(1 for a in range(3) for b in range(3) if class_of[a] == class_of[b])
                if best is None or size < best[0]:
                    best = (size, class_of)
        return best[1]

    got = congruence_closure(m, [(0, 2)])
    want = smallest_containing([(0, 2)])
    assert [got.related(a, b) for a in range(3) for b in range(3)] == \
           [want[a] == want[b] for a in range(3) for b in range(3)]
    assert got.class_of == (0, 1, 0)

    assert congruence_closure(m, []).is_discrete()
    assert congruence_closure(m, [(0, 1)]).is_universal()


def test_enumerate_congruences_b31(B31):
    m = B31.left_module()
    cons = enumerate_congruences(m)
    assert cons.exhaustive
    got = sorted(c.class_of for c in cons)
    brute = sorted({_normalize(c) for c in _brute_congruences(m)})
    assert got == brute
    assert len(got) == 4


def _normalize(class_of):
    remap = {}
    out = []
    for c in class_of:
        remap.setdefault(c, len(remap))
        out.append(remap[c])
    return tuple(out)


def test_enumerate_congruences_boolean(B):
    cons = enumerate_congruences(B.left_module())
    assert [c.class_of for c in cons] == [(0, 0), (0, 1)]


def test_enumerate_congruences_zero_module(B31):
    cons = enumerate_congruences(zero_module(B31))
    assert len(cons) == 1


def test_congruences_reproduced_from_their_pairs(B31, B43):
    for s in (B31, B43):
        m = s.left_module()
        for rho in enumerate_congruences(m):
            pairs = [(a, b) for a in range(m.order) for b in range(m.order)
                     if rho.related(a, b)]
            assert congruence_closure(m, pairs).class_of == rho.class_of


def test_bourne_generated_by_ideal_pairs(B31, B43, BxB):
    # the congruence generated by N x N is the Bourne relation of N
    for s in (B31, B43, BxB):
        m = s.left_module()
        for sub in enumerate_subsemimodules(m):
            members = list(bits(sub.members))
            pairs = [(a, b) for a in members for b in members]
            assert congruence_closure(m, pairs).class_of == \
                bourne_congruence(m, sub).class_of


# ---------------------------------------------------------------------------
# subsemimodule enumeration


def _brute_subsemimodules(m):
    out = []
    for mask in range(1 << m.order):
        if not mask >> m.zero & 1:
            continue
        fine = all(mask >> m.add[x][y] & 1 for x in bits(mask) for y in bits(mask))
        fine = fine and all(mask >> m.act[s][x] & 1
                            for s in range(m.base.order) for x in bits(mask))
        if fine:
            out.append(mask)
    return sorted(out)


def test_enumerate_subsemimodules_b31(B31):
    m = B31.left_module()
    subs = enumerate_subsemimodules(m)
    assert subs.exhaustive
    assert [sorted(bits(t.members)) for t in subs] == [[0], [0, 2], [0, 1, 2]]


def test_enumerate_subsemimodules_b43_matches_brute_force(B43):
    # the principal ideal of 2 wraps onto {0, 2, 3}: four ideals in total
    m = B43.left_module()
    subs = enumerate_subsemimodules(m)
    assert [t.members for t in subs] == _brute_subsemimodules(m)
    assert [sorted(bits(t.members)) for t in subs] == \
           [[0], [0, 3], [0, 2, 3], [0, 1, 2, 3]]


def test_subtractive_only_filter_agrees(B31, B43, BxB):
    for s in (B31, B43, BxB):
        m = s.left_module()
        fast = [t.members for t in enumerate_subsemimodules(m, subtractive_only=True)]
        slow = [t.members for t in enumerate_subsemimodules(m) if t.is_subtractive()]
        assert fast == slow


def test_subtractive_b43_trivial(B43):
    m = B43.left_module()
    assert [t.members for t in enumerate_subsemimodules(m, subtractive_only=True)] == \
           [0b0001, 0b1111]


def test_zero_module_has_one_subsemimodule(B31):
    subs = enumerate_subsemimodules(zero_module(B31))
    assert len(subs) == 1


def test_limit_marks_non_exhaustive(B43):
    m = B43.left_module()
    subs = enumerate_subsemimodules(m, Limits(max_results=2))
    assert not subs.exhaustive
    assert len(subs) <= 2


# ---------------------------------------------------------------------------
# promotion and products


def test_sub_module_roundtrip(B31):
    m = B31.left_module()
    inner, to_parent = sub_module(SubStructure(m, 0b101))
    assert to_parent == (0, 2)
    assert inner.order == 2
    assert inner.add[1][1] == 1  # 2 + 2 = 2 upstairs


def test_product_module_shape(B):
    mb = B.left_module()
    p = product_module(mb, mb)
    assert p.order == 4
    assert p.zero == 0
    assert p.add[1][2] == 3


def test_semiring_congruences_refine_module_congruences():
    # two-sided compatibility only removes relations, never adds them
    from finsemi.auditor import enumerate_semirings

    for s in enumerate_semirings(4):
        as_module = {rho.class_of for rho in enumerate_congruences(s.left_module())}
        as_semiring = {rho.class_of for rho in enumerate_congruences(s)}
        assert as_semiring <= as_module
        if s.commutative:
            assert as_semiring == as_module


def test_substructure_must_be_closed(B31):
    m = B31.left_module()
    with pytest.raises(IncompatiblePartition):
        SubStructure(m, 0b011)  # 1 + 1 = 2 escapes {0, 1}
    with pytest.raises(IncompatiblePartition):
        SubStructure(m, 0b100)  # missing zero
