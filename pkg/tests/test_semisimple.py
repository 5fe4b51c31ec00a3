"""Simplicity, semisimplicity, condition profiles, comsum certificates."""

import pytest

from finsemi.catalog import diamond_m3, make_B, make_end_semiring, make_product, pentagon_n5
from finsemi.core import SubStructure, bits, enumerate_subsemimodules, full_mask, sub_module
from finsemi.errors import HypothesisUnmet
from finsemi.semisimple import (
    comsum_check,
    condition_profile,
    is_module_congruence_simple,
    is_module_ideal_simple,
    module_test_family,
    semiring_simplicity_profile,
    semisimplicity_profile,
    simplicity_profile,
)


def test_boolean_is_simple_both_ways(B):
    rep = simplicity_profile(B.left_module())
    assert rep.ideal_simple and rep.congruence_simple
    assert rep.crosschecked


def test_b31_is_simple_neither_way(B31):
    rep = simplicity_profile(B31.left_module())
    assert not rep.ideal_simple and not rep.congruence_simple
    assert sorted(bits(rep.ideal_witness.members)) == [0, 2]
    assert rep.congruence_witness is not None
    assert not rep.congruence_witness.is_discrete()
    assert not rep.congruence_witness.is_universal()


def test_zero_module_is_not_simple(B31):
    from finsemi.core import zero_module

    rep = simplicity_profile(zero_module(B31))
    assert not rep.ideal_simple and not rep.congruence_simple


def test_two_element_modules_are_simple_both_ways(B31):
    m = B31.left_module()
    imod = sub_module(SubStructure(m, 0b101))[0]
    assert is_module_ideal_simple(imod)[0]
    assert is_module_congruence_simple(imod)[0]


def test_congruence_simple_implies_trivial_subtractive(B, B31, B43, BxB):
    for s in (B, B31, B43, BxB):
        for mod in module_test_family(s.left_module()):
            if is_module_congruence_simple(mod)[0]:
                subt = enumerate_subsemimodules(mod, subtractive_only=True)
                assert [t.members for t in subt] == [1 << mod.zero, full_mask(mod.order)]


def test_endomorphism_semiring_fixture_simplicities():
    # semiring-level notions: two-sided ideals, two-sided congruences
    for lat in (diamond_m3(), pentagon_n5()):
        rep = semiring_simplicity_profile(make_end_semiring(lat))
        assert rep.congruence_simple
        assert not rep.ideal_simple
        assert rep.ideal_witness_mask is not None


def test_commutative_semiring_simplicity_matches_module_level(B31, B43):
    for s in (B31, B43):
        sr = semiring_simplicity_profile(s)
        mod = simplicity_profile(s.left_module())
        assert sr.ideal_simple == mod.ideal_simple
        assert sr.congruence_simple == mod.congruence_simple


# ---------------------------------------------------------------------------
# semisimplicity


def test_product_semisimple_both_ways(BxB):
    rep = semisimplicity_profile(BxB)
    assert rep.ideal_semisimple and rep.congruence_semisimple
    assert rep.ideal_parts == (0b0011, 0b0101)


def test_b31_not_semisimple(B31):
    rep = semisimplicity_profile(B31)
    assert not rep.ideal_semisimple and not rep.congruence_semisimple
    assert rep.ideal_parts is None


@pytest.mark.parametrize("p", [3, 5])
def test_bp1p_not_semisimple(p):
    rep = semisimplicity_profile(make_B(p + 1, p))
    assert not rep.ideal_semisimple and not rep.congruence_semisimple


def test_simple_parts_are_irreducible_summands(BxB):
    from finsemi.summands import is_irreducible_summand

    rep = semisimplicity_profile(BxB)
    m = BxB.left_module()
    for mask in rep.ideal_parts:
        assert is_irreducible_summand(sub_module(SubStructure(m, mask))[0])


# ---------------------------------------------------------------------------
# C1 / C2 / C2'


def test_condition_profile_b32(B32):
    cp = condition_profile(B32)
    assert (cp.c1, cp.c2, cp.c2prime) == (True, False, False)
    assert cp.c2_witness is not None


def test_condition_profile_b31(B31):
    cp = condition_profile(B31)
    assert (cp.c1, cp.c2) == (False, True)
    assert cp.c1_witness == 0b101
    assert cp.c2prime  # both quotients along maximal subtractive chains are simple


def test_condition_profile_b43(B43):
    cp = condition_profile(B43)
    assert (cp.c1, cp.c2, cp.c2prime) == (True, False, False)


def test_condition_profile_endomorphism_fixtures():
    # computed truth on the default carrier (all join endomorphisms):
    # C2' holds and, against the external claim, C2 holds as well
    for lat in (diamond_m3(), pentagon_n5()):
        cp = condition_profile(make_end_semiring(lat))
        assert cp.c2prime
        assert cp.c2
    # the top-preserving variant does satisfy (C2' and not C2), but it is
    # not a congruence-simple semiring, so no variant matches every claim
    for lat in (diamond_m3(), pentagon_n5()):
        cp = condition_profile(make_end_semiring(lat, top_preserving=True))
        assert not cp.c2 and cp.c2prime
        rep = semiring_simplicity_profile(make_end_semiring(lat, top_preserving=True))
        assert not rep.congruence_simple


# ---------------------------------------------------------------------------
# comsum


def test_comsum_product(BxB):
    certs = comsum_check(BxB)
    assert len(certs) == 4
    assert all(c.equals_sub_sum and c.is_summand for c in certs)


def test_comsum_boolean_trivial(B):
    certs = comsum_check(B)
    assert len(certs) == 2


def test_comsum_triple_product(B):
    certs = comsum_check(make_product([B, B, B]))
    assert len(certs) == 8
    assert all(c.equals_sub_sum and c.is_summand for c in certs)


def test_comsum_requires_semisimple(B31):
    with pytest.raises(HypothesisUnmet):
        comsum_check(B31)


def test_comsum_requires_commutative():
    with pytest.raises(HypothesisUnmet):
        comsum_check(make_end_semiring(diamond_m3()))
