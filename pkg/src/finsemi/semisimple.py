"""Simplicity and semisimplicity deciders with lemma-based cross-checks,
plus the C1/C2/C2' condition profiles."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_LIMITS,
    CongruencePartition,
    Limits,
    SemimoduleTable,
    SemiringTable,
    SubStructure,
    bits,
    bourne_congruence,
    congruence_closure,
    enumerate_congruences,
    enumerate_subsemimodules,
    full_mask,
    generated_subsemimodule,
    principal_subsemimodule,
    quotient_by_congruence,
    sub_module,
)
from .errors import CrosscheckFailure, HypothesisUnmet, LimitExceeded
from .homs import enumerate_homs
from .summands import SummandPoset, is_direct_sum, summand_poset

# full enumerations and hom cross-checks are only run below this carrier size
CROSSCHECK_MAX_ORDER = 12


# ---------------------------------------------------------------------------
# module-level simplicity


def is_module_ideal_simple(m: SemimoduleTable) -> tuple[bool, SubStructure | None]:
    """Only 0 and M as subsemimodules; witness is an offending proper one.

    Decided through principal subsemimodules: a nonzero proper principal
    one refutes simplicity, and their absence proves it.
    """
    if m.order == 1:
        return False, None
    full = full_mask(m.order)
    for x in range(m.order):
        if x == m.zero:
            continue
        gen = principal_subsemimodule(m, x)
        if gen.members != full:
            return False, gen
    return True, None


def is_module_congruence_simple(m: SemimoduleTable) -> tuple[bool, CongruencePartition | None]:
    """Only the diagonal and the universal relation as congruences."""
    if m.order == 1:
        return False, None
    for a in range(m.order):
        for b in range(a + 1, m.order):
            rho = congruence_closure(m, [(a, b)])
            if not rho.is_universal():
                return False, rho
    return True, None


@dataclass(frozen=True)
class SimplicityReport:
    ideal_simple: bool
    congruence_simple: bool
    ideal_witness: SubStructure | None
    congruence_witness: CongruencePartition | None
    crosschecked: bool


def module_test_family(m: SemimoduleTable, limits: Limits = DEFAULT_LIMITS) -> list[SemimoduleTable]:
    """All quotients of m, all subsemimodules of m (promoted), and m itself."""
    family = [m]
    subs = enumerate_subsemimodules(m, limits)
    if not subs.exhaustive:
        raise LimitExceeded("subsemimodule enumeration truncated")
    for sub in subs:
        family.append(sub_module(sub)[0])
    cons = enumerate_congruences(m, limits)
    if not cons.exhaustive:
        raise LimitExceeded("congruence enumeration truncated")
    for rho in cons:
        family.append(quotient_by_congruence(m, rho)[0])
    return family


def simplicity_profile(m: SemimoduleTable, limits: Limits = DEFAULT_LIMITS,
                       crosscheck: bool | None = None) -> SimplicityReport:
    """Both simplicities, cross-checked two independent ways when feasible.

    The cross-checks are the map characterizations (congruence-simple iff
    every non-zero map out of m is injective; ideal-simple iff every
    non-zero map into m is surjective, both over the quotient/sub family)
    plus full enumerations.  Disagreement is an engine bug, never a math
    outcome.
    """
    ideal, iw = is_module_ideal_simple(m)
    cong, cw = is_module_congruence_simple(m)
    if crosscheck is None:
        crosscheck = m.order <= CROSSCHECK_MAX_ORDER
    if crosscheck:
        subs = enumerate_subsemimodules(m, limits)
        cons = enumerate_congruences(m, limits)
        if subs.exhaustive:
            by_enum = m.order > 1 and len(subs) == 2
            if m.order == 1:
                by_enum = False
            if by_enum != ideal:
                raise CrosscheckFailure("ideal-simplicity routes disagree")
        if cons.exhaustive:
            by_enum = m.order > 1 and len(cons) == 2
            if by_enum != cong:
                raise CrosscheckFailure("congruence-simplicity routes disagree")
        if m.order > 1:
            family = module_test_family(m, limits)
            maps_out_injective = all(
                f.is_injective()
                for other in family
                for f in enumerate_homs(m, other, limits)
                if not f.is_zero()
            )
            if maps_out_injective != cong:
                raise CrosscheckFailure("map characterization of congruence-simplicity disagrees")
            maps_in_surjective = all(
                f.is_surjective()
                for other in family
                for f in enumerate_homs(other, m, limits)
                if not f.is_zero()
            )
            if maps_in_surjective != ideal:
                raise CrosscheckFailure("map characterization of ideal-simplicity disagrees")
    return SimplicityReport(ideal_simple=ideal, congruence_simple=cong,
                            ideal_witness=iw, congruence_witness=cw,
                            crosschecked=crosscheck)


# ---------------------------------------------------------------------------
# semiring-level simplicity (two-sided ideals, semiring congruences)


def _two_sided_principal_mask(s: SemiringTable, x: int) -> int:
    mask = 1 << s.zero | 1 << x
    work = [x]
    while work:
        a = work.pop()
        for b in list(bits(mask)):
            z = s.add[a][b]
            if not mask >> z & 1:
                mask |= 1 << z
                work.append(z)
        for t in range(s.order):
            for z in (s.mul[t][a], s.mul[a][t]):
                if not mask >> z & 1:
                    mask |= 1 << z
                    work.append(z)
    return mask


@dataclass(frozen=True)
class SemiringSimplicityReport:
    ideal_simple: bool
    congruence_simple: bool
    ideal_witness_mask: int | None
    congruence_witness: CongruencePartition | None


def semiring_simplicity_profile(s: SemiringTable) -> SemiringSimplicityReport:
    """Simplicity of the semiring itself: two-sided ideals and semiring
    congruences, both decided through principal generation."""
    ideal = True
    iw = None
    full = full_mask(s.order)
    for x in range(s.order):
        if x == s.zero:
            continue
        mask = _two_sided_principal_mask(s, x)
        if mask != full:
            ideal, iw = False, mask
            break
    cong = True
    cw = None
    for a in range(s.order):
        if not cong:
            break
        for b in range(a + 1, s.order):
            rho = congruence_closure(s, [(a, b)])
            if not rho.is_universal():
                cong, cw = False, rho
                break
    return SemiringSimplicityReport(ideal_simple=ideal, congruence_simple=cong,
                                    ideal_witness_mask=iw, congruence_witness=cw)


# ---------------------------------------------------------------------------
# semisimplicity


@dataclass(frozen=True)
class SemisimplicityReport:
    ideal_semisimple: bool
    congruence_semisimple: bool
    ideal_parts: tuple[int, ...] | None
    congruence_parts: tuple[int, ...] | None


def _search_simple_decomposition(m: SemimoduleTable, poset: SummandPoset,
                                 simple_masks: list[int]) -> tuple[int, ...] | None:
    """First direct-sum decomposition of m into parts drawn from
    ``simple_masks``, in canonical order; None when there is none."""
    full = full_mask(m.order)
    zero_bit = 1 << m.zero

    def rec(chosen: list[int], start: int, span: int):
        if span == full:
            ok, _ = is_direct_sum(m, [SubStructure(m, c) for c in chosen])
            if ok:
                return tuple(chosen)
            return None
        for i in range(start, len(simple_masks)):
            cand = simple_masks[i]
            if any(cand & c != zero_bit for c in chosen):
                continue
            got = rec(chosen + [cand], i + 1, _span_of(m, span, cand))
            if got is not None:
                return got
        return None

    return rec([], 0, zero_bit)


def _span_of(m: SemimoduleTable, span: int, extra: int) -> int:
    out = 0
    for x in bits(span):
        row = m.add[x]
        for y in bits(extra):
            out |= 1 << row[y]
    return out | span | extra


def semisimplicity_profile(s: SemiringTable, limits: Limits = DEFAULT_LIMITS) -> SemisimplicityReport:
    """Search the summand poset for decompositions into simple parts."""
    m = s.left_module()
    poset = summand_poset(m, limits)
    zero_bit = 1 << m.zero
    candidates = [mask for mask in poset.masks() if mask != zero_bit]
    ideal_simple_masks = []
    cong_simple_masks = []
    for mask in candidates:
        part, _ = sub_module(SubStructure(m, mask))
        if is_module_ideal_simple(part)[0]:
            ideal_simple_masks.append(mask)
        if is_module_congruence_simple(part)[0]:
            cong_simple_masks.append(mask)
    ideal_parts = _search_simple_decomposition(m, poset, ideal_simple_masks)
    cong_parts = _search_simple_decomposition(m, poset, cong_simple_masks)
    return SemisimplicityReport(
        ideal_semisimple=ideal_parts is not None,
        congruence_semisimple=cong_parts is not None,
        ideal_parts=ideal_parts,
        congruence_parts=cong_parts,
    )


# ---------------------------------------------------------------------------
# C1 / C2 / C2'


@dataclass(frozen=True)
class ConditionProfile:
    c1: bool
    c2: bool
    c2prime: bool
    c1_witness: int | None
    c2_witness: tuple[int, int] | None
    c2prime_witness: tuple[int, int] | None
    exhaustive: bool


def subtractive_subsemimodules(m: SemimoduleTable, limits: Limits = DEFAULT_LIMITS):
    return enumerate_subsemimodules(m, limits, subtractive_only=True)


def _maximal_proper(masks: list[int], top: int) -> list[int]:
    proper = [a for a in masks if a != top]
    return [a for a in proper
            if not any(b != a and a & b == a for b in proper)]


def condition_profile_for_module(n: SemimoduleTable,
                                 limits: Limits = DEFAULT_LIMITS) -> ConditionProfile:
    """C1/C2/C2' for an arbitrary carrier module ``n``.

    C1: every subtractive subsemimodule is a direct summand.  C2 (C2'):
    for every subtractive M <= n and maximal subtractive L < M, the
    quotient M/L is ideal-simple (congruence-simple).  Maximality is taken
    inside the poset of subtractive subsemimodules of M.
    """
    subt = subtractive_subsemimodules(n, limits)
    exhaustive = subt.exhaustive
    poset = summand_poset(n, limits)
    c1, c1_w = True, None
    for sub in subt:
        if not poset.is_summand(sub.members):
            c1, c1_w = False, sub.members
            break
    c2, c2_w = True, None
    c2p, c2p_w = True, None
    for sub in subt:
        inner, to_parent = sub_module(sub)
        inner_subt = enumerate_subsemimodules(inner, limits, subtractive_only=True)
        exhaustive = exhaustive and inner_subt.exhaustive
        inner_masks = [t.members for t in inner_subt]
        for lmask in _maximal_proper(inner_masks, full_mask(inner.order)):
            quot, _ = quotient_by_congruence(
                inner, bourne_congruence(inner, SubStructure(inner, lmask)))
            pair = (sub.members, sum(1 << to_parent[i] for i in bits(lmask)))
            if c2 and not is_module_ideal_simple(quot)[0]:
                c2, c2_w = False, pair
            if c2p and not is_module_congruence_simple(quot)[0]:
                c2p, c2p_w = False, pair
        if not c2 and not c2p:
            break
    return ConditionProfile(c1=c1, c2=c2, c2prime=c2p, c1_witness=c1_w,
                            c2_witness=c2_w, c2prime_witness=c2p_w,
                            exhaustive=exhaustive)


def condition_profile(s: SemiringTable, limits: Limits = DEFAULT_LIMITS) -> ConditionProfile:
    return condition_profile_for_module(s.left_module(), limits)


# ---------------------------------------------------------------------------
# subtractive ideals versus simple parts in the commutative semisimple case


@dataclass(frozen=True)
class ComsumCertificate:
    ideal_mask: int
    meets: tuple[int, ...]
    equals_sub_sum: bool
    is_summand: bool


def comsum_check(s: SemiringTable, limits: Limits = DEFAULT_LIMITS) -> list[ComsumCertificate]:
    """On a commutative ideal-semisimple semiring, every subtractive ideal
    must equal the direct sum of the simple parts it meets and must be a
    summand.  Returns one certificate per subtractive ideal."""
    if not s.commutative:
        raise HypothesisUnmet("needs a commutative semiring")
    profile = semisimplicity_profile(s, limits)
    if not profile.ideal_semisimple:
        raise HypothesisUnmet("needs an ideal-semisimple semiring")
    m = s.left_module()
    parts = profile.ideal_parts
    poset = summand_poset(m, limits)
    zero_bit = 1 << m.zero
    out = []
    for sub in subtractive_subsemimodules(m, limits):
        meets = tuple(p for p in parts if (p & sub.members) != zero_bit)
        seed = 0
        for p in meets:
            seed |= p
        span = generated_subsemimodule(m, seed | zero_bit)
        out.append(ComsumCertificate(
            ideal_mask=sub.members,
            meets=meets,
            equals_sub_sum=span.members == sub.members,
            is_summand=poset.is_summand(sub.members),
        ))
    return out
