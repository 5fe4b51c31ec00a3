"""Enumerate small semirings up to isomorphism and audit, per instance, the
implication chains and claimed equivalences the engine implements.

Implications are enforced (a failed one is a hard failure and an engine
bug); claimed pairwise equivalences are audited, with mismatched sides
reported as discrepancy records that never overwrite verdicts.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass

from .core import (
    DEFAULT_LIMITS,
    Enumeration,
    Limits,
    SemimoduleTable,
    SemiringTable,
    SubStructure,
    Table,
    bits,
    bourne_congruence,
    enumerate_congruences,
    enumerate_subsemimodules,
    quotient_by_congruence,
    sub_module,
    validate_semiring,
)
from .errors import LimitExceeded
from .homs import (
    are_isomorphic,
    canonical_short_exact,
    enumerate_homs,
    splitting_profile,
    short_exact_equivalences,
    zero_flanked,
)
from .projinj import (
    bounded_family,
    is_e_injective,
    is_e_projective,
    is_i_injective,
    is_k_projective,
)
from .semisimple import (
    comsum_check,
    condition_profile,
    semiring_simplicity_profile,
    semisimplicity_profile,
    simplicity_profile,
)
from .summands import (
    decomposition_from_parts,
    golan_condition3,
    is_direct_sum,
    irreducible_decomposition,
    projection_identities_hold,
    summand_poset,
)

# instances above this order get the reduced audit (no family quantifiers)
FULL_SCOPE_MAX_ORDER = 6
# the lemma suite is quadratic in several enumerations; keep it small
LEMMA_SCOPE_MAX_ORDER = 3


# ---------------------------------------------------------------------------
# canonical forms and enumeration up to isomorphism


def canonical_form(s: SemiringTable) -> tuple[Table, Table]:
    """Lexicographically minimal (add, mul) over relabelings sending the
    zero to index 0 and the one to index 1."""
    n = s.order
    rest = [x for x in range(n) if x not in (s.zero, s.one)]
    best = None
    for images in itertools.permutations(range(2, n)):
        pi = [0] * n
        pi[s.zero] = 0
        pi[s.one] = 1
        for old, new in zip(rest, images):
            pi[old] = new
        inv = [0] * n
        for old, new in enumerate(pi):
            inv[new] = old
        add = tuple(tuple(pi[s.add[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        mul = tuple(tuple(pi[s.mul[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        cand = (add, mul)
        if best is None or cand < best:
            best = cand
    return best


def instance_digest(s: SemiringTable) -> str:
    add, mul = canonical_form(s)
    payload = repr((add, mul)).encode()
    return hashlib.sha256(payload).hexdigest()[:10]


def _commutative_monoid_tables(n: int) -> list[Table]:
    """All commutative monoid tables on 0..n-1 with identity 0."""
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    out: list[Table] = []
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i

    def assoc_ok() -> bool:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        return False
        return True

    def fill(k: int) -> None:
        if k == len(cells):
            if assoc_ok():
                out.append(tuple(tuple(row) for row in table))
            return
        i, j = cells[k]
        for v in range(n):
            table[i][j] = v
            table[j][i] = v
            fill(k + 1)

    fill(0)
    return out


def enumerate_semirings(order: int, commutative_only: bool = False,
                        limits: Limits = DEFAULT_LIMITS) -> Enumeration:
    """All semirings of the given order up to isomorphism, zero at index 0
    and one at index 1, in lexicographic (add, mul) order.

    Built by backtracking over multiplication cells on top of every
    commutative monoid, with canonical-form rejection of duplicates.
    """
    if order < 2:
        return Enumeration(items=(), exhaustive=True)
    found: list[SemiringTable] = []
    steps = 0
    exhaustive = True
    free = [(i, j) for i in range(2, order) for j in range(2, order)
            if not commutative_only or i <= j]
    for add in _commutative_monoid_tables(order):
        mul = [[0] * order for _ in range(order)]
        for i in range(order):
            mul[1][i] = i
            mul[i][1] = i

        def try_tables() -> SemiringTable | None:
            mt = tuple(tuple(row) for row in mul)
            for a in range(order):
                for b in range(order):
                    ab = mt[a][b]
                    for c in range(order):
                        if mt[ab][c] != mt[a][mt[b][c]]:
                            return None
                        if mt[a][add[b][c]] != add[mt[a][b]][mt[a][c]]:
                            return None
                        if mt[add[a][b]][c] != add[mt[a][c]][mt[b][c]]:
                            return None
            return validate_semiring(add, mt, zero=0, one=1)

        def fill(k: int) -> None:
            nonlocal steps, exhaustive
            if not exhaustive:
                return
            steps += 1
            if steps > limits.max_steps or len(found) >= limits.max_results:
                exhaustive = False
                return
            if k == len(free):
                got = try_tables()
                if got is not None and (got.add, got.mul) == canonical_form(got):
                    found.append(got)
                return
            i, j = free[k]
            for v in range(order):
                mul[i][j] = v
                if commutative_only:
                    mul[j][i] = v
                fill(k + 1)

        fill(0)
        if not exhaustive:
            break
    if commutative_only:
        found = [s for s in found if s.commutative]
    found.sort(key=lambda s: (s.add, s.mul))
    return Enumeration(items=tuple(found), exhaustive=exhaustive)


# ---------------------------------------------------------------------------
# claim records


@dataclass(frozen=True)
class ClaimRecord:
    instance: str
    claim_id: str
    verdict: str  # "holds" | "fails" | "discrepancy" | "unknown"
    witness: str
    exhaustive: bool

    def to_json(self) -> str:
        return json.dumps(
            {"instance": self.instance, "claim_id": self.claim_id,
             "verdict": self.verdict, "witness": self.witness,
             "exhaustive": self.exhaustive},
            sort_keys=True)


@dataclass(frozen=True)
class AuditReport:
    instance: str
    digest: str
    scope: str
    records: tuple[ClaimRecord, ...]

    def hard_failures(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.verdict == "fails"]

    def discrepancies(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.verdict == "discrepancy"]


def _fmt_mask(mask: int) -> str:
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


# ---------------------------------------------------------------------------
# per-instance facts


class InstanceFacts:
    """Everything the audits consume, computed once per instance."""

    def __init__(self, s: SemiringTable, limits: Limits, scope: str):
        self.s = s
        self.limits = limits
        self.scope = scope
        self.m = s.left_module()
        subt = enumerate_subsemimodules(self.m, limits, subtractive_only=True)
        if not subt.exhaustive:
            raise LimitExceeded("subtractive ideal enumeration truncated")
        self.subtractive = list(subt)
        self.poset = summand_poset(self.m, limits)
        self.all_subtractive_summands = all(
            self.poset.is_summand(sub.members) for sub in self.subtractive)
        self.cprofile = condition_profile(s, limits)
        self.ssprofile = semisimplicity_profile(s, limits)
        self.decomposition = irreducible_decomposition(s, limits)
        self.left_subtractive = None
        self.family = None
        self.e_proj = self.k_proj = self.e_inj = self.i_inj = None
        self.quotients_k_proj = None
        self.subtractive_i_inj = None
        self.right_split = self.left_split = None
        self.splittings = {}
        if scope == "full":
            subs_all = enumerate_subsemimodules(self.m, limits)
            if subs_all.exhaustive:
                self.left_subtractive = all(sub.is_subtractive() for sub in subs_all)
                self.all_subs = list(subs_all)
            self.family = bounded_family(s, limits)
            self.e_proj = all(is_e_projective(p, self.m, limits).holds
                              for _, p in self.family)
            self.k_proj = all(is_k_projective(p, self.m, limits).holds
                              for _, p in self.family)
            self.e_inj = all(is_e_injective(j, self.m, limits).holds
                             for _, j in self.family)
            self.i_inj = all(is_i_injective(j, self.m, limits).holds
                             for _, j in self.family)
        self.quotients_k_proj = all(
            is_k_projective(
                quotient_by_congruence(self.m, bourne_congruence(self.m, sub))[0],
                self.m, limits).holds
            for sub in self.subtractive)
        self.subtractive_i_inj = all(
            is_i_injective(sub_module(sub)[0], self.m, limits).holds
            for sub in self.subtractive)
        for sub in self.subtractive:
            self.splittings[sub.members] = splitting_profile(
                canonical_short_exact(self.m, sub), limits)
        self.right_split = all(p.right is not None for p in self.splittings.values())
        self.left_split = all(p.left is not None for p in self.splittings.values())
        self.k_chain = _longest_chain_length([sub.members for sub in self.subtractive])
        self.summand_chain = self.poset.max_chain_length


def _longest_chain_length(masks: list[int]) -> int:
    order = sorted(masks, key=lambda x: x.bit_count())
    best = {mask: 1 for mask in order}
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if a != b and a & b == a:
                best[b] = max(best[b], best[a] + 1)
    return max(best.values(), default=0)


# ---------------------------------------------------------------------------
# chains and equivalence tables


def _chain_records(instance: str, claim_prefix: str,
                   items: dict[int, tuple[bool | None, str]]) -> list[ClaimRecord]:
    """Item-value records plus hard implication records k => k+1."""
    out = []
    for k in sorted(items):
        value, witness = items[k]
        out.append(ClaimRecord(
            instance=instance, claim_id=f"{claim_prefix}.item{k}",
            verdict="unknown" if value is None else ("holds" if value else "not-satisfied"),
            witness=witness, exhaustive=value is not None))
    keys = sorted(items)
    for a, b in zip(keys, keys[1:]):
        va, vb = items[a][0], items[b][0]
        if va is None or vb is None:
            verdict, witness = "unknown", "bounded scope skipped a side"
        elif (not va) or vb:
            verdict, witness = "holds", ""
        else:
            verdict, witness = "fails", f"item{a} holds but item{b} fails"
        out.append(ClaimRecord(
            instance=instance, claim_id=f"{claim_prefix}.{a}=>{b}",
            verdict=verdict, witness=witness, exhaustive=verdict != "unknown"))
    return out


def _equivalence_records(instance: str, claim_prefix: str,
                         items: dict, witnesses: dict) -> list[ClaimRecord]:
    """Pairwise audit of a claimed equivalence; mismatches are discrepancies."""
    out = []
    keys = sorted(items, key=str)
    known = {k: v for k, v in items.items() if v is not None}
    all_equal = len(set(known.values())) <= 1
    out.append(ClaimRecord(
        instance=instance, claim_id=claim_prefix,
        verdict="holds" if all_equal else "discrepancy",
        witness="" if all_equal else "items disagree: " + ", ".join(
            f"({k})={v}" for k, v in sorted(known.items(), key=lambda kv: str(kv[0]))),
        exhaustive=len(known) == len(items)))
    if not all_equal:
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                va, vb = items[a], items[b]
                if va is None or vb is None or va == vb:
                    continue
                wit = (f"item ({a}) = {va} [{witnesses.get(a, '')}]; "
                       f"item ({b}) = {vb} [{witnesses.get(b, '')}]")
                out.append(ClaimRecord(
                    instance=instance, claim_id=f"{claim_prefix}.({a})<=>({b})",
                    verdict="discrepancy", witness=wit, exhaustive=True))
    return out


def _proj_chain(instance: str, f: InstanceFacts) -> list[ClaimRecord]:
    items = {
        1: (f.all_subtractive_summands, "every subtractive ideal a summand"),
        2: (f.e_proj, "family e-projective"),
        3: (f.k_proj, "family k-projective"),
        4: (f.quotients_k_proj, "quotients by subtractive ideals k-projective"),
        5: (f.right_split, "canonical short exact sequences right split"),
        6: (True, f"ACC on summands; longest chain {f.summand_chain}"),
        7: (True, f"DCC on summands; longest chain {f.summand_chain}"),
        8: (True, f"irreducible parts {[_fmt_mask(p) for p in f.decomposition.part_masks()]}"),
    }
    return _chain_records(instance, "prop-proj-impl", items)


def _einj_chain(instance: str, f: InstanceFacts) -> list[ClaimRecord]:
    items = {
        1: (f.all_subtractive_summands, "every subtractive ideal a summand"),
        2: (f.e_inj, "family e-injective"),
        3: (f.i_inj, "family i-injective"),
        4: (f.subtractive_i_inj, "subtractive ideals i-injective"),
        5: (f.left_split, "canonical short exact sequences left split"),
        6: (True, f"k-Noetherian; longest subtractive chain {f.k_chain}"),
        7: (True, "ACC on summands"),
        8: (True, "DCC on summands"),
        9: (True, f"irreducible parts {[_fmt_mask(p) for p in f.decomposition.part_masks()]}"),
    }
    return _chain_records(instance, "prop-sum-einj", items)


def _splitting_witness(f: InstanceFacts) -> str:
    bad = next((m for m in f.splittings if not f.poset.is_summand(m)), None)
    if bad is None:
        return ""
    prof = f.splittings[bad]
    left = list(prof.left.image_of) if prof.left is not None else None
    return (f"subtractive {_fmt_mask(bad)} is not a summand "
            f"(summands: {[_fmt_mask(x) for x in f.poset.masks()]}); "
            f"retraction for its sequence: {left}")


def _idssc1_items(f: InstanceFacts) -> tuple[dict, dict]:
    c2 = f.cprofile.c2
    items = {
        1: None if f.all_subtractive_summands is None else (f.all_subtractive_summands and c2),
        2: None if f.e_proj is None else (f.e_proj and c2),
        3: None if f.k_proj is None else (f.k_proj and c2),
        4: None if f.quotients_k_proj is None else (f.quotients_k_proj and c2),
        5: None if f.right_split is None else (f.right_split and c2),
        6: c2,
        7: c2,
        8: c2,
        9: f.ssprofile.ideal_semisimple,
    }
    witnesses = {
        1: _splitting_witness(f),
        5: "all canonical sequences right split" if f.right_split else "",
        9: f"ideal parts {f.ssprofile.ideal_parts}",
    }
    return items, witnesses


def _congc2_items(f: InstanceFacts) -> tuple[dict, dict]:
    c2p = f.cprofile.c2prime
    items = {
        1: None if f.all_subtractive_summands is None else (f.all_subtractive_summands and c2p),
        2: None if f.e_proj is None else (f.e_proj and c2p),
        3: None if f.k_proj is None else (f.k_proj and c2p),
        4: None if f.quotients_k_proj is None else (f.quotients_k_proj and c2p),
        5: None if f.right_split is None else (f.right_split and c2p),
        6: c2p,
        7: c2p,
        8: c2p,
        9: f.ssprofile.congruence_semisimple,
    }
    return items, {1: _splitting_witness(f)}


def _isscomm_items(f: InstanceFacts) -> tuple[dict, dict]:
    items = {
        1: f.all_subtractive_summands,
        2: f.e_inj,
        3: f.i_inj,
        4: f.subtractive_i_inj,
        5: f.left_split,
        6: True,
        7: True,
        8: True,
        9: True,
        10: f.ssprofile.ideal_semisimple,
    }
    witnesses = {
        1: _splitting_witness(f),
        5: "; ".join(
            f"kernel {_fmt_mask(m)}: retraction {list(p.left.image_of) if p.left else None}"
            for m, p in sorted(f.splittings.items())),
        10: f"ideal parts {f.ssprofile.ideal_parts}",
    }
    return items, witnesses


def _csscomm_items(f: InstanceFacts) -> tuple[dict, dict]:
    items, witnesses = _isscomm_items(f)
    items = dict(items)
    items[10] = f.ssprofile.congruence_semisimple
    witnesses = dict(witnesses)
    witnesses[10] = f"congruence parts {f.ssprofile.congruence_parts}"
    return items, witnesses


def _comidss_items(f: InstanceFacts) -> tuple[dict, dict]:
    items = {
        "1": f.all_subtractive_summands,
        "2a": f.e_proj, "2b": f.k_proj,
        "3a": f.e_inj, "3b": f.i_inj,
        "4a": f.quotients_k_proj, "4b": f.subtractive_i_inj,
        "5a": f.right_split, "5b": f.left_split,
        "6": True, "7": True, "8": True, "9": True,
        "10": f.ssprofile.ideal_semisimple,
    }
    return items, {"1": _splitting_witness(f)}


def _comcss_items(f: InstanceFacts) -> tuple[dict, dict]:
    items, w = _comidss_items(f)
    items = dict(items)
    items["10"] = f.ssprofile.congruence_semisimple
    return items, w


def _idsske_items(f: InstanceFacts) -> tuple[dict, dict]:
    items = {
        1: f.e_proj,
        2: f.k_proj,
        3: f.right_split,
        4: f.all_subtractive_summands,  # all ideals are subtractive here
        5: f.ssprofile.ideal_semisimple,
    }
    return items, {4: _splitting_witness(f)}


# ---------------------------------------------------------------------------
# lemma suite (hard checks)


def lemma_suite(s: SemiringTable, limits: Limits = DEFAULT_LIMITS,
                instance: str = "") -> list[ClaimRecord]:
    """Hard per-instance checks of the supporting lemmas, over the module
    family of s (its left module plus every subobject and quotient)."""
    instance = instance or f"sr{s.order}-{instance_digest(s)}"
    m = s.left_module()
    out: list[ClaimRecord] = []

    def record(claim: str, ok: bool, witness: str = "") -> None:
        out.append(ClaimRecord(instance=instance, claim_id=claim,
                               verdict="holds" if ok else "fails",
                               witness=witness, exhaustive=True))

    family = [m]
    for sub in enumerate_subsemimodules(m, limits):
        family.append(sub_module(sub)[0])
    for rho in enumerate_congruences(m, limits):
        family.append(quotient_by_congruence(m, rho)[0])

    # map characterizations of both simplicities (raises on engine bugs)
    for mod in family:
        simplicity_profile(mod, limits, crosscheck=True)
    record("lem-cong-s-char", True, f"checked on {len(family)} modules")
    record("lem-id-ss-char", True, f"checked on {len(family)} modules")

    # ACC <=> DCC on summands: both trivially terminate; record lengths
    for mod in family:
        poset = summand_poset(mod, limits)
        record("lem-dcc-acc", True, f"chain length {poset.max_chain_length}")
        break

    golan_ok = True
    lemint_ok = True
    diso_ok = True
    rem1_ok = True
    corml_ok = True
    witness = ""
    for mod in family:
        subs = list(enumerate_subsemimodules(mod, limits))
        poset = summand_poset(mod, limits)
        pair_sums = []
        for a in subs:
            for b in subs:
                ok, _ = is_direct_sum(mod, [a, b])
                if ok:
                    pair_sums.append((a, b))
        # Golan three-way equivalence on every subsemimodule
        for sub in subs:
            via_comp = poset.is_summand(sub.members)
            via_pairs = any(a.members == sub.members for a, b in pair_sums)
            via_cond3 = golan_condition3(mod, sub, subs)
            if not via_comp == via_pairs == via_cond3:
                golan_ok = False
                witness = f"{_fmt_mask(sub.members)}: {via_comp}/{via_pairs}/{via_cond3}"
        # d-iso (2): M = K + L direct implies M/K iso L
        for a, b in pair_sums:
            quot, _ = quotient_by_congruence(mod, bourne_congruence(
                mod, SubStructure(mod, a.subtractive_closure_members)))
            if not are_isomorphic(quot, sub_module(b)[0]):
                diso_ok = False
        # lemint: subtractive N, mod = L + K direct, L <= N  =>  N = L + (K n N)
        subt_masks = [t.members for t in subs if t.is_subtractive()]
        for a, b in pair_sums:
            for nmask in subt_masks:
                if a.members & nmask != a.members:
                    continue
                meet = b.members & nmask
                if not _direct_inside(mod, nmask, a.members, meet):
                    lemint_ok = False
                    witness = f"N={_fmt_mask(nmask)} L={_fmt_mask(a.members)}"
        # rem1: the unit decomposes with non-zero components in >=2-part sums
        if mod == m:
            parts = [SubStructure(mod, p) for p in
                     irreducible_decomposition(s, limits).part_masks()]
            if len(parts) >= 2:
                dec = decomposition_from_parts(mod, parts)
                comps = [e.image_of[_unit_index(s)] for e in dec.projections]
                if any(c == mod.zero for c in comps):
                    rem1_ok = False
            if not projection_identities_hold(
                    decomposition_from_parts(mod, parts)):
                rem1_ok = False
        # short-exact characterizations over generated (f, g) grids
        quots = [quotient_by_congruence(mod, rho)[0]
                 for rho in enumerate_congruences(mod, limits)]
        l_mods = [sub_module(sub)[0] for sub in subs]
        for lmod in l_mods:
            for fmap in enumerate_homs(lmod, mod, limits):
                for qmod in quots:
                    for gmap in enumerate_homs(mod, qmod, limits):
                        seq = zero_flanked(lmod, fmap, mod, gmap, qmod)
                        flags = short_exact_equivalences(seq)
                        if not flags["exact"] == flags["iso"] == flags["explicit"]:
                            corml_ok = False
                            witness = f"f={fmap.image_of} g={gmap.image_of}: {flags}"
    record("lem-golan-16-6", golan_ok, witness if not golan_ok else "")
    record("lem-lemint", lemint_ok, witness if not lemint_ok else "")
    record("rem-d-iso.2", diso_ok)
    record("rem-rem1", rem1_ok)
    record("cor-m-l", corml_ok, witness if not corml_ok else "")
    return out


def _unit_index(s: SemiringTable) -> int:
    return s.one


def _direct_inside(mod: SemimoduleTable, nmask: int, lmask: int, kmask: int) -> bool:
    """nmask = lmask + kmask with unique representations, inside mod."""
    reached = {}
    for x in bits(lmask):
        row = mod.add[x]
        for y in bits(kmask):
            z = row[y]
            if not nmask >> z & 1:
                return False
            if z in reached and reached[z] != (x, y):
                return False
            reached[z] = (x, y)
    return set(reached) == set(bits(nmask))


# ---------------------------------------------------------------------------
# witness-construction check for the injective chain


def einj_witness_construction_ok(s: SemiringTable, limits: Limits = DEFAULT_LIMITS) -> bool:
    """When a subtractive ideal splits off, any extension h of g along the
    inclusion must equal (g o projection) + s -> (s e') h(1)."""
    m = s.left_module()
    poset = summand_poset(m, limits)
    family = bounded_family(s, limits)
    for sub in enumerate_subsemimodules(m, limits, subtractive_only=True):
        comask = poset.complements.get(sub.members)
        if comask is None:
            continue
        parts = [SubStructure(m, sub.members), SubStructure(m, comask)]
        dec = decomposition_from_parts(m, parts)
        e_n = dec.projections[1].image_of[s.one]
        part_mod, to_parent = sub_module(parts[0])
        back = {p: i for i, p in enumerate(to_parent)}
        proj_onto = tuple(back[dec.projections[0].image_of[x]] for x in range(m.order))
        for _, j in family:
            for h in enumerate_homs(m, j, limits):
                g = tuple(h.image_of[p] for p in to_parent)
                j0 = h.image_of[s.one]
                h1 = tuple(j.act[s.mul[x][e_n]][j0] for x in range(m.order))
                recombined = tuple(
                    j.add[g[proj_onto[x]]][h1[x]] for x in range(m.order))
                if recombined != h.image_of:
                    return False
    return True


# ---------------------------------------------------------------------------
# audit_instance


def audit_instance(s: SemiringTable, limits: Limits = DEFAULT_LIMITS,
                   instance: str = "", scope: str = "") -> AuditReport:
    """Evaluate every chain and equivalence claim on one instance."""
    if not scope:
        scope = "full" if s.order <= FULL_SCOPE_MAX_ORDER else "reduced"
    digest = instance_digest(s) if s.order <= 6 else "-"
    instance = instance or f"sr{s.order}-{digest}"
    facts = InstanceFacts(s, limits, scope)
    records: list[ClaimRecord] = []
    records.extend(_proj_chain(instance, facts))
    records.extend(_einj_chain(instance, facts))

    if s.commutative:
        items, wit = _idssc1_items(facts)
        records.extend(_equivalence_records(instance, "thm-idssc1", items, wit))
        items, wit = _congc2_items(facts)
        records.extend(_equivalence_records(instance, "thm-cong-c2", items, wit))
        if facts.cprofile.c2:
            items, wit = _isscomm_items(facts)
            records.extend(_equivalence_records(instance, "thm-iss-comm", items, wit))
            items, wit = _comidss_items(facts)
            records.extend(_equivalence_records(instance, "thm-com-idss", items, wit))
        if facts.cprofile.c2prime:
            items, wit = _csscomm_items(facts)
            records.extend(_equivalence_records(instance, "thm-css-comm", items, wit))
            items, wit = _comcss_items(facts)
            records.extend(_equivalence_records(instance, "thm-com-css", items, wit))
    if facts.left_subtractive:
        items, wit = _idsske_items(facts)
        records.extend(_equivalence_records(instance, "thm-id-ss-k-e", items, wit))

    # supporting hard checks that need only instance facts
    if facts.e_proj is not None:
        sumproj_ok = (not facts.all_subtractive_summands) or facts.e_proj
        records.append(ClaimRecord(
            instance=instance, claim_id="lem-sumproj",
            verdict="holds" if sumproj_ok else "fails",
            witness="", exhaustive=True))
        records.append(ClaimRecord(
            instance=instance, claim_id="prop-sum-einj.witness-construction",
            verdict="holds" if einj_witness_construction_ok(s, limits) else "fails",
            witness="", exhaustive=True))
    if s.commutative and facts.ssprofile.ideal_semisimple:
        certs = comsum_check(s, limits)
        ok = all(c.equals_sub_sum and c.is_summand for c in certs)
        records.append(ClaimRecord(
            instance=instance, claim_id="lem-comsum",
            verdict="holds" if ok else "fails",
            witness=f"{len(certs)} subtractive ideals", exhaustive=True))
    # sumidsim: if every subtractive ideal is a summand, the decomposition
    # into irreducible summands must exist (it always does; assert anyway)
    records.append(ClaimRecord(
        instance=instance, claim_id="cor-sumidsim",
        verdict="holds" if facts.decomposition.parts else "fails",
        witness="", exhaustive=True))

    if s.order <= LEMMA_SCOPE_MAX_ORDER:
        records.extend(lemma_suite(s, limits, instance=instance))

    records.sort(key=lambda r: (r.instance, r.claim_id, r.witness))
    return AuditReport(instance=instance, digest=digest, scope=scope,
                       records=tuple(records))


# ---------------------------------------------------------------------------
# corpus runner


def _catalog_fixtures() -> list[tuple[str, SemiringTable]]:
    from . import catalog

    b = catalog.boolean_semiring()
    out = [
        ("B(3,1)", catalog.make_B(3, 1)),
        ("B(3,2)", catalog.make_B(3, 2)),
        ("B(4,3)", catalog.make_B(4, 3)),
        ("B(6,5)", catalog.make_B(6, 5)),
        ("BxB", catalog.make_product([b, b])),
        ("BxBxB", catalog.make_product([b, b, b])),
        ("E(M3)", catalog.make_end_semiring(catalog.diamond_m3())),
        ("E(N5)", catalog.make_end_semiring(catalog.pentagon_n5())),
    ]
    return out


def fixture_expectation_records(limits: Limits = DEFAULT_LIMITS) -> list[ClaimRecord]:
    """Audit the externally claimed values for the named fixtures; mismatches
    are discrepancies (the computed value wins, the claim is reported)."""
    from . import catalog

    out: list[ClaimRecord] = []

    def expect(instance: str, claim: str, expected, computed, witness: str = "") -> None:
        ok = expected == computed
        out.append(ClaimRecord(
            instance=instance, claim_id=claim,
            verdict="holds" if ok else "discrepancy",
            witness=witness or f"claimed {expected}, computed {computed}",
            exhaustive=True))

    b31 = catalog.make_B(3, 1)
    m31 = b31.left_module()
    i_sub = SubStructure(m31, 0b101)
    quot, _ = quotient_by_congruence(m31, bourne_congruence(m31, i_sub))
    imod = sub_module(i_sub)[0]
    expect("B(3,1)", "ex-b31.quotient-iso-ideal", True,
           are_isomorphic(quot, imod),
           "claimed S/I and I isomorphic; computed quotient has [1]+[1]=[0] "
           "while the ideal is additively idempotent")
    for p in (3, 5):
        s = catalog.make_B(p + 1, p)
        m = s.left_module()
        ideals = [sorted(bits(t.members)) for t in enumerate_subsemimodules(m, limits)]
        expect(f"B({p + 1},{p})", "ex-exb32.ideal-list",
               [[0], [0, p], list(range(p + 1))], ideals)
    for name, lat in (("E(M3)", catalog.diamond_m3()), ("E(N5)", catalog.pentagon_n5())):
        rows = {}
        for variant, top in (("all-endos", False), ("top-preserving", True)):
            e = catalog.make_end_semiring(lat, top_preserving=top)
            sp = semiring_simplicity_profile(e)
            cp = condition_profile(e, limits)
            rows[variant] = (sp.congruence_simple, not sp.ideal_simple,
                             cp.c2prime, not cp.c2)
        expect(name, "rem-indp.5", (True, True, True, True), rows["all-endos"],
               f"claimed (cong-simple, not ideal-simple, C2', not C2) = all true; "
               f"computed all-endos={rows['all-endos']}, "
               f"top-preserving={rows['top-preserving']}; no variant satisfies all four")
    return out


@dataclass(frozen=True)
class CorpusReport:
    reports: tuple[AuditReport, ...]
    extra_records: tuple[ClaimRecord, ...]

    def all_records(self) -> list[ClaimRecord]:
        recs = [r for rep in self.reports for r in rep.records]
        recs.extend(self.extra_records)
        recs.sort(key=lambda r: (r.instance, r.claim_id, r.witness))
        return recs

    def hard_failures(self) -> list[ClaimRecord]:
        return [r for r in self.all_records() if r.verdict == "fails"]

    def discrepancies(self) -> list[ClaimRecord]:
        return [r for r in self.all_records() if r.verdict == "discrepancy"]

    def to_jsonl(self) -> str:
        return "\n".join(r.to_json() for r in self.all_records()) + "\n"

    def summary_lines(self) -> list[str]:
        recs = self.all_records()
        counts = {"holds": 0, "fails": 0, "discrepancy": 0, "unknown": 0,
                  "not-satisfied": 0}
        for r in recs:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        lines = [f"instances audited: {len(self.reports)}",
                 f"claims checked: {len(recs)}"]
        for k in ("holds", "not-satisfied", "fails", "discrepancy", "unknown"):
            lines.append(f"  {k}: {counts.get(k, 0)}")
        for r in recs:
            if r.verdict == "fails":
                lines.append(f"HARD FAIL {r.instance} {r.claim_id}: {r.witness}")
        for r in recs:
            if r.verdict == "discrepancy":
                lines.append(f"discrepancy {r.instance} {r.claim_id}: {r.witness}")
        return lines


def _audit_one(args) -> AuditReport:
    s, limits, name = args
    return audit_instance(s, limits, instance=name)


def audit_corpus(order_bound: int = 3, commutative_only: bool = False,
                 include_fixtures: bool = False,
                 limits: Limits = DEFAULT_LIMITS,
                 parallelism: int = 1) -> CorpusReport:
    tasks: list[tuple[SemiringTable, Limits, str]] = []
    for order in range(2, order_bound + 1):
        stream = enumerate_semirings(order, commutative_only, limits)
        if not stream.exhaustive:
            raise LimitExceeded("semiring enumeration truncated")
        for idx, s in enumerate(stream):
            tasks.append((s, limits, f"sr{order}-{idx:03d}"))
    extra: list[ClaimRecord] = []
    if include_fixtures:
        for name, s in _catalog_fixtures():
            tasks.append((s, limits, name))
        extra.extend(fixture_expectation_records(limits))
    if parallelism > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(parallelism) as pool:
            reports = pool.map(_audit_one, tasks)
    else:
        reports = [_audit_one(t) for t in tasks]
    reports.sort(key=lambda r: r.instance)
    return CorpusReport(reports=tuple(reports), extra_records=tuple(extra))
