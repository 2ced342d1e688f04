"""Batch verification of the structure theory of I_0(S) against brute force.

:func:`check_semigroup` runs every property on one semigroup and returns the
failures as plain records; :func:`verify` maps it over the genus tree.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from idclass import oracle
from idclass.ideals import (
    IdealZ,
    canonical_ideal,
    ideal_from_generators,
    multiple,
    nu,
    reduction_number,
)
from idclass.monoid import (
    QuarkProfile,
    class_monoid,
    covered_by_N,
    idempotents,
    is_closed_under_addition,
    is_cyclic,
    irreducibility_via_quarks,
    longest_chain,
    maximals_below_N,
    minimals_above_S,
    pf_minimal_ideals,
    symmetric_split,
    verify_bounds,
)
from idclass.semigroup import (
    NumericalSemigroup,
    Symmetry,
    classify_symmetry,
    enumerate_by_genus,
    from_generators,
    membership,
    pseudo_frobenius,
    special_gaps,
    unitary_extensions,
)

EXHAUSTIVE_GENUS = 8
SAMPLED_PAIRS = 2000
IRREDUCIBLE_ORACLE_GENUS = 6
ASSOCIATIVITY_LIMIT = 300


@dataclass
class Outcome:
    generators: tuple[int, ...]
    genus: int
    size: int = 0
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    improved_bound_attained: bool = False

    def check(self, name: str, ok, detail="") -> bool:
        self.checks += 1
        if not ok:
            self.failures.append({
                "generators": list(self.generators),
                "check": name,
                "detail": str(detail),
            })
        return bool(ok)


def _pairs(n: int, exhaustive: bool, seed: int):
    if exhaustive:
        return [(a, b) for a in range(n) for b in range(a, n)]
    rng = np.random.default_rng(seed)
    return [tuple(map(int, p)) for p in rng.integers(0, n, size=(SAMPLED_PAIRS, 2))]


def _check_core(S: NumericalSemigroup, out: Outcome) -> None:
    g, m = S.genus, S.multiplicity
    frob, _ = oracle.naive_members(S)
    out.check("frobenius_matches_naive", frob == S.frobenius, (frob, S.frobenius))
    out.check(
        "membership_matches_naive",
        all(membership(S, x) == oracle.naive_in(S, x) for x in range(-2, S.conductor + m + 1)),
    )
    out.check("genus_is_kunz_sum", g == sum(S.kunz), S.kunz)
    prod = 1
    for k in S.kunz:
        prod *= k + 1
    out.check("power_dominates_kunz_product", 2 ** g >= prod, (g, prod))
    if S.is_N:
        return
    pf = pseudo_frobenius(S)
    out.check("pf_matches_definition", pf == oracle.naive_pseudo_frobenius(S), pf)
    out.check("type_at_most_m_minus_1", len(pf) <= m - 1, (len(pf), m))
    P = oracle.gap_poset(S)
    out.check("gap_minimals", sorted(P.minimals()) == list(range(1, m)), P.minimals())
    out.check("gap_maximals_are_pf", sorted(P.maximals()) == pf, P.maximals())
    if g <= IRREDUCIBLE_ORACLE_GENUS:
        naive = oracle.naive_is_irreducible(S)
        sym = classify_symmetry(S)
        expect = Symmetry.NEITHER
        if naive:
            expect = Symmetry.SYMMETRIC if S.frobenius % 2 else Symmetry.PSEUDO_SYMMETRIC
        out.check("symmetry_matches_maximality", sym is expect, (sym.value, expect.value))


def _check_oracle(S, M, out: Outcome) -> None:
    n = len(M)
    fast = [E.kunz for E in M.ideals]
    slow = oracle.antichain_generators(S)
    out.check("enumeration_matches_antichains", set(fast) == set(slow) and len(fast) == len(slow),
              (len(fast), len(slow)))
    out.check(
        "min_generators_are_antichains",
        all(slow.get(E.kunz) == E.min_generators for E in M.ideals),
    )
    masks = [oracle.from_ideal(E) for E in M.ideals]
    out.check("bitset_roundtrip", all(oracle.to_ideal(b) == E for b, E in zip(masks, M.ideals)))
    table = M.add_table
    exhaustive = S.genus <= EXHAUSTIVE_GENUS
    bad = [
        (a, b) for a, b in _pairs(n, exhaustive, seed=sum(S.min_generators))
        if oracle.bitset_add(masks[a], masks[b]).mask != masks[int(table[a, b])].mask
    ]
    out.check("add_matches_bitset", not bad, bad[:3])
    incl = M.inclusion
    bad = [
        (a, b) for a, b in _pairs(n, exhaustive, seed=sum(S.min_generators) + 1)
        if bool(incl[a, b]) != (masks[a].mask & ~masks[b].mask == 0)
        or bool(incl[b, a]) != (masks[b].mask & ~masks[a].mask == 0)
    ]
    out.check("inclusion_matches_bitset", not bad, bad[:3])
    cls = M.classification
    idx = range(n) if exhaustive else sorted({a for a, _ in _pairs(n, False, sum(S.min_generators) + 2)})
    bad = [i for i in idx if oracle.naive_reduction(masks[i]) != cls[i].reduction_number]
    out.check("reduction_matches_naive", not bad, bad[:3])
    bad = [i for i in idx[:64] if reduction_number(M.ideals[i]) != cls[i].reduction_number]
    out.check("reduction_table_matches_iteration", not bad, bad[:3])
    if not S.is_N:
        K = canonical_ideal(S)
        naive = oracle.to_ideal(oracle.naive_canonical(S))
        F = S.frobenius
        known = ideal_from_generators(S, [F - f for f in pseudo_frobenius(S)])
        out.check("canonical_three_ways", K == naive == known, (K, naive, known))
        m = S.multiplicity
        f = F % m
        ap = S.apery
        out.check(
            "canonical_apery_characterization",
            all(K.apery[i] + ap[(f - i) % m] == ap[f] for i in range(m)) and K.apery[f] == ap[f],
        )


def _check_monoid(S, M, out: Outcome) -> None:
    n, g, m = len(M), S.genus, S.multiplicity
    table = M.add_table
    top = M.top
    out.check("identity_row", np.array_equal(table[0], np.arange(n)))
    out.check("N_absorbing", bool((table[top] == top).all()))
    out.check("commutative", np.array_equal(table, table.T))
    if n <= ASSOCIATIVITY_LIMIT:
        left = table[table[:, :, None], np.arange(n)[None, None, :]]
        right = table[np.arange(n)[:, None, None], table[None, :, :]]
        out.check("associative", np.array_equal(left, right))
    units = [(a, b) for a, b in zip(*np.nonzero(table == 0))]
    out.check("only_unit_is_S", units == [(0, 0)], units[:3])
    incl = M.inclusion
    out.check("union_inside_sum", all(
        all(min(x, y) >= z for x, y, z in zip(M.ideals[a].apery, M.ideals[b].apery, M.ideals[int(table[a, b])].apery))
        for a, b in _pairs(n, n <= 64, seed=n)
    ))
    out.check("preceq_implies_inclusion", not (M.preceq & ~incl).any())
    if not S.is_N:
        F = S.frobenius
        I = M.find([0, F])
        out.check("frobenius_ideal_idempotent", int(table[I, I]) == I)
    report = verify_bounds(S, M)
    for name, rec in report.items():
        out.check(f"bound:{name}", rec["holds"], rec)
    out.improved_bound_attained = report["improved_lower"]["bound"] == n


def _check_structure(S, M, out: Outcome) -> None:
    g, m = S.genus, S.multiplicity
    if not S.is_N:
        mins = set(minimals_above_S(M))
        out.check("minimals_are_pf_ideals", mins == pf_minimal_ideals(M) and len(mins) == S.type,
                  sorted(mins))
        pf = pseudo_frobenius(S)
        out.check("every_ideal_contains_pf", all(any(f in E for f in pf) for E in M.ideals[1:]))
    maxs = maximals_below_N(M)
    explicit = {
        M.index[IdealZ(S, [i + m if j == i else j for j in range(m)]).kunz]
        for i in range(1, m)
    } if m > 1 else set()
    out.check("maximals_explicit", set(maxs) == explicit and len(maxs) == m - 1, maxs)
    out.check("covered_by_N", set(covered_by_N(M)) == set(maxs), covered_by_N(M))
    out.check("longest_chain_inclusion", longest_chain(M, "inclusion") == g + 1)
    out.check("longest_chain_preceq", longest_chain(M, "preceq") == g + 1)


def _check_classification(S, M, out: Outcome) -> None:
    g = S.genus
    cls = M.classification
    bad = [
        i for i, c in enumerate(cls)
        if (c.atom and not c.quark) or (c.quark and not c.irreducible)
        or (c.prime and not c.irreducible) or (c.quark and not c.idempotent and not c.atom)
    ]
    out.check("flag_implications", not bad, bad[:3])
    out.check("irreducibles_at_least_genus", sum(c.irreducible for c in cls) >= g)
    out.check("two_generated_irreducible", all(cls[M.find([0, x])].irreducible for x in S.gaps))
    if S.is_N:
        return
    out.check("minimal_ideals_are_quarks", all(cls[i].quark for i in minimals_above_S(M)))
    iq = {i for i, c in enumerate(cls) if c.quark and c.idempotent}
    sg = {M.find([0, f]) for f in special_gaps(S)}
    out.check("idempotent_quarks_are_special_gaps", iq == sg, (sorted(iq), sorted(sg)))
    ext = {M.index[_as_ideal(S, T).kunz] for T in unitary_extensions(S)}
    out.check("unitary_extensions_are_idempotent_quarks", ext == iq, (sorted(ext), sorted(iq)))
    F = S.frobenius
    fq = M.find([0, F])
    out.check("quark_containing_frobenius",
              all(i == fq for i, c in enumerate(cls) if c.quark and F in M.ideals[i]))
    idem = idempotents(M)
    out.check("idempotents_are_oversemigroups", all(is_closed_under_addition(E) for E in idem))
    sym = classify_symmetry(S)
    profile = irreducibility_via_quarks(S, M)
    expect = {
        Symmetry.SYMMETRIC: QuarkProfile.SYMMETRIC,
        Symmetry.PSEUDO_SYMMETRIC: QuarkProfile.PSEUDO_SYMMETRIC,
        Symmetry.NEITHER: QuarkProfile.NOT_IRREDUCIBLE,
    }[sym]
    nq = sum(c.quark for c in cls)
    out.check("quark_profile_matches_symmetry", profile is expect, (profile.value, sym.value))
    out.check("quark_count_theorem", (nq <= 2) == (sym is not Symmetry.NEITHER), nq)
    out.check("cyclic_iff_2_3", is_cyclic(M) == (S.min_generators == (2, 3)))


def _as_ideal(S: NumericalSemigroup, T: NumericalSemigroup) -> IdealZ:
    """An over-semigroup T of S as an element of I_0(S)."""
    m = S.multiplicity
    ap = []
    for i in range(m):
        x = i
        while not membership(T, x):
            x += m
        ap.append(x)
    return IdealZ(S, ap)


def _check_reduction(S, M, out: Outcome) -> None:
    m = S.multiplicity
    cls = M.classification
    rs = [c.reduction_number for c in cls]
    out.check("reduction_at_most_m_minus_1", max(rs) <= m - 1, max(rs))
    out.check("every_reduction_attained", set(range(1, m)) <= set(rs), sorted(set(rs)))
    out.check("idempotent_iff_reduction_le_1",
              all(c.idempotent == (c.reduction_number <= 1) for c in cls))
    bad = []
    for x in S.gaps:
        k = next(k for k in range(1, m + 1) if membership(S, (k + 1) * x))
        if cls[M.find([0, x])].reduction_number != k:
            bad.append(x)
    out.check("two_generated_reduction", not bad, bad)
    bad = [
        i for i, E in enumerate(M.ideals)
        if all(x <= m for x in E.min_generators)
        and cls[i].reduction_number > m - (len(E.min_generators) - 1)
    ]
    out.check("small_gap_reduction_bound", not bad, bad[:3])
    bad = []
    for i in range(1, m):
        j = M.index[IdealZ(S, [i + m if t == i else t for t in range(m)]).kunz]
        if j == 0:
            continue  # only for <2,3>, where this maximal element is S itself
        if cls[j].reduction_number != (1 if i == 1 else 2):
            bad.append(i)
    out.check("maximal_element_reduction", not bad, bad)
    bad = [
        i for i, E in enumerate(M.ideals)
        if any(nu(multiple(E, j)) <= j for j in range(1, cls[i].reduction_number + 1))
    ]
    out.check("nu_of_multiples", not bad, bad[:3])


def _check_symmetric_split(S, out: Outcome) -> None:
    if S.is_N or S.min_generators == (2, 3) or classify_symmetry(S) is not Symmetry.SYMMETRIC:
        return
    rec = symmetric_split(S)
    out.check("symmetric_split_multiplicity", rec["same_multiplicity"])
    out.check("symmetric_split_sets", rec["set_equality"])
    out.check("symmetric_sharpened_bound", rec["size"] <= rec["sharpened"], rec)


def check_semigroup(gens) -> Outcome:
    S = from_generators(gens)
    out = Outcome(S.min_generators, S.genus)
    M = class_monoid(S)
    out.size = len(M)
    for step in (_check_core,):
        step(S, out)
    for step in (_check_oracle, _check_monoid, _check_structure, _check_classification, _check_reduction):
        try:
            step(S, M, out)
        except Exception as exc:  # a crash is a failure record, not an abort
            out.check(f"crash:{step.__name__}", False, repr(exc))
    _check_symmetric_split(S, out)
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("IDCLASS_JOBS", "1")))
    except ValueError:
        return 1


def verify(max_genus: int, jobs: int = 1) -> dict:
    """Run every check over all semigroups of genus <= max_genus."""
    gens = [S.min_generators for S in enumerate_by_genus(max_genus)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(check_semigroup, gens, chunksize=4))
    else:
        outcomes = [check_semigroup(g) for g in gens]
    by_genus: dict[int, dict] = {}
    for o in outcomes:
        rec = by_genus.setdefault(o.genus, {"genus": o.genus, "semigroups": 0, "max_ideals": 0})
        rec["semigroups"] += 1
        rec["max_ideals"] = max(rec["max_ideals"], o.size)
    failures = [f for o in outcomes for f in o.failures]
    return {
        "max_genus": max_genus,
        "semigroups": len(outcomes),
        "checks": sum(o.checks for o in outcomes),
        "failures": failures,
        "improved_lower_bound_attained": [
            {"generators": list(o.generators), "genus": o.genus, "ideals": o.size}
            for o in outcomes if o.improved_bound_attained
        ],
        "by_genus": [by_genus[g] for g in sorted(by_genus)],
    }
