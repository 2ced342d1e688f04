import itertools

import numpy as np
import pytest

from brute import elements
from idclass import oracle
from idclass.errors import EmptyForN, IdentityHasNone, TableMissing
from idclass.ideals import IdealZ, add, ideal_from_generators
from idclass.monoid import (
    QuarkProfile,
    build_table,
    class_monoid,
    classify,
    count_ideals,
    covered_by_N,
    enumerate_ideals,
    hasse,
    idempotents,
    indices_where,
    irreducibility_via_quarks,
    is_closed_under_addition,
    is_cyclic,
    longest_chain,
    maximals_below_N,
    minimal_factorizations,
    minimals_above_S,
    symmetric_split,
    to_dot,
    verify_bounds,
    width_dilworth,
    width_exhaustive,
    width_inclusion,
)
from idclass.semigroup import from_generators, pseudo_frobenius, special_gaps

GOLDEN_357 = [
    # rows and columns in the order 075, 045, 072, 015, 042, 012
    ["075", "045", "072", "015", "042", "012"],
    ["045", "045", "042", "015", "042", "012"],
    ["072", "042", "042", "012", "042", "012"],
    ["015", "015", "012", "012", "012", "012"],
    ["042", "042", "042", "012", "042", "012"],
    ["012", "012", "012", "012", "012", "012"],
]


def gen_sets(M, idxs):
    return {M.ideals[i].min_generators for i in idxs}


def test_golden_table():
    S = from_generators([3, 5, 7])
    M = class_monoid(S)
    name = {"".join(map(str, E.apery)): i for i, E in enumerate(M.ideals)}
    heads = GOLDEN_357[0]
    for r, row in enumerate(GOLDEN_357):
        for c, cell in enumerate(row):
            assert M.add(name[heads[r]], name[heads[c]]) == name[cell]


@pytest.mark.parametrize("gens,n", [([3, 5, 7], 6), ([1], 1), ([5, 6, 8, 9], 20), ([4, 6, 9], 17)])
def test_enumeration_counts(gens, n):
    S = from_generators(gens)
    assert count_ideals(S) == n
    M = enumerate_ideals(S)
    assert len(M) == n
    assert M.ideals[0].apery == S.apery
    assert M.ideals[-1].apery == tuple(range(S.multiplicity))


def test_enumeration_order_and_oracle(genus8):
    for S in genus8[:60]:
        M = enumerate_ideals(S)
        ks = [E.kunz for E in M.ideals]
        assert ks == sorted(ks, reverse=True)
        assert set(ks) == {E.kunz for E in oracle.enumerate_by_antichains(S)}


def test_table_missing():
    M = enumerate_ideals(from_generators([3, 5, 7]))
    with pytest.raises(TableMissing):
        M.require_table()
    with pytest.raises(TableMissing):
        classify(M)
    with pytest.raises(TableMissing):
        hasse(M, "preceq")
    assert hasse(M, "inclusion")


def test_table_rows_and_brute_sums():
    S = from_generators([4, 6, 9])
    M = class_monoid(S)
    T = M.add_table
    n = len(M)
    assert (T[0] == np.arange(n)).all()
    assert (T[M.top] == M.top).all()
    for a, b in itertools.product(range(n), repeat=2):
        assert M.ideals[T[a, b]] == add(M.ideals[a], M.ideals[b])


def test_preceq_refines_inclusion(genus8):
    for S in genus8[:80]:
        M = class_monoid(S)
        assert not (M.preceq & ~M.inclusion).any()
        T = M.add_table
        n = len(M)
        brute = np.zeros((n, n), dtype=bool)
        for a in range(n):
            brute[a, T[a]] = True
        assert (brute == M.preceq).all()


def test_hasse_357():
    S = from_generators([3, 5, 7])
    M = class_monoid(S)
    assert gen_sets(M, minimals_above_S(M)) == {(0, 2), (0, 4)}
    assert pseudo_frobenius(S) == [2, 4]
    assert longest_chain(M, "inclusion") == 4
    assert longest_chain(M, "preceq") == 4
    M1 = class_monoid(from_generators([1]))
    assert hasse(M1, "inclusion") == [] and hasse(M1, "preceq") == []


def test_hasse_edges_are_covers():
    M = class_monoid(from_generators([4, 6, 9]))
    for order in ("inclusion", "preceq"):
        strict = M.strict(order)
        edges = set(hasse(M, order))
        for a, b in itertools.permutations(range(len(M)), 2):
            cover = strict[a, b] and not any(strict[a, c] and strict[c, b] for c in range(len(M)))
            assert ((a, b) in edges) == bool(cover)


def test_structure(genus8):
    for S in genus8[1:]:
        M = class_monoid(S)
        m = S.multiplicity
        assert len(covered_by_N(M)) == m - 1
        maxes = maximals_below_N(M)
        expect = {
            tuple(i + m if j == i else j for j in range(m)) for i in range(1, m)
        }
        assert {M.ideals[i].apery for i in maxes} == expect
        assert gen_sets(M, minimals_above_S(M)) == {(0, f) for f in pseudo_frobenius(S)}


@pytest.mark.parametrize("gens,w", [([3, 5], 2), ([2, 7], 1), ([2, 3], 1), ([1], 1)])
def test_width_examples(gens, w):
    assert width_inclusion(class_monoid(from_generators(gens))) == w


def test_width_large():
    S = from_generators([5, 11, 17, 18])
    M = class_monoid(S)
    assert len(M) == 167
    assert S.genus == len([1, 2, 3, 4, 6, 7, 8, 9, 12, 13, 14, 19, 24]) == 13
    assert width_inclusion(M) == 25


def test_width_methods_agree(genus8):
    for S in genus8:
        M = enumerate_ideals(S)
        if len(M) > 20:
            continue
        strict = M.strict("inclusion")
        w = width_exhaustive(strict)
        assert w == width_dilworth(strict)
        assert w >= S.multiplicity - 1
        if S.genus >= 2:
            assert w >= -(-(len(M) - 2) // (S.genus - 1))


def test_classify_5689():
    S = from_generators([5, 6, 8, 9])
    M = class_monoid(S)
    irr = gen_sets(M, indices_where(M, "irreducible"))
    assert irr == {(0, 1), (0, 2), (0, 3), (0, 4), (0, 7), (0, 1, 3), (0, 3, 4)}
    assert gen_sets(M, indices_where(M, "atom")) == {(0, 3, 4)}
    assert gen_sets(M, indices_where(M, "quark")) == {(0, 3), (0, 4), (0, 7), (0, 3, 4)}
    assert indices_where(M, "prime") == []
    assert irreducibility_via_quarks(S, M) is QuarkProfile.NOT_IRREDUCIBLE


@pytest.mark.parametrize("b", range(3, 23, 2))
def test_classify_2b(b):
    S = from_generators([2, b])
    M = class_monoid(S)
    cls = M.classification
    assert all(c.irreducible and c.prime for c in cls[1:])
    assert not any(c.atom for c in cls)
    assert gen_sets(M, indices_where(M, "quark")) == {(0, b - 2)}
    assert irreducibility_via_quarks(S, M) is QuarkProfile.SYMMETRIC


def test_quarks_6_8_17_19_21():
    M = class_monoid(from_generators([6, 8, 17, 19, 21]))
    assert gen_sets(M, indices_where(M, "quark")) == {
        (0, 2, 4, 5), (0, 10), (0, 11), (0, 13), (0, 15)
    }


def test_quarks_9_to_17():
    S = from_generators(range(9, 18))
    M = class_monoid(S)
    assert S.type == 8
    assert len(M) == 256
    assert len(indices_where(M, "quark")) == 42


def test_classification_brute_force():
    # flags recomputed straight from their definitions on small monoids
    for gens in ([3, 5, 7], [4, 6, 9], [3, 4], [4, 5, 6, 7]):
        M = class_monoid(from_generators(gens))
        T, n = M.add_table, len(M)
        prec = lambda a, b: any(T[a, k] == b for k in range(n))
        for i, c in enumerate(M.classification):
            pairs = [(j, k) for j in range(1, n) for k in range(1, n) if T[j, k] == i]
            assert c.atom == (i != 0 and not pairs)
            assert c.irreducible == (i != 0 and not [p for p in pairs if i not in p])
            assert c.quark == (i != 0 and not any(prec(j, i) for j in range(1, n) if j != i))
            prime = i != 0 and all(
                prec(i, x) or prec(i, y)
                for x in range(n) for y in range(n) if prec(i, T[x, y])
            )
            assert c.prime == prime
            assert c.idempotent == (T[i, i] == i)


def test_idempotents_4_6_9():
    S = from_generators([4, 6, 9])
    M = class_monoid(S)
    idem = idempotents(M)
    assert len(idem) == 12
    assert all(is_closed_under_addition(E) for E in idem)
    assert M.ideals[0] in idem and M.ideals[-1] in idem
    # over-semigroups counted by brute force: closed sets T with S inside T inside N
    gaps = list(S.gaps)
    count = 0
    for r in range(len(gaps) + 1):
        for A in itertools.combinations(gaps, r):
            T = set(elements([4, 6, 9], 40)) | set(A)
            if all(x + y in T for x in T for y in T if x + y < 40):
                count += 1
    assert count == 12


def test_idempotent_quarks_are_special_gaps(genus8):
    for S in genus8[1:]:
        M = class_monoid(S)
        cls = M.classification
        iq = {i for i, c in enumerate(cls) if c.quark and c.idempotent}
        assert iq == {M.find([0, f]) for f in special_gaps(S)}


def test_profiles():
    S = from_generators([2, 21])
    M = class_monoid(S)
    assert irreducibility_via_quarks(S, M) is QuarkProfile.SYMMETRIC
    assert gen_sets(M, indices_where(M, "quark")) == {(0, 19)}
    S = from_generators([2, 3])
    assert irreducibility_via_quarks(S, class_monoid(S)) is QuarkProfile.SYMMETRIC
    S = from_generators([3, 4, 5])
    assert irreducibility_via_quarks(S, class_monoid(S)) is QuarkProfile.PSEUDO_SYMMETRIC
    with pytest.raises(EmptyForN):
        N = from_generators([1])
        irreducibility_via_quarks(N, class_monoid(N))


def test_cyclic():
    assert is_cyclic(class_monoid(from_generators([2, 3])))
    for gens in ([2, 5], [3, 4], [3, 5, 7]):
        assert not is_cyclic(class_monoid(from_generators(gens)))


def _labels(M, facts):
    return {tuple(M.ideals[j].min_generators for j in f) for f in facts}


def test_factorizations_examples():
    M = class_monoid(from_generators([4, 6, 9]))
    facts, _ = minimal_factorizations(M, M.find([0, 2, 5, 7]))
    got = _labels(M, facts)
    assert ((0, 2, 5), (0, 2, 5)) in got
    assert tuple(sorted([(0, 2), (0, 5)])) in {tuple(sorted(f)) for f in got}

    M = class_monoid(from_generators([5, 6, 8, 9]))
    _, lengths = minimal_factorizations(M, M.find([0, 2, 3, 4]))
    assert lengths == [2, 3]

    M = class_monoid(from_generators([5, 16, 17, 18, 19]))
    facts, lengths = minimal_factorizations(M, M.find([0, 1, 2]))
    assert _labels(M, facts) == {((0, 1), (0, 1))}
    assert lengths == [2]

    with pytest.raises(IdentityHasNone):
        minimal_factorizations(M, 0)


def _all_minimal_brute(M, i, max_len=6):
    T = M.add_table
    irr = [j for j, c in enumerate(M.classification) if c.irreducible]

    def total(parts):
        acc = 0
        for p in parts:
            acc = T[acc, p]
        return acc

    sums = {}
    for r in range(1, max_len + 1):
        for parts in itertools.combinations_with_replacement(irr, r):
            if total(parts) == i:
                sums[parts] = True
    out = set()
    for parts in sums:
        subs = {
            tuple(sorted(sub))
            for r in range(1, len(parts))
            for sub in itertools.combinations(parts, r)
        }
        if not any(sub in sums for sub in subs):
            out.add(parts)
    return out


@pytest.mark.parametrize("gens", [[3, 5, 7], [4, 6, 9], [3, 4], [4, 5, 7]])
def test_factorizations_brute(gens):
    M = class_monoid(from_generators(gens))
    for i in range(1, len(M)):
        facts, lengths = minimal_factorizations(M, i)
        assert facts, "every non-unit factors into irreducibles"
        assert set(facts) == _all_minimal_brute(M, i)
        assert lengths == sorted({len(f) for f in facts})


def test_verify_bounds_examples():
    S = from_generators([5, 6, 8, 9])
    rep = verify_bounds(S, class_monoid(S))
    assert rep["kunz_product_upper"] == {"holds": True, "bound": 24, "value": 20}
    assert not rep["kunz_product_equality"]["attained"]
    S = from_generators([3, 5, 7])
    rep = verify_bounds(S, class_monoid(S))
    assert rep["kunz_product_upper"]["bound"] == 6
    assert rep["kunz_product_equality"]["attained"]
    for c in range(2, 9):
        # {0} together with everything from c on
        S = from_generators(range(c, 2 * c))
        M = class_monoid(S)
        assert S.type == c - 1
        assert len(M) == 2 ** S.type
        assert all(v["holds"] for v in verify_bounds(S, M).values())


def test_bounds_hold_everywhere(genus8):
    for S in genus8:
        rep = verify_bounds(S, class_monoid(S))
        assert all(v["holds"] for v in rep.values()), (S, rep)


def test_symmetric_split():
    S = from_generators([3, 5])
    rec = symmetric_split(S)
    assert rec["set_equality"] and rec["same_multiplicity"]
    with pytest.raises(ValueError):
        symmetric_split(from_generators([3, 5, 7]))


def test_symmetric_sharpened_count_is_not_exact():
    # the product formula bounds the count but overshoots for <4,6,9>
    rec = symmetric_split(from_generators([4, 6, 9]))
    assert rec["set_equality"]
    assert rec["size"] == 17
    assert rec["sharpened"] == 19


def test_dot_output():
    M = class_monoid(from_generators([4, 6, 9]))
    text = to_dot(M, "preceq")
    assert text.count("label=") == 17
    assert text.count("style=filled") == 12
    assert text == to_dot(M, "preceq")
    assert to_dot(class_monoid(from_generators([1]))).count("label=") == 1


def _integral_ideals(gens, bound):
    """Integral ideals I of S (I + S inside I, I inside S) given by their elements below bound."""
    S_el = sorted(elements(gens, bound))
    S = from_generators(gens)
    c = S.conductor
    small = [x for x in S_el if x < c + S.multiplicity]
    out = set()
    for r in range(1, len(small) + 1):
        for A in itertools.combinations(small, r):
            I = frozenset(a + s for a in A for s in S_el if a + s < bound)
            out.add(I)
    return S_el, out


@pytest.mark.parametrize("gens", [[2, 3], [3, 4, 5], [3, 5]])
def test_integral_unit_cancellative(gens):
    bound = 30
    S_el, ideals = _integral_ideals(gens, bound)
    S_set = frozenset(S_el)
    cut = bound // 2
    for I in ideals:
        for J in ideals:
            total = frozenset(a + b for a in I for b in J if a + b < bound)
            if {x for x in total if x < cut} == {x for x in I if x < cut}:
                assert {x for x in J if x < cut} == {x for x in S_set if x < cut}
