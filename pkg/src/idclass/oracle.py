"""Brute-force reference implementations.

Nothing here reuses the Apéry-tuple calculus of :mod:`idclass.ideals`; sets
are materialized as Python-int bitmasks over [0, F(S)] with the tail
F(S)+1+N implicit, and semigroup membership is recomputed from the generators
by plain reachability.  Slow on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from idclass.errors import EmptyForN, ParentMismatch
from idclass.ideals import IdealZ
from idclass.semigroup import NumericalSemigroup


@lru_cache(maxsize=None)
def _expand(gens: tuple[int, ...]) -> tuple[int, tuple[bool, ...]]:
    """Frobenius number and membership table on [0, F] by reachability."""
    bound = gens[0] * gens[-1] + 1
    reach = [False] * (bound + 1)
    reach[0] = True
    for x in range(1, bound + 1):
        reach[x] = any(x >= g and reach[x - g] for g in gens)
    frob = max((x for x in range(bound + 1) if not reach[x]), default=-1)
    return frob, tuple(reach[: frob + 1])


def naive_members(S: NumericalSemigroup) -> tuple[int, tuple[bool, ...]]:
    return _expand(tuple(S.min_generators))


def naive_in(S: NumericalSemigroup, x: int) -> bool:
    frob, table = naive_members(S)
    return x > frob or (x >= 0 and table[x])


@dataclass(frozen=True)
class BitsetIdeal:
    """E ∩ [0, F(S)] as a bitmask; every integer above F(S) is implicitly in E."""

    parent: NumericalSemigroup
    mask: int

    @property
    def width(self) -> int:
        return naive_members(self.parent)[0] + 1

    def __contains__(self, x: int) -> bool:
        return x >= self.width or (x >= 0 and bool(self.mask >> x & 1))

    def elements(self) -> list[int]:
        return [x for x in range(self.width) if self.mask >> x & 1]


@dataclass(frozen=True)
class GapPoset:
    gaps: tuple[int, ...]
    le: tuple[tuple[bool, ...], ...]  # le[a][b]: gaps[a] <=_S gaps[b]

    def minimals(self) -> list[int]:
        n = len(self.gaps)
        return [self.gaps[b] for b in range(n) if not any(self.le[a][b] for a in range(n) if a != b)]

    def maximals(self) -> list[int]:
        n = len(self.gaps)
        return [self.gaps[a] for a in range(n) if not any(self.le[a][b] for b in range(n) if a != b)]


def gap_poset(S: NumericalSemigroup) -> GapPoset:
    frob, table = naive_members(S)
    gaps = tuple(x for x in range(frob + 1) if not table[x])
    le = tuple(tuple(naive_in(S, b - a) for b in gaps) for a in gaps)
    return GapPoset(gaps, le)


def antichains(P: GapPoset) -> list[tuple[int, ...]]:
    """Every antichain of P, the empty one included."""
    n = len(P.gaps)
    out: list[tuple[int, ...]] = []

    def grow(start: int, chosen: list[int]) -> None:
        out.append(tuple(P.gaps[i] for i in chosen))
        for k in range(start, n):
            if all(not P.le[k][c] and not P.le[c][k] for c in chosen):
                chosen.append(k)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def closure(S: NumericalSemigroup, gens) -> BitsetIdeal:
    """({0} ∪ gens) + S, marking x + s for every s in S ∩ [0, F]."""
    frob, table = naive_members(S)
    mask = 0
    for x in {0, *gens}:
        for s in range(frob + 1):
            if table[s] and x + s <= frob:
                mask |= 1 << (x + s)
    return BitsetIdeal(S, mask)


def to_ideal(E: BitsetIdeal) -> IdealZ:
    S = E.parent
    m = S.multiplicity
    ap = []
    for i in range(m):
        x = i
        while x not in E:
            x += m
        ap.append(x)
    return IdealZ(S, ap)


def from_ideal(E: IdealZ) -> BitsetIdeal:
    S = E.parent
    width = naive_members(S)[0] + 1
    mask = 0
    for x in range(width):
        if x in E:
            mask |= 1 << x
    return BitsetIdeal(S, mask)


def enumerate_by_antichains(S: NumericalSemigroup) -> list[IdealZ]:
    return [to_ideal(closure(S, X)) for X in antichains(gap_poset(S))]


def antichain_generators(S: NumericalSemigroup) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Map Kunz tuple -> (0, *antichain) for every ideal of S."""
    return {
        to_ideal(closure(S, X)).kunz: tuple(sorted((0, *X)))
        for X in antichains(gap_poset(S))
    }


def bitset_add(I: BitsetIdeal, J: BitsetIdeal) -> BitsetIdeal:
    """Minkowski sum truncated to [0, F(S)]; tails only reach past F(S)."""
    if I.parent != J.parent:
        raise ParentMismatch(f"{I.parent!r} != {J.parent!r}")
    full = (1 << I.width) - 1
    mask = 0
    for x in I.elements():
        mask |= (J.mask << x) & full
    return BitsetIdeal(I.parent, mask)


def naive_reduction(E: BitsetIdeal) -> int:
    prev = closure(E.parent, ())
    cur, r = E, 0
    while cur.mask != prev.mask:
        prev, cur = cur, bitset_add(cur, E)
        r += 1
    return r


def naive_canonical(S: NumericalSemigroup) -> BitsetIdeal:
    """Bit x set iff F - x is not in S."""
    frob, _ = naive_members(S)
    if frob < 0:
        raise EmptyForN("N has no canonical ideal in this setting")
    mask = 0
    for x in range(frob + 1):
        if not naive_in(S, frob - x):
            mask |= 1 << x
    return BitsetIdeal(S, mask)


def naive_pseudo_frobenius(S: NumericalSemigroup) -> list[int]:
    """{f not in S : f + (S minus 0) inside S}, scanning f over [-F, F]."""
    frob, _ = naive_members(S)
    positive = [s for s in range(1, frob + S.multiplicity + 1) if naive_in(S, s)]
    return [
        f for f in range(-frob, frob + 1)
        if not naive_in(S, f) and all(naive_in(S, f + s) for s in positive)
    ]


def naive_is_irreducible(S: NumericalSemigroup) -> bool:
    """S is maximal among semigroups not containing F(S).

    Tries every non-empty set A of gaps other than F and asks whether S ∪ A is
    closed under addition.
    """
    frob, _ = naive_members(S)
    if frob < 0:
        raise EmptyForN("N is not irreducible in this sense")
    others = [g for g in gap_poset(S).gaps if g != frob]
    for r in range(1, len(others) + 1):
        for A in combinations(others, r):
            T = set(A)

            def inside(x: int) -> bool:
                return naive_in(S, x) or x in T

            if all(inside(a + b) for a in T for b in list(T) + list(range(1, frob + 1)) if inside(b)):
                return False
    return True
