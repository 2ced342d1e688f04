"""Numerical semigroups and their classical invariants.

A semigroup is stored through its Apéry set with respect to the multiplicity;
every other invariant is derived from it once, at construction time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Sequence

from idclass.errors import EmptyForN, NotMember, NotNumerical


class Symmetry(str, enum.Enum):
    SYMMETRIC = "symmetric"
    PSEUDO_SYMMETRIC = "pseudo_symmetric"
    NEITHER = "neither"


class SemigroupClass(NamedTuple):
    """One class of the class semigroup C(S, N): {minimum} or minimum + N."""

    minimum: int
    infinite: bool


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    min_generators: tuple[int, ...]
    multiplicity: int
    frobenius: int
    conductor: int
    genus: int
    gaps: tuple[int, ...]
    apery: tuple[int, ...]
    kunz: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.apery == other.apery

    def __hash__(self) -> int:
        return hash(self.apery)

    def __repr__(self) -> str:
        return "<" + ",".join(map(str, self.min_generators)) + ">"

    def __contains__(self, x: int) -> bool:
        return membership(self, x)

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    @property
    def is_N(self) -> bool:
        return self.multiplicity == 1

    @cached_property
    def type(self) -> int:
        return len(pseudo_frobenius(self)) if not self.is_N else 0


def _from_apery(apery: Sequence[int]) -> NumericalSemigroup:
    m = len(apery)
    if m == 1:
        return NumericalSemigroup((1,), 1, -1, 0, 0, (), (0,), ())
    frob = max(apery) - m
    gaps = tuple(x for x in range(frob + 1) if x < apery[x % m])
    kunz = tuple((apery[i] - i) // m for i in range(1, m))
    nonzero = [apery[i] for i in range(1, m)]
    # minimal generators: m plus the <=_S-minimal nonzero Apéry elements
    gens = [m]
    for i in range(1, m):
        w = apery[i]
        if not any(v != w and v < w and w - v >= apery[(w - v) % m] for v in nonzero):
            gens.append(w)
    return NumericalSemigroup(
        min_generators=tuple(sorted(gens)),
        multiplicity=m,
        frobenius=frob,
        conductor=frob + 1,
        genus=len(gaps),
        gaps=gaps,
        apery=tuple(apery),
        kunz=kunz,
    )


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Build the canonical record of the semigroup generated by ``gens``.

    Redundant or unsorted generators are accepted; the result carries the
    minimal generating set.
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise NotNumerical(f"generators must be positive integers, got {gens}")
    if reduce(gcd, gens) != 1:
        raise NotNumerical(f"gcd{tuple(gens)} != 1, complement is infinite")
    m = gens[0]
    inf = float("inf")
    w: list = [inf] * m
    w[0] = 0
    # shortest paths on the residue graph mod m; converges in at most m rounds
    changed = True
    while changed:
        changed = False
        for i in range(m):
            if w[i] == inf:
                continue
            for g in gens[1:]:
                j = (i + g) % m
                if w[i] + g < w[j]:
                    w[j] = w[i] + g
                    changed = True
    return _from_apery([int(v) for v in w])


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Build a semigroup from its (finite, closed) gap set.

    The caller guarantees the complement is a monoid; no check is made.
    """
    gapset = set(gaps)
    if not gapset:
        return _from_apery([0])
    m = min(x for x in range(1, max(gapset) + 2) if x not in gapset)
    apery = [0] * m
    for i in range(1, m):
        x = i
        while x in gapset:
            x += m
        apery[i] = x
    return _from_apery(apery)


def membership(S: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        return False
    return x >= S.apery[x % S.multiplicity]


def le_S(S: NumericalSemigroup, a: int, b: int) -> bool:
    """a <=_S b, i.e. b - a lies in S."""
    return membership(S, b - a)


def apery_set(S: NumericalSemigroup, n: int) -> list[int]:
    if n <= 0 or not membership(S, n):
        raise NotMember(f"{n} is not a non-zero element of {S!r}")
    out = []
    for i in range(n):
        x = i
        while not membership(S, x):
            x += n
        out.append(x)
    return out


def _require_proper(S: NumericalSemigroup) -> None:
    if S.is_N:
        raise EmptyForN("undefined for the semigroup N")


def pseudo_frobenius(S: NumericalSemigroup) -> list[int]:
    _require_proper(S)
    m, ap = S.multiplicity, S.apery
    maximal = [
        w for w in ap
        if not any(v != w and membership(S, v - w) for v in ap)
    ]
    return sorted(w - m for w in maximal)


def special_gaps(S: NumericalSemigroup) -> list[int]:
    return [f for f in pseudo_frobenius(S) if membership(S, 2 * f)]


def classify_symmetry(S: NumericalSemigroup) -> Symmetry:
    _require_proper(S)
    if 2 * S.genus == S.frobenius + 1:
        return Symmetry.SYMMETRIC
    if 2 * S.genus == S.frobenius + 2:
        return Symmetry.PSEUDO_SYMMETRIC
    return Symmetry.NEITHER


def is_irreducible(S: NumericalSemigroup) -> bool:
    return classify_symmetry(S) is not Symmetry.NEITHER


def unitary_extensions(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [from_gaps(g for g in S.gaps if g != f) for f in special_gaps(S)]


def class_semigroup_partition(S: NumericalSemigroup) -> list[SemigroupClass]:
    c = S.conductor
    return [SemigroupClass(x, False) for x in range(c)] + [SemigroupClass(c, True)]


def enumerate_by_genus(gmax: int) -> Iterator[NumericalSemigroup]:
    """Yield every numerical semigroup of genus <= gmax exactly once.

    Walks the genus tree depth first: the children of S are S minus one of its
    minimal generators larger than F(S), visited in increasing order of the
    removed generator.
    """
    if gmax < 0:
        return
    stack = [from_generators([1])]
    while stack:
        S = stack.pop()
        yield S
        if S.genus == gmax:
            continue
        kids = [x for x in S.min_generators if x > S.frobenius]
        for x in reversed(kids):
            stack.append(from_gaps(S.gaps + (x,)))
