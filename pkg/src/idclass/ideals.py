"""Normalized ideals of a numerical semigroup, handled through Apéry tuples.

An ideal E with min(E) = 0 is determined by w_i(E), the least element of E
congruent to i modulo the multiplicity m of S.  All set operations reduce to
componentwise arithmetic on these tuples.
"""

from __future__ import annotations

from functools import cached_property, total_ordering
from typing import Iterable, Sequence

from idclass.errors import BadResidues, EmptyForN, NoGaps, ParentMismatch
from idclass.semigroup import NumericalSemigroup, membership


@total_ordering
class IdealZ:
    __slots__ = ("parent", "apery", "kunz", "__dict__")

    def __init__(self, parent: NumericalSemigroup, apery: Sequence[int]):
        m = parent.multiplicity
        self.parent = parent
        self.apery = tuple(int(w) for w in apery)
        self.kunz = tuple((self.apery[i] - i) // m for i in range(1, m))

    @classmethod
    def from_kunz(cls, parent: NumericalSemigroup, kunz: Sequence[int]) -> "IdealZ":
        m = parent.multiplicity
        return cls(parent, (0,) + tuple(k * m + i for i, k in enumerate(kunz, 1)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealZ):
            return NotImplemented
        return self.kunz == other.kunz and self.parent == other.parent

    def __lt__(self, other: "IdealZ") -> bool:
        return self.kunz < other.kunz

    def __hash__(self) -> int:
        return hash(self.kunz)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.min_generators)) + "}+S"

    def __add__(self, other: "IdealZ") -> "IdealZ":
        return add(self, other)

    def __contains__(self, x: int) -> bool:
        m = self.parent.multiplicity
        return x >= 0 and x >= self.apery[x % m]

    @cached_property
    def min_generators(self) -> tuple[int, ...]:
        """Apéry elements not lying above another Apéry element under <=_S."""
        S = self.parent
        ap = self.apery
        keep = [
            w for w in ap
            if not any(v != w and membership(S, w - v) for v in ap)
        ]
        return tuple(sorted(keep))

    @property
    def label(self) -> str:
        return "{" + ",".join(map(str, self.min_generators)) + "}"

    def to_json(self) -> dict:
        return {
            "kunz": list(self.kunz),
            "generators": list(self.min_generators),
            "apery": list(self.apery),
        }


def _same_parent(I: IdealZ, J: IdealZ) -> None:
    if I.parent is not J.parent and I.parent != J.parent:
        raise ParentMismatch(f"{I.parent!r} != {J.parent!r}")


def ideal_from_generators(S: NumericalSemigroup, xs: Iterable[int]) -> IdealZ:
    """The ideal ({x - min(xs)} for x in xs) + S."""
    xs = sorted(set(int(x) for x in xs))
    if not xs:
        raise ValueError("an ideal needs at least one generator")
    lo = xs[0]
    xs = [x - lo for x in xs]
    m = S.multiplicity
    ap = S.apery
    return IdealZ(S, [min(x + ap[(i - x) % m] for x in xs) for i in range(m)])


def validate_apery(S: NumericalSemigroup, A: Sequence[int]) -> bool:
    """True iff ``A`` is the Apéry tuple of the ideal A + S."""
    m = S.multiplicity
    if len(A) != m or A[0] != 0 or any(a < 0 or a % m != i for i, a in enumerate(A)):
        raise BadResidues(f"{list(A)} is not a residue-indexed tuple with A[0]=0")
    ap = S.apery
    return all(A[i] + ap[j] >= A[(i + j) % m] for i in range(m) for j in range(m))


def add(I: IdealZ, J: IdealZ) -> IdealZ:
    _same_parent(I, J)
    m = I.parent.multiplicity
    a, b = I.apery, J.apery
    return IdealZ(I.parent, [min(a[k] + b[(i - k) % m] for k in range(m)) for i in range(m)])


def union(I: IdealZ, J: IdealZ) -> IdealZ:
    _same_parent(I, J)
    return IdealZ(I.parent, [min(x, y) for x, y in zip(I.apery, J.apery)])


def intersection(I: IdealZ, J: IdealZ) -> IdealZ:
    _same_parent(I, J)
    return IdealZ(I.parent, [max(x, y) for x, y in zip(I.apery, J.apery)])


def subset(I: IdealZ, J: IdealZ) -> bool:
    """I is contained in J."""
    _same_parent(I, J)
    return all(y <= x for x, y in zip(I.apery, J.apery))


def multiple(E: IdealZ, k: int) -> IdealZ:
    """kE, with 0E = S."""
    out = IdealZ(E.parent, E.parent.apery)
    for _ in range(k):
        out = add(out, E)
    return out


def reduction_number(E: IdealZ) -> int:
    """Least r >= 0 with (r+1)E = rE."""
    prev, cur, r = IdealZ(E.parent, E.parent.apery), E, 0
    while cur != prev:
        prev, cur = cur, add(cur, E)
        r += 1
    return r


def canonical_ideal(S: NumericalSemigroup) -> IdealZ:
    if S.is_N:
        raise EmptyForN("N has no canonical ideal in this setting")
    m = S.multiplicity
    ap = S.apery
    f = S.frobenius % m
    return IdealZ(S, [ap[f] - ap[(f - i) % m] for i in range(m)])


def nu(E: IdealZ) -> int:
    return len(E.min_generators)


def frobenius_of_ideal(E: IdealZ) -> int:
    m = E.parent.multiplicity
    F = max(E.apery) - m
    if F < 0:
        raise NoGaps("E = N has no gaps")
    return F


def ideal_S(S: NumericalSemigroup) -> IdealZ:
    return IdealZ(S, S.apery)


def ideal_N(S: NumericalSemigroup) -> IdealZ:
    return IdealZ(S, range(S.multiplicity))
