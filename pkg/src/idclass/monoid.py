"""The monoid I_0(S) of normalized ideals, its orders and its elements.

Ideals are enumerated from the Kunz inequality system and indexed in
lexicographically decreasing order of their Kunz tuples, so index 0 is S
(componentwise largest tuple) and the last index is N (all zeros).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from idclass import kernels
from idclass.errors import EmptyForN, IdentityHasNone, TableMissing
from idclass.ideals import IdealZ, ideal_from_generators, nu
from idclass.semigroup import (
    NumericalSemigroup,
    Symmetry,
    classify_symmetry,
    pseudo_frobenius,
)

Order = Literal["inclusion", "preceq"]

EXHAUSTIVE_WIDTH_LIMIT = 20


class QuarkProfile(str, enum.Enum):
    SYMMETRIC = "symmetric_profile"
    PSEUDO_SYMMETRIC = "pseudo_symmetric_profile"
    NOT_IRREDUCIBLE = "not_irreducible"


@dataclass(frozen=True)
class Classification:
    irreducible: bool
    atom: bool
    quark: bool
    prime: bool
    idempotent: bool
    reduction_number: int
    nu: int


class ClassMonoid:
    """Enumerated I_0(S); tables are attached by :func:`build_table`."""

    def __init__(self, semigroup: NumericalSemigroup, ideals: list[IdealZ]):
        self.semigroup = semigroup
        self.ideals = ideals
        self.index = {E.kunz: i for i, E in enumerate(ideals)}
        self.add_table: np.ndarray | None = None
        self.preceq: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.ideals)

    def __repr__(self) -> str:
        return f"ClassMonoid({self.semigroup!r}, {len(self)} ideals)"

    @property
    def identity(self) -> int:
        return 0

    @property
    def top(self) -> int:
        """Index of N."""
        return len(self.ideals) - 1

    @cached_property
    def apery(self) -> np.ndarray:
        return np.array([E.apery for E in self.ideals], dtype=np.int64)

    @cached_property
    def inclusion(self) -> np.ndarray:
        """inclusion[a, b]: ideal a is contained in ideal b."""
        return kernels.inclusion_matrix(self.apery)

    @cached_property
    def topological_order(self) -> np.ndarray:
        # more gaps means smaller set, and both orders refine inclusion
        gaps = np.array([sum(E.kunz) for E in self.ideals], dtype=np.int64)
        return np.argsort(-gaps, kind="stable")

    def find(self, xs) -> int:
        """Index of the ideal generated by ``xs``."""
        return self.index[ideal_from_generators(self.semigroup, xs).kunz]

    def require_table(self) -> np.ndarray:
        if self.add_table is None:
            raise TableMissing("call build_table first")
        return self.add_table

    def strict(self, order: Order) -> np.ndarray:
        if order == "inclusion":
            rel = self.inclusion
        elif order == "preceq":
            self.require_table()
            rel = self.preceq
        else:
            raise ValueError(f"unknown order {order!r}")
        return rel & ~np.eye(len(self), dtype=np.bool_)

    def add(self, a: int, b: int) -> int:
        return int(self.require_table()[a, b])

    @cached_property
    def classification(self) -> list[Classification]:
        return classify(self)


def _kunz_solutions(k: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Non-negative solutions of the Kunz system, lexicographically decreasing.

    For positions low < high (1-based) the system pairs up as
    x_high - x_low <= k[high-low] and x_low - x_high <= k[low+m-high] + 1.
    """
    m = len(k) + 1
    x = [0] * m
    out: list[tuple[int, ...]] = []

    def place(p: int) -> None:
        if p == m:
            out.append(tuple(x[1:]))
            return
        lo, hi = 0, k[p - 1]
        for a in range(1, p):
            hi = min(hi, x[a] + k[p - a - 1])
            lo = max(lo, x[a] - k[a + m - p - 1] - 1)
        for v in range(hi, lo - 1, -1):
            x[p] = v
            place(p + 1)

    place(1)
    return out


def enumerate_ideals(S: NumericalSemigroup) -> ClassMonoid:
    ideals = [IdealZ.from_kunz(S, sol) for sol in _kunz_solutions(S.kunz)]
    return ClassMonoid(S, ideals)


def count_ideals(S: NumericalSemigroup) -> int:
    return len(_kunz_solutions(S.kunz))


def _code_lookup(M: ClassMonoid) -> tuple[np.ndarray, np.ndarray]:
    k = M.semigroup.kunz
    m = len(k) + 1
    strides = np.zeros(m, dtype=np.int64)
    size = 1
    for i in range(1, m):
        strides[i] = size
        size *= k[i - 1] + 1
    lookup = np.full(size, -1, dtype=np.int64)
    for idx, E in enumerate(M.ideals):
        lookup[sum(c * int(strides[i]) for i, c in enumerate(E.kunz, 1))] = idx
    return lookup, strides


def build_table(M: ClassMonoid) -> ClassMonoid:
    """Attach the addition table and the preceq reachability matrix."""
    if M.add_table is None:
        lookup, strides = _code_lookup(M)
        M.add_table = kernels.sum_table(M.apery, lookup, strides)
        M.preceq = kernels.preceq_matrix(M.add_table)
    return M


def class_monoid(S: NumericalSemigroup) -> ClassMonoid:
    return build_table(enumerate_ideals(S))


def hasse(M: ClassMonoid, order: Order = "inclusion") -> list[tuple[int, int]]:
    """Covering pairs (lower, upper) of the chosen order, sorted."""
    cov = kernels.covers(M.strict(order))
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cov))]


def longest_chain(M: ClassMonoid, order: Order = "inclusion") -> int:
    """Number of vertices on a longest strictly increasing chain."""
    return int(kernels.longest_chain(M.strict(order), M.topological_order))


def width_exhaustive(strict: np.ndarray) -> int:
    """Largest antichain by branch and bound; only for small posets."""
    n = strict.shape[0]
    comparable = strict | strict.T
    best = 0

    def grow(start: int, chosen: list[int]) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + (n - start) <= best:
            return
        for v in range(start, n):
            if not any(comparable[v, c] for c in chosen):
                chosen.append(v)
                grow(v + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def width_dilworth(strict: np.ndarray) -> int:
    """n minus a maximum matching of the comparability bipartite graph.

    ``strict`` must be transitive; the matching then yields a minimum chain
    cover, whose size equals the width.
    """
    n = strict.shape[0]
    if n == 0:
        return 0
    match = maximum_bipartite_matching(csr_matrix(strict.astype(np.int8)), perm_type="column")
    return n - int((match >= 0).sum())


def width_inclusion(M: ClassMonoid) -> int:
    strict = M.strict("inclusion")
    if len(M) <= EXHAUSTIVE_WIDTH_LIMIT:
        return width_exhaustive(strict)
    return width_dilworth(strict)


def _reduction_from_table(table: np.ndarray, i: int) -> int:
    prev, cur, r = 0, i, 0
    while cur != prev:
        prev, cur = cur, int(table[cur, i])
        r += 1
    return r


def classify(M: ClassMonoid) -> list[Classification]:
    table = M.require_table()
    prec = M.preceq
    n = len(M)
    irreducible, atom = kernels.sum_flags(table)
    prime = kernels.prime_flags(table, prec)
    below = prec[1:, :].sum(axis=0)  # non-units J with J preceq I, I itself included
    out = []
    for i in range(n):
        nonunit = i != 0
        out.append(Classification(
            irreducible=bool(irreducible[i]),
            atom=bool(atom[i]),
            quark=nonunit and int(below[i]) == 1,
            prime=bool(prime[i]),
            idempotent=int(table[i, i]) == i,
            reduction_number=_reduction_from_table(table, i),
            nu=nu(M.ideals[i]),
        ))
    return out


def indices_where(M: ClassMonoid, flag: str) -> list[int]:
    return [i for i, c in enumerate(M.classification) if getattr(c, flag)]


def idempotents(M: ClassMonoid) -> list[IdealZ]:
    table = M.require_table()
    return [E for i, E in enumerate(M.ideals) if table[i, i] == i]


def is_closed_under_addition(E: IdealZ) -> bool:
    """E, read as a subset of N, is a numerical semigroup."""
    m = E.parent.multiplicity
    top = max(E.apery) - m
    members = [x for x in range(top + 1) if x in E]
    return all(a + b in E for a in members for b in members)


def minimals_above_S(M: ClassMonoid) -> list[int]:
    """Minimals under inclusion of I_0(S) minus S."""
    strict = M.strict("inclusion")
    rest = range(1, len(M))
    return [b for b in rest if not any(strict[a, b] for a in rest)]


def maximals_below_N(M: ClassMonoid) -> list[int]:
    strict = M.strict("inclusion")
    rest = range(0, M.top)
    return [a for a in rest if not any(strict[a, b] for b in rest)]


def covered_by_N(M: ClassMonoid) -> list[int]:
    """Ideals covered by N under preceq."""
    strict = M.strict("preceq")
    top = M.top
    return [
        j for j in range(top)
        if strict[j, top] and not strict[j, :top].any()
    ]


def multiples(M: ClassMonoid, i: int) -> list[int]:
    """0I, 1I, 2I, ... up to the first repetition."""
    table = M.require_table()
    seen, cur = [0], 0
    while True:
        cur = int(table[cur, i])
        if cur in seen:
            return seen
        seen.append(cur)


def is_cyclic(M: ClassMonoid) -> bool:
    n = len(M)
    return any(len(multiples(M, i)) == n for i in range(n))


def irreducibility_via_quarks(S: NumericalSemigroup, M: ClassMonoid) -> QuarkProfile:
    if S.is_N:
        raise EmptyForN("I_0(N) has no quarks")
    quarks = set(indices_where(M, "quark"))
    F = S.frobenius
    if quarks == {M.find([0, F])}:
        return QuarkProfile.SYMMETRIC
    if F % 2 == 0 and quarks == {M.find([0, F]), M.find([0, F // 2])}:
        return QuarkProfile.PSEUDO_SYMMETRIC
    return QuarkProfile.NOT_IRREDUCIBLE


def minimal_factorizations(M: ClassMonoid, i: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """All minimal factorizations of ideal ``i`` into irreducibles, and their lengths.

    In a minimal factorization every partial sum strictly grows (otherwise the
    summand that did not change it could be dropped), so summands are taken in
    non-decreasing index order and any step that leaves the partial sum fixed
    is pruned.  Factorizations are returned as sorted index tuples.
    """
    if i == 0:
        raise IdentityHasNone("S is the identity; its only factorization is empty")
    table = M.require_table()
    incl = M.inclusion
    cls = M.classification
    cands = [j for j in range(1, len(M)) if cls[j].irreducible and incl[j, i]]
    found: list[tuple[int, ...]] = []

    def total(parts: list[int]) -> int:
        acc = 0
        for p in parts:
            acc = int(table[acc, p])
        return acc

    def is_minimal(parts: list[int]) -> bool:
        # sums are monotone, so checking one-element deletions suffices
        return all(total(parts[:k] + parts[k + 1:]) != i for k in range(len(parts)))

    def grow(start: int, acc: int, parts: list[int]) -> None:
        if acc == i:
            if is_minimal(parts):
                found.append(tuple(parts))
            return
        for t in range(start, len(cands)):
            j = cands[t]
            nxt = int(table[acc, j])
            if nxt == acc or not incl[nxt, i]:
                continue
            parts.append(j)
            grow(t, nxt, parts)
            parts.pop()

    grow(0, 0, [])
    found.sort(key=lambda f: (len(f), f))
    return found, sorted({len(f) for f in found})


def _kunz_product(S: NumericalSemigroup) -> int:
    out = 1
    for k in S.kunz:
        out *= k + 1
    return out


def is_kunz_product_extremal(S: NumericalSemigroup) -> bool:
    """k_1 >= ... >= k_{m-1} and k_1 - k_{m-1} <= 1."""
    k = S.kunz
    if not k:
        return True
    return all(a >= b for a, b in zip(k, k[1:])) and k[0] - k[-1] <= 1


def is_genus_type_extremal(S: NumericalSemigroup) -> bool:
    """S = {0, m, ->} or S = <m, m+1, ..., 2m-2>, plus <2,5> for m = 2."""
    m = S.multiplicity
    gaps = list(S.gaps)
    if gaps == list(range(1, m)):
        return True
    if m >= 3 and gaps == list(range(1, m)) + [2 * m - 1]:
        return True
    return m == 2 and S.genus <= 2


def verify_bounds(S: NumericalSemigroup, M: ClassMonoid) -> dict:
    """Every cardinality bound on I_0(S) with its numbers and a verdict."""
    n, g, m = len(M), S.genus, S.multiplicity
    t = S.type
    prod = _kunz_product(S)
    out: dict = {}

    def put(name, holds, **nums):
        out[name] = {"holds": bool(holds), **nums}

    put("genus_lower", g + 1 <= n, bound=g + 1, value=n)
    put("power_upper", n <= 2 ** g, bound=2 ** g, value=n)
    put("improved_lower", 2 ** (m - 1) + g - m + 1 <= n, bound=2 ** (m - 1) + g - m + 1, value=n)
    put("kunz_product_upper", n <= prod, bound=prod, value=n)
    put(
        "kunz_product_equality",
        (n == prod) == is_kunz_product_extremal(S),
        attained=n == prod, predicted=is_kunz_product_extremal(S),
    )
    if not S.is_N:
        up = 2 ** g - 2 ** (g - t) + 1
        put("type_lower", 2 ** t <= n, bound=2 ** t, value=n)
        put("genus_type_upper", n <= up, bound=up, value=n)
        put(
            "genus_type_equality",
            (n == up) == is_genus_type_extremal(S),
            attained=n == up, predicted=is_genus_type_extremal(S),
        )
    return out


def symmetric_split(S: NumericalSemigroup) -> dict:
    """Compare I_0(S) with {S} ∪ I_0(S ∪ {F}) for symmetric S != <2,3>."""
    from idclass.semigroup import from_gaps

    if S.is_N or classify_symmetry(S) is not Symmetry.SYMMETRIC:
        raise ValueError(f"{S!r} is not a symmetric semigroup other than N")
    T = from_gaps(x for x in S.gaps if x != S.frobenius)
    mine = {E.apery for E in enumerate_ideals(S).ideals}
    theirs = {E.apery for E in enumerate_ideals(T).ideals}
    f = S.frobenius % S.multiplicity
    k = S.kunz
    sharpened = k[f - 1]
    for i, ki in enumerate(k, 1):
        if i != f:
            sharpened *= ki + 1
    return {
        "same_multiplicity": T.multiplicity == S.multiplicity,
        "set_equality": mine == theirs | {S.apery},
        "size": len(mine),
        "sharpened": 1 + sharpened,
    }


def pf_minimal_ideals(M: ClassMonoid) -> set[int]:
    """Indices of {0, f} + S for f in PF(S)."""
    return {M.find([0, f]) for f in pseudo_frobenius(M.semigroup)}


def to_dot(M: ClassMonoid, order: Order = "inclusion") -> str:
    """Graphviz digraph of the Hasse diagram; edges point from lower to upper.

    Under ``preceq`` irreducibles are drawn as boxes and idempotents filled
    gray.
    """
    lines = [f'digraph "I0{M.semigroup!r}" {{', "  rankdir=BT;", "  node [shape=ellipse];"]
    cls = M.classification if order == "preceq" else None
    for i, E in enumerate(M.ideals):
        attrs = [f'label="{E.label}"']
        if cls is not None:
            if cls[i].irreducible:
                attrs.append("shape=box")
            if cls[i].idempotent:
                attrs.append("style=filled")
                attrs.append("fillcolor=gray")
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for a, b in hasse(M, order):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
