"""numba-compiled kernels, loop-for-loop equivalents of ``_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def sum_table(apery, lookup, strides):
    n, m = apery.shape
    out = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        for b in range(a, n):
            code = 0
            for i in range(1, m):
                best = apery[a, 0] + apery[b, i]
                for k in range(1, m):
                    j = i - k
                    if j < 0:
                        j += m
                    v = apery[a, k] + apery[b, j]
                    if v < best:
                        best = v
                code += (best - i) // m * strides[i]
            c = lookup[code]
            out[a, b] = c
            out[b, a] = c
    return out


@njit(cache=True)
def inclusion_matrix(apery):
    n, m = apery.shape
    out = np.zeros((n, n), dtype=np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for i in range(m):
                if apery[b, i] > apery[a, i]:
                    ok = False
                    break
            out[a, b] = ok
    return out


@njit(cache=True)
def preceq_matrix(table):
    n = table.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for a in range(n):
        for k in range(n):
            out[a, table[a, k]] = True
    return out


@njit(cache=True)
def sum_flags(table):
    n = table.shape[0]
    from_nonunits = np.zeros(n, dtype=np.bool_)
    from_smaller = np.zeros(n, dtype=np.bool_)
    for j in range(1, n):
        for k in range(j, n):
            c = table[j, k]
            from_nonunits[c] = True
            if j != c and k != c:
                from_smaller[c] = True
    irreducible = ~from_smaller
    atom = ~from_nonunits
    irreducible[0] = False
    atom[0] = False
    return irreducible, atom


@njit(cache=True)
def prime_flags(table, prec):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    D = np.empty(n, dtype=np.int64)
    for a in range(1, n):
        d = 0
        for x in range(n):
            if not prec[a, x]:
                D[d] = x
                d += 1
        ok = True
        for p in range(d):
            row = table[D[p]]
            for q in range(p, d):
                if prec[a, row[D[q]]]:
                    ok = False
                    break
            if not ok:
                break
        out[a] = ok
    return out


@njit(cache=True)
def longest_chain(strict, order):
    n = strict.shape[0]
    dp = np.zeros(n, dtype=np.int64)
    best = 0
    for t in range(n):
        b = order[t]
        top = 0
        for a in range(n):
            if strict[a, b] and dp[a] > top:
                top = dp[a]
        dp[b] = top + 1
        if dp[b] > best:
            best = dp[b]
    return best


@njit(cache=True)
def covers(strict):
    n = strict.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for a in range(n):
        for b in range(n):
            if not strict[a, b]:
                continue
            direct = True
            for c in range(n):
                if strict[a, c] and strict[c, b]:
                    direct = False
                    break
            out[a, b] = direct
    return out
