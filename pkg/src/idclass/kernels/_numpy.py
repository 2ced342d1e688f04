"""Vectorized numpy kernels; reference path and fallback when numba is off."""

import numpy as np

_ROW_CHUNK = 64


def sum_table(apery, lookup, strides):
    n, m = apery.shape
    out = np.empty((n, n), dtype=np.int32)
    res = np.arange(m)
    # shifted[k][b, i] = apery[b, (i - k) % m]
    shifted = [apery[:, (res - k) % m] for k in range(m)]
    for lo in range(0, n, _ROW_CHUNK):
        A = apery[lo:lo + _ROW_CHUNK]
        best = A[:, 0, None, None] + shifted[0][None, :, :]
        for k in range(1, m):
            np.minimum(best, A[:, k, None, None] + shifted[k][None, :, :], out=best)
        codes = ((best - res) // m * strides).sum(axis=2)
        out[lo:lo + _ROW_CHUNK] = lookup[codes]
    return out


def inclusion_matrix(apery):
    """M[a, b] is True iff ideal a is contained in ideal b."""
    return (apery[None, :, :] <= apery[:, None, :]).all(axis=2)


def preceq_matrix(table):
    n = table.shape[0]
    P = np.zeros((n, n), dtype=np.bool_)
    P[np.repeat(np.arange(n), n), table.ravel()] = True
    return P


def sum_flags(table):
    """(irreducible, atom) flags; index 0 must be the identity."""
    n = table.shape[0]
    J, K = np.meshgrid(np.arange(1, n), np.arange(1, n), indexing="ij")
    C = table[1:, 1:]
    from_nonunits = np.zeros(n, dtype=np.bool_)
    from_nonunits[C.ravel()] = True
    proper = (J != C) & (K != C)
    from_smaller = np.zeros(n, dtype=np.bool_)
    from_smaller[C[proper]] = True
    irreducible = ~from_smaller
    atom = ~from_nonunits
    irreducible[0] = atom[0] = False
    return irreducible, atom


def prime_flags(table, prec):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for a in range(1, n):
        D = np.flatnonzero(~prec[a])
        out[a] = not prec[a, table[np.ix_(D, D)]].any()
    return out


def longest_chain(strict, order):
    """Vertices on a longest path of the DAG ``strict``; ``order`` is topological."""
    n = strict.shape[0]
    if n == 0:
        return 0
    dp = np.zeros(n, dtype=np.int64)
    for b in order:
        below = dp[strict[:, b]]
        dp[b] = 1 + (below.max() if below.size else 0)
    return int(dp.max())


def covers(strict):
    """Transitive reduction of a strict order given as a boolean matrix."""
    s = strict.astype(np.float64)
    return strict & ~((s @ s) > 0)
