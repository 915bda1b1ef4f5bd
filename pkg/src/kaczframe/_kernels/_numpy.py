"""Pure-numpy versions of the hot loops.

Each routine vectorises the inner sum and keeps only the outer recurrence
as a Python loop. Signatures and results match ``_numba`` exactly.
"""
import numpy as np


def unit_lower_inverse(strict):
    n = strict.shape[0]
    inv = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        inv[i, :i] = -(strict[i, :i] @ inv[:i, :i])
        inv[i, i] = 1.0
    return inv


def aux_recursion(vectors, strict):
    g = np.empty_like(vectors)
    for n in range(vectors.shape[0]):
        g[n] = vectors[n] - strict[n, :n] @ g[:n]
    return g


def single_pass(vectors, target):
    count, dim = vectors.shape
    out = np.empty((count, dim), dtype=np.complex128)
    x = np.zeros(dim, dtype=np.complex128)
    for n in range(count):
        e = vectors[n]
        x = x + np.vdot(e, target - x) * e
        out[n] = x
    return out


def sweep(rows, rhs, row_norm_sq, x, out):
    # rows hold a_n; the projection direction is conj(a_n)
    for i in range(rows.shape[0]):
        a = rows[i]
        x += ((rhs[i] - a @ x) / row_norm_sq[i]) * a.conj()
        out[i] = x
    return x
