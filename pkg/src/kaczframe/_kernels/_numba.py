"""Numba-compiled versions of the hot loops (same contracts as ``_numpy``)."""
import numpy as np
from numba import njit


@njit(cache=True)
def unit_lower_inverse(strict):
    n = strict.shape[0]
    inv = np.zeros((n, n), dtype=np.complex128)
    # whole rows keep the operand contiguous, so np.dot reaches BLAS
    for i in range(n):
        if i:
            inv[i] = -np.dot(strict[i, :i], inv[:i])
        inv[i, i] = 1.0
    return inv


@njit(cache=True)
def aux_recursion(vectors, strict):
    g = np.empty_like(vectors)
    for n in range(vectors.shape[0]):
        g[n] = vectors[n]
        if n:
            g[n] -= np.dot(strict[n, :n], g[:n])
    return g


@njit(cache=True)
def single_pass(vectors, target):
    count, dim = vectors.shape
    out = np.empty((count, dim), dtype=np.complex128)
    x = np.zeros(dim, dtype=np.complex128)
    for n in range(count):
        coef = 0j
        for k in range(dim):
            coef += (target[k] - x[k]) * np.conj(vectors[n, k])
        for k in range(dim):
            x[k] += coef * vectors[n, k]
            out[n, k] = x[k]
    return out


@njit(cache=True)
def sweep(rows, rhs, row_norm_sq, x, out):
    count, dim = rows.shape
    for i in range(count):
        dot = 0j
        for k in range(dim):
            dot += rows[i, k] * x[k]
        step = (rhs[i] - dot) / row_norm_sq[i]
        for k in range(dim):
            x[k] += step * np.conj(rows[i, k])
            out[i, k] = x[k]
    return x
