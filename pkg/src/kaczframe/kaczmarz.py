"""Kaczmarz iteration engines.

Three entry points, kept separate on purpose:

* :func:`cyclic_solve` classical row-cyclic iteration for ``A x = b`` from an
  arbitrary start, with a residual stopping rule;
* :func:`single_pass` one pass over a unit-vector system towards a *known*
  target ``x`` (analysis mode);
* :func:`data_driven_pass` the same pass driven only by ``(A, b)``; extra
  passes repeat the rows cyclically.

Rows ``a_n`` of ``A`` act on ``x`` as ``(A x)_n = sum_k a_n[k] x[k] =
<x, conj(a_n)>``, so the unit vector associated with row ``n`` is
``e_n = conj(a_n) / |a_n|`` and each update projects onto the hyperplane
``{y : <y, e_n> = b_n / |a_n|}``.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .core import as_matrix, as_vector, frozen
from .errors import IndexOutOfRange, ShapeMismatch, ZeroRow
from .systems import UnitVectorSystem

ZERO_ROW_TOL = 1e-12


@dataclass(frozen=True)
class LinearSystem:
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.A, "A")
        b = as_vector(self.b, "b")
        if b.shape[0] != a.shape[0]:
            raise ShapeMismatch(f"A has {a.shape[0]} rows but b has length {b.shape[0]}")
        norms = np.linalg.norm(a, axis=1)
        zero = np.flatnonzero(norms <= ZERO_ROW_TOL)
        if zero.size:
            raise ZeroRow(int(zero[0]))
        object.__setattr__(self, "A", frozen(a))
        object.__setattr__(self, "b", frozen(b))

    @property
    def shape(self):
        return self.A.shape

    def residual_norm(self, x):
        return float(np.linalg.norm(self.A @ x - self.b))


@dataclass(frozen=True)
class KaczmarzTrajectory:
    """Iterates of one run.

    ``residual_norms[k]`` is ``|A x - b|`` after ``k`` sweeps for
    :func:`cyclic_solve` (index 0 is the starting point) and after pass
    ``k + 1`` for :func:`data_driven_pass`. ``error_norms`` lines up with
    ``iterates`` and is only present when the true solution was supplied.
    """

    iterates: np.ndarray
    error_norms: Optional[np.ndarray] = None
    residual_norms: Optional[np.ndarray] = None
    sweeps: int = 1
    converged: bool = False

    @property
    def solution(self):
        return self.iterates[-1]


def _errors(iterates, x_true):
    if x_true is None:
        return None
    return frozen(np.linalg.norm(iterates - x_true[None, :], axis=1))


def normalize_rows(system):
    """Unit vectors ``conj(a_n)/|a_n|``, the row norms, and ``b_n/|a_n|``."""
    scales = np.linalg.norm(system.A, axis=1)
    e = system.A.conj() / scales[:, None]
    return UnitVectorSystem(e), frozen(scales), frozen(system.b / scales)


def _prepared(system):
    rows = np.ascontiguousarray(system.A)
    rhs = np.ascontiguousarray(system.b)
    norm_sq = np.ascontiguousarray(np.sum(np.abs(rows) ** 2, axis=1))
    return rows, rhs, norm_sq


def cyclic_solve(system, x0=None, max_sweeps=500, tol=1e-10, x_true=None, keep_iterates=True):
    """Classical cyclic Kaczmarz.

    Stops once ``|A x - b| <= tol * |b|`` (checked at the start and after
    every sweep) or when ``max_sweeps`` sweeps have been applied. With
    ``keep_iterates=False`` only the iterate at the end of each sweep is
    kept, which keeps memory flat for long runs.
    """
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be >= 1")
    count, dim = system.shape
    x = np.zeros(dim, dtype=np.complex128) if x0 is None else as_vector(x0, "x0").copy()
    if x.shape[0] != dim:
        raise ShapeMismatch(f"x0 has length {x.shape[0]}, expected {dim}")
    if x_true is not None:
        x_true = as_vector(x_true, "x_true")
    rows, rhs, norm_sq = _prepared(system)
    target = tol * float(np.linalg.norm(system.b))

    chunks = [x[None, :].copy()]
    residuals = [system.residual_norm(x)]
    converged = residuals[0] <= target
    sweeps = 0
    buf = np.empty((count, dim), dtype=np.complex128)
    while not converged and sweeps < max_sweeps:
        x = _kernels.sweep(rows, rhs, norm_sq, x, buf)
        sweeps += 1
        chunks.append(buf.copy() if keep_iterates else buf[-1:].copy())
        residuals.append(system.residual_norm(x))
        converged = residuals[-1] <= target

    iterates = frozen(np.concatenate(chunks))
    return KaczmarzTrajectory(
        iterates=iterates,
        error_norms=_errors(iterates, x_true),
        residual_norms=frozen(np.array(residuals)),
        sweeps=sweeps,
        converged=bool(converged),
    )


def single_pass(system, x):
    """One pass towards a known target: ``x_0 = <x, e_0> e_0`` then
    ``x_n = x_{n-1} + <x - x_{n-1}, e_n> e_n``."""
    x = as_vector(x, "x")
    if x.shape[0] != system.dim:
        raise ShapeMismatch(f"target has length {x.shape[0]}, system dimension is {system.dim}")
    iterates = frozen(_kernels.single_pass(np.ascontiguousarray(system.vectors), x))
    return KaczmarzTrajectory(iterates=iterates, error_norms=_errors(iterates, x), sweeps=1)


def partial_sum_via_g(system, g, x, n):
    """``sum_{i<=n} <x, g_i> e_i``."""
    if not 0 <= n < len(system):
        raise IndexOutOfRange(f"index {n} outside 0..{len(system) - 1}")
    x = as_vector(x, "x")
    coef = g.vectors[: n + 1].conj() @ x
    return coef @ system.vectors[: n + 1]


def partial_sums_via_g(system, g, x):
    """All partial sums at once; row ``n`` equals ``partial_sum_via_g(.., n)``."""
    x = as_vector(x, "x")
    terms = (g.vectors.conj() @ x)[:, None] * system.vectors
    return np.cumsum(terms, axis=0)


def data_driven_pass(system, passes=1, tol=None, x_true=None):
    """Kaczmarz pass computed from ``(A, b)`` alone.

    The first update from the zero vector is exactly the initial guess
    ``x_0 = b_0 conj(a_0) / |a_0|^2``; every later row applies
    ``x += (b_n - a_n . x) / |a_n|^2 * conj(a_n)``. For ``passes > 1`` the
    row list is repeated cyclically.
    """
    if passes < 1:
        raise ValueError("passes must be >= 1")
    count, dim = system.shape
    if x_true is not None:
        x_true = as_vector(x_true, "x_true")
    rows, rhs, norm_sq = _prepared(system)
    x = np.zeros(dim, dtype=np.complex128)
    iterates = np.empty((passes * count, dim), dtype=np.complex128)
    residuals = np.empty(passes)
    for p in range(passes):
        x = _kernels.sweep(rows, rhs, norm_sq, x, iterates[p * count:(p + 1) * count])
        residuals[p] = system.residual_norm(x)
    converged = tol is not None and residuals[-1] <= tol * float(np.linalg.norm(system.b))
    iterates = frozen(iterates)
    return KaczmarzTrajectory(
        iterates=iterates,
        error_norms=_errors(iterates, x_true),
        residual_norms=frozen(residuals),
        sweeps=passes,
        converged=bool(converged),
    )


def pythagorean_defects(x, iterates, g):
    """``| |x|^2 - |x - x_n|^2 - sum_{i<=n} |<x, g_i>|^2 |`` for every ``n``."""
    x = as_vector(x, "x")
    energy = np.cumsum(np.abs(g.vectors[: len(iterates)].conj() @ x) ** 2)
    err = np.linalg.norm(iterates - x[None, :], axis=1) ** 2
    return np.abs(np.vdot(x, x).real - err - energy)

