"""Dense complex linear algebra used by the rest of the package.

Vectors and matrices are plain ``complex128`` numpy arrays. Values handed
back to callers are made read-only so they can be shared freely.

Inner products conjugate the *second* argument::

    inner(x, y) = sum_k x[k] * conj(y[k])
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NoConvergence, NonFinite, NonHermitian, ShapeMismatch

HERMITIAN_TOL = 1e-12


def frozen(a):
    a = np.asarray(a)
    a.setflags(write=False)
    return a


def as_vector(x, name="vector"):
    """Coerce to a finite 1-D complex128 array."""
    v = np.array(x, dtype=np.complex128)
    if v.ndim != 1:
        raise ShapeMismatch(f"{name} must be one-dimensional, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFinite(f"{name} has non-finite entries")
    return v


def as_matrix(a, name="matrix"):
    """Coerce to a finite 2-D complex128 array with at least one row and column."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeMismatch(f"{name} must be a non-empty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFinite(f"{name} has non-finite entries")
    return m


def inner(x, y):
    return np.vdot(y, x)


def hermitian_extreme_eigs(h, tol=1e-10):
    """Smallest and largest eigenvalue of a Hermitian matrix.

    The symmetry check is entrywise, ``|H - H^*| <= 1e-12`` scaled by
    ``max(1, max|H|)`` so products like ``L^* L`` of large entries pass; the matrix is
    then symmetrised and handed to LAPACK (``eigvalsh``), whose relative
    accuracy is far below any ``tol`` the callers use.
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got {h.shape}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    asym = np.max(np.abs(h - h.conj().T))
    if asym > HERMITIAN_TOL * max(1.0, float(np.max(np.abs(h)))):
        raise NonHermitian(f"|H - H*| reaches {asym:.3e}")
    try:
        w = np.linalg.eigvalsh(0.5 * (h + h.conj().T))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return float(w[0]), float(w[-1])


def operator_norm(t, tol=1e-10):
    """Largest singular value, as sqrt(lambda_max(T^* T))."""
    t = as_matrix(t)
    gram = t.conj().T @ t
    _, top = hermitian_extreme_eigs(gram, tol)
    return float(np.sqrt(max(top, 0.0)))


@dataclass(frozen=True)
class UnitLowerTriangular:
    """Square matrix with unit diagonal and zero upper part.

    Only the strictly-lower part is stored; anything on or above the
    diagonal of ``strict`` is discarded at construction.
    """

    strict: np.ndarray

    def __post_init__(self):
        s = as_matrix(self.strict, "strict")
        if s.shape[0] != s.shape[1]:
            raise ShapeMismatch(f"triangular factor must be square, got {s.shape}")
        object.__setattr__(self, "strict", frozen(np.tril(s, -1)))

    @property
    def n(self):
        return self.strict.shape[0]

    def dense(self):
        return self.strict + np.eye(self.n, dtype=np.complex128)

    @classmethod
    def from_dense(cls, m):
        return cls(np.tril(as_matrix(m), -1))

    @classmethod
    def identity(cls, n):
        return cls(np.zeros((n, n), dtype=np.complex128))


def invert_unit_lower_triangular(m):
    """Inverse of a unit lower triangular matrix by forward substitution."""
    strict = np.ascontiguousarray(m.strict)
    inv = _kernels.unit_lower_inverse(strict)
    return UnitLowerTriangular(inv)
