"""Unit-vector systems, their correlation matrix, and the auxiliary sequence.

A system is a finite ordered list ``e_0 .. e_{N-1}`` of unit vectors in
C^d, stored as the rows of an ``(N, d)`` array. From it we build

* ``M``: unit lower triangular, ``M[i, j] = <e_i, e_j>`` for ``i > j``;
* ``C = M^{-1}`` and ``U = C - I``;
* the auxiliary sequence ``g_0 = e_0``,
  ``g_n = e_n - sum_{i<n} <e_n, e_i> g_i``.

Seeded generators use numpy's ``default_rng`` (PCG64) so a given
``(kind, d, N, seed)`` always yields the same vectors.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .core import (
    UnitLowerTriangular,
    as_matrix,
    frozen,
    hermitian_extreme_eigs,
    invert_unit_lower_triangular,
)
from .errors import IndexOutOfRange, InvalidShape, NotUnitNorm, ShapeMismatch

UNIT_NORM_TOL = 1e-12


@dataclass(frozen=True)
class UnitVectorSystem:
    vectors: np.ndarray

    def __post_init__(self):
        v = as_matrix(self.vectors, "vectors")
        norms = np.linalg.norm(v, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1.0) > UNIT_NORM_TOL)
        if bad.size:
            raise NotUnitNorm(int(bad[0]), float(norms[bad[0]]))
        object.__setattr__(self, "vectors", frozen(v))

    @property
    def dim(self):
        return self.vectors.shape[1]

    @property
    def count(self):
        return self.vectors.shape[0]

    def __len__(self):
        return self.count

    def __getitem__(self, n):
        return self.vectors[n]

    def gram(self):
        """Matrix of inner products, ``K[i, j] = <e_i, e_j>``."""
        return self.vectors @ self.vectors.conj().T

    def spans(self, tol=1e-10):
        lo, _ = hermitian_extreme_eigs(frame_operator(self.vectors))
        return lo > tol


@dataclass(frozen=True)
class TriangularPair:
    M: UnitLowerTriangular
    C: UnitLowerTriangular

    @property
    def U(self):
        return self.C.strict


@dataclass(frozen=True)
class AuxiliarySequence:
    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vectors", frozen(np.asarray(self.vectors, dtype=np.complex128)))

    def __len__(self):
        return self.vectors.shape[0]

    def __getitem__(self, n):
        return self.vectors[n]


def frame_operator(vectors):
    """``S = L^* L`` for the analysis map ``L x = (<x, v_n>)_n``."""
    v = np.asarray(vectors, dtype=np.complex128)
    return v.T @ v.conj()


def correlation_matrix(system):
    return UnitLowerTriangular(np.tril(system.gram(), -1))


def triangular_pair(system):
    m = correlation_matrix(system)
    return TriangularPair(M=m, C=invert_unit_lower_triangular(m))


def auxiliary_sequence(system, m=None):
    """Build ``g_n`` by the defining recursion (no matrix inverse involved)."""
    if m is None:
        m = correlation_matrix(system)
    g = _kernels.aux_recursion(
        np.ascontiguousarray(system.vectors), np.ascontiguousarray(m.strict)
    )
    return AuxiliarySequence(g)


def auxiliary_sequence_from_inverse(system, c=None):
    """Build ``g_n = e_n + sum_{i<n} c_{ni} e_i`` from the rows of ``C``."""
    if c is None:
        c = triangular_pair(system).C
    return AuxiliarySequence(c.dense() @ system.vectors)


def reconstruct_from_g(system, g, n):
    """``sum_{i<=n} <e_n, e_i> g_i``, which should give back ``e_n``."""
    if not 0 <= n < len(system):
        raise IndexOutOfRange(f"index {n} outside 0..{len(system) - 1}")
    if len(g) != len(system):
        raise ShapeMismatch("auxiliary sequence and system differ in length")
    e = system.vectors
    coef = e[: n + 1].conj() @ e[n]
    return coef @ g.vectors[: n + 1]


class SystemKind(str, Enum):
    onb = "onb"
    perturbed_onb = "perturbed_onb"
    repeated_vector = "repeated_vector"
    remark = "remark"
    parseval_rows = "parseval_rows"
    random_unit = "random_unit"


def random_unitary(d, rng):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    # fix the phases so the distribution is Haar
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph


def _unit_rows(v):
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def generate_system(kind, d, count, seed=0):
    """Deterministic test systems.

    ``onb``              columns of a Haar-random unitary (``count == d``).
    ``perturbed_onb``    an ONB whose first ``min(3, d)`` vectors are mixed
                         into a non-orthogonal basis of their own span; the
                         rest stay orthonormal (``count == d``, ``d >= 2``).
    ``repeated_vector``  ``e_1 = e_0`` followed by an ONB of the orthogonal
                         complement (``count == d + 1``).
    ``remark``           ``e_0 = delta_0``, ``e_1 = delta_0/2 + (sqrt 3/2) delta_1``,
                         ``e_n = delta_n`` otherwise, so ``<e_0, e_1> = 1/2``
                         (``count == d``, ``d >= 2``; seed unused).
    ``parseval_rows``    harmonic frame: ``count`` unit-norm rows of a DFT
                         matrix restricted to ``d`` columns, rotated by a
                         random unitary; tight with bound ``count / d``.
    ``random_unit``      independent complex Gaussian vectors, normalised.
    """
    kind = SystemKind(kind)
    if d < 1 or count < 1:
        raise InvalidShape("dimension and count must be at least 1")
    rng = np.random.default_rng(seed)

    if kind in (SystemKind.onb, SystemKind.perturbed_onb, SystemKind.remark):
        if count != d:
            raise InvalidShape(f"{kind.value} needs count == dim, got {count} vs {d}")
    if kind in (SystemKind.perturbed_onb, SystemKind.remark) and d < 2:
        raise InvalidShape(f"{kind.value} needs dim >= 2")
    if kind is SystemKind.repeated_vector and count != d + 1:
        raise InvalidShape(f"repeated_vector needs count == dim + 1, got {count} vs {d}")
    if kind is SystemKind.parseval_rows and count < d:
        raise InvalidShape(f"parseval_rows needs count >= dim, got {count} < {d}")

    if kind is SystemKind.onb:
        rows = random_unitary(d, rng).T
    elif kind is SystemKind.perturbed_onb:
        q = random_unitary(d, rng)
        k = min(3, d)
        while True:
            mix = np.eye(k) + 0.5 * (rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k)))
            mix /= np.linalg.norm(mix, axis=0)
            if np.linalg.cond(mix) < 1e3:
                break
        basis = q.copy()
        basis[:, :k] = q[:, :k] @ mix
        rows = basis.T
    elif kind is SystemKind.repeated_vector:
        q = random_unitary(d, rng).T
        rows = np.vstack([q[:1], q])
    elif kind is SystemKind.remark:
        rows = np.eye(d, dtype=np.complex128)
        rows[1, 0] = 0.5
        rows[1, 1] = np.sqrt(3.0) / 2.0
    elif kind is SystemKind.parseval_rows:
        n = np.arange(count)[:, None]
        k = np.arange(d)[None, :]
        harmonic = np.exp(2j * np.pi * n * k / count) / np.sqrt(d)
        rows = harmonic @ random_unitary(d, rng).T
    else:
        rows = rng.standard_normal((count, d)) + 1j * rng.standard_normal((count, d))

    if kind is not SystemKind.remark:
        rows = _unit_rows(rows)
    return UnitVectorSystem(rows)
