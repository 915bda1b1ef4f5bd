"""Frame-theoretic diagnostics for unit-vector systems.

Everything is computed on the finite system as given. Frame bounds are the
extreme eigenvalues of the ``d x d`` frame operator; Riesz and orthonormal
tests use the ``N x N`` Gram matrix ``K[i, j] = <e_i, e_j>``.
"""
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .core import as_vector, hermitian_extreme_eigs, operator_norm
from .errors import C1Unavailable, NotFrame, NotSpanning, ShapeMismatch
from .kaczmarz import LinearSystem, normalize_rows
from .systems import auxiliary_sequence, frame_operator, triangular_pair

# below this, 1 - a1*c1 is eigensolver noise and the bound is reported as 0
BOUND_SNAP = 1e-12


@dataclass(frozen=True)
class Tolerances:
    frame_tol: float = 1e-10
    tight_tol: float = 1e-6
    onb_tol: float = 1e-8
    effective_tol: float = 1e-6

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value!r}")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class FrameReport:
    lower_bound: float
    upper_bound: float
    is_frame: bool
    is_tight_one: bool
    is_riesz: bool
    is_onb: bool
    gram_min_eig: float
    count: int
    dim: int


@dataclass(frozen=True)
class EffectivenessReport:
    effective: bool
    almost_effective_bound: Optional[float]
    tight_defect: float
    isometry_defect: float
    c1_lower: Optional[float]
    methods_agree: bool


@dataclass(frozen=True)
class ConvergenceBound:
    bound: float
    a1: float
    a2: float
    c1: float
    g_lower: float


class Solvability(str, Enum):
    always_converges = "always_converges"
    not_orthogonal_rows = "not_orthogonal_rows"
    not_surjective = "not_surjective"


def _vectors(v):
    arr = np.asarray(getattr(v, "vectors", v), dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ShapeMismatch(f"expected a non-empty (N, d) array of vectors, got {arr.shape}")
    return arr


def frame_bounds(vectors, tol=DEFAULT_TOLERANCES):
    v = _vectors(vectors)
    count, dim = v.shape
    lo, hi = hermitian_extreme_eigs(frame_operator(v))
    lo = max(lo, 0.0)
    gram = v @ v.conj().T
    gram_min, _ = hermitian_extreme_eigs(gram)
    is_frame = lo > tol.frame_tol
    is_riesz = is_frame and count == dim and gram_min > tol.frame_tol
    is_onb = is_riesz and float(np.max(np.abs(gram - np.eye(count)))) <= tol.onb_tol
    return FrameReport(
        lower_bound=lo,
        upper_bound=hi,
        is_frame=is_frame,
        is_tight_one=abs(lo - 1.0) <= tol.tight_tol and abs(hi - 1.0) <= tol.tight_tol,
        is_riesz=is_riesz,
        is_onb=is_onb,
        gram_min_eig=gram_min,
        count=count,
        dim=dim,
    )


def _require_spanning(system, tol):
    lo, _ = hermitian_extreme_eigs(frame_operator(system.vectors))
    if lo <= tol.frame_tol:
        raise NotSpanning(
            f"{system.count} vectors do not span C^{system.dim} (lower frame bound {lo:.3e})"
        )


def effectiveness_tight(system, tol=1e-6, tolerances=DEFAULT_TOLERANCES):
    """Effective iff the auxiliary sequence is a tight frame with bound 1.

    Returns ``(effective, |A_g - 1| + |B_g - 1|)``.
    """
    _require_spanning(system, tolerances)
    g = auxiliary_sequence(system)
    lo, hi = hermitian_extreme_eigs(frame_operator(g.vectors))
    effective = abs(lo - 1.0) <= tol and abs(hi - 1.0) <= tol
    return effective, abs(lo - 1.0) + abs(hi - 1.0)


def isometry_defect(u):
    p = u.conj().T @ u
    return operator_norm(p @ p - p) + operator_norm(p.conj().T - p)


def effectiveness_isometry(system, tol=1e-6, tolerances=DEFAULT_TOLERANCES):
    """Effective iff the system spans and ``U = C - I`` is a partial isometry.

    ``U`` is the ``N x N`` truncation; the defect is
    ``|(U*U)^2 - U*U| + |(U*U)^* - U*U|`` in operator norm.
    """
    _require_spanning(system, tolerances)
    defect = isometry_defect(triangular_pair(system).U)
    return defect <= tol, defect


def almost_effective_bound(system, tolerances=DEFAULT_TOLERANCES):
    """``1 - A_g`` clamped to [0, 1], or None when ``A_g`` vanishes."""
    _require_spanning(system, tolerances)
    lo, _ = hermitian_extreme_eigs(frame_operator(auxiliary_sequence(system).vectors))
    if lo <= tolerances.frame_tol:
        return None
    return float(min(max(1.0 - lo, 0.0), 1.0))


def c_hermitian_min(c):
    """Smallest eigenvalue of ``(C + C^*) / 2``."""
    dense = c.dense()
    lo, _ = hermitian_extreme_eigs(0.5 * (dense + dense.conj().T))
    return lo


def convergence_bound(system, tolerances=DEFAULT_TOLERANCES):
    """Limit bound ``a2 (1 - a1 c1) / a1`` on ``|A x_n - b|^2 / |b|^2``.

    ``a1, a2`` are the frame bounds of the rows, ``c1`` the smallest
    eigenvalue of the Hermitian part of ``C``. Raises :class:`C1Unavailable`
    when that part is not positive definite. ``g_lower`` is the directly
    computed lower frame bound of the auxiliary sequence, for comparison.
    """
    fr = frame_bounds(system, tolerances)
    a1, a2 = fr.lower_bound, fr.upper_bound
    if not fr.is_frame:
        raise NotFrame(f"lower frame bound {a1:.3e} is not positive")
    c1 = c_hermitian_min(triangular_pair(system).C)
    if c1 <= 0:
        raise C1Unavailable(a1, a2, c1)
    gap = 1.0 - a1 * c1
    bound = 0.0 if gap <= BOUND_SNAP else a2 * gap / a1
    g_lower, _ = hermitian_extreme_eigs(frame_operator(auxiliary_sequence(system).vectors))
    return ConvergenceBound(bound=bound, a1=a1, a2=a2, c1=c1, g_lower=max(g_lower, 0.0))


def _square_rows(a):
    if isinstance(a, LinearSystem):
        a = a.A
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"solvability verdict needs a square matrix, got shape {a.shape}")
    return a


def kaczmarz_solvability(system, tolerances=DEFAULT_TOLERANCES):
    """Whether a single data-driven pass solves ``A x = b`` for every ``b``.

    Requires ``A`` invertible and pairwise orthogonal rows; the first failed
    condition is named.
    """
    a = _square_rows(system)
    smin_sq, _ = hermitian_extreme_eigs(a.conj().T @ a)
    if np.sqrt(max(smin_sq, 0.0)) <= tolerances.frame_tol:
        return Solvability.not_surjective
    unit = a / np.linalg.norm(a, axis=1, keepdims=True)
    off = unit @ unit.conj().T - np.eye(a.shape[0])
    if float(np.max(np.abs(off))) > tolerances.onb_tol:
        return Solvability.not_orthogonal_rows
    return Solvability.always_converges


def worst_single_pass_rhs(a):
    """Unit right-hand side maximising the error left by one data-driven pass.

    One pass maps the solution ``x`` to the error
    ``x - x_{N-1} = (I - e_{N-1} e_{N-1}^*) ... (I - e_0 e_0^*) x``, so the worst
    unit ``b`` is the top right singular vector of that product times
    ``A^{-1}``. Returns ``(b, predicted_error)``.
    """
    a = _square_rows(a)
    e, _, _ = normalize_rows(LinearSystem(a, np.zeros(a.shape[0])))
    n = a.shape[0]
    err = np.eye(n, dtype=np.complex128)
    for v in e.vectors:
        err = err - np.outer(v, v.conj() @ err)
    t = err @ np.linalg.inv(a)
    _, s, vh = np.linalg.svd(t)
    return vh[0].conj(), float(s[0])


def dual_synthesis(system, g, f):
    """``sum_n <f, g_n> e_n``; equals ``f`` for every ``f`` iff g is a dual frame."""
    f = as_vector(f, "f")
    return (g.vectors.conj() @ f) @ system.vectors


def duality_defect(system, probes=None, tolerances=DEFAULT_TOLERANCES):
    """Largest ``|sum_n <f, g_n> e_n - f|`` over the probes.

    Probes default to the standard basis of C^d.
    """
    _require_spanning(system, tolerances)
    g = auxiliary_sequence(system)
    probes = np.eye(system.dim, dtype=np.complex128) if probes is None else np.atleast_2d(probes)
    out = (probes @ g.vectors.conj().T) @ system.vectors
    return float(np.max(np.linalg.norm(out - probes, axis=1)))


def grammian_residual(system):
    """``max |C^* K C - (I - U^* U)|``, zero up to rounding for any system."""
    pair = triangular_pair(system)
    c = pair.C.dense()
    u = pair.U
    lhs = c.conj().T @ system.gram() @ c
    rhs = np.eye(system.count) - u.conj().T @ u
    return float(np.max(np.abs(lhs - rhs)))


def effectiveness_report(system, tolerances=DEFAULT_TOLERANCES):
    tight, tight_defect = effectiveness_tight(system, tolerances.effective_tol, tolerances)
    iso, iso_defect = effectiveness_isometry(system, tolerances.effective_tol, tolerances)
    c1 = c_hermitian_min(triangular_pair(system).C)
    return EffectivenessReport(
        effective=tight,
        almost_effective_bound=almost_effective_bound(system, tolerances),
        tight_defect=tight_defect,
        isometry_defect=iso_defect,
        c1_lower=c1 if c1 > 0 else None,
        methods_agree=tight == iso,
    )


@dataclass
class DiagnosticsReport:
    """Everything ``analyze`` reports. Unavailable parts are None plus a reason."""

    frame_e: FrameReport
    frame_g: FrameReport
    effectiveness: Optional[EffectivenessReport]
    duality_defect: Optional[float]
    convergence: Optional[ConvergenceBound]
    solvability: Optional[Solvability]
    c_minus_i_norm: float
    grammian_residual: float
    reasons: dict = field(default_factory=dict)


def analyze(a, tolerances=DEFAULT_TOLERANCES):
    """Full report for the rows of ``a`` (conjugated and normalised first)."""
    e, _, _ = normalize_rows(LinearSystem(a, np.zeros(np.shape(a)[0])))
    return analyze_system(e, tolerances, rows=a)


def analyze_system(system, tolerances=DEFAULT_TOLERANCES, rows=None):
    reasons = {}
    pair = triangular_pair(system)
    g = auxiliary_sequence(system, pair.M)

    effectiveness = dual = None
    try:
        effectiveness = effectiveness_report(system, tolerances)
        dual = duality_defect(system, tolerances=tolerances)
    except NotSpanning as exc:
        reasons["effectiveness"] = reasons["duality_defect"] = str(exc)

    convergence = None
    try:
        convergence = convergence_bound(system, tolerances)
    except (NotFrame, C1Unavailable) as exc:
        reasons["convergence"] = str(exc)

    solvability = None
    if rows is None:
        rows = system.vectors.conj()
    try:
        solvability = kaczmarz_solvability(rows, tolerances)
    except ShapeMismatch as exc:
        reasons["solvability"] = str(exc)

    return DiagnosticsReport(
        frame_e=frame_bounds(system, tolerances),
        frame_g=frame_bounds(g, tolerances),
        effectiveness=effectiveness,
        duality_defect=dual,
        convergence=convergence,
        solvability=solvability,
        c_minus_i_norm=operator_norm(pair.U),
        grammian_residual=grammian_residual(system),
        reasons=reasons,
    )

