"""Kaczmarz iteration and frame diagnostics for unit-vector systems."""
__version__ = "0.1.0"

from .core import (  # noqa: E402
    UnitLowerTriangular,
    hermitian_extreme_eigs,
    invert_unit_lower_triangular,
    operator_norm,
)
from .diagnostics import (  # noqa: E402
    Solvability,
    Tolerances,
    almost_effective_bound,
    analyze_system,
    convergence_bound,
    duality_defect,
    effectiveness_isometry,
    effectiveness_tight,
    frame_bounds,
    kaczmarz_solvability,
)
from .kaczmarz import (  # noqa: E402
    KaczmarzTrajectory,
    LinearSystem,
    cyclic_solve,
    data_driven_pass,
    normalize_rows,
    partial_sum_via_g,
    single_pass,
)
from .systems import (  # noqa: E402
    AuxiliarySequence,
    TriangularPair,
    UnitVectorSystem,
    auxiliary_sequence,
    correlation_matrix,
    generate_system,
    reconstruct_from_g,
    triangular_pair,
)
