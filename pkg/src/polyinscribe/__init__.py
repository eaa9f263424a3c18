"""Polynomial inscriptions of point sets into smooth Jordan curves."""

__version__ = "0.1.0"

from .config import (
    CircleFit,
    CyclicReduction,
    PointConfig,
    check_interleaved_on_circle,
    detect_cyclically_reducible_quadratic,
    is_concyclic,
    make_pinwheel,
    random_interleaved_config,
)
from .curves import (
    CurveValidationReport,
    JordanCurve,
    curve_through_points,
    derivative,
    ellipse,
    evaluate,
    fit_from_polyline,
    unit_circle,
    validate,
)
from .errors import (
    CurveGenerationFailed,
    DegenerateCrossRatio,
    DegenerateInput,
    FitProducesInvalidCurve,
    IllConditioned,
    InscribeError,
    InvalidCurve,
    NotInterleaved,
    NotOnUnitCircle,
    NullspaceNotOneDimensional,
    RepeatedNodes,
    ThetaOutOfRange,
    TooFewPoints,
    ZeroPoint,
)
from .interp import (
    Polynomial,
    TransferMap,
    build_transfer,
    build_transfer_pinwheel,
    cyclic_shift_matrix,
    ev,
    imag_constraint_singular_values,
    interpolate,
    real_intersection_dim,
    vandermonde,
)
from .solver import (
    CassiniFit,
    Inscription,
    SolveOptions,
    SolveReport,
    TrialRecord,
    colinear_config,
    curve_distance,
    expected_dimension,
    find_inscriptions,
    fit_cassini,
    plant_inscription,
    random_concyclic_config,
    random_curve,
    residual_system,
    theorem_trial,
)
from .symplectic import (
    DiagonalFormPair,
    Side,
    cross_ratio,
    cross_ratio_oracle,
    diagonal_forms,
    form_value,
    maslov_index_diagonal,
    power_matrix,
    pullback_residual,
    raw_form_coefficients,
    verify_lagrangian,
)
