"""Suitability testing and optimal bases for piecewise Chebyshevian splines.

The package decides whether a spline space with knots of zero
multiplicity, built from Extended Chebyshev section spaces joined by
connection matrices, admits an optimal normalized totally positive basis
preserved under knot insertion; when it does, the basis, the associated
weight functions and parametric curves are all computable.
"""

from .basis import DesignBasis, bernstein_basis, eval_curve, sample_basis, sample_curve
from .bernstein import CoeffTensor, LocalBasis, local_transitions, to_bernstein_coeffs
from .errors import (
    ComputationError,
    DependentTransitions,
    EngineError,
    NearZeroWeight,
    OutOfInterval,
    SingularChangeOfBasis,
    SingularSystem,
    SizeMismatch,
    SpecError,
)
from .sections import (
    BasisToken,
    SectionSpace,
    critical_length_table,
    critical_length_warning,
    eval_basis,
    make_section_space,
    parse_token,
)
from .spaces import (
    ConnectionMatrix,
    SplineSpace,
    build_space,
    space_from_spec,
    validate_connection_matrix,
)
from .suitability import Failure, SuitabilityReport, check_space, sfd_step, sfd_test
from .transitions import (
    BlockSystem,
    TransitionSet,
    assemble_system,
    check_independence,
    compute_transitions,
)
from .weights import (
    OracleVerdict,
    WeightSample,
    canonical_coeffs,
    eval_level,
    eval_weights_at,
    nested_integral_psi,
    positivity_scan,
    weight_samples,
)

__version__ = "0.1.0"
