"""Kinematics and configuration-space toolkit for generalized Yoshimura booms."""

from .boom import (
    BoomConfiguration,
    FrameChain,
    ModuleMesh,
    ShapeMetrics,
    build_chain,
    build_mesh,
    build_module_mesh,
    module_facets,
    module_vertices,
    shape_metrics,
)
from .configspace import (
    MatchResult,
    MetricTarget,
    PolylineTarget,
    TransitionPlan,
    Workspace,
    WorkspacePoint,
    enumerate_workspace,
    gray_code_plan,
    hamming,
    match_shape,
    minimal_flip_paths,
    minimal_path_classes,
    shortest_transition,
)
from .errors import (
    AdmissibilityError,
    ConvergenceError,
    EmptyConfigurationError,
    EmptyTargetError,
    NoSolutionError,
    ResourceLimitError,
    UnsupportedError,
    YoshimuraError,
)
from .frames import (
    ALL_STATES,
    FrameParameters,
    FrameTransform,
    PopState,
    params_for_state,
    phase_angle,
    transform_closed_form,
    transform_for_state,
    transform_from_parameters,
)
from .geometry import BETA_GOLD, PHI, GoldenConstants
from .kinematics import (
    Admissibility,
    FoldedState,
    OnePopSolution,
    TwoPopSolution,
    YoshimuraDesign,
    classify_admissibility,
    golden_polynomial_residual,
    one_pop_residuals,
    solve_folded,
    solve_one_pop,
    solve_two_pop,
    two_pop_residual,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
