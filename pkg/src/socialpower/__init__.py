"""Social power evolution under constant, switching, and periodic topologies."""

from .analysis import (
    ContractionReport,
    JacobianPair,
    Tolerances,
    VertexClassification,
    VertexStability,
    contraction_radii,
    convergence_rate,
    equilibrium_upper_bound,
    fixed_point,
    jacobian,
    transform_chain,
    vertex_stability,
)
from .degroot import ConsensusResult, appraisal_step_via_zeta, build_w, opinion_consensus
from .dynamics import Trajectory, Vertex, alpha, df_map, df_step_dynamic, limit_gap, simulate
from .periodic import (
    PeriodicLimit,
    PeriodicProgram,
    compose,
    periodic_fixed_points,
    same_gamma_class,
    verify_periodic_limit,
)
from .topology import (
    Constant,
    Periodic,
    RandomUniform,
    RelativeInteractionMatrix,
    Scripted,
    StarClassification,
    TopologyProgram,
    classify_star,
    dominant_left_eigenvector,
    is_irreducible,
    load_program,
    max_gamma_profile,
    save_program,
    validate,
)

__version__ = "0.1.0"
