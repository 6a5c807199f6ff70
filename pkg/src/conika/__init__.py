"""Conical 2-designs, concurrence from design probabilities, and design witnesses."""
from ._backend import BACKEND
from .certifier import DesignCertificate, certify, design_sum, rank_profile
from .designs import Povm, basis_povm, catalogue, depolarize, mub_full_set, sic_from_fiducial, sic_povm
from .entanglement import (
    BipartiteState,
    ProbabilityTable,
    concurrence_oracle,
    design_concurrence,
    local_unitary_orbit_norms,
    pnorm_from_schmidt,
    probability_vector,
    schmidt_coefficients,
)
from .errors import ConikaError, ConvergenceError, DesignError, DimensionError, InvalidPovmError, NotHermitianError
from .witnesses import (
    DensityMatrix,
    WitnessReport,
    analytic_bounds,
    detect_linear,
    detect_quadratic,
    extremal_pure,
    seesaw_extremal_product,
    werner_state,
    witness_operators,
    witness_report,
)

__version__ = "0.1.0"
