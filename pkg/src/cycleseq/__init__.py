"""Variance-minimizing cyclic sequencing over small alphabets.

The library builds maximally even cyclic arrangements of a two-symbol
multiset with a Euclidean division scheme, measures arbitrary cycles through
exact rational distance moments, certifies optimality, brute-forces small
instances as an independent oracle, and exports the equivalent quadratic
assignment model for external solvers.
"""

from .core import (
    Cycle,
    DistanceProfile,
    SequencingProblem,
    base_cycle,
    canonical_rotation,
    central_moment,
    distances,
    mean,
    raw_moment,
    sub_moment,
    variance,
)
from .exact import CapExceeded, ExactResult, enumerate_admissible, exact_min
from .metrics import compare_report, pulse_variance
from .miqp import MiqpModel, build_model, evaluate_assignment, write_lp
from .optimality import (
    DistanceSpec,
    OptimalityVerdict,
    distance_conformance,
    distance_spec,
    is_unclustered,
    lower_bound,
    lower_bound_variance,
    verify_optimal,
)
from .sequencer import (
    EsaStep,
    EsaTrace,
    esa_solve,
    gcd,
    render_trace_table,
    single_symbol_cycle,
    uniform_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "DistanceProfile",
    "SequencingProblem",
    "base_cycle",
    "canonical_rotation",
    "central_moment",
    "distances",
    "mean",
    "raw_moment",
    "sub_moment",
    "variance",
    "CapExceeded",
    "ExactResult",
    "enumerate_admissible",
    "exact_min",
    "compare_report",
    "pulse_variance",
    "MiqpModel",
    "build_model",
    "evaluate_assignment",
    "write_lp",
    "DistanceSpec",
    "OptimalityVerdict",
    "distance_conformance",
    "distance_spec",
    "is_unclustered",
    "lower_bound",
    "lower_bound_variance",
    "verify_optimal",
    "EsaStep",
    "EsaTrace",
    "esa_solve",
    "gcd",
    "render_trace_table",
    "single_symbol_cycle",
    "uniform_cycle",
    "__version__",
]
