"""Exact certificates and counterexamples for Popoviciu-type inequalities."""

from .pipeline import (
    EXP_RTOL,
    Instance,
    KaramataCertificate,
    Witness,
    certify,
    evaluate_instance,
    falsify,
    holds_within_tolerance,
    instance_sides,
    mean_point_system,
    random_instance,
    soundness_sweep,
    validate_instance,
    verify_witness,
)
from .criterion import CheckReport, InequalitySpec, Mode, Term, abs_form, check_conditions, g_value
from .errors import *  # noqa: F401,F403
from .families import binomial, cyclic_spec, jensen_spec, popoviciu_spec, zhao_spec
from .interpolation import (
    Interpolant,
    SampleSet,
    check_convex_samples,
    divided_difference,
    interpolate_abs,
)
from .karamata import (
    WeightedPointSystem,
    abs_sum_dominates,
    check_symmetric_condition,
    karamata_pair_check,
    karamata_value,
    majorizes,
)
from .numerics import ConvexFunction, as_rational, eval_convex, format_rational, random_convex
from .zerosum import decompose, recompose, support_sets

__version__ = "0.1.0"
