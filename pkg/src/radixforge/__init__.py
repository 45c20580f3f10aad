"""radixforge: exact arithmetic for digit-permuted positional numeral systems.

Base-s expansions of rationals are rewritten blockwise through schedules of
digit-tuple permutations; the package computes the induced maps on [0, 1],
their cylinder geometry, measure and integral behaviour, signed and
variable-base encodings, and Salem-type distribution functions, all over
exact rationals.  Every value is immutable and every operation is a pure
function, so everything here is safe to share across threads or tasks.
"""

from .analysis import (Continuity, CumulativeOffsets, F_eta, Monotonicity,
                       ProbabilityVector, continuity_classify, decimal_string,
                       distance_counterexample, distribution_rows, f_D,
                       monotonicity_scan, partition_integral)
from .blockops import (BlockOp, OperatorSchedule, apply_block, complement_op,
                       compose, cycles, identity_op, index_of_perm, inverse,
                       op_order, perm_from_index)
from .cylinders import (AdjacencyProfile, Cylinder, ImageSet,
                        adjacency_profile, children, cylinder_interval,
                        image_of_cylinder, image_of_interval)
from .representations import (PointClassification, cantor_value,
                              classify_point, complement_on,
                              complement_on_odd, inverse_transform,
                              nega_value, preimages, pseudo_value,
                              quasi_bounds, quasi_nega_expand,
                              quasi_nega_value, transform)
from .words import (DigitWord, ParseError, SignPattern, canonicalize,
                    dual_form, evaluate, expand, expansions, is_base_rational)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyProfile", "BlockOp", "Continuity", "CumulativeOffsets",
    "Cylinder", "DigitWord", "F_eta", "ImageSet", "Monotonicity",
    "OperatorSchedule", "ParseError", "PointClassification",
    "ProbabilityVector", "SignPattern", "adjacency_profile", "apply_block",
    "cantor_value", "canonicalize", "children", "classify_point",
    "complement_on", "complement_on_odd", "complement_op", "compose",
    "continuity_classify", "cycles", "cylinder_interval", "decimal_string",
    "distance_counterexample", "distribution_rows", "dual_form", "evaluate",
    "expand", "expansions", "f_D", "identity_op", "image_of_cylinder",
    "image_of_interval", "index_of_perm", "inverse", "inverse_transform",
    "is_base_rational", "monotonicity_scan", "nega_value", "op_order",
    "partition_integral", "perm_from_index", "preimages", "pseudo_value",
    "quasi_bounds", "quasi_nega_expand", "quasi_nega_value", "transform",
]
