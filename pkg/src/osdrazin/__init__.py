"""Exact computational algebra for one-sided Drazin-type inverses.

Everything is verified, never trusted: each constructive formula returns a
witness whose defining equations are re-checked in exact arithmetic, and each
campaign re-derives its conclusions per trial from scratch.
"""

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FormatError,
    IndexTooLarge,
    NotInvertible,
    OsdrazinError,
    PreconditionFailure,
    ScalarMismatch,
    SingularResolvent,
    UnsupportedRing,
)
from .rings import (
    GaussianRational,
    GaussianRationals,
    IntegersMod,
    QQ,
    QQI,
    Rationals,
    Ring,
    ring_from_name,
)
from .matrix import SquareMatrix
from .witnesses import VerificationReport, Witness
from .drazin import (
    azumaya_left,
    azumaya_right,
    drazin_index,
    drazin_inverse,
    group_inverse,
    group_witness,
    intertwine_check,
    is_drazin_inverse,
    left_witness_index,
    normalize_left_gdrazin,
    normalize_right_gdrazin,
    one_sided_agreement,
    reverse_order_left,
    right_witness_index,
    verify_left_drazin,
    verify_left_gdrazin,
    verify_left_regular,
    verify_left_strongly_pi,
    verify_right_drazin,
    verify_right_gdrazin,
    verify_right_regular,
    verify_right_strongly_pi,
)
from .transfer import (
    JacobsonQuad,
    binomial_elements,
    binomial_probe,
    cline_partial_left,
    cline_partial_right,
    drazin_transfer,
    drazin_transfer_reverse,
    gdrazin_transfer,
    gdrazin_transfer_reverse,
    group_transfer,
    left_regular_reverse,
    left_regular_transfer,
    quad_from_classical,
    quad_solve,
    right_regular_reverse,
    right_regular_transfer,
    strong_pi_reverse,
    strong_pi_transfer,
)
from .intertwine import (
    IntertwinePair,
    drazin_reverse_pair,
    drazin_transfer_pair,
    gdrazin_reverse_pair,
    gdrazin_transfer_pair,
    group_transfer_pair,
    pair_exhaustive,
    quad_to_pair,
    regular_reverse_pair,
    regular_transfer_pair,
    strong_pi_transfer_pair,
)
from .ringlab import (
    FiniteRingSpec,
    realization_audit,
    search_left_drazin,
    search_left_strongly_pi,
    search_right_drazin,
    search_right_strongly_pi,
)
from .spectra import (
    JordanSpec,
    SpectrumReport,
    charpoly,
    group_spectrum,
    intertwine_identity_check,
    jordan_realize,
    point_index,
    product_identity_check,
)
from .campaigns import CampaignConfig, REGISTRY, list_theorems, run_campaign

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CampaignConfig",
    "DimensionMismatch",
    "FiniteRingSpec",
    "FormatError",
    "GaussianRational",
    "GaussianRationals",
    "IndexTooLarge",
    "IntegersMod",
    "IntertwinePair",
    "JacobsonQuad",
    "JordanSpec",
    "NotInvertible",
    "OsdrazinError",
    "PreconditionFailure",
    "QQ",
    "QQI",
    "REGISTRY",
    "Rationals",
    "Ring",
    "ScalarMismatch",
    "SingularResolvent",
    "SpectrumReport",
    "SquareMatrix",
    "UnsupportedRing",
    "VerificationReport",
    "Witness",
    "azumaya_left",
    "azumaya_right",
    "binomial_elements",
    "binomial_probe",
    "charpoly",
    "cline_partial_left",
    "cline_partial_right",
    "drazin_index",
    "drazin_inverse",
    "drazin_reverse_pair",
    "drazin_transfer",
    "drazin_transfer_pair",
    "drazin_transfer_reverse",
    "gdrazin_reverse_pair",
    "gdrazin_transfer",
    "gdrazin_transfer_pair",
    "gdrazin_transfer_reverse",
    "group_inverse",
    "group_spectrum",
    "group_transfer",
    "group_transfer_pair",
    "group_witness",
    "intertwine_check",
    "intertwine_identity_check",
    "is_drazin_inverse",
    "jordan_realize",
    "left_regular_reverse",
    "left_regular_transfer",
    "left_witness_index",
    "list_theorems",
    "normalize_left_gdrazin",
    "normalize_right_gdrazin",
    "one_sided_agreement",
    "pair_exhaustive",
    "point_index",
    "product_identity_check",
    "quad_from_classical",
    "quad_solve",
    "quad_to_pair",
    "realization_audit",
    "regular_reverse_pair",
    "regular_transfer_pair",
    "reverse_order_left",
    "right_regular_reverse",
    "right_regular_transfer",
    "right_witness_index",
    "ring_from_name",
    "run_campaign",
    "search_left_drazin",
    "search_left_strongly_pi",
    "search_right_drazin",
    "search_right_strongly_pi",
    "strong_pi_reverse",
    "strong_pi_transfer",
    "strong_pi_transfer_pair",
    "verify_left_drazin",
    "verify_left_gdrazin",
    "verify_left_regular",
    "verify_left_strongly_pi",
    "verify_right_drazin",
    "verify_right_gdrazin",
    "verify_right_regular",
    "verify_right_strongly_pi",
]
