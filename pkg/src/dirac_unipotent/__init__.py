"""Dirac cohomology of unipotent representations of Sp(2n,R) and U(p,q).

Multiplicities are computed by exhaustive solution counting and compared
with closed binomial formulas; a tensor-product oracle double-checks small
ranks.
"""

from .errors import InsufficientBoundError, ParameterError
from .solver import (
    MultiplicityReport,
    Witness,
    brute_multiplicity,
    closed_form_sp,
    closed_form_u,
    closed_form_xprime,
    cross_check,
    tensor_oracle_multiplicity,
)
from .sp_models import SpTauCandidate, SpXPrimeSpec, SpXSpec, tau_candidates_sp
from .spinmod import spin_dimension_check, spin_weights
from .u_models import UpqSpec, UTauCandidate, tau_candidates_u
from .weights import SpFamily, UFamily, Weight, WeylElem

__version__ = "0.1.0"

__all__ = [
    "InsufficientBoundError",
    "ParameterError",
    "MultiplicityReport",
    "Witness",
    "brute_multiplicity",
    "closed_form_sp",
    "closed_form_u",
    "closed_form_xprime",
    "cross_check",
    "tensor_oracle_multiplicity",
    "SpTauCandidate",
    "SpXPrimeSpec",
    "SpXSpec",
    "tau_candidates_sp",
    "spin_dimension_check",
    "spin_weights",
    "UpqSpec",
    "UTauCandidate",
    "tau_candidates_u",
    "SpFamily",
    "UFamily",
    "Weight",
    "WeylElem",
]
