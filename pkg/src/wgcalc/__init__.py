"""Exact Weingarten calculus for U(N), O(N) and Sp(2N)."""

from .characters import character, character_oracle
from .combinatorics import compose, cycle_type, partitions_of, sign
from .errors import (
    InvalidArgumentError,
    NumericalFailureError,
    SamplerError,
    UnsupportedScaleError,
    WgError,
)
from .haar_mc import SampleEstimate, estimate_moment, estimate_moments
from .integrator import (
    MomentSpec,
    integrate,
    integrate_orthogonal,
    integrate_symplectic,
    integrate_unitary,
)
from .weingarten import (
    GroupKind,
    wg_orthogonal,
    wg_symplectic,
    wg_table,
    wg_unitary,
)

__all__ = [
    "GroupKind", "InvalidArgumentError", "MomentSpec", "NumericalFailureError",
    "SampleEstimate", "SamplerError", "UnsupportedScaleError", "WgError",
    "character", "character_oracle", "compose", "cycle_type", "estimate_moment",
    "estimate_moments", "integrate", "integrate_orthogonal", "integrate_symplectic",
    "integrate_unitary", "partitions_of", "sign", "wg_orthogonal", "wg_symplectic",
    "wg_table", "wg_unitary",
]
