"""Exact harmonic and symplectic Fischer decompositions on R^{4p} ~ C^{2p}."""

import json as _json

from ._core import (
    apply_op,
    basis,
    canonical,
    dims,
    fischer_inner,
    verify,
)
from ._core import decompose_json as _decompose_json

__all__ = [
    "apply_op",
    "basis",
    "canonical",
    "decompose",
    "dims",
    "fischer_inner",
    "verify",
]


def decompose(p, mode, poly):
    """Decompose a polynomial; returns the report as a dict.

    mode is one of "harmonic", "symplectic" or "full"; each part entry
    satisfies input == sum |z|^(2*r2_power) op^op_power(component).
    """
    return _json.loads(_decompose_json(p, mode, poly))
