"""Exact lattice arithmetic and construction certificates for circle actions
with 2k fixed points.

The heavy lifting lives in the C++ extension module; everything here works on
plain ints, rational strings like "27/2", and JSON payloads.
"""

from ._core import (
    __version__,
    determinant,
    gram,
    k3_pair,
    plan_certificate,
    prop61_profile,
    roots_data,
    signature,
    smith_normal_form,
    theorem2_profile,
    verify_certificate,
)

__all__ = [
    "__version__",
    "determinant",
    "gram",
    "k3_pair",
    "plan_certificate",
    "prop61_profile",
    "roots_data",
    "signature",
    "smith_normal_form",
    "theorem2_profile",
    "verify_certificate",
]
