"""Mod p syntomic cohomology of Z_p and Z/p^n, vanishing certificates and K-theory tables."""

import json

from ._core import (
    IndeterminateError,
    bound_comparison,
    closed_form_dims,
    h2_basis,
    k_even_table,
    mixed_radix,
    mod_v1_cohomology,
    render_ktable,
    sample_certificate,
    v1_nilpotence_order,
    zp_cohomology,
)
from . import _core


def certify_vanishing(p, n):
    """The vanishing certificate for v1^(p^(n-2)) ∂λ1 over Z/p^n, as a dict."""
    return json.loads(_core.certificate_json(p, n))


def verify_certificate(record):
    """Re-check a certificate record independently. Returns (ok, failures)."""
    return _core.verify_certificate_json(json.dumps(record))


__all__ = [
    "IndeterminateError",
    "bound_comparison",
    "certify_vanishing",
    "closed_form_dims",
    "h2_basis",
    "k_even_table",
    "mixed_radix",
    "mod_v1_cohomology",
    "render_ktable",
    "sample_certificate",
    "v1_nilpotence_order",
    "verify_certificate",
    "zp_cohomology",
]
