"""Exact thickness, density and realizability computations for representations.

Representations and reports are plain dicts in the JSON layout used by the
``thickrep`` command-line tool.
"""

import json

from . import _core
from ._core import (
    ThickrepError,
    distinct_parts_coeffs,
    exterior_square_decomposition,
    gl2_wedge_identity,
    ker_fm_dim,
    plethysm_component_count,
    r_number_bounds,
)

__all__ = [
    "ThickrepError",
    "block",
    "burnside_dim",
    "character",
    "check_thick",
    "companion",
    "distinct_parts_coeffs",
    "exterior",
    "exterior_square_decomposition",
    "gl2_wedge_identity",
    "is_dense",
    "ker_fm_dim",
    "lie",
    "plethysm_component_count",
    "r_number_bounds",
    "recheck",
    "verify",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def check_thick(rep, m, method="criterion", seed=0, caps=""):
    """Thickness report for degree m; `method` is "criterion" or "definition"."""
    return json.loads(_core.check_thick(_text(rep), m, method, seed, caps))


def is_dense(rep, m, absolute=False, caps=""):
    return _core.is_dense(_text(rep), m, absolute, caps)


def burnside_dim(rep):
    return _core.burnside_dim(_text(rep))


def exterior(rep, m):
    return json.loads(_core.exterior(_text(rep), m))


def recheck(report):
    """(ok, problems) for the certificate carried by a report."""
    return _core.recheck(_text(report))


def companion(field, n, a, b):
    return json.loads(_core.companion(field, n, str(a), str(b)))


def block(ell, m, field="auto", seed=0):
    return json.loads(_core.block(ell, m, field, seed))


def lie(family, n, field="Q"):
    return json.loads(_core.lie(family, n, field))


def character(partition):
    return dict(_core.character(list(partition)))


def verify(filter="", seed=0, jobs=1):
    return json.loads(_core.verify(filter, seed, jobs))
