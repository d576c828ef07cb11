"""Python bindings for the coxdatum engine.

Functions returning structured data (tables, reports, verdicts) decode the
engine's JSON into plain dicts. Rationals stay as "p/q" strings; use
``fractions.Fraction`` to compute with them.
"""

import json as _json

from . import _coxdatum as _core
from ._coxdatum import (
    CoxdatumError,
    Datum,
    apply_word,
    builtin_example,
    compare,
    depth,
    is_finite_group,
    load_datum,
    parse_datum,
    phi,
    product_order,
    reduce_word,
    restrict,
)

__all__ = [
    "CoxdatumError",
    "Datum",
    "apply_word",
    "builtin_example",
    "compare",
    "depth",
    "dual_cone_rank2",
    "dual_membership",
    "enumerate_roots",
    "is_finite_group",
    "load_datum",
    "parse_datum",
    "phi",
    "product_order",
    "reduce_word",
    "refute",
    "restrict",
    "tits_membership",
    "validate",
]


def validate(text):
    return _json.loads(_core.validate(text))


def enumerate_roots(datum, side=1, max_depth=4, parallel=False):
    return _json.loads(_core.enumerate_roots(datum, side, max_depth, parallel))


def tits_membership(datum, f, side=1, max_steps=1000):
    return _json.loads(_core.tits_membership(datum, [str(x) for x in f], side, max_steps))


def dual_membership(datum, v, side=1, max_len=10):
    return _json.loads(_core.dual_membership(datum, [str(x) for x in v], side, max_len))


def dual_cone_rank2(datum, r, s):
    return _json.loads(_core.dual_cone_rank2(datum, r, s))


def refute(datum, v1, v2):
    return _json.loads(_core.refute(datum, [str(x) for x in v1], [str(x) for x in v2]))
