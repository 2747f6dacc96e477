"""Exact supergroups from super Harish-Chandra pairs.

Thin wrappers over the C++ core: documents are the JSON fixtures understood
by the shcpair CLI, passed as dicts.
"""

import json
from pathlib import Path

from . import _core
from ._core import NonTermination, ParseError, ShcError, pair_names, suite_names, grassmann_product

__all__ = [
    "check_liesuper",
    "check_shcp",
    "normal_form",
    "verify",
    "pair_names",
    "suite_names",
    "grassmann_product",
    "ShcError",
    "ParseError",
    "NonTermination",
]


def check_liesuper(doc, field=None):
    return json.loads(_core.check_liesuper(json.dumps(doc), field))


def check_shcp(doc, samples=64, seed=1, field=None):
    return json.loads(_core.check_shcp(json.dumps(doc), samples, seed, field))


def normal_form(doc, base=".", oracle="both", trace=False, field=None, grassmann_rank=None):
    """Normal form {etas, g_plus} of doc["word"]; pair_file is read relative to base."""
    return json.loads(_core.normal_form(json.dumps(doc), str(Path(base)), oracle, trace, field, grassmann_rank))


def verify(suite, seed=1):
    return json.loads(_core.verify(suite, seed))
