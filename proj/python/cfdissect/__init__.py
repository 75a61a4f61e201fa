"""Balanced extended non-associative words and unary language dissection."""

import json

from ._core import (
    AlphabetError,
    GrammarError,
    GrowthCheckFailed,
    PreconditionError,
    alpha_for,
    check_balanced_factors,
    construct_omega,
    enumerate_enw,
    enumerate_omega,
    feasible_heights,
    height,
    image_membership,
    is_balanced,
    is_enw,
    is_omega,
    occur,
    omega_count,
    pi,
    recognize,
    replace,
    witness,
)
from ._core import _dissect_json


def dissect(language, c, cap, samples=10):
    """Partition a geometrically growing unary language at residue windows.

    language is a builtin name ("pow2", "pow3", "fib") or an iterable of
    lengths. c is a rational given as int, str ("16/15", "1.5") or Fraction.
    Returns the report as a dict; lengths are Python ints.
    """
    if not isinstance(language, str):
        language = [int(m) for m in language]
    report = json.loads(_dissect_json(language, str(c), int(cap), samples))
    for key in ("cap", "samples_in", "samples_out"):
        value = report[key]
        report[key] = [int(v) for v in value] if isinstance(value, list) else int(value)
    return report


__all__ = [name for name in dir() if not name.startswith("_")]
