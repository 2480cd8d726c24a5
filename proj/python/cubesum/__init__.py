"""Python access to the cube-sum solver."""

import json
from fractions import Fraction

from ._cubesum import (
    BadInput,
    PrecisionExhausted,
    check_solvable_prime,
    f_series,
    level,
    qexp,
    split_prime,
    verify_examples,
    y_series,
)
from ._cubesum import solve_json as _solve_json


def solve(p, i=1, bits=192, eval="auto", max_terms=2_000_000):
    """Run the pipeline and return the report as a dict."""
    return json.loads(_solve_json(p, i, bits, eval, max_terms))


def cube_sum(p, i=1, **kw):
    """Return (u, v) as Fractions with u**3 + v**3 == p**i."""
    cs = solve(p, i, **kw)["cube_sum"]
    return Fraction(cs["u"]), Fraction(cs["v"])


__all__ = [
    "BadInput",
    "PrecisionExhausted",
    "check_solvable_prime",
    "cube_sum",
    "f_series",
    "level",
    "qexp",
    "solve",
    "split_prime",
    "verify_examples",
    "y_series",
]
