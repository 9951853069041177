"""Pong and asteroids algebras: generators, structure maps, verification suites."""

import json

from ._pongalg import (
    CyclicLiftedPermutation,
    InvalidArgument,
    InvariantViolation,
    LiftedPermutation,
    a_enumerate_generators,
    enumerate_generators,
    suite_names,
)
from . import _pongalg

__all__ = [
    "CyclicLiftedPermutation",
    "InvalidArgument",
    "InvariantViolation",
    "LiftedPermutation",
    "a_enumerate_generators",
    "diff",
    "enumerate_generators",
    "mul",
    "suite_names",
    "verify",
]


def diff(element, algebra="pong"):
    """Differential of an element or generator record given as a dict."""
    return json.loads(_pongalg.diff_json(json.dumps(element), algebra))


def mul(left, right, algebra="pong"):
    return json.loads(_pongalg.mul_json(json.dumps(left), json.dumps(right), algebra))


def verify(suite, m, k, max_disp, jobs=1):
    """Runs a verification suite and returns its report as a dict."""
    return json.loads(_pongalg.verify_json(suite, m, k, max_disp, jobs))
