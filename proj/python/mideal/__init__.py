"""Monomial ideal invariants: decomposition, size, depth and Stanley depth.

Ideals are passed in the text format used by the command-line tool, e.g.
``"vars: 3 / gens: x1*x2, x2*x3"``.
"""

import json

from . import _mideal
from ._mideal import MidealError, ass, certify, depth_quotient, modify, render

__all__ = [
    "MidealError",
    "ass",
    "betti",
    "certify",
    "decompose",
    "depth",
    "depth_quotient",
    "modify",
    "render",
    "run_suite",
    "sdepth",
    "size",
]


def decompose(text):
    return json.loads(_mideal.decompose(text))


def size(text):
    return json.loads(_mideal.size(text))


def betti(text, method="lcm", characteristic=32003):
    return json.loads(_mideal.betti(text, method, characteristic))


def depth(text, characteristic=32003):
    """(depth of S/I, depth of I)."""
    q = depth_quotient(text, characteristic)
    return q, q + 1


def sdepth(text, mode="ideal", budget=10_000_000):
    return json.loads(_mideal.sdepth(text, mode, budget))


def run_suite(spec):
    """Run a verification suite from a spec dict such as {"suite": "star", "count": 10}."""
    return json.loads(_mideal.run_suite(json.dumps(spec)))
