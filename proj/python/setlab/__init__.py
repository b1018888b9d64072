"""Finite-horizon combinatorics of large sets of integers (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError, WindowSet, FiniteFamily  # noqa: F401


def two_block_parity(horizon):
    """Evens on [2^n, 2^(n+1)) for even n, odds for odd n."""
    return generate('{"variant": "DyadicBlocks", "horizon": %d, "k": 2, "block_parity_rule": [0, 1]}' % horizon)


def even_nu2(horizon):
    """Positive integers with even 2-adic valuation."""
    return generate('{"variant": "EvenNu2", "horizon": %d}' % horizon)
