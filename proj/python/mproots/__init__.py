"""Arbitrary-precision derivative-free root finding and convergence benchmarks."""

from ._mproots import *  # noqa: F401,F403
from ._mproots import __doc__  # noqa: F401

__version__ = "0.1.0"
