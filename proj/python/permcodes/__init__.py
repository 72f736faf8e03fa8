"""Permutation codes built from parity-check matrices of linear codes."""

from ._permcodes import *  # noqa: F401,F403
from ._permcodes import (
    GaloisField,
    LinearCode,
    PermcodesError,
    construct,
    reed_solomon,
)

__version__ = "0.1.0"
