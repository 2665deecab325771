"""Exact computations on moduli of one-dimensional sheaves on the projective plane."""

from ._sheafwc import *  # noqa: F401,F403
from ._sheafwc import ConventionError, DomainError, ReferenceWallSystem, Wall

__version__ = "0.1.0"
