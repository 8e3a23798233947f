"""Finite group predicates around subnormal abelian subgroups, with exact
Lie and Leibniz algebra checks over the rationals."""

from ._sanlib import *  # noqa: F401,F403
from ._sanlib import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
