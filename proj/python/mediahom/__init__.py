"""Collision-model dynamics of spin networks coupled to ancilla baths."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
