"""Virtual braid words, moves, integer numberings and the Gaussian projection."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
