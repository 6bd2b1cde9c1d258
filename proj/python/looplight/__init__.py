"""Linear and third-order probe response of a closed-loop four-level
double-Lambda atomic medium, with Doppler and pressure broadening."""

from ._core import *  # noqa: F401,F403
from ._core import constants  # noqa: F401

__version__ = "0.1.0"
