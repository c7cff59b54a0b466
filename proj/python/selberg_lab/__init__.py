"""Numerical laboratory for scattering resonances of Gamma0(4) with a character."""

from ._core import *  # noqa: F401,F403
from ._core import SelbergError, __doc__  # noqa: F401
