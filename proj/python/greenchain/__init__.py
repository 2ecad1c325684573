"""Green's functions of delta-potential chains and the spectra they constrain."""

from ._greenchain import *  # noqa: F401,F403
from ._greenchain import __doc__  # noqa: F401

__version__ = "0.1.0"
