"""Spherical-harmonic transforms and phase-sensitive FIR filtering."""
from ._sphfir import *  # noqa: F401,F403
from ._sphfir import __doc__  # noqa: F401
