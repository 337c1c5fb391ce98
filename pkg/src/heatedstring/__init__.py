"""Spectral-Galerkin simulator and verification lab for the heated string."""

import sys

if sys.version_info < (3, 9):
    raise EnvironmentError("Python 3.9 or above is required.")

__version__ = "0.1.0"
