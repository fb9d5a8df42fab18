"""Weighted Hankel matrices with closed-form spectra, the Jacobi matrices
they commute with, and checks of both against their truncations.
"""

from .elliptic import make_context
from .operators import build_hankel, build_jacobi
from .spectral import VerifyConfig, verify
