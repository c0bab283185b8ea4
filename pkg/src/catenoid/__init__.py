"""Numerics for spherical catenoids in hyperbolic 3-space.

Modules:
    hgeom       half-disk and Poincare ball coordinates, geodesic disk areas
    quad        adaptive quadrature with endpoint singularities, roots, maxima
    catenary    the generating curves, their intersections and envelope
    separation  boundary separation d0 and the critical necks
    area        catenoid band versus geodesic caps, K and Lambda0
    cli         the ``catenoid`` command
"""

__version__ = "0.1.0"

from .area import K_constant, band_area, caps_area, compare, f_area_difference, lambda0
from .catenary import Catenary, envelope, intersect, profile_x, sample_curve
from .errors import (
    BudgetExceededError,
    CatenoidError,
    ConvergenceError,
    DomainError,
    InconclusiveError,
    InvalidBracketError,
    NoSolutionError,
    NonDecayingIntegrandError,
)
from .hgeom import BallPoint, HalfDiskPoint, ball_to_halfdisk, halfdisk_to_ball
from .quad import QuadConfig
from .separation import critical_constants, d0, d0_prime, solve_boundary_separation

__all__ = [
    "__version__",
    "BallPoint",
    "BudgetExceededError",
    "Catenary",
    "CatenoidError",
    "ConvergenceError",
    "DomainError",
    "HalfDiskPoint",
    "InconclusiveError",
    "InvalidBracketError",
    "K_constant",
    "NoSolutionError",
    "NonDecayingIntegrandError",
    "QuadConfig",
    "ball_to_halfdisk",
    "band_area",
    "caps_area",
    "compare",
    "critical_constants",
    "d0",
    "d0_prime",
    "envelope",
    "f_area_difference",
    "halfdisk_to_ball",
    "intersect",
    "lambda0",
    "profile_x",
    "sample_curve",
    "solve_boundary_separation",
]
