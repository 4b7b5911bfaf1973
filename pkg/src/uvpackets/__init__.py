"""Non-dispersive quantum wave packets on the (u, v) configuration plane.

A second, equal-energy classical solution v(t) parameterizes the first,
removing time; quantizing the resulting constraint gives a hyperbolic
equation whose packets follow the classical trajectories without
dispersing.  The package builds those packets for the free particle and
the particle in a box and verifies every checkable property numerically.
"""

from .classical import (BoxReflectedPath, LinePath, OscillatorOrbit, box_path,
                        distance_to_free_paths, free_path, oscillator_curve)
from .boxpacket import (BoxPacketParams, ModeCoefficient, coefficient_closed,
                        coefficient_numeric, eigenfunction, mode_coefficients,
                        packet_series, series_field)
from .fields import Field2D, Grid2D, PhysicalConstants, diff1, diff2, sample
from .freepacket import (FreePacketParams, SpectralDensity, classical_limit_scan,
                         coefficient_A, fwhm_of_largest_peak, initial_condition,
                         initial_slope, packet_closed, packet_spectral)
from .numerics import (QuadratureError, QuadratureSpec, erf_complex, erfi,
                       gaussian_tail_cutoff, integrate_adaptive)
from .validate import (CurrentField, MomentReport, PolarField, PotentialSpec,
                       bohmian_momentum, current_divergence, current_observable,
                       halfline_moments, pde_residual, polar_decompose,
                       probability_current, ridge_trace)

__version__ = "0.1.0"

__all__ = [
    "BoxPacketParams", "BoxReflectedPath", "CurrentField", "Field2D",
    "FreePacketParams", "Grid2D", "LinePath", "ModeCoefficient",
    "MomentReport", "OscillatorOrbit", "PhysicalConstants", "PolarField",
    "PotentialSpec", "QuadratureError", "QuadratureSpec", "SpectralDensity",
    "bohmian_momentum", "box_path", "classical_limit_scan", "coefficient_A",
    "coefficient_closed", "coefficient_numeric", "current_divergence",
    "current_observable", "diff1", "diff2", "distance_to_free_paths",
    "eigenfunction", "erf_complex", "erfi", "free_path",
    "fwhm_of_largest_peak", "gaussian_tail_cutoff", "halfline_moments",
    "initial_condition", "initial_slope", "integrate_adaptive",
    "mode_coefficients", "oscillator_curve", "packet_closed", "packet_series",
    "packet_spectral", "pde_residual", "polar_decompose",
    "probability_current", "ridge_trace", "sample", "series_field",
]
