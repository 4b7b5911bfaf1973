"""Classical trajectories in the (u, v) plane.

Parameterizing one solution of the equations of motion by a second,
equal-energy solution removes time from the picture: an oscillator traces
an ellipse (a circle for quarter-period phase shift), a free particle
traces straight lines of unit |slope|, and a particle between hard walls
traces the specular triangle-wave closure of those lines.  The packet
validation uses these curves as the loci where |Psi|^2 should peak.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "OscillatorOrbit",
    "LinePath",
    "BoxReflectedPath",
    "oscillator_curve",
    "free_path",
    "box_path",
    "distance_to_free_paths",
]


def _wrap_phase(x: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    return math.pi - (math.pi - x) % (2.0 * math.pi)


@dataclass(frozen=True)
class OscillatorOrbit:
    """Equal-energy oscillator pair u(t), v(t) with phase offsets delta1/2."""

    amplitude: float
    delta1: float
    delta2: float
    omega: float = 1.0

    def __post_init__(self):
        if not self.amplitude > 0:
            raise ValueError(f"amplitude must be > 0 (got {self.amplitude})")
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0 (got {self.omega})")

    @property
    def delta(self) -> float:
        """Phase difference delta1 - delta2, wrapped to (-pi, pi]."""
        return _wrap_phase(self.delta1 - self.delta2)

    def energy(self, mass: float = 1.0) -> float:
        return 0.5 * mass * self.omega**2 * self.amplitude**2


def oscillator_curve(orbit: OscillatorOrbit, v):
    """Both branches u_+/-(v) of the oscillator trajectory.

    u = cos(delta) v +/- sin(delta) sqrt(A^2 - v^2); an ellipse in general,
    the circle u^2 + v^2 = A^2 for delta = pi/2.  Raises ValueError outside
    |v| <= A.
    """
    v = np.asarray(v, dtype=float)
    a = orbit.amplitude
    if np.any(np.abs(v) > a):
        raise ValueError(f"|v| must be <= amplitude {a}")
    delta = orbit.delta
    root = np.sqrt(np.maximum(a * a - v * v, 0.0))
    base = math.cos(delta) * v
    off = math.sin(delta) * root
    plus = np.asarray(base + off)
    minus = np.asarray(base - off)
    if plus.ndim:
        return plus, minus
    return float(plus), float(minus)


@dataclass(frozen=True)
class LinePath:
    """Free trajectory u = sign*v + u0 - sign*v0 through (u0, v0)."""

    sign: int
    u0: float
    v0: float = 0.0

    def __post_init__(self):
        if self.sign not in (+1, -1):
            raise ValueError(f"sign must be +1 or -1 (got {self.sign})")


def free_path(path: LinePath, v):
    """u(v) along a free-particle line (unit |slope|)."""
    v = np.asarray(v, dtype=float)
    out = path.sign * v + path.u0 - path.sign * path.v0
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class BoxReflectedPath:
    """Free motion between hard walls at u = +/- L/2, starting from u0 at
    v = 0 with slope ``direction``, reflecting specularly."""

    L: float
    u0: float
    direction: int

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError(f"L must be > 0 (got {self.L})")
        if not (-self.L / 2 < self.u0 < self.L / 2):
            raise ValueError(f"u0 must lie inside (-L/2, L/2) (got {self.u0})")
        if self.direction not in (+1, -1):
            raise ValueError(f"direction must be +1 or -1 (got {self.direction})")


def box_path(path: BoxReflectedPath, v):
    """Triangle wave of period 2L: the specularly reflected trajectory.

    Output is always inside [-L/2, L/2].
    """
    v = np.asarray(v, dtype=float)
    L = path.L
    w = (path.u0 + path.direction * v + L / 2) % (2.0 * L)
    folded = np.where(w <= L, w, 2.0 * L - w) - L / 2
    return folded if folded.ndim else float(folded)


def distance_to_free_paths(u, v, d: float):
    """Perpendicular distance to the nearest of the four lines u = +/-v +/- d."""
    if d < 0:
        raise ValueError(f"d must be >= 0 (got {d})")
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    root2 = math.sqrt(2.0)
    dist = np.minimum.reduce([
        np.abs(u - v - d), np.abs(u - v + d),
        np.abs(u + v - d), np.abs(u + v + d),
    ]) / root2
    return dist if dist.ndim else float(dist)
