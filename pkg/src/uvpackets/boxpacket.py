"""The particle-in-a-box wave packet as a truncated eigenfunction series.

Inside walls at u = +/- L/2 the product eigenfunctions are
cos(n pi u / L) cos(n pi v / L) for odd n and sin * sin for even n, and the
packet is

    Psi(u, v) = sum_{n odd} A(n) cos(n pi u/L) cos(n pi v/L)
              + i sum_{n even} A(n) sin(n pi u/L) sin(n pi v/L).

The normative coefficients come from the projection of the two-Gaussian
initial profile onto the bare trigonometric modes,

    A(n) = (2/L) * integral_{-L/2}^{L/2} Psi(u, 0) trig_n(u) du,

evaluated by adaptive quadrature (``coefficient_numeric``).  The published
closed-form Erfi expression for A(n) is transcribed verbatim in
``coefficient_closed`` as a cross-check; the validation suite compares the
two and reports any disagreement rather than patching either side.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .fields import Field2D, Grid2D
from .freepacket import FreePacketParams, initial_condition
from .numerics import QuadratureSpec, erfi, integrate_adaptive

__all__ = [
    "BoxPacketParams",
    "ModeCoefficient",
    "eigenfunction",
    "coefficient_closed",
    "coefficient_numeric",
    "mode_coefficients",
    "packet_series",
    "series_field",
]


@dataclass(frozen=True)
class BoxPacketParams:
    """Box width L, Gaussian parameters (alpha, d) and series truncation."""

    L: float
    alpha: float
    d: float
    n_max: int

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError(f"L must be > 0 (got {self.L})")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0 (got {self.alpha})")
        if not abs(self.d) < self.L / 2:
            raise ValueError(
                f"|d| must be < L/2 (got d={self.d}, L/2={self.L / 2})"
            )
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1 (got {self.n_max})")

    def free_params(self) -> FreePacketParams:
        return FreePacketParams(alpha=self.alpha, d=abs(self.d))


@dataclass(frozen=True)
class ModeCoefficient:
    """Series coefficient of mode n; parity follows from n."""

    n: int
    value: complex

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"mode index must be >= 1 (got {self.n})")

    @property
    def parity(self) -> str:
        """'even' for cosine modes (odd n), 'odd' for sine modes (even n)."""
        return "even" if self.n % 2 == 1 else "odd"


def eigenfunction(n: int, q, L: float):
    """Normalized box eigenfunction sqrt(2/L) cos/sin(n pi q / L).

    Cosine for odd n, sine for even n; vanishes at the walls q = +/- L/2.
    Raises ValueError outside the box.
    """
    if n < 1:
        raise ValueError(f"mode index must be >= 1 (got {n})")
    q = np.asarray(q, dtype=float)
    if np.any(np.abs(q) > L / 2):
        raise ValueError(f"|q| must be <= L/2 = {L / 2}")
    arg = n * math.pi * q / L
    out = math.sqrt(2.0 / L) * (np.cos(arg) if n % 2 == 1 else np.sin(arg))
    return out if out.ndim else float(out)


def coefficient_closed(n: int, p: BoxPacketParams) -> complex:
    """Published closed form for A(n): four Erfi terms, transcribed verbatim.

    Kept as printed so the validation suite can compare it against the
    projection integral; overflow in erfi propagates for extreme
    n pi / (sqrt(alpha) L).
    """
    if n < 1:
        raise ValueError(f"mode index must be >= 1 (got {n})")
    L, al, d = p.L, p.alpha, p.d
    npi = n * math.pi
    s = math.sqrt(al)
    pref = -1j * cmath.exp(npi * (npi + 4j * al * d * L) / (4.0 * al * L * L)) \
        / (L * math.sqrt(al / math.pi))
    z1 = (npi + 2j * al * L * (d - L)) / (2.0 * s * L)
    z2 = (npi - 2j * al * L * (d - L)) / (2.0 * s * L)
    z3 = (npi - 2j * al * L * (d + L)) / (2.0 * s * L)
    z4 = (npi + 2j * al * L * (d + L)) / (2.0 * s * L)
    bracket = (-erfi(z1)
               + cmath.exp(2j * d * npi / L) * (erfi(z2) - erfi(z3))
               + erfi(z4))
    return pref * bracket


def coefficient_numeric(n: int, p: BoxPacketParams,
                        quad: QuadratureSpec | None = None) -> float:
    """Projection integral for A(n); the normative coefficient path.

    (2/L) * integral over the box of Psi(u,0) times cos(n pi u/L) for odd n
    or sin(n pi u/L) for even n.  The initial profile is even, so every
    even-n (sine) projection vanishes identically.
    """
    if n < 1:
        raise ValueError(f"mode index must be >= 1 (got {n})")
    if quad is None:
        quad = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-12,
                              max_subdivisions=4000, tail_cutoff=p.L)
    fp = p.free_params()
    k = n * math.pi / p.L
    trig = np.cos if n % 2 == 1 else np.sin

    def integrand(u):
        return initial_condition(u, fp) * trig(k * u)

    val = integrate_adaptive(integrand, -p.L / 2, p.L / 2, quad)
    return (2.0 / p.L) * val.real


def mode_coefficients(p: BoxPacketParams, quad: QuadratureSpec | None = None,
                      source: str = "numeric") -> tuple[ModeCoefficient, ...]:
    """All coefficients n = 1..n_max from the chosen path."""
    if source == "numeric":
        return tuple(ModeCoefficient(n, complex(coefficient_numeric(n, p, quad)))
                     for n in range(1, p.n_max + 1))
    if source == "closed":
        return tuple(ModeCoefficient(n, coefficient_closed(n, p))
                     for n in range(1, p.n_max + 1))
    raise ValueError(f"source must be 'numeric' or 'closed' (got {source!r})")


def _check_inside(x, half: float, name: str):
    if np.any(np.abs(np.asarray(x, dtype=float)) > half):
        raise ValueError(f"|{name}| must be <= L/2 = {half}")


def packet_series(u, v, p: BoxPacketParams, coeffs):
    """Truncated series evaluation at (u, v); broadcasts over arrays.

    Odd modes contribute A(n) cos cos to the real part, even modes
    contribute i A(n) sin sin.  Vanishes on all four walls.
    """
    _check_inside(u, p.L / 2, "u")
    _check_inside(v, p.L / 2, "v")
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    out = np.zeros(np.broadcast(u, v).shape, dtype=np.complex128)
    for c in coeffs:
        k = c.n * math.pi / p.L
        if c.n % 2 == 1:
            out += c.value * np.cos(k * u) * np.cos(k * v)
        else:
            out += 1j * c.value * np.sin(k * u) * np.sin(k * v)
    return out if out.ndim else complex(out)


def series_field(grid: Grid2D, p: BoxPacketParams, coeffs) -> Field2D:
    """Series evaluation over a whole grid via mode outer products.

    Equivalent to sampling :func:`packet_series` node by node but built
    from per-axis trig tables, which keeps large n_max affordable.
    """
    u = grid.u
    v = grid.v
    _check_inside(u, p.L / 2, "u")
    _check_inside(v, p.L / 2, "v")
    values = np.zeros((grid.n_v, grid.n_u), dtype=np.complex128)
    for c in coeffs:
        k = c.n * math.pi / p.L
        if c.n % 2 == 1:
            values += c.value * np.outer(np.cos(k * v), np.cos(k * u))
        else:
            values += 1j * c.value * np.outer(np.sin(k * v), np.sin(k * u))
    return Field2D(grid, values)
