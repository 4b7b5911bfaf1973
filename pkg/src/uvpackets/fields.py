"""Rectangular (u, v) grids, complex fields sampled over them, and the
finite-difference stencils used by the validation operators.

Fields are stored as 2-D complex arrays of shape ``(n_v, n_u)``: v indexes
rows (outer), u indexes columns (inner).  Flattened row-major this puts
``values[j * n_u + i]`` at ``(u_i, v_j)``, which fixes the CSV row order
emitted by the CLI byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PhysicalConstants",
    "Grid2D",
    "Field2D",
    "sample",
    "diff1",
    "diff2",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar and the particle mass; both default to 1 (natural units)."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError(f"hbar must be > 0 (got {self.hbar})")
        if not self.mass > 0:
            raise ValueError(f"mass must be > 0 (got {self.mass})")


@dataclass(frozen=True)
class Grid2D:
    """Uniform rectangular lattice over [u_min, u_max] x [v_min, v_max]."""

    u_min: float
    u_max: float
    v_min: float
    v_max: float
    n_u: int
    n_v: int

    def __post_init__(self):
        if not self.u_min < self.u_max:
            raise ValueError(f"u_min must be < u_max (got {self.u_min}, {self.u_max})")
        if not self.v_min < self.v_max:
            raise ValueError(f"v_min must be < v_max (got {self.v_min}, {self.v_max})")
        if self.n_u < 3:
            raise ValueError(f"n_u must be >= 3 (got {self.n_u})")
        if self.n_v < 3:
            raise ValueError(f"n_v must be >= 3 (got {self.n_v})")

    @property
    def h_u(self) -> float:
        return (self.u_max - self.u_min) / (self.n_u - 1)

    @property
    def h_v(self) -> float:
        return (self.v_max - self.v_min) / (self.n_v - 1)

    @property
    def u(self) -> np.ndarray:
        return np.linspace(self.u_min, self.u_max, self.n_u)

    @property
    def v(self) -> np.ndarray:
        return np.linspace(self.v_min, self.v_max, self.n_v)

    def meshes(self):
        """(U, V) coordinate arrays of shape (n_v, n_u)."""
        return np.meshgrid(self.u, self.v)


@dataclass
class Field2D:
    """Complex samples over a Grid2D.

    ``edges_valid`` is cleared by :func:`diff2`, whose edge rows/columns are
    copies of the nearest interior values; norms of such fields should be
    taken over :meth:`interior` only.
    """

    grid: Grid2D
    values: np.ndarray
    edges_valid: bool = True

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        expected = (self.grid.n_v, self.grid.n_u)
        if self.values.shape != expected:
            raise ValueError(
                f"field shape {self.values.shape} does not match grid {expected}"
            )
        if not np.isfinite(self.values.view(np.float64)).all():
            raise ValueError("field contains non-finite values")

    def interior(self) -> np.ndarray:
        return self.values[1:-1, 1:-1]

    def abs2(self) -> np.ndarray:
        v = self.values
        return (v.real * v.real + v.imag * v.imag)


def sample(grid: Grid2D, f) -> Field2D:
    """Evaluate ``f(u, v)`` on every node of the grid.

    ``f`` may be numpy-broadcasting (called once on coordinate meshes) or a
    scalar function of two floats.
    """
    U, V = grid.meshes()
    try:
        vals = np.asarray(f(U, V), dtype=np.complex128)
        if vals.shape != U.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array(
            [[f(float(ui), float(vj)) for ui in grid.u] for vj in grid.v],
            dtype=np.complex128,
        )
    return Field2D(grid, vals)


def _axis_index(axis: str) -> int:
    if axis == "u":
        return 1
    if axis == "v":
        return 0
    raise ValueError(f"axis must be 'u' or 'v' (got {axis!r})")


def diff1(f: Field2D, axis: str) -> Field2D:
    """First derivative along an axis.

    Central differences in the interior, second-order one-sided stencils on
    the edges (numpy.gradient with edge_order=2).
    """
    ax = _axis_index(axis)
    h = f.grid.h_u if axis == "u" else f.grid.h_v
    out = np.gradient(f.values, h, axis=ax, edge_order=2)
    return Field2D(f.grid, out, edges_valid=f.edges_valid)


def diff2(f: Field2D, axis: str) -> Field2D:
    """Second derivative along an axis (3-point stencil, interior nodes).

    Edge rows/columns carry copies of the nearest interior values and the
    result is flagged with ``edges_valid=False``; convergence norms must be
    computed on interior nodes.
    """
    ax = _axis_index(axis)
    h = f.grid.h_u if axis == "u" else f.grid.h_v
    v = f.values
    out = np.empty_like(v)
    if ax == 1:
        out[:, 1:-1] = (v[:, 2:] - 2.0 * v[:, 1:-1] + v[:, :-2]) / (h * h)
        out[:, 0] = out[:, 1]
        out[:, -1] = out[:, -2]
    else:
        out[1:-1, :] = (v[2:, :] - 2.0 * v[1:-1, :] + v[:-2, :]) / (h * h)
        out[0, :] = out[1, :]
        out[-1, :] = out[-2, :]
    return Field2D(f.grid, out, edges_valid=False)
