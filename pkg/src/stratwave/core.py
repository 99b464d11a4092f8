"""Dimensionless parameters, periodic grids, and field containers.

All types are immutable after construction (arrays are stored read-only) and
safe to share across threads; every operation in the package is a pure
function of these values.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import ConfigError, ConnectednessViolation

TWO_PI = 2.0 * np.pi

#: default floor for the layer-connectedness condition, dimensionless units
DEFAULT_H_MIN = 1e-3


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class PhysicalParams:
    """The six dimensionless numbers of the two-layer system.

    gamma : density ratio rho1/rho2, in (0, 1) for a stable stratification
    delta : depth ratio h10/h20
    mu    : shallowness, (h10/lambda)^2
    eps1  : surface nonlinearity a1/h10
    eps2  : interface nonlinearity a2/h10
    beta  : bottom variation B/h10
    alpha : eps1/eps2 (derived; must match when eps2 > 0)
    """

    gamma: float
    delta: float
    mu: float
    eps1: float = 0.0
    eps2: float = 0.0
    beta: float = 0.0
    alpha: Optional[float] = None
    allow_unstable: bool = False

    def __post_init__(self):
        if not self.allow_unstable and not 0.0 <= self.gamma < 1.0:
            raise ConfigError(
                f"gamma = {self.gamma} outside [0, 1); two positive dispersion "
                "roots require gamma < 1 (pass allow_unstable=True to override)"
            )
        if self.delta <= 0 or self.mu <= 0:
            raise ConfigError("delta and mu must be positive")
        if self.eps1 < 0 or self.eps2 < 0 or self.beta < 0:
            raise ConfigError("eps1, eps2, beta must be nonnegative")
        if self.alpha is None:
            if self.eps2 > 0:
                object.__setattr__(self, "alpha", self.eps1 / self.eps2)
            elif self.eps1 == 0:
                object.__setattr__(self, "alpha", 0.0)
            else:
                raise ConfigError("alpha is undefined for eps2 = 0, eps1 > 0")
        elif self.eps2 > 0:
            expected = self.eps1 / self.eps2
            scale = max(abs(expected), 1.0)
            if abs(self.alpha - expected) > 1e-12 * scale:
                raise ConfigError(
                    f"alpha = {self.alpha} inconsistent with eps1/eps2 = {expected}"
                )

    def with_mu(self, mu: float) -> "PhysicalParams":
        return replace(self, mu=mu)


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid on a 1- or 2-torus of period `length`.

    Wavenumbers are k_j = 2*pi*j/length with j in [-n/2, n/2).
    """

    dim: int
    nx: int
    ny: Optional[int] = None
    length: float = TWO_PI

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ConfigError("dim must be 1 or 2")
        if not _is_power_of_two(self.nx) or self.nx < 8:
            raise ConfigError("nx must be a power of two >= 8")
        if self.dim == 2:
            if self.ny is None or not _is_power_of_two(self.ny) or self.ny < 8:
                raise ConfigError("ny must be a power of two >= 8 when dim == 2")
        elif self.ny is not None:
            raise ConfigError("ny must be omitted when dim == 1")
        if self.length <= 0:
            raise ConfigError("length must be positive")

    @property
    def shape(self) -> tuple:
        return (self.nx,) if self.dim == 1 else (self.nx, self.ny)

    @property
    def npoints(self) -> int:
        return self.nx if self.dim == 1 else self.nx * self.ny

    @property
    def dx(self) -> float:
        return self.length / self.nx

    def axis_points(self, axis: int = 0) -> np.ndarray:
        n = self.nx if axis == 0 else self.ny
        return np.arange(n) * (self.length / n)

    def meshgrid(self) -> tuple:
        """Coordinate arrays broadcastable to `shape`."""
        if self.dim == 1:
            return (self.axis_points(0),)
        x = self.axis_points(0)[:, None]
        y = self.axis_points(1)[None, :]
        return np.broadcast_to(x, self.shape), np.broadcast_to(y, self.shape)


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class ScalarField:
    """Real samples of a scalar on a GridSpec."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = _freeze(self.values)
        if v.shape != self.grid.shape:
            raise ConfigError(f"scalar shape {v.shape} != grid shape {self.grid.shape}")
        if not np.all(np.isfinite(v)):
            raise ConfigError("scalar field contains non-finite values")
        object.__setattr__(self, "values", v)

    @classmethod
    def zeros(cls, grid: GridSpec) -> "ScalarField":
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def constant(cls, grid: GridSpec, value: float) -> "ScalarField":
        return cls(grid, np.full(grid.shape, float(value)))


@dataclass(frozen=True)
class VectorField:
    """Real samples of a d-component horizontal vector on a GridSpec.

    values has shape (dim,) + grid.shape.
    """

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = _freeze(self.values)
        if v.shape != (self.grid.dim,) + self.grid.shape:
            raise ConfigError(
                f"vector shape {v.shape} != {(self.grid.dim,) + self.grid.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise ConfigError("vector field contains non-finite values")
        object.__setattr__(self, "values", v)

    @classmethod
    def zeros(cls, grid: GridSpec) -> "VectorField":
        return cls(grid, np.zeros((grid.dim,) + grid.shape))

    def component(self, i: int) -> ScalarField:
        return ScalarField(self.grid, self.values[i])


#: relative curl tolerance for gradient fields stored in a SurfaceState
CURL_FREE_TOL = 1e-10


def _l2(a: np.ndarray) -> float:
    return float(np.sqrt(np.mean(a * a)))


def _check_gradient_field(v: VectorField, name: str) -> None:
    # a periodic gradient has zero mean in every component; in 2D it is
    # additionally curl-free
    from . import spectral  # local import to avoid a cycle

    scale = _l2(v.values)
    if scale == 0.0:
        return
    means = np.mean(v.values.reshape(v.grid.dim, -1), axis=1)
    if np.max(np.abs(means)) > CURL_FREE_TOL * max(scale, 1.0):
        raise ConfigError(f"{name} has nonzero mean; not a periodic gradient")
    if v.grid.dim == 2:
        curl = spectral.curl2d_arr(v.grid, v.values)
        if _l2(curl) > CURL_FREE_TOL * scale:
            raise ConfigError(f"{name} is not curl-free (|curl| = {_l2(curl):.3e})")


@dataclass(frozen=True)
class SurfaceState:
    """The evolved quadruplet (zeta1, zeta2, grad psi1, grad psi2)."""

    zeta1: ScalarField
    zeta2: ScalarField
    gradpsi1: VectorField
    gradpsi2: VectorField
    h_min: float = DEFAULT_H_MIN

    def __post_init__(self):
        if self.h_min <= 0:
            raise ConfigError(f"h_min = {self.h_min} must be positive")
        g = self.zeta1.grid
        for f in (self.zeta2, self.gradpsi1, self.gradpsi2):
            if f.grid != g:
                raise ConfigError("state fields must share one GridSpec")
        _check_gradient_field(self.gradpsi1, "gradpsi1")
        _check_gradient_field(self.gradpsi2, "gradpsi2")

    @property
    def grid(self) -> GridSpec:
        return self.zeta1.grid

    @classmethod
    def rest(cls, grid: GridSpec, h_min: float = DEFAULT_H_MIN) -> "SurfaceState":
        return cls(
            ScalarField.zeros(grid),
            ScalarField.zeros(grid),
            VectorField.zeros(grid),
            VectorField.zeros(grid),
            h_min=h_min,
        )


@dataclass(frozen=True)
class SurfaceTangent:
    """Instantaneous time derivative of a SurfaceState (no invariants)."""

    zeta1: np.ndarray
    zeta2: np.ndarray
    gradpsi1: np.ndarray
    gradpsi2: np.ndarray

    def scaled(self, c: float) -> "SurfaceTangent":
        return SurfaceTangent(
            c * self.zeta1, c * self.zeta2, c * self.gradpsi1, c * self.gradpsi2
        )


def thicknesses(state: SurfaceState, params: PhysicalParams, b: ScalarField):
    """Layer thicknesses (h1, h2) = (1 + eps1*zeta1 - eps2*zeta2,
    1/delta - beta*b + eps2*zeta2).

    Raises ConnectednessViolation if either thickness drops below the
    state's h_min floor anywhere.
    """
    if b.grid != state.grid:
        raise ConfigError("bottom shape must share the state's GridSpec")
    e1, e2, beta = params.eps1, params.eps2, params.beta
    h1 = 1.0 + e1 * state.zeta1.values - e2 * state.zeta2.values
    h2 = 1.0 / params.delta - beta * b.values + e2 * state.zeta2.values
    m1, m2 = float(h1.min()), float(h2.min())
    if m1 < state.h_min or m2 < state.h_min:
        raise ConnectednessViolation(
            f"min thicknesses (h1, h2) = ({m1:.6g}, {m2:.6g}) below floor "
            f"{state.h_min:g}"
        )
    return ScalarField(state.grid, h1), ScalarField(state.grid, h2)


def thickness_arrays(
    state: SurfaceState, params: PhysicalParams, b: ScalarField
) -> tuple:
    h1, h2 = thicknesses(state, params, b)
    return h1.values, h2.values
