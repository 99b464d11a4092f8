"""Trigonometric transforms, spectral derivatives, multipliers, dealiasing.

A `Transform` instance caches the wavenumber arrays of one GridSpec; all
field-level operations below delegate to it. Differentiation zeroes the
odd Nyquist mode so real input always yields real derivatives.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import GridSpec, ScalarField, VectorField
from .errors import ConfigError, NonFiniteMultiplier


class Transform:
    """Cached spectral machinery for one periodic grid."""

    def __init__(self, grid: GridSpec):
        self.grid = grid
        ns = grid.shape
        axes_k = []
        axes_kdiff = []
        for n in ns:
            k = 2.0 * np.pi * np.fft.fftfreq(n, d=grid.length / n)
            kd = k.copy()
            kd[n // 2] = 0.0  # zero the odd Nyquist derivative
            axes_k.append(k)
            axes_kdiff.append(kd)
        if grid.dim == 1:
            self.k = (axes_k[0],)
            self.kdiff = (axes_kdiff[0],)
            self.kmag = np.abs(axes_k[0])
            mask = np.abs(np.fft.fftfreq(ns[0]) * ns[0]) <= ns[0] // 3
            self.dealias_mask = mask
        else:
            kx = axes_k[0][:, None]
            ky = axes_k[1][None, :]
            self.k = (np.broadcast_to(kx, ns), np.broadcast_to(ky, ns))
            self.kdiff = (
                np.broadcast_to(axes_kdiff[0][:, None], ns),
                np.broadcast_to(axes_kdiff[1][None, :], ns),
            )
            self.kmag = np.sqrt(kx**2 + ky**2)
            jx = np.abs(np.fft.fftfreq(ns[0]) * ns[0])[:, None]
            jy = np.abs(np.fft.fftfreq(ns[1]) * ns[1])[None, :]
            self.dealias_mask = (jx <= ns[0] // 3) & (jy <= ns[1] // 3)
        self.ksq = sum(kc**2 for kc in self.k)
        self._axes = tuple(range(-grid.dim, 0))

    # -- raw transforms ----------------------------------------------------
    def fft(self, a: np.ndarray) -> np.ndarray:
        return np.fft.fftn(a, axes=self._axes)

    def ifft(self, a: np.ndarray) -> np.ndarray:
        return np.fft.ifftn(a, axes=self._axes).real

    # -- array-level operations --------------------------------------------
    def multiplier(self, a: np.ndarray, m) -> np.ndarray:
        mk = np.asarray(m(self.kmag), dtype=float)
        if not np.all(np.isfinite(mk)):
            bad = self.kmag[~np.isfinite(np.broadcast_to(mk, self.kmag.shape))]
            raise NonFiniteMultiplier(
                f"multiplier not finite at |k| = {bad.flat[0]:g}"
            )
        return self.ifft(mk * self.fft(a))

    def deriv(self, a: np.ndarray, axis: int) -> np.ndarray:
        return self.ifft(1j * self.kdiff[axis] * self.fft(a))

    def grad(self, a: np.ndarray) -> np.ndarray:
        ah = self.fft(a)
        return np.stack([self.ifft(1j * kd * ah) for kd in self.kdiff])

    def div(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros(self.grid.shape)
        for i, kd in enumerate(self.kdiff):
            out += self.ifft(1j * kd * self.fft(v[i]))
        return out

    def lap(self, a: np.ndarray) -> np.ndarray:
        return self.ifft(-self.ksq * self.fft(a))

    def dealias(self, a: np.ndarray) -> np.ndarray:
        return self.ifft(self.dealias_mask * self.fft(a))

    def dealias_vec(self, v: np.ndarray) -> np.ndarray:
        return np.stack([self.dealias(v[i]) for i in range(v.shape[0])])

    def hs_norm(self, a: np.ndarray, s: float = 2.0) -> float:
        """Discrete Sobolev H^s norm, Parseval-normalized so that
        hs_norm(f, 0)**2 equals the torus integral of f**2."""
        coeff = self.fft(a) / self.grid.npoints
        weight = (1.0 + self.ksq) ** s
        vol = self.grid.length**self.grid.dim
        return float(np.sqrt(vol * np.sum(weight * np.abs(coeff) ** 2)))

    def integral(self, a: np.ndarray) -> float:
        return float(np.mean(a) * self.grid.length**self.grid.dim)

    def potential(self, v: np.ndarray) -> np.ndarray:
        """Zero-mean scalar whose gradient is v (v must be a gradient)."""
        means = np.mean(v.reshape(self.grid.dim, -1), axis=1)
        scale = max(float(np.sqrt(np.mean(v * v))), 1e-300)
        if np.max(np.abs(means)) > 1e-10 * max(scale, 1.0):
            raise ConfigError("field has nonzero mean; no periodic potential")
        ksq = self.ksq.copy()
        if self.grid.dim == 1:
            ksq = self.k[0] ** 2
        num = sum(kc * self.fft(v[i]) for i, kc in enumerate(self.k))
        with np.errstate(divide="ignore", invalid="ignore"):
            psih = np.where(ksq > 0, -1j * num / np.where(ksq > 0, ksq, 1.0), 0.0)
        return self.ifft(psih)

    def curl2d(self, v: np.ndarray) -> np.ndarray:
        if self.grid.dim != 2:
            raise ConfigError("curl2d requires dim == 2")
        return self.deriv(v[1], 0) - self.deriv(v[0], 1)

    def diff_matrix(self) -> np.ndarray:
        """Dense Fourier differentiation matrix along x (1D grids only)."""
        if self.grid.dim != 1:
            raise ConfigError("diff_matrix is built for 1D grids")
        n = self.grid.nx
        eye = np.eye(n)
        return np.fft.ifft(
            1j * self.kdiff[0][:, None] * np.fft.fft(eye, axis=0), axis=0
        ).real


@lru_cache(maxsize=64)
def transform(grid: GridSpec) -> Transform:
    return Transform(grid)


# -- field-level API -------------------------------------------------------


def apply_multiplier(f: ScalarField, m) -> ScalarField:
    """Apply the Fourier multiplier m(|k|); m must be finite at every grid
    wavenumber including |k| = 0."""
    return ScalarField(f.grid, transform(f.grid).multiplier(f.values, m))


def grad(f: ScalarField) -> VectorField:
    return VectorField(f.grid, transform(f.grid).grad(f.values))


def div(v: VectorField) -> ScalarField:
    return ScalarField(v.grid, transform(v.grid).div(v.values))


def laplacian(f: ScalarField) -> ScalarField:
    return ScalarField(f.grid, transform(f.grid).lap(f.values))


def dealias(f):
    t = transform(f.grid)
    if isinstance(f, ScalarField):
        return ScalarField(f.grid, t.dealias(f.values))
    return VectorField(f.grid, t.dealias_vec(f.values))


def hs_norm(f, s: float = 2.0) -> float:
    t = transform(f.grid)
    if isinstance(f, ScalarField):
        return t.hs_norm(f.values, s)
    return float(np.sqrt(sum(t.hs_norm(f.values[i], s) ** 2 for i in range(f.grid.dim))))


def potential_from_gradient(v: VectorField) -> ScalarField:
    return ScalarField(v.grid, transform(v.grid).potential(v.values))


def curl2d_arr(grid: GridSpec, v: np.ndarray) -> np.ndarray:
    return transform(grid).curl2d(v)
