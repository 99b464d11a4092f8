"""Closed-form interface operators for the flat configuration.

With flat surface, interface and bottom the operators are Fourier
multipliers:

    G2 psi2          = sqrt(mu)|D| tanh((sqrt(mu)/delta)|D|) psi2
    G1 (psi1, psi2)  = sqrt(mu)|D| tanh(sqrt(mu)|D|) psi1
                       + sqrt(mu)|D| tanh((sqrt(mu)/delta)|D|)/cosh(sqrt(mu)|D|) psi2
    H  (psi1, psi2)  = grad psi1 / cosh(sqrt(mu)|D|)
                       - tanh((sqrt(mu)/delta)|D|) tanh(sqrt(mu)|D|) grad psi2

All multipliers vanish (or equal 1 for the H psi1 factor) at |k| = 0.
"""

from __future__ import annotations

import numpy as np

from ..core import PhysicalParams, ScalarField, VectorField
from .. import spectral


def g2_multiplier(params: PhysicalParams):
    rm = np.sqrt(params.mu)
    return lambda k: rm * k * np.tanh((rm / params.delta) * k)


def g1_psi1_multiplier(params: PhysicalParams):
    rm = np.sqrt(params.mu)
    return lambda k: rm * k * np.tanh(rm * k)


def g1_psi2_multiplier(params: PhysicalParams):
    rm = np.sqrt(params.mu)
    return lambda k: rm * k * np.tanh((rm / params.delta) * k) / np.cosh(rm * k)


def h_psi1_multiplier(params: PhysicalParams):
    rm = np.sqrt(params.mu)
    return lambda k: 1.0 / np.cosh(rm * k)


def h_psi2_multiplier(params: PhysicalParams):
    rm = np.sqrt(params.mu)
    return lambda k: -np.tanh((rm / params.delta) * k) * np.tanh(rm * k)


def g2_flat(psi2: ScalarField, params: PhysicalParams) -> ScalarField:
    """Exact interface operator G2 of the flat configuration."""
    return spectral.apply_multiplier(psi2, g2_multiplier(params))


def g1_flat(
    psi1: ScalarField, psi2: ScalarField, params: PhysicalParams
) -> ScalarField:
    """Exact surface operator G1 of the flat configuration."""
    a = spectral.apply_multiplier(psi1, g1_psi1_multiplier(params))
    b = spectral.apply_multiplier(psi2, g1_psi2_multiplier(params))
    return ScalarField(psi1.grid, a.values + b.values)


def h_flat(
    psi1: ScalarField, psi2: ScalarField, params: PhysicalParams
) -> VectorField:
    """Exact interface velocity trace H of the flat configuration."""
    p1 = spectral.apply_multiplier(psi1, h_psi1_multiplier(params))
    p2 = spectral.apply_multiplier(psi2, h_psi2_multiplier(params))
    g1 = spectral.grad(p1)
    g2 = spectral.grad(p2)
    return VectorField(psi1.grid, g1.values + g2.values)
