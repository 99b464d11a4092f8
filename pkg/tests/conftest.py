import numpy as np
import pytest

from stratwave.core import GridSpec, PhysicalParams, ScalarField, SurfaceState, VectorField
from stratwave import spectral


@pytest.fixture
def grid64():
    return GridSpec(dim=1, nx=64)


@pytest.fixture
def params_fig2():
    # mu=0.1, delta=1/3, gamma=2/3 parameter set used throughout
    return PhysicalParams(gamma=2.0 / 3.0, delta=1.0 / 3.0, mu=0.1, eps1=0.5, eps2=0.5)


def single_mode(grid, j=1, amp=1.0, phase=0.0, kind="cos"):
    (x,) = grid.meshgrid() if grid.dim == 1 else (grid.meshgrid()[0],)
    k = 2.0 * np.pi * j / grid.length
    f = np.cos(k * x + phase) if kind == "cos" else np.sin(k * x + phase)
    return ScalarField(grid, amp * f)


def gradient_of(grid, psi_values):
    return spectral.grad(ScalarField(grid, psi_values))


def smooth_state(grid, a1=0.12, a2=0.1, c1=0.15, c2=0.1, h_min=1e-3):
    """Deterministic smooth low-mode state used across tests."""
    (x,) = grid.meshgrid()
    z1 = a1 * np.cos(2 * np.pi * x / grid.length)
    z2 = a2 * np.cos(2 * np.pi * x / grid.length + 0.7)
    psi1 = c1 * np.sin(2 * np.pi * x / grid.length) + 0.4 * c1 * np.sin(
        4 * np.pi * x / grid.length + 0.3
    )
    psi2 = c2 * np.sin(2 * np.pi * x / grid.length + 1.1) + 0.5 * c2 * np.sin(
        4 * np.pi * x / grid.length
    )
    return SurfaceState(
        ScalarField(grid, z1),
        ScalarField(grid, z2),
        gradient_of(grid, psi1),
        gradient_of(grid, psi2),
        h_min=h_min,
    )


def bump_bottom(grid, amp=0.15):
    (x,) = grid.meshgrid()
    return ScalarField(grid, amp * np.cos(2 * np.pi * x / grid.length + 0.2))
