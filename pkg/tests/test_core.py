import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratwave.core import (
    GridSpec,
    PhysicalParams,
    ScalarField,
    SurfaceState,
    VectorField,
    thicknesses,
)
from stratwave.errors import ConfigError, ConnectednessViolation

from conftest import gradient_of, smooth_state


class TestPhysicalParams:
    def test_alpha_derived(self):
        p = PhysicalParams(gamma=0.5, delta=1.0, mu=0.1, eps1=0.2, eps2=0.4)
        assert p.alpha == pytest.approx(0.5)

    def test_alpha_consistency_enforced(self):
        with pytest.raises(ConfigError):
            PhysicalParams(gamma=0.5, delta=1.0, mu=0.1, eps1=0.2, eps2=0.4, alpha=0.7)

    def test_gamma_ge_one_rejected_without_override(self):
        with pytest.raises(ConfigError):
            PhysicalParams(gamma=1.0, delta=1.0, mu=0.1)
        p = PhysicalParams(gamma=1.01, delta=1.0, mu=0.1, allow_unstable=True)
        assert p.gamma == pytest.approx(1.01)

    def test_positivity(self):
        with pytest.raises(ConfigError):
            PhysicalParams(gamma=0.5, delta=0.0, mu=0.1)
        with pytest.raises(ConfigError):
            PhysicalParams(gamma=0.5, delta=1.0, mu=-0.1)
        with pytest.raises(ConfigError):
            PhysicalParams(gamma=0.5, delta=1.0, mu=0.1, eps1=-1e-3)

    def test_rigid_lid_alpha_zero(self):
        p = PhysicalParams(gamma=0.5, delta=1.0, mu=0.1, eps1=0.0, eps2=0.3)
        assert p.alpha == 0.0


class TestGridSpec:
    def test_power_of_two_required(self):
        with pytest.raises(ConfigError):
            GridSpec(dim=1, nx=48)
        with pytest.raises(ConfigError):
            GridSpec(dim=1, nx=4)

    def test_wavenumber_convention(self):
        g = GridSpec(dim=1, nx=16, length=2 * np.pi)
        k = 2 * np.pi * np.fft.fftfreq(16, d=g.dx)
        js = np.fft.fftfreq(16) * 16
        assert np.allclose(k, js * 2 * np.pi / g.length)
        assert js.min() == -8 and js.max() == 7  # j in [-n/2, n/2)

    def test_2d_requires_ny(self):
        with pytest.raises(ConfigError):
            GridSpec(dim=2, nx=16)
        g = GridSpec(dim=2, nx=16, ny=32)
        assert g.shape == (16, 32)


class TestFields:
    def test_shape_and_finiteness(self, grid64):
        with pytest.raises(ConfigError):
            ScalarField(grid64, np.zeros(32))
        bad = np.zeros(64)
        bad[3] = np.inf
        with pytest.raises(ConfigError):
            ScalarField(grid64, bad)

    def test_vector_component_count(self, grid64):
        with pytest.raises(ConfigError):
            VectorField(grid64, np.zeros((2, 64)))
        v = VectorField(grid64, np.zeros((1, 64)))
        assert v.component(0).values.shape == (64,)

    def test_immutability(self, grid64):
        f = ScalarField.zeros(grid64)
        with pytest.raises(ValueError):
            f.values[0] = 1.0


class TestSurfaceState:
    def test_nonpositive_h_min_rejected(self, grid64):
        with pytest.raises(ConfigError):
            SurfaceState.rest(grid64, h_min=0.0)
        with pytest.raises(ConfigError):
            SurfaceState.rest(grid64, h_min=-1.0)

    def test_gradient_fields_must_have_zero_mean(self, grid64):
        v = VectorField(grid64, np.ones((1, 64)))
        with pytest.raises(ConfigError):
            SurfaceState(
                ScalarField.zeros(grid64),
                ScalarField.zeros(grid64),
                v,
                VectorField.zeros(grid64),
            )

    def test_curl_free_enforced_2d(self):
        g = GridSpec(dim=2, nx=16, ny=16)
        x, y = g.meshgrid()
        rot = np.stack([-np.sin(y), np.sin(x)])  # rotational field
        with pytest.raises(ConfigError):
            SurfaceState(
                ScalarField.zeros(g),
                ScalarField.zeros(g),
                VectorField(g, rot),
                VectorField.zeros(g),
            )


class TestThicknesses:
    def test_rest_state(self, grid64):
        p = PhysicalParams(gamma=0.5, delta=1.0 / 3.0, mu=0.1, eps1=1.0, eps2=1.0)
        h1, h2 = thicknesses(SurfaceState.rest(grid64), p, ScalarField.zeros(grid64))
        assert np.allclose(h1.values, 1.0)
        assert np.allclose(h2.values, 3.0)

    def test_affine_evaluation(self, grid64):
        # delta=1/3, zeta2 = 0.1, eps2=1 -> h1 = 0.9, h2 = 3.1
        p = PhysicalParams(gamma=0.5, delta=1.0 / 3.0, mu=0.1, eps1=1.0, eps2=1.0)
        state = SurfaceState(
            ScalarField.zeros(grid64),
            ScalarField.constant(grid64, 0.1),
            VectorField.zeros(grid64),
            VectorField.zeros(grid64),
        )
        h1, h2 = thicknesses(state, p, ScalarField.zeros(grid64))
        assert np.allclose(h1.values, 0.9)
        assert np.allclose(h2.values, 3.1)

    def test_violation_raises(self, grid64):
        # eps2*zeta2 = 1.5 makes h1 = -0.5
        p = PhysicalParams(gamma=0.5, delta=1.0, mu=0.1, eps1=1.0, eps2=1.0)
        state = SurfaceState(
            ScalarField.zeros(grid64),
            ScalarField.constant(grid64, 1.5),
            VectorField.zeros(grid64),
            VectorField.zeros(grid64),
        )
        with pytest.raises(ConnectednessViolation):
            thicknesses(state, p, ScalarField.zeros(grid64))

    @settings(max_examples=25, deadline=None)
    @given(
        a1=st.floats(-0.2, 0.2),
        a2=st.floats(-0.2, 0.2),
        ab=st.floats(-0.2, 0.2),
        seed=st.integers(0, 2**31 - 1),
    )
    def test_affine_in_shapes(self, a1, a2, ab, seed):
        # thicknesses of a sum equals sum of thicknesses minus the rest offset
        grid = GridSpec(dim=1, nx=32)
        rng = np.random.default_rng(seed)
        p = PhysicalParams(gamma=0.5, delta=0.8, mu=0.1, eps1=0.3, eps2=0.3, beta=0.2)

        def rand_field(amp):
            c = rng.normal(size=3)
            (x,) = grid.meshgrid()
            w = 2 * np.pi / grid.length
            return amp * (
                c[0] * np.cos(w * x) + c[1] * np.sin(2 * w * x) + 0.2 * c[2]
            )

        za1, zb1 = rand_field(a1), rand_field(a1)
        za2, zb2 = rand_field(a2), rand_field(a2)
        ba, bb = rand_field(ab), rand_field(ab)

        def mk(z1, z2):
            return SurfaceState(
                ScalarField(grid, z1),
                ScalarField(grid, z2),
                VectorField.zeros(grid),
                VectorField.zeros(grid),
                h_min=1e-12,
            )

        h1a, h2a = thicknesses(mk(za1, za2), p, ScalarField(grid, ba))
        h1b, h2b = thicknesses(mk(zb1, zb2), p, ScalarField(grid, bb))
        h1s, h2s = thicknesses(
            mk(za1 + zb1, za2 + zb2), p, ScalarField(grid, ba + bb)
        )
        rest1, rest2 = 1.0, 1.0 / p.delta
        assert np.allclose(h1s.values, h1a.values + h1b.values - rest1, atol=1e-12)
        assert np.allclose(h2s.values, h2a.values + h2b.values - rest2, atol=1e-12)
