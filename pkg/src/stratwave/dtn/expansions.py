"""Shallow-water expansions of the interface operators.

The second-order kernels are built from

    T[h, b]V = -(1/3) grad(h^3 div V)
               + (1/2)(grad(h^2 grad b . V) - h^2 grad b div V)
               + h grad b (grad b . V)

with A1 = div(h1 grad psi1), A2 = div(h2 grad psi2). Signs follow the
convention G2 psi2 ~ -mu A2 + mu^2 div T[h2, beta b] grad psi2 and
G1 ~ -mu (A1 + A2) + mu^2 (div T1 + div T2 - (1/2) div(h1^2 grad A2)
- div(h1 eps1 grad zeta1 A2)), while H ~ grad psi1 +
mu grad(h1 (A1 + A2) - (1/2) h1^2 lap psi1 - h1 eps1 grad zeta1 . grad psi1).
"""

from __future__ import annotations

import numpy as np

from ..core import (
    PhysicalParams,
    ScalarField,
    SurfaceState,
    VectorField,
    thickness_arrays,
)
from ..errors import ConfigError
from ..spectral import transform


def _check_order(order, allowed):
    if order not in allowed:
        raise ConfigError(f"order must be one of {allowed}, got {order}")


def t_operator(h: ScalarField, bshape: ScalarField, v: VectorField) -> VectorField:
    """Apply T[h, b] to the vector field v (all terms spectral, dealiased)."""
    grid = h.grid
    if bshape.grid != grid or v.grid != grid:
        raise ConfigError("t_operator fields must share one GridSpec")
    t = transform(grid)
    hv, bv, vv = h.values, bshape.values, v.values
    da = t.dealias
    divv = t.div(vv)
    gb = t.grad(bv)
    gb_dot_v = da(np.sum(gb * vv, axis=0))
    out = -(1.0 / 3.0) * t.grad(da(hv**3 * divv))
    out += 0.5 * (t.grad(da(hv**2 * gb_dot_v)) - da(hv**2 * divv) * gb)
    out += np.stack([da(hv * gb[i] * gb_dot_v) for i in range(grid.dim)])
    return VectorField(grid, out)


def _operands(state: SurfaceState, b: ScalarField, params: PhysicalParams):
    t = transform(state.grid)
    h1, h2 = thickness_arrays(state, params, b)
    gp1 = state.gradpsi1.values
    gp2 = state.gradpsi2.values
    a1 = t.div(np.stack([t.dealias(h1 * gp1[i]) for i in range(state.grid.dim)]))
    a2 = t.div(np.stack([t.dealias(h2 * gp2[i]) for i in range(state.grid.dim)]))
    return t, h1, h2, gp1, gp2, a1, a2


def expand_g2(
    state: SurfaceState, b: ScalarField, params: PhysicalParams, order: int
) -> ScalarField:
    """Order-1 or order-2 expansion of G2 psi2."""
    _check_order(order, (1, 2))
    t, h1, h2, gp1, gp2, a1, a2 = _operands(state, b, params)
    out = -params.mu * a2
    if order == 2:
        bb = ScalarField(state.grid, params.beta * b.values)
        t2 = t_operator(ScalarField(state.grid, h2), bb, state.gradpsi2)
        out = out + params.mu**2 * t.div(t2.values)
    return ScalarField(state.grid, out)


def expand_g1(
    state: SurfaceState, b: ScalarField, params: PhysicalParams, order: int
) -> ScalarField:
    """Order-1 or order-2 expansion of G1(psi1, psi2)."""
    _check_order(order, (1, 2))
    t, h1, h2, gp1, gp2, a1, a2 = _operands(state, b, params)
    out = -params.mu * (a1 + a2)
    if order == 2:
        grid = state.grid
        e1, e2 = params.eps1, params.eps2
        z2s = ScalarField(grid, e2 * state.zeta2.values)
        bb = ScalarField(grid, params.beta * b.values)
        t1 = t_operator(ScalarField(grid, h1), z2s, state.gradpsi1)
        t2 = t_operator(ScalarField(grid, h2), bb, state.gradpsi2)
        gz1 = t.grad(state.zeta1.values)
        ga2 = t.grad(a2)
        bracket = (
            t.div(t1.values)
            + t.div(t2.values)
            - 0.5 * t.div(np.stack([t.dealias(h1**2 * ga2[i]) for i in range(grid.dim)]))
            - t.div(np.stack([t.dealias(h1 * e1 * gz1[i] * a2) for i in range(grid.dim)]))
        )
        out = out + params.mu**2 * bracket
    return ScalarField(state.grid, out)


def expand_h(
    state: SurfaceState, b: ScalarField, params: PhysicalParams, order: int
) -> VectorField:
    """Order-0 or order-1 expansion of H(psi1, psi2)."""
    _check_order(order, (0, 1))
    t, h1, h2, gp1, gp2, a1, a2 = _operands(state, b, params)
    out = gp1.copy()
    if order == 1:
        lap1 = t.div(gp1)
        gz1 = t.grad(state.zeta1.values)
        bracket = t.dealias(
            h1 * (a1 + a2)
            - 0.5 * h1**2 * lap1
            - h1 * params.eps1 * np.sum(gz1 * gp1, axis=0)
        )
        out = out + params.mu * t.grad(bracket)
    return VectorField(state.grid, out)


def layer_mean_correction(
    state: SurfaceState, b: ScalarField, params: PhysicalParams, layer: int
) -> VectorField:
    """First-order depth-mean velocity correction D1 or D2, so that the
    layer-mean velocity satisfies ubar_i ~ grad psi_i + mu * D_i."""
    if layer not in (1, 2):
        raise ConfigError(f"layer must be 1 or 2, got {layer}")
    t, h1, h2, gp1, gp2, a1, a2 = _operands(state, b, params)
    grid = state.grid
    if layer == 2:
        bb = ScalarField(grid, params.beta * b.values)
        t2 = t_operator(ScalarField(grid, h2), bb, state.gradpsi2)
        return VectorField(grid, -t2.values / h2)
    e1, e2 = params.eps1, params.eps2
    z2s = ScalarField(grid, e2 * state.zeta2.values)
    t1 = t_operator(ScalarField(grid, h1), z2s, state.gradpsi1)
    gz1 = t.grad(state.zeta1.values)
    ga2 = t.grad(a2)
    inner = (
        t1.values
        - 0.5 * np.stack([t.dealias(h1**2 * ga2[i]) for i in range(grid.dim)])
        - np.stack([t.dealias(h1 * e1 * gz1[i] * a2) for i in range(grid.dim)])
    )
    return VectorField(grid, -inner / h1)
