"""Elliptic solver on flattened strips for the exact interface operators.

Each fluid layer is pulled back to a flat strip (upper: z in (0,1), lower:
z in (-1,0)) by the affine diffeomorphism s_i(X,z); the Laplace problem
becomes div(P_i grad phi) = 0 with

    P_i = [[ mu * dz(s_i),            -mu * dX(s_i)              ],
           [-mu * dX(s_i),  (1 + mu * dX(s_i)^2) / dz(s_i)       ]]

Discretization: Fourier collocation in x, Chebyshev-Gauss-Lobatto in z,
assembled in symmetric Galerkin form with Clenshaw-Curtis weights, so the
stiffness matrix is symmetric positive definite by construction. Dirichlet
data is eliminated; the interface Neumann condition of the upper problem is
natural, loaded with the co-normal trace of the lower solve. 1D horizontal
grids only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..core import DEFAULT_H_MIN, GridSpec, PhysicalParams, ScalarField, VectorField
from ..errors import ConfigError, ConnectednessViolation, SolverDivergence
from ..spectral import transform

#: relative residual above which a linear solve is declared divergent
SOLVER_TOL = 1e-12


def chebyshev_lobatto(n: int):
    """Nodes (descending), differentiation matrix, and Clenshaw-Curtis
    weights on [-1, 1] for n collocation points."""
    if n < 2:
        raise ConfigError("need at least 2 Chebyshev points")
    N = n - 1
    j = np.arange(n)
    x = np.cos(np.pi * j / N)
    c = np.hstack([2.0, np.ones(N - 1), 2.0]) * (-1.0) ** j
    X = np.tile(x, (n, 1)).T
    dX = X - X.T
    D = np.outer(c, 1.0 / c) / (dX + np.eye(n))
    D -= np.diag(D.sum(axis=1))
    # Clenshaw-Curtis quadrature weights
    w = np.zeros(n)
    ii = np.arange(1, N)
    theta = np.pi * j / N
    v = np.ones(N - 1)
    if N % 2 == 0:
        w[0] = w[N] = 1.0 / (N**2 - 1)
        for k in range(1, N // 2):
            v -= 2.0 * np.cos(2.0 * k * theta[ii]) / (4.0 * k**2 - 1)
        v -= np.cos(N * theta[ii]) / (N**2 - 1)
    else:
        w[0] = w[N] = 1.0 / N**2
        for k in range(1, (N - 1) // 2 + 1):
            v -= 2.0 * np.cos(2.0 * k * theta[ii]) / (4.0 * k**2 - 1)
    w[ii] = 2.0 * v / N
    return x, D, w


class StripOperator:
    """Assembled SPD stiffness matrix of one layer, reusable across
    right-hand sides at fixed shapes."""

    def __init__(
        self,
        grid: GridSpec,
        nz: int,
        which: str,
        sz: np.ndarray,
        sx: np.ndarray,
        mu: float,
    ):
        if grid.dim != 1:
            raise ConfigError("strip solver supports 1D horizontal grids")
        if nz < 8:
            raise ConfigError("nz must be >= 8")
        self.grid = grid
        self.nz = nz
        self.which = which
        nx = grid.nx
        t, Dt, wt = chebyshev_lobatto(nz)
        # both strips have unit height: z = (t +/- 1)/2, d/dz = 2 d/dt
        self.znodes = (t + 1.0) / 2.0 if which == "upper" else (t - 1.0) / 2.0
        self.Dz = 2.0 * Dt
        self.wz = wt / 2.0
        self.wx = grid.length / nx
        self.Dx = transform(grid).diff_matrix()
        self.sz = sz  # (nx,), z-independent by affineness
        self.sx = sx  # (nx, nz)
        self.pxx = mu * np.broadcast_to(sz[:, None], (nx, nz)).copy()
        self.pxz = -mu * sx
        self.pzz = (1.0 + mu * sx**2) / sz[:, None]
        self._assemble()

    def _assemble(self):
        nx, nz = self.grid.nx, self.nz
        w = self.wx * self.wz[None, :]  # (nx, nz) quadrature weights
        A = np.zeros((nx, nz, nx, nz))
        # x-stiffness: block diagonal over z index
        wxx = w * self.pxx
        for j in range(nz):
            A[:, j, :, j] += self.Dx.T @ (wxx[:, j][:, None] * self.Dx)
        # z-stiffness: block diagonal over x index
        wzz = w * self.pzz
        for i in range(nx):
            A[i, :, i, :] += self.Dz.T @ (wzz[i, :][:, None] * self.Dz)
        # cross terms, symmetric pair
        wxz = w * self.pxz
        cross = np.einsum("mi,mn,nj->mjin", self.Dx, wxz, self.Dz)
        Af = A.reshape(nx * nz, nx * nz)
        Cf = cross.reshape(nx * nz, nx * nz)
        Af += Cf + Cf.T
        self.matrix = Af
        idx = np.arange(nx * nz).reshape(nx, nz)
        self.dir_idx = idx[:, 0]  # j = 0 is the Dirichlet boundary (top)
        self.int_idx = idx[:, 1:].ravel()
        self.neumann_idx = idx[:, nz - 1]
        self._A_II = Af[np.ix_(self.int_idx, self.int_idx)]
        self._A_ID = Af[np.ix_(self.int_idx, self.dir_idx)]
        self._lu = scipy.linalg.lu_factor(self._A_II)

    def solve(self, dirichlet: np.ndarray, neumann: np.ndarray | None = None):
        """Solve for the interior unknowns; returns (phi, residual)."""
        nx, nz = self.grid.nx, self.nz
        rhs = -self._A_ID @ dirichlet
        if neumann is not None:
            # natural-boundary load at the strip bottom: -int v * g dx
            load = np.zeros(nx * nz)
            load[self.neumann_idx] = -self.wx * neumann
            rhs = rhs + load[self.int_idx]
        sol = scipy.linalg.lu_solve(self._lu, rhs)
        res = np.linalg.norm(self._A_II @ sol - rhs)
        scale = max(np.linalg.norm(rhs), 1e-300)
        rel = res / scale
        phi = np.empty((nx, nz))
        phi[:, 0] = dirichlet
        phi.reshape(-1)[self.int_idx] = sol
        return phi, rel

    # -- traces --------------------------------------------------------
    def dphi_dx(self, phi: np.ndarray) -> np.ndarray:
        return self.Dx @ phi

    def dphi_dz(self, phi: np.ndarray) -> np.ndarray:
        return phi @ self.Dz.T

    def conormal(self, phi: np.ndarray, j: int) -> np.ndarray:
        """Upward co-normal e_{d+1} . P grad(phi) on the z-level j."""
        px = self.dphi_dx(phi)[:, j]
        pz = self.dphi_dz(phi)[:, j]
        return self.pxz[:, j] * px + self.pzz[:, j] * pz


@dataclass(frozen=True)
class StripSolution:
    """Potential on one flattened strip, with trace accessors."""

    grid: GridSpec
    nz: int
    which: str  # "upper" | "lower"
    phi: np.ndarray
    residual: float
    operator: StripOperator = field(repr=False)
    neumann_datum: np.ndarray | None = field(default=None, repr=False)

    def conormal_top(self) -> np.ndarray:
        """Co-normal trace at the strip top (G2 for lower, G1 for upper)."""
        return self.operator.conormal(self.phi, 0)

    def conormal_bottom(self) -> np.ndarray:
        return self.operator.conormal(self.phi, self.nz - 1)

    def bottom_trace_gradient(self) -> np.ndarray:
        """Horizontal gradient of the trace at the strip bottom (the H
        operator for the upper layer)."""
        t = transform(self.grid)
        return t.deriv(self.phi[:, self.nz - 1], 0)


def _shape_derivative(f: ScalarField) -> np.ndarray:
    return transform(f.grid).deriv(f.values, 0)


def _project_mean(psi: np.ndarray) -> np.ndarray:
    return psi - np.mean(psi)


def _check_thickness(h: np.ndarray, name: str, h_min: float):
    if float(h.min()) < h_min:
        raise ConnectednessViolation(
            f"{name} minimum {h.min():.6g} below floor {h_min:g}"
        )


def lower_operator(
    zeta2: ScalarField,
    b: ScalarField,
    params: PhysicalParams,
    nz: int,
    h_min: float = DEFAULT_H_MIN,
) -> StripOperator:
    grid = zeta2.grid
    h2 = 1.0 / params.delta - params.beta * b.values + params.eps2 * zeta2.values
    _check_thickness(h2, "lower thickness h2", h_min)
    op = StripOperator.__new__(StripOperator)
    dz2 = params.eps2 * _shape_derivative(zeta2)
    db = params.beta * _shape_derivative(b)
    t, _, _ = chebyshev_lobatto(nz)
    znodes = (t - 1.0) / 2.0
    sx = (dz2 - db)[:, None] * znodes[None, :] + dz2[:, None]
    StripOperator.__init__(op, grid, nz, "lower", h2, sx, params.mu)
    return op


def upper_operator(
    zeta1: ScalarField,
    zeta2: ScalarField,
    params: PhysicalParams,
    nz: int,
    h_min: float = DEFAULT_H_MIN,
) -> StripOperator:
    grid = zeta1.grid
    h1 = 1.0 + params.eps1 * zeta1.values - params.eps2 * zeta2.values
    _check_thickness(h1, "upper thickness h1", h_min)
    op = StripOperator.__new__(StripOperator)
    dz1 = params.eps1 * _shape_derivative(zeta1)
    dz2 = params.eps2 * _shape_derivative(zeta2)
    t, _, _ = chebyshev_lobatto(nz)
    znodes = (t + 1.0) / 2.0
    sx = (dz1 - dz2)[:, None] * znodes[None, :] + dz2[:, None]
    StripOperator.__init__(op, grid, nz, "upper", h1, sx, params.mu)
    return op


def _finish(op: StripOperator, phi: np.ndarray, rel: float, neumann=None):
    if rel > SOLVER_TOL:
        raise SolverDivergence(
            f"{op.which} strip solve residual {rel:.3e} above {SOLVER_TOL:g}"
        )
    return StripSolution(
        grid=op.grid,
        nz=op.nz,
        which=op.which,
        phi=phi,
        residual=rel,
        operator=op,
        neumann_datum=neumann,
    )


def solve_lower(
    zeta2: ScalarField,
    b: ScalarField,
    psi2: ScalarField,
    params: PhysicalParams,
    nz: int,
    h_min: float = DEFAULT_H_MIN,
    operator: StripOperator | None = None,
) -> StripSolution:
    """Solve the lower-layer problem; conormal_top() is the numeric
    G2[eps2 zeta2, beta b] psi2."""
    op = operator or lower_operator(zeta2, b, params, nz, h_min)
    phi, rel = op.solve(_project_mean(psi2.values))
    return _finish(op, phi, rel)


def solve_upper(
    zeta1: ScalarField,
    zeta2: ScalarField,
    b: ScalarField,
    psi1: ScalarField,
    psi2: ScalarField,
    params: PhysicalParams,
    nz: int,
    h_min: float = DEFAULT_H_MIN,
    lower: StripSolution | None = None,
    operator: StripOperator | None = None,
) -> StripSolution:
    """Solve the upper-layer problem with the interface Neumann datum taken
    from the lower solve; conormal_top() is the numeric G1, and
    bottom_trace_gradient() the numeric H."""
    if lower is None:
        lower = solve_lower(zeta2, b, psi2, params, nz, h_min)
    g2 = lower.conormal_top()
    op = operator or upper_operator(zeta1, zeta2, params, nz, h_min)
    phi, rel = op.solve(_project_mean(psi1.values), neumann=g2)
    return _finish(op, phi, rel, neumann=g2)


def mean_velocity(strip: StripSolution) -> VectorField:
    """Depth-mean horizontal velocity of the layer, by Chebyshev quadrature
    of the pulled-back physical velocity."""
    op = strip.operator
    px = op.dphi_dx(strip.phi)
    pz = op.dphi_dz(strip.phi)
    integrand = px - (op.sx / op.sz[:, None]) * pz
    ubar = integrand @ op.wz
    return VectorField(strip.grid, ubar[None, :])
