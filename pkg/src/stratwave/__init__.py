"""stratwave: two-layer free-surface internal wave model hierarchy."""

__version__ = "0.1.0"

from .core import (
    GridSpec,
    PhysicalParams,
    ScalarField,
    SurfaceState,
    SurfaceTangent,
    VectorField,
    thicknesses,
)

__all__ = [
    "GridSpec",
    "PhysicalParams",
    "ScalarField",
    "SurfaceState",
    "SurfaceTangent",
    "VectorField",
    "thicknesses",
    "__version__",
]
