"""critloci: exact computations around critical loci of matrix trace potentials."""

from .exactalg import (
    Matrix,
    Poly,
    QuadraticForm,
    Scalar,
    commutator,
    form_restrict,
)
from .potential import FramedRep, GradientTriple, eval_potential, gradient, hessian
from .quiver import DimVector, PolystableData, Quiver, StabilityParam

__all__ = [
    "Matrix",
    "Poly",
    "QuadraticForm",
    "Scalar",
    "commutator",
    "form_restrict",
    "FramedRep",
    "GradientTriple",
    "eval_potential",
    "gradient",
    "hessian",
    "DimVector",
    "PolystableData",
    "Quiver",
    "StabilityParam",
]
