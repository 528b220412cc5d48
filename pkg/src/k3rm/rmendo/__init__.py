"""RM and CM endomorphism structures on lattices."""
from .endo import (ContractViolation, EndoMatrix, adjoint_check, anticommuting_involutions_e8,
                   eigenspace_signatures, four_squares, quad_endo)

__all__ = ["ContractViolation", "EndoMatrix", "adjoint_check", "anticommuting_involutions_e8",
           "eigenspace_signatures", "four_squares", "quad_endo"]
