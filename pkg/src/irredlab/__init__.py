"""Finite-space and exact-algebra checks of irreducibility, local and
pointwise irreducibility, and integrity."""

from .finspace import FiniteSpace, PropertyProfile, condition_profile

__all__ = ["FiniteSpace", "PropertyProfile", "condition_profile"]
__version__ = "0.1.0"
