"""Exact cohomology, deformations and symplectic structures of filiform Lie algebras."""

__version__ = "0.1.0"
