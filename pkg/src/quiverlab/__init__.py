"""Quiver mutation and finite Hom-table models of orbit categories."""

__version__ = "0.1.0"
