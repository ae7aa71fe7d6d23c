"""Least signless Laplacian eigenvalue of complements of bicyclic graphs."""

__version__ = "0.1.0"
