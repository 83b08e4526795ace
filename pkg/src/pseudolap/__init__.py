"""Spectra of pseudo-Laplacians on finite-area hyperbolic surfaces."""

__version__ = "0.1.0"
