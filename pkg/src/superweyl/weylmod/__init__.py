"""Kac modules, local Weyl modules, tensor products and Garland checks."""
