"""Exact computations with crossed modules of Lie algebras, their centres,
low-degree cohomology and the associated Lie 2-algebras."""

__version__ = "0.1.0"
