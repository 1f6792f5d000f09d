"""Cohomology and Yetter-Drinfeld modules of finite-dimensional Hopf algebras."""

__version__ = "0.1.0"
