"""Exact and Monte Carlo tools for the open and periodic TASEP with complete configurations."""

__version__ = "0.1.0"
