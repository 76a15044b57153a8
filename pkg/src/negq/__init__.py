"""Exact computations around the q-binomial at negative q."""

__version__ = "0.1.0"
