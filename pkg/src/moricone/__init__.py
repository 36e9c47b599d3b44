"""Exact cone calculus for divisor classes on the moduli space of stable curves."""

__version__ = "0.1.0"
