"""Counting quasi-polynomials of rational polytopes via vertex-cone valuations."""

from ._coneval import brion_check, count, quasipoly, reciprocity, volume

__all__ = ["brion_check", "count", "quasipoly", "reciprocity", "volume"]
