"""Exact enumeration and structure checks for semigroups of order-decreasing
partial isometries of a finite chain."""
from .chain import PartialInjection, compose, inverse, make, partial_identity, stats
from .families import Family, enumerate_fast, enumerate_oracle, member

__all__ = [
    "Family",
    "PartialInjection",
    "compose",
    "enumerate_fast",
    "enumerate_oracle",
    "inverse",
    "make",
    "member",
    "partial_identity",
    "stats",
]
