"""Exact toolkit for matching number, covering number and resilience of uniform hypergraphs."""

from .core import KFamily, Matching, VertexSet, matching_number, covering_number, parse_family

__version__ = "0.1.0"
