"""Exact classification toolkit for 3-dimensional Lie bialgebras and 6-dimensional Manin triples."""

__version__ = "0.1.0"
