"""Quantum duality computer algebra: Python front end to the C++ core."""
from ._qdual import Error, MathError, ParseError, catalog_names, delta, member, normalize, run

__all__ = ["Error", "MathError", "ParseError", "catalog_names", "delta", "member", "normalize", "run"]
