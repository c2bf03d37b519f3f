"""Exact and high-precision toolkit for simultaneous torsion of point
triples on families of elliptic curves in Weierstrass form."""

__version__ = "0.1.0"
