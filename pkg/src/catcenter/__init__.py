"""Exact checkers for twisted centers, (co)lax transformations, bimonads and
bilax functors over finite strict 2-categories."""

__version__ = "0.1.0"
