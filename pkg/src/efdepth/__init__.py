"""Quantifier depth of induced-subgraph properties via Ehrenfeucht–Fraïssé games."""

__version__ = "0.1.0"
