"""Genus-two Heegaard splittings as R-R diagrams."""

__version__ = "0.1.0"
