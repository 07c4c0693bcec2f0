"""Corpus stylometry: linguistic feature counts, readability and exact binomial comparison."""

__version__ = "0.1.0"
