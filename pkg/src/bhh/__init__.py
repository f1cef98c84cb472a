"""Braided Hochschild cohomology by exact linear algebra."""

__version__ = "0.1.0"
