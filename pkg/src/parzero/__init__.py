"""Partition polynomial families, their complex zeros, and the asymptotics
that govern them."""

__version__ = "0.1.0"
