"""Computational laboratory for the coprime graph TCG_n."""

__version__ = "0.1.0"
