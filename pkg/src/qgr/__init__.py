"""Quantum matrices, quantum grassmannians and their straightening."""

__version__ = "0.1.0"
