"""Exact verification of q-supercongruences, their q-WZ proofs and p-adic corollaries."""

__version__ = "0.1.0"
