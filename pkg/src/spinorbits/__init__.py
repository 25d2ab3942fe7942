"""Exact combinatorics of small nilpotent orbits for real Spin groups:
orbit classification, Clifford component groups, K-type spectra, matchup
verification and unipotent representation counts."""

__version__ = "0.1.0"
