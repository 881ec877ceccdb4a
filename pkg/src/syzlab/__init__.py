"""Exact finite-field workbench for quadric ideals, linear syzygies and rank loci."""

__version__ = "0.1.0"
