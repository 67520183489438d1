"""Equivariant BSD verification for 11A1 over the splitting field of x^3 - 4x + 1.

Exact twisted L-value ratios via modular symbols, numeric nonabelian-twist
L-values via functional-equation summation, and per-prime integrality
verdicts in the group ring of S3.
"""

__version__ = "0.1.0"
