"""Exact-arithmetic tools for the exceptional Lie superalgebra E(3,6).

The package realizes E(3,6) inside E(5,10), induces modules from
finite-dimensional g0-representations, applies the differential
operators connecting them, and verifies singular vectors, homology,
spectral sequences, characters, sizes and the fundamental multiplet
bookkeeping, all over exact rationals.
"""
