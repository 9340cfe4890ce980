"""entriv: exact-arithmetic checks for extended powers, operadic suspension,
stunted projective spectra, K-theory exact sequences, cochain-level Steenrod
operations and Hochschild homology of square-zero extensions."""

__version__ = "0.1.0"
