"""Bigrassmannian census: counting and listing bigrassmannian permutations below a permutation."""

__version__ = "1.0.0"
