"""Exact v-numbers of binomial edge ideals, with combinatorial cross-checks."""

__version__ = "0.1.0"
