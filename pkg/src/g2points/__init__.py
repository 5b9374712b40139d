"""Toolkit for deciding the set of rational points on genus-2 hyperelliptic
curves y^2 = f(x) over Q.

The pipeline chains point search, everywhere-local solvability, two-cover
descent, the Mordell-Weil sieve and Chabauty's criterion, and emits
machine-checkable certificates for every verdict.
"""

__version__ = "0.1.0"
