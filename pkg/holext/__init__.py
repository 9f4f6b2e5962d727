"""Numerical tests of holomorphic extendibility in the unit ball of C^2."""
