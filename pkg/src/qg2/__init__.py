"""Exact computation in the two-parameter quantum group of type G2."""
