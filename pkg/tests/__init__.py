"""
Test suite for the invariant regularity toolkit.
"""
