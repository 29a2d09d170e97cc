"""
Unit tests for the algebra, invariance, regularity, projection and bound modules.
"""
