"""
Invariant regularity toolkit.

Exact computations for polynomial vector fields on projective space: invariance
of subschemes, Castelnuovo-Mumford regularity of ACM ideals, central projection
of invariant schemes with their fields, and the degree bounds that follow.
"""

__version__ = "1.0.0"
