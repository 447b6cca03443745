"""Constraint systems, certification, bounding and decomposition steps."""
