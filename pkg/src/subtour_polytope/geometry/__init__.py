"""Exact rational LP, vertex enumeration and face certification."""
