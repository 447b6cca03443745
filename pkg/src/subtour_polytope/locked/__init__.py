"""Locked subgraphs, the matroid-definition oracle and laminar families."""
