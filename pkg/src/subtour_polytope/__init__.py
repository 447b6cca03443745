"""Subtour elimination polytope toolkit.

Builds, minimizes and certifies linear descriptions of the subtour elimination
polytope of a graph through locked subgraphs, and uses them for exact TSP bounds
and extreme-point decompositions.
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
