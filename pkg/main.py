#!/usr/bin/env python3
"""Main entry point for the subtour polytope toolkit."""

from __future__ import annotations

import sys

from src.subtour_polytope.cli import main

if __name__ == "__main__":
    sys.exit(main())
