"""
Graph bounds (gbounds)

Exact rational upper bounds on the domination number and lower bounds on
the independence number of graphs, with exhaustive verification oracles
and random-graph comparison experiments.
"""

__version__ = "0.1.0"

# Package metadata
__title__ = "gbounds"
__description__ = "Exact domination and independence number bounds"
__license__ = "MIT"
