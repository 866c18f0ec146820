"""Graph-to-geometry reduction instances, their desk-scale solvers, and the
brute-force oracle they are verified against.

Three constructions are provided, each turning a graph G and a parameter k
into a geometric instance whose solutions correspond exactly to vertex
tuples of G:

- cylinder:   equal-radius balls in R^{2k} stabbed by a common line iff the
              line's apex tuple names an independent set,
- separation: two point sets in R^{2k} separable by two hyperplanes, classes
              indexed by independent sets of the vertex-duplicated graph,
- maxfs:      integer hyperplanes in R^k whose maximum point depth reaches
              k + C(k,2) iff G has a k-clique.
"""

from .graphs import (
    Graph,
    GraphParseError,
    duplicate_vertices,
    enumerate_solutions,
    is_clique,
    is_independent_set,
    make_graph,
    parse_graph,
)
from .instances import parse_instance, read_instance, serialize_instance, write_instance

__all__ = [
    "Graph",
    "GraphParseError",
    "duplicate_vertices",
    "enumerate_solutions",
    "is_clique",
    "is_independent_set",
    "make_graph",
    "parse_graph",
    "parse_instance",
    "read_instance",
    "serialize_instance",
    "write_instance",
]

__version__ = "0.1.0"
