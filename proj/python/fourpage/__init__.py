"""Four-page presentations of knot and link diagrams."""

from ._core import (
    Diagram,
    FourpageError,
    alpha4_upper_bound,
    enumerate_spanning_trees,
    parse_pd,
    ribbon_bound,
    verify,
)

__all__ = [
    "Diagram",
    "FourpageError",
    "alpha4_upper_bound",
    "enumerate_spanning_trees",
    "parse_pd",
    "ribbon_bound",
    "verify",
]
