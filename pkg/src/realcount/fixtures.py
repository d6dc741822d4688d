"""Built-in example graphs used by the CLI and the test suite."""

from __future__ import annotations

from .graphs import LabelledGraph

# name -> (vertex count, 1-based edge list; edge i carries label str(i+1))
_FIXTURES = {
    "k4minus": (4, ((1, 2), (2, 3), (1, 4), (3, 4), (1, 3))),
    "prism3": (6, ((1, 3), (1, 2), (2, 3), (1, 4), (2, 5), (4, 5),
                   (3, 6), (4, 6), (5, 6))),
    "k33": (6, ((1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (1, 4),
                (3, 4), (3, 5), (3, 6))),
    "fig2": (8, ((1, 4), (2, 5), (3, 6), (1, 2), (1, 3), (4, 5), (4, 6),
                 (2, 7), (4, 7), (3, 7), (5, 8), (1, 8), (6, 8))),
}


def fixture_names():
    return sorted(_FIXTURES)


def fixture(name) -> LabelledGraph:
    try:
        n, edges = _FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; have {', '.join(fixture_names())}")
    return LabelledGraph(n, tuple((u - 1, v - 1) for (u, v) in edges))
