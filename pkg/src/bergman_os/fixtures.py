"""Built-in matroids used by the verification battery and the CLI.

Labels are 0-based internally.  The two hand-picked examples m1 and m2 are
conventionally written with elements 1..4 and 1..6; internal element i
corresponds to written label i+1 (so m1's circuit {1,2,3} is stored as
(0, 1, 2)).  Both have matroid rank 3 (maximal independent set size);
as projective point/line configurations they are two-dimensional.
"""

from __future__ import annotations

import json
from itertools import combinations
from random import Random

from .matroids import Matroid


def _expect_int(value, field: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"field {field!r} must be an integer")
    return value

# K4 with vertices 0..3; this edge order makes the triangles come out as
# the written triples 125, 146, 236, 345 and the four-cycles 1234, 1356, 2456
K4_EDGES: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (2, 3), (1, 3), (1, 2), (0, 3))

M2_CIRCUITS: tuple[tuple[int, ...], ...] = (
    (0, 1, 4), (0, 3, 5), (1, 2, 5), (2, 3, 4),
    (0, 1, 2, 3), (0, 2, 4, 5), (1, 3, 4, 5),
)

# Fano plane: the 7 lines of PG(2, 2) plus their complements
FANO_LINES: tuple[tuple[int, ...], ...] = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
)

NON_FANO_MATRIX: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 1, 1, 0, 1),
    (0, 1, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 1),
)


def uniform(rank: int, size: int) -> Matroid:
    """U_{rank,size}: every (rank+1)-subset is a circuit."""
    if not 1 <= rank <= size:
        raise ValueError("need 1 <= rank <= size")
    circuits = list(combinations(range(size), rank + 1))
    return Matroid.from_circuits(size, circuits, source="builtin")


def m1() -> Matroid:
    """Four points with 1, 2, 3 collinear (four lines through a common
    point pattern); single circuit 123 in written labels."""
    return Matroid.from_circuits(4, [(0, 1, 2)], source="builtin")


def m2() -> Matroid:
    """The graphic matroid of K4 with the fixed edge labeling above."""
    m = Matroid.from_graph(4, K4_EDGES)
    return Matroid(m.ground_size, m.circuits(), "builtin", m.validated)


def fano() -> Matroid:
    circuits = list(FANO_LINES) + [
        tuple(sorted(set(range(7)) - set(line))) for line in FANO_LINES
    ]
    return Matroid.from_circuits(7, circuits, source="builtin")


def non_fano() -> Matroid:
    m = Matroid.from_matrix(NON_FANO_MATRIX)
    return Matroid(m.ground_size, m.circuits(), "builtin", m.validated)


BUILTIN = {
    "u_1_1": lambda: uniform(1, 1),
    "u_2_2": lambda: uniform(2, 2),
    "u_2_3": lambda: uniform(2, 3),
    "u_2_4": lambda: uniform(2, 4),
    "u_3_4": lambda: uniform(3, 4),
    "u_3_6": lambda: uniform(3, 6),
    "m1": m1,
    "m2": m2,
    "fano": fano,
    "nonfano": non_fano,
}

ALIASES = {"k4": "m2", "non_fano": "nonfano"}


def fixture_names() -> list[str]:
    return list(BUILTIN)


def get_fixture(name: str) -> Matroid:
    key = name.lower()
    key = ALIASES.get(key, key)
    if key not in BUILTIN:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(BUILTIN)}")
    return BUILTIN[key]()


def random_linear_matroid(rng: Random, max_elements: int = 7) -> Matroid:
    """Small linear matroid from a random integer matrix with entries in
    [-3, 3]; zero columns are resampled, so the result is loopless."""
    ncols = rng.randint(4, max_elements)
    nrows = rng.randint(2, 3)
    cols = []
    while len(cols) < ncols:
        col = tuple(rng.randint(-3, 3) for _ in range(nrows))
        if any(col):
            cols.append(col)
    rows = [tuple(col[i] for col in cols) for i in range(nrows)]
    return Matroid.from_matrix(rows)


def matroid_from_json(doc: dict) -> tuple[str, Matroid]:
    """Build a matroid from the JSON document format:
    {"name": str, "ground_size": int, and exactly one of
     "circuits": [[int]], "graph": {"vertices": int, "edges": [[int,int]]},
     "matrix": [[int]]}.
    """
    if not isinstance(doc, dict):
        raise ValueError("matroid document must be a JSON object")
    name = doc.get("name", "unnamed")
    kinds = [k for k in ("circuits", "graph", "matrix") if k in doc]
    if len(kinds) != 1:
        raise ValueError(
            "matroid document needs exactly one of 'circuits', 'graph', 'matrix'"
            f" (got {kinds or 'none'})"
        )
    kind = kinds[0]
    if kind == "circuits":
        if "ground_size" not in doc:
            raise ValueError("field 'ground_size' is required with 'circuits'")
        ground = _expect_int(doc["ground_size"], "ground_size")
        circuits = doc["circuits"]
        if not isinstance(circuits, list) or not all(
            isinstance(c, list) and all(isinstance(e, int) for e in c) for c in circuits
        ):
            raise ValueError("field 'circuits' must be a list of lists of integers")
        matroid = Matroid.from_circuits(ground, [tuple(c) for c in circuits])
    elif kind == "graph":
        g = doc["graph"]
        if not isinstance(g, dict) or "vertices" not in g or "edges" not in g:
            raise ValueError("field 'graph' must be {'vertices': int, 'edges': [[u,v]]}")
        vertices = _expect_int(g["vertices"], "graph.vertices")
        edges = g["edges"]
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
            for e in edges
        ):
            raise ValueError("field 'graph.edges' must be a list of [u, v] pairs")
        matroid = Matroid.from_graph(vertices, [tuple(e) for e in edges])
        if "ground_size" in doc and doc["ground_size"] != len(edges):
            raise ValueError("'ground_size' disagrees with the number of edges")
    else:
        rows = doc["matrix"]
        if not isinstance(rows, list) or not rows or not all(
            isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows
        ):
            raise ValueError("field 'matrix' must be a nonempty list of integer rows")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows must have equal length")
        matroid = Matroid.from_matrix([tuple(r) for r in rows])
        if "ground_size" in doc and doc["ground_size"] != len(rows[0]):
            raise ValueError("'ground_size' disagrees with the number of columns")
    return str(name), matroid


def load_matroid_file(path: str) -> tuple[str, Matroid]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return matroid_from_json(doc)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc
