"""Coloured skeletons and factorisation regimes.

A skeleton is the coloured directed graph of vertices and edges of a
higher-rank graph; a factorisation regime pairs bicoloured composable
edge paths ef = f'e'.  Composition is categorical (right to left): the
pair (e, f) is composable when s(e) = r(f), and range/source follow that
convention rather than the directed-graph one.

JSON format::

    {"k": 2,
     "vertices": ["u", "v"],
     "edges": [{"id": "e", "color": 1, "range": "u", "source": "v"}],
     "squares": [{"outer": ["e", "f"], "inner": ["f2", "e2"]}]}

where a square {outer: [e, f], inner: [f2, e2]} asserts ef = f2 e2 as
composed morphisms.
"""

import json
from dataclasses import dataclass

from .errors import KGraphError


@dataclass(frozen=True)
class Edge:
    id: str
    color: int  # 1-based
    range: str
    source: str


@dataclass(frozen=True)
class Skeleton:
    k: int
    vertices: tuple
    edges: tuple  # tuple[Edge, ...]

    def __post_init__(self):
        if self.k < 1:
            raise KGraphError("rank must be >= 1")
        seen_v = set()
        for v in self.vertices:
            if v in seen_v:
                raise KGraphError(f"duplicate vertex id {v!r}")
            seen_v.add(v)
        seen_e = set()
        for e in self.edges:
            if e.id in seen_e:
                raise KGraphError(f"duplicate edge id {e.id!r}")
            seen_e.add(e.id)
            if not 1 <= e.color <= self.k:
                raise KGraphError(f"edge {e.id!r} has colour {e.color} outside 1..{self.k}")
            if e.range not in seen_v or e.source not in seen_v:
                raise KGraphError(f"edge {e.id!r} has undeclared endpoint")

    def edge_map(self):
        return {e.id: e for e in self.edges}


@dataclass(frozen=True)
class FactorizationRegime:
    """Squares as ((e, f), (f2, e2)) pairs of edge-id pairs, meaning ef = f2 e2."""

    squares: tuple  # tuple[((str, str), (str, str)), ...]

    @staticmethod
    def from_pairs(pairs):
        return FactorizationRegime(tuple((tuple(o), tuple(i)) for o, i in pairs))


def skeleton_to_dict(skeleton, regime):
    return {
        "k": skeleton.k,
        "vertices": list(skeleton.vertices),
        "edges": [
            {"id": e.id, "color": e.color, "range": e.range, "source": e.source}
            for e in skeleton.edges
        ],
        "squares": [
            {"outer": list(outer), "inner": list(inner)}
            for outer, inner in regime.squares
        ],
    }


def skeleton_from_dict(data):
    try:
        k = int(data["k"])
        vertices = tuple(str(v) for v in data["vertices"])
        edges = tuple(
            Edge(str(e["id"]), int(e["color"]), str(e["range"]), str(e["source"]))
            for e in data["edges"]
        )
        squares = tuple(
            ((str(sq["outer"][0]), str(sq["outer"][1])),
             (str(sq["inner"][0]), str(sq["inner"][1])))
            for sq in data.get("squares", [])
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise KGraphError(f"malformed skeleton JSON: {exc}") from exc
    return Skeleton(k, vertices, edges), FactorizationRegime(squares)


def load_skeleton(path):
    with open(path) as fh:
        return skeleton_from_dict(json.load(fh))


def dump_skeleton(skeleton, regime, path):
    with open(path, "w") as fh:
        json.dump(skeleton_to_dict(skeleton, regime), fh, indent=2)
