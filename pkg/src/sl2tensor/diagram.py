"""Layered structure diagrams: composition factors as vertices, non-split
extensions as edges, socle layers bottom first.

Vertex ids are ``(layer, position)`` with positions ordered by descending
weight inside each layer.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

Vid = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    layers: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[Vid, Vid], ...]

    def __post_init__(self):
        for a, b in self.edges:
            if abs(a[0] - b[0]) != 1:
                raise ValueError(f"edge {a}-{b} does not join adjacent layers")
            for l, i in (a, b):
                if not (0 <= l < len(self.layers) and 0 <= i < len(self.layers[l])):
                    raise ValueError(f"edge endpoint {(l, i)} is not a vertex")

    @classmethod
    def build(cls, layers: Iterable[Iterable[int]], edges: Iterable[tuple[Vid, Vid]]) -> "Diagram":
        """Canonicalize: sort every layer by descending weight (stable) and
        renumber the edge endpoints to match."""
        layers = [list(l) for l in layers]
        remap = {}
        out_layers = []
        for li, lay in enumerate(layers):
            order = sorted(range(len(lay)), key=lambda i: -lay[i])
            for new, old in enumerate(order):
                remap[(li, old)] = (li, new)
            out_layers.append(tuple(lay[i] for i in order))
        es = set()
        for a, b in edges:
            a, b = remap[tuple(a)], remap[tuple(b)]
            es.add((a, b) if a < b else (b, a))
        return cls(tuple(out_layers), tuple(sorted(es)))

    @classmethod
    def chain(cls, series: Iterable[int]) -> "Diagram":
        series = list(series)
        return cls.build([[w] for w in series], [((i, 0), (i + 1, 0)) for i in range(len(series) - 1)])

    @classmethod
    def point(cls, w: int) -> "Diagram":
        return cls(((w,),), ())

    @property
    def height(self) -> int:
        return len(self.layers)

    def vertices(self) -> list[tuple[Vid, int]]:
        return [((l, i), w) for l, lay in enumerate(self.layers) for i, w in enumerate(lay)]

    def weight(self, v: Vid) -> int:
        return self.layers[v[0]][v[1]]

    def factors(self) -> Counter:
        return Counter(w for lay in self.layers for w in lay)

    def __len__(self):
        return sum(len(l) for l in self.layers)

    @property
    def socle(self) -> tuple[int, ...]:
        return self.layers[0]

    @property
    def head(self) -> tuple[int, ...]:
        return self.layers[-1]

    def is_chain(self) -> bool:
        return all(len(l) == 1 for l in self.layers) and len(self.edges) == self.height - 1

    @property
    def series(self) -> Optional[tuple[int, ...]]:
        return tuple(l[0] for l in self.layers) if self.is_chain() else None

    def shifted(self, delta: int) -> "Diagram":
        return Diagram(tuple(tuple(w + delta for w in l) for l in self.layers), self.edges)

    def flipped(self) -> "Diagram":
        top = self.height - 1
        return Diagram.build(
            reversed(self.layers),
            [((top - a[0], a[1]), (top - b[0], b[1])) for a, b in self.edges],
        )

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for v, w in self.vertices():
            g.add_node(v, weight=w, layer=v[0])
        g.add_edges_from(self.edges)
        return g

    def is_isomorphic(self, other: "Diagram") -> bool:
        if self.height != other.height or self.factors() != other.factors():
            return False
        if len(self.edges) != len(other.edges):
            return False
        match = lambda x, y: x["weight"] == y["weight"] and x["layer"] == y["layer"]
        return nx.is_isomorphic(self.graph(), other.graph(), node_match=match)

    def same_layers(self, other: "Diagram") -> bool:
        return [sorted(l) for l in self.layers] == [sorted(l) for l in other.layers]

    def is_self_dual(self) -> bool:
        return self.is_isomorphic(self.flipped())

    def to_json(self) -> dict:
        return {
            "layers": [list(l) for l in self.layers],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }

    @classmethod
    def from_json(cls, obj) -> "Diagram":
        return cls.build(obj["layers"], [(tuple(a), tuple(b)) for a, b in obj.get("edges", [])])

    def to_dot(self, name: str = "M") -> str:
        lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for l, lay in enumerate(self.layers):
            ids = " ".join(f"v{l}_{i};" for i in range(len(lay)))
            lines.append(f"  {{ rank=same; {ids} }}")
            for i, w in enumerate(lay):
                lines.append(f'  v{l}_{i} [label="{w}"];')
        for a, b in self.edges:
            lines.append(f"  v{a[0]}_{a[1]} -- v{b[0]}_{b[1]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def render(self) -> str:
        if self.is_chain():
            return "[" + ",".join(str(w) for w in self.series) + "]"
        return "[" + " | ".join(" ".join(str(w) for w in l) for l in self.layers) + "]"
