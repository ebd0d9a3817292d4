"""Doodler graph: scene entities with sketch style plus relation edges."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import UnknownEntity

_HEX_DIGITS = set("0123456789abcdefABCDEF")

MIN_STROKE_WEIGHT = 0.5
MAX_STROKE_WEIGHT = 8.0


def is_valid_color(color: str) -> bool:
    return (
        isinstance(color, str)
        and len(color) == 7
        and color.startswith("#")
        and all(c in _HEX_DIGITS for c in color[1:])
    )


@dataclass(frozen=True)
class Mention:
    """Location of a mention: (fragment, sentence, token) indices."""
    fragment: int
    sentence: int
    token: int

    def as_list(self) -> list[int]:
        return [self.fragment, self.sentence, self.token]


@dataclass
class DoodlerNode:
    id: int
    category: str
    color: str = "#000000"
    stroke_weight: float = 2.0
    attributes: list[str] = field(default_factory=list)
    first_mention: Mention = Mention(0, 0, 0)

    def __post_init__(self):
        if not self.category:
            raise ValueError("node category must be non-empty")
        if not is_valid_color(self.color):
            raise ValueError(f"invalid color {self.color!r}")
        if not MIN_STROKE_WEIGHT <= self.stroke_weight <= MAX_STROKE_WEIGHT:
            raise ValueError(f"stroke weight {self.stroke_weight} out of range")


@dataclass(frozen=True)
class DoodlerEdge:
    src: int
    dst: int
    relation: str

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError("self-edges are not allowed")


class DoodlerGraph:
    """Mutable container for nodes and edges with a monotone id counter."""

    def __init__(self):
        self.nodes: dict[int, DoodlerNode] = {}
        self.edges: list[DoodlerEdge] = []
        self.next_id: int = 0

    def allocate_id(self) -> int:
        eid = self.next_id
        self.next_id += 1
        return eid

    def add_node(self, node: DoodlerNode) -> DoodlerNode:
        if node.id in self.nodes:
            raise ValueError(f"duplicate node id {node.id}")
        self.nodes[node.id] = node
        self.next_id = max(self.next_id, node.id + 1)
        return node

    def add_edge(self, src: int, dst: int, relation: str) -> DoodlerEdge | None:
        """Append an edge, skipping self-loops and exact duplicates."""
        if src == dst:
            return None
        if src not in self.nodes or dst not in self.nodes:
            raise UnknownEntity(f"edge endpoint missing: {src} -> {dst}")
        edge = DoodlerEdge(src, dst, relation)
        if edge in self.edges:
            return None
        self.edges.append(edge)
        return edge

    def remove_entity(self, entity_id: int) -> DoodlerNode:
        if entity_id not in self.nodes:
            raise UnknownEntity(f"no entity with id {entity_id}")
        node = self.nodes.pop(entity_id)
        self.edges = [e for e in self.edges if entity_id not in (e.src, e.dst)]
        return node

    def categories(self) -> dict[str, list[int]]:
        by_category: dict[str, list[int]] = {}
        for node in self.nodes.values():
            by_category.setdefault(node.category, []).append(node.id)
        return by_category

    # --- serialization (schema: nodes/edges/next_id, see README) ---

    def to_dict(self) -> dict:
        nodes = [
            {
                "id": n.id,
                "category": n.category,
                "color": n.color,
                "stroke_weight": n.stroke_weight,
                "attributes": list(n.attributes),
                "first_mention": n.first_mention.as_list(),
            }
            for n in sorted(self.nodes.values(), key=lambda n: n.id)
        ]
        edges = [{"src": e.src, "dst": e.dst, "relation": e.relation} for e in self.edges]
        return {"nodes": nodes, "edges": edges, "next_id": self.next_id}

    @classmethod
    def from_dict(cls, payload: dict) -> "DoodlerGraph":
        graph = cls()
        for entry in payload.get("nodes", []):
            mention = Mention(*entry.get("first_mention", [0, 0, 0]))
            graph.add_node(
                DoodlerNode(
                    id=int(entry["id"]),
                    category=entry["category"],
                    color=entry.get("color", "#000000"),
                    stroke_weight=float(entry.get("stroke_weight", 2.0)),
                    attributes=list(entry.get("attributes", [])),
                    first_mention=mention,
                )
            )
        for entry in payload.get("edges", []):
            graph.add_edge(int(entry["src"]), int(entry["dst"]), entry["relation"])
        graph.next_id = max(int(payload.get("next_id", graph.next_id)), graph.next_id)
        return graph

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "DoodlerGraph":
        return cls.from_dict(json.loads(text))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "DoodlerGraph":
        with open(path, encoding="utf-8") as handle:
            return cls.from_json(handle.read())
