"""Map doodler-graph labels onto the canonical vocabulary.

The mapping follows a substitution scheme: rewrite the fragment with
the label replaced by each candidate and keep the candidate whose
rewritten fragment embeds closest (cosine) to the original. Labels
that never occur in the fragment (e.g. relations synthesized from
canvas positions) fall back to direct term-to-term similarity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import VocabMissing
from ..parsing.graph import DoodlerGraph, Mention
from ..parsing.tagger import IRREGULAR_PLURALS
from .embedding import EmbeddingProvider, cosine
from .vocab import CanonicalVocab

_PLURAL_OF = {singular: plural for plural, singular in IRREGULAR_PLURALS.items()}


def pluralize(word: str) -> str:
    if word in _PLURAL_OF:
        return _PLURAL_OF[word]
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        return word[:-1] + "ies"
    return word + "s"


@dataclass(frozen=True)
class MappingResult:
    source: str
    target: str
    similarity: float


@dataclass
class CanonicalNode:
    id: int
    category: str              # canonical vocabulary entry
    display_name: str          # original doodler category
    size_class: str
    color: str
    stroke_weight: float
    first_mention: Mention


@dataclass(frozen=True)
class CanonicalEdge:
    src: int
    dst: int
    relation: str              # canonical relation
    display_relation: str


@dataclass
class CanonicalSceneGraph:
    nodes: dict[int, CanonicalNode] = field(default_factory=dict)
    edges: list[CanonicalEdge] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {
                    "id": n.id,
                    "category": n.category,
                    "display_name": n.display_name,
                    "size_class": n.size_class,
                    "color": n.color,
                    "stroke_weight": n.stroke_weight,
                    "first_mention": n.first_mention.as_list(),
                }
                for n in sorted(self.nodes.values(), key=lambda n: n.id)
            ],
            "edges": [
                {"src": e.src, "dst": e.dst, "relation": e.relation,
                 "display_relation": e.display_relation}
                for e in self.edges
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "CanonicalSceneGraph":
        graph = cls()
        for entry in payload.get("nodes", []):
            node = CanonicalNode(
                id=int(entry["id"]),
                category=entry["category"],
                display_name=entry.get("display_name", entry["category"]),
                size_class=entry["size_class"],
                color=entry.get("color", "#000000"),
                stroke_weight=float(entry.get("stroke_weight", 2.0)),
                first_mention=Mention(*entry.get("first_mention", [0, 0, 0])),
            )
            graph.nodes[node.id] = node
        for entry in payload.get("edges", []):
            graph.edges.append(
                CanonicalEdge(int(entry["src"]), int(entry["dst"]), entry["relation"],
                              entry.get("display_relation", entry["relation"]))
            )
        return graph


def _occurrence_pattern(term: str) -> re.Pattern:
    forms = {term}
    parts = term.split()
    forms.add(" ".join(parts[:-1] + [pluralize(parts[-1])]))
    alternation = "|".join(re.escape(f) for f in sorted(forms, key=len, reverse=True))
    return re.compile(rf"\b(?:{alternation})\b")


class ConceptMapper:
    """Entity/relation mapper with a per-(source, fragment) result cache."""

    def __init__(self, vocab: CanonicalVocab, provider: EmbeddingProvider):
        if not vocab.entities:
            raise VocabMissing("vocabulary has no entities")
        self.vocab = vocab
        self.provider = provider
        self._cache: dict[tuple[str, str, str], MappingResult] = {}

    def _best_by_substitution(self, source: str, fragment: str,
                              candidates: tuple[str, ...]) -> MappingResult:
        text = fragment.lower()
        pattern = _occurrence_pattern(source.lower())
        if pattern.search(text):
            original = self.provider.embed(text)
            best: MappingResult | None = None
            for candidate in sorted(candidates):
                substituted = pattern.sub(candidate, text)
                similarity = cosine(original, self.provider.embed(substituted))
                if best is None or similarity > best.similarity:
                    best = MappingResult(source, candidate, similarity)
            return best
        # Source absent from the fragment: compare the bare terms.
        original = self.provider.embed(source)
        best = None
        for candidate in sorted(candidates):
            similarity = cosine(original, self.provider.embed(candidate))
            if best is None or similarity > best.similarity:
                best = MappingResult(source, candidate, similarity)
        return best

    def map_entity(self, entity: str, fragment_text: str) -> MappingResult:
        key = ("entity", entity.lower(), fragment_text)
        if key not in self._cache:
            self._cache[key] = self._best_by_substitution(
                entity.lower(), fragment_text, self.vocab.entities
            )
        return self._cache[key]

    def map_relation(self, relation: str, fragment_text: str) -> MappingResult:
        if not self.vocab.relations:
            raise VocabMissing("vocabulary has no relations")
        key = ("relation", relation.lower(), fragment_text)
        if key not in self._cache:
            self._cache[key] = self._best_by_substitution(
                relation.lower(), fragment_text, self.vocab.relations
            )
        return self._cache[key]

    def map_graph(self, graph: DoodlerGraph, fragment_text: str) -> CanonicalSceneGraph:
        """Replace every node/edge label with its canonical target.

        Ids and topology are untouched; originals stay as display names.
        """
        scene = CanonicalSceneGraph()
        for node in graph.nodes.values():
            result = self.map_entity(node.category, fragment_text)
            scene.nodes[node.id] = CanonicalNode(
                id=node.id,
                category=result.target,
                display_name=node.category,
                size_class=self.vocab.size_of(result.target),
                color=node.color,
                stroke_weight=node.stroke_weight,
                first_mention=node.first_mention,
            )
        for edge in graph.edges:
            result = self.map_relation(edge.relation, fragment_text)
            scene.edges.append(
                CanonicalEdge(edge.src, edge.dst, result.target, edge.relation)
            )
        return scene
