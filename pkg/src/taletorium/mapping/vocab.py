"""Fixed canonical vocabulary for scene entities and relations."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import VocabMissing

SIZE_CLASSES = ("scene", "character", "prop")


@dataclass(frozen=True)
class CanonicalVocab:
    entities: tuple[str, ...]
    relations: tuple[str, ...]
    size_class: dict

    def __post_init__(self):
        if not self.entities:
            raise VocabMissing("vocabulary has no entities")
        for name in self.entities:
            if self.size_class.get(name) not in SIZE_CLASSES:
                raise ValueError(f"entity {name!r} lacks a valid size class")

    @classmethod
    def from_file(cls, path) -> "CanonicalVocab":
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
        entities = tuple(e["name"] for e in payload["entities"])
        size_class = {e["name"]: e["size_class"] for e in payload["entities"]}
        return cls(entities=entities, relations=tuple(payload["relations"]), size_class=size_class)

    def size_of(self, entity: str) -> str:
        return self.size_class[entity]
