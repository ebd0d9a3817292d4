"""Embedding provider contract and the bundled word-vector provider."""

from __future__ import annotations

import re
from typing import Protocol

import numpy as np

from ..errors import EmbeddingUnavailable
from ..parsing.tagger import singularize

_WORD_RE = re.compile(r"[a-z][a-z'\-]*")


class EmbeddingProvider(Protocol):
    """Anything that can turn text into a fixed-dimension vector.

    Implementations must be deterministic: identical text yields an
    identical vector.
    """

    @property
    def dimension(self) -> int: ...

    def embed(self, text: str) -> np.ndarray: ...


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def text_words(text: str) -> list[str]:
    return _WORD_RE.findall(text.lower())


class WordVectorProvider:
    """Averages per-word vectors from a plain-text vector file.

    File format: first line is the dimension, then one
    "word v1 ... vD" entry per line.
    """

    def __init__(self, vectors: dict[str, np.ndarray], dimension: int):
        self._vectors = vectors
        self._dimension = dimension

    @classmethod
    def from_file(cls, path) -> "WordVectorProvider":
        vectors: dict[str, np.ndarray] = {}
        with open(path, encoding="utf-8") as handle:
            dimension = int(handle.readline().strip())
            for line in handle:
                parts = line.split()
                if not parts:
                    continue
                word, values = parts[0], parts[1:]
                if len(values) != dimension:
                    raise ValueError(f"bad vector width for {word!r}")
                vectors[word] = np.array([float(v) for v in values], dtype=np.float64)
        return cls(vectors, dimension)

    @property
    def dimension(self) -> int:
        return self._dimension

    def knows(self, word: str) -> bool:
        return self.word_vector(word) is not None

    def word_vector(self, word: str) -> np.ndarray | None:
        """Vector for a word, falling back to its singular form."""
        word = word.lower()
        vec = self._vectors.get(word)
        if vec is None:
            vec = self._vectors.get(singularize(word))
        return vec

    def embed(self, text: str) -> np.ndarray:
        hits = [v for v in (self.word_vector(w) for w in text_words(text)) if v is not None]
        if not hits:
            raise EmbeddingUnavailable(f"no known words in {text!r}")
        mean = np.mean(hits, axis=0)
        norm = np.linalg.norm(mean)
        if norm > 0:
            mean = mean / norm
        return mean
