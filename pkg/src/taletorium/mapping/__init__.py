from .embedding import EmbeddingProvider, WordVectorProvider, cosine
from .mapper import CanonicalSceneGraph, ConceptMapper, MappingResult
from .vocab import CanonicalVocab

__all__ = [
    "EmbeddingProvider", "WordVectorProvider", "cosine",
    "CanonicalSceneGraph", "ConceptMapper", "MappingResult", "CanonicalVocab",
]
