from .graph import DoodlerEdge, DoodlerGraph, DoodlerNode, Mention
from .parser import DEFAULT_PALETTE, assign_style, parse_fragment
from .tagger import Token, tokenize_tag

__all__ = [
    "DoodlerEdge", "DoodlerGraph", "DoodlerNode", "Mention",
    "DEFAULT_PALETTE", "assign_style", "parse_fragment", "Token", "tokenize_tag",
]
