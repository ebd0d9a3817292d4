"""Rule-based fragment parser: text -> doodler graph.

Nouns become styled entity nodes, adjectives directly before a noun
become its attributes, and verb/preposition runs between neighbouring
nouns in a sentence become relation edges.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ..errors import PaletteMissing
from .graph import DoodlerGraph, DoodlerNode, Mention
from .tagger import ADJ, ADP, NOUN, VERB, Token, tokenize_tag

# Style defaults; weights follow the size-word rule table.
DEFAULT_STROKE_WEIGHT = 2.0
BIG_STROKE_WEIGHT = 3.5
SMALL_STROKE_WEIGHT = 1.0
BIG_WORDS = frozenset({"big", "giant", "huge"})
SMALL_WORDS = frozenset({"small", "tiny"})

MAX_RELATION_TOKENS = 3

DEFAULT_PALETTE: list[tuple[str, str]] = [
    ("red", "#FF0000"),
    ("orange", "#FF7F00"),
    ("yellow", "#FFC800"),
    ("green", "#228B22"),
    ("blue", "#1E90FF"),
    ("purple", "#8A2BE2"),
    ("pink", "#FF69B4"),
    ("brown", "#8B4513"),
    ("gray", "#808080"),
    ("black", "#000000"),
]


@dataclass(frozen=True)
class NounMention:
    """A noun token resolved to an entity category."""
    token: Token
    category: str
    attributes: tuple[str, ...]


def mention_location(mention: NounMention, fragment_index: int) -> Mention:
    return Mention(fragment_index, mention.token.sentence_index, mention.token.token_index)


def stable_choice(options: int, seed: int, *keys: str) -> int:
    """Deterministic index in [0, options) from seed and string keys."""
    digest = hashlib.blake2b(
        ("|".join(str(k) for k in (seed, *keys))).encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big") % options


def assign_style(node: DoodlerNode, palette: list[tuple[str, str]], seed: int) -> DoodlerNode:
    """Fill color and stroke weight from attributes, else a stable palette pick."""
    if not palette:
        raise PaletteMissing("color palette is empty")
    names = {name.lower(): color for name, color in palette}
    color = None
    for attribute in node.attributes:
        if attribute in names:
            color = names[attribute]
            break
    if color is None:
        color = palette[stable_choice(len(palette), seed, node.category)][1]
    weight = DEFAULT_STROKE_WEIGHT
    if any(a in BIG_WORDS for a in node.attributes):
        weight = BIG_STROKE_WEIGHT
    elif any(a in SMALL_WORDS for a in node.attributes):
        weight = SMALL_STROKE_WEIGHT
    node.color = color
    node.stroke_weight = weight
    return node


def attributes_before(sentence_tokens: list[Token], position: int) -> tuple[str, ...]:
    """Contiguous ADJ run immediately before the token at ``position``."""
    attrs: list[str] = []
    i = position - 1
    while i >= 0 and sentence_tokens[i].pos == ADJ:
        attrs.append(sentence_tokens[i].lemma)
        i -= 1
    return tuple(reversed(attrs))


def noun_mentions(tokens: list[Token]) -> list[NounMention]:
    """All noun tokens with their attribute runs, in reading order."""
    by_sentence: dict[int, list[Token]] = {}
    for token in tokens:
        by_sentence.setdefault(token.sentence_index, []).append(token)
    mentions: list[NounMention] = []
    for s_idx in sorted(by_sentence):
        sentence = by_sentence[s_idx]
        for pos, token in enumerate(sentence):
            if token.pos == NOUN:
                mentions.append(
                    NounMention(token, token.lemma, attributes_before(sentence, pos))
                )
    return mentions


def relation_label(between: list[Token]) -> str | None:
    """Space-joined lemmas of VERB/ADP tokens, capped at three."""
    lemmas = [t.lemma for t in between if t.pos in (ADP, VERB)]
    if not lemmas:
        return None
    return " ".join(lemmas[:MAX_RELATION_TOKENS])


def sentence_relation_pairs(tokens: list[Token]) -> list[tuple[Token, Token, str]]:
    """(noun, noun, relation) for neighbouring noun pairs in each sentence."""
    by_sentence: dict[int, list[Token]] = {}
    for token in tokens:
        by_sentence.setdefault(token.sentence_index, []).append(token)
    pairs: list[tuple[Token, Token, str]] = []
    for s_idx in sorted(by_sentence):
        sentence = by_sentence[s_idx]
        noun_positions = [i for i, t in enumerate(sentence) if t.pos == NOUN]
        for a, b in zip(noun_positions, noun_positions[1:]):
            label = relation_label(sentence[a + 1 : b])
            if label:
                pairs.append((sentence[a], sentence[b], label))
    return pairs


def parse_fragment(
    fragment_text: str,
    lexicon: dict[str, str],
    palette: list[tuple[str, str]] | None = None,
    seed: int = 0,
    fragment_index: int = 0,
) -> DoodlerGraph:
    """Parse one fragment into a fresh doodler graph.

    One node per distinct noun category (first mention wins the
    location, attributes are merged across mentions); pronouns and
    determiners never become nodes.
    """
    palette = palette or DEFAULT_PALETTE
    if not palette:
        raise PaletteMissing("color palette is empty")
    tokens = tokenize_tag(fragment_text, lexicon)
    graph = DoodlerGraph()
    by_category: dict[str, DoodlerNode] = {}
    for mention in noun_mentions(tokens):
        node = by_category.get(mention.category)
        if node is None:
            node = DoodlerNode(
                id=graph.allocate_id(),
                category=mention.category,
                attributes=list(mention.attributes),
                first_mention=mention_location(mention, fragment_index),
            )
            graph.nodes[node.id] = node
            by_category[mention.category] = node
        else:
            for attribute in mention.attributes:
                if attribute not in node.attributes:
                    node.attributes.append(attribute)
    for node in graph.nodes.values():
        assign_style(node, palette, seed)
    for src_tok, dst_tok, label in sentence_relation_pairs(tokens):
        src = by_category[src_tok.lemma]
        dst = by_category[dst_tok.lemma]
        if src.id != dst.id:
            graph.add_edge(src.id, dst.id, label)
    return graph
