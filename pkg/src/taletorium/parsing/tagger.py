"""Lexicon + suffix-rule part-of-speech tagger.

A deliberately small stand-in for a full dependency parse: a word list
resolves the common vocabulary and three suffix rules catch the rest.
Anything still unknown defaults to NOUN, which is the right bias for
fairy-tale text where unseen words are almost always things.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

NOUN = "NOUN"
VERB = "VERB"
ADJ = "ADJ"
ADP = "ADP"
PRON = "PRON"
DET = "DET"
OTHER = "OTHER"

POS_TAGS = frozenset({NOUN, VERB, ADJ, ADP, PRON, DET, OTHER})

_WORD_RE = re.compile(r"[A-Za-z][A-Za-z'\-]*")
_SENTENCE_SPLIT_RE = re.compile(r"[.!?]+")

# Plural forms that the -s/-es stripper cannot reach.
IRREGULAR_PLURALS = {
    "children": "child",
    "men": "man",
    "women": "woman",
    "mice": "mouse",
    "geese": "goose",
    "feet": "foot",
    "teeth": "tooth",
    "oxen": "ox",
    "wolves": "wolf",
    "leaves": "leaf",
    "loaves": "loaf",
    "hooves": "hoof",
    "elves": "elf",
    "dwarves": "dwarf",
    "thieves": "thief",
    "knives": "knife",
    "wives": "wife",
    "lives": "life",
    "calves": "calf",
    "halves": "half",
    "shelves": "shelf",
}


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    sentence_index: int
    token_index: int

    def is_plural_noun(self) -> bool:
        return self.pos == NOUN and self.lemma != self.surface.lower()


def singularize(word: str) -> str:
    """Best-effort plural stripping for lowercase nouns."""
    if word in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[word]
    if len(word) > 3 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 3 and word.endswith(("ses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if len(word) > 2 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def split_sentences(text: str) -> list[str]:
    """Split on terminal punctuation, dropping empty pieces."""
    return [part.strip() for part in _SENTENCE_SPLIT_RE.split(text) if part.strip()]


def _strip_possessive(word: str) -> str:
    if word.endswith("'s") or word.endswith("'S"):
        return word[:-2]
    return word.rstrip("'")


def _nearest_informative_pos(tagged: list[tuple[str, str, str]]) -> str | None:
    """Most recent tag in the current sentence that is not OTHER or DET."""
    for _, _, pos in reversed(tagged):
        if pos not in (OTHER, DET):
            return pos
    return None


def tokenize_tag(text: str, lexicon: dict[str, str]) -> list[Token]:
    """Sentence-split, tokenize and tag ``text``.

    Tag priority: lexicon entry, singular-form lexicon entry (marks a
    plural noun), then suffix rules (-ly -> OTHER, -ed/-ing after a
    noun or pronoun -> VERB, -ous/-ful -> ADJ), then NOUN. Possessive
    's is stripped before lookup. Deterministic for any input.
    """
    tokens: list[Token] = []
    for s_idx, sentence in enumerate(split_sentences(text)):
        tagged: list[tuple[str, str, str]] = []  # (surface, lemma, pos)
        for raw in _WORD_RE.findall(sentence):
            surface = _strip_possessive(raw)
            if not surface:
                continue
            word = surface.lower()
            lemma, pos = word, None
            if word in lexicon:
                pos = lexicon[word]
            else:
                singular = singularize(word)
                if singular != word and lexicon.get(singular) == NOUN:
                    pos = NOUN
                    lemma = singular
            if pos is None:
                if word.endswith("ly"):
                    pos = OTHER
                elif word.endswith(("ed", "ing")) and _nearest_informative_pos(tagged) in (NOUN, PRON):
                    pos = VERB
                elif word.endswith(("ous", "ful")):
                    pos = ADJ
                else:
                    pos = NOUN
                    lemma = singularize(word)
            if pos == NOUN and lemma == word:
                lemma = singularize(word)
            tagged.append((surface, lemma, pos))
        for t_idx, (surface, lemma, pos) in enumerate(tagged):
            tokens.append(Token(surface, lemma, pos, s_idx, t_idx))
    return tokens


def load_lexicon_file(path) -> dict[str, str]:
    """Read a lexicon file with one "word<TAB>POS" entry per line."""
    lexicon: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, _, pos = line.partition("\t")
            pos = pos.strip().upper()
            if pos not in POS_TAGS:
                raise ValueError(f"unknown POS tag {pos!r} for word {word!r}")
            lexicon[word.strip().lower()] = pos
    return lexicon
