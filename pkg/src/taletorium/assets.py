"""Loaders for the data files bundled with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .parsing.tagger import load_lexicon_file


def data_dir() -> Path:
    return Path(str(resources.files("taletorium") / "data"))


def corpus_dir() -> Path:
    return data_dir() / "corpus"


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    words = set()
    for line in (data_dir() / "stopwords.txt").read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


@lru_cache(maxsize=None)
def lexicon() -> dict[str, str]:
    return load_lexicon_file(data_dir() / "lexicon.tsv")


@lru_cache(maxsize=None)
def sentence_templates() -> tuple[str, ...]:
    lines = (data_dir() / "sentence_templates.txt").read_text(encoding="utf-8").splitlines()
    return tuple(line.strip() for line in lines if line.strip() and not line.startswith("#"))


@lru_cache(maxsize=None)
def animacy() -> dict[str, str]:
    """category -> "animate" | "inanimate"; unknown categories default animate."""
    table: dict[str, str] = {}
    for line in (data_dir() / "animacy.txt").read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, _, kind = line.partition("\t")
        table[word.strip().lower()] = kind.strip().lower()
    return table


def word_vectors_path() -> Path:
    return data_dir() / "word_vectors.txt"


def vocab_path() -> Path:
    return data_dir() / "vocab81.json"


def doodle_bank_path() -> Path:
    return data_dir() / "doodle_bank.ndjson"


def load_json(path: Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
