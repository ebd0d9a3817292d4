#!/usr/bin/env python3
"""Audit the bundled corpus against the lexicon, vectors and vocab.

Prints per-story node categories and relations plus anything that
looks off: categories without word vectors, verbs tagged as nouns,
relations whose words are all out of vocabulary.
"""

from __future__ import annotations

from taletorium import assets
from taletorium.mapping.embedding import WordVectorProvider, text_words
from taletorium.mapping.vocab import CanonicalVocab
from taletorium.parsing.parser import parse_fragment
from taletorium.parsing.tagger import tokenize_tag


def main() -> None:
    lex = assets.lexicon()
    provider = WordVectorProvider.from_file(assets.word_vectors_path())
    vocab = CanonicalVocab.from_file(assets.vocab_path())
    missing_vectors: set[str] = set()
    all_categories: set[str] = set()

    for path in sorted(assets.corpus_dir().glob("*.txt")):
        lines = path.read_text(encoding="utf-8").splitlines()
        title, body = lines[0], " ".join(lines[1:])
        graph = parse_fragment(body, lex)
        cats = sorted(n.category for n in graph.nodes.values())
        rels = sorted({e.relation for e in graph.edges})
        all_categories.update(cats)
        print(f"== {path.name} ({title})")
        print("   nodes:", ", ".join(cats))
        print("   rels :", ", ".join(rels))
        for cat in cats:
            if not provider.knows(cat):
                missing_vectors.add(cat)
        for rel in rels:
            if not any(provider.knows(w) for w in text_words(rel)):
                print(f"   !! relation with no known words: {rel!r}")

    print()
    for name in vocab.entities:
        if not provider.knows(name):
            missing_vectors.add(name)
    for rel in vocab.relations:
        if not any(provider.knows(w) for w in text_words(rel)):
            print(f"!! vocab relation with no known words: {rel!r}")
    if missing_vectors:
        print("!! categories missing word vectors:", ", ".join(sorted(missing_vectors)))
    else:
        print("all node categories and vocab entries have vectors")


if __name__ == "__main__":
    main()
