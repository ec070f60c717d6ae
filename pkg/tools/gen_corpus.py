#!/usr/bin/env python3
"""Regenerate the bundled synthetic benchmark corpus and its GloVe fixture.

The corpus is 2,000 tweet-shaped documents with class-correlated
vocabulary: most documents carry 2-4 words exclusive to their class plus
shared filler, so the task is separable by construction; ~6% are
"ambiguous" (shared vocabulary only, random label), keeping test scores
strictly below 1.0.  Labels use the three-way source schema (hate /
offensive / neither) so the binarization path is exercised.

The GloVe fixture covers the cleaned vocabulary with seeded unit vectors
in the standard text format.  Both outputs are deterministic.
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from hatebench.corpus import Label, LabeledDocument  # noqa: E402
from hatebench.embeddings import EmbeddingTable, write_glove  # noqa: E402
from hatebench.textprep import clean_corpus  # noqa: E402

HATE_WORDS = [
    "despise", "vermin", "filth", "scum", "degenerate", "trash", "vile",
    "loathe", "disgusting", "parasite", "savage", "subhuman", "worthless",
    "repulsive", "traitor", "infest", "plague", "detest", "inferior",
    "eradicate", "wretched", "abhor", "revolting", "menace",
]

CALM_WORDS = [
    "brunch", "sunshine", "garden", "recipe", "concert", "puppy", "holiday",
    "painting", "coffee", "festival", "bicycle", "library", "picnic",
    "melody", "harvest", "voyage", "blossom", "breeze", "museum", "orchard",
    "lantern", "meadow", "sparrow", "quilt",
]

SHARED_WORDS = [
    "people", "city", "day", "news", "friend", "game", "street", "phone",
    "video", "story", "weather", "team", "food", "music", "road", "office",
    "school", "morning", "night", "week", "house", "family", "work", "plan",
    "event", "idea", "photo", "crowd", "train", "coast", "field", "paper",
    "radio", "letter", "market", "bridge", "window", "corner", "signal",
    "ticket",
]

GLUE = ["the", "a", "is", "are", "this", "that", "so", "very", "and", "of", "in", "on"]
NOISE = ["@user{}", "#topic{}", "http://t.co/x{}", "{}"]


def build_doc(rng) -> tuple[str, str]:
    kind = rng.random()
    if kind < 0.04:
        # ambiguous: shared vocabulary only, label carries no text signal
        words = list(rng.choice(SHARED_WORDS, size=rng.integers(8, 15), replace=True))
        hate = rng.random() < 0.5
    else:
        hate = rng.random() < 0.5
        own = HATE_WORDS if hate else CALM_WORDS
        words = list(rng.choice(own, size=rng.integers(2, 6), replace=True))
        words += list(rng.choice(SHARED_WORDS, size=rng.integers(6, 11), replace=True))
        rng.shuffle(words)
    for _ in range(int(rng.integers(0, 3))):
        words.insert(int(rng.integers(0, len(words) + 1)), GLUE[int(rng.integers(0, len(GLUE)))])
    for _ in range(int(rng.integers(0, 3))):
        noise = NOISE[int(rng.integers(0, len(NOISE)))].format(int(rng.integers(0, 1000)))
        words.insert(int(rng.integers(0, len(words) + 1)), noise)
    text_words = [w.capitalize() if rng.random() < 0.08 else w for w in words]
    text = " ".join(text_words)
    if rng.random() < 0.2:
        text += "!" if rng.random() < 0.5 else "."
    if hate:
        label = "hate"
    else:
        label = "offensive" if rng.random() < 0.5 else "neither"
    return text, label


def main() -> int:
    rng = np.random.Generator(np.random.PCG64(20240101))
    rows = [build_doc(rng) for _ in range(2000)]
    corpus_path = ROOT / "src" / "hatebench" / "data" / "toy_corpus.csv"
    with open(corpus_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["tweet", "class"])
        writer.writerows(rows)
    print(f"wrote {len(rows)} documents to {corpus_path}")

    docs = [
        LabeledDocument(id=str(i), text=text, label=Label.HATE if lab == "hate" else Label.NONHATE)
        for i, (text, lab) in enumerate(rows)
    ]
    cleaned = clean_corpus(docs)
    vocab = sorted({tok for seq in cleaned.sequences for tok in seq.tokens})
    dim = 50
    vec_rng = np.random.Generator(np.random.PCG64(777))
    vectors = {}
    for tok in vocab:
        v = vec_rng.standard_normal(dim)
        vectors[tok] = v / np.linalg.norm(v)
    glove_path = ROOT / "src" / "hatebench" / "data" / "toy_glove.txt"
    write_glove(EmbeddingTable(dim=dim, vectors=vectors, source="glove-file"), glove_path)
    print(f"wrote {len(vocab)} vectors (dim {dim}) to {glove_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
