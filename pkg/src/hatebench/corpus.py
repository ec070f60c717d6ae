"""Corpus loading, label binarization, merging and seeded train/test splits."""

from __future__ import annotations

import csv
import math
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from ._rng import shuffled


class Label(Enum):
    HATE = "hate"
    NONHATE = "nonhate"


# Source datasets label tweets as hate / offensive / neither; only "hate"
# stays positive, the other two collapse into the negative class.
DEFAULT_LABEL_MAPPING = {
    "hate": Label.HATE,
    "offensive": Label.NONHATE,
    "neither": Label.NONHATE,
    "nonhate": Label.NONHATE,
    "0": Label.HATE,
    "1": Label.NONHATE,
    "2": Label.NONHATE,
}


@dataclass(frozen=True)
class RawRecord:
    id: str
    text: str
    label_raw: str


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    text: str
    label: Label


@dataclass
class LoadResult:
    records: list[RawRecord]
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def warning_count(self) -> int:
        return len(self.skipped)


@dataclass
class MergeResult:
    docs: list[LabeledDocument]
    removed_duplicates: int = 0


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[LabeledDocument, ...]
    test: tuple[LabeledDocument, ...]
    ratio: float
    seed: int


class CorpusError(Exception):
    pass


class LabelMappingError(CorpusError):
    pass


def load_csv(path, schema: dict) -> LoadResult:
    """Read a labeled corpus from a UTF-8, RFC-4180 CSV with a header row.

    `schema` maps field names to column names: "text" and "label" are
    required, "id" is optional (row index is used when absent).  Rows too
    short to contain a mapped column are skipped and reported by row number.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus file not found: {path}")
    text_col = schema.get("text")
    label_col = schema.get("label") or schema.get("label_raw")
    id_col = schema.get("id")
    if not text_col or not label_col:
        raise CorpusError("schema must map 'text' and 'label' columns")

    records: list[RawRecord] = []
    skipped: list[tuple[int, str]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CorpusError(f"empty file (no header row): {path}")
        positions = {}
        for fieldname, col in (("text", text_col), ("label", label_col), ("id", id_col)):
            if col is None:
                continue
            if col not in header:
                raise CorpusError(f"column {col!r} not found in header of {path}")
            positions[fieldname] = header.index(col)

        needed = max(positions.values())
        for row_number, row in enumerate(reader):
            if len(row) <= needed:
                skipped.append((row_number, f"row has {len(row)} fields, need {needed + 1}"))
                continue
            rec_id = row[positions["id"]] if "id" in positions else str(row_number)
            records.append(
                RawRecord(id=rec_id, text=row[positions["text"]], label_raw=row[positions["label"]])
            )
    return LoadResult(records=records, skipped=skipped)


def binarize_labels(records, mapping=None) -> list[LabeledDocument]:
    """Map each record's raw label through `mapping`; order is preserved.

    Raw labels are matched case-insensitively after stripping whitespace.
    An unmapped label is a hard error naming the offending value.
    """
    if mapping is None:
        mapping = DEFAULT_LABEL_MAPPING
    lookup = {str(k).strip().lower(): v for k, v in mapping.items()}
    docs = []
    for rec in records:
        key = rec.label_raw.strip().lower()
        if key not in lookup:
            raise LabelMappingError(f"unmapped label value: {rec.label_raw!r}")
        docs.append(LabeledDocument(id=rec.id, text=rec.text, label=lookup[key]))
    return docs


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def merge_corpora(a, b, dedupe: bool = True, names: tuple[str, str] = ("a", "b")) -> MergeResult:
    """Concatenate two corpora, namespacing ids by source.

    With dedupe on, documents whose NFC-normalized text is byte-identical to
    an earlier document keep only the first occurrence.
    """
    merged = []
    for name, docs in zip(names, (a, b)):
        for doc in docs:
            merged.append(LabeledDocument(id=f"{name}:{doc.id}", text=doc.text, label=doc.label))
    if not dedupe:
        return MergeResult(docs=merged)
    seen: set[str] = set()
    kept = []
    removed = 0
    for doc in merged:
        key = _nfc(doc.text)
        if key in seen:
            removed += 1
            continue
        seen.add(key)
        kept.append(doc)
    return MergeResult(docs=kept, removed_duplicates=removed)


def split(docs, ratio: float, seed: int, stratify: bool = False) -> DatasetSplit:
    """Deterministic seeded train/test split.

    Documents are shuffled with a SplitMix64-driven Fisher-Yates shuffle and
    the first floor(ratio*N) go to train.  With `stratify`, each class is
    shuffled under its own derived seed and per-class train counts are
    balanced so the overall train size still equals floor(ratio*N).
    """
    docs = list(docs)
    if not 0.0 < ratio < 1.0:
        raise CorpusError(f"split ratio must be in (0,1), got {ratio}")
    if len(docs) < 2:
        raise CorpusError(f"need at least 2 documents to split, got {len(docs)}")
    n_train = math.floor(ratio * len(docs))

    if not stratify:
        order = shuffled(docs, seed)
        return DatasetSplit(
            train=tuple(order[:n_train]), test=tuple(order[n_train:]), ratio=ratio, seed=seed
        )

    by_class: dict[Label, list[LabeledDocument]] = {Label.HATE: [], Label.NONHATE: []}
    for doc in docs:
        by_class[doc.label].append(doc)
    # floor per class, then hand the shortfall to the class with the largest
    # fractional remainder (NONHATE breaks exact ties, arbitrarily but fixed)
    counts = {lab: math.floor(ratio * len(group)) for lab, group in by_class.items()}
    order_by_rem = sorted(
        by_class, key=lambda lab: (ratio * len(by_class[lab])) % 1.0, reverse=True
    )
    i = 0
    while sum(counts.values()) < n_train:
        lab = order_by_rem[i % len(order_by_rem)]
        if counts[lab] < len(by_class[lab]):
            counts[lab] += 1
        i += 1
    train: list[LabeledDocument] = []
    test: list[LabeledDocument] = []
    for offset, lab in enumerate(sorted(by_class, key=lambda l: l.value)):
        order = shuffled(by_class[lab], seed + offset + 1)
        train.extend(order[: counts[lab]])
        test.extend(order[counts[lab] :])
    return DatasetSplit(train=tuple(train), test=tuple(test), ratio=ratio, seed=seed)


def save_split(split_result: DatasetSplit, out_dir) -> tuple[Path, Path]:
    """Persist a split as train.csv / test.csv with columns id,text,label."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, docs in (("train.csv", split_result.train), ("test.csv", split_result.test)):
        path = out_dir / name
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "text", "label"])
            for doc in docs:
                writer.writerow([doc.id, doc.text, doc.label.value])
        paths.append(path)
    return paths[0], paths[1]


def load_split(split_dir) -> tuple[list[LabeledDocument], list[LabeledDocument]]:
    """Read back a split persisted by save_split."""
    split_dir = Path(split_dir)
    sides = []
    for name in ("train.csv", "test.csv"):
        result = load_csv(split_dir / name, {"id": "id", "text": "text", "label": "label"})
        sides.append(binarize_labels(result.records, {"hate": Label.HATE, "nonhate": Label.NONHATE}))
    return sides[0], sides[1]
