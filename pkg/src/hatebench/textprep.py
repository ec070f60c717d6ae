"""Cleaning pipeline: pattern stripping, tokenization, stopwords, lemmas.

The four stages run in a fixed order (strip -> tokenize -> stopwords ->
lemmatize); each stage is pure and order-preserving, so they can also be
used individually.
"""

from __future__ import annotations

import re
import string
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class TokenSequence:
    doc_id: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class StopwordList:
    words: frozenset[str]

    def __contains__(self, token: str) -> bool:
        return token in self.words


@dataclass
class CleanResult:
    sequences: list[TokenSequence]
    empty_ids: list[str] = field(default_factory=list)


_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#\w+")
_HASH_SIGN_RE = re.compile(r"#(\w+)")
# A digit run is removed only when it is a whole whitespace-delimited token;
# digits embedded in a word (covid19) survive.
_NUMBER_RE = re.compile(r"(?<!\S)\d+(?!\S)")
_WS_RE = re.compile(r"\s+")

_EDGE_PUNCT = string.punctuation + "‘’“”…«»"


def strip_patterns(text: str, keep_hashtag_text: bool = False) -> str:
    """Remove profile tags, hashtags, URLs and standalone numbers.

    The input is NFC-normalized first.  With `keep_hashtag_text` only the
    '#' sign is dropped and the tag word survives.
    """
    text = unicodedata.normalize("NFC", text)
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    if keep_hashtag_text:
        text = _HASH_SIGN_RE.sub(r"\1", text)
    else:
        text = _HASHTAG_RE.sub(" ", text)
    text = _NUMBER_RE.sub(" ", text)
    return _WS_RE.sub(" ", text).strip()


def tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, strip edge punctuation per token."""
    tokens = []
    for raw in text.lower().split():
        tok = raw.strip(_EDGE_PUNCT)
        if tok:
            tokens.append(tok)
    return tokens


def remove_stopwords(tokens, stoplist: StopwordList) -> list[str]:
    return [tok for tok in tokens if tok not in stoplist]


# ---------------------------------------------------------------------------
# Lemmatizer: exception table first, then ordered suffix rules.
# ---------------------------------------------------------------------------

_VOWELS = set("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        # y acts as a vowel except at the start or after another vowel-y
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _measure(stem: str) -> int:
    """Count vowel-consonant alternations ([C](VC)^m[V] in stemmer terms)."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        vowel = not _is_consonant(stem, i)
        if prev_vowel and not vowel:
            m += 1
        prev_vowel = vowel
    return m


def _ends_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    return (
        _is_consonant(stem, len(stem) - 3)
        and not _is_consonant(stem, len(stem) - 2)
        and _is_consonant(stem, len(stem) - 1)
        and stem[-1] not in "wxy"
    )


def _fix_stem(stem: str) -> str:
    """Shared cleanup after -ing/-ed removal: undouble or restore final e."""
    if (
        len(stem) >= 2
        and stem[-1] == stem[-2]
        and _is_consonant(stem, len(stem) - 1)
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def lemmatize_token(token: str, exceptions: dict[str, str]) -> str:
    """Map one lowercase token to its lemma.

    Irregular forms go through the exception table; everything else through
    ordered suffix rules.  A rule never applies if it would empty the token.
    """
    if token in exceptions:
        return exceptions[token]
    if len(token) <= 3:
        return token

    if token.endswith("sses"):
        return token[:-2]
    if token.endswith("ies") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith("ied") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith("eed"):
        stem = token[:-3]
        return token[:-1] if _measure(stem) > 0 else token
    if token.endswith("ing"):
        stem = token[:-3]
        if len(stem) >= 2 and _has_vowel(stem):
            return _fix_stem(stem)
        return token
    if token.endswith("ed"):
        stem = token[:-2]
        if len(stem) >= 2 and _has_vowel(stem):
            return _fix_stem(stem)
        return token
    if token.endswith("es"):
        stem = token[:-2]
        if stem and stem.endswith(("sh", "ch", "x", "z", "o")):
            return stem
    if token.endswith("s") and not token.endswith(("ss", "us", "is")):
        stem = token[:-1]
        if _has_vowel(stem):
            return stem
    return token


def lemmatize(tokens, exceptions: dict[str, str] | None = None) -> list[str]:
    if exceptions is None:
        exceptions = load_lemma_exceptions()
    return [lemmatize_token(tok, exceptions) for tok in tokens]


# ---------------------------------------------------------------------------
# Bundled data files
# ---------------------------------------------------------------------------


def _data_path(name: str) -> Path:
    return Path(str(resources.files("hatebench") / "data" / name))


def load_stopwords(path=None) -> StopwordList:
    """Read a stopword file: one lowercase word per line, '#' comments."""
    path = Path(path) if path else _data_path("stopwords.txt")
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.split("#", 1)[0].strip()
            if word:
                words.add(word.lower())
    return StopwordList(words=frozenset(words))


def load_lemma_exceptions(path=None) -> dict[str, str]:
    """Read the irregular-form table: TSV `inflected<TAB>lemma`."""
    path = Path(path) if path else _data_path("lemma_exceptions.tsv")
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            inflected, lemma = line.split("\t")
            table[inflected] = lemma
    return table


# ---------------------------------------------------------------------------
# Composed pipeline
# ---------------------------------------------------------------------------


def clean_pipeline(
    doc,
    stoplist: StopwordList,
    exceptions: dict[str, str] | None = None,
    keep_hashtag_text: bool = False,
) -> TokenSequence:
    """strip_patterns -> tokenize -> remove_stopwords -> lemmatize."""
    text = strip_patterns(doc.text, keep_hashtag_text=keep_hashtag_text)
    tokens = remove_stopwords(tokenize(text), stoplist)
    tokens = lemmatize(tokens, exceptions)
    return TokenSequence(doc_id=doc.id, tokens=tuple(tokens))


def clean_corpus(docs, stoplist=None, exceptions=None, keep_hashtag_text=False) -> CleanResult:
    """Clean every document; ids of documents that clean to nothing are flagged."""
    if stoplist is None:
        stoplist = load_stopwords()
    if exceptions is None:
        exceptions = load_lemma_exceptions()
    sequences = []
    empty_ids = []
    for doc in docs:
        seq = clean_pipeline(doc, stoplist, exceptions, keep_hashtag_text)
        sequences.append(seq)
        if not seq.tokens:
            empty_ids.append(seq.doc_id)
    return CleanResult(sequences=sequences, empty_ids=empty_ids)
