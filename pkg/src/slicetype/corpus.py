"""Word-frequency model behind key prediction and key merging.

Two letter tries are kept: a unigram trie over all known words and, per
preceding word, a bigram trie over its observed successors.  Every trie
node caches the best word in its subtree so prefix queries are O(len)
with no subtree walk.  Best means highest count, ties broken by
lexicographically smallest word.
"""

from __future__ import annotations

import threading
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_SENTENCE_BREAKS = ".!?;:"


class CorpusFormatError(ValueError):
    """A corpus file line that does not match the expected format."""


class PredictionSource(Enum):
    BIGRAM = "bigram"
    UNIGRAM = "unigram"


@dataclass(frozen=True)
class Prediction:
    word: str
    score: int
    source: PredictionSource


# ---------------------------------------------------------------------------
# trie
# ---------------------------------------------------------------------------


class _TrieNode:
    __slots__ = ("children", "count", "best_word", "best_count")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.count = 0  # terminal count; 0 means not a word end
        self.best_word: str | None = None
        self.best_count = 0


class _Trie:
    """Letter trie with a best-descendant cache on every node."""

    def __init__(self) -> None:
        self.root = _TrieNode()
        self.total = 0

    def insert(self, word: str, delta: int) -> None:
        if delta <= 0:
            raise ValueError(f"count increment must be positive, got {delta}")
        node = self.root
        path = [node]
        for ch in word:
            nxt = node.children.get(ch)
            if nxt is None:
                nxt = _TrieNode()
                node.children[ch] = nxt
            node = nxt
            path.append(node)
        node.count += delta
        self.total += delta
        new_count = node.count
        # counts never decrease, so the cached best only ever needs to be
        # challenged by the word just updated
        for seen in path:
            if (
                seen.best_word is None
                or new_count > seen.best_count
                or (new_count == seen.best_count and word < seen.best_word)
            ):
                seen.best_word = word
                seen.best_count = new_count

    def node_for(self, prefix: str) -> _TrieNode | None:
        node = self.root
        for ch in prefix:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def best(self, prefix: str) -> tuple[str, int] | None:
        node = self.node_for(prefix)
        if node is None or node.best_word is None:
            return None
        return node.best_word, node.best_count

    def count(self, word: str) -> int:
        node = self.node_for(word)
        return 0 if node is None else node.count

    def words(self) -> Iterator[tuple[str, int]]:
        """Yield (word, count) in lexicographic order."""
        stack: list[tuple[str, _TrieNode]] = [("", self.root)]
        while stack:
            prefix, node = stack.pop()
            if node.count > 0:
                yield prefix, node.count
            for ch in sorted(node.children, reverse=True):
                stack.append((prefix + ch, node.children[ch]))


# ---------------------------------------------------------------------------
# model
# ---------------------------------------------------------------------------


class NgramModel:
    """Unigram trie plus per-predecessor bigram tries.

    Mutating calls (learn_word, learn_bigram) take an internal lock; each
    read query sees a consistent model state, but two successive queries
    may straddle a concurrent update.
    """

    def __init__(self) -> None:
        self._unigrams = _Trie()
        self._bigrams: dict[str, _Trie] = {}
        self._pair_count = 0
        self._lock = threading.RLock()

    # -- queries ------------------------------------------------------

    def predict(self, prev_word: str | None, prefix: str) -> Prediction | None:
        """Best completion of prefix: bigram successors of prev_word first,
        unigram fallback.  None when no known word extends the prefix."""
        _check_letters(prefix, "prefix")
        if prev_word:
            trie = self._bigrams.get(prev_word.lower())
            if trie is not None:
                hit = trie.best(prefix)
                if hit is not None:
                    return Prediction(hit[0], hit[1], PredictionSource.BIGRAM)
        hit = self._unigrams.best(prefix)
        if hit is not None:
            return Prediction(hit[0], hit[1], PredictionSource.UNIGRAM)
        return None

    def extendable_letters(self, prev_word: str | None, prefix: str) -> set[str]:
        """Letters c for which predict(prev_word, prefix + c) succeeds."""
        _check_letters(prefix, "prefix")
        letters: set[str] = set()
        node = self._unigrams.node_for(prefix)
        if node is not None:
            letters.update(node.children)
        if prev_word:
            trie = self._bigrams.get(prev_word.lower())
            if trie is not None:
                node = trie.node_for(prefix)
                if node is not None:
                    letters.update(node.children)
        return letters

    def contains(self, word: str) -> bool:
        return self._unigrams.count(word) > 0

    def word_count(self, word: str) -> int:
        return self._unigrams.count(word)

    def words(self) -> Iterator[tuple[str, int]]:
        return self._unigrams.words()

    def letter_ranking(self) -> str:
        """All 26 letters, most frequent first (count-weighted occurrences
        across the unigram vocabulary; ties alphabetical).  Letters absent
        from the vocabulary trail in alphabetical order."""
        weight = Counter({ch: 0 for ch in ALPHABET})
        for word, count in self._unigrams.words():
            for ch in word:
                weight[ch] += count
        return "".join(sorted(ALPHABET, key=lambda ch: (-weight[ch], ch)))

    def stats(self) -> dict[str, int]:
        return {
            "words": sum(1 for _ in self._unigrams.words()),
            "tokens": self._unigrams.total,
            "bigram_contexts": len(self._bigrams),
            "bigram_pairs": self._pair_count,
        }

    # -- learning -----------------------------------------------------

    def learn_word(self, word: str) -> None:
        word = word.lower()
        _check_letters(word, "word", allow_empty=False)
        with self._lock:
            self._unigrams.insert(word, 1)

    def learn_bigram(self, prev_word: str, next_word: str) -> None:
        prev_word = prev_word.lower()
        next_word = next_word.lower()
        _check_letters(prev_word, "prev_word", allow_empty=False)
        _check_letters(next_word, "next_word", allow_empty=False)
        with self._lock:
            if self._unigrams.count(next_word) == 0:
                self._unigrams.insert(next_word, 1)
            trie = self._bigrams.get(prev_word)
            if trie is None:
                trie = _Trie()
                self._bigrams[prev_word] = trie
            if trie.count(next_word) == 0:
                self._pair_count += 1
            trie.insert(next_word, 1)

    # -- bulk ---------------------------------------------------------

    def _insert_unigram(self, word: str, count: int) -> None:
        self._unigrams.insert(word, count)

    def _insert_bigram(self, prev_word: str, next_word: str, count: int) -> None:
        if self._unigrams.count(next_word) == 0:
            raise ValueError(
                f"bigram successor {next_word!r} is not in the unigram vocabulary"
            )
        trie = self._bigrams.get(prev_word)
        if trie is None:
            trie = _Trie()
            self._bigrams[prev_word] = trie
        if trie.count(next_word) == 0:
            self._pair_count += 1
        trie.insert(next_word, count)

    def bigram_pairs(self) -> Iterator[tuple[str, str, int]]:
        """Yield (prev, next, count) in lexicographic order."""
        for prev in sorted(self._bigrams):
            for nxt, count in self._bigrams[prev].words():
                yield prev, nxt, count


def _check_letters(text: str, what: str, allow_empty: bool = True) -> None:
    if not text:
        if allow_empty:
            return
        raise ValueError(f"{what} must be non-empty")
    for ch in text:
        if ch not in ALPHABET:
            raise ValueError(f"{what} must be lowercase a-z, got {text!r}")


# ---------------------------------------------------------------------------
# building and file formats
# ---------------------------------------------------------------------------


def build_model(
    unigrams: Iterable[tuple[str, int]],
    bigrams: Iterable[tuple[str, str, int]] = (),
) -> NgramModel:
    """Build a model from (word, count) and (prev, next, count) tuples.
    Duplicate entries accumulate.  Every bigram successor must already be
    a unigram word."""
    model = NgramModel()
    for word, count in unigrams:
        word = word.lower()
        _check_letters(word, "word", allow_empty=False)
        if count <= 0:
            raise ValueError(f"count for {word!r} must be positive, got {count}")
        model._insert_unigram(word, count)
    for prev, nxt, count in bigrams:
        prev = prev.lower()
        nxt = nxt.lower()
        _check_letters(prev, "prev_word", allow_empty=False)
        _check_letters(nxt, "next_word", allow_empty=False)
        if count <= 0:
            raise ValueError(f"count for {prev!r} {nxt!r} must be positive, got {count}")
        model._insert_bigram(prev, nxt, count)
    return model


def parse_unigram_lines(lines: Iterable[str]) -> list[tuple[str, int]]:
    """Parse word<TAB>count lines; # starts a comment, blank lines skipped."""
    out: list[tuple[str, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise CorpusFormatError(
                f"line {lineno}: expected word<TAB>count, got {raw.rstrip()!r}"
            )
        word = parts[0].strip().lower()
        if not word or any(ch not in ALPHABET for ch in word):
            raise CorpusFormatError(f"line {lineno}: bad word {parts[0]!r}")
        try:
            count = int(parts[1].strip())
        except ValueError:
            raise CorpusFormatError(f"line {lineno}: bad count {parts[1]!r}") from None
        if count < 1:
            raise CorpusFormatError(f"line {lineno}: count must be >= 1, got {count}")
        out.append((word, count))
    return out


def parse_bigram_lines(lines: Iterable[str]) -> list[tuple[str, str, int]]:
    """Parse prev<TAB>next<TAB>count lines; # starts a comment."""
    out: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorpusFormatError(
                f"line {lineno}: expected prev<TAB>next<TAB>count, got {raw.rstrip()!r}"
            )
        prev = parts[0].strip().lower()
        nxt = parts[1].strip().lower()
        for word, src in ((prev, parts[0]), (nxt, parts[1])):
            if not word or any(ch not in ALPHABET for ch in word):
                raise CorpusFormatError(f"line {lineno}: bad word {src!r}")
        try:
            count = int(parts[2].strip())
        except ValueError:
            raise CorpusFormatError(f"line {lineno}: bad count {parts[2]!r}") from None
        if count < 1:
            raise CorpusFormatError(f"line {lineno}: count must be >= 1, got {count}")
        out.append((prev, nxt, count))
    return out


def load_corpus_dir(directory: str | Path) -> NgramModel:
    """Load unigrams.txt (required) and bigrams.txt (optional) from a
    directory."""
    directory = Path(directory)
    uni_path = directory / "unigrams.txt"
    if not uni_path.is_file():
        raise FileNotFoundError(f"no unigrams.txt in {directory}")
    unigrams = parse_unigram_lines(uni_path.read_text(encoding="utf-8").splitlines())
    bi_path = directory / "bigrams.txt"
    bigrams: list[tuple[str, str, int]] = []
    if bi_path.is_file():
        bigrams = parse_bigram_lines(bi_path.read_text(encoding="utf-8").splitlines())
    return build_model(unigrams, bigrams)


def save_corpus_dir(model: NgramModel, directory: str | Path) -> None:
    """Write unigrams.txt and bigrams.txt; loading them back reproduces
    the model exactly."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    uni_lines = ["# unigram corpus: word<TAB>count"]
    uni_lines += [f"{w}\t{c}" for w, c in model.words()]
    (directory / "unigrams.txt").write_text("\n".join(uni_lines) + "\n", encoding="utf-8")
    bi_lines = ["# bigram corpus: prev<TAB>next<TAB>count"]
    bi_lines += [f"{p}\t{n}\t{c}" for p, n, c in model.bigram_pairs()]
    (directory / "bigrams.txt").write_text("\n".join(bi_lines) + "\n", encoding="utf-8")


def default_model() -> NgramModel:
    """Fresh model from the corpus bundled with the package."""
    data = resources.files("slicetype").joinpath("data")
    unigrams = parse_unigram_lines(
        data.joinpath("unigrams.txt").read_text(encoding="utf-8").splitlines()
    )
    bigrams = parse_bigram_lines(
        data.joinpath("bigrams.txt").read_text(encoding="utf-8").splitlines()
    )
    return build_model(unigrams, bigrams)


def build_from_text(text: str) -> NgramModel:
    """Derive a model from running text: words are maximal a-z runs after
    lowercasing, bigrams are adjacent word pairs within a sentence
    (sentences break on . ! ? ; and :)."""
    model = NgramModel()
    unigrams: Counter[str] = Counter()
    bigrams: Counter[tuple[str, str]] = Counter()
    for block in _split_sentences(text.lower()):
        words = _letter_runs(block)
        unigrams.update(words)
        bigrams.update(zip(words, words[1:]))
    for word in sorted(unigrams):
        model._insert_unigram(word, unigrams[word])
    for prev, nxt in sorted(bigrams):
        model._insert_bigram(prev, nxt, bigrams[(prev, nxt)])
    return model


def _split_sentences(text: str) -> list[str]:
    out: list[str] = []
    current: list[str] = []
    for ch in text:
        if ch in _SENTENCE_BREAKS:
            out.append("".join(current))
            current = []
        else:
            current.append(ch)
    out.append("".join(current))
    return out


def _letter_runs(text: str) -> list[str]:
    words: list[str] = []
    current: list[str] = []
    for ch in text:
        if ch in ALPHABET:
            current.append(ch)
        elif current:
            words.append("".join(current))
            current = []
    if current:
        words.append("".join(current))
    return words
