"""Letters, words and the projection morphism.

A word is a tuple of string tokens. Single-character tokens cover the usual
textbook examples (``rescues``); multi-character tokens are needed as soon as
vertices are named ``10``, ``11``, ... .
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Letter = str
Word = tuple
WordLike = Union[str, Iterable]


def parse_word(text: str) -> Word:
    """Parse either ``rescues`` (one letter per character) or ``1 2 3 10``."""
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(text.split())
    return tuple(text)


def as_word(w: WordLike) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    return tuple(str(a) for a in w)


def format_word(w: WordLike, tokens: bool | None = None) -> str:
    """Inverse of :func:`parse_word`.

    With ``tokens=None`` the whitespace form is chosen only if some letter is
    longer than one character. A word made of a single multi-character
    letter is ambiguous in either form; callers pass ``tokens`` explicitly.
    """
    w = as_word(w)
    if tokens is None:
        tokens = any(len(a) != 1 for a in w)
    return " ".join(w) if tokens else "".join(w)


def letter_key(a: Letter):
    """Sort key for letters: numeric tokens numerically, before the rest."""
    if a.isdigit():
        return (0, int(a), a)
    return (1, 0, a)


def sort_letters(letters: Iterable[Letter]) -> list:
    return sorted(letters, key=letter_key)


def alphabet(w: WordLike) -> frozenset:
    return frozenset(as_word(w))


def letter_count(w: WordLike, a: Letter) -> int:
    return as_word(w).count(str(a))


def letter_counts(w: WordLike) -> Counter:
    return Counter(as_word(w))


def is_k_uniform(w: WordLike, k: int) -> bool:
    # the empty word is vacuously k-uniform
    return all(c == k for c in letter_counts(w).values())


def uniformity(w: WordLike) -> int | None:
    """The k for which ``w`` is k-uniform, or None (also None for the empty word)."""
    counts = set(letter_counts(w).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def reverse(w: WordLike) -> Word:
    return as_word(w)[::-1]


def concat(*words: WordLike) -> Word:
    out: tuple = ()
    for w in words:
        out += as_word(w)
    return out


def projection(w: WordLike, a: Letter, b: Letter) -> Word:
    """Erase every letter of ``w`` other than ``a`` and ``b``."""
    a, b = str(a), str(b)
    if a == b:
        raise ValueError(f"projection needs two distinct letters, got {a!r} twice")
    return tuple(x for x in as_word(w) if x == a or x == b)


def erase(w: WordLike, keep: Iterable[Letter]) -> Word:
    """Erase every letter not in ``keep`` (the projection onto a letter set)."""
    keep = set(map(str, keep))
    return tuple(x for x in as_word(w) if x in keep)


def canonical_word(letters: Iterable[Letter]) -> Word:
    """The 1-uniform word listing ``letters`` in canonical order."""
    return tuple(sort_letters(set(map(str, letters))))


@dataclass(frozen=True)
class WordPair:
    """Two words ``(w, v)``; the unit that represents a graph.

    Equal alphabets are not enforced here since the constructions start from
    ``(ε, ε)``; :func:`piwords.representation.decode` checks them.
    """

    w: Word
    v: Word

    def __post_init__(self):
        object.__setattr__(self, "w", as_word(self.w))
        object.__setattr__(self, "v", as_word(self.v))

    @classmethod
    def parse(cls, w: str, v: str) -> "WordPair":
        return cls(parse_word(w), parse_word(v))

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.w) | frozenset(self.v)

    def alphabet_mismatch(self) -> frozenset:
        """Letters occurring in exactly one of the two words."""
        return frozenset(self.w) ^ frozenset(self.v)

    def uniformity(self) -> int | None:
        k = uniformity(self.w)
        if k is not None and uniformity(self.v) == k:
            return k
        return None

    def format(self, tokens: bool | None = None) -> tuple:
        if tokens is None:
            tokens = any(len(a) != 1 for a in self.w + self.v)
        return format_word(self.w, tokens), format_word(self.v, tokens)

    def __iter__(self):
        return iter((self.w, self.v))

    def __len__(self):
        return 2

    def __str__(self):
        w, v = self.format()
        return f"({w or 'ε'}, {v or 'ε'})"


def as_pair(p) -> WordPair:
    if isinstance(p, WordPair):
        return p
    w, v = p
    return WordPair(as_word(w), as_word(v))


def counts_balanced(w: Sequence, v: Sequence) -> Letter | None:
    """First letter (canonical order) whose count differs between ``w`` and ``v``."""
    cw, cv = letter_counts(w), letter_counts(v)
    for a in sort_letters(set(cw) | set(cv)):
        if cw[a] != cv[a]:
            return a
    return None
