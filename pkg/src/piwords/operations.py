"""Graph operations carried out on representing word pairs."""

from __future__ import annotations

from .words import WordPair, as_pair, counts_balanced, letter_counts, sort_letters


def _check_disjoint(p: WordPair, q: WordPair):
    common = p.alphabet & q.alphabet
    if common:
        raise ValueError(f"alphabets overlap in letter {sort_letters(common)[0]!r}")


def _check_balanced(p: WordPair, name: str):
    a = counts_balanced(p.w, p.v)
    if a is not None:
        raise ValueError(
            f"letter {a!r} occurs {letter_counts(p.w)[a]} times in w but "
            f"{letter_counts(p.v)[a]} times in v of {name}; join needs equal counts"
        )


def join_pairs(p, q) -> WordPair:
    """(ww', vv'): the join of the two represented graphs.

    Each letter must occur equally often in w and v (and in w' and v');
    otherwise cross pairs can lose their edge.
    """
    p, q = as_pair(p), as_pair(q)
    _check_disjoint(p, q)
    _check_balanced(p, "the first pair")
    _check_balanced(q, "the second pair")
    return WordPair(p.w + q.w, p.v + q.v)


def union_pairs(p, q) -> WordPair:
    """(ww', v'v): the disjoint union of the two represented graphs."""
    p, q = as_pair(p), as_pair(q)
    _check_disjoint(p, q)
    return WordPair(p.w + q.w, q.v + p.v)


def add_universal_vertex(p, x) -> WordPair:
    x = str(x)
    p = as_pair(p)
    if x in p.alphabet:
        raise ValueError(f"vertex {x!r} is already present")
    return join_pairs(p, WordPair((x,), (x,)))


def add_isolated_vertex(p, x) -> WordPair:
    x = str(x)
    p = as_pair(p)
    if x in p.alphabet:
        raise ValueError(f"vertex {x!r} is already present")
    return union_pairs(p, WordPair((x,), (x,)))
