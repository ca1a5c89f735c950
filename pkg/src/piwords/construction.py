"""Building word pairs that represent a given graph.

Every construction starts from the empty pair over the vertex alphabet
(which represents the complete graph) and deletes the unwanted edges by
appending 1-uniform blocks: one edge per block in :func:`construct_naive`,
one matching per block in :func:`construct_colored`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    complement,
    edge,
    edge_key,
    exact_edge_coloring,
    format_edge,
    greedy_edge_coloring,
    sorted_endpoints,
)
from .words import (
    WordPair,
    as_pair,
    as_word,
    canonical_word,
    counts_balanced,
    letter_counts,
    projection,
    sort_letters,
)


def _alphabet_of(pair: WordPair, alphabet) -> frozenset:
    if alphabet is None:
        return frozenset(pair.w)
    alphabet = frozenset(map(str, alphabet))
    if pair.w and frozenset(pair.w) != alphabet:
        raise ValueError("given alphabet differs from the alphabet of w")
    return alphabet


def remove_edge(pair, a, b, alphabet: Iterable | None = None) -> WordPair:
    """Append ``x·ab`` to w and ``x·ba`` to v, x the other letters in order.

    Deletes {a, b} and leaves every other adjacency alone. ``alphabet``
    names the vertex set when starting from the empty pair.
    """
    pair = as_pair(pair)
    a, b = str(a), str(b)
    if a == b:
        raise ValueError(f"cannot remove a self-loop on {a!r}")
    letters = _alphabet_of(pair, alphabet)
    for x in (a, b):
        if x not in letters:
            raise ValueError(f"letter {x!r} is not in the alphabet")
    a, b = sort_letters((a, b))
    x = canonical_word(letters - {a, b})
    return WordPair(pair.w + x + (a, b), pair.v + x + (b, a))


def construct_naive(g: Graph) -> WordPair:
    """One |V|-letter block per non-edge, non-edges in canonical order."""
    if not g.vertices:
        raise ValueError("graph has no vertices")
    non_edges = g.non_edges()
    if not non_edges:
        w = canonical_word(g.vertices)
        return WordPair(w, w)
    pair = WordPair((), ())
    for e in non_edges:
        pair = remove_edge(pair, *sorted_endpoints(e), alphabet=g.vertices)
    return pair


# -- independent edge sets -----------------------------------------------------


@dataclass(frozen=True)
class IndependentEdgeSets:
    """Ordered matchings; ``sets[i]`` holds the edges of colour i + 1."""

    sets: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "sets", tuple(frozenset(edge(*sorted_endpoints(frozenset(e))) for e in m) for m in self.sets)
        )

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def edges(self) -> frozenset:
        return frozenset().union(*self.sets)

    def is_valid(self) -> bool:
        return verify_ies(self)

    def to_text(self) -> str:
        lines = [" ".join(format_edge(e) for e in sorted(m, key=edge_key)) for m in self.sets]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "IndependentEdgeSets":
        sets = []
        for ln in text.splitlines():
            if ln.strip().startswith("#"):
                continue
            sets.append([tuple(tok.split("-")) for tok in ln.split()])
        while sets and not sets[-1]:
            sets.pop()
        return cls(tuple(frozenset(frozenset(e) for e in m) for m in sets))


def verify_ies(ies) -> bool:
    """No edge twice overall, and no two edges of one set share a vertex.

    Two passes, duplicates first and then pairwise intersections inside each
    set.
    """
    sets = [list(m) for m in ies]
    seen = set()
    for m in sets:
        for e in m:
            e = frozenset(e)
            if e in seen:
                return False
            seen.add(e)
    for m in sets:
        rest = [frozenset(e) for e in m]
        while rest:
            e = rest.pop()
            for f in rest:
                if e & f:
                    return False
    return True


def coloring_to_sets(coloring: dict, num_colors: int, edges: Iterable | None = None) -> IndependentEdgeSets:
    """Group edges by colour (1..num_colors) in one pass."""
    edges = list(coloring) if edges is None else [frozenset(map(str, e)) for e in edges]
    sets = [set() for _ in range(num_colors)]
    for e in edges:
        c = coloring[e]
        if not 1 <= c <= num_colors:
            raise ValueError(f"colour {c} of edge {format_edge(e)} is outside 1..{num_colors}")
        sets[c - 1].add(e)
    return IndependentEdgeSets(tuple(frozenset(s) for s in sets))


def delete_independent_edges(pair, matching: Iterable, alphabet: Iterable | None = None) -> WordPair:
    """Append ``u·u_w`` / ``u·u_v``: u lists the unmatched letters, u_w the
    matched pairs as ``ab`` and u_v the same pairs as ``ba``."""
    pair = as_pair(pair)
    letters = _alphabet_of(pair, alphabet)
    matching = sorted({frozenset(map(str, e)) for e in matching}, key=edge_key)
    if not verify_ies([matching]):
        raise ValueError("edges to delete are not independent")
    covered = frozenset().union(*matching) if matching else frozenset()
    if not covered <= letters:
        raise ValueError(f"letter {sort_letters(covered - letters)[0]!r} is not in the alphabet")
    u = canonical_word(letters - covered)
    u_w, u_v = (), ()
    for e in matching:
        a, b = sorted_endpoints(e)
        u_w += (a, b)
        u_v += (b, a)
    return WordPair(pair.w + u + u_w, pair.v + u + u_v)


def construct_colored(g: Graph, coloring: dict | None = None, exact: bool = False) -> WordPair:
    """One |V|-letter block per colour class of an edge colouring of the complement.

    Without a ``coloring`` the complement is coloured greedily with at most
    Δ+1 colours, or optimally when ``exact`` is set (small graphs only).
    Empty colour classes contribute no block.
    """
    if not g.vertices:
        raise ValueError("graph has no vertices")
    co = complement(g)
    if not co.edges:
        w = canonical_word(g.vertices)
        return WordPair(w, w)
    if coloring is None:
        coloring = exact_edge_coloring(co) if exact else greedy_edge_coloring(co)
    else:
        coloring = {frozenset(map(str, e)): c for e, c in coloring.items()}
        if set(coloring) != set(co.edges):
            raise ValueError("colouring must cover exactly the non-edges of the graph")
    ies = coloring_to_sets(coloring, max(coloring.values()), co.sorted_edges())
    if not verify_ies(ies):
        raise ValueError("colouring is not proper: a colour class is not a matching")
    pair = WordPair((), ())
    for m in ies:
        if m:
            pair = delete_independent_edges(pair, m, alphabet=g.vertices)
    return pair


# -- rewriting rules ---------------------------------------------------------


def switch_consecutive(pair, position: int) -> WordPair:
    """Swap the letters at 1-based positions ``position`` and ``position+1`` of w.

    Requires the two letters to differ and to be adjacent in the represented
    graph; exactly that edge disappears.
    """
    pair = as_pair(pair)
    w = pair.w
    if not 1 <= position < len(w):
        raise ValueError(f"position {position} has no successor in a word of length {len(w)}")
    a, b = w[position - 1], w[position]
    if a == b:
        raise ValueError(f"letters at positions {position}, {position + 1} are both {a!r}")
    if projection(w, a, b) != projection(pair.v, a, b):
        raise ValueError(f"{a}-{b} is not an edge of the represented graph")
    return WordPair(w[: position - 1] + (b, a) + w[position + 1 :], pair.v)


def _check_factorisation(word, parts, name):
    if sum((as_word(p) for p in parts), ()) != word:
        raise ValueError(f"factors do not concatenate to {name}")


def _check_counts(pairs):
    for (left, right, label) in pairs:
        bad = counts_balanced(left, right)
        if bad is not None:
            raise ValueError(f"letter {bad!r} occurs {letter_counts(left)[bad]} times in {label[0]} "
                             f"but {letter_counts(right)[bad]} times in {label[1]}")


def _split_parts(w_parts: Sequence, v_parts: Sequence):
    alpha1, x, a, alpha2 = (as_word(p) for p in w_parts)
    beta1, y, a2, beta2 = (as_word(p) for p in v_parts)
    if len(a) != 1 or a != a2:
        raise ValueError("the moved factor must be the same single letter in both words")
    return alpha1, x, a, alpha2, beta1, y, beta2


def swap_block_to_front(pair, w_parts: Sequence, v_parts: Sequence) -> WordPair:
    """Move letter a in front of x in w and in front of y in v.

    ``w_parts = (α1, x, a, α2)`` factorises w as α1·x·a·α2 and ``v_parts =
    (β1, y, a, β2)`` factorises v as β1·y·a·β2. Each factor must have the
    same letter counts as its counterpart. The represented graph is
    unchanged.
    """
    pair = as_pair(pair)
    alpha1, x, a, alpha2, beta1, y, beta2 = _split_parts(w_parts, v_parts)
    _check_factorisation(pair.w, (alpha1, x, a, alpha2), "w")
    _check_factorisation(pair.v, (beta1, y, a, beta2), "v")
    _check_counts([(x, y, ("x", "y")), (alpha1, beta1, ("α1", "β1")), (alpha2, beta2, ("α2", "β2"))])
    return WordPair(alpha1 + a + x + alpha2, beta1 + a + y + beta2)


def counter_swap_1uniform(pair, w_parts: Sequence, v_parts: Sequence) -> WordPair:
    """Move letter a across x in w and across y in v, in opposite directions.

    For 1-uniform words with w = α1·x·a·α2 and v = β1·a·y·β2 (factor counts
    as in :func:`swap_block_to_front`), returns (α1·a·x·α2, β1·y·a·β2). The
    represented graph is unchanged.
    """
    pair = as_pair(pair)
    if pair.uniformity() != 1:
        raise ValueError("counter_swap_1uniform needs two 1-uniform words")
    alpha1, x, a, alpha2 = (as_word(p) for p in w_parts)
    beta1, a2, y, beta2 = (as_word(p) for p in v_parts)
    if len(a) != 1 or a != a2:
        raise ValueError("the moved factor must be the same single letter in both words")
    _check_factorisation(pair.w, (alpha1, x, a, alpha2), "w")
    _check_factorisation(pair.v, (beta1, a, y, beta2), "v")
    _check_counts([(x, y, ("x", "y")), (alpha1, beta1, ("α1", "β1")), (alpha2, beta2, ("α2", "β2"))])
    return WordPair(alpha1 + a + x + alpha2, beta1 + y + a + beta2)
