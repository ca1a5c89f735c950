"""Decoding graphs from word pairs, checking claimed representations, and an
exhaustive search for k-uniform representations of small graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Graph, format_graph, parse_graph
from .words import WordPair, as_pair, erase, format_word, parse_word, projection, sort_letters


def _positions(w) -> dict:
    pos: dict = {}
    for i, a in enumerate(w):
        pos.setdefault(a, []).append(i)
    return pos


def _same_projection(pw_a, pw_b, pv_a, pv_b) -> bool:
    # projections agree iff the letter counts agree and a and b interleave the
    # same way, i.e. each a is preceded by the same number of b's in both words
    if len(pw_a) != len(pv_a) or len(pw_b) != len(pv_b):
        return False
    return _interleaving(pw_a, pw_b) == _interleaving(pv_a, pv_b)


def _interleaving(pa, pb) -> tuple:
    out, j = [], 0
    for p in pa:
        while j < len(pb) and pb[j] < p:
            j += 1
        out.append(j)
    return tuple(out)


def decode(pair) -> Graph:
    """The graph on alph(w) with {a, b} an edge iff both projections agree."""
    pair = as_pair(pair)
    mismatch = pair.alphabet_mismatch()
    if mismatch:
        only_w = sort_letters(set(pair.w) - set(pair.v))
        only_v = sort_letters(set(pair.v) - set(pair.w))
        raise ValueError(
            "words have different alphabets: "
            + "; ".join(
                s for s in (
                    f"only in w: {' '.join(only_w)}" if only_w else "",
                    f"only in v: {' '.join(only_v)}" if only_v else "",
                ) if s
            )
        )
    pw, pv = _positions(pair.w), _positions(pair.v)
    letters = sort_letters(pw)
    edges = [
        frozenset((a, b))
        for a, b in itertools.combinations(letters, 2)
        if _same_projection(pw[a], pw[b], pv[a], pv[b])
    ]
    return Graph(frozenset(letters), frozenset(edges))


@dataclass(frozen=True)
class Mismatch:
    """A vertex pair on which a word pair and a graph disagree."""

    a: str
    b: str
    kind: str  # "missing": edge of the graph not represented; "extra": the converse
    w_projection: tuple
    v_projection: tuple

    def __str__(self):
        wp = format_word(self.w_projection) or "ε"
        vp = format_word(self.v_projection) or "ε"
        return f"{self.kind} edge {self.a}-{self.b}: {wp} vs {vp}"


@dataclass(frozen=True)
class Verification:
    ok: bool
    mismatches: tuple = ()
    structural: str = ""

    @property
    def witness(self) -> Mismatch | None:
        return self.mismatches[0] if self.mismatches else None

    def __bool__(self):
        return self.ok


def verify(g: Graph, pair) -> Verification:
    """Check ``decode(pair) == g``; on failure list every disagreeing pair.

    The first mismatch in canonical edge order is the reported witness.
    Differing alphabets are a structural mismatch rather than an error.
    """
    pair = as_pair(pair)
    if set(pair.w) != set(pair.v):
        return Verification(False, structural="w and v have different alphabets")
    if set(pair.w) != g.vertices:
        return Verification(False, structural="alphabet of the words differs from the vertex set")
    decoded = decode(pair)
    bad = []
    for a, b in itertools.combinations(g.sorted_vertices(), 2):
        e = frozenset((a, b))
        want, got = e in g.edges, e in decoded.edges
        if want != got:
            bad.append(
                Mismatch(a, b, "missing" if want else "extra", projection(pair.w, a, b), projection(pair.v, a, b))
            )
    return Verification(not bad, tuple(bad))


def restrict(pair, subset: Iterable) -> WordPair:
    """Erase all letters outside ``subset`` from both words."""
    pair = as_pair(pair)
    keep = set(map(str, subset))
    return WordPair(erase(pair.w, keep), erase(pair.v, keep))


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class RepresentationWitness:
    pair: WordPair
    graph: Graph
    k: int | None = None

    def __post_init__(self):
        if decode(self.pair) != self.graph:
            raise ValueError("witness pair does not decode to the witness graph")
        if self.k is not None and self.pair.uniformity() != self.k:
            raise ValueError(f"witness words are not {self.k}-uniform")

    def to_text(self) -> str:
        w, v = self.pair.format()
        lines = [f"w: {w}", f"v: {v}", f"k: {self.k if self.k is not None else '-'}", "graph:"]
        return "\n".join(lines) + "\n" + format_graph(self.graph)


def parse_witness(text: str) -> RepresentationWitness:
    head, _, graph_text = text.partition("graph:\n")
    fields = {}
    for ln in head.splitlines():
        if ":" in ln:
            key, _, val = ln.partition(":")
            fields[key.strip()] = val.strip()
    k = None if fields.get("k", "-") == "-" else int(fields["k"])
    pair = WordPair(parse_word(fields["w"]), parse_word(fields["v"]))
    return RepresentationWitness(pair, parse_graph(graph_text), k)


# -- exhaustive search ---------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a bounded search.

    ``complete`` is True when the whole space was covered, so an absent
    witness is then a proof of non-membership. ``examined`` counts the
    candidate pairs that reached a full decode check.
    """

    witness: RepresentationWitness | None
    complete: bool
    examined: int
    k: int | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None

    def report(self) -> str:
        if self.witness is not None:
            return f"k={self.witness.k}: witness found after {self.examined} candidate pairs"
        if self.complete:
            return f"no witness, search complete ({self.examined} candidate pairs)"
        return f"no witness within budget, search incomplete ({self.examined} candidate pairs)"


class _BudgetExhausted(Exception):
    pass


def k_uniform_words(letters: Iterable, k: int) -> Iterator[tuple]:
    """All k-uniform words over ``letters`` in lexicographic order."""
    letters = sort_letters(set(map(str, letters)))
    counts = [k] * len(letters)
    total = k * len(letters)
    word: list = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for i, a in enumerate(letters):
            if counts[i]:
                counts[i] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()


def brute_force_find_pair(g: Graph, k: int, budget: int | None = None) -> SearchResult:
    """Search all pairs of k-uniform words over V(g) for one decoding to ``g``.

    Pairs are visited in lexicographic order (by w, then v) and the first
    witness in that order is returned. Partial v's are abandoned as soon as
    an edge's projection diverges, which never discards a witness.
    """
    if k < 1:
        raise ValueError("k must be positive")
    letters = g.sorted_vertices()
    n = len(letters)
    if n == 0:
        return SearchResult(RepresentationWitness(WordPair((), ()), g, None), True, 1, k)
    index = {a: i for i, a in enumerate(letters)}
    adj = [[] for _ in range(n)]
    non_edges = []
    for i, j in itertools.combinations(range(n), 2):
        if g.has_edge(letters[i], letters[j]):
            adj[i].append(j)
            adj[j].append(i)
        else:
            non_edges.append((i, j))
    total = n * k
    examined = 0

    for w_letters in k_uniform_words(letters, k):
        w = [index[a] for a in w_letters]
        # target[i][j]: projection of w onto {i, j} as a list of letter indices
        target = {}
        for i in range(n):
            for j in adj[i]:
                target[i, j] = [x for x in w if x == i or x == j]
        w_non = {(i, j): [x for x in w if x == i or x == j] for i, j in non_edges}
        progress = {key: 0 for key in target}
        counts = [k] * n
        v: list = []

        def rec():
            nonlocal examined
            if len(v) == total:
                for (i, j), proj in w_non.items():
                    if [x for x in v if x == i or x == j] == proj:
                        break
                else:
                    return True
                examined += 1
                if budget is not None and examined >= budget:
                    raise _BudgetExhausted
                return False
            for x in range(n):
                if not counts[x]:
                    continue
                ok = True
                for j in adj[x]:
                    if target[x, j][progress[x, j]] != x:
                        ok = False
                        break
                if not ok:
                    continue
                counts[x] -= 1
                v.append(x)
                for j in adj[x]:
                    progress[x, j] += 1
                    progress[j, x] += 1
                if rec():
                    return True
                for j in adj[x]:
                    progress[x, j] -= 1
                    progress[j, x] -= 1
                v.pop()
                counts[x] += 1
            return False

        try:
            hit = rec()
        except _BudgetExhausted:
            return SearchResult(None, False, examined, k)
        if hit:
            examined += 1
            pair = WordPair(w_letters, tuple(letters[x] for x in v))
            return SearchResult(RepresentationWitness(pair, g, k), True, examined, k)
    return SearchResult(None, True, examined, k)


def min_uniformity(g: Graph, k_max: int, budget: int | None = None) -> SearchResult:
    """Smallest k <= k_max with a k-uniform representation of ``g``.

    Levels are searched upwards; since every k-uniform representation
    extends to a (k+1)-uniform one, the first hit is the minimum. The budget
    applies per level; an exhausted level stops the scan with
    ``complete=False``.
    """
    examined = 0
    for k in range(1, k_max + 1):
        res = brute_force_find_pair(g, k, budget)
        examined += res.examined
        if res.found or not res.complete:
            return SearchResult(res.witness, res.complete, examined, k if res.found else None)
    return SearchResult(None, True, examined, None)
