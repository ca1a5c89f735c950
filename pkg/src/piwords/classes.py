"""Word pairs for special graph classes.

Permutation graphs are exactly the graphs with a 1-uniform representation;
near-permutation graphs, cycles and 12-representable graphs get 2-uniform
ones; cographs are assembled from single letters by union and complement.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .construction import delete_independent_edges
from .graphs import (
    Graph,
    UnsupportedSize,
    as_permutation,
    complement,
    graph_union,
    ladder_inner_rungs,
    ladder_plus_graph,
    permutation_graph,
)
from .operations import union_pairs
from .representation import decode
from .words import WordPair, as_pair, as_word, canonical_word, is_k_uniform, projection, reverse

MAX_RECOGNITION_VERTICES = 8


# -- permutation graphs ---------------------------------------------------------


def permutation_words(sigma) -> WordPair:
    """(1···n, reverse of σ's one-line notation)."""
    sigma = as_permutation(sigma)
    n = len(sigma)
    return WordPair(tuple(str(i) for i in range(1, n + 1)), tuple(str(s) for s in reversed(sigma)))


def forced_partner(g: Graph, w) -> tuple | None:
    """The 1-uniform v with decode(w, v) == g, or None if there is none.

    With w fixed, every vertex pair's order in v is determined (same as in w
    for an edge, reversed otherwise), so v exists iff that tournament is
    transitive, and it is then unique.
    """
    w = as_word(w)
    if len(set(w)) != len(w) or set(w) != g.vertices:
        raise ValueError("w must list every vertex exactly once")
    ahead = {a: 0 for a in w}  # how many letters a precedes in v
    for i, j in itertools.combinations(range(len(w)), 2):
        a, b = w[i], w[j]
        ahead[a if g.has_edge(a, b) else b] += 1
    if sorted(ahead.values()) != list(range(len(w))):
        return None
    return tuple(sorted(w, key=lambda a: -ahead[a]))


def permutation_model_small(g: Graph) -> WordPair | None:
    """A 1-uniform pair decoding to ``g``, or None if ``g`` is no permutation graph.

    Backtracks over w in lexicographic order and cuts every prefix whose
    forced order in v is already cyclic.
    """
    vs = g.sorted_vertices()
    if len(vs) > MAX_RECOGNITION_VERTICES:
        raise UnsupportedSize(
            f"permutation recognition supports at most {MAX_RECOGNITION_VERTICES} vertices, got {len(vs)}"
        )
    order: list = []

    def rec(ahead: list) -> bool:
        if len(order) == len(vs):
            return True
        for a in vs:
            if a in order:
                continue
            nxt = list(ahead) + [0]
            for idx, b in enumerate(order):
                if g.has_edge(b, a):
                    nxt[idx] += 1
                else:
                    nxt[-1] += 1
            # a prefix tournament is transitive iff its scores are distinct
            if len(set(nxt)) != len(nxt):
                continue
            order.append(a)
            if rec(nxt):
                return True
            order.pop()
        return False

    if not rec([]):
        return None
    return WordPair(tuple(order), forced_partner(g, order))


def recognize_permutation_graph_small(g: Graph) -> tuple | None:
    """σ with permutation_graph(σ) isomorphic to ``g``, or None.

    The isomorphism is the numbering of V(g) by position in the w of
    :func:`permutation_model_small`.
    """
    model = permutation_model_small(g)
    if model is None:
        return None
    number = {a: i for i, a in enumerate(model.w, start=1)}
    return tuple(number[a] for a in reversed(model.v))


def complement_pair(pair) -> WordPair:
    """(w, reverse(v)); represents the complement for 1-uniform pairs."""
    pair = as_pair(pair)
    if not (is_k_uniform(pair.w, 1) and is_k_uniform(pair.v, 1)) or set(pair.w) != set(pair.v):
        raise ValueError("complement_pair needs two 1-uniform words over one alphabet")
    return WordPair(pair.w, reverse(pair.v))


def near_permutation_words(sigma, a, b) -> WordPair:
    """2-uniform pair for permutation_graph(σ) minus its edge {a, b}."""
    a, b = str(a), str(b)
    g = permutation_graph(sigma)
    if not g.has_edge(a, b):
        raise ValueError(f"{a}-{b} is not an edge of the permutation graph")
    w, v = permutation_words(sigma)
    a, b = sorted((a, b), key=int)
    u = canonical_word(g.vertices - {a, b})
    return WordPair(w + u + (a, b), v + u + (b, a))


# -- cycles -------------------------------------------------------------------


def ladder_order(n: int) -> tuple:
    """A w for which ``ladder_plus_graph(n)`` has a 1-uniform partner.

    1 followed by the blocks (4j+4, 4j+2, 4j+5, 4j+3) cut to [n]; when
    n = 3 mod 4 the last two letters trade places.
    """
    w = [1]
    j = 0
    while 4 * j + 2 <= n:
        w += [x for x in (4 * j + 4, 4 * j + 2, 4 * j + 5, 4 * j + 3) if x <= n]
        j += 1
    if n % 4 == 3:
        w[-2], w[-1] = w[-1], w[-2]
    return tuple(str(x) for x in w)


def ladder_words(n: int) -> WordPair:
    ladder = ladder_plus_graph(n)
    w = ladder_order(n)
    v = forced_partner(ladder, w)
    if v is None or decode((w, v)) != ladder:
        raise RuntimeError(f"no 1-uniform ladder model for n={n}")
    return WordPair(w, v)


def cycle_words(n: int) -> WordPair:
    """2-uniform pair representing an n-cycle on [n], n >= 5.

    A 1-uniform pair for the ladder scaffold followed by one block that
    deletes its inner rungs.
    """
    if n < 5:
        raise ValueError(f"cycle_words needs n >= 5, got {n}; smaller cycles are permutation graphs")
    return delete_independent_edges(ladder_words(n), ladder_inner_rungs(n))


# -- 12-representable graphs ----------------------------------------------------


def _int_letters(w) -> list:
    w = as_word(w)
    try:
        return [int(a) for a in w]
    except ValueError as exc:
        raise ValueError(f"12-matches need integer letters: {exc}") from None


def has_12_match(w) -> bool:
    """True iff some letter is directly followed by a larger one."""
    xs = _int_letters(w)
    return any(x < y for x, y in zip(xs, xs[1:]))


def _check_twelve_word(v) -> int:
    xs = _int_letters(v)
    n = len(set(xs))
    if set(xs) != set(range(1, n + 1)):
        raise ValueError("a 12-representing word must use exactly the letters 1..n")
    if not is_k_uniform(as_word(v), 2):
        raise ValueError("a 12-representing word must be 2-uniform")
    return n


def twelve_decode(v) -> Graph:
    """Graph 12-represented by a 2-uniform word over [n].

    {i, j} with i < j is an edge iff the projection is ``jjii``, which for
    2-uniform words is the same as having no 12-match.
    """
    v = as_word(v)
    n = _check_twelve_word(v)
    edges = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        si, sj = str(i), str(j)
        if projection(v, si, sj) == (sj, sj, si, si):
            edges.append((si, sj))
    return Graph.from_edges(edges, map(str, range(1, n + 1)))


def twelve_to_pair(v) -> WordPair:
    """(n n (n-1)(n-1) ··· 1 1, v)."""
    v = as_word(v)
    n = _check_twelve_word(v)
    w = tuple(str(i) for i in range(n, 0, -1) for _ in range(2))
    return WordPair(w, v)


# -- cographs -----------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    letter: str

    def __post_init__(self):
        object.__setattr__(self, "letter", str(self.letter))


@dataclass(frozen=True)
class CoUnion:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("a union node needs at least two children")


@dataclass(frozen=True)
class CoComplement:
    child: object


Cotree = (Leaf, CoUnion, CoComplement)


def cotree_leaves(t) -> list:
    if isinstance(t, Leaf):
        return [t.letter]
    if isinstance(t, CoUnion):
        return [a for c in t.children for a in cotree_leaves(c)]
    return cotree_leaves(t.child)


def _check_leaves(t):
    leaves = cotree_leaves(t)
    if len(set(leaves)) != len(leaves):
        dup = next(a for a in leaves if leaves.count(a) > 1)
        raise ValueError(f"leaf letter {dup!r} occurs more than once")


def cotree_graph(t) -> Graph:
    """The cograph a cotree denotes, evaluated with graph operations."""
    _check_leaves(t)
    return _cotree_graph(t)


def _cotree_graph(t) -> Graph:
    if isinstance(t, Leaf):
        return Graph(frozenset((t.letter,)), frozenset())
    if isinstance(t, CoUnion):
        g = _cotree_graph(t.children[0])
        for c in t.children[1:]:
            g = graph_union(g, _cotree_graph(c))
        return g
    return complement(_cotree_graph(t.child))


def cograph_words(t) -> WordPair:
    """1-uniform pair for the cograph of ``t``.

    leaf a -> (a, a); union folds (w1 w2, v2 v1) left to right;
    complement -> (w, reverse(v)).
    """
    _check_leaves(t)
    return _cograph_words(t)


def _cograph_words(t) -> WordPair:
    if isinstance(t, Leaf):
        return WordPair((t.letter,), (t.letter,))
    if isinstance(t, CoUnion):
        p = _cograph_words(t.children[0])
        for c in t.children[1:]:
            p = union_pairs(p, _cograph_words(c))
        return p
    p = _cograph_words(t.child)
    return WordPair(p.w, reverse(p.v))


def parse_cotree(text: str):
    """Read ``(co (u a b (co (u c d))))``; bare tokens are leaves."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise ValueError("empty cotree")
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of cotree")
        tok = tokens[pos]
        pos += 1
        if tok == ")":
            raise ValueError("unexpected ')'")
        if tok != "(":
            return Leaf(tok)
        if pos >= len(tokens):
            raise ValueError("unexpected end of cotree")
        head = tokens[pos]
        pos += 1
        kids = []
        while pos < len(tokens) and tokens[pos] != ")":
            kids.append(node())
        if pos >= len(tokens):
            raise ValueError("missing ')'")
        pos += 1
        if head == "u":
            return CoUnion(tuple(kids))
        if head == "co":
            if len(kids) != 1:
                raise ValueError("'co' takes exactly one child")
            return CoComplement(kids[0])
        raise ValueError(f"unknown cotree operator {head!r}")

    t = node()
    if pos != len(tokens):
        raise ValueError("trailing input after cotree")
    _check_leaves(t)
    return t


def format_cotree(t) -> str:
    if isinstance(t, Leaf):
        return t.letter
    if isinstance(t, CoUnion):
        return "(u " + " ".join(format_cotree(c) for c in t.children) + ")"
    return f"(co {format_cotree(t.child)})"


def cotree_from_graph(g: Graph):
    """Cotree for ``g`` if it is a cograph, else None.

    Splits into components, or into co-components when connected; a graph
    that is connected and co-connected with more than one vertex is not a
    cograph.
    """
    if not g.vertices:
        raise ValueError("graph has no vertices")
    if len(g.vertices) == 1:
        return Leaf(next(iter(g.vertices)))
    comps = g.components()
    if len(comps) > 1:
        kids = [cotree_from_graph(g.induced(c)) for c in comps]
        return None if any(k is None for k in kids) else CoUnion(tuple(kids))
    co = complement(g)
    comps = co.components()
    if len(comps) == 1:
        return None
    kids = [cotree_from_graph(co.induced(c)) for c in comps]
    if any(k is None for k in kids):
        return None
    return CoComplement(CoUnion(tuple(kids)))


def random_cotree(letters, rng: random.Random | None = None):
    """Random cotree over the given distinct letters."""
    rng = rng or random.Random()
    letters = [str(a) for a in letters]
    if not letters:
        raise ValueError("need at least one leaf")

    def build(ls):
        if len(ls) == 1:
            t = Leaf(ls[0])
        else:
            k = rng.randint(2, min(4, len(ls)))
            cuts = sorted(rng.sample(range(1, len(ls)), k - 1))
            parts = [ls[i:j] for i, j in zip([0] + cuts, cuts + [len(ls)])]
            t = CoUnion(tuple(build(p) for p in parts))
        return CoComplement(t) if rng.random() < 0.4 else t

    shuffled = letters[:]
    rng.shuffle(shuffled)
    return build(shuffled)


def has_induced_p4(g: Graph) -> bool:
    """Brute-force scan of all 4-vertex subsets for an induced path."""
    for quad in itertools.combinations(g.sorted_vertices(), 4):
        sub = g.induced(quad)
        if len(sub.edges) == 3 and sub.is_connected() and sorted(sub.degree(a) for a in quad) == [1, 1, 2, 2]:
            return True
    return False
