"""Labeled simple graphs, generators and set-level graph operations.

These are the ground truth against which the word-level constructions are
checked, so everything here works directly on vertex and edge sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import Letter, letter_key, sort_letters

MAX_ISOMORPHISM_VERTICES = 10


class UnsupportedSize(ValueError):
    """Raised by brute-force routines when the input exceeds their size bound."""


def edge(a, b) -> frozenset:
    a, b = str(a), str(b)
    if a == b:
        raise ValueError(f"self-loop on {a!r}")
    return frozenset((a, b))


def edge_key(e: frozenset):
    a, b = sorted_endpoints(e)
    return (letter_key(a), letter_key(b))


def sorted_endpoints(e: frozenset) -> tuple:
    return tuple(sort_letters(e))


def format_edge(e: frozenset, sep: str = "-") -> str:
    return sep.join(sorted_endpoints(e))


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        vertices = frozenset(map(str, self.vertices))
        edges = frozenset(edge(*e) for e in self.edges)
        for e in edges:
            if not e <= vertices:
                missing = sort_letters(e - vertices)
                raise ValueError(f"edge {format_edge(e)} uses unknown vertex {missing[0]!r}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = set(map(str, vertices))
        for e in edges:
            vs.update(map(str, e))
        return cls(frozenset(vs), frozenset(edge(*e) for e in edges))

    def __len__(self):
        return len(self.vertices)

    def has_edge(self, a, b) -> bool:
        return frozenset((str(a), str(b))) in self.edges

    def neighbors(self, a) -> frozenset:
        a = str(a)
        return frozenset(b for e in self.edges if a in e for b in e if b != a)

    def degree(self, a) -> int:
        a = str(a)
        return sum(1 for e in self.edges if a in e)

    def max_degree(self) -> int:
        return max((self.degree(a) for a in self.vertices), default=0)

    def sorted_vertices(self) -> list:
        return sort_letters(self.vertices)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=edge_key)

    def non_edges(self) -> list:
        """Edges of the complement, in canonical order."""
        return [
            frozenset(p)
            for p in itertools.combinations(self.sorted_vertices(), 2)
            if frozenset(p) not in self.edges
        ]

    def induced(self, subset: Iterable) -> "Graph":
        s = frozenset(map(str, subset))
        return Graph(s & self.vertices, frozenset(e for e in self.edges if e <= s))

    def relabel(self, mapping: dict) -> "Graph":
        m = {str(k): str(v) for k, v in mapping.items()}
        return Graph(
            frozenset(m[a] for a in self.vertices),
            frozenset(frozenset(m[a] for a in e) for e in self.edges),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return len(next(iter(self.components()))) == len(self.vertices)

    def components(self) -> list:
        """Connected components as vertex sets, ordered by smallest vertex."""
        adj = {a: set() for a in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            comp, stack = set(), [start]
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def __str__(self):
        edges = ", ".join(format_edge(e) for e in self.sorted_edges())
        return f"Graph({' '.join(self.sorted_vertices())}; {edges})"


def empty_graph(vertices: Iterable) -> Graph:
    return Graph(frozenset(map(str, vertices)), frozenset())


def complete_graph(vertices: Iterable) -> Graph:
    vs = frozenset(map(str, vertices))
    return Graph(vs, frozenset(frozenset(p) for p in itertools.combinations(vs, 2)))


def complement(g: Graph) -> Graph:
    return Graph(g.vertices, frozenset(g.non_edges()))


def graph_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.vertices | h.vertices, g.edges | h.edges)


def graph_join(g: Graph, h: Graph) -> Graph:
    common = g.vertices & h.vertices
    if common:
        raise ValueError(f"join needs disjoint vertex sets, both contain {sort_letters(common)[0]!r}")
    cross = frozenset(frozenset((a, b)) for a in g.vertices for b in h.vertices)
    return Graph(g.vertices | h.vertices, g.edges | h.edges | cross)


def cycle_graph(n: int, labels: Sequence | None = None) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    labels = [str(a) for a in (labels if labels is not None else range(1, n + 1))]
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError("cycle labels must be n distinct letters")
    return Graph.from_edges((labels[i], labels[(i + 1) % n]) for i in range(n))


def path_graph(labels: Sequence) -> Graph:
    labels = [str(a) for a in labels]
    return Graph.from_edges(zip(labels, labels[1:]), labels)


def is_cycle(g: Graph) -> bool:
    """True iff ``g`` is a single cycle through all of its (>= 3) vertices."""
    n = len(g.vertices)
    return (
        n >= 3
        and len(g.edges) == n
        and all(g.degree(a) == 2 for a in g.vertices)
        and g.is_connected()
    )


# -- permutations ----------------------------------------------------------


def as_permutation(sigma) -> tuple:
    """Validate a permutation of [n] in one-line notation.

    Strings are read digit by digit (``"456123"``) unless they contain
    whitespace.
    """
    if isinstance(sigma, str):
        parts = sigma.split() if any(c.isspace() for c in sigma.strip()) else list(sigma.strip())
        sigma = parts
    try:
        image = tuple(int(x) for x in sigma)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"not a permutation: {sigma!r}") from exc
    if sorted(image) != list(range(1, len(image) + 1)):
        raise ValueError(f"not a permutation of [{len(image)}]: {image}")
    return image


def inverse_permutation(sigma) -> tuple:
    sigma = as_permutation(sigma)
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def inversion_count(sigma) -> int:
    sigma = as_permutation(sigma)
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def permutation_graph(sigma) -> Graph:
    """Vertices [n]; {i, j} is an edge iff (i - j)(σ⁻¹(i) - σ⁻¹(j)) < 0."""
    sigma = as_permutation(sigma)
    inv = inverse_permutation(sigma)
    n = len(sigma)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if (i - j) * (inv[i - 1] - inv[j - 1]) < 0
    ]
    return Graph.from_edges(edges, range(1, n + 1))


# -- the ladder scaffold used for cycles -----------------------------------


def ladder_plus_graph(n: int) -> Graph:
    """Ladder on [n] with rungs {2i-1, 2i}, rails, and {n-2, n}, {n-1, n}.

    For odd n the last two edges attach an apex vertex n on top of the
    ladder; for even n they coincide with a rail and the top rung.
    """
    if n < 5:
        raise ValueError(f"ladder_plus_graph needs n >= 5, got {n}")
    half = n // 2
    edges = [(2 * i - 1, 2 * i) for i in range(1, half + 1)]
    for i in range(1, half):
        edges += [(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)]
    edges += [(n - 2, n), (n - 1, n)]
    return Graph.from_edges(edges, range(1, n + 1))


def ladder_inner_rungs(n: int) -> frozenset:
    """The rungs whose deletion turns ``ladder_plus_graph(n)`` into an n-cycle.

    Every rung except the first; for even n the top rung is kept as well,
    since it is the edge {n-1, n} that closes the cycle.
    """
    if n < 5:
        raise ValueError(f"ladder_inner_rungs needs n >= 5, got {n}")
    half = n // 2
    last = half - 1 if n % 2 == 0 else half
    return frozenset(edge(2 * i - 1, 2 * i) for i in range(2, last + 1))


# -- isomorphism ------------------------------------------------------------


def degree_sequence(g: Graph) -> list:
    return sorted(g.degree(a) for a in g.vertices)


def find_isomorphism(g: Graph, h: Graph) -> dict | None:
    """Edge-preserving bijection V(g) -> V(h) by backtracking, or None."""
    if len(g.vertices) > MAX_ISOMORPHISM_VERTICES:
        raise UnsupportedSize(
            f"isomorphism test supports at most {MAX_ISOMORPHISM_VERTICES} vertices, got {len(g.vertices)}"
        )
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    if degree_sequence(g) != degree_sequence(h):
        return None
    gv = sorted(g.vertices, key=lambda a: (-g.degree(a), letter_key(a)))
    hv = h.sorted_vertices()
    hdeg = {b: h.degree(b) for b in hv}
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(gv):
            return True
        a = gv[i]
        for b in hv:
            if b in used or hdeg[b] != g.degree(a):
                continue
            if all(g.has_edge(a, x) == h.has_edge(b, mapping[x]) for x in gv[:i]):
                mapping[a] = b
                used.add(b)
                if extend(i + 1):
                    return True
                del mapping[a]
                used.discard(b)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- edge colouring ----------------------------------------------------------


def is_valid_edge_coloring(g: Graph, coloring: dict) -> bool:
    if set(coloring) != set(g.edges):
        return False
    for e, f in itertools.combinations(g.edges, 2):
        if e & f and coloring[e] == coloring[f]:
            return False
    return True


def greedy_edge_coloring(g: Graph) -> dict:
    """Proper edge colouring with at most Δ+1 colours (Misra & Gries).

    Colours are 1, 2, ..., Δ+1. Edges are coloured in canonical order and
    every choice takes the smallest admissible colour, so the result only
    depends on the labeled input.
    """
    delta = g.max_degree()
    palette = range(1, delta + 2)
    color: dict = {}
    # at[x][c] = neighbour of x across the edge coloured c
    at: dict = {x: {} for x in g.vertices}
    nbrs = {x: sort_letters(g.neighbors(x)) for x in g.vertices}

    def free(x):
        return next(c for c in palette if c not in at[x])

    def is_free(x, c):
        return c not in at[x]

    def set_color(x, y, c):
        e = frozenset((x, y))
        old = color.get(e)
        if old is not None:
            del at[x][old]
            del at[y][old]
        color[e] = c
        at[x][c] = y
        at[y][c] = x

    def uncolor(x, y):
        e = frozenset((x, y))
        old = color.pop(e)
        del at[x][old]
        del at[y][old]

    for e in g.sorted_edges():
        u, v = sorted_endpoints(e)
        common = next((c for c in palette if c not in at[u] and c not in at[v]), None)
        if common is not None:
            set_color(u, v, common)
            continue
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            for x in nbrs[u]:
                if x in in_fan:
                    continue
                c = color.get(frozenset((u, x)))
                if c is not None and is_free(fan[-1], c):
                    fan.append(x)
                    in_fan.add(x)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        # invert the cd-path starting at u
        if c != d:
            path = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y, want))
                x, want = y, (c if want == d else d)
            for x, y, _ in path:
                uncolor(x, y)
            for x, y, col in path:
                set_color(x, y, c if col == d else d)
        # shortest prefix of the fan ending in a vertex where d is free
        k = next(i for i, x in enumerate(fan) if is_free(x, d) and _is_fan(fan[: i + 1], u, color, at))
        # rotate the fan prefix
        for i in range(k):
            nxt = color[frozenset((u, fan[i + 1]))]
            uncolor(u, fan[i + 1])
            set_color(u, fan[i], nxt)
        set_color(u, fan[k], d)
    return color


def _is_fan(fan, u, color, at) -> bool:
    # fan[0] may be uncoloured; each later edge's colour is free at its predecessor
    for prev, x in zip(fan, fan[1:]):
        c = color.get(frozenset((u, x)))
        if c is None or c in at[prev]:
            return False
    return True


def exact_edge_coloring(g: Graph, max_vertices: int = 8) -> dict:
    """Edge colouring with the chromatic index, by exhaustive search.

    Tries Δ colours by backtracking and falls back to the Δ+1 colouring.
    """
    if len(g.vertices) > max_vertices:
        raise UnsupportedSize(f"exact edge colouring supports at most {max_vertices} vertices")
    delta = g.max_degree()
    edges = g.sorted_edges()
    if not edges:
        return {}
    color: dict = {}
    used = {x: set() for x in g.vertices}

    def place(i: int) -> bool:
        if i == len(edges):
            return True
        a, b = tuple(edges[i])
        # symmetry: a fresh colour only needs to be tried once
        top = max(color.values(), default=0)
        for c in range(1, min(delta, top + 1) + 1):
            if c in used[a] or c in used[b]:
                continue
            color[edges[i]] = c
            used[a].add(c)
            used[b].add(c)
            if place(i + 1):
                return True
            del color[edges[i]]
            used[a].discard(c)
            used[b].discard(c)
        return False

    if place(0):
        return dict(color)
    return greedy_edge_coloring(g)


# -- text formats ------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Read the edge-list format: vertex line, then one ``a b`` per edge."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("graph text has no vertex line")
    vertices = lines[0].split()
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertex on the vertex line")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line needs two tokens: {ln!r}")
        edges.append(tuple(parts))
    return Graph(frozenset(vertices), frozenset(edge(*e) for e in edges))


def format_graph(g: Graph) -> str:
    lines = [" ".join(g.sorted_vertices())]
    lines += [" ".join(sorted_endpoints(e)) for e in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "") -> str:
    def q(a):
        return a if a.isalnum() else '"' + a.replace('"', '\\"') + '"'

    head = f"graph {name} {{" if name else "graph {"
    body = []
    isolated = [a for a in g.sorted_vertices() if g.degree(a) == 0]
    body += [f"  {q(a)};" for a in isolated]
    body += [f"  {q(a)} -- {q(b)};" for a, b in map(sorted_endpoints, g.sorted_edges())]
    return "\n".join([head, *body, "}"]) + "\n"


def all_labeled_graphs(vertices: Sequence):
    """Every simple graph on the given vertex labels (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations([str(a) for a in vertices], 2))
    for mask in range(1 << len(pairs)):
        yield Graph(
            frozenset(map(str, vertices)),
            frozenset(frozenset(p) for i, p in enumerate(pairs) if mask >> i & 1),
        )
