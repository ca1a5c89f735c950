import itertools

import hypothesis
from hypothesis import strategies as st

from piwords.graphs import Graph
from piwords.words import projection

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("ci")

LETTERS = "abcdefgh"


def naive_decode(w, v):
    """Definition-level decode: compare the two projections for every pair."""
    w, v = tuple(w), tuple(v)
    letters = sorted(set(w))
    assert set(w) == set(v)
    edges = [
        (a, b) for a, b in itertools.combinations(letters, 2) if projection(w, a, b) == projection(v, a, b)
    ]
    return Graph.from_edges(edges, letters)


@st.composite
def word_pairs(draw, max_letters=5, max_extra=6):
    """Two words over one alphabet, with arbitrary letter multiplicities."""
    n = draw(st.integers(1, max_letters))
    letters = list(LETTERS[:n])
    extra_w = draw(st.lists(st.sampled_from(letters), max_size=max_extra))
    extra_v = draw(st.lists(st.sampled_from(letters), max_size=max_extra))
    w = draw(st.permutations(letters + extra_w))
    v = draw(st.permutations(letters + extra_v))
    return tuple(w), tuple(v)


@st.composite
def uniform_pairs(draw, k=None, max_letters=5):
    n = draw(st.integers(1, max_letters))
    k = k if k is not None else draw(st.integers(1, 3))
    base = list(LETTERS[:n]) * k
    return tuple(draw(st.permutations(base))), tuple(draw(st.permutations(base)))


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, letters=LETTERS):
    n = draw(st.integers(min_vertices, max_vertices))
    vs = list(letters[:n])
    pairs = list(itertools.combinations(vs, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([p for p, keep in zip(pairs, mask) if keep], vs)


# criterion number -> (passed, seconds, limit, note); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, limit, note = ACCEPTANCE[n]
        status = "PASS" if ok else "FAIL"
        line = f"criterion {n:2d}: {status}  {secs:7.3f}s (limit {limit:g}s)  {note}"
        terminalreporter.write_line(line)
