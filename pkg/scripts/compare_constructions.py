#!/usr/bin/env python3
"""Word lengths of the naive and colouring-based constructions on random graphs.

Prints one row per vertex count: mean length of the naive words, of the
greedy-coloured words, and (up to 8 vertices) of the optimally coloured
words, together with the |V|·(Δ+1) bound.
"""

from __future__ import annotations

import argparse
import itertools
import random
import statistics
from dataclasses import dataclass

from piwords.construction import construct_colored, construct_naive
from piwords.graphs import Graph, complement
from piwords.representation import verify


@dataclass
class Config:
    n_min: int = 4
    n_max: int = 10
    samples: int = 200
    edge_prob: float = 0.5
    seed: int = 0
    exact_up_to: int = 7


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges([e for e in itertools.combinations(vs, 2) if rng.random() < p], vs)


def run(cfg: Config) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        naive, greedy, exact, bound = [], [], [], []
        for _ in range(cfg.samples):
            g = random_graph(rng, n, cfg.edge_prob)
            a, b = construct_naive(g), construct_colored(g)
            assert verify(g, a) and verify(g, b)
            naive.append(len(a.w))
            greedy.append(len(b.w))
            bound.append(n * (complement(g).max_degree() + 1))
            if n <= cfg.exact_up_to:
                exact.append(len(construct_colored(g, exact=True).w))
        rows.append(
            dict(
                n=n,
                naive=statistics.mean(naive),
                greedy=statistics.mean(greedy),
                exact=statistics.mean(exact) if exact else None,
                bound=statistics.mean(bound),
            )
        )
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args(argv)))
    print(f"{'n':>3} {'naive':>8} {'greedy':>8} {'exact':>8} {'bound':>8}")
    for r in run(cfg):
        ex = f"{r['exact']:8.1f}" if r["exact"] is not None else f"{'-':>8}"
        print(f"{r['n']:>3} {r['naive']:8.1f} {r['greedy']:8.1f} {ex} {r['bound']:8.1f}")


if __name__ == "__main__":
    main()
