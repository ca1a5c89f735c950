#!/usr/bin/env python3
"""Smallest uniformity k of every labeled graph on n vertices, by exhaustive search.

For n <= 5 all labeled graphs are searched; for larger n a random sample.
Levels whose search exceeds the budget are reported as unknown.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass

from piwords.graphs import Graph, all_labeled_graphs, format_graph
from piwords.representation import min_uniformity


@dataclass
class Config:
    n: int = 5
    k_max: int = 2
    budget: int = 2_000_000
    sample: int = 0  # 0 = every labeled graph
    seed: int = 0
    show: int = 1  # examples printed per k above 1


def graphs_for(cfg: Config):
    vs = [str(i) for i in range(1, cfg.n + 1)]
    if not cfg.sample:
        yield from all_labeled_graphs(vs)
        return
    rng = random.Random(cfg.seed)
    pairs = list(itertools.combinations(vs, 2))
    for _ in range(cfg.sample):
        yield Graph.from_edges([p for p in pairs if rng.random() < 0.5], vs)


def run(cfg: Config):
    tally: Counter = Counter()
    examples: dict = {}
    for g in graphs_for(cfg):
        res = min_uniformity(g, cfg.k_max, cfg.budget)
        key = res.k if res.found else ("unknown" if not res.complete else f">{cfg.k_max}")
        tally[key] += 1
        if key != 1:
            examples.setdefault(key, []).append(g)
    return tally, examples


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args(argv)))
    t0 = time.perf_counter()
    tally, examples = run(cfg)
    print(f"n={cfg.n}  graphs={sum(tally.values())}  k_max={cfg.k_max}  ({time.perf_counter() - t0:.1f}s)")
    for key in sorted(tally, key=str):
        print(f"  k={key}: {tally[key]}")
    for key, gs in examples.items():
        for g in gs[: cfg.show]:
            print(f"-- example with k={key}:")
            print(format_graph(g), end="")


if __name__ == "__main__":
    main()
