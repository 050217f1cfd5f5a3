#!/usr/bin/env python3
"""Measure strict-satisfaction throughput on random machines.

Generates random transducers and NFAs of configurable size, runs the strict
decider on each pair, and reports the explored product size and wall time.

Usage:
    python scripts/benchmark_satisfaction.py
    python scripts/benchmark_satisfaction.py --transducer-edges 5000 --cases 8
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Optional

from dnacodec.alphabets import DNA, dna_delta
from dnacodec.automata import Nfa
from dnacodec.properties import S_KIND, PropertyDescriptor, satisfies_S
from dnacodec.transducers import Transducer


def random_transducer(rng: random.Random, n_states: int, n_edges: int) -> Transducer:
    letters = sorted(DNA)
    edges = []
    for q in range(n_states - 1):
        edges.append((q, rng.choice(letters), rng.choice(letters), q + 1))
    while len(edges) < n_edges:
        a = rng.choice(letters) if rng.random() > 0.1 else ""
        b = rng.choice(letters) if rng.random() > 0.1 else ""
        edges.append((rng.randrange(n_states), a, b, rng.randrange(n_states)))
    finals = frozenset(rng.sample(range(n_states), max(1, n_states // 4)))
    return Transducer(DNA, n_states, tuple(edges), frozenset({0}), finals)


def random_language(rng: random.Random, n_states: int, dense: bool) -> Nfa:
    letters = sorted(DNA)
    if dense:
        edges = [
            (q, a, rng.randrange(n_states)) for q in range(n_states) for a in letters
        ]
    else:
        edges = [(q, rng.choice(letters), q + 1) for q in range(n_states - 1)]
        while len(edges) < 2 * n_states:
            edges.append(
                (rng.randrange(n_states), rng.choice(letters), rng.randrange(n_states))
            )
    finals = frozenset(rng.sample(range(n_states), max(1, n_states // 2)))
    return Nfa(DNA, n_states, tuple(edges), frozenset({0}), finals)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=1729)
    parser.add_argument("--cases", type=int, default=6)
    parser.add_argument("--transducer-states", type=int, default=800)
    parser.add_argument("--transducer-edges", type=int, default=3000)
    parser.add_argument("--language-states", type=int, default=4)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    theta = dna_delta()
    total_work = 0
    total_states = 0
    start = time.perf_counter()
    for i in range(args.cases):
        t = random_transducer(rng, args.transducer_states, args.transducer_edges)
        language = random_language(rng, args.language_states, dense=i % 2 == 0)
        descriptor = PropertyDescriptor(t, theta, kind=S_KIND)
        case_start = time.perf_counter()
        verdict = satisfies_S(descriptor, language)
        case_time = time.perf_counter() - case_start
        work = len(t.edges) * len(language.edges) ** 2
        total_work += work
        total_states += verdict.stats["restriction_states"]
        outcome = "satisfied" if verdict else f"witness {verdict.witness}"
        print(
            f"case {i}: |T|={len(t.edges)} |A|={len(language.edges)} "
            f"work={work:,} product_states={verdict.stats['restriction_states']:,} "
            f"{case_time * 1e3:.1f}ms {outcome}"
        )
    elapsed = time.perf_counter() - start
    print(
        f"\ntotal work {total_work:,} (transducer edges x language edges^2), "
        f"{total_states:,} product states, {elapsed:.2f}s wall"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
