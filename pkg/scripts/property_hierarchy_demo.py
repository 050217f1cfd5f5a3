#!/usr/bin/env python3
"""Walk sample DNA languages through the named bonding properties.

Prints one satisfaction table per language (rows: named properties, columns:
strict / normal / weak variants) plus the strength edges between the strict
properties, so the implication structure is visible on real verdicts.

Usage:
    python scripts/property_hierarchy_demo.py
    python scripts/property_hierarchy_demo.py --words ACGT CCAC GTAA
"""

from __future__ import annotations

import argparse
from typing import Optional

from dnacodec.alphabets import DNA, dna_delta
from dnacodec.automata import Nfa
from dnacodec.dna import PROPERTY_NAMES, hierarchy_edges, named_property
from dnacodec.errors import DnaCodecError
from dnacodec.properties import satisfies

VARIANTS = ("strict", "normal", "weak")

SAMPLE_LANGUAGES = [
    ("AAA CCT", ["AAA", "CCT"]),
    ("AGG CCA", ["AGG", "CCA"]),
    ("AT", ["AT"]),
    ("AACG CGTT", ["AACG", "CGTT"]),
    ("ACGT CCAC GTAA", ["ACGT", "CCAC", "GTAA"]),
]


def verdict_cell(name: str, variant: str, language: Nfa) -> str:
    theta = dna_delta()
    try:
        descriptor = named_property(name, variant, theta)
    except DnaCodecError:
        return "-"
    result = satisfies(descriptor, language)
    if result:
        return "yes"
    u, v = result.witness
    return f"no ({u},{v})"


def print_table(label: str, words: list[str]) -> None:
    language = Nfa.finite(DNA, words)
    print(f"\nlanguage {{{label}}}")
    header = f"  {'property':18}" + "".join(f"{v:>16}" for v in VARIANTS)
    print(header)
    for name in PROPERTY_NAMES:
        cells = [verdict_cell(name, variant, language) for variant in VARIANTS]
        print(f"  {name:18}" + "".join(f"{c:>16}" for c in cells))


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--words",
        nargs="+",
        metavar="WORD",
        help="evaluate just this language instead of the built-in samples",
    )
    args = parser.parse_args(argv)

    print("strength edges (satisfying the first implies satisfying the second):")
    for stronger, weaker in hierarchy_edges():
        print(f"  {stronger} -> {weaker}")

    if args.words:
        print_table(" ".join(args.words), args.words)
    else:
        for label, words in SAMPLE_LANGUAGES:
            print_table(label, words)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
