"""Transducer algebra: normalization, products, and class checks."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from dnacodec.alphabets import BINARY, DNA, Alphabet, Permutation, dna_delta
from dnacodec.automata import Nfa, accepts, enumerate_words
from dnacodec.transducers import (
    Transducer,
    accepts_pair,
    bounded_counterexample,
    compose,
    enumerate_pairs,
    image,
    included_in_recognizable,
    inverse,
    is_functional,
    is_length_preserving,
    is_partial_identity,
    normalize,
    relation_empty,
    restrict_input,
    restrict_output,
    shortest_pair,
    trim,
    union,
)
from oracles import outputs_up_to, pair_in_relation

AB = Alphabet.of("ab")


def doubler() -> Transducer:
    """a -> aa on every letter, one state."""
    return Transducer(AB, 1, tuple((0, a, a + a, 0) for a in AB), {0}, {0})


def swap_machine() -> Transducer:
    return Transducer(AB, 1, ((0, "a", "b", 0), (0, "b", "a", 0)), {0}, {0})


def random_transducer(rng: random.Random, alphabet: Alphabet, max_states: int = 3) -> Transducer:
    n = rng.randint(1, max_states)
    labels = [""] + list(alphabet.symbols)
    edges = []
    for _ in range(rng.randint(0, 2 * n + 2)):
        edges.append(
            (
                rng.randrange(n),
                rng.choice(labels),
                rng.choice(labels),
                rng.randrange(n),
            )
        )
    initial = {rng.randrange(n)}
    final = {q for q in range(n) if rng.random() < 0.5} or {rng.randrange(n)}
    return Transducer(alphabet, n, tuple(edges), frozenset(initial), frozenset(final))


def test_normalize_splits_word_labels():
    t = Transducer(AB, 2, ((0, "ab", "ba", 1),), {0}, {1})
    tn = normalize(t)
    for _src, inp, out, _dst in tn.edges:
        assert len(inp) <= 1 and len(out) <= 1
        assert not (inp == "" and out == "")
    assert accepts_pair(t, "ab", "ba")
    assert accepts_pair(tn, "ab", "ba")
    assert not accepts_pair(tn, "ab", "ab")


def test_identity_and_empty():
    ident = Transducer.identity(AB)
    assert accepts_pair(ident, "abba", "abba")
    assert not accepts_pair(ident, "ab", "ba")
    assert relation_empty(Transducer.empty(AB))
    assert not relation_empty(ident)


def test_inverse_swaps_tapes():
    t = doubler()
    assert accepts_pair(t, "ab", "aabb")
    ti = inverse(t)
    assert accepts_pair(ti, "aabb", "ab")
    assert not accepts_pair(ti, "ab", "aabb")


def test_union_combines_relations():
    u = union(doubler(), swap_machine())
    assert accepts_pair(u, "ab", "aabb")
    assert accepts_pair(u, "ab", "ba")
    assert not accepts_pair(u, "ab", "ab")


def test_compose_applies_inner_first():
    # inner doubles, outer swaps: a |-> aa |-> bb
    c = compose(swap_machine(), doubler())
    assert accepts_pair(c, "a", "bb")
    assert not accepts_pair(c, "a", "aa")
    # other order: a |-> b |-> bb
    c2 = compose(doubler(), swap_machine())
    assert accepts_pair(c2, "a", "bb")
    assert accepts_pair(compose(doubler(), doubler()), "a", "aaaa")


def test_restrict_and_image():
    t = doubler()
    only_a = Nfa.finite(AB, ["a"])
    ra = restrict_input(t, only_a)
    assert accepts_pair(ra, "a", "aa") and not accepts_pair(ra, "b", "bb")
    ro = restrict_output(t, Nfa.finite(AB, ["aa"]))
    assert accepts_pair(ro, "a", "aa") and not accepts_pair(ro, "ab", "aabb")
    img = image(t, Nfa.finite(AB, ["ab", "b"]))
    assert sorted(enumerate_words(img, 6)) == ["aabb", "bb"]
    full = image(swap_machine())
    assert accepts(full, "ba")


def test_shortest_pair_order():
    t = Transducer(AB, 2, ((0, "b", "b", 1), (0, "a", "ab", 1)), {0}, {1})
    assert shortest_pair(t) == ("b", "b")
    assert shortest_pair(Transducer.empty(AB)) is None


def test_enumerate_pairs_sorted_and_complete():
    t = swap_machine()
    pairs = enumerate_pairs(t, 4)
    assert ("", "") in pairs
    assert ("ab", "ba") in pairs
    assert pairs == sorted(pairs, key=lambda p: (len(p[0]) + len(p[1]), p[0], p[1]))


def test_is_partial_identity():
    ok, wit = is_partial_identity(Transducer.identity(AB))
    assert ok and wit is None
    ok, wit = is_partial_identity(swap_machine())
    assert not ok
    x, y = wit
    assert x != y and accepts_pair(swap_machine(), x, y)
    # identity restricted to a regular set is still a partial identity
    restricted = restrict_input(Transducer.identity(AB), Nfa.finite(AB, ["ab", "b"]))
    assert is_partial_identity(restricted)[0]


def test_is_functional():
    assert is_functional(doubler())[0]
    ambiguous = Transducer(AB, 1, ((0, "a", "a", 0), (0, "a", "b", 0)), {0}, {0})
    ok, wit = is_functional(ambiguous)
    assert not ok
    x, y1, y2 = wit
    assert y1 != y2 and accepts_pair(ambiguous, x, y1) and accepts_pair(ambiguous, x, y2)


def test_is_length_preserving():
    assert is_length_preserving(swap_machine())[0]
    ok, wit = is_length_preserving(doubler())
    assert not ok
    x, y = wit
    assert len(x) != len(y) and accepts_pair(doubler(), x, y)


def test_included_in_recognizable():
    t = restrict_input(swap_machine(), Nfa.finite(AB, ["a", "ab"]))
    inside = [(Nfa.finite(AB, ["a", "ab"]), Nfa.finite(AB, ["b", "ba"]))]
    ok, wit = included_in_recognizable(t, inside)
    assert ok and wit is None
    too_small = [(Nfa.finite(AB, ["a"]), Nfa.finite(AB, ["b"]))]
    ok, wit = included_in_recognizable(t, too_small)
    assert not ok
    assert accepts_pair(t, *wit)
    # identity on a* is not inside any finite union of rectangles that
    # misses the diagonal pairing
    ident = restrict_input(Transducer.identity(AB), Nfa.finite(AB, ["aa"]))
    ok, wit = included_in_recognizable(ident, [(Nfa.finite(AB, ["aa"]), Nfa.finite(AB, ["ab"]))])
    assert not ok and wit == ("aa", "aa")


def test_bounded_counterexample_altering():
    delta = dna_delta()
    ident = Transducer.identity(DNA)
    # delta(AT) = AT is the shortest word mapped onto its own image
    assert bounded_counterexample(ident, delta, "altering", 3) == "AT"
    assert bounded_counterexample(ident, delta, "altering", 1) is None
    assert bounded_counterexample(ident, delta, "altering", 0) is None


def test_bounded_counterexample_preserving():
    delta = dna_delta()
    ident = Transducer.identity(DNA)
    # identity never outputs delta(A) = T on input A
    assert bounded_counterexample(ident, delta, "preserving", 2) == "A"
    swap = Transducer(
        DNA, 1, tuple((0, a, delta.image(a), 0) for a in DNA), {0}, {0}
    )
    mirror_comp = Permutation.from_mapping(
        DNA, {"A": "T", "T": "A", "C": "G", "G": "C"}, antimorphic=False
    )
    assert bounded_counterexample(swap, mirror_comp, "preserving", 3) is None
    with pytest.raises(ValueError):
        bounded_counterexample(ident, delta, "both", 2)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10_000))
def test_random_machines_agree_with_raw_search(seed):
    rng = random.Random(seed)
    t = random_transducer(rng, BINARY)
    for x, y in enumerate_pairs(t, 4):
        assert pair_in_relation(t, x, y)
    for u in ["", "0", "1", "00", "01", "10", "110"]:
        expected = outputs_up_to(t, u, 3)
        got = {y for x, y in enumerate_pairs(t, 3 + len(u)) if x == u and len(y) <= 3}
        assert got == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000))
def test_inverse_duality_random(seed):
    rng = random.Random(seed)
    t = random_transducer(rng, BINARY)
    ti = inverse(t)
    for x, y in enumerate_pairs(t, 4):
        assert accepts_pair(ti, y, x)
    tt = inverse(ti)
    for x, y in enumerate_pairs(t, 4):
        assert accepts_pair(tt, x, y)
