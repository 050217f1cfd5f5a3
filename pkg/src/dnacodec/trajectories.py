"""Trajectory-directed shuffle/deletion and bond-free property compilation.

A *trajectory* is a word over {0, 1} that directs how two words interleave:
reading the trajectory left to right, a ``0`` takes the next letter of the
core word and a ``1`` takes the next letter of the inserted word.  Deletion
is the converse reading: ``1`` positions are removed and must spell the
deleted word, ``0`` positions spell the result.

A regular expression over {0, 1} then denotes a set of trajectories, and a
pair of such expressions (one for deletion, one for insertion) describes a
language operator: delete something from a language word, keep a nonempty
core, insert something else.  A language avoids unwanted bonds when the
theta-image of the language never meets the operator's output.  This module
provides the word-level operations, the four elementary transducers the
operator factors through, the direct language-level operator, and the
compilation of a trajectory pair into a property descriptor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabets import Alphabet, Permutation
from .automata import Nfa, intersect as nfa_intersect, parse_regex, remove_epsilon, trim as nfa_trim, union as nfa_union
from .properties import PropertyDescriptor, S_KIND, UNRESTRICTED
from .transducers import (
    Transducer,
    compose,
    image,
    inverse,
    restrict_output,
    union as t_union,
)

_BINARY = Alphabet.of("01")


def shuffle_on_trajectory(x: str, t: str, w: str) -> Optional[str]:
    """Interleave ``x`` (on the 0s of ``t``) with ``w`` (on the 1s).

    Returns None when the trajectory does not fit the two lengths.
    """
    if len(t) != len(x) + len(w):
        return None
    out = []
    i = j = 0
    for c in t:
        if c == "0":
            if i == len(x):
                return None
            out.append(x[i])
            i += 1
        elif c == "1":
            if j == len(w):
                return None
            out.append(w[j])
            j += 1
        else:
            return None
    if i != len(x) or j != len(w):
        return None
    return "".join(out)


def delete_on_trajectory(y: str, t: str, w: str) -> Optional[str]:
    """Remove the 1-positions of ``y`` (which must spell ``w``); return the rest.

    Returns None when lengths disagree or the removed letters are not ``w``.
    """
    if len(t) != len(y):
        return None
    kept = []
    removed = []
    for c, a in zip(t, y):
        if c == "0":
            kept.append(a)
        elif c == "1":
            removed.append(a)
        else:
            return None
    if "".join(removed) != w:
        return None
    return "".join(kept)


@dataclass(frozen=True)
class TrajectoryPair:
    """A deletion/insertion pair of trajectory regular expressions.

    ``strict`` additionally forbids the do-nothing case where nothing is
    deleted and nothing is inserted.
    """

    e1: str
    e2: str
    strict: bool = False

    def __post_init__(self):
        for expr in (self.e1, self.e2):
            parse_regex(expr, _BINARY)


def trajectory_nfa(e: str) -> Nfa:
    """Compile a trajectory regular expression to a trimmed ε-free NFA."""
    return nfa_trim(remove_epsilon(parse_regex(e, _BINARY)))


_OPS = ("T1", "T2", "T3", "T4")


def build_op_transducer(which: str, e: str, alphabet: Alphabet) -> Transducer:
    """One of the four elementary trajectory operators as a transducer.

    * ``T2``: insert any word along ``e``   (x ↦ every shuffle of x with A*)
    * ``T4``: insert a nonempty word along ``e``
    * ``T1``: delete any word along ``e``   — the inverse of T2
    * ``T3``: delete a nonempty word along ``e`` — the inverse of T4

    T2 reads the trajectory automaton directly: 0-transitions copy an input
    letter, 1-transitions emit a fresh output letter.  T4 doubles the states
    with a flag recording that at least one letter was inserted.
    """
    if which not in _OPS:
        raise ValueError(f"operator must be one of {_OPS}, got {which!r}")
    if which == "T1":
        return inverse(build_op_transducer("T2", e, alphabet))
    if which == "T3":
        return inverse(build_op_transducer("T4", e, alphabet))
    n = trajectory_nfa(e)
    if n.n_states == 0:
        return Transducer.empty(alphabet)
    symbols = alphabet.symbols
    edges: list[tuple[int, str, str, int]] = []
    if which == "T2":
        for src, sym, dst in n.edges:
            for a in symbols:
                if sym == "0":
                    edges.append((src, a, a, dst))
                else:
                    edges.append((src, "", a, dst))
        out = Transducer(
            alphabet, n.n_states, tuple(edges), frozenset(n.initial), frozenset(n.final)
        )
    else:  # T4: flag bit tracks "inserted at least once"
        for src, sym, dst in n.edges:
            for flag in (0, 1):
                for a in symbols:
                    if sym == "0":
                        edges.append((2 * src + flag, a, a, 2 * dst + flag))
                    else:
                        edges.append((2 * src + flag, "", a, 2 * dst + 1))
        out = Transducer(
            alphabet,
            2 * n.n_states,
            tuple(edges),
            frozenset(2 * q for q in n.initial),
            frozenset(2 * q + 1 for q in n.final),
        )
    return out


def bond_free_operator(p: TrajectoryPair, l: Nfa) -> Nfa:
    """Apply the deletion-then-insertion operator to a language, stepwise.

    Strict variant: delete along e1, keep nonempty cores, insert along e2.
    Non-strict variant: same, except that the deleted and inserted words
    may not both be empty — the union of "deleted something" and
    "inserted something".
    """
    a = l.alphabet
    nonempty = Nfa.nonempty(a)
    t1 = build_op_transducer("T1", p.e1, a)
    t2 = build_op_transducer("T2", p.e2, a)
    if p.strict:
        return image(t2, nfa_intersect(image(t1, l), nonempty))
    t3 = build_op_transducer("T3", p.e1, a)
    t4 = build_op_transducer("T4", p.e2, a)
    deleted_some = image(t2, nfa_intersect(image(t3, l), nonempty))
    inserted_some = image(t4, nfa_intersect(image(t1, l), nonempty))
    return nfa_union(deleted_some, inserted_some)


def compile_trajectory_property(p: TrajectoryPair, theta: Permutation) -> PropertyDescriptor:
    """Compile a trajectory pair into a strict-kind property descriptor.

    The compiled transducer realizes exactly the bond-free operator, so a
    language satisfies the property iff its theta-image avoids the
    operator's output on it.
    """
    if not theta.antimorphic or not theta.is_involution():
        raise ValueError("trajectory properties require an antimorphic involution")
    a = theta.alphabet
    nonempty = Nfa.nonempty(a)
    t1 = build_op_transducer("T1", p.e1, a)
    t2 = build_op_transducer("T2", p.e2, a)
    if p.strict:
        machine = compose(t2, restrict_output(t1, nonempty))
    else:
        t3 = build_op_transducer("T3", p.e1, a)
        t4 = build_op_transducer("T4", p.e2, a)
        machine = t_union(
            compose(t2, restrict_output(t3, nonempty)),
            compose(t4, restrict_output(t1, nonempty)),
        )
    flavor = "strict" if p.strict else "nonstrict"
    return PropertyDescriptor(
        machine,
        theta,
        kind=S_KIND,
        asserted_class=UNRESTRICTED,
        name=f"bond-free({p.e1}; {p.e2}; {flavor})",
    )
