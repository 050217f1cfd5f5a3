"""Nondeterministic finite automata with epsilon moves.

States are dense integers ``0..n_states-1``; an edge is ``(src, sym, dst)``
where ``sym`` is a single alphabet character or ``None`` for an epsilon
move.  Machines are treated as immutable values: every operation returns a
fresh ``Nfa``.

Potentially exponential constructions (subset construction and everything
built on it) take a ``state_cap`` and raise :class:`ResourceLimitError`
instead of thrashing; the default cap can be overridden with the
``DNACODEC_STATE_CAP`` environment variable.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .alphabets import Alphabet, Permutation
from .errors import FormatError, ResourceLimitError

DEFAULT_STATE_CAP = 1 << 20


def resolve_state_cap(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("DNACODEC_STATE_CAP")
    return int(env) if env else DEFAULT_STATE_CAP


@dataclass(eq=False)
class Nfa:
    """An NFA over ``alphabet``; epsilon edges carry the symbol ``None``."""

    alphabet: Alphabet
    n_states: int
    edges: tuple[tuple[int, Optional[str], int], ...]
    initial: frozenset[int]
    final: frozenset[int]
    _adj: Optional[tuple] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.initial = frozenset(self.initial)
        self.final = frozenset(self.final)
        self.edges = tuple(self.edges)
        for src, sym, dst in self.edges:
            if not (0 <= src < self.n_states and 0 <= dst < self.n_states):
                raise ValueError(f"edge ({src},{sym!r},{dst}) out of range for {self.n_states} states")
            if sym is not None and sym not in self.alphabet:
                raise ValueError(f"edge symbol {sym!r} not in alphabet")
        for q in self.initial | self.final:
            if not 0 <= q < self.n_states:
                raise ValueError(f"state {q} out of range")

    # -- adjacency -------------------------------------------------------

    def adjacency(self) -> tuple[list[list[int]], list[dict[str, list[int]]]]:
        """``(eps_adj, sym_adj)``, built once and cached on the instance."""
        if self._adj is None:
            eps_adj: list[list[int]] = [[] for _ in range(self.n_states)]
            sym_adj: list[dict[str, list[int]]] = [{} for _ in range(self.n_states)]
            for src, sym, dst in self.edges:
                if sym is None:
                    eps_adj[src].append(dst)
                else:
                    sym_adj[src].setdefault(sym, []).append(dst)
            self._adj = (eps_adj, sym_adj)
        return self._adj

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        """Epsilon closure of a state set."""
        eps_adj, _ = self.adjacency()
        seen = set(states)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for r in eps_adj[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)

    def step(self, states: frozenset[int], sym: str) -> frozenset[int]:
        _, sym_adj = self.adjacency()
        out: set[int] = set()
        for q in states:
            out.update(sym_adj[q].get(sym, ()))
        return self.closure(out)

    # -- constructors ----------------------------------------------------

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Nfa":
        """The machine accepting nothing."""
        return cls(alphabet, 1, (), frozenset({0}), frozenset())

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "Nfa":
        """The machine accepting exactly the empty word."""
        return cls(alphabet, 1, (), frozenset({0}), frozenset({0}))

    @classmethod
    def symbol(cls, alphabet: Alphabet, sym: str) -> "Nfa":
        alphabet.check_word(sym)
        return cls(alphabet, 2, ((0, sym, 1),), frozenset({0}), frozenset({1}))

    @classmethod
    def word(cls, alphabet: Alphabet, w: str) -> "Nfa":
        alphabet.check_word(w)
        edges = tuple((i, ch, i + 1) for i, ch in enumerate(w))
        return cls(alphabet, len(w) + 1, edges, frozenset({0}), frozenset({len(w)}))

    @classmethod
    def finite(cls, alphabet: Alphabet, words: Iterable[str]) -> "Nfa":
        """A trie accepting exactly the given finite set of words."""
        words = list(words)
        for w in words:
            alphabet.check_word(w)
        children: list[dict[str, int]] = [{}]
        final: set[int] = set()
        for w in words:
            cur = 0
            for ch in w:
                nxt = children[cur].get(ch)
                if nxt is None:
                    nxt = len(children)
                    children.append({})
                    children[cur][ch] = nxt
                cur = nxt
            final.add(cur)
        edges = tuple(
            (src, ch, dst) for src, kids in enumerate(children) for ch, dst in kids.items()
        )
        return cls(alphabet, len(children), edges, frozenset({0}), frozenset(final))

    @classmethod
    def universal(cls, alphabet: Alphabet) -> "Nfa":
        """All words, including the empty one."""
        edges = tuple((0, a, 0) for a in alphabet)
        return cls(alphabet, 1, edges, frozenset({0}), frozenset({0}))

    @classmethod
    def nonempty(cls, alphabet: Alphabet) -> "Nfa":
        """All nonempty words."""
        edges = tuple((0, a, 1) for a in alphabet) + tuple((1, a, 1) for a in alphabet)
        return cls(alphabet, 2, edges, frozenset({0}), frozenset({1}))

    @classmethod
    def length_at_most(cls, alphabet: Alphabet, n: int) -> "Nfa":
        """All words of length ≤ n."""
        edges = tuple((i, a, i + 1) for i in range(n) for a in alphabet)
        return cls(alphabet, n + 1, edges, frozenset({0}), frozenset(range(n + 1)))

    @classmethod
    def length_more_than(cls, alphabet: Alphabet, n: int) -> "Nfa":
        """All words of length > n."""
        edges = tuple((i, a, min(i + 1, n + 1)) for i in range(n + 2) for a in alphabet)
        return cls(alphabet, n + 2, edges, frozenset({0}), frozenset({n + 1}))


# -- basic queries -------------------------------------------------------


def accepts(m: Nfa, w: str) -> bool:
    cur = m.closure(m.initial)
    for ch in w:
        if not cur:
            return False
        cur = m.step(cur, ch)
    return bool(cur & m.final)


def is_empty(m: Nfa) -> bool:
    """True when the machine accepts no word at all."""
    seen = set(m.initial)
    stack = list(seen)
    eps_adj, sym_adj = m.adjacency()
    while stack:
        q = stack.pop()
        if q in m.final:
            return False
        nxt: list[int] = list(eps_adj[q])
        for dsts in sym_adj[q].values():
            nxt.extend(dsts)
        for r in nxt:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return True


def _letters_to_final(m: Nfa) -> list[float]:
    """Per state: minimum number of letters on a path into a final state.

    0/1-BFS on the reversed graph — epsilon edges cost 0, symbol edges 1.
    """
    INF = float("inf")
    rev: list[list[tuple[int, int]]] = [[] for _ in range(m.n_states)]
    for src, sym, dst in m.edges:
        rev[dst].append((0 if sym is None else 1, src))
    dist = [INF] * m.n_states
    dq: deque[tuple[float, int]] = deque()
    for f in m.final:
        dist[f] = 0
        dq.append((0, f))
    while dq:
        d, q = dq.popleft()
        if d > dist[q]:
            continue
        for cost, p in rev[q]:
            nd = d + cost
            if nd < dist[p]:
                dist[p] = nd
                if cost == 0:
                    dq.appendleft((nd, p))
                else:
                    dq.append((nd, p))
    return dist


def shortest_word(m: Nfa) -> Optional[str]:
    """A shortest accepted word (lexicographically least among those), or None."""
    back = _letters_to_final(m)
    cur = m.closure(m.initial)
    if not cur:
        return None
    remaining = min((back[q] for q in cur), default=float("inf"))
    if remaining == float("inf"):
        return None
    out: list[str] = []
    while remaining > 0:
        for a in m.alphabet:
            nxt = m.step(cur, a)
            if nxt and min((back[q] for q in nxt), default=float("inf")) == remaining - 1:
                out.append(a)
                cur = nxt
                remaining -= 1
                break
        else:  # pragma: no cover - contradicts the distance invariant
            raise AssertionError("inconsistent distance labelling")
    return "".join(out)


def enumerate_words(m: Nfa, max_len: int) -> list[str]:
    """All accepted words of length ≤ max_len in shortlex order."""
    out: list[str] = []
    start = m.closure(m.initial)
    level: dict[str, frozenset[int]] = {"": start} if start else {}
    if start & m.final:
        out.append("")
    for _ in range(max_len):
        nxt: dict[str, frozenset[int]] = {}
        for w in sorted(level):
            states = level[w]
            for a in m.alphabet:
                stepped = m.step(states, a)
                if stepped:
                    wa = w + a
                    nxt[wa] = stepped
                    if stepped & m.final:
                        out.append(wa)
        level = nxt
        if not level:
            break
    return out


# -- structural transforms ----------------------------------------------


def trim(m: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach a final state."""
    fwd = set(m.initial)
    stack = list(fwd)
    succ: list[list[int]] = [[] for _ in range(m.n_states)]
    pred: list[list[int]] = [[] for _ in range(m.n_states)]
    for src, _sym, dst in m.edges:
        succ[src].append(dst)
        pred[dst].append(src)
    while stack:
        q = stack.pop()
        for r in succ[q]:
            if r not in fwd:
                fwd.add(r)
                stack.append(r)
    bwd = set(m.final)
    stack = list(bwd)
    while stack:
        q = stack.pop()
        for r in pred[q]:
            if r not in bwd:
                bwd.add(r)
                stack.append(r)
    keep = sorted(fwd & bwd)
    if not keep:
        return Nfa(m.alphabet, 0, (), frozenset(), frozenset())
    remap = {q: i for i, q in enumerate(keep)}
    edges = tuple(
        (remap[s], sym, remap[d]) for s, sym, d in m.edges if s in remap and d in remap
    )
    return Nfa(
        m.alphabet,
        len(keep),
        edges,
        frozenset(remap[q] for q in m.initial if q in remap),
        frozenset(remap[q] for q in m.final if q in remap),
    )


def reverse(m: Nfa) -> Nfa:
    edges = tuple((d, sym, s) for s, sym, d in m.edges)
    return Nfa(m.alphabet, m.n_states, edges, m.final, m.initial)


def remove_epsilon(m: Nfa) -> Nfa:
    """An equivalent machine without epsilon edges."""
    _, sym_adj = m.adjacency()
    edges: list[tuple[int, Optional[str], int]] = []
    final = set()
    for p in range(m.n_states):
        cl = m.closure([p])
        if cl & m.final:
            final.add(p)
        for q in cl:
            for sym, dsts in sym_adj[q].items():
                for r in dsts:
                    edges.append((p, sym, r))
    return Nfa(m.alphabet, max(m.n_states, 1), tuple(set(edges)), m.initial, frozenset(final))


def union(a: Nfa, b: Nfa) -> Nfa:
    if a.alphabet != b.alphabet:
        raise ValueError("union requires a common alphabet")
    off = a.n_states
    edges = a.edges + tuple((s + off, sym, d + off) for s, sym, d in b.edges)
    return Nfa(
        a.alphabet,
        a.n_states + b.n_states,
        edges,
        a.initial | frozenset(q + off for q in b.initial),
        a.final | frozenset(q + off for q in b.final),
    )


def concat(a: Nfa, b: Nfa) -> Nfa:
    if a.alphabet != b.alphabet:
        raise ValueError("concat requires a common alphabet")
    off = a.n_states
    edges = list(a.edges)
    edges.extend((s + off, sym, d + off) for s, sym, d in b.edges)
    edges.extend((f, None, i + off) for f in a.final for i in b.initial)
    return Nfa(
        a.alphabet,
        a.n_states + b.n_states,
        tuple(edges),
        a.initial,
        frozenset(q + off for q in b.final),
    )


def star(m: Nfa) -> Nfa:
    hub = m.n_states
    edges = list(m.edges)
    edges.extend((hub, None, i) for i in m.initial)
    edges.extend((f, None, hub) for f in m.final)
    return Nfa(m.alphabet, m.n_states + 1, tuple(edges), frozenset({hub}), frozenset({hub}))


def plus(m: Nfa) -> Nfa:
    return concat(m, star(m))


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Lazy product; epsilon moves advance one component at a time."""
    if a.alphabet != b.alphabet:
        raise ValueError("intersect requires a common alphabet")
    a_eps, a_sym = a.adjacency()
    b_eps, b_sym = b.adjacency()
    index: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, Optional[str], int]] = []
    queue: deque[tuple[int, int]] = deque()

    def state(pq: tuple[int, int]) -> int:
        i = index.get(pq)
        if i is None:
            i = len(index)
            index[pq] = i
            queue.append(pq)
        return i

    for p in a.initial:
        for q in b.initial:
            state((p, q))
    while queue:
        pq = queue.popleft()
        p, q = pq
        src = index[pq]
        for p2 in a_eps[p]:
            edges.append((src, None, state((p2, q))))
        for q2 in b_eps[q]:
            edges.append((src, None, state((p, q2))))
        for sym, p2s in a_sym[p].items():
            q2s = b_sym[q].get(sym)
            if q2s:
                for p2 in p2s:
                    for q2 in q2s:
                        edges.append((src, sym, state((p2, q2))))
    final = frozenset(i for (p, q), i in index.items() if p in a.final and q in b.final)
    initial = frozenset(
        i for (p, q), i in index.items() if p in a.initial and q in b.initial
    )
    return Nfa(a.alphabet, max(len(index), 1), tuple(edges), initial, final)


def determinize(m: Nfa, state_cap: Optional[int] = None) -> Nfa:
    """Subset construction; the result is deterministic and complete."""
    cap = resolve_state_cap(state_cap)
    index: dict[frozenset[int], int] = {}
    edges: list[tuple[int, Optional[str], int]] = []
    queue: deque[frozenset[int]] = deque()

    def state(subset: frozenset[int]) -> int:
        i = index.get(subset)
        if i is None:
            if len(index) >= cap:
                raise ResourceLimitError(
                    f"determinization exceeded the cap of {cap} states"
                )
            i = len(index)
            index[subset] = i
            queue.append(subset)
        return i

    start = m.closure(m.initial)
    state(start)
    while queue:
        subset = queue.popleft()
        src = index[subset]
        for a in m.alphabet:
            edges.append((src, a, state(m.step(subset, a))))
    final = frozenset(i for subset, i in index.items() if subset & m.final)
    return Nfa(m.alphabet, len(index), tuple(edges), frozenset({0}), final)


def complement(m: Nfa, state_cap: Optional[int] = None) -> Nfa:
    d = determinize(m, state_cap)
    return Nfa(
        d.alphabet,
        d.n_states,
        d.edges,
        d.initial,
        frozenset(range(d.n_states)) - d.final,
    )


def missing_word(m: Nfa, state_cap: Optional[int] = None) -> Optional[str]:
    """A shortest word the machine rejects, or None when it is universal.

    Lazy subset-construction BFS: stops at the first non-accepting subset,
    so universality of e.g. a union of small parts rarely pays the full
    exponential price.
    """
    cap = resolve_state_cap(state_cap)
    start = m.closure(m.initial)
    if not (start & m.final):
        return ""
    parents: dict[frozenset[int], tuple[frozenset[int], str]] = {}
    seen = {start}
    queue: deque[frozenset[int]] = deque([start])
    while queue:
        subset = queue.popleft()
        for a in m.alphabet:
            nxt = m.step(subset, a)
            if nxt in seen:
                continue
            if len(seen) >= cap:
                raise ResourceLimitError(f"universality check exceeded the cap of {cap} subsets")
            seen.add(nxt)
            parents[nxt] = (subset, a)
            if not (nxt & m.final):
                out = [a]
                cur = subset
                while cur != start:
                    cur, sym = parents[cur]
                    out.append(sym)
                return "".join(reversed(out))
            queue.append(nxt)
    return None


def is_universal(m: Nfa, state_cap: Optional[int] = None) -> bool:
    return missing_word(m, state_cap) is None


def theta_image(m: Nfa, theta: Permutation) -> Nfa:
    """The machine accepting ``{theta(w) : w in L(m)}``.

    Morphic: relabel every edge.  Antimorphic: relabel, reverse every edge
    and swap the roles of initial and final states (a run for theta(w) is
    the mirrored run for w).
    """
    if theta.alphabet != m.alphabet:
        raise ValueError("permutation alphabet does not match the machine")
    edges = tuple(
        (s, None if sym is None else theta.image(sym), d) for s, sym, d in m.edges
    )
    if not theta.antimorphic:
        return Nfa(m.alphabet, m.n_states, edges, m.initial, m.final)
    edges = tuple((d, sym, s) for s, sym, d in edges)
    return Nfa(m.alphabet, m.n_states, edges, m.final, m.initial)


# -- regular expressions -------------------------------------------------

_META = set("()|*+")


def _tokenize_regex(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "@":
            if text.startswith("@epsilon", i):
                tokens.append("@epsilon")
                i += len("@epsilon")
            else:
                raise FormatError(f"unknown escape at position {i} in regex {text!r}")
        elif ch in _META or ch == "∅":
            tokens.append(ch)
            i += 1
        else:
            tokens.append("sym:" + ch)
            i += 1
    return tokens


def parse_regex(text: str, alphabet: Optional[Alphabet] = None) -> Nfa:
    """Parse a small regular-expression dialect into an NFA.

    Grammar: union ``|``, juxtaposition for concatenation, postfix ``*``
    and ``+``, parentheses, ``@epsilon`` for the empty word and ``∅`` for
    the empty language.  Any other non-space character is a literal symbol.
    When no alphabet is given it is inferred from the symbols that occur.
    """
    tokens = _tokenize_regex(text)
    syms = sorted({t[4:] for t in tokens if t.startswith("sym:")})
    if alphabet is None:
        if not syms:
            raise FormatError(f"cannot infer an alphabet from regex {text!r}")
        alphabet = Alphabet.of(syms)
    else:
        for s in syms:
            alphabet.check_word(s)

    pos = 0

    def peek() -> Optional[str]:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_union() -> Nfa:
        left = parse_seq()
        while peek() == "|":
            take()
            left = union(left, parse_seq())
        return left

    def parse_seq() -> Nfa:
        parts: list[Nfa] = []
        while peek() is not None and peek() not in (")", "|"):
            parts.append(parse_postfix())
        if not parts:
            raise FormatError(f"empty sub-expression in regex {text!r}")
        result = parts[0]
        for part in parts[1:]:
            result = concat(result, part)
        return result

    def parse_postfix() -> Nfa:
        item = parse_atom()
        while peek() in ("*", "+"):
            item = star(item) if take() == "*" else plus(item)
        return item

    def parse_atom() -> Nfa:
        tok = take()
        if tok == "(":
            inner = parse_union()
            if peek() != ")":
                raise FormatError(f"unbalanced parenthesis in regex {text!r}")
            take()
            return inner
        if tok == "∅":
            return Nfa.empty(alphabet)
        if tok == "@epsilon":
            return Nfa.epsilon(alphabet)
        if tok.startswith("sym:"):
            return Nfa.symbol(alphabet, tok[4:])
        raise FormatError(f"unexpected {tok!r} in regex {text!r}")

    result = parse_union()
    if pos != len(tokens):
        raise FormatError(f"trailing {tokens[pos]!r} in regex {text!r}")
    return result
