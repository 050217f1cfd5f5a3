"""Finite transducers over a common input/output alphabet.

An edge is ``(src, inp, out, dst)`` where ``inp``/``out`` are words (often
single letters) and ``""`` stands for the empty word.  A transducer
*realizes* the relation of all ``(x, y)`` labelling an accepting path.

``normalize`` rewrites a machine so that every edge carries exactly one
letter on exactly one tape — the *normal form* every decision procedure in
this module works on.  Machines are immutable values; the normal form is
memoized on the instance because the same machine is typically queried
against many languages.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .alphabets import Alphabet, Permutation
from .automata import (
    Nfa,
    complement as nfa_complement,
    determinize,
    intersect as nfa_intersect,
    is_empty as nfa_is_empty,
    remove_epsilon,
    resolve_state_cap,
    shortest_word,
    trim as nfa_trim,
    union as nfa_union,
)
from .errors import ResourceLimitError


@dataclass(eq=False)
class Transducer:
    alphabet: Alphabet
    n_states: int
    edges: tuple[tuple[int, str, str, int], ...]
    initial: frozenset[int]
    final: frozenset[int]
    _norm: Optional["Transducer"] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.initial = frozenset(self.initial)
        self.final = frozenset(self.final)
        self.edges = tuple(self.edges)
        for src, inp, out, dst in self.edges:
            if not (0 <= src < self.n_states and 0 <= dst < self.n_states):
                raise ValueError(f"edge ({src},{inp!r},{out!r},{dst}) out of range")
            self.alphabet.check_word(inp)
            self.alphabet.check_word(out)
        for q in self.initial | self.final:
            if not 0 <= q < self.n_states:
                raise ValueError(f"state {q} out of range")

    # -- constructors ----------------------------------------------------

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Transducer":
        """The transducer realizing the empty relation."""
        return cls(alphabet, 1, (), frozenset({0}), frozenset())

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Transducer":
        """The transducer mapping every word to itself."""
        edges = tuple((0, a, a, 0) for a in alphabet)
        return cls(alphabet, 1, edges, frozenset({0}), frozenset({0}))

    # -- grouped adjacency over normal-form edges ------------------------

    def grouped(self) -> tuple[list[list[tuple[str, int]]], list[list[tuple[str, int]]]]:
        """``(in_edges, out_edges)`` per state; requires normal-form labels."""
        ins: list[list[tuple[str, int]]] = [[] for _ in range(self.n_states)]
        outs: list[list[tuple[str, int]]] = [[] for _ in range(self.n_states)]
        for src, inp, out, dst in self.edges:
            if inp:
                ins[src].append((inp, dst))
            elif out:
                outs[src].append((out, dst))
            else:
                raise ValueError("grouped() requires a normalized transducer")
        return ins, outs


def normalize(t: Transducer) -> Transducer:
    """Equivalent machine whose edges each carry one letter on one tape.

    Word labels are split into chains (input letters first, then output
    letters — the relation does not care), after which every ``("", "")``
    edge is removed by epsilon closure.  The result is memoized.
    """
    if t._norm is not None:
        return t._norm
    split_edges: list[tuple[int, str, str, int]] = []
    n = t.n_states
    for p, x, y, q in t.edges:
        steps = [(ch, "") for ch in x] + [("", ch) for ch in y]
        if len(steps) <= 1:
            split_edges.append((p, x, y, q))
            continue
        cur = p
        for xi, yi in steps[:-1]:
            split_edges.append((cur, xi, yi, n))
            cur = n
            n += 1
        xi, yi = steps[-1]
        split_edges.append((cur, xi, yi, q))

    eps_adj: list[list[int]] = [[] for _ in range(n)]
    letter_edges: list[list[tuple[str, str, int]]] = [[] for _ in range(n)]
    for p, x, y, q in split_edges:
        if not x and not y:
            eps_adj[p].append(q)
        else:
            letter_edges[p].append((x, y, q))

    def closure(p: int) -> set[int]:
        seen = {p}
        stack = [p]
        while stack:
            q = stack.pop()
            for r in eps_adj[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return seen

    new_edges: set[tuple[int, str, str, int]] = set()
    final: set[int] = set()
    for p in range(n):
        cl = closure(p)
        if cl & t.final:
            final.add(p)
        for q in cl:
            for x, y, r in letter_edges[q]:
                new_edges.add((p, x, y, r))
    result = Transducer(t.alphabet, max(n, 1), tuple(sorted(new_edges)), t.initial, frozenset(final))
    result._norm = result
    t._norm = result
    return result


def trim(t: Transducer) -> Transducer:
    """Drop states not on any path from an initial to a final state."""
    succ: list[list[int]] = [[] for _ in range(t.n_states)]
    pred: list[list[int]] = [[] for _ in range(t.n_states)]
    for src, _x, _y, dst in t.edges:
        succ[src].append(dst)
        pred[dst].append(src)
    fwd = set(t.initial)
    stack = list(fwd)
    while stack:
        q = stack.pop()
        for r in succ[q]:
            if r not in fwd:
                fwd.add(r)
                stack.append(r)
    bwd = set(t.final)
    stack = list(bwd)
    while stack:
        q = stack.pop()
        for r in pred[q]:
            if r not in bwd:
                bwd.add(r)
                stack.append(r)
    keep = sorted(fwd & bwd)
    if not keep:
        return Transducer(t.alphabet, 0, (), frozenset(), frozenset())
    remap = {q: i for i, q in enumerate(keep)}
    edges = tuple(
        (remap[s], x, y, remap[d]) for s, x, y, d in t.edges if s in remap and d in remap
    )
    out = Transducer(
        t.alphabet,
        len(keep),
        edges,
        frozenset(remap[q] for q in t.initial if q in remap),
        frozenset(remap[q] for q in t.final if q in remap),
    )
    if t._norm is t:
        out._norm = out
    return out


def inverse(t: Transducer) -> Transducer:
    """Swap the tapes: realizes {(y, x) : (x, y) in t}."""
    edges = tuple((s, y, x, d) for s, x, y, d in t.edges)
    return Transducer(t.alphabet, t.n_states, edges, t.initial, t.final)


def union(a: Transducer, b: Transducer) -> Transducer:
    if a.alphabet != b.alphabet:
        raise ValueError("union requires a common alphabet")
    off = a.n_states
    edges = a.edges + tuple((s + off, x, y, d + off) for s, x, y, d in b.edges)
    return Transducer(
        a.alphabet,
        a.n_states + b.n_states,
        edges,
        a.initial | frozenset(q + off for q in b.initial),
        a.final | frozenset(q + off for q in b.final),
    )


def compose(outer: Transducer, inner: Transducer) -> Transducer:
    """Relational composition: ``inner`` runs first.

    Realizes {(x, z) : exists y with (x, y) in inner and (y, z) in outer}.
    Product construction on normal forms: inner input moves and outer
    output moves are free, while inner output letters synchronize with
    outer input letters (leaving an epsilon edge to be cleaned up by a
    later ``normalize``).
    """
    if outer.alphabet != inner.alphabet:
        raise ValueError("compose requires a common alphabet")
    ti = normalize(inner)
    to = normalize(outer)
    i_ins, i_outs = ti.grouped()
    o_ins, o_outs = to.grouped()

    index: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, str, str, int]] = []
    queue: deque[tuple[int, int]] = deque()

    def state(pq: tuple[int, int]) -> int:
        s = index.get(pq)
        if s is None:
            s = len(index)
            index[pq] = s
            queue.append(pq)
        return s

    for p in ti.initial:
        for q in to.initial:
            state((p, q))
    while queue:
        pq = queue.popleft()
        p, q = pq
        src = index[pq]
        for a, p2 in i_ins[p]:
            edges.append((src, a, "", state((p2, q))))
        for b, q2 in o_outs[q]:
            edges.append((src, "", b, state((p, q2))))
        for c, p2 in i_outs[p]:
            for c2, q2 in o_ins[q]:
                if c == c2:
                    edges.append((src, "", "", state((p2, q2))))
    initial = frozenset(
        i for (p, q), i in index.items() if p in ti.initial and q in to.initial
    )
    final = frozenset(i for (p, q), i in index.items() if p in ti.final and q in to.final)
    return Transducer(outer.alphabet, max(len(index), 1), tuple(edges), initial, final)


def restrict_input(t: Transducer, m: Nfa) -> Transducer:
    """Keep only the pairs whose input word is accepted by ``m``."""
    if t.alphabet != m.alphabet:
        raise ValueError("restrict_input requires a common alphabet")
    tn = normalize(t)
    ins, outs = tn.grouped()
    mf = remove_epsilon(m)
    _, m_sym = mf.adjacency()

    index: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, str, str, int]] = []
    queue: deque[tuple[int, int]] = deque()

    def state(pq: tuple[int, int]) -> int:
        s = index.get(pq)
        if s is None:
            s = len(index)
            index[pq] = s
            queue.append(pq)
        return s

    for p in tn.initial:
        for q in mf.initial:
            state((p, q))
    while queue:
        pq = queue.popleft()
        p, q = pq
        src = index[pq]
        for a, p2 in ins[p]:
            for q2 in m_sym[q].get(a, ()):
                edges.append((src, a, "", state((p2, q2))))
        for b, p2 in outs[p]:
            edges.append((src, "", b, state((p2, q))))
    initial = frozenset(
        i for (p, q), i in index.items() if p in tn.initial and q in mf.initial
    )
    final = frozenset(i for (p, q), i in index.items() if p in tn.final and q in mf.final)
    out = Transducer(t.alphabet, max(len(index), 1), tuple(edges), initial, final)
    out._norm = out  # labels are single-letter by construction
    return out


def restrict_output(t: Transducer, m: Nfa) -> Transducer:
    """Keep only the pairs whose output word is accepted by ``m``."""
    return inverse(restrict_input(inverse(t), m))


def image(t: Transducer, m: Optional[Nfa] = None) -> Nfa:
    """The NFA of output words of ``t`` (restricted to inputs in ``m``)."""
    tn = restrict_input(t, m) if m is not None else normalize(t)
    edges = tuple(
        (p, out if out else None, q) for p, _inp, out, q in tn.edges
    )
    return Nfa(t.alphabet, tn.n_states, edges, tn.initial, tn.final)


def relation_empty(t: Transducer) -> bool:
    """True when the machine realizes no pair at all."""
    succ: list[list[int]] = [[] for _ in range(t.n_states)]
    for src, _x, _y, dst in t.edges:
        succ[src].append(dst)
    seen = set(t.initial)
    stack = list(seen)
    while stack:
        q = stack.pop()
        if q in t.final:
            return False
        for r in succ[q]:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return True


def _word_key(alphabet: Alphabet, w: str) -> tuple[int, ...]:
    return tuple(alphabet.position(c) for c in w)


def shortest_pair(t: Transducer, pair_cap: int = 100_000) -> Optional[tuple[str, str]]:
    """A realized pair minimizing ``(|x|+|y|, x, y)``, or None.

    BFS finds the minimal total length d; a pruned DFS then enumerates the
    pairs of total length exactly d and keeps the lexicographically least
    (by alphabet order, input first).
    """
    tn = trim(normalize(t))
    if tn.n_states == 0:
        return None
    # minimal remaining letters from each state to a final state
    INF = float("inf")
    rev: list[list[int]] = [[] for _ in range(tn.n_states)]
    for src, _x, _y, dst in tn.edges:
        rev[dst].append(src)
    back = [INF] * tn.n_states
    dq: deque[int] = deque()
    for f in tn.final:
        back[f] = 0
        dq.append(f)
    while dq:
        q = dq.popleft()
        for p in rev[q]:
            if back[p] > back[q] + 1:
                back[p] = back[q] + 1
                dq.append(p)
    d = min((back[q] for q in tn.initial), default=INF)
    if d == INF:
        return None
    adj: list[list[tuple[str, str, int]]] = [[] for _ in range(tn.n_states)]
    for src, x, y, dst in tn.edges:
        adj[src].append((x, y, dst))
    best: Optional[tuple[tuple, tuple, str, str]] = None
    visited = 0
    stack: list[tuple[int, str, str]] = [(q, "", "") for q in sorted(tn.initial)]
    while stack:
        q, x, y = stack.pop()
        visited += 1
        if visited > pair_cap:
            raise ResourceLimitError("shortest_pair enumeration exceeded its cap")
        used = len(x) + len(y)
        if used + back[q] > d:
            continue
        if q in tn.final and used == int(d):
            key = (_word_key(tn.alphabet, x), _word_key(tn.alphabet, y), x, y)
            if best is None or key < best:
                best = key
            continue
        for ex, ey, dst in adj[q]:
            stack.append((dst, x + ex, y + ey))
    if best is None:
        return None
    return best[2], best[3]


def accepts_pair(t: Transducer, x: str, y: str) -> bool:
    """Membership of the pair ``(x, y)`` in the realized relation."""
    tn = normalize(t)
    ins, outs = tn.grouped()
    lx, ly = len(x), len(y)
    width = (lx + 1) * (ly + 1)
    seen = bytearray(tn.n_states * width)
    stack: list[tuple[int, int, int]] = []
    for q in tn.initial:
        stack.append((q, 0, 0))
        seen[q * width] = 1
    while stack:
        q, i, j = stack.pop()
        if i == lx and j == ly and q in tn.final:
            return True
        if i < lx:
            a = x[i]
            for sym, q2 in ins[q]:
                if sym == a:
                    idx = q2 * width + (i + 1) * (ly + 1) + j
                    if not seen[idx]:
                        seen[idx] = 1
                        stack.append((q2, i + 1, j))
        if j < ly:
            b = y[j]
            for sym, q2 in outs[q]:
                if sym == b:
                    idx = q2 * width + i * (ly + 1) + (j + 1)
                    if not seen[idx]:
                        seen[idx] = 1
                        stack.append((q2, i, j + 1))
    return False


def enumerate_pairs(t: Transducer, max_total: int) -> list[tuple[str, str]]:
    """All realized pairs with ``|x|+|y| <= max_total``, sorted by (total, x, y).

    Exponential in ``max_total`` — intended for oracles and small tests.
    """
    tn = normalize(t)
    adj: list[list[tuple[str, str, int]]] = [[] for _ in range(tn.n_states)]
    for src, x, y, dst in tn.edges:
        adj[src].append((x, y, dst))
    level: dict[tuple[str, str], set[int]] = {("", ""): set(tn.initial)}
    found: set[tuple[str, str]] = set()
    for pair, states in level.items():
        if states & tn.final:
            found.add(pair)
    for _ in range(max_total):
        nxt: dict[tuple[str, str], set[int]] = {}
        for (x, y), states in level.items():
            for q in states:
                for ex, ey, dst in adj[q]:
                    key = (x + ex, y + ey)
                    nxt.setdefault(key, set()).add(dst)
        for pair, states in nxt.items():
            if states & tn.final:
                found.add(pair)
        level = nxt
        if not level:
            break
    return sorted(
        found,
        key=lambda p: (
            len(p[0]) + len(p[1]),
            _word_key(tn.alphabet, p[0]),
            _word_key(tn.alphabet, p[1]),
        ),
    )


# -- decision procedures --------------------------------------------------


def _shortest_completion(tn: Transducer, start: int) -> tuple[str, str]:
    """Labels of a shortest edge path from ``start`` to a final state.

    Only called on trimmed machines, where such a path always exists.
    """
    if start in tn.final:
        return "", ""
    adj: list[list[tuple[str, str, int]]] = [[] for _ in range(tn.n_states)]
    for src, x, y, dst in tn.edges:
        adj[src].append((x, y, dst))
    parents: dict[int, tuple[int, str, str]] = {}
    queue: deque[int] = deque([start])
    seen = {start}
    goal = None
    while queue and goal is None:
        q = queue.popleft()
        for x, y, dst in adj[q]:
            if dst not in seen:
                seen.add(dst)
                parents[dst] = (q, x, y)
                if dst in tn.final:
                    goal = dst
                    break
                queue.append(dst)
    if goal is None:  # pragma: no cover - impossible on a trimmed machine
        raise AssertionError("no completion from a trimmed state")
    xs: list[str] = []
    ys: list[str] = []
    cur = goal
    while cur != start:
        cur, x, y = parents[cur]
        xs.append(x)
        ys.append(y)
    return "".join(reversed(xs)), "".join(reversed(ys))


def _subset_identity(
    tn: Transducer, state_cap: Optional[int] = None
) -> tuple[bool, Optional[tuple[str, str]]]:
    """Decide whether every realized pair of ``tn`` satisfies ``x == y``.

    ``tn`` must be trimmed and in normal form.  The search walks
    configurations ``(state, pending)`` where ``pending`` is the run of
    letters by which one tape is ahead of the other; both tapes agree on
    everything before that.  Three events refute the identity and each
    yields a concrete realized pair with ``x != y``:

    * a letter on the lagging tape differs from the head of ``pending``
      (the pair disagrees at a fixed position, whatever happens later);
    * a final state with a nonempty ``pending`` (one word is a proper
      prefix of the other);
    * ``pending`` outgrowing the state count: completing the path through
      at most ``n_states - 1`` further edges can shed at most that many
      letters, so the finished pair has different lengths.

    Conversely, if none of these events is reachable every accepting path
    keeps both tapes equal, so exhausting the configuration space proves
    the inclusion.  The configuration space is finite (pending is bounded)
    but can be exponential, hence the cap.
    """
    if tn.n_states == 0:
        return True, None
    cap = resolve_state_cap(state_cap)
    ins, outs = tn.grouped()
    n = tn.n_states

    Config = tuple  # (state, side, pending) with side 0 = input ahead
    start_configs = [(q, 0, "") for q in sorted(tn.initial)]
    parents: dict[Config, tuple[Config, str, str]] = {}
    seen: set[Config] = set(start_configs)
    queue: deque[Config] = deque(start_configs)

    def realized_prefix(cfg: Config) -> tuple[str, str]:
        chain: list[tuple[str, str]] = []
        cur = cfg
        while cur in parents:
            cur, ex, ey = parents[cur]
            chain.append((ex, ey))
        xs = "".join(ex for ex, _ in reversed(chain))
        ys = "".join(ey for _, ey in reversed(chain))
        return xs, ys

    def violation(cfg: Config, ex: str, ey: str, dst: int) -> tuple[str, str]:
        px, py = realized_prefix(cfg)
        cx, cy = _shortest_completion(tn, dst)
        return px + ex + cx, py + ey + cy

    while queue:
        cfg = queue.popleft()
        q, side, pending = cfg
        if pending and q in tn.final:
            px, py = realized_prefix(cfg)
            return False, (px, py)
        moves: list[tuple[str, str, Config]] = []
        for a, q2 in ins[q]:
            if side == 1 and pending:
                if a != pending[0]:
                    return False, violation(cfg, a, "", q2)
                moves.append((a, "", (q2, 1, pending[1:])))
            else:
                new_pending = pending + a
                if len(new_pending) > n:
                    return False, violation(cfg, a, "", q2)
                moves.append((a, "", (q2, 0, new_pending)))
        for b, q2 in outs[q]:
            if side == 0 and pending:
                if b != pending[0]:
                    return False, violation(cfg, "", b, q2)
                moves.append(("", b, (q2, 0, pending[1:])))
            else:
                new_pending = pending + b
                if len(new_pending) > n:
                    return False, violation(cfg, "", b, q2)
                moves.append(("", b, (q2, 1, new_pending)))
        for ex, ey, nxt in moves:
            state, nside, npending = nxt
            if not npending:
                nxt = (state, 0, "")
            if nxt in seen:
                continue
            if len(seen) >= cap:
                raise ResourceLimitError("identity check exceeded its configuration cap")
            seen.add(nxt)
            parents[nxt] = (cfg, ex, ey)
            queue.append(nxt)
    return True, None


def is_partial_identity(t: Transducer) -> tuple[bool, Optional[tuple[str, str]]]:
    """Is the realized relation a subset of {(w, w)}?

    Returns ``(True, None)`` or ``(False, (x, y))`` with a realized pair
    ``x != y``.
    """
    tn = trim(normalize(t))
    return _subset_identity(tn)


def is_functional(
    t: Transducer,
) -> tuple[bool, Optional[tuple[str, str, str]]]:
    """Does every input word have at most one output?

    Checked on the input-synchronized square: two copies of the machine
    consume the same input word while their outputs become the two tapes
    of a fresh transducer, which is functional exactly when that square
    realizes only equal pairs.  Returns ``(True, None)`` or
    ``(False, (x, y1, y2))`` with ``y1 != y2`` both outputs of ``x``.
    """
    tn = trim(normalize(t))
    if tn.n_states == 0:
        return True, None
    ins, outs = tn.grouped()
    n = tn.n_states

    index: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, str, str, int]] = []
    queue: deque[tuple[int, int]] = deque()

    def state(pq: tuple[int, int]) -> int:
        s = index.get(pq)
        if s is None:
            s = len(index)
            index[pq] = s
            queue.append(pq)
        return s

    for p in tn.initial:
        for q in tn.initial:
            state((p, q))
    while queue:
        pq = queue.popleft()
        p, q = pq
        src = index[pq]
        for a, p2 in ins[p]:
            for a2, q2 in ins[q]:
                if a == a2:
                    edges.append((src, "", "", state((p2, q2))))
        for b, p2 in outs[p]:
            edges.append((src, b, "", state((p2, q))))
        for b, q2 in outs[q]:
            edges.append((src, "", b, state((p, q2))))
    initial = frozenset(
        i for (p, q), i in index.items() if p in tn.initial and q in tn.initial
    )
    final = frozenset(i for (p, q), i in index.items() if p in tn.final and q in tn.final)
    square = Transducer(tn.alphabet, max(len(index), 1), tuple(edges), initial, final)
    ok, wit = _subset_identity(trim(normalize(square)))
    if ok:
        return True, None
    assert wit is not None
    y1, y2 = wit
    pre1 = image(inverse(tn), Nfa.word(tn.alphabet, y1))
    pre2 = image(inverse(tn), Nfa.word(tn.alphabet, y2))
    x = shortest_word(nfa_intersect(pre1, pre2))
    assert x is not None, "square witness must share an input"
    return False, (x, y1, y2)


def is_length_preserving(
    t: Transducer,
) -> tuple[bool, Optional[tuple[str, str]]]:
    """Does every realized pair satisfy ``|x| == |y|``?

    On the trimmed normal form, label every state with the input-minus-
    output balance of some path reaching it.  The relation is length
    preserving iff the labelling is consistent and all final labels are
    zero: any path through an inconsistency or to an unbalanced final
    state completes (the machine is trimmed) to a realized pair with
    ``|x| != |y|``, which is returned as the witness.
    """
    tn = trim(normalize(t))
    if tn.n_states == 0:
        return True, None
    adj: list[list[tuple[str, str, int]]] = [[] for _ in range(tn.n_states)]
    for src, x, y, dst in tn.edges:
        adj[src].append((x, y, dst))
    label: dict[int, int] = {}
    parents: dict[int, tuple[int, str, str]] = {}

    def path_labels(q: int) -> tuple[str, str]:
        xs: list[str] = []
        ys: list[str] = []
        cur = q
        while cur in parents:
            cur, ex, ey = parents[cur]
            xs.append(ex)
            ys.append(ey)
        return "".join(reversed(xs)), "".join(reversed(ys))

    stack: list[int] = []
    for q in sorted(tn.initial):
        if q not in label:
            label[q] = 0
            stack.append(q)
    while stack:
        p = stack.pop()
        for ex, ey, q in adj[p]:
            delta = 1 if ex else -1
            nl = label[p] + delta
            if q not in label:
                label[q] = nl
                parents[q] = (p, ex, ey)
                stack.append(q)
            elif label[q] != nl:
                px, py = path_labels(p)
                qx, qy = path_labels(q)
                cx, cy = _shortest_completion(tn, q)
                w1 = (px + ex + cx, py + ey + cy)
                w2 = (qx + cx, qy + cy)
                return False, (w1 if len(w1[0]) != len(w1[1]) else w2)
    for f in sorted(tn.final):
        if label.get(f, 0) != 0:
            return False, path_labels(f)
    return True, None


def included_in_recognizable(
    t: Transducer,
    rectangles: Sequence[tuple[Nfa, Nfa]],
    state_cap: Optional[int] = None,
    atom_cap: int = 4096,
) -> tuple[bool, Optional[tuple[str, str]]]:
    """Is the realized relation included in the union of A_i x B_i?

    Inputs are partitioned by their membership signature across the
    determinized A_i; for each reachable signature the outputs of the
    corresponding inputs must fall inside the union of the selected B_i.
    Returns ``(True, None)`` or ``(False, (x, y))`` with a realized pair
    outside every rectangle.
    """
    tn = normalize(t)
    if not rectangles:
        tt = trim(tn)
        if relation_empty(tt):
            return True, None
        return False, shortest_pair(tt)
    cap = resolve_state_cap(state_cap)
    dets = [determinize(a, cap) for a, _b in rectangles]
    det_adj = []
    for d in dets:
        _, sym_adj = d.adjacency()
        det_adj.append(sym_adj)

    index: dict[tuple[int, ...], int] = {}
    edges: list[tuple[int, Optional[str], int]] = []
    queue: deque[tuple[int, ...]] = deque()

    def state(tup: tuple[int, ...]) -> int:
        s = index.get(tup)
        if s is None:
            if len(index) >= cap:
                raise ResourceLimitError("signature product exceeded the state cap")
            s = len(index)
            index[tup] = s
            queue.append(tup)
        return s

    start = tuple(next(iter(d.initial)) for d in dets)
    state(start)
    while queue:
        tup = queue.popleft()
        src = index[tup]
        for a in tn.alphabet:
            nxt = tuple(det_adj[i][q][a][0] for i, q in enumerate(tup))
            edges.append((src, a, state(nxt)))

    signatures: dict[frozenset[int], list[int]] = {}
    for tup, s in index.items():
        sig = frozenset(i for i, q in enumerate(tup) if q in dets[i].final)
        signatures.setdefault(sig, []).append(s)
    if len(signatures) > atom_cap:
        raise ResourceLimitError(f"{len(signatures)} input classes exceed the atom cap {atom_cap}")

    for sig in sorted(signatures, key=lambda s: sorted(s)):
        states = signatures[sig]
        l_sig = Nfa(
            tn.alphabet, len(index), tuple(edges), frozenset({0}), frozenset(states)
        )
        if sig:
            allowed = rectangles[min(sig)][1]
            for i in sorted(sig):
                if i != min(sig):
                    allowed = nfa_union(allowed, rectangles[i][1])
        else:
            allowed = Nfa.empty(tn.alphabet)
        forbidden = nfa_complement(allowed, cap)
        residual = trim(restrict_output(restrict_input(tn, l_sig), forbidden))
        if not relation_empty(residual):
            return False, shortest_pair(residual)
    return True, None


def bounded_counterexample(
    t: Transducer, theta: Permutation, mode: str, max_len: int
) -> Optional[str]:
    """Search all nonempty words up to ``max_len`` for a class refutation.

    mode "altering":   a word w with theta(w) in t(w) — refutes the claim
                       that the transducer never maps a word onto its
                       theta-image.
    mode "preserving": a word w with theta(w) not in t(w) — refutes the
                       claim that theta(w) is always among the outputs.

    Words are tried in shortlex order; the first refutation is returned,
    None when the bound is exhausted.
    """
    if mode not in ("altering", "preserving"):
        raise ValueError(f"unknown transducer class {mode!r}")
    if theta.alphabet != t.alphabet:
        raise ValueError("permutation alphabet does not match the transducer")
    tn = trim(normalize(t))
    symbols = tuple(theta.alphabet.symbols)
    words: list[str] = [""]
    for _ in range(max_len):
        words = [w + a for w in words for a in symbols]
        for w in words:
            hit = accepts_pair(tn, w, theta(w)) if tn.n_states else False
            if mode == "altering" and hit:
                return w
            if mode == "preserving" and not hit:
                return w
    return None
