"""Semantic oracles: lasso acceptance, breakpoint determinization and containment."""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .automaton import (
    Alphabet, PreconditionError, TNCW, Transition, ensure_total,
    require_safe_deterministic,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word prefix·period^ω over symbol indices."""
    prefix: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("lasso period must be non-empty")

    @classmethod
    def of(cls, alphabet: Alphabet, prefix: Sequence[str], period: Sequence[str]) -> "LassoWord":
        """Build from symbol names."""
        return cls(tuple(alphabet.index(s) for s in prefix), tuple(alphabet.index(s) for s in period))

    def render(self, alphabet: Alphabet) -> str:
        u = " ".join(alphabet[s] for s in self.prefix)
        v = " ".join(alphabet[s] for s in self.period)
        return f"{u} ({v})^w" if u else f"({v})^w"


def accepts(a: TNCW, w: LassoWord) -> bool:
    """True iff some run of `a` on w is accepting.

    Works on (state, position in period) pairs: a run accepts iff from some
    reachable pair it can continue forever on ᾱ-transitions.
    """
    current: Set[int] = {a.initial}
    for s in w.prefix:
        current = {d for q in current for d, _ in a.successors(q, s)}
    n = len(w.period)
    reachable: Set[Tuple[int, int]] = {(q, 0) for q in current}
    queue = deque(reachable)
    while queue:
        q, i = queue.popleft()
        for d, _ in a.successors(q, w.period[i]):
            node = (d, (i + 1) % n)
            if node not in reachable:
                reachable.add(node)
                queue.append(node)
    alive = reachable
    while True:
        keep = {
            (q, i) for q, i in alive
            if any((d, (i + 1) % n) in alive for d in a.safe_successors(q, w.period[i]))
        }
        if keep == alive:
            return bool(alive)
        alive = keep


def breakpoint_determinize(a: TNCW) -> TNCW:
    """Equivalent deterministic automaton via the subset-with-breakpoint construction.

    Macro-states are pairs (S, O) where O ⊆ S holds the states reached by a
    run with no α-transition since the last breakpoint. When O empties the
    transition is in α and O is reset to the new S.
    """
    start = (frozenset([a.initial]), frozenset([a.initial]))
    index: Dict[Tuple[FrozenSet[int], FrozenSet[int]], int] = {start: 0}
    queue = deque([start])
    transitions: List[Transition] = []
    while queue:
        macro = queue.popleft()
        src = index[macro]
        states, obligations = macro
        for s in a.letters:
            succ = frozenset(d for q in sorted(states) for d, _ in a.successors(q, s))
            if not succ:
                continue
            kept = frozenset(d for q in sorted(obligations) for d in a.safe_successors(q, s))
            reset = not kept
            target = (succ, succ if reset else kept)
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            transitions.append(Transition(src, s, index[target], reset))
    log.debug("Determinized %d states into %d macro-states", a.num_states, len(index))
    return TNCW(a.alphabet, len(index), 0, frozenset(transitions))


@lru_cache(maxsize=1024)
def _determinized(b: TNCW, s: int) -> TNCW:
    return breakpoint_determinize(ensure_total(b).with_initial(s))


def _require_same_alphabet(a: TNCW, b: TNCW) -> None:
    if a.alphabet != b.alphabet:
        raise PreconditionError("automata are over different alphabets")


def find_counterexample(a: TNCW, q: int, b: TNCW, s: int) -> Optional[LassoWord]:
    """A lasso in L(a^q) but not in L(b^s), or None when L(a^q) ⊆ L(b^s).

    Searches the product of a^q with the determinization of b^s for a
    reachable cycle that uses only ᾱ-transitions of a and at least one
    α-transition of the deterministic automaton.
    """
    _require_same_alphabet(a, b)
    det = _determinized(b, s)
    start = (q, 0)
    parent: Dict[Tuple[int, int], Optional[Tuple[Tuple[int, int], int]]] = {start: None}
    order = [start]
    queue = deque(order)
    safe_part = nx.DiGraph()
    breakpoints: Set[Tuple[Tuple[int, int], Tuple[int, int]]] = set()
    while queue:
        node = queue.popleft()
        x, d = node
        for sigma in a.letters:
            (d_next, d_alpha), = det.successors(d, sigma)
            for x_next, x_alpha in a.successors(x, sigma):
                nxt = (x_next, d_next)
                if nxt not in parent:
                    parent[nxt] = (node, sigma)
                    order.append(nxt)
                    queue.append(nxt)
                if x_alpha:
                    continue
                if not safe_part.has_edge(node, nxt) or (d_alpha and (node, nxt) not in breakpoints):
                    safe_part.add_edge(node, nxt, symbol=sigma)
                if d_alpha:
                    breakpoints.add((node, nxt))

    if not breakpoints:
        return None
    scc_of = {}
    for i, scc in enumerate(nx.strongly_connected_components(safe_part)):
        for node in scc:
            scc_of[node] = i
    for u in order:
        if u not in safe_part:
            continue
        for v in sorted(safe_part.successors(u)):
            if (u, v) in breakpoints and scc_of[u] == scc_of[v]:
                return _witness(parent, safe_part, u, v)
    return None


def _witness(parent, graph: nx.DiGraph, u, v) -> LassoWord:
    prefix: List[int] = []
    node = u
    while parent[node] is not None:
        node, sigma = parent[node]
        prefix.append(sigma)
    prefix.reverse()
    period = [graph.edges[u, v]["symbol"]]
    path = nx.shortest_path(graph, v, u)
    period.extend(graph.edges[x, y]["symbol"] for x, y in zip(path, path[1:]))
    return LassoWord(tuple(prefix), tuple(period))


def lang_contains(a: TNCW, q: int, b: TNCW, s: int) -> bool:
    """L(a^q) ⊆ L(b^s)."""
    return find_counterexample(a, q, b, s) is None


def state_equiv(a: TNCW, q: int, s: int, b: Optional[TNCW] = None) -> bool:
    """q ∼ s, where s is a state of `b` (defaults to `a`)."""
    b = a if b is None else b
    return lang_contains(a, q, b, s) and lang_contains(b, s, a, q)


def distinguishing_lasso(a: TNCW, b: TNCW) -> Optional[LassoWord]:
    """A lasso accepted by exactly one of the two automata, or None if equivalent."""
    return (find_counterexample(a, a.initial, b, b.initial)
            or find_counterexample(b, b.initial, a, a.initial))


def _live_states(a: TNCW) -> Set[int]:
    live = set(a.states)
    while True:
        keep = {q for q in live if any(d in live for s in a.letters for d in a.safe_successors(q, s))}
        if keep == live:
            return live
        live = keep


def safe_contains(a: TNCW, q: int, s: int, b: Optional[TNCW] = None) -> bool:
    """Lsafe(a^q) ⊆ Lsafe(b^s) for safe-deterministic automata."""
    b = a if b is None else b
    require_safe_deterministic(a)
    require_safe_deterministic(b)
    _require_same_alphabet(a, b)
    live_a, live_b = _live_states(a), _live_states(b)
    seen = {(q, s)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for sigma in a.letters:
            xs = [d for d in a.safe_successors(x, sigma) if d in live_a]
            if not xs:
                continue
            ys = [d for d in b.safe_successors(y, sigma) if d in live_b]
            if not ys:
                return False
            pair = (xs[0], ys[0])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def enumerate_prunings(a: TNCW) -> Iterator[TNCW]:
    """Every deterministic automaton keeping exactly one transition per (q, σ)."""
    cells = [(q, s) for q in a.states for s in a.letters]
    choices = [a.successors(q, s) for q, s in cells]
    if any(not c for c in choices):
        raise PreconditionError("automaton is not total")
    for pick in itertools.product(*choices):
        transitions = frozenset(
            Transition(q, s, dst, in_alpha) for (q, s), (dst, in_alpha) in zip(cells, pick)
        )
        yield TNCW(a.alphabet, a.num_states, a.initial, transitions)


def random_lassos(alphabet: Alphabet, count: int, max_len: int, seed: int) -> List[LassoWord]:
    """Reproducible sample of lassos with prefix length in [0, max_len] and period length in [1, max_len]."""
    rng = np.random.default_rng(seed)
    k = len(alphabet)
    words = []
    for _ in range(count):
        prefix_len = int(rng.integers(0, max_len + 1))
        period_len = int(rng.integers(1, max_len + 1))
        prefix = tuple(int(x) for x in rng.integers(0, k, size=prefix_len))
        period = tuple(int(x) for x in rng.integers(0, k, size=period_len))
        words.append(LassoWord(prefix, period))
    return words


def sampled_disagreement(a: TNCW, b: TNCW, words: Sequence[LassoWord]) -> Optional[LassoWord]:
    """First sampled lasso on which the two automata disagree."""
    _require_same_alphabet(a, b)
    for w in words:
        if accepts(a, w) != accepts(b, w):
            return w
    return None
