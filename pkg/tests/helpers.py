"""Shared builders for the test suite."""
from collections import deque
from pathlib import Path
from typing import Sequence

from gfgmin.automaton import TNCW, Transition
from gfgmin.hoa import parse_hoa
from gfgmin.language import LassoWord
from gfgmin.safe_structure import normalize

FIXTURES = Path(__file__).parent.parent / "fixtures"


def load_fixture(name: str) -> TNCW:
    return parse_hoa((FIXTURES / f"{name}.hoa").read_bytes())


def permute(a: TNCW, perm: Sequence[int]) -> TNCW:
    """Rename every state q to perm[q]."""
    return TNCW(
        a.alphabet, a.num_states, perm[a.initial],
        frozenset(Transition(perm[t.src], t.symbol, perm[t.dst], t.in_alpha) for t in a.transitions),
    )


def without(a: TNCW, *triples) -> TNCW:
    drop = set(triples)
    return TNCW(a.alphabet, a.num_states, a.initial,
                frozenset(t for t in a.transitions if t.triple not in drop))


def with_alpha(a: TNCW, *triples) -> TNCW:
    added = frozenset(Transition(q, s, d, True) for q, s, d in triples)
    return TNCW(a.alphabet, a.num_states, a.initial, a.transitions | added)


def double_cover(a: TNCW) -> TNCW:
    """Two copies (q, bit) -> 2q + bit; ᾱ-moves flip the bit, α-moves reach both copies."""
    transitions = []
    for t in a.transitions:
        for bit in (0, 1):
            src = 2 * t.src + bit
            if t.in_alpha:
                transitions.extend(Transition(src, t.symbol, 2 * t.dst + b, True) for b in (0, 1))
            else:
                transitions.append(Transition(src, t.symbol, 2 * t.dst + 1 - bit, False))
    return TNCW(a.alphabet, 2 * a.num_states, 2 * a.initial, frozenset(transitions))


def token_automaton() -> TNCW:
    """Subset automaton of the three-token game on vertices 1..3, started from {1}.

    sigma rotates every token, pi swaps the tokens on 1 and 2, and # chops
    the token on 1; chopping the last token is the breakpoint to {2, 3}.
    """
    rotate = {1: 2, 2: 3, 3: 1}
    swap = {1: 2, 2: 1, 3: 3}

    def step(tokens, letter):
        if letter == 0:
            return frozenset(rotate[i] for i in tokens), False
        if letter == 1:
            return frozenset(swap[i] for i in tokens), False
        rest = tokens - {1}
        return (rest, False) if rest else (frozenset({2, 3}), True)

    start = frozenset({1})
    index = {start: 0}
    queue = deque([start])
    transitions = []
    while queue:
        tokens = queue.popleft()
        for letter in range(3):
            target, breakpoint = step(tokens, letter)
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            transitions.append(Transition(index[tokens], letter, index[target], breakpoint))
    a = TNCW.from_edges(["sigma", "pi", "#"], len(index), 0,
                        [(t.src, t.symbol, t.dst, t.in_alpha) for t in transitions])
    return normalize(a)


def safe_accepts(a: TNCW, q: int, w: LassoWord) -> bool:
    """Whether the unique ᾱ-run of a safe-deterministic automaton from q reads w forever."""
    for s in w.prefix:
        succ = a.safe_successors(q, s)
        if not succ:
            return False
        q = succ[0]
    seen = set()
    pos = 0
    while (q, pos) not in seen:
        seen.add((q, pos))
        succ = a.safe_successors(q, w.period[pos])
        if not succ:
            return False
        q = succ[0]
        pos = (pos + 1) % len(w.period)
    return True


def lookahead_automaton() -> TNCW:
    """Recognizes every word over {a, b} but only by guessing the letter after each a.

    State 0 reads b in place and on a guesses 1 (next is a) or 2 (next is b);
    a wrong guess falls into the rejecting sink 3.
    """
    return TNCW.from_edges(["a", "b"], 4, 0, [
        (0, "a", 1, False), (0, "a", 2, False), (0, "b", 0, False),
        (1, "a", 0, False), (1, "b", 3, True),
        (2, "b", 0, False), (2, "a", 3, True),
        (3, "a", 3, True), (3, "b", 3, True),
    ])
