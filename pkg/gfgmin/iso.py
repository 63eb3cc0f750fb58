"""Isomorphism and safe isomorphism of automata, with witnessing bijections."""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from .automaton import TNCW

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bijection:
    forward: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "forward", tuple(self.forward))
        if sorted(self.forward) != list(range(len(self.forward))):
            raise ValueError(f"{list(self.forward)} is not a permutation")

    @property
    def inverse(self) -> Tuple[int, ...]:
        inv = [0] * len(self.forward)
        for i, j in enumerate(self.forward):
            inv[j] = i
        return tuple(inv)

    def __getitem__(self, q: int) -> int:
        return self.forward[q]

    def lines(self) -> List[str]:
        return [f"{i}->{j}" for i, j in enumerate(self.forward)]


def refine_colours(a: TNCW, with_alpha: bool = True, with_initial: bool = True) -> Tuple[int, ...]:
    """Isomorphism-invariant state colouring by iterated neighbourhood refinement.

    Colours are ranks of sorted signatures, so isomorphic automata get equal
    colours on corresponding states.
    """
    colours = tuple(int(with_initial and q == a.initial) for q in a.states)
    classes = len(set(colours))
    while True:
        signatures = []
        for q in a.states:
            out = sorted(
                (s, in_alpha, colours[d])
                for s in a.letters for d, in_alpha in a.successors(q, s)
                if with_alpha or not in_alpha
            )
            inc = sorted(
                (t.symbol, t.in_alpha, colours[t.src])
                for t in a.transitions
                if t.dst == q and (with_alpha or not t.in_alpha)
            )
            signatures.append((colours[q], tuple(out), tuple(inc)))
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = tuple(ranks[sig] for sig in signatures)
        if len(ranks) == classes:
            return refined
        colours, classes = refined, len(ranks)


def _edge_sets(a: TNCW, with_alpha: bool) -> Tuple[Set[Tuple[int, int, int]], Set[Tuple[int, int, int]]]:
    safe = {t.triple for t in a.transitions if not t.in_alpha}
    alpha = {t.triple for t in a.transitions if t.in_alpha} if with_alpha else set()
    return safe, alpha


def _search(a: TNCW, b: TNCW, with_alpha: bool,
            allowed: Optional[np.ndarray] = None) -> Optional[Bijection]:
    if a.num_states != b.num_states or a.alphabet != b.alphabet:
        return None
    ca = refine_colours(a, with_alpha, with_initial=False)
    cb = refine_colours(b, with_alpha, with_initial=False)
    if sorted(ca) != sorted(cb):
        return None
    a_edges, b_edges = _edge_sets(a, with_alpha), _edge_sets(b, with_alpha)
    n = a.num_states
    forward: List[int] = []
    used = [False] * n

    def consistent(q: int, s: int) -> bool:
        for p in range(q + 1):
            r = s if p == q else forward[p]
            for sigma in a.letters:
                for ea, eb in zip(a_edges, b_edges):
                    if ((q, sigma, p) in ea) != ((s, sigma, r) in eb):
                        return False
                    if ((p, sigma, q) in ea) != ((r, sigma, s) in eb):
                        return False
        return True

    def extend(q: int) -> bool:
        if q == n:
            return True
        for s in range(n):
            if used[s] or cb[s] != ca[q]:
                continue
            if allowed is not None and not allowed[q, s]:
                continue
            if not consistent(q, s):
                continue
            used[s] = True
            forward.append(s)
            if extend(q + 1):
                return True
            forward.pop()
            used[s] = False
        return False

    return Bijection(tuple(forward)) if extend(0) else None


def safe_isomorphic(a: TNCW, b: TNCW, seed_with_relations: bool = False) -> Optional[Bijection]:
    """A bijection respecting ᾱ-transitions, or None.

    Without seeding, the lexicographically smallest such bijection is
    returned. With `seed_with_relations` the search first only pairs
    strongly equivalent states across the two automata, which is where a
    bijection between equivalent minimal nice automata lies, and falls back
    to the unrestricted search.
    """
    if seed_with_relations and a.num_states == b.num_states and a.alphabet == b.alphabet:
        from .minimizer import compute_cross_relations

        found = _search(a, b, with_alpha=False, allowed=compute_cross_relations(a, b).strong)
        if found is not None:
            return found
        log.debug("No ≈-respecting safe isomorphism, falling back to full search")
    return _search(a, b, with_alpha=False)


def isomorphic(a: TNCW, b: TNCW) -> Optional[Bijection]:
    """A bijection respecting both ᾱ- and α-transitions, or None."""
    return _search(a, b, with_alpha=True)
