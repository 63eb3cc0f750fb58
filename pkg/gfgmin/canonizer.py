"""α-saturation and canonical relabeling of nice GFG-tNCWs."""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .automaton import (
    PreconditionError, TNCW, Transition, is_alpha_homogeneous, require_safe_deterministic,
    require_total,
)
from .iso import refine_colours
from .minimizer import equivalence_matrix
from .safe_structure import safe_components

log = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class AllowedSet:
    """Allowed triples (q, σ, s) that are not transitions.

    A triple is allowed when q already has a σ-transition to some s' ∼ s.
    """
    triples: FrozenSet[Triple]

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self.triples

    def from_state(self, q: int, symbol: int) -> List[int]:
        return sorted(s for (p, sigma, s) in self.triples if p == q and sigma == symbol)


def allowed_transitions(a: TNCW, equiv: Optional[np.ndarray] = None) -> AllowedSet:
    require_total(a)
    eq = equivalence_matrix(a) if equiv is None else equiv
    present = {t.triple for t in a.transitions}
    triples = set()
    for q in a.states:
        for sigma in a.letters:
            targets = [d for d, _ in a.successors(q, sigma)]
            for s in a.states:
                if (q, sigma, s) not in present and any(eq[s, d] for d in targets):
                    triples.add((q, sigma, s))
    return AllowedSet(frozenset(triples))


def _with_alpha(a: TNCW, triples) -> TNCW:
    added = frozenset(Transition(q, sigma, s, True) for q, sigma, s in triples)
    return TNCW(a.alphabet, a.num_states, a.initial, a.transitions | added)


def alpha_maximize(a: TNCW) -> TNCW:
    """Add every allowed non-transition as an α-transition."""
    allowed = allowed_transitions(a)
    log.debug("Adding %d allowed α-transitions", len(allowed))
    return _with_alpha(a, allowed.triples)


def alpha_maximize_homogeneous(a: TNCW) -> TNCW:
    """Add allowed α-transitions only where (q, σ) has no ᾱ-transition."""
    if not is_alpha_homogeneous(a):
        raise PreconditionError("automaton is not α-homogeneous")
    allowed = allowed_transitions(a)
    return _with_alpha(a, [
        (q, sigma, s) for q, sigma, s in allowed.triples
        if not a.safe_successors(q, sigma)
    ])


def is_alpha_maximal(a: TNCW) -> bool:
    return not allowed_transitions(a)


def is_alpha_maximal_up_to_homogeneity(a: TNCW) -> bool:
    allowed = allowed_transitions(a)
    return all(a.safe_successors(q, sigma) for q, sigma, _ in allowed.triples)


def _component_order(a: TNCW, component: Tuple[int, ...], root: int) -> List[int]:
    """BFS of a safe component along ᾱ-moves, symbols in order."""
    members = set(component)
    order = [root]
    seen = {root}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for s in a.letters:
            for d in a.safe_successors(q, s):
                if d in members and d not in seen:
                    seen.add(d)
                    order.append(d)
                    queue.append(d)
    return order


def _encode(a: TNCW, order: List[int]):
    new_id = {q: i for i, q in enumerate(order)}
    transitions = tuple(sorted(
        Transition(new_id[t.src], t.symbol, new_id[t.dst], t.in_alpha) for t in a.transitions
    ))
    return (new_id[a.initial], transitions)


def canonical_relabel(a: TNCW) -> TNCW:
    """Renumber states so that isomorphic automata get identical encodings.

    Safe components are ordered by size and colour multiset; inside each
    component, states follow BFS along ᾱ-moves from a root of minimal
    colour. All remaining choices (roots, order of tied components) are
    tried and the smallest encoding wins.
    """
    require_safe_deterministic(a)
    colours = refine_colours(a, with_alpha=True, with_initial=True)
    d = safe_components(a)

    def key(c: int):
        members = d.components[c]
        return (len(members), tuple(sorted(colours[q] for q in members)))

    ranked = sorted(range(len(d)), key=key)
    groups = [list(g) for _, g in itertools.groupby(ranked, key=key)]

    def orders(component: Tuple[int, ...]) -> List[List[int]]:
        best = min(colours[q] for q in component)
        return [_component_order(a, component, r) for r in component if colours[r] == best]

    per_component: Dict[int, List[List[int]]] = {c: orders(d.components[c]) for c in range(len(d))}
    best = None
    for arrangement in itertools.product(*(itertools.permutations(g) for g in groups)):
        sequence = [c for group in arrangement for c in group]
        for choice in itertools.product(*(per_component[c] for c in sequence)):
            order = [q for part in choice for q in part]
            encoding = _encode(a, order)
            if best is None or encoding < best:
                best = encoding
    initial, transitions = best
    return TNCW(a.alphabet, a.num_states, initial, frozenset(transitions))
