"""Minimization of nice GFG-tNCWs: safe-centralization followed by the ≈-quotient."""
import logging
from dataclasses import dataclass
from typing import Collection, FrozenSet, List, Optional, Set

import numpy as np

from .automaton import (
    PreconditionError, TNCW, Transition, is_alpha_homogeneous, require_safe_deterministic,
    require_total,
)
from .language import safe_contains, state_equiv
from .nicer import make_nice
from .safe_structure import SafeDecomposition, ergodic_components, safe_components

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StateRelations:
    """Boolean matrices of ∼ and Lsafe-containment, rows indexing the first automaton.

    For relations inside one automaton ``safe_ge`` is None and the transpose
    of ``safe_le`` is used.
    """
    equiv: np.ndarray
    safe_le: np.ndarray
    safe_ge: Optional[np.ndarray] = None

    @property
    def subsafe(self) -> np.ndarray:
        """q ≾ s: equivalent languages and contained safe languages."""
        return self.equiv & self.safe_le

    @property
    def strong(self) -> np.ndarray:
        """q ≈ s: equivalent languages and equal safe languages."""
        ge = self.safe_le.T if self.safe_ge is None else self.safe_ge
        return self.equiv & self.safe_le & ge


@dataclass(frozen=True, eq=False)
class HRelation:
    """H over safe components: H(S, S') iff some q ∈ S and q' ∈ S' have q ≾ q'."""
    matrix: np.ndarray

    def transitive_closure(self) -> "HRelation":
        closure = self.matrix.copy()
        for k in range(closure.shape[0]):
            closure |= np.outer(closure[:, k], closure[k, :])
        return HRelation(closure)

    def is_transitive(self) -> bool:
        return bool(np.array_equal(self.transitive_closure().matrix, self.matrix))


def equivalence_matrix(a: TNCW) -> np.ndarray:
    n = a.num_states
    equiv = np.eye(n, dtype=bool)
    for q in range(n):
        for s in range(q + 1, n):
            equiv[q, s] = equiv[s, q] = state_equiv(a, q, s)
    return equiv


def compute_relations(a: TNCW) -> StateRelations:
    require_total(a)
    require_safe_deterministic(a)
    n = a.num_states
    safe_le = np.array([[safe_contains(a, q, s) for s in range(n)] for q in range(n)], dtype=bool)
    return StateRelations(equivalence_matrix(a), safe_le)


def compute_cross_relations(a: TNCW, b: TNCW) -> StateRelations:
    """∼ and safe-language containment between the states of `a` (rows) and `b` (columns)."""
    require_total(a)
    require_total(b)
    qa, qb = range(a.num_states), range(b.num_states)
    equiv = np.array([[state_equiv(a, q, s, b) for s in qb] for q in qa], dtype=bool)
    safe_le = np.array([[safe_contains(a, q, s, b) for s in qb] for q in qa], dtype=bool)
    safe_ge = np.array([[safe_contains(b, s, q, a) for s in qb] for q in qa], dtype=bool)
    return StateRelations(equiv, safe_le, safe_ge)


def _membership(d: SafeDecomposition) -> np.ndarray:
    m = np.zeros((len(d), len(d.component_of)), dtype=int)
    for q, c in enumerate(d.component_of):
        m[c, q] = 1
    return m


def compute_H(a: TNCW, d: SafeDecomposition, r: StateRelations) -> HRelation:
    m = _membership(d)
    h = HRelation((m @ r.subsafe.astype(int) @ m.T) > 0)
    if not h.is_transitive():
        raise PreconditionError("H relation is not transitive; is the automaton nice?")
    return h


def choose_frontier(h: HRelation, d: SafeDecomposition) -> FrozenSet[int]:
    """One component per ergodic SCC of H, with coverage and incomparability checked."""
    frontier = ergodic_components(d, h)
    for c in range(len(d)):
        if not any(h.matrix[c, f] for f in frontier):
            raise PreconditionError(f"component {c} reaches no frontier component")
    for f in frontier:
        for g in frontier:
            if f != g and h.matrix[f, g]:
                raise PreconditionError(f"frontier components {f} and {g} are comparable")
    log.debug("Frontier %s out of %d safe components", sorted(frontier), len(d))
    return frontier


def build_centralized(a: TNCW, frontier: Collection[int],
                      relations: Optional[StateRelations] = None) -> TNCW:
    """Restrict to the frontier components, redirecting α-transitions into them.

    ᾱ-transitions of frontier states are kept. A (q, σ) with no ᾱ-transition
    gets α-transitions to every frontier state equivalent to some α-successor.
    """
    d = safe_components(a)
    r = relations if relations is not None else compute_relations(a)
    kept = sorted(q for c in frontier for q in d.components[c])
    new_id = {q: i for i, q in enumerate(kept)}

    if a.initial in new_id:
        initial = new_id[a.initial]
    else:
        candidates = [q for q in kept if r.subsafe[a.initial, q]]
        if not candidates:
            raise PreconditionError("no frontier state is subsafe to the initial state")
        initial = new_id[candidates[0]]

    transitions: List[Transition] = []
    for q in kept:
        for s in a.letters:
            safe = a.safe_successors(q, s)
            if safe:
                if safe[0] not in new_id:
                    raise PreconditionError("ᾱ-transition leaves the frontier; is the automaton normal?")
                transitions.append(Transition(new_id[q], s, new_id[safe[0]], False))
                continue
            targets = [
                p for p in kept
                if any(r.equiv[p, x] for x in a.alpha_successors(q, s))
            ]
            if not targets:
                raise PreconditionError(f"no α-target for state {q} on {a.alphabet[s]!r}")
            transitions.extend(Transition(new_id[q], s, new_id[p], True) for p in targets)
    log.info("Centralized %d states into %d frontier states", a.num_states, len(kept))
    return TNCW(a.alphabet, len(kept), initial, frozenset(transitions))


def is_safe_centralized(a: TNCW, relations: Optional[StateRelations] = None) -> bool:
    """q ≾ s only for states in the same safe component."""
    d = safe_components(a)
    r = relations if relations is not None else compute_relations(a)
    rows, cols = np.nonzero(r.subsafe)
    return all(d.component_of[q] == d.component_of[s] for q, s in zip(rows, cols))


def is_safe_minimal(a: TNCW, relations: Optional[StateRelations] = None) -> bool:
    """No two distinct states are strongly equivalent."""
    r = relations if relations is not None else compute_relations(a)
    return not np.any(r.strong & ~np.eye(a.num_states, dtype=bool))


def quotient(b: TNCW, relations: Optional[StateRelations] = None) -> TNCW:
    """Merge ≈-classes; classes are numbered by their smallest member."""
    require_safe_deterministic(b)
    if not is_alpha_homogeneous(b):
        raise PreconditionError("automaton is not α-homogeneous")
    r = relations if relations is not None else compute_relations(b)
    if not is_safe_centralized(b, r):
        raise PreconditionError("automaton is not safe-centralized")
    strong = r.strong
    class_of = [-1] * b.num_states
    classes = 0
    for q in b.states:
        if class_of[q] < 0:
            for p in b.states:
                if strong[q, p]:
                    class_of[p] = classes
            classes += 1

    lifted: Set[Transition] = {
        Transition(class_of[t.src], t.symbol, class_of[t.dst], t.in_alpha) for t in b.transitions
    }
    triples = {}
    for t in lifted:
        if triples.setdefault(t.triple, t.in_alpha) != t.in_alpha:
            raise PreconditionError(f"class transition {t.triple} is both α and ᾱ")
    if classes < b.num_states:
        log.info("Quotient merged %d states into %d classes", b.num_states, classes)
    return TNCW(b.alphabet, classes, class_of[b.initial], frozenset(lifted))


def minimize(a: TNCW, determinize: bool = False) -> TNCW:
    """A minimal GFG-tNCW equivalent to `a`.

    Args:
        a: Total input, GFG and safe deterministic unless `determinize` is set
        determinize: Determinize any nondeterministic input first

    Returns:
        A nice, safe-centralized, safe-minimal and α-homogeneous automaton
    """
    nice = make_nice(a, determinize=determinize)
    relations = compute_relations(nice)
    d = safe_components(nice)
    frontier = choose_frontier(compute_H(nice, d, relations), d)
    centralized = build_centralized(nice, frontier, relations)
    result = quotient(centralized)
    log.info("Minimized %d states to %d", a.num_states, result.num_states)
    return result
