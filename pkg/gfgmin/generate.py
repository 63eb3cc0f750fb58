"""Seeded random automata for property tests and the ``gen`` command."""
import logging
import string

import numpy as np

from .automaton import Alphabet, TNCW, Transition
from .safe_structure import normalize

log = logging.getLogger(__name__)


def random_tncw(states: int, symbols: int, seed: int, deterministic: bool = False,
                alpha_probability: float = 0.3,
                nondeterminism_probability: float = 0.2) -> TNCW:
    """A random total, safe-deterministic, normal tNCW.

    Each (q, σ) gets at most one ᾱ-transition; with `deterministic` it gets
    exactly one transition in total. Extra α-transitions are added with
    `nondeterminism_probability`.
    """
    if not 1 <= symbols <= len(string.ascii_lowercase):
        raise ValueError(f"symbol count must be between 1 and {len(string.ascii_lowercase)}")
    if states < 1:
        raise ValueError("state count must be positive")
    rng = np.random.default_rng(seed)
    transitions = []
    for q in range(states):
        for s in range(symbols):
            targets = {int(rng.integers(0, states)): bool(rng.random() < alpha_probability)}
            if not deterministic:
                for extra in range(states):
                    if extra not in targets and rng.random() < nondeterminism_probability:
                        targets[extra] = True
            transitions.extend(Transition(q, s, d, in_alpha) for d, in_alpha in targets.items())
    a = TNCW(Alphabet(tuple(string.ascii_lowercase[:symbols])), states, 0, frozenset(transitions))
    log.debug("Generated %d-state automaton from seed %d", states, seed)
    return normalize(a)
