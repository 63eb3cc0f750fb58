"""Turning an automaton into an equivalent nice GFG-tNCW, and checking niceness."""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .automaton import (
    PreconditionError, TNCW, Transition, ensure_total, is_deterministic,
    is_safe_deterministic, reachable_states, renumber, require_total,
    restrict_to_reachable,
)
from .games import gfg_check
from .language import breakpoint_determinize, lang_contains, state_equiv
from .safe_structure import is_normal, normalize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NicenessReport:
    reachable: bool
    normal: bool
    safe_deterministic: bool
    semantically_deterministic: bool
    all_states_gfg: Optional[bool] = None

    @property
    def nice(self) -> bool:
        """All flags hold; an uncomputed GFG flag counts as not nice."""
        return bool(self.reachable and self.normal and self.safe_deterministic
                    and self.semantically_deterministic and self.all_states_gfg)


def semantically_determinize(a: TNCW) -> TNCW:
    """Keep only covering transitions.

    A transition (q, σ, s) covers when every σ-successor of q has a language
    contained in that of s.
    """
    require_total(a)
    cache: Dict[Tuple[int, int], bool] = {}

    def contained(x: int, y: int) -> bool:
        if (x, y) not in cache:
            cache[(x, y)] = x == y or lang_contains(a, x, a, y)
        return cache[(x, y)]

    kept = []
    for q in a.states:
        for s in a.letters:
            succ = a.successors(q, s)
            for dst, in_alpha in succ:
                if all(contained(other, dst) for other, _ in succ):
                    kept.append(Transition(q, s, dst, in_alpha))
    if len(kept) < len(a.transitions):
        log.info("Removed %d non-covering transitions", len(a.transitions) - len(kept))
    return TNCW(a.alphabet, a.num_states, a.initial, frozenset(kept))


def gfg_states(a: TNCW) -> Tuple[bool, ...]:
    return tuple(gfg_check(a.with_initial(q))[0] for q in a.states)


def remove_non_gfg_states(a: TNCW) -> TNCW:
    """Delete states that are not GFG, then restore totality with a rejecting sink if needed."""
    require_total(a)
    if is_deterministic(a):
        return a
    flags = gfg_states(a)
    if all(flags):
        return a
    if not flags[a.initial]:
        raise PreconditionError("input is not GFG")
    survivors = [q for q in a.states if flags[q]]
    log.info("Removing %d non-GFG states", a.num_states - len(survivors))
    return ensure_total(renumber(a, survivors))


def make_nice(a: TNCW, determinize: bool = False) -> TNCW:
    """An equivalent nice GFG-tNCW.

    Args:
        a: Total input automaton, safe deterministic unless `determinize` is set
        determinize: Determinize any nondeterministic input first, which also
            accepts inputs that are not GFG

    Raises:
        PreconditionError: If the input is not total, not safe deterministic
            (without `determinize`) or not GFG
    """
    require_total(a)
    if determinize and not is_deterministic(a):
        log.info("Determinizing %d states", a.num_states)
        a = breakpoint_determinize(a)
    elif not is_safe_deterministic(a):
        raise PreconditionError("input not safe-deterministic")
    size = a.num_states
    a = remove_non_gfg_states(a)
    a = semantically_determinize(a)
    a = restrict_to_reachable(a)
    a = normalize(a)
    log.info("Nice automaton has %d states (from %d)", a.num_states, size)
    return a


def is_semantically_deterministic(a: TNCW) -> bool:
    for q in a.states:
        for s in a.letters:
            succ = [d for d, _ in a.successors(q, s)]
            if any(not state_equiv(a, succ[0], other) for other in succ[1:]):
                return False
    return True


def validate_nice(a: TNCW, check_gfg: bool = True) -> NicenessReport:
    return NicenessReport(
        reachable=len(reachable_states(a)) == a.num_states,
        normal=is_normal(a),
        safe_deterministic=is_safe_deterministic(a),
        semantically_deterministic=is_semantically_deterministic(a),
        all_states_gfg=(all(gfg_states(a)) if a.is_total() else False) if check_gfg else None,
    )
