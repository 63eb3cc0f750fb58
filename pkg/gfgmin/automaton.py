"""Transition-based co-Büchi automata: data model and structural predicates."""
import logging
from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

log = logging.getLogger(__name__)


class AutomatonError(ValueError):
    """Raised when an automaton is structurally invalid."""


class PreconditionError(ValueError):
    """Raised when an operation is applied to an automaton that lacks a required property."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered, non-empty list of distinct symbol names."""
    symbols: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise AutomatonError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise AutomatonError(f"duplicate symbol in alphabet {list(self.symbols)}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def index(self, symbol: str) -> int:
        """Return the position of a symbol name."""
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise AutomatonError(f"unknown symbol {symbol!r}") from None


@dataclass(frozen=True, order=True)
class Transition:
    src: int
    symbol: int
    dst: int
    in_alpha: bool = False

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.src, self.symbol, self.dst)


Edge = Tuple[int, Union[int, str], int, bool]


@dataclass(frozen=True)
class TNCW:
    """A transition-based co-Büchi automaton over dense integer states.

    A run is accepting iff it traverses α-transitions only finitely often.
    The transition function may be partial; operations that need totality
    check for it and raise PreconditionError.
    """
    alphabet: Alphabet
    num_states: int
    initial: int
    transitions: FrozenSet[Transition]

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        if self.num_states < 1:
            raise AutomatonError("automaton needs at least one state")
        if not 0 <= self.initial < self.num_states:
            raise AutomatonError(f"initial state {self.initial} out of range")
        seen = set()
        for t in self.transitions:
            if not (0 <= t.src < self.num_states and 0 <= t.dst < self.num_states):
                raise AutomatonError(f"transition {t.triple} has an endpoint out of range")
            if not 0 <= t.symbol < len(self.alphabet):
                raise AutomatonError(f"transition {t.triple} has an unknown symbol")
            if t.triple in seen:
                raise AutomatonError(f"duplicate transition {t.triple}")
            seen.add(t.triple)

    @classmethod
    def from_edges(cls, symbols: Sequence[str], num_states: int, initial: int,
                   edges: Iterable[Edge]) -> "TNCW":
        """Build an automaton from (src, symbol, dst, in_alpha) tuples.

        Symbols may be given by name or by index.
        """
        alphabet = Alphabet(tuple(symbols))
        transitions = []
        for src, symbol, dst, in_alpha in edges:
            index = alphabet.index(symbol) if isinstance(symbol, str) else symbol
            transitions.append(Transition(src, index, dst, bool(in_alpha)))
        return cls(alphabet, num_states, initial, frozenset(transitions))

    @property
    def states(self) -> range:
        return range(self.num_states)

    @property
    def letters(self) -> range:
        return range(len(self.alphabet))

    @cached_property
    def _table(self) -> List[List[Tuple[Tuple[int, bool], ...]]]:
        table: List[List[List[Tuple[int, bool]]]] = [
            [[] for _ in self.letters] for _ in self.states
        ]
        for t in self.transitions:
            table[t.src][t.symbol].append((t.dst, t.in_alpha))
        return [[tuple(sorted(cell)) for cell in row] for row in table]

    def successors(self, q: int, symbol: int) -> Tuple[Tuple[int, bool], ...]:
        """All (dst, in_alpha) pairs for (q, symbol), ordered by dst."""
        return self._table[q][symbol]

    def safe_successors(self, q: int, symbol: int) -> Tuple[int, ...]:
        return tuple(d for d, in_alpha in self._table[q][symbol] if not in_alpha)

    def alpha_successors(self, q: int, symbol: int) -> Tuple[int, ...]:
        return tuple(d for d, in_alpha in self._table[q][symbol] if in_alpha)

    def sorted_transitions(self) -> List[Transition]:
        return sorted(self.transitions)

    def is_total(self) -> bool:
        return all(self._table[q][s] for q in self.states for s in self.letters)

    def with_initial(self, q: int) -> "TNCW":
        """The same automaton started in state q."""
        return replace(self, initial=q)

    @property
    def alpha_count(self) -> int:
        return sum(1 for t in self.transitions if t.in_alpha)


@dataclass(frozen=True)
class StructuralReport:
    deterministic: bool
    safe_deterministic: bool
    alpha_homogeneous: bool
    normal: bool
    total: bool
    all_reachable: bool

    def items(self) -> List[Tuple[str, bool]]:
        return list(self.__dict__.items())


def is_deterministic(a: TNCW) -> bool:
    return all(len(a.successors(q, s)) == 1 for q in a.states for s in a.letters)


def is_safe_deterministic(a: TNCW) -> bool:
    return all(len(a.safe_successors(q, s)) <= 1 for q in a.states for s in a.letters)


def is_alpha_homogeneous(a: TNCW) -> bool:
    return all(
        not a.safe_successors(q, s) or not a.alpha_successors(q, s)
        for q in a.states for s in a.letters
    )


def reachable_states(a: TNCW) -> List[int]:
    """States reachable from the initial state, in BFS discovery order.

    Ties are broken by symbol order, then by destination id.
    """
    order = [a.initial]
    seen = {a.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for s in a.letters:
            for dst, _ in a.successors(q, s):
                if dst not in seen:
                    seen.add(dst)
                    order.append(dst)
                    queue.append(dst)
    return order


def require_total(a: TNCW) -> None:
    if not a.is_total():
        raise PreconditionError("automaton is not total")


def require_safe_deterministic(a: TNCW) -> None:
    if not is_safe_deterministic(a):
        raise PreconditionError("automaton is not safe deterministic")


def ensure_total(a: TNCW) -> TNCW:
    """Complete a partial automaton with a rejecting sink.

    A total automaton is returned unchanged. Otherwise one sink state with
    α self-loops is appended and every missing (q, σ) gets an α-transition
    to it.
    """
    if a.is_total():
        return a
    sink = a.num_states
    added = [
        Transition(q, s, sink, True)
        for q in a.states for s in a.letters if not a.successors(q, s)
    ]
    added.extend(Transition(sink, s, sink, True) for s in a.letters)
    log.debug("Added rejecting sink %d for %d missing transitions", sink, len(added) - len(a.letters))
    return TNCW(a.alphabet, a.num_states + 1, a.initial, a.transitions | frozenset(added))


def renumber(a: TNCW, order: Sequence[int]) -> TNCW:
    """Keep the states in `order`, numbering them by position.

    Transitions touching a dropped state are dropped as well.
    """
    new_id: Dict[int, int] = {q: i for i, q in enumerate(order)}
    transitions = frozenset(
        Transition(new_id[t.src], t.symbol, new_id[t.dst], t.in_alpha)
        for t in a.transitions if t.src in new_id and t.dst in new_id
    )
    return TNCW(a.alphabet, len(order), new_id[a.initial], transitions)


def restrict_to_reachable(a: TNCW) -> TNCW:
    """Drop unreachable states and renumber by BFS discovery order."""
    order = reachable_states(a)
    if len(order) < a.num_states:
        log.debug("Dropping %d unreachable states", a.num_states - len(order))
    return renumber(a, order)


def structural_report(a: TNCW) -> StructuralReport:
    from .safe_structure import is_normal

    return StructuralReport(
        deterministic=is_deterministic(a),
        safe_deterministic=is_safe_deterministic(a),
        alpha_homogeneous=is_alpha_homogeneous(a),
        normal=is_normal(a),
        total=a.is_total(),
        all_reachable=len(reachable_states(a)) == a.num_states,
    )
