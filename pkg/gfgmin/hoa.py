"""Reading and writing the HOA v1 subset used for co-Büchi automata.

Only explicit edges of the form ``[k] dst {0}`` are accepted, where ``k`` is
a symbol index and ``{0}`` marks an α-transition. The symbol list is given by
a ``symbols:`` header (``AP:`` and ``Alphabet:`` are read the same way).
"""
import logging
import re
from typing import List, Optional, Set, Tuple

from .automaton import Alphabet, AutomatonError, TNCW, Transition, ensure_total

log = logging.getLogger(__name__)

_HEADER = re.compile(r"([A-Za-z][A-Za-z0-9_-]*):\s*(.*)$")
_EDGE = re.compile(r"\[\s*(\d+)\s*\]\s+(\d+)\s*(\{\s*(\d*)\s*\})?\s*$")
_STATE = re.compile(r"State:\s*(\d+)\s*(\"(?:[^\"\\]|\\.)*\")?\s*(\{.*\})?\s*$")
_QUOTED = re.compile(r'"((?:[^"\\]|\\.)*)"')
_IGNORED_HEADERS = {"name", "tool", "properties"}


class HoaParseError(ValueError):
    """Raised for malformed or unsupported HOA input."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


_LINE_BREAKS = {"n": "\n", "r": "\r"}


def _unescape(text: str) -> str:
    return re.sub(r"\\(.)", lambda m: _LINE_BREAKS.get(m.group(1), m.group(1)), text)


def _escape(text: str) -> str:
    return (text.replace("\\", "\\\\").replace('"', '\\"')
            .replace("\n", "\\n").replace("\r", "\\r"))


def _column(raw: str) -> int:
    return len(raw) - len(raw.lstrip()) + 1


def _parse_symbols(value: str, lineno: int, col: int) -> Tuple[str, ...]:
    head = value.split(None, 1)
    if not head or not head[0].isdigit():
        raise HoaParseError("expected a symbol count", lineno, col)
    count = int(head[0])
    names = tuple(_unescape(s) for s in _QUOTED.findall(head[1] if len(head) > 1 else ""))
    if len(names) != count:
        raise HoaParseError(f"declared {count} symbols but listed {len(names)}", lineno, col)
    return names


def parse_hoa(text: bytes, complete: bool = False) -> TNCW:
    """Parse an automaton from HOA text.

    Args:
        text: Raw bytes (UTF-8) of the HOA document
        complete: Add a rejecting sink instead of failing on a non-total automaton

    Returns:
        The parsed TNCW

    Raises:
        HoaParseError: On syntax errors, non-co-Büchi acceptance, duplicate
            transitions, unsupported features or a non-total automaton
    """
    try:
        decoded = text.decode("utf-8")
    except UnicodeDecodeError as e:
        raise HoaParseError(f"input is not valid UTF-8: {e.reason}", 1) from None
    lines = decoded.replace("\r\n", "\n").replace("\r", "\n").split("\n")

    num_states: Optional[int] = None
    initial: Optional[int] = None
    symbols: Optional[Tuple[str, ...]] = None
    seen_version = False
    seen_acceptance = False
    body_start = None

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        col = _column(raw)
        if line == "--BODY--":
            body_start = lineno
            break
        match = _HEADER.match(line)
        if not match:
            raise HoaParseError(f"malformed header line {line!r}", lineno, col)
        key, value = match.group(1), match.group(2).strip()
        if not seen_version:
            if key != "HOA" or value != "v1":
                raise HoaParseError("document must start with 'HOA: v1'", lineno, col)
            seen_version = True
        elif key == "States":
            if not value.isdigit():
                raise HoaParseError("States: expects a number", lineno, col)
            num_states = int(value)
        elif key == "Start":
            if initial is not None:
                raise HoaParseError("multiple initial states are not supported", lineno, col)
            if not value.isdigit():
                raise HoaParseError("Start: expects a single state id", lineno, col)
            initial = int(value)
        elif key in ("symbols", "AP", "Alphabet"):
            symbols = _parse_symbols(value, lineno, col)
        elif key == "acc-name":
            if value != "co-Buchi":
                raise HoaParseError("non-co-Büchi acceptance", lineno, col)
        elif key == "Acceptance":
            if " ".join(value.split()) != "1 Fin(0)":
                raise HoaParseError("non-co-Büchi acceptance", lineno, col)
            seen_acceptance = True
        elif key in _IGNORED_HEADERS or key[0].islower():
            log.debug("Ignoring header %s", key)
        else:
            raise HoaParseError(f"unsupported header {key!r}", lineno, col)

    if not seen_version:
        raise HoaParseError("empty document", 1)
    if body_start is None:
        raise HoaParseError("missing --BODY--", len(lines))
    if num_states is None:
        raise HoaParseError("missing States: header", body_start)
    if initial is None:
        raise HoaParseError("missing Start: header", body_start)
    if symbols is None:
        raise HoaParseError("missing symbols: header", body_start)
    if not seen_acceptance:
        raise HoaParseError("missing Acceptance: header", body_start)
    if initial >= num_states:
        raise HoaParseError(f"initial state {initial} out of range", body_start)

    transitions: List[Transition] = []
    triples: Set[Tuple[int, int, int]] = set()
    state: Optional[int] = None
    ended = False
    for lineno in range(body_start + 1, len(lines) + 1):
        raw = lines[lineno - 1]
        line = raw.strip()
        if not line:
            continue
        col = _column(raw)
        if ended:
            raise HoaParseError("content after --END--", lineno, col)
        if line == "--END--":
            ended = True
            continue
        if line.startswith("State:"):
            match = _STATE.match(line)
            if not match:
                raise HoaParseError(f"malformed state line {line!r}", lineno, col)
            if match.group(3):
                raise HoaParseError("state-based acceptance is not supported", lineno, col)
            state = int(match.group(1))
            if state >= num_states:
                raise HoaParseError(f"state {state} out of range", lineno, col)
            continue
        if state is None:
            raise HoaParseError("edge before any State: line", lineno, col)
        if not line.startswith("["):
            raise HoaParseError("implicit edges are not supported", lineno, col)
        match = _EDGE.match(line)
        if not match:
            raise HoaParseError(f"malformed edge {line!r}", lineno, col)
        symbol, dst = int(match.group(1)), int(match.group(2))
        marks = match.group(4)
        if marks not in (None, "", "0"):
            raise HoaParseError(f"unknown acceptance set {{{marks}}}", lineno, col)
        if symbol >= len(symbols):
            raise HoaParseError(f"symbol index {symbol} out of range", lineno, col + 1)
        if dst >= num_states:
            raise HoaParseError(f"state {dst} out of range", lineno, col)
        if (state, symbol, dst) in triples:
            raise HoaParseError(f"duplicate transition ({state}, {symbol}, {dst})", lineno, col)
        triples.add((state, symbol, dst))
        transitions.append(Transition(state, symbol, dst, marks == "0"))
    if not ended:
        raise HoaParseError("missing --END--", len(lines))

    try:
        automaton = TNCW(Alphabet(symbols), num_states, initial, frozenset(transitions))
    except AutomatonError as e:
        raise HoaParseError(str(e), body_start) from None
    if not automaton.is_total():
        if not complete:
            raise HoaParseError("non-total automaton (use --sink to add a rejecting sink)", body_start)
        automaton = ensure_total(automaton)
    return automaton


def emit_hoa(a: TNCW) -> bytes:
    """Serialize in canonical form: states in id order, edges by (symbol, dst)."""
    names = " ".join(f'"{_escape(s)}"' for s in a.alphabet.symbols)
    out = [
        "HOA: v1",
        f"States: {a.num_states}",
        f"Start: {a.initial}",
        f"symbols: {len(a.alphabet)} {names}",
        "acc-name: co-Buchi",
        "Acceptance: 1 Fin(0)",
        "--BODY--",
    ]
    by_state: List[List[Transition]] = [[] for _ in a.states]
    for t in a.sorted_transitions():
        by_state[t.src].append(t)
    for q in a.states:
        out.append(f"State: {q}")
        for t in by_state[q]:
            out.append(f"[{t.symbol}] {t.dst}" + (" {0}" if t.in_alpha else ""))
    out.append("--END--")
    return ("\n".join(out) + "\n").encode("utf-8")


def to_dot(a: TNCW) -> str:
    """Graphviz rendering; α-transitions are dashed."""
    out = ["digraph tncw {", "  rankdir=LR;", "  init [shape=point];", f"  init -> {a.initial};"]
    out.extend(f"  {q} [shape=circle];" for q in a.states)
    for t in a.sorted_transitions():
        label = _escape(a.alphabet[t.symbol])
        style = ", style=dashed" if t.in_alpha else ""
        out.append(f'  {t.src} -> {t.dst} [label="{label}"{style}];')
    out.append("}")
    return "\n".join(out) + "\n"
