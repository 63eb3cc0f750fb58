"""Tests for HOA reading and writing."""
from pathlib import Path

import pytest

from gfgmin.automaton import TNCW
from gfgmin.hoa import HoaParseError, emit_hoa, parse_hoa, to_dot
from tests.helpers import FIXTURES, load_fixture

GOLDEN = Path(__file__).parent / "golden"

ONE_STATE = b"""HOA: v1
States: 1
Start: 0
symbols: 2 "a" "b"
acc-name: co-Buchi
Acceptance: 1 Fin(0)
--BODY--
State: 0
[0] 0
[1] 0 {0}
--END--
"""


def _replace(text: bytes, old: bytes, new: bytes) -> bytes:
    assert old in text
    return text.replace(old, new)


def test_parse_one_state():
    a = parse_hoa(ONE_STATE)
    assert a.num_states == 1
    assert len(a.transitions) == 2
    assert a.alpha_count == 1
    assert a.alphabet.symbols == ("a", "b")


def test_parse_fm():
    a = load_fixture("fm")
    assert a.num_states == 2
    assert len(a.transitions) == 4
    assert a.alpha_count == 3


def test_emit_matches_golden():
    assert emit_hoa(parse_hoa(ONE_STATE)) == (GOLDEN / "one_state.hoa").read_bytes()


@pytest.mark.parametrize("name", ["fm", "tri", "bs", "tok", "min3", "dp1", "dp2"])
def test_fixtures_are_canonical(name):
    raw = (FIXTURES / f"{name}.hoa").read_bytes()
    a = parse_hoa(raw)
    assert emit_hoa(a) == raw
    assert parse_hoa(emit_hoa(a)) == a


def test_equal_automata_emit_equal_bytes():
    a = load_fixture("bs")
    b = TNCW(a.alphabet, a.num_states, a.initial, frozenset(sorted(a.transitions, reverse=True)))
    assert emit_hoa(a) == emit_hoa(b)


def test_crlf_and_extra_headers_accepted():
    text = _replace(ONE_STATE, b"States: 1\n", b'name: "demo"\ntool: "x"\nproperties: trans-acc\nStates: 1\n')
    a = parse_hoa(text.replace(b"\n", b"\r\n"))
    assert a == parse_hoa(ONE_STATE)


def test_ap_header_is_symbol_list():
    text = _replace(ONE_STATE, b'symbols: 2 "a" "b"', b'AP: 2 "a" "b"')
    assert parse_hoa(text) == parse_hoa(ONE_STATE)


def test_non_co_buchi_acceptance():
    text = _replace(ONE_STATE, b"Fin(0)", b"Inf(0)")
    with pytest.raises(HoaParseError, match="non-co-Büchi acceptance") as info:
        parse_hoa(text)
    assert info.value.line == 6


def test_non_co_buchi_acc_name():
    with pytest.raises(HoaParseError, match="non-co-Büchi acceptance"):
        parse_hoa(_replace(ONE_STATE, b"acc-name: co-Buchi", b"acc-name: Buchi"))


def test_duplicate_triple():
    text = _replace(ONE_STATE, b"[1] 0 {0}\n", b"[1] 0 {0}\n[1] 0\n")
    with pytest.raises(HoaParseError, match="duplicate transition") as info:
        parse_hoa(text)
    assert info.value.line == 11


def test_non_total_requires_sink():
    text = _replace(ONE_STATE, b"[1] 0 {0}\n", b"")
    with pytest.raises(HoaParseError, match="non-total"):
        parse_hoa(text)
    a = parse_hoa(text, complete=True)
    assert a.num_states == 2
    assert a.successors(0, 1) == ((1, True),)


def test_implicit_edges_rejected():
    with pytest.raises(HoaParseError, match="implicit edges"):
        parse_hoa(_replace(ONE_STATE, b"[0] 0\n", b"0\n"))


def test_multiple_initial_states_rejected():
    with pytest.raises(HoaParseError, match="multiple initial states"):
        parse_hoa(_replace(ONE_STATE, b"Start: 0\n", b"Start: 0\nStart: 0\n"))


def test_state_based_acceptance_rejected():
    with pytest.raises(HoaParseError, match="state-based"):
        parse_hoa(_replace(ONE_STATE, b"State: 0\n", b"State: 0 {0}\n"))


def test_symbol_count_mismatch():
    with pytest.raises(HoaParseError, match="declared 3 symbols"):
        parse_hoa(_replace(ONE_STATE, b'symbols: 2 "a" "b"', b'symbols: 3 "a" "b"'))


def test_missing_end():
    with pytest.raises(HoaParseError, match="missing --END--"):
        parse_hoa(_replace(ONE_STATE, b"--END--\n", b""))


def test_symbol_out_of_range():
    with pytest.raises(HoaParseError, match="symbol index 2"):
        parse_hoa(_replace(ONE_STATE, b"[0] 0\n", b"[0] 0\n[2] 0\n"))


def test_quoted_symbols_round_trip():
    a = TNCW.from_edges(['say "hi"', "x\\y"], 1, 0, [(0, 0, 0, False), (0, 1, 0, True)])
    assert parse_hoa(emit_hoa(a)) == a


def test_line_breaks_in_symbols_round_trip():
    a = TNCW.from_edges(["a\nb", "c\rd"], 1, 0, [(0, 0, 0, False), (0, 1, 0, True)])
    text = emit_hoa(a)
    symbols_line = next(line for line in text.split(b"\n") if line.startswith(b"symbols:"))
    assert symbols_line == b'symbols: 2 "a\\nb" "c\\rd"'
    assert parse_hoa(text) == a


def test_missing_acceptance():
    with pytest.raises(HoaParseError, match="missing Acceptance: header") as info:
        parse_hoa(_replace(ONE_STATE, b"Acceptance: 1 Fin(0)\n", b""))
    assert info.value.line == 6


def test_dot_marks_alpha_dashed():
    dot = to_dot(load_fixture("fm"))
    assert dot.startswith("digraph tncw {")
    assert '1 -> 1 [label="a"];' in dot
    assert '0 -> 1 [label="a", style=dashed];' in dot
