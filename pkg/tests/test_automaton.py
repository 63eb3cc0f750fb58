"""Tests for the automaton data model and structural predicates."""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gfgmin.automaton import (
    Alphabet, AutomatonError, TNCW, Transition, ensure_total, restrict_to_reachable,
    structural_report,
)
from gfgmin.generate import random_tncw
from gfgmin.language import accepts, distinguishing_lasso, random_lassos
from gfgmin.safe_structure import safe_components
from tests.helpers import load_fixture


@pytest.fixture
def fm():
    return load_fixture("fm")


def test_alphabet_rejects_duplicates():
    with pytest.raises(AutomatonError):
        Alphabet(("a", "a"))


def test_alphabet_rejects_empty():
    with pytest.raises(AutomatonError):
        Alphabet(())


def test_duplicate_triple_rejected():
    with pytest.raises(AutomatonError):
        TNCW(Alphabet(("a",)), 1, 0, frozenset([
            Transition(0, 0, 0, False), Transition(0, 0, 0, True),
        ]))


def test_out_of_range_endpoint_rejected():
    with pytest.raises(AutomatonError):
        TNCW.from_edges(["a"], 1, 0, [(0, "a", 1, False)])


def test_successor_views(fm):
    assert fm.successors(1, 0) == ((1, False),)
    assert fm.safe_successors(0, 0) == ()
    assert fm.alpha_successors(0, 0) == (1,)
    assert fm.with_initial(1).initial == 1


def test_ensure_total_keeps_total_automaton(fm):
    assert ensure_total(fm) is fm


def test_ensure_total_adds_sink():
    a = TNCW.from_edges(["a", "b"], 1, 0, [(0, "a", 0, False)])
    total = ensure_total(a)
    assert total.num_states == 2
    assert {(t.triple, t.in_alpha) for t in total.transitions} == {
        ((0, 0, 0), False), ((0, 1, 1), True), ((1, 0, 1), True), ((1, 1, 1), True),
    }


def test_ensure_total_on_empty_automaton():
    a = TNCW(Alphabet(("a",)), 1, 0, frozenset())
    total = ensure_total(a)
    assert total.num_states == 2
    assert total.successors(0, 0) == ((1, True),)
    assert total.successors(1, 0) == ((1, True),)


def test_restrict_drops_isolated_state(fm):
    extra = TNCW(fm.alphabet, 3, 0, fm.transitions | {
        Transition(2, 0, 2, False), Transition(2, 1, 0, True),
    })
    assert restrict_to_reachable(extra) == fm


def test_restrict_is_identity_when_all_reachable(fm):
    assert restrict_to_reachable(fm) == fm


def test_restrict_keeps_token_automaton():
    tok = load_fixture("tok")
    assert restrict_to_reachable(tok) == tok
    assert tok.num_states == 6


def test_restrict_renumbers_by_discovery():
    a = TNCW.from_edges(["a"], 3, 2, [(2, "a", 0, False), (0, "a", 0, False), (1, "a", 1, True)])
    reduced = restrict_to_reachable(a)
    assert reduced.num_states == 2
    assert reduced.initial == 0
    assert reduced.successors(0, 0) == ((1, False),)


def test_structural_report_fm(fm):
    report = structural_report(fm)
    assert report.deterministic
    assert report.safe_deterministic
    assert report.alpha_homogeneous
    assert report.normal
    assert report.total
    assert report.all_reachable


def test_structural_report_bs():
    report = structural_report(load_fixture("bs"))
    assert not report.deterministic
    assert report.safe_deterministic
    assert report.alpha_homogeneous
    assert report.normal


def test_structural_report_mixed_cell():
    a = TNCW.from_edges(["a"], 1, 0, [(0, "a", 0, False)])
    b = TNCW.from_edges(["a", "b"], 2, 0, [
        (0, "a", 0, False), (0, "a", 1, True), (0, "b", 0, True),
        (1, "a", 1, False), (1, "b", 1, False),
    ])
    assert structural_report(a).alpha_homogeneous
    assert not structural_report(b).alpha_homogeneous


def _naive_report(a):
    deterministic = safe_det = homogeneous = total = True
    for q in range(a.num_states):
        for s in range(len(a.alphabet)):
            cell = [t for t in a.transitions if t.src == q and t.symbol == s]
            safe = [t for t in cell if not t.in_alpha]
            alpha = [t for t in cell if t.in_alpha]
            deterministic &= len(cell) == 1
            safe_det &= len(safe) <= 1
            homogeneous &= not (safe and alpha)
            total &= bool(cell)
    d = safe_components(a)
    normal = all(
        t.in_alpha or d.component_of[t.src] == d.component_of[t.dst] for t in a.transitions
    )
    return deterministic, safe_det, homogeneous, normal, total


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), states=st.integers(1, 6), symbols=st.integers(1, 3))
def test_structural_report_matches_naive_loop(seed, states, symbols):
    a = random_tncw(states, symbols, seed)
    report = structural_report(a)
    assert (report.deterministic, report.safe_deterministic, report.alpha_homogeneous,
            report.normal, report.total) == _naive_report(a)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_restrict_to_reachable_preserves_language(seed):
    a = random_tncw(6, 2, seed).with_initial(seed % 6)
    assert distinguishing_lasso(a, restrict_to_reachable(a)) is None


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_ensure_total_preserves_acceptance(seed):
    full = random_tncw(4, 2, seed)
    partial = TNCW(full.alphabet, full.num_states, full.initial,
                   frozenset(t for t in full.transitions if (t.src + t.symbol + seed) % 3))
    completed = ensure_total(partial)
    for w in random_lassos(full.alphabet, 50, 4, seed):
        assert accepts(partial, w) == accepts(completed, w)
