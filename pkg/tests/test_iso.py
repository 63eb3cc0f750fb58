"""Tests for isomorphism and safe isomorphism."""
import pytest

from gfgmin.iso import Bijection, isomorphic, refine_colours, safe_isomorphic
from gfgmin.language import safe_contains, state_equiv
from gfgmin.generate import random_tncw
from tests.helpers import load_fixture, permute


@pytest.fixture
def dp():
    return load_fixture("dp1"), load_fixture("dp2")


def test_dp_are_safe_isomorphic(dp):
    dp1, dp2 = dp
    assert safe_isomorphic(dp1, dp2) == Bijection((0, 1))


def test_dp_are_not_isomorphic(dp):
    assert isomorphic(*dp) is None


def test_seeded_safe_isomorphism(dp):
    assert safe_isomorphic(*dp, seed_with_relations=True) == Bijection((0, 1))


def test_safe_isomorphism_preserves_safe_languages(dp):
    dp1, dp2 = dp
    kappa = safe_isomorphic(dp1, dp2)
    for q in dp1.states:
        assert safe_contains(dp1, q, kappa[q], dp2)
        assert safe_contains(dp2, kappa[q], q, dp1)


def test_renamed_automaton_is_isomorphic():
    bs = load_fixture("bs")
    assert isomorphic(bs, permute(bs, [1, 0])) == Bijection((1, 0))


@pytest.mark.parametrize("name", ["bs", "min3", "tok"])
def test_self_isomorphism_is_identity(name):
    a = load_fixture(name)
    assert isomorphic(a, a) == Bijection(tuple(a.states))


def test_different_automata_are_not_isomorphic():
    assert isomorphic(load_fixture("bs"), load_fixture("min3")) is None
    assert safe_isomorphic(load_fixture("fm"), load_fixture("bs")) is None


@pytest.mark.parametrize("seed", range(5))
def test_isomorphism_preserves_state_languages(seed):
    a = random_tncw(4, 2, seed)
    perm = [2, 0, 3, 1]
    b = permute(a, perm)
    kappa = isomorphic(a, b)
    assert kappa is not None
    for q in a.states:
        assert state_equiv(a, q, kappa[q], b)


def test_colours_are_invariant_under_renaming():
    min3 = load_fixture("min3")
    perm = [2, 0, 1]
    renamed = permute(min3, perm)
    original = refine_colours(min3)
    moved = refine_colours(renamed)
    for q in min3.states:
        assert original[q] == moved[perm[q]]


def test_bijection_lines_and_inverse():
    kappa = Bijection((2, 0, 1))
    assert kappa.lines() == ["0->2", "1->0", "2->1"]
    assert kappa.inverse == (1, 2, 0)
    assert kappa[0] == 2


def test_bijection_rejects_non_permutation():
    with pytest.raises(ValueError):
        Bijection((0, 0))
