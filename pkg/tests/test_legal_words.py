"""
Tests for analysis/legal_words.py - forbidden-factor automaton, enumeration and counting.

Tests cover:
- Automaton membership against a brute-force factor scan
- Enumeration order and budget
- Length and degree counting against enumeration
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis.legal_words import (
    BudgetExceededError,
    DEAD,
    UnknownLetterError,
    build_automaton,
    count_by_degree,
    count_by_length,
    enumerate_by_length,
    is_legal,
    naive_is_legal,
)
from core.models import Generator, MonomialPresentation

ALPHABET = "abc"

_words = st.text(alphabet=ALPHABET, min_size=1, max_size=4).map(tuple)


def _presentation(forbidden) -> MonomialPresentation:
    return MonomialPresentation(
        generators=tuple(Generator(letter) for letter in ALPHABET),
        forbidden=tuple(dict.fromkeys(forbidden)),
    )


class TestAutomatonMembership:
    """Test is_legal() against naive_is_legal()."""

    @given(st.lists(_words, max_size=5), st.text(alphabet=ALPHABET, max_size=10).map(tuple))
    @settings(max_examples=300, deadline=None)
    def test_matches_factor_scan(self, forbidden, word):
        """The automaton agrees with a direct factor scan on every word."""
        presentation = _presentation(forbidden)
        automaton = build_automaton(presentation)
        assert is_legal(automaton, word) == naive_is_legal(presentation.forbidden, word)

    def test_three_letter_examples(self, three_letter):
        """Spot checks on k<x,y,z>/(xx, yx, zy, xz, zz, yyyy)."""
        automaton = build_automaton(three_letter)
        assert is_legal(automaton, tuple("zxyzx"))
        assert is_legal(automaton, tuple("xyyyz"))
        assert not is_legal(automaton, tuple("xyyyyz"))
        assert not is_legal(automaton, tuple("zxx"))

    def test_empty_word_is_legal(self, three_letter):
        """The empty word never contains a forbidden factor."""
        assert is_legal(build_automaton(three_letter), ())

    def test_unknown_letter(self, three_letter):
        """Letters outside the alphabet raise."""
        with pytest.raises(UnknownLetterError):
            is_legal(build_automaton(three_letter), ("w",))

    def test_single_letter_forbidden(self):
        """A forbidden letter has a DEAD transition from the root."""
        automaton = build_automaton(_presentation([("b",)]))
        assert automaton.step(0, "b") == DEAD
        assert automaton.step(DEAD, "a") == DEAD


class TestEnumeration:
    """Test enumerate_by_length()."""

    def test_three_letter_length_three(self, three_letter):
        """L_3 in generator order."""
        words = enumerate_by_length(build_automaton(three_letter), 3)
        assert ["".join(word) for word in words] == ["xyy", "xyz", "yyy", "yyz", "yzx", "zxy"]

    def test_length_zero(self, weighted_xy):
        """L_0 is the empty word."""
        assert enumerate_by_length(build_automaton(weighted_xy), 0) == [()]

    def test_free_algebra(self, free_two_letters):
        """With no forbidden words every word is legal."""
        words = enumerate_by_length(build_automaton(free_two_letters), 2)
        assert words == [("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]

    def test_budget_exceeded(self, free_two_letters):
        """More than budget words raises with the length recorded."""
        with pytest.raises(BudgetExceededError) as excinfo:
            enumerate_by_length(build_automaton(free_two_letters), 3, budget=7)
        assert excinfo.value.length == 3

    def test_budget_exact(self, free_two_letters):
        """Exactly budget words is allowed."""
        assert len(enumerate_by_length(build_automaton(free_two_letters), 3, budget=8)) == 8


class TestCounting:
    """Test count_by_length() and count_by_degree()."""

    @pytest.mark.parametrize("n", range(7))
    def test_length_counts_match_enumeration(self, three_letter, n):
        """The state DP agrees with enumeration."""
        automaton = build_automaton(three_letter)
        assert count_by_length(automaton, n) == len(enumerate_by_length(automaton, n))

    def test_three_letter_lengths(self, three_letter):
        """|L_n| for n = 0..4."""
        automaton = build_automaton(three_letter)
        assert [count_by_length(automaton, n) for n in range(5)] == [1, 3, 4, 6, 8]

    def test_weighted_degree_series(self, weighted_xy):
        """dim A_d for k<x,y>/(yx, xxx) with deg y = 2."""
        series = count_by_degree(build_automaton(weighted_xy), 6)
        assert series.to_list() == [1, 1, 2, 1, 2, 1, 2]
        assert series.max_degree == 6

    def test_free_series_is_fibonacci(self):
        """Free algebra on degrees 1 and 2 counts compositions into 1s and 2s."""
        presentation = MonomialPresentation(generators=(Generator("x", 1), Generator("y", 2)))
        series = count_by_degree(build_automaton(presentation), 7)
        assert series.to_list() == [1, 1, 2, 3, 5, 8, 13, 21]

    def test_negative_degree(self, weighted_xy):
        """Negative truncation is rejected."""
        with pytest.raises(ValueError):
            count_by_degree(build_automaton(weighted_xy), -1)
