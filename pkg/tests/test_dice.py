from fractions import Fraction

import pytest
from hypothesis import given, settings

from strongext import (
    LOSER_TO_WINNER,
    BudgetError,
    DiceSet,
    InvalidDiceError,
    ParseError,
    StrictDigraph,
    TooSmallError,
    beats_digraph,
    is_balanced,
    parse_dice,
    realization_search_space,
    realizes,
    search_balanced_realization,
    serialize_dice,
    win_matrix,
    win_probability,
)

from strategies import dice_sets

ROCK_PAPER = DiceSet(((1, 5, 9), (3, 4, 8), (2, 6, 7)))
ORDERED = DiceSet(((1, 2, 3), (4, 5, 6), (7, 8, 9)))
CYCLE3 = StrictDigraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
TT3 = StrictDigraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


class TestDiceSet:
    def test_faces_are_sorted(self):
        d = DiceSet(((9, 1, 5), (8, 3, 4)))
        assert d.dice == ((1, 5, 9), (3, 4, 8))

    def test_count_and_sides(self):
        assert ROCK_PAPER.count == 3
        assert ROCK_PAPER.sides == 3

    def test_rejects_shared_face(self):
        with pytest.raises(InvalidDiceError):
            DiceSet(((1, 2), (2, 3)))

    def test_rejects_repeated_face_within_die(self):
        with pytest.raises(InvalidDiceError):
            DiceSet(((1, 1), (2, 3)))

    def test_rejects_ragged_sizes(self):
        with pytest.raises(InvalidDiceError):
            DiceSet(((1, 2), (3,)))

    def test_rejects_nonpositive_faces(self):
        with pytest.raises(InvalidDiceError):
            DiceSet(((0, 1), (2, 3)))

    def test_rejects_empty(self):
        with pytest.raises(InvalidDiceError):
            DiceSet(())
        with pytest.raises(InvalidDiceError):
            DiceSet(((), ()))


class TestParse:
    def test_basic(self):
        assert parse_dice("1 5 9\n3 4 8\n2 6 7\n") == ROCK_PAPER

    def test_comments_and_blanks(self):
        assert parse_dice("# set\n1 5 9\n\n3 4 8\n2 6 7  # last\n") == ROCK_PAPER

    def test_duplicate_face_names_both_lines(self):
        with pytest.raises(ParseError, match="face 5 already used on line 1"):
            parse_dice("1 5 9\n3 5 8\n")

    def test_non_integer(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dice("1 2\n3 x\n")

    def test_nonpositive(self):
        with pytest.raises(ParseError, match="positive"):
            parse_dice("0 1\n2 3\n")

    def test_ragged(self):
        with pytest.raises(ParseError, match="expected 2 faces"):
            parse_dice("1 2\n3 4 5\n")

    def test_empty(self):
        with pytest.raises(ParseError, match="no dice"):
            parse_dice("# nothing\n")

    def test_round_trip(self):
        assert parse_dice(serialize_dice(ROCK_PAPER)) == ROCK_PAPER

    def test_serialize_exact(self):
        assert serialize_dice(ROCK_PAPER) == "1 5 9\n3 4 8\n2 6 7\n"


class TestWinProbability:
    def test_known_pairs(self):
        assert win_probability((1, 5, 9), (3, 4, 8)) == Fraction(5, 9)
        assert win_probability((3, 4, 8), (2, 6, 7)) == Fraction(5, 9)
        assert win_probability((2, 6, 7), (1, 5, 9)) == Fraction(5, 9)

    def test_dominated(self):
        assert win_probability((1, 2, 3), (4, 5, 6)) == 0
        assert win_probability((4, 5, 6), (1, 2, 3)) == 1

    def test_single_face(self):
        assert win_probability((5,), (3,)) == 1

    def test_rejects_overlap(self):
        with pytest.raises(InvalidDiceError):
            win_probability((1, 2), (2, 3))

    def test_rejects_size_mismatch(self):
        with pytest.raises(InvalidDiceError):
            win_probability((1, 2), (3,))

    def test_rejects_empty(self):
        with pytest.raises(InvalidDiceError):
            win_probability((), ())

    @given(dice_sets(min_dice=2))
    def test_complementary(self, d):
        for i in range(d.count):
            for j in range(i + 1, d.count):
                p = win_probability(d.dice[i], d.dice[j])
                q = win_probability(d.dice[j], d.dice[i])
                assert 0 <= p <= 1
                assert p + q == 1


class TestWinMatrix:
    def test_counts(self):
        m = win_matrix(ROCK_PAPER)
        assert m.counts == ((0, 5, 4), (4, 0, 5), (5, 4, 0))
        assert m.sides == 3
        assert m.probability(0, 1) == Fraction(5, 9)
        assert m.probability(1, 0) == Fraction(4, 9)


class TestBeatsDigraph:
    def test_cycle(self):
        assert beats_digraph(ROCK_PAPER).edges == frozenset(
            {(0, 1), (1, 2), (2, 0)}
        )

    def test_transitive(self):
        assert beats_digraph(ORDERED).edges == frozenset(
            {(2, 1), (2, 0), (1, 0)}
        )

    def test_single_die(self):
        d = DiceSet(((1, 2),))
        assert beats_digraph(d) == StrictDigraph(1, frozenset())

    def test_direction_flip(self):
        assert (
            beats_digraph(ROCK_PAPER, LOSER_TO_WINNER)
            == beats_digraph(ROCK_PAPER).reverse()
        )

    def test_rejects_unknown_direction(self):
        with pytest.raises(InvalidDiceError):
            beats_digraph(ROCK_PAPER, "sideways")

    def test_dead_even_pair_has_no_edge(self):
        # {1,4} vs {2,3} wins exactly half the 4 face pairs
        d = DiceSet(((1, 4), (2, 3)))
        assert beats_digraph(d).edges == frozenset()

    @given(dice_sets())
    def test_tournament_for_odd_sides(self, d):
        g = beats_digraph(d)
        assert g.n == d.count
        if d.sides % 2 == 1:
            assert len(g.edges) == d.count * (d.count - 1) // 2

    @given(dice_sets(min_dice=2))
    def test_direction_flip_is_reversal(self, d):
        assert beats_digraph(d, LOSER_TO_WINNER) == beats_digraph(d).reverse()


class TestIsBalanced:
    def test_rock_paper(self):
        assert is_balanced(ROCK_PAPER) == (True, Fraction(5, 9))

    def test_ordered_degenerate(self):
        assert is_balanced(ORDERED) == (True, Fraction(1))

    def test_transitive_but_balanced(self):
        d = DiceSet(((1, 2, 9), (3, 4, 8), (5, 6, 7)))
        assert is_balanced(d) == (True, Fraction(2, 3))

    def test_unbalanced(self):
        d = DiceSet(((1, 2, 6), (3, 4, 5), (7, 8, 9)))
        assert is_balanced(d) == (False, None)

    def test_dead_even(self):
        assert is_balanced(DiceSet(((1, 4), (2, 3)))) == (True, Fraction(1, 2))

    def test_rejects_single_die(self):
        with pytest.raises(InvalidDiceError):
            is_balanced(DiceSet(((1, 2),)))


class TestRealizes:
    def test_cycle(self):
        assert realizes(ROCK_PAPER, CYCLE3)

    def test_subgraph(self):
        single = StrictDigraph.from_edges(3, [(0, 1)])
        assert realizes(ROCK_PAPER, single)
        assert realizes(ROCK_PAPER, StrictDigraph(3, frozenset()))

    def test_reversed_cycle(self):
        assert not realizes(ROCK_PAPER, CYCLE3.reverse())
        assert realizes(ROCK_PAPER, CYCLE3.reverse(), LOSER_TO_WINNER)

    def test_rejects_size_mismatch(self):
        with pytest.raises(InvalidDiceError):
            realizes(ROCK_PAPER, StrictDigraph(4, frozenset()))


class TestOrderIsomorphism:
    @given(dice_sets(min_dice=2))
    def test_affine_map_invariance(self, d):
        mapped = DiceSet(tuple(tuple(2 * f + 7 for f in die) for die in d.dice))
        assert win_matrix(mapped) == win_matrix(d)
        assert beats_digraph(mapped) == beats_digraph(d)
        assert is_balanced(mapped) == is_balanced(d)


class TestSearch:
    def test_search_space(self):
        assert realization_search_space(3, 3) == 1680
        assert realization_search_space(3, 1) == 6

    def test_cycle_finds_reference_set(self):
        assert search_balanced_realization(CYCLE3, 3) == ROCK_PAPER

    def test_found_set_passes_checks(self):
        d = search_balanced_realization(CYCLE3, 3)
        balanced, p = is_balanced(d)
        assert balanced and p > Fraction(1, 2)
        assert realizes(d, CYCLE3)

    def test_transitive_target_fails(self):
        assert search_balanced_realization(TT3, 3) is None

    def test_single_edge_target(self):
        h = StrictDigraph.from_edges(3, [(0, 1)])
        d = search_balanced_realization(h, 3)
        assert d is not None
        assert realizes(d, h)
        balanced, p = is_balanced(d)
        assert balanced and p > Fraction(1, 2)

    def test_loser_to_winner_direction(self):
        d = search_balanced_realization(CYCLE3, 3, LOSER_TO_WINNER)
        assert d is not None
        assert realizes(d, CYCLE3, LOSER_TO_WINNER)

    def test_single_faces_cannot_cycle(self):
        assert search_balanced_realization(CYCLE3, 1) is None

    def test_deterministic(self):
        h = StrictDigraph.from_edges(3, [(1, 2)])
        assert search_balanced_realization(
            h, 3
        ) == search_balanced_realization(h, 3)

    def test_rejects_small_targets(self):
        with pytest.raises(TooSmallError):
            search_balanced_realization(StrictDigraph(2, frozenset()), 3)

    def test_rejects_bad_sides(self):
        with pytest.raises(InvalidDiceError):
            search_balanced_realization(CYCLE3, 0)

    def test_budget(self):
        with pytest.raises(BudgetError):
            search_balanced_realization(StrictDigraph(4, frozenset()), 4)
