import pytest

from wordgraph.families import (
    LayeredFamilySpec,
    OutOfFormulaRangeError,
    PathFamilySpec,
    layered_edge_oracle,
    layered_word,
    path_word,
    predicted_path_timesteps,
    predicted_symbol_at,
)
from wordgraph.graphs import build_graph, diameter, make_edge
from wordgraph.temporal import start_points
from wordgraph.words import Symbol, occurrence_indices, power


def path_edges(n):
    return frozenset(
        make_edge(Symbol(str(x)), Symbol(str(x + 1))) for x in range(1, n)
    )


class TestPathWord:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (3, "1 2 1 3 2 3"),
            (4, "1 2 1 3 2 4 3 4"),
            (8, "1 2 1 3 2 4 3 5 4 6 5 7 6 8 7 8"),
        ],
    )
    def test_examples(self, n, expected):
        assert str(path_word(n)) == expected

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            path_word(2)

    @pytest.mark.parametrize("n", range(3, 41))
    def test_graph_is_exactly_the_path(self, n):
        word = path_word(n)
        assert len(word) == 2 * n
        assert build_graph(word).edges == path_edges(n)

    @pytest.mark.parametrize("n", range(3, 21))
    def test_occurrence_gaps(self, n):
        # interior symbols have occurrences exactly 3 apart; the two
        # boundary symbols have gap 2
        word = path_word(n)
        for x in range(1, n + 1):
            first, second = occurrence_indices(word, Symbol(str(x)))
            expected_gap = 2 if x in (1, n) else 3
            assert second - first == expected_gap


class TestPredictedSymbolAt:
    @pytest.mark.parametrize(
        "n, k, pos, expected",
        [
            (8, 1, 6, "4"),
            (8, 1, 7, "3"),
            (4, 2, 12, "3"),
        ],
    )
    def test_examples(self, n, k, pos, expected):
        assert predicted_symbol_at(n, k, pos) == Symbol(expected)

    @pytest.mark.parametrize("pos", [1, 2, 3, 16, 17, 19, 32])
    def test_out_of_formula_positions(self, pos):
        with pytest.raises(OutOfFormulaRangeError):
            predicted_symbol_at(8, 2, pos)

    def test_position_outside_word_rejected(self):
        with pytest.raises(ValueError):
            predicted_symbol_at(8, 1, 17)

    @pytest.mark.parametrize("n", range(3, 13))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_agrees_with_generated_word_everywhere_in_range(self, n, k):
        word = power(path_word(n), k)
        for pos in range(1, 2 * n * k + 1):
            residue = (pos - 1) % (2 * n) + 1
            if 4 <= residue <= 2 * n - 1:
                assert predicted_symbol_at(n, k, pos) == word.at(pos)


class TestPredictedPathTimesteps:
    @pytest.mark.parametrize(
        "n, k, lifetime, starts",
        [
            (8, 1, 5, (1, 3, 7, 11, 15)),
            (4, 2, 5, (1, 3, 7, 11, 15)),
            (6, 1, 4, (1, 3, 7, 11)),
        ],
    )
    def test_examples(self, n, k, lifetime, starts):
        assert predicted_path_timesteps(n, k) == (lifetime, starts)

    @pytest.mark.parametrize("n", range(4, 21))
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matches_greedy_scan(self, n, k):
        lifetime, starts = predicted_path_timesteps(n, k)
        scanned = start_points(power(path_word(n), k))
        assert starts == scanned
        assert lifetime == len(scanned)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            predicted_path_timesteps(3, 1)
        with pytest.raises(ValueError):
            predicted_path_timesteps(8, 0)


class TestLayeredWord:
    def test_example_8_4(self):
        expected = (
            "(1,1) (2,1) (1,2) (2,2) (2,1) (1,1) (1,3) (2,3)"
            " (2,2) (1,2) (1,4) (2,4) (2,3) (1,3) (2,4) (1,4)"
        )
        assert str(layered_word(8, 4)) == expected

    def test_smallest_legal_instance(self):
        word = layered_word(6, 3)
        assert len(word) == 12
        assert len(word.alphabet) == 6

    @pytest.mark.parametrize(
        "n, d",
        [(8, 2), (9, 4), (4, 4), (10, 10)],
    )
    def test_bad_shapes_rejected(self, n, d):
        with pytest.raises(ValueError):
            layered_word(n, d)

    @pytest.mark.parametrize(
        "n, d, expected_count",
        [(8, 4, 12), (6, 3, 8)],
    )
    def test_edge_oracle_counts(self, n, d, expected_count):
        assert len(layered_edge_oracle(n, d)) == expected_count

    @pytest.mark.parametrize(
        "n, d",
        [(8, 4), (12, 4), (15, 5), (12, 6), (6, 3), (16, 4), (12, 3)],
    )
    def test_graph_matches_edge_oracle(self, n, d):
        # simultaneously: no intra-layer or layer-skipping edges, and every
        # consecutive-layer edge present
        assert build_graph(layered_word(n, d)).edges == layered_edge_oracle(n, d)

    @pytest.mark.parametrize("n, d", [(8, 4), (12, 4), (15, 5), (12, 6)])
    def test_powers_keep_the_same_graph(self, n, d):
        word = layered_word(n, d)
        assert build_graph(power(word, 3)).edges == layered_edge_oracle(n, d)

    @pytest.mark.parametrize("n, d", [(8, 4), (15, 5), (12, 6)])
    def test_measured_diameter_is_layers_minus_one(self, n, d):
        assert diameter(build_graph(layered_word(n, d))) == d - 1


class TestFamilySpecs:
    def test_path_spec_builds_power(self):
        assert PathFamilySpec(4, 2).build() == power(path_word(4), 2)
        with pytest.raises(ValueError):
            PathFamilySpec(2)
        with pytest.raises(ValueError):
            PathFamilySpec(4, 0)

    def test_layered_spec_builds_power(self):
        assert LayeredFamilySpec(6, 3, 2).build() == power(layered_word(6, 3), 2)
        with pytest.raises(ValueError):
            LayeredFamilySpec(8, 3)
        with pytest.raises(ValueError):
            LayeredFamilySpec(6, 3, 0)
