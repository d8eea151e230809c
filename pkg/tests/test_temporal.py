import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordgraph.graphs import make_edge
from wordgraph.temporal import (
    build_temporal,
    is_always_connected,
    is_edge_active,
    next_activation,
    start_points,
    underlying,
)
from wordgraph.words import Symbol, Word


def syms(*tokens):
    return [Symbol(t) for t in tokens]


def edge(u, v):
    return make_edge(Symbol(u), Symbol(v))


def edge_tokens(edges):
    return {(u.token, v.token) for u, v in edges}


def words(max_size=30, sigma=5, min_size=1):
    alphabet = st.sampled_from(syms(*"abcdefgh"[:sigma]))
    return st.lists(alphabet, min_size=min_size, max_size=max_size).map(
        lambda items: Word(tuple(items))
    )


class TestStartPoints:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("abacbdcedfegfhg", (1, 3, 7, 11, 15)),
            ("12132434", (1, 3, 7)),
            ("abcdef", (1,)),
            ("aa", (1, 2)),
            ("121323", (1, 3, 6)),
        ],
    )
    def test_greedy_scan(self, text, expected):
        assert start_points(Word.from_chars(text)) == expected

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            start_points(Word())

    @given(words(), st.integers(min_value=1, max_value=3))
    def test_scan_is_prefix_stable_under_concatenation(self, w, k):
        from wordgraph.words import power

        single = start_points(w)
        repeated = start_points(power(w, k))
        assert tuple(s for s in repeated if s <= len(w)) == single


class TestBuildTemporal:
    def test_reference_word(self):
        tg = build_temporal(Word.from_chars("abacbdcedfegfhg"))
        assert tg.lifetime == 5
        assert edge_tokens(tg.active[0]) == {("a", "b"), ("b", "c")}
        assert edge_tokens(tg.active[4]) == {("f", "g"), ("g", "h")}
        assert [str(tg.factor(t)) for t in range(1, 6)] == [
            "a b",
            "a c b d",
            "c e d f",
            "e g f h",
            "g",
        ]

    def test_small_path(self):
        tg = build_temporal(Word.from_chars("121323"))
        assert tg.lifetime == 3
        assert [str(tg.factor(t)) for t in (1, 2, 3)] == ["1 2", "1 3 2", "3"]
        assert edge_tokens(tg.active[0]) == {("1", "2"), ("2", "3")}
        assert edge_tokens(tg.active[1]) == {("1", "2"), ("2", "3")}
        assert edge_tokens(tg.active[2]) == {("2", "3")}

    def test_single_factor_triangle(self):
        tg = build_temporal(Word.from_chars("xyz"))
        assert tg.lifetime == 1
        assert len(tg.active[0]) == 3

    @given(words())
    def test_union_of_timesteps_is_underlying_edge_set(self, w):
        tg = build_temporal(w)
        assert frozenset().union(*tg.active) == tg.base.edges

    @given(words())
    def test_factor_structure(self, w):
        tg = build_temporal(w)
        for t, (lo, hi) in enumerate(tg.factor_bounds, start=1):
            factor = tg.word.symbols[lo - 1 : hi]
            assert len(factor) == len(set(factor))
            assert frozenset(factor) == tg.factor_letters[t - 1]
        # each closed interval between consecutive starts repeats exactly
        # one symbol: the one at the later start point
        for s, s_next in zip(tg.start_points, tg.start_points[1:]):
            closed = tg.word.symbols[s - 1 : s_next]
            assert len(closed) == len(set(closed)) + 1
            assert tg.word.at(s_next) in tg.word.symbols[s - 1 : s_next - 1]


class TestEdgeActivity:
    def test_examples(self):
        tg = build_temporal(Word.from_chars("abacbdcedfegfhg"))
        assert is_edge_active(tg, (Symbol("e"), Symbol("f")), 5) is False
        assert is_edge_active(tg, (Symbol("g"), Symbol("h")), 5) is True
        triangle = build_temporal(Word.from_chars("xyz"))
        assert is_edge_active(triangle, (Symbol("x"), Symbol("y")), 1) is True

    def test_errors(self):
        tg = build_temporal(Word.from_chars("121323"))
        with pytest.raises(ValueError):
            is_edge_active(tg, (Symbol("1"), Symbol("2")), 4)
        with pytest.raises(ValueError):
            is_edge_active(tg, (Symbol("1"), Symbol("3")), 1)

    def test_next_activation_examples(self):
        tg = build_temporal(Word.from_chars("121323"))
        assert next_activation(tg, (Symbol("1"), Symbol("2")), 0) == 1
        assert next_activation(tg, (Symbol("1"), Symbol("2")), 2) is None
        triangle = build_temporal(Word.from_chars("xyz"))
        assert next_activation(triangle, (Symbol("x"), Symbol("y")), 1) is None

    def test_next_activation_errors(self):
        tg = build_temporal(Word.from_chars("121323"))
        with pytest.raises(ValueError):
            next_activation(tg, (Symbol("1"), Symbol("3")), 0)
        with pytest.raises(ValueError):
            next_activation(tg, (Symbol("1"), Symbol("2")), -1)

    @given(words(), st.integers(min_value=0, max_value=12))
    def test_next_activation_agrees_with_linear_scan(self, w, t):
        tg = build_temporal(w)
        for e in tg.base.edges:
            expected = next(
                (s for s in range(t + 1, tg.lifetime + 1) if e in tg.active[s - 1]),
                None,
            )
            assert next_activation(tg, e, t) == expected


class TestUnderlyingAndConnectivity:
    def test_underlying_examples(self):
        fig = build_temporal(Word.from_chars("abacbdcedfegfhg"))
        assert underlying(fig) is fig.base
        assert len(underlying(fig).edges) == 7
        assert len(underlying(build_temporal(Word.from_chars("121323"))).edges) == 2
        assert len(underlying(build_temporal(Word.from_chars("xyz"))).edges) == 3

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("xyzxyz", True),
            ("121323", False),
            ("a", True),
            ("abacbdcedfegfhg", False),
        ],
    )
    def test_always_connected(self, text, expected):
        assert is_always_connected(build_temporal(Word.from_chars(text))) is expected
