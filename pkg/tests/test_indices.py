import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zagreb_indices.families import (
    complete_graph,
    cycle_graph,
    figure_graph,
    path_graph,
    star_graph,
)
from zagreb_indices.graph import Graph
from zagreb_indices.indices import (
    ExponentParam,
    first_leap_zagreb,
    first_leap_zagreb_coindex,
    first_zagreb,
    general_first_leap_zagreb,
    general_first_zagreb,
    general_first_zagreb_coindex,
)

from _oracles import (
    brute_leap_zagreb,
    brute_leap_zagreb_coindex,
    brute_zagreb,
    brute_zagreb_coindex,
)
from strategies import connected_graphs, exponents_exact


def close(a, b, rel=1e-9):
    fa, fb = float(a), float(b)
    return abs(fa - fb) <= rel * max(1.0, abs(fa), abs(fb))


class TestExponentParam:
    def test_accepts_defining_family(self):
        assert ExponentParam(2).mode == "exact"
        assert ExponentParam(-3).mode == "exact"
        assert ExponentParam(0.5).mode == "real"
        assert ExponentParam(Fraction(4, 2)).alpha == 2

    @pytest.mark.parametrize("bad", [0, 1, 0.0, 1.0, Fraction(1), True, False])
    def test_rejects_degenerate(self, bad):
        with pytest.raises((ValueError, TypeError)):
            ExponentParam(bad)


class TestGeneralFirstZagreb:
    def test_known_values(self):
        # K_{1,5} at exponent 3: 5^3 + 5 * 1
        assert general_first_zagreb(star_graph(6), 3) == 130
        assert general_first_zagreb(figure_graph(1), 2) == 72
        assert general_first_zagreb(figure_graph(2), 2) == 30
        assert general_first_zagreb(figure_graph(3), 2) == 148
        assert general_first_zagreb(cycle_graph(5), 2) == 20

    def test_negative_exponent_is_exact(self):
        val = general_first_zagreb(figure_graph(2), -1)
        assert val == Fraction(15, 4)
        assert isinstance(val, Fraction)

    def test_real_exponent(self):
        val = general_first_zagreb(figure_graph(2), 0.5)
        assert isinstance(val, float)
        assert close(val, 4 + 3 * math.sqrt(2))

    def test_exponent_param_object_accepted(self):
        assert general_first_zagreb(star_graph(4), ExponentParam(2)) == 12

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError):
            general_first_zagreb(path_graph(3), 0)

    def test_isolated_vertex_zero_power(self):
        lonely = Graph(2, [])
        assert general_first_zagreb(lonely, 2) == 0
        with pytest.raises(ValueError, match="degree"):
            general_first_zagreb(lonely, -1)

    @given(connected_graphs(max_n=7), exponents_exact)
    def test_matches_oracle_exact(self, g, a):
        assert general_first_zagreb(g, a) == brute_zagreb(g, a)

    @given(connected_graphs(max_n=7), st.floats(0.1, 3.0))
    def test_matches_oracle_real(self, g, a):
        assert close(general_first_zagreb(g, a), brute_zagreb(g, a))


class TestCoindex:
    def test_known_values(self):
        # path P3: only non-adjacent pair is the two ends
        assert general_first_zagreb_coindex(path_graph(3), 1) == 2
        assert general_first_zagreb_coindex(figure_graph(2), 1) == 30
        assert general_first_zagreb_coindex(figure_graph(2), 2) == 60

    def test_complete_graph_has_empty_coindex(self):
        assert general_first_zagreb_coindex(complete_graph(4), 2) == 0

    def test_rejects_exponents_outside_family(self):
        with pytest.raises(ValueError):
            general_first_zagreb_coindex(path_graph(4), -1)
        with pytest.raises(ValueError):
            general_first_zagreb_coindex(path_graph(4), 0)

    def test_real_exponent_allowed_above_zero(self):
        val = general_first_zagreb_coindex(path_graph(4), 0.5)
        assert close(val, brute_zagreb_coindex(path_graph(4), 0.5))

    @given(connected_graphs(max_n=7), st.integers(1, 4))
    def test_matches_oracle(self, g, a):
        assert general_first_zagreb_coindex(g, a) == brute_zagreb_coindex(g, a)

    @given(connected_graphs(max_n=7), st.integers(1, 4))
    def test_complement_identity(self, g, a):
        n = g.vertex_count
        lhs = general_first_zagreb_coindex(g, a)
        rhs = (n - 1) * general_first_zagreb(g, a) - general_first_zagreb(g, a + 1)
        assert lhs == rhs


class TestLeap:
    def test_known_values(self):
        assert general_first_leap_zagreb(figure_graph(4), 2) == 100
        assert general_first_leap_zagreb(figure_graph(5), 2) == 34
        assert general_first_leap_zagreb(figure_graph(6), 2) == 92
        assert general_first_leap_zagreb(star_graph(6), 3) == 320
        assert general_first_leap_zagreb(path_graph(3), 2) == 2

    def test_zero_d2_contributes_nothing_for_positive_alpha(self):
        # star center sees everything within distance 1
        assert general_first_leap_zagreb(star_graph(5), 2) == 36

    def test_zero_d2_rejects_negative_alpha(self):
        with pytest.raises(ValueError, match="2-distance"):
            general_first_leap_zagreb(star_graph(5), -1)

    def test_leap_coindex_known_values(self):
        assert first_leap_zagreb_coindex(figure_graph(5)) == 50

    @given(connected_graphs(max_n=7), st.integers(1, 4))
    def test_matches_oracle(self, g, a):
        assert general_first_leap_zagreb(g, a) == brute_leap_zagreb(g, a)

    @given(connected_graphs(max_n=7))
    def test_leap_coindex_matches_oracle(self, g):
        assert first_leap_zagreb_coindex(g) == brute_leap_zagreb_coindex(g)


def test_convenience_wrappers():
    g = figure_graph(2)
    assert first_zagreb(g) == general_first_zagreb(g, 2) == 30
    assert first_leap_zagreb(g) == general_first_leap_zagreb(g, 2)
