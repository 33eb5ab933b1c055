"""Staircase coloring, collapse sequences, and the Y-block scheme."""

import pytest

from edgespectra.coloring import (
    color_class,
    is_harmonic,
    is_interval_on,
    summarize,
    validate,
)
from edgespectra.constructions import (
    block_interval_on_Y,
    collapse_sequence,
    collapse_step,
    staircase_coloring,
    trace_from_json,
    trace_to_json,
)
from edgespectra.coloring import EdgeColoring
from edgespectra.graphs import build_complete_bipartite, y_vertex


class TestStaircase:
    def test_small_example(self):
        c = staircase_coloring(3, 2)
        assert c.t == 4
        assert c.colors == (1, 2, 3, 2, 3, 4)

    def test_single_edge(self):
        c = staircase_coloring(1, 1)
        assert c.t == 1
        assert c.colors == (1,)

    def test_square_example(self):
        c = staircase_coloring(3, 3)
        assert c.t == 5
        g = build_complete_bipartite(3, 3)
        s = summarize(g, c)
        assert s.interval_count == 6
        assert s.spectra[1] == (2, 3, 4)  # x_2

    def test_rejects_m_below_n(self):
        with pytest.raises(ValueError):
            staircase_coloring(2, 3)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_valid_harmonic_all_interval(self, m):
        for n in range(1, m + 1):
            g = build_complete_bipartite(m, n)
            c = staircase_coloring(m, n)
            assert validate(g, c).ok
            assert is_harmonic(g, c)
            s = summarize(g, c)
            assert s.interval_count == m + n
            # x_i sees [i, i+m-1]; y_j sees [j, j+n-1]
            for i in range(1, n + 1):
                assert s.spectra[i - 1] == tuple(range(i, i + m))
            for j in range(1, m + 1):
                assert s.spectra[y_vertex(n, j)] == tuple(range(j, j + n))


class TestCollapseStep:
    def test_wide_rectangle_loses_one_interval_vertex(self):
        g = build_complete_bipartite(3, 2)
        c = staircase_coloring(3, 2)
        stepped = collapse_step(g, c)
        assert stepped.t == 3
        # the single top-color edge (x_2, y_3) drops from 4 to 1
        assert stepped.colors == (1, 2, 3, 2, 3, 1)
        assert summarize(g, stepped).interval_count == 4

    def test_square_keeps_every_interval_vertex(self):
        g = build_complete_bipartite(2, 2)
        stepped = collapse_step(g, staircase_coloring(2, 2))
        assert stepped.t == 2
        s = summarize(g, stepped)
        assert s.interval_count == 4
        assert set(s.spectra) == {(1, 2)}

    def test_rejects_palette_at_chromatic_index(self):
        g = build_complete_bipartite(3, 3)
        latin = block_interval_on_Y(3, 3, 1)
        with pytest.raises(ValueError):
            collapse_step(g, latin)

    def test_rejects_non_harmonic_input(self):
        g = build_complete_bipartite(2, 2)
        # x_2 sees colors 3 and 1, congruent mod 2
        with pytest.raises(ValueError):
            collapse_step(g, EdgeColoring(3, (1, 2, 3, 1)))


class TestCollapseSequence:
    def test_zero_steps(self):
        g = build_complete_bipartite(3, 2)
        c = staircase_coloring(3, 2)
        tr = collapse_sequence(g, c, 0)
        assert tr.stages == (c,)
        assert tr.moved_edges == ()
        assert tr.f_values == (5,)

    def test_k_out_of_range(self):
        g = build_complete_bipartite(3, 2)
        c = staircase_coloring(3, 2)
        with pytest.raises(ValueError):
            collapse_sequence(g, c, -1)
        with pytest.raises(ValueError):
            collapse_sequence(g, c, 2)  # t - chi' = 4 - 3 = 1

    def test_trace_invariants(self):
        g = build_complete_bipartite(4, 3)
        c = staircase_coloring(4, 3)
        tr = collapse_sequence(g, c, 2)
        assert tr.stages[0] == c
        delta = g.max_degree()
        for j, stage in enumerate(tr.stages):
            assert stage.t == c.t - j
            assert validate(g, stage).ok
        for j, moved in enumerate(tr.moved_edges):
            before, after = tr.stages[j], tr.stages[j + 1]
            assert moved == color_class(g, before, before.t)
            for k in range(g.edge_count):
                if k in moved:
                    assert after.colors[k] == before.colors[k] - delta
                else:
                    assert after.colors[k] == before.colors[k]

    @pytest.mark.parametrize("m", range(2, 9))
    def test_interval_counts_along_full_trace(self, m):
        """Stage j keeps m+n interval vertices on squares and loses exactly
        one per step on wider rectangles; either way at least m+1 remain."""
        for n in range(2, m + 1):
            g = build_complete_bipartite(m, n)
            tr = collapse_sequence(g, staircase_coloring(m, n), n - 1)
            for j, f in enumerate(tr.f_values):
                if j == 0 or m == n:
                    assert f == m + n
                else:
                    assert f == m + n - j
                assert f >= m + 1

    @pytest.mark.parametrize("m", range(2, 9))
    def test_every_stage_stays_harmonic(self, m):
        for n in range(2, m + 1):
            g = build_complete_bipartite(m, n)
            tr = collapse_sequence(g, staircase_coloring(m, n), n - 1)
            for stage in tr.stages:
                assert is_harmonic(g, stage)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_max_degree_vertices_stay_interval(self, m):
        for n in range(2, m + 1):
            g = build_complete_bipartite(m, n)
            tr = collapse_sequence(g, staircase_coloring(m, n), n - 1)
            delta = g.max_degree()
            degs = g.degrees()
            anchored = summarize(g, tr.stages[0]).interval_vertices
            keep = {v for v in anchored if degs[v] == delta}
            for stage in tr.stages[1:]:
                assert keep <= summarize(g, stage).interval_vertices


class TestBlockScheme:
    def test_lone_member_gets_top_block(self):
        c = block_interval_on_Y(5, 2, 3)
        assert c.t == 6
        g = build_complete_bipartite(5, 2)
        s = summarize(g, c)
        assert s.spectra[y_vertex(2, 5)] == (5, 6)

    def test_single_group_is_latin_square(self):
        c = block_interval_on_Y(3, 3, 1)
        assert c.t == 3
        g = build_complete_bipartite(3, 3)
        s = summarize(g, c)
        assert s.interval_count == 6
        assert all(spec == (1, 2, 3) for spec in s.spectra)

    def test_max_groups_is_bijective(self):
        c = block_interval_on_Y(4, 2, 4)
        assert c.t == 8
        assert sorted(c.colors) == list(range(1, 9))
        g = build_complete_bipartite(4, 2)
        for j in range(1, 5):
            assert summarize(g, c).spectra[y_vertex(2, j)] == (2 * j - 1, 2 * j)

    def test_group_count_out_of_range(self):
        with pytest.raises(ValueError):
            block_interval_on_Y(5, 2, 2)  # below ceil(5/2)
        with pytest.raises(ValueError):
            block_interval_on_Y(5, 2, 6)  # above m

    def test_rejects_m_below_n(self):
        with pytest.raises(ValueError):
            block_interval_on_Y(2, 3, 2)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_valid_and_interval_on_Y_all_group_counts(self, m):
        for n in range(1, m + 1):
            g = build_complete_bipartite(m, n)
            ys = g.part("Y")
            lo = -(-m // n)
            for q in range(lo, m + 1):
                c = block_interval_on_Y(m, n, q)
                assert c.t == n * q
                assert validate(g, c).ok
                assert is_interval_on(g, c, ys)


class TestTraceJson:
    def test_round_trip(self):
        g = build_complete_bipartite(4, 3)
        tr = collapse_sequence(g, staircase_coloring(4, 3), 2)
        assert trace_from_json(trace_to_json(tr)) == tr

    def test_rejects_length_mismatch(self):
        g = build_complete_bipartite(3, 2)
        tr = collapse_sequence(g, staircase_coloring(3, 2), 1)
        doc = trace_to_json(tr)
        doc["moved"] = []
        with pytest.raises(ValueError):
            trace_from_json(doc)

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            trace_from_json({"stages": []})
