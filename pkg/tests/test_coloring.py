"""Coloring validation, spectra, interval predicates, and the harmonic test."""

import pytest

import brute
from edgespectra.coloring import (
    EdgeColoring,
    InvalidColoringError,
    ValidationReport,
    color_class,
    coloring_from_json,
    coloring_to_json,
    is_harmonic,
    is_interval,
    is_interval_on,
    require_valid,
    spectrum,
    summarize,
    to_dot,
    validate,
)
from edgespectra.constructions import staircase_coloring
from edgespectra.graphs import build_complete_bipartite, build_cycle, build_path


def c4():
    return build_cycle(4)


class TestConstruction:
    def test_rejects_color_out_of_range(self):
        with pytest.raises(ValueError):
            EdgeColoring(2, (1, 3))
        with pytest.raises(ValueError):
            EdgeColoring(2, (0, 1))

    def test_rejects_nonpositive_t(self):
        with pytest.raises(ValueError):
            EdgeColoring(0, ())


class TestValidate:
    def test_clean_coloring(self):
        report = validate(c4(), EdgeColoring(2, (1, 2, 1, 2)))
        assert report.ok
        assert report.describe() == "ok"

    def test_adjacency_clashes_listed_as_pairs(self):
        report = validate(c4(), EdgeColoring(2, (1, 1, 2, 2)))
        assert report.adjacency_clashes == ((0, 1), (2, 3))
        assert not report.ok
        assert "share a vertex" in report.describe()

    def test_missing_color_listed(self):
        report = validate(build_path(3), EdgeColoring(3, (1, 2)))
        assert report.missing_colors == (3,)
        assert "color 3 unused" in report.describe()

    def test_length_mismatch_raises(self):
        with pytest.raises(ValueError):
            validate(c4(), EdgeColoring(2, (1, 2)))

    def test_out_of_range_entry_described(self):
        # not reachable through the EdgeColoring constructor, but the report
        # type still renders such entries
        report = ValidationReport((), (), ((0, 5),))
        assert not report.ok
        assert "edge 0" in report.describe()

    def test_require_valid_raises_with_report(self):
        with pytest.raises(InvalidColoringError) as exc:
            require_valid(c4(), EdgeColoring(2, (1, 1, 2, 2)))
        assert exc.value.report.adjacency_clashes


class TestSpectrum:
    def test_staircase_spectrum_example(self):
        g = build_complete_bipartite(3, 2)
        c = staircase_coloring(3, 2)
        assert c.colors == (1, 2, 3, 2, 3, 4)
        # y_2 sits at vertex index 3 and sees one edge from each x
        assert spectrum(g, c, 3) == (2, 3)
        assert spectrum(g, c, 0) == (1, 2, 3)

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            spectrum(c4(), EdgeColoring(2, (1, 2, 1, 2)), 4)


class TestIsInterval:
    def test_consecutive(self):
        assert is_interval([2, 3, 4])
        assert is_interval((5,))

    def test_gap(self):
        assert not is_interval([1, 3])
        assert not is_interval({1, 2, 4})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_interval(())


class TestSummarize:
    def test_cycle_three_of_four(self):
        s = summarize(c4(), EdgeColoring(4, (1, 2, 3, 4)))
        assert s.spectra == ((1, 4), (1, 2), (2, 3), (3, 4))
        assert s.interval_flags == (False, True, True, True)
        assert s.interval_vertices == frozenset({1, 2, 3})
        assert s.interval_count == 3

    def test_cycle_all_four(self):
        s = summarize(c4(), EdgeColoring(2, (1, 2, 1, 2)))
        assert s.interval_count == 4

    def test_invalid_coloring_rejected(self):
        with pytest.raises(InvalidColoringError):
            summarize(c4(), EdgeColoring(2, (1, 1, 2, 2)))

    def test_matches_independent_walk(self):
        g = build_complete_bipartite(3, 2)
        for colors in brute.proper_surjective(g.vertex_count, g.edges, 4):
            s = summarize(g, EdgeColoring(4, colors))
            assert s.interval_count == brute.interval_count(
                g.vertex_count, g.edges, colors
            )


class TestIntervalOn:
    def test_gap_at_one_vertex(self):
        g = c4()
        c = EdgeColoring(3, (1, 2, 1, 3))
        assert not is_interval_on(g, c, range(4))
        assert is_interval_on(g, c, {1, 2})

    def test_empty_subset_vacuous(self):
        assert is_interval_on(c4(), EdgeColoring(2, (1, 2, 1, 2)), ())


class TestColorClass:
    def test_staircase_classes(self):
        g = build_complete_bipartite(3, 2)
        c = staircase_coloring(3, 2)
        assert color_class(g, c, 2) == frozenset({1, 3})
        assert color_class(g, c, 1) == frozenset({0})
        assert color_class(g, c, 4) == frozenset({5})

    def test_color_out_of_range(self):
        with pytest.raises(ValueError):
            color_class(c4(), EdgeColoring(2, (1, 2, 1, 2)), 3)


def residue_classes_are_matchings(g, c):
    """Cross-formulation: colors sharing a residue mod the max degree must
    jointly form a matching."""
    delta = g.max_degree()
    for r in range(delta):
        ends = [
            v
            for k, col in enumerate(c.colors)
            if (col - 1) % delta == r
            for v in g.edges[k]
        ]
        if len(ends) != len(set(ends)):
            return False
    return True


class TestHarmonic:
    def test_max_degree_coloring_always_harmonic(self):
        g = build_complete_bipartite(2, 2)
        assert is_harmonic(g, EdgeColoring(2, (1, 2, 2, 1)))

    def test_staircase_is_harmonic(self):
        g = build_complete_bipartite(3, 2)
        assert is_harmonic(g, staircase_coloring(3, 2))

    def test_residue_clash_detected(self):
        g = build_complete_bipartite(2, 2)
        # x_2 sees colors 3 and 1, congruent mod 2
        assert not is_harmonic(g, EdgeColoring(3, (1, 2, 3, 1)))

    def test_agrees_with_matching_formulation(self):
        g = build_complete_bipartite(2, 2)
        for t in (2, 3, 4):
            for colors in brute.proper_surjective(g.vertex_count, g.edges, t):
                c = EdgeColoring(t, colors)
                assert is_harmonic(g, c) == residue_classes_are_matchings(g, c)

    def test_rejects_graph_needing_extra_color(self):
        g = build_cycle(5)
        with pytest.raises(ValueError):
            is_harmonic(g, EdgeColoring(3, (1, 2, 1, 2, 3)))

    def test_rejects_invalid_coloring(self):
        g = build_complete_bipartite(2, 2)
        with pytest.raises(InvalidColoringError):
            is_harmonic(g, EdgeColoring(2, (1, 1, 2, 2)))


class TestJson:
    def test_round_trip(self):
        c = staircase_coloring(4, 3)
        assert coloring_from_json(coloring_to_json(c)) == c

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            coloring_from_json({"colors": [1, 2]})
        with pytest.raises(ValueError):
            coloring_from_json({"t": 2, "colors": [1, "x"]})


class TestDot:
    def test_labels_and_double_rings(self):
        g = build_complete_bipartite(3, 2)
        dot = to_dot(g, staircase_coloring(3, 2))
        assert 'label="x1"' in dot
        assert 'label="y3"' in dot
        assert 'label="1"' in dot and 'label="4"' in dot
        # every vertex of the staircase has an interval spectrum
        assert dot.count("peripheries=2") == 5

    def test_plain_graph_without_coloring(self):
        dot = to_dot(build_cycle(4))
        assert "0 -- 1" in dot
        assert "peripheries" not in dot
