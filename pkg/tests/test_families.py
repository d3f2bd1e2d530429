import pytest

from zagreb_indices.families import (
    FAMILIES,
    build_from_spec,
    build_named,
    complete_graph,
    cycle_graph,
    cycle_with_pendants,
    figure_graph,
    path_graph,
    star_graph,
    star_with_pendants,
    tetracene_degree_profile,
)
from zagreb_indices.graph import DegreeProfile, degree_profile, is_c3c4_free, two_distance_profile


def test_path_cycle_star_complete():
    assert path_graph(4).degrees() == (1, 2, 2, 1)
    assert cycle_graph(5).degrees() == (2, 2, 2, 2, 2)
    assert star_graph(5).degrees() == (4, 1, 1, 1, 1)
    k4 = complete_graph(4)
    assert k4.edge_count == 6
    with pytest.raises(ValueError):
        path_graph(0)
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_figure_graphs_shapes():
    # (n, m, is c3/c4-free) for each worked example
    expect = {
        1: (12, 12, False),
        2: (6, 6, False),
        3: (19, 19, False),
        4: (10, 9, True),
        5: (7, 6, True),
        6: (9, 8, True),
    }
    for idx, (n, m, free) in expect.items():
        g = figure_graph(idx)
        assert g.vertex_count == n
        assert g.edge_count == m
        assert g.is_connected()
        assert is_c3c4_free(g) == free
    with pytest.raises(ValueError):
        figure_graph(7)


def test_figure_degree_profiles():
    assert degree_profile(figure_graph(1)).freq == {1: 8, 4: 4}
    assert degree_profile(figure_graph(2)).freq == {1: 2, 2: 3, 4: 1}
    assert degree_profile(figure_graph(3)).freq == {1: 15, 5: 1, 6: 3}


def test_figure_two_distance_profiles():
    assert two_distance_profile(figure_graph(4)).freq == {1: 4, 4: 6}
    assert two_distance_profile(figure_graph(5)).freq == {1: 2, 2: 4, 4: 1}
    assert two_distance_profile(figure_graph(6)).freq == {1: 3, 3: 1, 4: 5}


def test_cycle_with_pendants_profile():
    # p-1 cycle vertices carry r pendants, one carries r-1
    g = cycle_with_pendants(4, 2)
    assert g.vertex_count == 11
    assert g.edge_count == 11
    assert degree_profile(g).freq == {1: 7, 3: 1, 4: 3}
    assert g.is_connected()

    g = cycle_with_pendants(3, 1)
    assert degree_profile(g).freq == {1: 2, 2: 1, 3: 2}

    with pytest.raises(ValueError):
        cycle_with_pendants(2, 1)
    with pytest.raises(ValueError):
        cycle_with_pendants(3, 0)


def test_star_with_pendants_profile():
    g = star_with_pendants(6, 3)
    assert g.vertex_count == 9
    assert is_c3c4_free(g)
    assert two_distance_profile(g).freq == {1: 3, 3: 1, 4: 5}

    g = star_with_pendants(7, 4)
    assert two_distance_profile(g).freq == {1: 4, 4: 1, 5: 6}

    with pytest.raises(ValueError):
        star_with_pendants(4, 2)  # star too small
    with pytest.raises(ValueError):
        star_with_pendants(6, 1)  # too few pendants
    with pytest.raises(ValueError):
        star_with_pendants(6, 4)  # too many pendants


def test_star_with_pendants_matches_figure6_profiles():
    # same construction up to relabeling of the star's leaves
    built, fig = star_with_pendants(6, 3), figure_graph(6)
    assert degree_profile(built) == degree_profile(fig)
    assert two_distance_profile(built) == two_distance_profile(fig)


def test_tetracene_profile():
    prof = tetracene_degree_profile(1)
    assert prof == DegreeProfile(18, 21, {2: 12, 3: 6})
    prof3 = tetracene_degree_profile(3)
    assert prof3.vertex_count == 54
    assert prof3.edge_count == 67
    assert prof3.freq == {2: 28, 3: 26}
    with pytest.raises(ValueError):
        tetracene_degree_profile(0)


def test_build_named_and_spec():
    assert build_named("figure2") == figure_graph(2)
    assert build_named("cycle_pendants", 4, 2) == cycle_with_pendants(4, 2)
    assert build_from_spec("star_pendants:6,3") == star_with_pendants(6, 3)
    assert build_from_spec("figure1") == figure_graph(1)
    prof = build_from_spec("tetracene_profile:2")
    assert isinstance(prof, DegreeProfile)

    with pytest.raises(ValueError):
        build_named("no_such_family")
    with pytest.raises(ValueError):
        build_from_spec("cycle_pendants:4")  # wrong arity
    with pytest.raises(ValueError):
        build_from_spec("figure2:9")  # parameters where none belong
    with pytest.raises(ValueError):
        build_from_spec("cycle_pendants:4,x")


def test_registry_tags_are_buildable():
    for tag, (_, arity) in FAMILIES.items():
        params = {0: (), 1: (3,), 2: (6, 2)}[arity]
        built = build_named(tag, *params)
        assert built is not None
