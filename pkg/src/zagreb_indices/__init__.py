"""Degree- and 2-distance-degree-based Zagreb-family graph indices.

The package computes the generalized first Zagreb index and coindex, their
leap analogues built on 2-distance degrees, profile-level closed forms for
all of them, sharp bounds with the families that attain them, and simple
index/property regressions.  See the README for a tour.
"""

from .closed_forms import (
    BoundReport,
    Inapplicable,
    RemainderDecomposition,
    bound_attained,
    bound_gap,
    bound_holds,
    degree_remainder_classification,
    degree_remainder_decomposition,
    leap_bound,
    leap_coindex_from_profile,
    leap_remainder_bound,
    leap_remainder_classification,
    leap_remainder_decomposition,
    leap_zagreb_from_profile,
    leap_zagreb_min_zero,
    secant_gap,
    step_gap,
    zagreb_bound,
    zagreb_coindex_from_profile,
    zagreb_from_profile,
    zagreb_remainder_bound,
)
from .families import (
    build_from_spec,
    build_named,
    cycle_graph,
    cycle_with_pendants,
    figure_graph,
    path_graph,
    star_graph,
    star_with_pendants,
    tetracene_degree_profile,
)
from .graph import (
    DegreeProfile,
    Graph,
    GraphConstructionError,
    TwoDistanceProfile,
    degree_profile,
    enumerate_connected_graphs,
    is_c3c4_free,
    parse_edge_list,
    random_connected_graph,
    read_edge_list,
    two_distance_profile,
    write_edge_list,
)
from .indices import (
    ExponentParam,
    first_leap_zagreb,
    first_leap_zagreb_coindex,
    first_zagreb,
    general_first_leap_zagreb,
    general_first_zagreb,
    general_first_zagreb_coindex,
)
from .regression import (
    CompoundRecord,
    RegressionResult,
    fit,
    load_bundled,
    load_dataset,
    reproduce_models,
)
from .sharpness import (
    SharpnessCase,
    SharpnessRow,
    default_cases,
    run_cases,
    scan_for_sharp_instances,
    verify_sharpness,
)

__version__ = "0.1.0"
