"""Verified combinatorics of k-box paths: a subfamily of skew Dyck paths in
bijection with tree tuples, k_t-Dyck paths and threshold sequences, with
exact enumeration by size, returns and long ascents."""

from .bijections import (
    BoxDecomposition,
    KtDyckPath,
    NotInvertible,
    ThresholdSequence,
    box_to_dyck_prefix,
    box_to_kt_dyck,
    box_to_threshold,
    box_to_tree_tuple,
    compose_box,
    decompose_box,
    embed_all_long,
    invert_return_injection,
    kt_dyck_to_box,
    parse_threshold,
    return_injection,
    threshold_to_box,
    tree_tuple_to_box,
)
from .counting import (
    binomial,
    catalan,
    count_box,
    count_box_by_long_ascents,
    count_box_by_returns,
    count_kt_dyck,
    count_tailed,
    fuss_catalan,
    lasc_mean,
    lasc_moment_sums,
    lasc_variance,
    narayana,
    returns_mean,
    returns_variance,
    second_gonal,
    tailed_proportion,
    tailed_proportion_limit,
)
from .paths import (
    Composition,
    InvalidPathError,
    ParseError,
    PathClass,
    PathStats,
    PathWord,
    Step,
    box_ascents,
    box_long_ascent_count,
    box_return_count,
    classify,
    composition_of,
    generate_dyck,
    generate_k_box,
    generate_skew_dyck,
    parse_composition,
    parse_path,
    path_of_composition,
    stats,
)
from .series import (
    BiSeries,
    augmented_long_ascent_residual,
    augmented_long_ascent_series,
    dump_coefficients,
    long_ascent_residual,
    long_ascent_series,
    returns_residual,
    returns_series,
    skew_equation_residual,
    solve_skew_dyck_series,
    tree_equation_residual,
    tree_series,
)
from .trees import (
    KAryTree,
    KDyckPath,
    TreeNode,
    TreeTuple,
    augmented_to_kdyck,
    format_tree,
    generate_trees,
    kdyck_to_augmented,
    kdyck_to_tree,
    parse_tree,
    tree_to_kdyck,
)

__version__ = "0.1.0"
