"""Computational skeletal modular tensor categories.

Fusion rings, F/R coherence verification, fusion-tree diagram evaluation,
symmetric special Frobenius algebras with their modules and bimodules, and
the derived conformal-field-theory observables (torus and defect partition
functions, annulus coefficients).
"""

from __future__ import annotations

from .errors import (
    FuscatError,
    IndexOutOfRange,
    MalformedTable,
    NondegeneracyFailure,
    NonIntegralTrace,
    NotInvertible,
    NotSpecial,
    ParseError,
    ShapeMismatch,
    SplitFailure,
)
from .fusion_ring import FusionRing, FusionRingReport, verify_fusion_ring
from .category import (
    SkeletalCategory,
    SMatrix,
    modular_relations,
    s_matrix,
    verify_category,
    verify_hexagon,
    verify_pentagon,
    verify_ribbon,
    verlinde_check,
)
from .reporting import CheckResult, ReportDocument, parse_report, render_table
from .trees import admissible_totals, count_trees, fusion_trees, tree_index
from .morphism import (
    Morphism,
    braid,
    cap,
    cap_right,
    compose,
    cup,
    cup_right,
    dim_hom,
    identity,
    partial_trace_last,
    random_morphism,
    tensor,
    trace,
    twist,
    zero,
)
from . import blocks
from .blocks import BlockMorphism, SumObject
from .algebra import (
    FrobeniusAlgebra,
    NetworkSpec,
    cardy_algebra,
    check_algebra,
    check_jandl,
    closed_network_library,
    evaluate_algebra_network,
    network_morphism,
    normalize_specialness,
    pachner_move_pairs,
    simple_current_candidate,
)
from .modules import (
    Bimodule,
    LeftModule,
    bimodule_hom_dim,
    check_bimodule,
    check_module,
    decompose_bimodule,
    decompose_module,
    defect_fusion_table,
    dress_bimodule,
    induced_bimodule,
    induced_module,
    list_simple_bimodules,
    list_simple_modules,
    module_hom_dim,
    regular_bimodule,
    tensor_over_A,
    underlying_multiplicities,
)
from .observables import (
    AnnulusTensor,
    PartitionTable,
    annulus_coefficients,
    check_modular_invariance,
    check_nimrep,
    defect_partition_function,
    torus_partition_function,
)
from .data_io import (
    bundled_names,
    bundled_path,
    load_algebra,
    load_category,
    parse_algebra,
    parse_category,
    save_algebra,
    save_category,
    write_algebra,
    write_category,
)

__version__ = "0.1.0"
