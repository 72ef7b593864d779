"""Exact arithmetic of scaled simplex numbers.

The package models integers as scaled triangles, tetrahedra and their
higher-dimensional orthogonal analogues.  Everything is exact: coordinates
are integers or `fractions.Fraction`, there are no floats anywhere in the
algebra, and renders are deterministic byte-for-byte.

Main entry points:

* `ring` - the element types and the embeddings of the integers.
* `forms` - formal sums of scaled simplices and the closed addition laws.
* `witnesses` - the composite-number witness equations and the
  witness/factor constructions in both directions.
* `eulerian` - Eulerian numbers, power identities and slice bases.
* `triples` - triangle triples and the small hypercomplex system.
* `chains` - lattice chains, placement plans and the tiling search.
* `render` - SVG output for chains and plans.
* `expr` / `cli` - the bracket expression language and the command line.
"""

from __future__ import annotations

from .chains import (
    Chain,
    PlacedPiece,
    PlacementPlan,
    SearchSpaceError,
    TilePiece,
    closed_triangle_plan,
    difference_plan,
    hexagon_plan,
    parallelogram_plan,
    partition_plan,
    realize,
    segment_sum_plan,
    tetrahedron_slabs,
    tiling_search,
    triangle_window,
)
from .eulerian import (
    SliceBasisVector,
    embed_nd,
    eulerian,
    eulerian_row,
    orthogonal_basis_matrix,
    slice_decomposition,
    slice_volumes,
    worpitzky,
)
from .expr import ExpressionError, evaluate_expression, parse, unparse
from .forms import (
    FormalCombination,
    StarDomainError,
    arithmetic_form,
    closed_sum,
    closed_sum_shifted,
    combination,
    evaluate,
    evaluate_orth,
    pairwise_sum,
    segment_form,
    star_product,
    three_term_form,
)
from .render import RenderOptions, chain_svg, plan_svg, to_svg
from .ring import (
    GeomElement2,
    GeomElement3,
    OrthElement,
    RepresentationError,
    SimplexLiteral,
    embed2,
    embed3,
    embed_literal,
    from_orth,
    series_partial_sum,
    to_orth,
)
from .triples import QSqrt3, TElement, Triple, epsilon_pair, triple_mul, triple_to_ring
from .witnesses import (
    Witness,
    WitnessError,
    composite_witness,
    factor_report,
    factors_from_witness,
    witness_from_factors,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "ExpressionError",
    "FormalCombination",
    "GeomElement2",
    "GeomElement3",
    "OrthElement",
    "PlacedPiece",
    "PlacementPlan",
    "QSqrt3",
    "RenderOptions",
    "RepresentationError",
    "SearchSpaceError",
    "SimplexLiteral",
    "SliceBasisVector",
    "StarDomainError",
    "TElement",
    "TilePiece",
    "Triple",
    "Witness",
    "WitnessError",
    "arithmetic_form",
    "chain_svg",
    "closed_sum",
    "closed_sum_shifted",
    "closed_triangle_plan",
    "combination",
    "composite_witness",
    "difference_plan",
    "embed2",
    "embed3",
    "embed_literal",
    "embed_nd",
    "epsilon_pair",
    "eulerian",
    "eulerian_row",
    "evaluate",
    "evaluate_expression",
    "evaluate_orth",
    "factor_report",
    "factors_from_witness",
    "from_orth",
    "hexagon_plan",
    "orthogonal_basis_matrix",
    "pairwise_sum",
    "parallelogram_plan",
    "parse",
    "partition_plan",
    "plan_svg",
    "realize",
    "segment_form",
    "segment_sum_plan",
    "series_partial_sum",
    "slice_decomposition",
    "slice_volumes",
    "star_product",
    "tetrahedron_slabs",
    "three_term_form",
    "tiling_search",
    "to_orth",
    "to_svg",
    "triangle_window",
    "triple_mul",
    "triple_to_ring",
    "unparse",
    "witness_from_factors",
    "worpitzky",
]
