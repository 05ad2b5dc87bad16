"""Exact dimension bookkeeping for rank-2 bundle moduli on a product of curves.

The package computes, over exact integer arithmetic only:

* cohomology dimensions of line bundles on curves and on products of two
  Pic-independent curves (:mod:`modulidim.curves`, :mod:`modulidim.surface`),
* per-component deformation ledgers around split and nonfiltrable unstable
  bundles, with codimension-margin verdicts (:mod:`modulidim.kuranishi`),
* Ext dimensions against point-supported quotients and the locally-free
  extension criterion (:mod:`modulidim.skyscraper`),
* dimension lower bounds for families consisting only of unstable bundles
  (:mod:`modulidim.unstable`),
* independent brute-force oracles validating the closed forms at desk
  scale (:mod:`modulidim.oracle`).

The ``modulidim`` command line exposes all of it as JSON or markdown
reports; see :mod:`modulidim.cli`.
"""

from .curves import (
    Curve,
    CurveLineBundle,
    Triviality,
    canonical_degree,
    euler_characteristic,
    h0_h1,
    h1_vanishes,
    serre_dual_degree,
)
from .dims import Dim, IndeterminateDimensionError
from .kuranishi import (
    ComparisonReport,
    KuranishiReport,
    NonfiltrableStratum,
    SplitStratum,
    component_report,
    homology_comparison_report,
    kirwan_vanishing_range,
    nonfiltrable_report,
    tangent_dims_split,
    toy_domain_dim,
    toy_unstable_codim,
)
from .oracle import (
    KoszulModel,
    TruncationWindow,
    cech_h_p1,
    cech_h_product,
    koszul_ext,
)
from .skyscraper import (
    ExtensionClass,
    SkyscraperQuotient,
    ext1_FF_decomposition,
    ext_dims_QF,
    ext_dims_QM,
    ext_dims_QQ,
    is_locally_free_extension,
    killed_pairings_check,
)
from .surface import (
    BidegreeBundle,
    Polarization,
    PreconditionError,
    ProductSurface,
    SurfaceTopology,
    c2_of_extension,
    degree_wrt,
    intersection,
    is_destabilizing,
    kunneth_h,
    moduli_real_dimension,
    singular_locus_h0,
    surface_topology,
    twist,
)
from .unstable import (
    SelectedTwist,
    UnstableFamilySpec,
    ValidationVerdict,
    dim_lower_bound,
    q_length,
    select_twist,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BidegreeBundle",
    "ComparisonReport",
    "Curve",
    "CurveLineBundle",
    "Dim",
    "ExtensionClass",
    "IndeterminateDimensionError",
    "KoszulModel",
    "KuranishiReport",
    "NonfiltrableStratum",
    "Polarization",
    "PreconditionError",
    "ProductSurface",
    "SelectedTwist",
    "SkyscraperQuotient",
    "SplitStratum",
    "SurfaceTopology",
    "TruncationWindow",
    "Triviality",
    "UnstableFamilySpec",
    "ValidationVerdict",
    "c2_of_extension",
    "canonical_degree",
    "cech_h_p1",
    "cech_h_product",
    "component_report",
    "degree_wrt",
    "dim_lower_bound",
    "euler_characteristic",
    "ext1_FF_decomposition",
    "ext_dims_QF",
    "ext_dims_QM",
    "ext_dims_QQ",
    "h0_h1",
    "h1_vanishes",
    "homology_comparison_report",
    "intersection",
    "is_destabilizing",
    "is_locally_free_extension",
    "killed_pairings_check",
    "kirwan_vanishing_range",
    "koszul_ext",
    "kunneth_h",
    "moduli_real_dimension",
    "nonfiltrable_report",
    "q_length",
    "select_twist",
    "serre_dual_degree",
    "singular_locus_h0",
    "surface_topology",
    "tangent_dims_split",
    "toy_domain_dim",
    "toy_unstable_codim",
    "twist",
    "validate",
]
