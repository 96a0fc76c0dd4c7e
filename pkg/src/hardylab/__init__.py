"""hardylab: a numerical laboratory for bounded analytic functions on the disc.

Boundary data lives on a uniform grid over the unit circle.  From there the
package synthesizes outer functions from log-modulus data, splits bounded
functions into inner and outer factors, estimates essential zero sets,
measures Toeplitz/Szego density profiles, and builds certified bounded
approximate units for the closed ideals those zero sets cut out.
"""

from .catalog import CatalogEntry, catalog_names, example_boundary, get_example, oracle_corpus
from .errors import (
    EmptyRegion,
    HardyLabError,
    HypothesisFailed,
    NormExceeded,
    NotAnalytic,
    NotCertified,
    NotInZinfty,
    NotOuter,
    PointOnBoundary,
    RangeMiss,
    SingularPoint,
    StrategyInapplicable,
    UnboundedLogData,
    UnknownExample,
    ZeroFunction,
)
from .factorization import (
    CLIP_FLOOR,
    FactorizationResult,
    OuterFn,
    blaschke,
    clipped_log_modulus,
    inner_outer,
    is_inner,
    is_outer,
    singular_inner,
    singular_inner_boundary,
    synth_outer,
)
from .grid import (
    ArcSet,
    BoundarySignal,
    CircleGrid,
    complement,
    constant_signal,
    dilate,
    ess_inf_on,
    ess_sup_on,
    intersect,
    measure,
    signal_from_csv,
    signal_from_values,
    signal_to_csv,
    sublevel_set,
    union,
)
from .hardy import (
    AnalyticRep,
    analytic_projection,
    conjugate_function,
    evaluate,
    h2_norm,
    herglotz_integral,
    poisson_integral,
    radial_trace,
    sup_norm,
)
from .ideals import (
    Certificate,
    CombinedUnit,
    IdealSpec,
    PeakPreparation,
    PeakStage,
    UnitStage,
    analytic_prime_check,
    approx_unit_peak,
    approx_unit_sublevel,
    certify_mideal,
    combine_units,
    ess_inf,
    ideal,
    membership,
    prepare_peak,
)
from .reproduce import bundle_names, run_bundle
from .serialize import (
    certificate_report,
    dump_text,
    dumps,
    extension_report,
    zero_set_report,
    zinfty_report_dict,
)
from .toeplitz import (
    ToeplitzTruncation,
    adjoint_kernel_dim,
    density_profile,
    density_profile_csv,
    szego_distance,
    toeplitz_matrix,
)
from .zerosets import (
    ExtensionResult,
    ZeroCandidate,
    ZeroSetEstimate,
    ZinftyReport,
    continuous_extension,
    essential_zero_set,
    in_disc_algebra,
    in_zinfty,
    oscillation,
    zinfty_report,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticRep",
    "ArcSet",
    "BoundarySignal",
    "CLIP_FLOOR",
    "CatalogEntry",
    "Certificate",
    "CircleGrid",
    "CombinedUnit",
    "EmptyRegion",
    "ExtensionResult",
    "FactorizationResult",
    "HardyLabError",
    "HypothesisFailed",
    "IdealSpec",
    "NormExceeded",
    "NotAnalytic",
    "NotCertified",
    "NotInZinfty",
    "NotOuter",
    "OuterFn",
    "PeakPreparation",
    "PeakStage",
    "PointOnBoundary",
    "RangeMiss",
    "SingularPoint",
    "StrategyInapplicable",
    "ToeplitzTruncation",
    "UnboundedLogData",
    "UnitStage",
    "UnknownExample",
    "ZeroCandidate",
    "ZeroFunction",
    "ZeroSetEstimate",
    "ZinftyReport",
    "adjoint_kernel_dim",
    "analytic_prime_check",
    "analytic_projection",
    "approx_unit_peak",
    "approx_unit_sublevel",
    "blaschke",
    "bundle_names",
    "catalog_names",
    "certificate_report",
    "certify_mideal",
    "clipped_log_modulus",
    "combine_units",
    "complement",
    "conjugate_function",
    "constant_signal",
    "continuous_extension",
    "density_profile",
    "density_profile_csv",
    "dilate",
    "dump_text",
    "dumps",
    "ess_inf",
    "ess_inf_on",
    "ess_sup_on",
    "essential_zero_set",
    "evaluate",
    "example_boundary",
    "extension_report",
    "get_example",
    "h2_norm",
    "herglotz_integral",
    "ideal",
    "in_disc_algebra",
    "in_zinfty",
    "inner_outer",
    "intersect",
    "is_inner",
    "is_outer",
    "measure",
    "membership",
    "oracle_corpus",
    "oscillation",
    "poisson_integral",
    "prepare_peak",
    "radial_trace",
    "run_bundle",
    "signal_from_csv",
    "signal_from_values",
    "signal_to_csv",
    "singular_inner",
    "singular_inner_boundary",
    "sublevel_set",
    "sup_norm",
    "synth_outer",
    "szego_distance",
    "toeplitz_matrix",
    "union",
    "zero_set_report",
    "zinfty_report",
    "zinfty_report_dict",
]
