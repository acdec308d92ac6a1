"""Exact local densities, census tables and certified lower bounds for
elliptic curves over Q in short Weierstrass form."""

from ._version import __version__
from .intervals import QInterval
from .ffcurve import (
    ClassCounts,
    PointClass,
    ResidueClass,
    classify_residue,
    count_points,
    discriminant_mod,
    residue_class_counts,
)
from .localdata import (
    KodairaType,
    ReductionKind,
    TamagawaAnomalyCount,
    is_globally_minimal,
    is_minimal_at,
    is_split_multiplicative,
    kodaira_type,
    naive_height,
    tamagawa_anomaly_count,
    tamagawa_p_part,
    valuation,
)
from .density import (
    CongruenceDatum,
    congruence_density,
    density_good,
    density_In,
    density_In_at_least,
    minimal_density,
    prescribed_In_density,
    valuation_box_measure,
)
from .bounds import (
    BoundReport,
    FamilyDensity,
    euler_divisibility_bound,
    growth_family_density,
    kodaira_multiple_weight,
    mu_lambda_bound,
    prime_symmetric_sum,
    selmer_growth_bound,
    zeta_reciprocal,
)
from .survey import (
    HeightWindow,
    MonteCarloResult,
    SurveyRecord,
    SurveySummary,
    count_pairs,
    empirical_euler_divisibility,
    empirical_kodaira_density,
    empirical_minimal_density,
    empirical_selmer_growth,
    enumerate_curves,
    montecarlo_local_measure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
