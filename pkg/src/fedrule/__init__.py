"""fedrule: reevaluate the Taylor Rule against implemented federal funds
rates, by OLS re-estimation and by a from-scratch sigmoid network trained
with online gradient descent."""

from .dataset import (
    Dataset,
    FixedTargets,
    Quarter,
    QuarterlyPanel,
    RawSeries,
    align_panel,
    build_dataset,
    compute_output_gap,
    dataset_from_csv,
    dataset_to_csv,
    parse_fred_csv,
)
from .mlp import (
    MlEstimator,
    Network,
    TrainConfig,
    TrainReport,
    backprop_step,
    forward,
    gradient_check,
    sigmoid,
    train,
)
from .ols import (
    RegressionResult,
    StructuralCoefficients,
    fit_ols,
    recover_structural,
    residual_stats,
    significance_stars,
)
from .report import (
    DivergenceEpisode,
    EstimateSeries,
    build_series,
    emit_csv,
    emit_svg,
    find_divergences,
)
from .taylor import RuleParams, preset, rule_rate

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "FixedTargets",
    "Quarter",
    "QuarterlyPanel",
    "RawSeries",
    "align_panel",
    "build_dataset",
    "compute_output_gap",
    "dataset_from_csv",
    "dataset_to_csv",
    "parse_fred_csv",
    "MlEstimator",
    "Network",
    "TrainConfig",
    "TrainReport",
    "backprop_step",
    "forward",
    "gradient_check",
    "sigmoid",
    "train",
    "RegressionResult",
    "StructuralCoefficients",
    "fit_ols",
    "recover_structural",
    "residual_stats",
    "significance_stars",
    "DivergenceEpisode",
    "EstimateSeries",
    "build_series",
    "emit_csv",
    "emit_svg",
    "find_divergences",
    "RuleParams",
    "preset",
    "rule_rate",
    "__version__",
]
