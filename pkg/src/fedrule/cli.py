"""Command-line interface: ingest -> fit-ols -> check-model -> train-ml ->
evaluate -> simulate, over a shared plain-text config file.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure
(singular design matrix or diverged training).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import dataset as ds
from . import mlp, ols, report, taylor

__all__ = ["RunConfig", "parse_config", "check_model", "run_pipeline", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

VINTAGE_NOTE = (
    "note: estimates depend on the data vintage and the inflation-series "
    "choice; refreshed source data shifts the reference values."
)

_DATA_ERRORS = (
    ds.ParseError,
    ds.DuplicateObservationError,
    ds.NoOverlapError,
    FileNotFoundError,
    IsADirectoryError,
    NotADirectoryError,
    PermissionError,
    ValueError,
)
_NUMERIC_ERRORS = (ols.SingularMatrixError, mlp.TrainingDivergedError)


def _fmt(x: float) -> str:
    """All numeric console output uses 6 significant digits."""
    return format(float(x), ".6g")


@dataclass
class RunConfig:
    """Pipeline configuration; config-file keys share these field names."""

    fedfunds_series_path: Path | None = None
    inflation_series_path: Path | None = None
    gdp_series_path: Path | None = None
    potential_gdp_series_path: Path | None = None
    r_star: float = 2.0
    pi_star: float = 2.0
    mu: float = 0.001
    epsilon: float = 1e-4
    max_epochs: int = 500
    seed: int = 42
    hidden_nodes: int = 6
    input_scaling: str = "raw"
    divergence_threshold: float = 2.0
    output_dir: Path = Path("out")

    def targets(self) -> ds.FixedTargets:
        return ds.FixedTargets(r_star=self.r_star, pi_star=self.pi_star)

    def train_config(self) -> mlp.TrainConfig:
        return mlp.TrainConfig(
            mu=self.mu,
            epsilon=self.epsilon,
            max_epochs=self.max_epochs,
            seed=self.seed,
            hidden_nodes=self.hidden_nodes,
            input_scaling=self.input_scaling,  # type: ignore[arg-type]
        )


_PATH_KEYS = {
    "fedfunds_series_path",
    "inflation_series_path",
    "gdp_series_path",
    "potential_gdp_series_path",
    "output_dir",
}
_INT_KEYS = {"max_epochs", "seed", "hidden_nodes"}
_FLOAT_KEYS = {"r_star", "pi_star", "mu", "epsilon", "divergence_threshold"}
_STR_KEYS = {"input_scaling"}


def parse_config(text: str) -> dict:
    """Parse the plain-text key-value config format (``key = value`` lines,
    ``#`` comments)."""
    known = _PATH_KEYS | _INT_KEYS | _FLOAT_KEYS | _STR_KEYS
    values: dict = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ValueError(f"config line {line_no}: expected 'key = value'")
        if key not in known:
            raise ValueError(f"config line {line_no}: unknown key {key!r}")
        try:
            if key in _PATH_KEYS:
                values[key] = Path(value)
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            else:
                values[key] = value
        except ValueError:
            raise ValueError(
                f"config line {line_no}: bad value {value!r} for {key}"
            ) from None
    return values


def load_run_config(config_path: Path | None, overrides: dict) -> RunConfig:
    values = parse_config(config_path.read_text()) if config_path else {}
    values.update({k: v for k, v in overrides.items() if v is not None})
    field_names = {f.name for f in fields(RunConfig)}
    assert set(values) <= field_names
    return RunConfig(**values)


# -- ingest ------------------------------------------------------------------


def _load_series(path: Path, role: str) -> tuple[ds.RawSeries, str]:
    text = Path(path).read_text()
    header_id = text.splitlines()[0].split(",")[-1].strip() if text else ""
    return ds.parse_fred_csv(text, role), header_id


def ingest(config: RunConfig) -> tuple[ds.Dataset, str]:
    """Read the four series files into a Dataset plus a summary of the
    recorded ingest decisions."""
    roles = (
        ("fedfunds", config.fedfunds_series_path),
        ("inflation", config.inflation_series_path),
        ("real_gdp", config.gdp_series_path),
        ("potential_gdp", config.potential_gdp_series_path),
    )
    loaded = {}
    lines = ["ingest summary:"]
    for role, path in roles:
        if path is None:
            raise ValueError(f"missing series path for {role} "
                             f"(set {role if role != 'real_gdp' else 'gdp'}_series_path)")
        series, header_id = _load_series(path, role)
        loaded[role] = series
        notes = [f"{len(series)} quarters"]
        if series.aggregated_quarters:
            notes.append(f"{series.aggregated_quarters} aggregated by monthly mean")
        if series.dropped_missing:
            notes.append(f"{series.dropped_missing} missing rows dropped")
        lines.append(f"  {role}: id={header_id or '?'}, " + ", ".join(notes))
    panel = ds.align_panel(
        loaded["fedfunds"], loaded["inflation"],
        loaded["real_gdp"], loaded["potential_gdp"],
    )
    data = ds.build_dataset(panel, config.targets())
    first, last = data.span()
    lines.append(f"  panel: {len(data)} quarters, {first}..{last} (inferred from overlap)")
    lines.append(f"  targets: r* = {_fmt(config.r_star)}, pi* = {_fmt(config.pi_star)}")
    lines.append("  output gap: 100*(y - y*)/y*; inflation gap: pi - pi*")
    return data, "\n".join(lines)


# -- fit-ols -----------------------------------------------------------------

_TERM_LABELS = {
    "intercept": "intercept (alpha)",
    "inflation": "inflation (pi)",
    "output_gap": "output gap (y - y*)",
}


def format_regression_block(result: ols.RegressionResult, title: str) -> str:
    lines = [title]
    for k, name in enumerate(ols.COLUMN_NAMES):
        coef = _fmt(result.coef[k]) + ols.significance_stars(float(result.p_value[k]))
        lines.append(
            f"  {_TERM_LABELS[name]:<22}{coef:<16}({_fmt(result.stderr[k])})"
        )
    lines.append(f"  {'Obs.':<22}{result.n_obs}")
    lines.append(f"  {'R^2':<22}{_fmt(result.r_squared)}")
    return "\n".join(lines)


def _structural_block(result: ols.RegressionResult, targets: ds.FixedTargets) -> str:
    full = ols.recover_structural(result.alpha, result.theta_pi, result.beta_y, targets)
    rounded = ols.recover_structural(
        round(result.alpha, 2), round(result.theta_pi, 2), result.beta_y, targets
    )
    return "\n".join([
        f"structural coefficients (r* = {_fmt(targets.r_star)}, pi* = {_fmt(targets.pi_star)}):",
        f"  full precision:      beta_1 = {_fmt(full.beta_1)}, "
        f"beta_pi = {_fmt(full.beta_pi)}, beta_y = {_fmt(full.beta_y)}",
        f"  from 2-d.p. rounding: beta_1 = {_fmt(rounded.beta_1)}, "
        f"beta_pi = {_fmt(rounded.beta_pi)}, beta_y = {_fmt(rounded.beta_y)}",
    ])


def write_regression_csv(result: ols.RegressionResult, path: Path) -> Path:
    lines = ["term,coefficient,stderr,t_stat,p_value,stars"]
    for k, name in enumerate(ols.COLUMN_NAMES):
        lines.append(
            f"{name},{result.coef[k]!r},{result.stderr[k]!r},"
            f"{result.t_stat[k]!r},{result.p_value[k]!r},"
            f"{ols.significance_stars(float(result.p_value[k]))}"
        )
    lines.append(f"r_squared,{result.r_squared!r},,,,")
    lines.append(f"n_obs,{result.n_obs},,,,")
    path.write_text("\n".join(lines) + "\n")
    return path


def write_residuals_csv(data: ds.Dataset, result: ols.RegressionResult, path: Path) -> Path:
    lines = ["date,actual,fitted,residual"]
    target = [r.fedfunds for r in data.rows]
    for row, actual, fitted, resid in zip(
        data.rows, target, result.fitted, result.residuals
    ):
        lines.append(f"{row.date},{actual!r},{fitted!r},{resid!r}")
    path.write_text("\n".join(lines) + "\n")
    return path


# -- check-model ---------------------------------------------------------------


def check_model(
    data: ds.Dataset, preset_name: str, tolerance: float = 1e-6
) -> tuple[str, bool]:
    """Fit against rates generated by a preset and compare the estimates to
    the algebraic expectation (alpha = r* - beta_pi*pi*, theta = beta_1 +
    beta_pi, beta_y)."""
    params = taylor.preset(preset_name)
    target = [taylor.rule_rate(r.inflation, r.output_gap, params) for r in data.rows]
    result = ols.fit_ols(data, target)
    expected = (
        params.r_star - params.beta_pi * params.pi_star,
        params.beta_1 + params.beta_pi,
        params.beta_y,
    )
    ok = all(abs(result.coef[k] - expected[k]) <= tolerance for k in range(3))
    lines = [
        format_regression_block(
            result, f"model check: {preset_name} target (n = {result.n_obs})"
        ),
        "  expected from rule algebra: "
        f"alpha = {_fmt(expected[0])}, theta_pi = {_fmt(expected[1])}, "
        f"beta_y = {_fmt(expected[2])}",
        ("PASS" if ok else "FAIL")
        + f": fitted coefficients vs expectation at tolerance {tolerance:g}",
    ]
    return "\n".join(lines), ok


# -- evaluate ------------------------------------------------------------------


def evaluate(
    data: ds.Dataset,
    estimator: mlp.MlEstimator,
    targets: ds.FixedTargets,
    out_dir: Path,
    threshold: float,
) -> tuple[list[Path], str]:
    """Build the three comparison series and emit every report artifact."""
    out_dir.mkdir(parents=True, exist_ok=True)
    actual = [r.fedfunds for r in data.rows]

    taylor_series = report.build_series(data, taylor.preset("taylor1993"), "taylor1993")
    fit = ols.fit_ols(data, actual)
    ols_series = report.build_series(data, fit, "ols")
    ml_series = report.build_series(data, estimator, "ml")
    all_series = [taylor_series, ols_series, ml_series]

    artifacts = [
        report.emit_csv(all_series, out_dir / "comparison.csv"),
        report.emit_svg([taylor_series], out_dir / "figure_a.svg",
                        title="Actual vs rule-implied federal funds rate"),
        report.emit_svg([taylor_series, ols_series], out_dir / "figure_b.svg",
                        title="Actual vs rule-implied and refitted rates"),
        report.emit_svg(all_series, out_dir / "figure_g.svg",
                        title="Actual vs rule, refit, and network estimates"),
    ]

    div_lines = ["model,start,end,peak_abs_error"]
    for s in all_series:
        for ep in report.find_divergences(s, threshold):
            div_lines.append(f"{s.model_name},{ep.start},{ep.end},{ep.peak_abs_error!r}")
    div_path = out_dir / "divergences.csv"
    div_path.write_text("\n".join(div_lines) + "\n")
    artifacts.append(div_path)

    summary = ["model comparison (error = actual - estimated):"]
    for s in all_series:
        st = ols.residual_stats(s.errors())
        mse = sum(e * e for e in s.errors()) / len(s)
        summary.append(
            f"  {s.model_name:<12} sum = {_fmt(st.sum)}, "
            f"abs sum = {_fmt(st.abs_sum)}, mse = {_fmt(mse)}"
        )
    ml_eps = report.find_divergences(ml_series, threshold)
    summary.append(
        f"  ml divergence episodes (|error| > {_fmt(threshold)}): "
        + (", ".join(f"{ep.start}..{ep.end} (peak {_fmt(ep.peak_abs_error)})"
                     for ep in ml_eps) or "none")
    )
    summary.append(VINTAGE_NOTE)
    return artifacts, "\n".join(summary)


# -- pipeline ------------------------------------------------------------------


class StageError(Exception):
    """Wraps a failure with the pipeline stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage}: {cause}")


def run_pipeline(config: RunConfig) -> list[Path]:
    """ingest -> fit-ols -> check-model -> train-ml -> evaluate, writing all
    artifacts into the output directory."""
    out = config.output_dir
    artifacts: list[Path] = []

    def stage(name, fn):
        try:
            return fn()
        except Exception as exc:
            raise StageError(name, exc) from exc

    def _ingest():
        data, summary = ingest(config)
        out.mkdir(parents=True, exist_ok=True)
        panel_path = out / "panel.csv"
        panel_path.write_text(ds.dataset_to_csv(data))
        artifacts.append(panel_path)
        print(summary)
        return data

    data = stage("ingest", _ingest)

    def _fit():
        result = ols.fit_ols(data, [r.fedfunds for r in data.rows])
        artifacts.append(write_regression_csv(result, out / "regression.csv"))
        artifacts.append(write_residuals_csv(data, result, out / "residuals.csv"))
        print(format_regression_block(
            result, f"implemented federal funds rate (n = {result.n_obs})"
        ))
        print(_structural_block(result, config.targets()))
        print(VINTAGE_NOTE)
        return result

    stage("fit-ols", _fit)

    def _check():
        block, ok = check_model(data, "taylor1993")
        print(block)
        if not ok:
            raise ArithmeticError("model check failed: fitted coefficients "
                                  "do not match the preset algebra")

    stage("check-model", _check)

    def _train():
        result = mlp.train(data, config.train_config())
        net_path = out / "network.txt"
        net_path.write_text(mlp.network_to_text(result))
        artifacts.append(net_path)
        trace_path = out / "train_trace.csv"
        trace_lines = ["epoch,mse,max_abs_error"]
        for k, (mse, mx) in enumerate(
            zip(result.report.mse_trace, result.report.max_abs_error_trace), start=1
        ):
            trace_lines.append(f"{k},{mse!r},{mx!r}")
        trace_path.write_text("\n".join(trace_lines) + "\n")
        artifacts.append(trace_path)
        print(f"training: {result.report.epochs_run} epochs, "
              f"stop = {result.report.stop_reason}, "
              f"final mse = {_fmt(result.report.final_mse)}")
        return result

    train_result = stage("train-ml", _train)

    def _evaluate():
        ev_artifacts, summary = evaluate(
            data, train_result.estimator(), config.targets(),
            out, config.divergence_threshold,
        )
        artifacts.extend(ev_artifacts)
        print(summary)

    stage("evaluate", _evaluate)
    return artifacts


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, default=None,
                   help="plain-text key=value config file")
    p.add_argument("--rstar", dest="r_star", type=float, default=None,
                   help="equilibrium real rate override (default 2)")
    p.add_argument("--pistar", dest="pi_star", type=float, default=None,
                   help="inflation target override (default 2)")


def _add_train_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", type=float, default=None,
                   help="gradient-descent step size (default 0.001)")
    p.add_argument("--epochs", dest="max_epochs", type=int, default=None,
                   help="maximum training epochs (default 500)")
    p.add_argument("--seed", type=int, default=None,
                   help="weight-initialization seed (default 42)")
    p.add_argument("--scale", action="store_true",
                   help="standardize inputs (z-score) before training")
    p.add_argument("--hidden", dest="hidden_nodes", type=int, default=None,
                   help="hidden-layer width (default 6)")
    p.add_argument("--epsilon", type=float, default=None,
                   help="per-sample convergence target (default 1e-4)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fedrule", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="align FRED-style series into a panel CSV")
    _add_config_flags(p)
    p.add_argument("--fedfunds", dest="fedfunds_series_path", type=Path, default=None,
                   help="federal funds rate series CSV")
    p.add_argument("--inflation", dest="inflation_series_path", type=Path, default=None,
                   help="inflation rate series CSV (percent)")
    p.add_argument("--gdp", dest="gdp_series_path", type=Path, default=None,
                   help="real GDP series CSV (level)")
    p.add_argument("--potential", dest="potential_gdp_series_path", type=Path,
                   default=None, help="potential real GDP series CSV (level)")
    p.add_argument("--out", type=Path, default=Path("panel.csv"),
                   help="panel CSV to write (default panel.csv)")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("fit-ols", help="fit the reduced-form regression")
    _add_config_flags(p)
    p.add_argument("--panel", type=Path, required=True, help="panel CSV from ingest")
    p.add_argument("--target-rule", default=None,
                   choices=list(taylor.PRESET_NAMES),
                   help="regress on rates generated by this preset instead "
                        "of the recorded fedfunds rates")
    p.add_argument("--out-dir", type=Path, default=Path("."),
                   help="directory for regression.csv and residuals.csv")
    p.set_defaults(func=cmd_fit_ols)

    p = sub.add_parser("check-model",
                       help="regress on preset-generated rates and verify the "
                            "coefficients recover the preset")
    _add_config_flags(p)
    p.add_argument("--panel", type=Path, required=True, help="panel CSV from ingest")
    p.add_argument("--preset", default="taylor1993",
                   choices=list(taylor.PRESET_NAMES), help="rule preset to check")
    p.set_defaults(func=cmd_check_model)

    p = sub.add_parser("train-ml", help="train the sigmoid network")
    _add_config_flags(p)
    _add_train_flags(p)
    p.add_argument("--panel", type=Path, required=True, help="panel CSV from ingest")
    p.add_argument("--out-dir", type=Path, default=Path("."),
                   help="directory for network.txt and train_trace.csv")
    p.set_defaults(func=cmd_train_ml)

    p = sub.add_parser("ml-estimate", help="run a trained network over a panel")
    p.add_argument("--network", type=Path, required=True,
                   help="network.txt weight dump from train-ml")
    p.add_argument("--panel", type=Path, required=True, help="panel CSV from ingest")
    p.add_argument("--out", type=Path, default=None,
                   help="output CSV (default: stdout)")
    p.set_defaults(func=cmd_ml_estimate)

    p = sub.add_parser("evaluate",
                       help="compare rule, refit, and network estimates; emit "
                            "CSV and SVG figures")
    _add_config_flags(p)
    _add_train_flags(p)
    p.add_argument("--panel", type=Path, required=True, help="panel CSV from ingest")
    p.add_argument("--network", type=Path, default=None,
                   help="trained network dump (default: train in place with "
                        "the configured defaults)")
    p.add_argument("--out", type=Path, required=True, help="output directory")
    p.add_argument("--threshold", type=float, default=None,
                   help="divergence threshold in percentage points (default 2)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("simulate", help="evaluate one rule at one (pi, gap) point")
    p.add_argument("--rule", default="taylor1993",
                   choices=list(taylor.PRESET_NAMES) + ["custom"],
                   help="preset name or 'custom'")
    p.add_argument("--pi", type=float, required=True, help="inflation rate, percent")
    p.add_argument("--gap", type=float, required=True, help="output gap, percent")
    p.add_argument("--beta1", type=float, default=None,
                   help="custom standalone-inflation coefficient")
    p.add_argument("--betapi", type=float, default=None,
                   help="custom inflation-gap coefficient")
    p.add_argument("--betay", type=float, default=None,
                   help="custom output-gap coefficient")
    p.add_argument("--rstar", type=float, default=None,
                   help="custom equilibrium real rate")
    p.add_argument("--pistar", type=float, default=None,
                   help="custom inflation target")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("plot", help="re-render the SVG figures from a "
                                    "previously emitted comparison.csv")
    p.add_argument("--comparison", type=Path, required=True,
                   help="comparison.csv from evaluate")
    p.add_argument("--out", type=Path, required=True, help="output directory")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("run", help="run the whole pipeline from a config file")
    _add_config_flags(p)
    _add_train_flags(p)
    p.add_argument("--out", dest="output_dir", type=Path, default=None,
                   help="output directory (default: out)")
    p.add_argument("--threshold", dest="divergence_threshold", type=float,
                   default=None, help="divergence threshold (default 2)")
    p.set_defaults(func=cmd_run)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    names = {f.name for f in fields(RunConfig)}
    overrides = {k: v for k, v in vars(args).items() if k in names}
    if getattr(args, "scale", False):
        overrides["input_scaling"] = "standardize"
    return load_run_config(args.config, overrides)


def _load_panel(path: Path, config: RunConfig) -> ds.Dataset:
    return ds.dataset_from_csv(Path(path).read_text(), config.targets())


# -- subcommand bodies ---------------------------------------------------------


def cmd_ingest(args) -> int:
    config = _config_from_args(args)
    data, summary = ingest(config)
    Path(args.out).write_text(ds.dataset_to_csv(data))
    print(summary)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_fit_ols(args) -> int:
    config = _config_from_args(args)
    data = _load_panel(args.panel, config)
    if args.target_rule:
        params = taylor.preset(args.target_rule)
        target = [taylor.rule_rate(r.inflation, r.output_gap, params)
                  for r in data.rows]
        title = f"{args.target_rule} target (n = {len(data)})"
    else:
        target = [r.fedfunds for r in data.rows]
        title = f"implemented federal funds rate (n = {len(data)})"
    result = ols.fit_ols(data, target)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    write_regression_csv(result, args.out_dir / "regression.csv")
    write_residuals_csv(data, result, args.out_dir / "residuals.csv")
    print(format_regression_block(result, title))
    print(_structural_block(result, config.targets()))
    st = ols.residual_stats(list(result.residuals))
    print(f"residual sum = {_fmt(st.sum)}, absolute sum = {_fmt(st.abs_sum)}")
    print(VINTAGE_NOTE)
    return EXIT_OK


def cmd_check_model(args) -> int:
    config = _config_from_args(args)
    data = _load_panel(args.panel, config)
    block, ok = check_model(data, args.preset)
    print(block)
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_train_ml(args) -> int:
    config = _config_from_args(args)
    data = _load_panel(args.panel, config)
    result = mlp.train(data, config.train_config())
    args.out_dir.mkdir(parents=True, exist_ok=True)
    net_path = args.out_dir / "network.txt"
    net_path.write_text(mlp.network_to_text(result))
    trace_lines = ["epoch,mse,max_abs_error"]
    for k, (mse, mx) in enumerate(
        zip(result.report.mse_trace, result.report.max_abs_error_trace), start=1
    ):
        trace_lines.append(f"{k},{mse!r},{mx!r}")
    (args.out_dir / "train_trace.csv").write_text("\n".join(trace_lines) + "\n")
    print(f"training: {result.report.epochs_run} epochs, "
          f"stop = {result.report.stop_reason}, "
          f"final mse = {_fmt(result.report.final_mse)}")
    print(f"wrote {net_path} and {args.out_dir / 'train_trace.csv'}")
    return EXIT_OK


def cmd_ml_estimate(args) -> int:
    estimator = mlp.network_from_text(Path(args.network).read_text())
    data = ds.dataset_from_csv(Path(args.panel).read_text())
    series = report.build_series(data, estimator, "ml")
    lines = ["date,actual,estimated,error"]
    for r in series.rows:
        lines.append(f"{r.date},{r.actual!r},{r.estimated!r},{r.error!r}")
    body = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(body)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    config = _config_from_args(args)
    data = _load_panel(args.panel, config)
    if args.network:
        estimator = mlp.network_from_text(Path(args.network).read_text())
    else:
        estimator = mlp.train(data, config.train_config()).estimator()
    artifacts, summary = evaluate(
        data, estimator, config.targets(), args.out, config.divergence_threshold
    )
    print(summary)
    print("wrote " + ", ".join(str(a) for a in artifacts))
    return EXIT_OK


def cmd_simulate(args) -> int:
    custom_flags = {
        "--beta1": args.beta1, "--betapi": args.betapi, "--betay": args.betay,
        "--rstar": args.rstar, "--pistar": args.pistar,
    }
    if args.rule == "custom":
        params = taylor.RuleParams(
            r_star=args.rstar if args.rstar is not None else 2.0,
            pi_star=args.pistar if args.pistar is not None else 2.0,
            beta_1=args.beta1 if args.beta1 is not None else 1.0,
            beta_pi=args.betapi if args.betapi is not None else 0.5,
            beta_y=args.betay if args.betay is not None else 0.5,
        )
    else:
        given = [flag for flag, v in custom_flags.items() if v is not None]
        if given:
            raise ValueError(
                f"{', '.join(given)} require --rule custom, not {args.rule!r}"
            )
        params = taylor.preset(args.rule)
    print(_fmt(taylor.rule_rate(args.pi, args.gap, params)))
    return EXIT_OK


def cmd_plot(args) -> int:
    series = report.load_comparison_csv(Path(args.comparison).read_text())
    if not series:
        raise ValueError("comparison file contains no series")
    args.out.mkdir(parents=True, exist_ok=True)
    figures = [
        ("figure_a.svg", series[:1], "Actual vs rule-implied federal funds rate"),
        ("figure_b.svg", series[:2], "Actual vs rule-implied and refitted rates"),
        ("figure_g.svg", series, "Actual vs rule, refit, and network estimates"),
    ]
    written = []
    for name, subset, title in figures:
        written.append(report.emit_svg(subset, args.out / name, title=title))
    print("wrote " + ", ".join(str(w) for w in written))
    return EXIT_OK


def cmd_run(args) -> int:
    config = _config_from_args(args)
    artifacts = run_pipeline(config)
    print(f"pipeline complete: {len(artifacts)} artifacts in {config.output_dir}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StageError as exc:
        print(f"fedrule: {exc}", file=sys.stderr)
        if isinstance(exc.cause, _NUMERIC_ERRORS):
            return EXIT_NUMERIC
        return EXIT_DATA
    except _NUMERIC_ERRORS as exc:
        print(f"fedrule {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except _DATA_ERRORS as exc:
        print(f"fedrule {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
