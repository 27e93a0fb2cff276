"""Single-hidden-layer sigmoid network trained by online gradient descent.

The network maps (inflation, output gap) to a federal funds rate through a
hidden layer of N sigmoid nodes (N = 6 by default) with no bias terms:

    u_n = w[pi][n] * pi + w[gap][n] * gap
    z_n = 1 / (1 + exp(-u_n))
    i_hat = sum_n v[n] * z_n

Training applies one weight update per observation, in chronological
order.  For error e = i - i_hat and squared loss E = e^2 / 2 the descent
steps are

    v[n]    += mu * e * z_n
    w[j][n] += mu * e * v[n] * x_j * z_n * (1 - z_n)

with both partials evaluated at the pre-update weights, since they are
derivatives of the same loss at the same point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .dataset import Dataset

__all__ = [
    "Network",
    "HiddenState",
    "Sample",
    "Scaler",
    "TrainConfig",
    "TrainReport",
    "TrainResult",
    "MlEstimator",
    "TrainingDivergedError",
    "sigmoid",
    "forward",
    "backprop_step",
    "train",
    "gradient_check",
    "network_to_text",
    "network_from_text",
]

INPUT_NAMES = ("pi", "gap")


class TrainingDivergedError(ArithmeticError):
    """Training produced a non-finite error; try a smaller step size."""

    def __init__(self, epoch: int):
        self.epoch = epoch
        super().__init__(
            f"training diverged at epoch {epoch}: non-finite error; "
            "try a smaller step size (mu)"
        )


@dataclass(frozen=True)
class Network:
    """Weights of the two-input network: w is 2xN (input -> hidden, rows
    ordered pi then gap), v is length N (hidden -> output)."""

    w: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        if self.w.ndim != 2 or self.w.shape[0] != 2:
            raise ValueError(f"w must be 2xN, got shape {self.w.shape}")
        if self.v.shape != (self.w.shape[1],):
            raise ValueError(
                f"v must have length {self.w.shape[1]}, got shape {self.v.shape}"
            )
        self.w.setflags(write=False)
        self.v.setflags(write=False)

    @property
    def hidden_nodes(self) -> int:
        return self.w.shape[1]

    @classmethod
    def initialize(cls, hidden_nodes: int, seed: int) -> "Network":
        """Draw all weights uniformly from [-0.5, 0.5]; w first, then v."""
        rng = np.random.default_rng(seed)
        w = rng.uniform(-0.5, 0.5, size=(2, hidden_nodes))
        v = rng.uniform(-0.5, 0.5, size=hidden_nodes)
        return cls(w=w, v=v)


@dataclass(frozen=True)
class HiddenState:
    """Pre-activations u and activations z = sigmoid(u) of one forward pass."""

    u: np.ndarray
    z: np.ndarray


@dataclass(frozen=True)
class Sample:
    pi: float
    gap: float
    i_actual: float


@dataclass(frozen=True)
class Scaler:
    """Z-score transform fitted on the training set; the stored moments are
    the inverse-transform metadata."""

    pi_mean: float
    pi_std: float
    gap_mean: float
    gap_std: float

    @classmethod
    def fit(cls, dataset: Dataset) -> "Scaler":
        pi = np.array([r.inflation for r in dataset.rows])
        gap = np.array([r.output_gap for r in dataset.rows])
        # constant column: leave it unscaled rather than divide by zero
        pi_std = float(pi.std()) or 1.0
        gap_std = float(gap.std()) or 1.0
        return cls(float(pi.mean()), pi_std, float(gap.mean()), gap_std)

    def transform(self, pi: float, gap: float) -> tuple[float, float]:
        return (pi - self.pi_mean) / self.pi_std, (gap - self.gap_mean) / self.gap_std


@dataclass(frozen=True)
class TrainConfig:
    """Training hyperparameters.

    The per-sample error target epsilon follows the convergence condition
    |e| < 1e-4, applied as the max over a full epoch.  The step size mu
    defaults to 0.001 with raw percent inputs.
    """

    mu: float = 0.001
    epsilon: float = 1e-4
    max_epochs: int = 500
    seed: int = 42
    hidden_nodes: int = 6
    input_scaling: Literal["raw", "standardize"] = "raw"

    def __post_init__(self) -> None:
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_epochs < 1:
            raise ValueError(f"max_epochs must be >= 1, got {self.max_epochs}")
        if self.hidden_nodes < 1:
            raise ValueError(f"hidden_nodes must be >= 1, got {self.hidden_nodes}")
        if self.input_scaling not in ("raw", "standardize"):
            raise ValueError(f"unknown input_scaling {self.input_scaling!r}")


@dataclass(frozen=True)
class TrainReport:
    epochs_run: int
    stop_reason: Literal["converged", "max_epochs"]
    mse_trace: tuple[float, ...]
    max_abs_error_trace: tuple[float, ...]

    @property
    def final_mse(self) -> float:
        return self.mse_trace[-1]


@dataclass(frozen=True)
class TrainResult:
    net: Network
    report: TrainReport
    config: TrainConfig
    scaler: Scaler | None = None

    def estimator(self) -> "MlEstimator":
        return MlEstimator(net=self.net, scaler=self.scaler)


@dataclass(frozen=True)
class MlEstimator:
    """A trained network plus the input transform it was trained under."""

    net: Network
    scaler: Scaler | None = None

    def predict(self, pi: float, gap: float) -> float:
        if self.scaler is not None:
            pi, gap = self.scaler.transform(pi, gap)
        i_hat, _ = forward(pi, gap, self.net)
        return i_hat


def sigmoid(u):
    """Logistic function 1/(1 + exp(-u)), stable over the whole float range.

    Accepts a scalar or a 1-d array; branches on sign so the exponent never
    overflows.
    """
    if isinstance(u, np.ndarray):
        out = np.empty(u.shape)
        pos = u >= 0
        out[pos] = 1.0 / (1.0 + np.exp(-u[pos]))
        eu = np.exp(u[~pos])
        out[~pos] = eu / (1.0 + eu)
        return out
    u = float(u)
    if u >= 0:
        return 1.0 / (1.0 + math.exp(-u))
    eu = math.exp(u)
    return eu / (1.0 + eu)


def forward(pi: float, gap: float, net: Network) -> tuple[float, HiddenState]:
    """One forward pass; the hidden state is returned for reuse in backprop."""
    u = net.w[0] * pi + net.w[1] * gap
    z = sigmoid(u)
    i_hat = float(net.v @ z)
    return i_hat, HiddenState(u=u, z=z)


def backprop_step(sample: Sample, net: Network, mu: float) -> tuple[Network, float]:
    """One online gradient-descent update; returns the new weights and the
    error e = i - i_hat measured at the old weights."""
    i_hat, state = forward(sample.pi, sample.gap, net)
    e = sample.i_actual - i_hat
    g = e * net.v * state.z * (1.0 - state.z)
    new_w = np.empty_like(net.w)
    new_w[0] = net.w[0] + mu * sample.pi * g
    new_w[1] = net.w[1] + mu * sample.gap * g
    new_v = net.v + mu * e * state.z
    return Network(w=new_w, v=new_v), e


def _loss_gradients(net: Network, sample: Sample) -> tuple[np.ndarray, np.ndarray, float]:
    """Analytic dE/dw (2xN) and dE/dv (N,) for E = (i - i_hat)^2 / 2."""
    _, state = forward(sample.pi, sample.gap, net)
    i_hat = float(net.v @ state.z)
    e = sample.i_actual - i_hat
    dv = -e * state.z
    common = -e * net.v * state.z * (1.0 - state.z)
    dw = np.vstack((sample.pi * common, sample.gap * common))
    return dw, dv, e


def gradient_check(net: Network, sample: Sample, h: float = 1e-6) -> float:
    """Worst deviation between the analytic gradient and central finite
    differences of the squared loss, relative to the largest gradient
    magnitude.

    The global normalization keeps the measure meaningful when individual
    components sit on a saturated sigmoid and are dominated by rounding
    noise in the difference quotient.
    """
    if h <= 0:
        raise ValueError(f"h must be positive, got {h}")

    def loss(w: np.ndarray, v: np.ndarray) -> float:
        probe = Network(w=w.copy(), v=v.copy())
        i_hat, _ = forward(sample.pi, sample.gap, probe)
        return 0.5 * (sample.i_actual - i_hat) ** 2

    dw, dv, _ = _loss_gradients(net, sample)
    fd_w = np.empty_like(dw)
    fd_v = np.empty_like(dv)
    for j in range(2):
        for n in range(net.hidden_nodes):
            w_plus = net.w.copy()
            w_minus = net.w.copy()
            w_plus[j, n] += h
            w_minus[j, n] -= h
            fd_w[j, n] = (loss(w_plus, net.v) - loss(w_minus, net.v)) / (2.0 * h)
    for n in range(net.hidden_nodes):
        v_plus = net.v.copy()
        v_minus = net.v.copy()
        v_plus[n] += h
        v_minus[n] -= h
        fd_v[n] = (loss(net.w, v_plus) - loss(net.w, v_minus)) / (2.0 * h)

    deviation = max(np.abs(dw - fd_w).max(), np.abs(dv - fd_v).max())
    scale = max(
        np.abs(dw).max(), np.abs(dv).max(),
        np.abs(fd_w).max(), np.abs(fd_v).max(),
        1e-12,
    )
    return float(deviation / scale)


def train(dataset: Dataset, config: TrainConfig) -> TrainResult:
    """Online gradient descent over full chronological passes.

    Stops once the largest per-sample |e| over an epoch falls below
    epsilon, or at max_epochs.  Deterministic given (dataset, config).
    Raises :class:`TrainingDivergedError` as soon as a non-finite error
    appears, naming the epoch.
    """
    if not dataset.rows:
        raise ValueError("dataset is empty")

    scaler = Scaler.fit(dataset) if config.input_scaling == "standardize" else None
    samples = []
    for r in dataset.rows:
        pi, gap = r.inflation, r.output_gap
        if scaler is not None:
            pi, gap = scaler.transform(pi, gap)
        samples.append(Sample(pi=pi, gap=gap, i_actual=r.fedfunds))

    net = Network.initialize(config.hidden_nodes, config.seed)
    mse_trace: list[float] = []
    max_abs_trace: list[float] = []
    stop_reason: Literal["converged", "max_epochs"] = "max_epochs"
    epochs_run = 0
    for epoch in range(1, config.max_epochs + 1):
        sq_sum = 0.0
        max_abs = 0.0
        for sample in samples:
            net, e = backprop_step(sample, net, config.mu)
            if not math.isfinite(e):
                raise TrainingDivergedError(epoch)
            sq_sum += e * e
            max_abs = max(max_abs, abs(e))
        epochs_run = epoch
        mse_trace.append(sq_sum / len(samples))
        max_abs_trace.append(max_abs)
        if max_abs < config.epsilon:
            stop_reason = "converged"
            break

    report = TrainReport(
        epochs_run=epochs_run,
        stop_reason=stop_reason,
        mse_trace=tuple(mse_trace),
        max_abs_error_trace=tuple(max_abs_trace),
    )
    return TrainResult(net=net, report=report, config=config, scaler=scaler)


def network_to_text(result: TrainResult) -> str:
    """Flat key-value weight dump with a config echo.

    Floats are written with ``repr`` so that identical training runs
    produce byte-identical dumps and parsing restores the exact weights.
    """
    cfg, net = result.config, result.net
    lines = [
        "# fedrule network weight dump",
        f"hidden_nodes={net.hidden_nodes}",
        f"mu={cfg.mu!r}",
        f"epsilon={cfg.epsilon!r}",
        f"max_epochs={cfg.max_epochs}",
        f"seed={cfg.seed}",
        f"input_scaling={cfg.input_scaling}",
        f"epochs_run={result.report.epochs_run}",
        f"stop_reason={result.report.stop_reason}",
        f"final_mse={result.report.final_mse!r}",
    ]
    if result.scaler is not None:
        s = result.scaler
        lines += [
            f"scale_pi_mean={s.pi_mean!r}",
            f"scale_pi_std={s.pi_std!r}",
            f"scale_gap_mean={s.gap_mean!r}",
            f"scale_gap_std={s.gap_std!r}",
        ]
    for j, name in enumerate(INPUT_NAMES):
        for n in range(net.hidden_nodes):
            lines.append(f"w[{name}][{n}]={net.w[j, n]!r}")
    for n in range(net.hidden_nodes):
        lines.append(f"v[{n}]={net.v[n]!r}")
    return "\n".join(lines) + "\n"


def network_from_text(text: str) -> MlEstimator:
    """Parse a weight dump back into an estimator (weights plus scaling)."""
    entries: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"line {line_no}: expected key=value, got {line!r}")
        entries[key.strip()] = value.strip()

    try:
        hidden_nodes = int(entries["hidden_nodes"])
        w = np.empty((2, hidden_nodes))
        for j, name in enumerate(INPUT_NAMES):
            for n in range(hidden_nodes):
                w[j, n] = float(entries[f"w[{name}][{n}]"])
        v = np.array([float(entries[f"v[{n}]"]) for n in range(hidden_nodes)])
    except KeyError as exc:
        raise ValueError(f"network dump is missing key {exc.args[0]!r}") from None

    scaler = None
    if "scale_pi_mean" in entries:
        scaler = Scaler(
            pi_mean=float(entries["scale_pi_mean"]),
            pi_std=float(entries["scale_pi_std"]),
            gap_mean=float(entries["scale_gap_mean"]),
            gap_std=float(entries["scale_gap_std"]),
        )
    return MlEstimator(net=Network(w=w, v=v), scaler=scaler)
