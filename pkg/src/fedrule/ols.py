"""Reduced-form least squares for the rearranged rule.

The rule is estimated as  i_t = alpha + theta_pi * pi_t + beta_y * gap_t
with alpha = r* - beta_pi * pi* and theta_pi = beta_1 + beta_pi.  Fitting
the original form directly is impossible: inflation and the inflation gap
differ by a constant, so the design matrix is rank deficient.  The
structural coefficients are recovered algebraically afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg
from scipy import stats

from .dataset import Dataset, FixedTargets

__all__ = [
    "COLUMN_NAMES",
    "RegressionResult",
    "StructuralCoefficients",
    "ResidualStats",
    "SingularMatrixError",
    "design_matrix",
    "fit_ols",
    "fit_ols_normal_equations",
    "recover_structural",
    "residual_stats",
    "significance_stars",
]

COLUMN_NAMES = ("intercept", "inflation", "output_gap")

# Rank test: a pivot this small relative to the largest pivot marks the
# column as collinear.
PIVOT_RTOL = 1e-10


class SingularMatrixError(ArithmeticError):
    """Design matrix is rank deficient; ``column`` names the collinear one."""

    def __init__(self, column: str):
        self.column = column
        super().__init__(
            f"design matrix is rank deficient: column {column!r} is "
            "collinear with the others"
        )


@dataclass(frozen=True)
class RegressionResult:
    """Least-squares fit of [1, pi, gap] with classical inference stats.

    Coefficient arrays are ordered like :data:`COLUMN_NAMES`.
    """

    coef: np.ndarray
    stderr: np.ndarray
    t_stat: np.ndarray
    p_value: np.ndarray
    r_squared: float
    n_obs: int
    residuals: np.ndarray
    fitted: np.ndarray

    @property
    def alpha(self) -> float:
        return float(self.coef[0])

    @property
    def theta_pi(self) -> float:
        return float(self.coef[1])

    @property
    def beta_y(self) -> float:
        return float(self.coef[2])

    def predict(self, pi: float, output_gap: float) -> float:
        return self.alpha + self.theta_pi * pi + self.beta_y * output_gap


@dataclass(frozen=True)
class StructuralCoefficients:
    beta_1: float
    beta_pi: float
    beta_y: float


@dataclass(frozen=True)
class ResidualStats:
    sum: float
    abs_sum: float


def design_matrix(dataset: Dataset) -> np.ndarray:
    """Stack [1, pi_t, gap_t] row per quarter."""
    n = len(dataset)
    X = np.empty((n, 3))
    X[:, 0] = 1.0
    X[:, 1] = [r.inflation for r in dataset.rows]
    X[:, 2] = [r.output_gap for r in dataset.rows]
    return X


def fit_ols(dataset: Dataset, target: Sequence[float]) -> RegressionResult:
    """Fit the reduced-form regression by QR decomposition.

    Uses a column-pivoted Householder QR rather than explicit normal
    equations for numerical stability with near-collinear macro series.
    Classical homoskedastic standard errors from s^2 (X'X)^-1 with
    s^2 = RSS/(n - 3); two-sided p-values from the t distribution with
    n - 3 degrees of freedom; R^2 = 1 - RSS/TSS.
    """
    y = np.asarray(target, dtype=float)
    X = design_matrix(dataset)
    n, p = X.shape
    if y.shape != (n,):
        raise ValueError(f"target length {y.shape} does not match {n} rows")
    if n < p + 1:
        raise ValueError(f"need at least {p + 1} observations, got {n}")

    Q, R, piv = scipy.linalg.qr(X, mode="economic", pivoting=True)
    pivots = np.abs(np.diag(R))
    bad = np.flatnonzero(pivots < PIVOT_RTOL * pivots[0])
    if bad.size:
        raise SingularMatrixError(COLUMN_NAMES[piv[bad[0]]])

    beta_piv = scipy.linalg.solve_triangular(R, Q.T @ y)
    coef = np.empty(p)
    coef[piv] = beta_piv

    fitted = X @ coef
    residuals = y - fitted
    rss = float(residuals @ residuals)
    dof = n - p
    sigma2 = rss / dof

    # (X'X)^-1 = P R^-1 R^-T P' via the already-computed factor
    r_inv = scipy.linalg.solve_triangular(R, np.eye(p))
    xtx_inv_piv = r_inv @ r_inv.T
    xtx_inv = np.empty((p, p))
    xtx_inv[np.ix_(piv, piv)] = xtx_inv_piv

    stderr = np.sqrt(sigma2 * np.diag(xtx_inv))
    with np.errstate(divide="ignore"):
        t_stat = np.where(stderr > 0, coef / stderr, np.inf * np.sign(coef))
    p_value = 2.0 * stats.t.sf(np.abs(t_stat), dof)

    tss = float(np.sum((y - y.mean()) ** 2))
    # constant target: TSS = 0, R^2 reported as 0 by convention
    r_squared = 1.0 - rss / tss if tss > 0 else 0.0
    r_squared = float(min(max(r_squared, 0.0), 1.0))

    return RegressionResult(
        coef=coef,
        stderr=stderr,
        t_stat=t_stat,
        p_value=p_value,
        r_squared=r_squared,
        n_obs=n,
        residuals=residuals,
        fitted=fitted,
    )


def fit_ols_normal_equations(dataset: Dataset, target: Sequence[float]) -> np.ndarray:
    """Naive normal-equation solve, kept as the second route for the
    solver-agreement check.  Returns the coefficient vector only."""
    y = np.asarray(target, dtype=float)
    X = design_matrix(dataset)
    return np.linalg.solve(X.T @ X, X.T @ y)


def recover_structural(
    alpha: float,
    theta_pi: float,
    beta_y: float,
    targets: FixedTargets,
) -> StructuralCoefficients:
    """Invert the reparameterization: beta_pi = (r* - alpha)/pi*,
    beta_1 = theta_pi - beta_pi."""
    if targets.pi_star == 0:
        raise ValueError("pi_star must be nonzero to recover beta_pi")
    beta_pi = (targets.r_star - alpha) / targets.pi_star
    return StructuralCoefficients(
        beta_1=theta_pi - beta_pi,
        beta_pi=beta_pi,
        beta_y=beta_y,
    )


def residual_stats(residuals: Sequence[float]) -> ResidualStats:
    """Plain sum and sum of absolute values."""
    arr = np.asarray(residuals, dtype=float)
    if arr.size == 0:
        raise ValueError("residual list is empty")
    return ResidualStats(sum=float(arr.sum()), abs_sum=float(np.abs(arr).sum()))


def significance_stars(p_value: float) -> str:
    """Star notation: *** below 0.1%, ** below 1%, * below 5%, else ''."""
    if not 0.0 <= p_value <= 1.0:
        raise ValueError(f"p-value must be in [0, 1], got {p_value}")
    if p_value < 0.001:
        return "***"
    if p_value < 0.01:
        return "**"
    if p_value < 0.05:
        return "*"
    return ""
