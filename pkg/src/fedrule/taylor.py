"""Parametric Taylor-Rule evaluation and the named coefficient presets."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["RuleParams", "PRESET_NAMES", "preset", "rule_rate"]


@dataclass(frozen=True)
class RuleParams:
    """Coefficient set defining one parametric rule.

    ``beta_1`` weights the standalone inflation rate, ``beta_pi`` the
    inflation gap and ``beta_y`` the output gap.  With ``beta_1 = 1`` the
    rule collapses to the classic 1993/1999 form.
    """

    r_star: float
    pi_star: float
    beta_1: float
    beta_pi: float
    beta_y: float

    def __post_init__(self) -> None:
        for name in ("r_star", "pi_star", "beta_1", "beta_pi", "beta_y"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


_PRESETS = {
    "taylor1993": RuleParams(r_star=2.0, pi_star=2.0, beta_1=1.0, beta_pi=0.5, beta_y=0.5),
    "ols_fitted": RuleParams(r_star=2.0, pi_star=2.0, beta_1=0.705, beta_pi=0.525, beta_y=0.13),
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name: str) -> RuleParams:
    """Return a named preset: ``taylor1993`` or ``ols_fitted``."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; expected one of {', '.join(_PRESETS)}"
        ) from None


def rule_rate(pi: float, output_gap: float, params: RuleParams) -> float:
    """Target rate r* + b1*pi + b_pi*(pi - pi*) + b_y*gap, in percent."""
    return (
        params.r_star
        + params.beta_1 * pi
        + params.beta_pi * (pi - params.pi_star)
        + params.beta_y * output_gap
    )
