"""Utility, cost, preference order, and size bound of the sensing coalition game.

The game is non-transferable: a coalition's value is not divided, every
member's individual utility equals the coalition value.  Values may be
-inf (IEEE minus infinity) when the coalition violates the false-alarm
constraint; +/-inf arithmetic and comparisons are exact here, no finite
sentinel is ever used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "GameParams",
    "CoalitionValue",
    "false_alarm_cost",
    "coalition_value",
    "pareto_preferred",
    "max_coalition_size",
]


@dataclass(frozen=True)
class GameParams:
    """Game-level constants.

    Attributes:
        alpha: maximum tolerable false-alarm probability per coalition,
            strictly inside (0, 1).
    """

    alpha: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie strictly inside (0,1)")


@dataclass(frozen=True)
class CoalitionValue:
    """Missing/false-alarm probabilities of a coalition and its game value.

    ``value`` is finite exactly when ``qf`` is below the false-alarm
    constraint; otherwise it is -inf.
    """

    qm: float
    qf: float
    value: float

    @property
    def feasible(self) -> bool:
        return self.value != -math.inf


def false_alarm_cost(qf: float, alpha: float) -> float:
    """Logarithmic-barrier penalty on the coalition false-alarm probability.

    -alpha^2 * ln(1 - (qf/alpha)^2) below the constraint, +inf at or above
    it.  Non-negative, strictly increasing and convex on [0, alpha).
    """
    if not 0.0 <= qf <= 1.0:
        raise ValueError(f"qf must lie in [0,1], got {qf}")
    if qf >= alpha:
        return math.inf
    ratio = qf / alpha
    return -(alpha * alpha) * math.log1p(-(ratio * ratio))


def coalition_value(qm: float, qf: float, alpha: float) -> CoalitionValue:
    """Game value of a coalition: detection probability minus false-alarm cost.

    value = (1 - qm) - cost(qf); -inf exactly when qf >= alpha.
    """
    if not 0.0 <= qm <= 1.0:
        raise ValueError(f"qm must lie in [0,1], got {qm}")
    cost = false_alarm_cost(qf, alpha)
    value = -math.inf if cost == math.inf else (1.0 - qm) - cost
    return CoalitionValue(qm=qm, qf=qf, value=value)


def pareto_preferred(
    r_utils: Mapping[int, float], s_utils: Mapping[int, float]
) -> bool:
    """Whether utility profile R is Pareto-preferred to profile S.

    True iff every player does at least as well in R as in S and at least
    one player does strictly better.  Comparison is exact (no epsilon), and
    -inf compares like any other value.  The two maps must cover exactly
    the same players.
    """
    if r_utils.keys() != s_utils.keys():
        raise ValueError("utility maps must cover exactly the same players")
    strict = False
    for player, r in r_utils.items():
        s = s_utils[player]
        if r < s:
            return False
        if r > s:
            strict = True
    return strict


def max_coalition_size(alpha: float, pf: float) -> int:
    """Largest coalition size compatible with the false-alarm constraint.

    Even with perfect reporting, a coalition of k members has false alarm
    1 - (1 - pf)^k, which reaches alpha at k = ln(1-alpha)/ln(1-pf); any
    larger coalition has value -inf.  Singletons are always legal, so the
    bound is never below 1.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly inside (0,1)")
    if not 0.0 < pf < 1.0:
        raise ValueError("pf must lie strictly inside (0,1)")
    bound = math.log1p(-alpha) / math.log1p(-pf)
    return max(1, math.floor(bound))
