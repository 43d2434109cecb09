"""Closed-form sensing probabilities for energy detection under Rayleigh fading.

Single-user quantities: detection / false-alarm / missing probability of an
energy detector with time-bandwidth product ``m`` and threshold ``threshold``,
with the fading pre-averaged into the closed forms, plus the BPSK reporting
bit-error probability on the member-to-head channel.

Coalition quantities: missing and false-alarm probability of a group fusing
its members' one-bit decisions at a head node with the OR rule.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "RadioParams",
    "Position",
    "Network",
    "path_loss",
    "avg_snr",
    "false_alarm_probability",
    "detection_probability",
    "missing_probability",
    "reporting_error_probability",
    "coalition_missing_probability",
    "coalition_false_alarm_probability",
    "threshold_for_false_alarm",
]

# Round-off guard: probabilities assembled from exp/series terms may land a
# few ulp outside [0,1]; anything further out is a genuine bug.
_CLAMP_TOL = 1e-12


def _clamp01(p: float) -> float:
    if -_CLAMP_TOL < p < 0.0:
        return 0.0
    if 1.0 < p < 1.0 + _CLAMP_TOL:
        return 1.0
    return p


@dataclass(frozen=True)
class RadioParams:
    """Global physical constants of the sensing scenario.

    Attributes:
        pu_power_mw: transmit power of the primary user, mW.
        su_report_power_mw: per-SU power used to report its sensing bit, mW.
        noise_mw: Gaussian noise variance, mW.
        kappa: path-loss constant (dimensionless).
        mu: path-loss exponent (dimensionless).
        m: time-bandwidth product of the energy detector (integer >= 2).
        threshold: energy-detection threshold (dimensionless, > 0).
    """

    pu_power_mw: float
    su_report_power_mw: float
    noise_mw: float
    kappa: float
    mu: float
    m: int
    threshold: float

    def __post_init__(self) -> None:
        if self.pu_power_mw <= 0 or self.su_report_power_mw <= 0:
            raise ValueError("transmit powers must be strictly positive")
        if self.noise_mw <= 0:
            raise ValueError("noise_mw must be strictly positive")
        if self.kappa <= 0:
            raise ValueError("kappa must be strictly positive")
        if self.mu < 2:
            raise ValueError("mu must be >= 2")
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError("m must be an integer >= 2")
        if self.threshold <= 0:
            raise ValueError("threshold must be strictly positive")


@dataclass(frozen=True)
class Position:
    """Planar position in meters."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")

    def distance_to(self, other: "Position") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Network:
    """One primary user plus N secondary users with fixed positions.

    ``sus`` is an ordered tuple of (node_id, Position); ids must be the
    contiguous range 1..N.
    """

    pu: Position
    sus: tuple[tuple[int, Position], ...]
    params: RadioParams

    def __post_init__(self) -> None:
        ids = [node_id for node_id, _ in self.sus]
        if not ids:
            raise ValueError("network must contain at least one SU")
        if ids != list(range(1, len(ids) + 1)):
            raise ValueError("node ids must be unique and contiguous from 1")

    @property
    def n(self) -> int:
        return len(self.sus)

    @property
    def node_ids(self) -> tuple[int, ...]:
        return tuple(node_id for node_id, _ in self.sus)

    def position_of(self, node_id: int) -> Position:
        """Position of SU ``node_id`` (1..N), or the PU for node_id 0."""
        if node_id == 0:
            return self.pu
        return self.sus[node_id - 1][1]

    def with_position(self, node_id: int, position: Position) -> "Network":
        """Copy of the network with one node (SU id, or 0 for the PU) moved."""
        if node_id == 0:
            return Network(pu=position, sus=self.sus, params=self.params)
        sus = tuple(
            (nid, position if nid == node_id else pos) for nid, pos in self.sus
        )
        return Network(pu=self.pu, sus=sus, params=self.params)


def path_loss(d: float, kappa: float, mu: float) -> float:
    """Power gain kappa / d^mu over a link of length ``d`` meters."""
    if d <= 0:
        raise ValueError(f"distance must be strictly positive, got {d}")
    return kappa / d**mu


def avg_snr(tx_power_mw: float, d: float, params: RadioParams) -> float:
    """Average received SNR (linear) over a link of length ``d`` meters."""
    if tx_power_mw == 0:
        return 0.0
    return tx_power_mw * path_loss(d, params.kappa, params.mu) / params.noise_mw


def false_alarm_probability(threshold: float, m: int) -> float:
    """Non-cooperative false-alarm probability of the energy detector.

    Regularized upper incomplete gamma Q(m, threshold/2), which for integer
    m equals exp(-x) * sum_{n=0}^{m-1} x^n / n! with x = threshold/2.
    Strictly decreasing in the threshold; independent of SU location.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be an integer >= 1")
    x = threshold / 2.0
    terms = []
    t = 1.0
    for n in range(m):
        terms.append(t)
        t *= x / (n + 1)
    return _clamp01(math.exp(-x) * math.fsum(terms))


def detection_probability(snr: float, threshold: float, m: int) -> float:
    """Detection probability of an energy detector in averaged Rayleigh fading.

    Evaluates the closed form

        P_d = e^{-x} S + ((1+g)/g)^{m-1} [e^{-x/(1+g)} - e^{-x} S_g]

    with x = threshold/2, g the average SNR, S = sum_{n=0}^{m-2} x^n/n! and
    S_g the same sum at argument x*g/(1+g).  The bracketed difference cancels
    catastrophically for small g, so it is computed through the algebraically
    identical tail form

        P_d = e^{-x} [ S + sum_{n>=m-1} x^n r^{n-m+1} / n! ],  r = g/(1+g),

    whose terms are all positive (e^{-x/(1+g)} = e^{-x} e^{x r}).

    Args:
        snr: average SNR of the PU signal at the detector, linear, > 0.
        threshold: energy-detection threshold, >= 0.
        m: time-bandwidth product, integer >= 1.

    Returns:
        Probability in [0, 1]; >= false_alarm_probability(threshold, m),
        non-decreasing in snr, non-increasing in threshold.
    """
    if snr <= 0:
        raise ValueError(f"snr must be strictly positive, got {snr}")
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be an integer >= 1")

    x = threshold / 2.0
    r = snr / (1.0 + snr)

    terms = []
    t = 1.0
    for n in range(m - 1):
        terms.append(t)
        t *= x / (n + 1)
    # t is now x^{m-1}/(m-1)!, the first tail term.
    acc = 0.0
    n = m - 1
    while True:
        terms.append(t)
        acc += t
        t *= x * r / (n + 1)
        n += 1
        if t <= acc * 1e-18 and n > x * r:
            break
        if n > 10_000:  # unreachable for threshold <= ~2e4
            break
    return _clamp01(math.exp(-x) * math.fsum(terms))


def missing_probability(snr: float, threshold: float, m: int) -> float:
    """Probability of missing a present PU: 1 - detection_probability."""
    return 1.0 - detection_probability(snr, threshold, m)


def reporting_error_probability(snr: float) -> float:
    """Bit-error probability of BPSK reporting over an averaged Rayleigh link.

    0.5 * (1 - sqrt(snr / (1 + snr))); 0.5 at zero SNR, decreasing to 0.
    """
    if snr < 0:
        raise ValueError("snr must be >= 0")
    return 0.5 * (1.0 - math.sqrt(snr / (1.0 + snr)))


def _validate_probs(name: str, values: list[float] | tuple[float, ...]) -> None:
    if len(values) == 0:
        raise ValueError(f"{name} must be non-empty")
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} entries must lie in [0,1], got {v}")


def coalition_missing_probability(
    member_miss: list[float] | tuple[float, ...],
    member_report_err: list[float] | tuple[float, ...],
) -> float:
    """Missing probability of a coalition fusing member bits with the OR rule.

    Product over members of [P_m (1 - P_e) + (1 - P_m) P_e]: the head misses
    only when every received bit reads "absent", either a correctly reported
    miss or a detection flipped in transit.  The head's own entry must carry
    a reporting error of 0.
    """
    _validate_probs("member_miss", member_miss)
    _validate_probs("member_report_err", member_report_err)
    if len(member_miss) != len(member_report_err):
        raise ValueError("member_miss and member_report_err lengths differ")
    out = 1.0
    for pm, pe in zip(member_miss, member_report_err):
        out *= pm * (1.0 - pe) + (1.0 - pm) * pe
    return out


def coalition_false_alarm_probability(
    pf: float,
    member_report_err: list[float] | tuple[float, ...],
) -> float:
    """False-alarm probability of a coalition under OR-rule fusion.

    1 - prod over members of [(1 - P_f)(1 - P_e) + P_f P_e]; non-decreasing
    as members are appended (every factor is <= 1).
    """
    if not 0.0 <= pf <= 1.0:
        raise ValueError(f"pf must lie in [0,1], got {pf}")
    _validate_probs("member_report_err", member_report_err)
    prod = 1.0
    for pe in member_report_err:
        prod *= (1.0 - pf) * (1.0 - pe) + pf * pe
    return _clamp01(1.0 - prod)


def threshold_for_false_alarm(pf_target: float, m: int) -> float:
    """Detection threshold whose non-cooperative false alarm equals pf_target.

    Bisection on the strictly decreasing false_alarm_probability; the
    returned threshold satisfies |P_f - pf_target| <= 1e-12.
    """
    if not 0.0 < pf_target < 1.0:
        raise ValueError("pf_target must lie strictly inside (0,1)")
    lo = 1e-12
    hi = 1.0
    while false_alarm_probability(hi, m) > pf_target:
        hi *= 2.0
        if hi > 1e9:
            raise ValueError("no finite threshold reaches the target")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if false_alarm_probability(mid, m) > pf_target:
            lo = mid
        else:
            hi = mid
        if abs(false_alarm_probability(mid, m) - pf_target) <= 1e-12:
            return mid
    return 0.5 * (lo + hi)
