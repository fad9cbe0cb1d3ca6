"""Skepticism beliefs and values.

The consumer who sees no disclosure updates on the conjectured contingent
disclosure probabilities ``q = (q_1, ..., q_K)``: type k keeps posterior
weight proportional to ``mu_k (1 - q_k)``.  When every type discloses with
probability one, Bayes' rule is silent; the convention here puts the whole
posterior on the lowest type, which is the only belief that sustains full
disclosure and makes the skepticism value continuous with value 0 at the
all-ones profile.

The producer's outside option is the skepticism *value*
``w = max{mean - cost, 0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import (
    ConfigError,
    QuantileOutOfRange,
    UndefinedAtFullDisclosure,
)
from .market import TypeSpace

if TYPE_CHECKING:  # pragma: no cover
    from .equilibrium import AlternatingPath

FULL_DISCLOSE_TOL = 1e-12


@dataclass(frozen=True)
class SkepticismState:
    """Posterior over types at nondisclosure, its mean, and the value."""

    belief: np.ndarray
    mean: float
    value: float


def as_profile(ts: TypeSpace, q) -> np.ndarray:
    """Validate a disclosure-probability profile against the type space."""
    q = np.asarray(q, dtype=float)
    if q.shape != (ts.n_types,):
        raise ConfigError(f"profile must have length {ts.n_types}")
    if np.any(q < -FULL_DISCLOSE_TOL) or np.any(q > 1 + FULL_DISCLOSE_TOL):
        raise ConfigError("disclosure probabilities must lie in [0, 1]")
    return np.clip(q, 0.0, 1.0)


def skepticism_belief(ts: TypeSpace, q) -> SkepticismState:
    q = as_profile(ts, q)
    residual = ts.masses * (1.0 - q)
    total = residual.sum()
    if total > FULL_DISCLOSE_TOL:
        belief = residual / total
    else:  # all types disclose: point mass on the lowest type
        belief = np.zeros(ts.n_types)
        belief[-1] = 1.0
    mean = float(belief @ ts.thetas)
    return SkepticismState(belief, mean, max(mean - ts.cost, 0.0))


def skepticism_value(ts: TypeSpace, q) -> float:
    return skepticism_belief(ts, q).value


def staircase_profile(ts: TypeSpace, k: int, q: float) -> np.ndarray:
    """Profile with types above k fully disclosing, k at q, lower at 0."""
    if not 1 <= k <= ts.n_types:
        raise ConfigError(f"type index {k} outside 1..{ts.n_types}")
    prof = np.zeros(ts.n_types)
    prof[: k - 1] = 1.0
    prof[k - 1] = q
    return prof


def staircase_mean(ts: TypeSpace, k: int, q: float) -> float:
    """Nondisclosure posterior mean along the descending-conquest order."""
    mu, th = ts.masses, ts.thetas
    num = mu[k - 1] * (1.0 - q) * th[k - 1] + float(mu[k:] @ th[k:])
    den = mu[k - 1] * (1.0 - q) + float(mu[k:].sum())
    if den <= FULL_DISCLOSE_TOL:
        return float(th[-1])
    return num / den


def staircase_value(ts: TypeSpace, k: int, q: float) -> float:
    """Outside-option value when all types above k fully disclose, type k
    discloses with probability q, and lower types stay out."""
    if not 0.0 <= q <= 1.0:
        raise ConfigError("q must lie in [0, 1]")
    return max(staircase_mean(ts, k, q) - ts.cost, 0.0)


def skepticism_gradient(ts: TypeSpace, q, k: int) -> float:
    """Analytic partial derivative of the skepticism value in q_k.

    Zero on the branch where the value is capped at 0.  Undefined at the
    all-ones profile, where Bayes' rule no longer applies.
    """
    q = as_profile(ts, q)
    if not 1 <= k <= ts.n_types:
        raise ConfigError(f"type index {k} outside 1..{ts.n_types}")
    residual = ts.masses * (1.0 - q)
    total = residual.sum()
    if total <= FULL_DISCLOSE_TOL:
        raise UndefinedAtFullDisclosure("gradient undefined at the all-ones profile")
    state = skepticism_belief(ts, q)
    if state.mean - ts.cost <= 0.0:
        return 0.0
    theta_k = ts.thetas[k - 1]
    return float(
        -ts.masses[k - 1] * np.sum(residual * (theta_k - ts.thetas)) / total**2
    )


def _stride_masses(path: "AlternatingPath") -> np.ndarray:
    ts = path.ts
    return np.array(
        [ts.masses[k - 1] * (hi - lo) for k, lo, hi, _ in path.strides()]
    )


def path_total_mass(path: "AlternatingPath") -> float:
    """Total ex-ante disclosure probability induced along the path."""
    return float(_stride_masses(path).sum())


def quantile_profile(path: "AlternatingPath", Q: float) -> np.ndarray:
    """Profile reached once the path has induced ex-ante probability Q.

    Right-continuous at stride boundaries: an exhausted stride reports its
    end-of-stride profile.
    """
    stride_mass = _stride_masses(path)
    q_max = float(stride_mass.sum())
    if Q < -FULL_DISCLOSE_TOL or Q > q_max + 1e-9:
        raise QuantileOutOfRange(f"Q={Q} outside [0, {q_max}]")
    Q = min(max(Q, 0.0), q_max)
    ts = path.ts
    acc = 0.0
    for (k, lo, hi, base), mass in zip(path.strides(), stride_mass):
        if Q <= acc + mass and mass > 0:
            prof = base.copy()
            prof[k - 1] = lo + (Q - acc) / ts.masses[k - 1]
            return prof
        acc += mass
    return path.nodes[-1].copy()


def quantile_skepticism(path: "AlternatingPath", Q: float) -> float:
    """Nondisclosure posterior mean at quantile Q along the path."""
    return skepticism_belief(path.ts, quantile_profile(path, Q)).mean


def pointwise_lower_bound(ts: TypeSpace, Q: float) -> float:
    """Lowest nondisclosure mean reachable by any conjecture that removes
    total ex-ante mass Q.

    Greedy solution: delete prior mass from the highest types first, then
    renormalize the remainder by 1/(1-Q).
    """
    if not 0.0 <= Q < 1.0:
        raise QuantileOutOfRange(f"Q={Q} outside [0, 1)")
    remaining = ts.masses.copy()
    to_remove = Q
    for i in range(ts.n_types):
        cut = min(remaining[i], to_remove)
        remaining[i] -= cut
        to_remove -= cut
        if to_remove <= 0:
            break
    return float(remaining @ ts.thetas / (1.0 - Q))
