"""Market ingestion and the state-to-type reduction.

A raw market is a finite set of quality states with a prior, a row-stochastic
signal structure mapping states to labels, and a production cost.  Each
signal label is identified with the posterior mean quality it induces, which
turns the raw market into a reduced type space: descending posterior means
``theta_1 > ... > theta_K`` with label probabilities ``mu_k``.  All solver
and verifier modules work on the reduced space.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, CostOutOfRange, EmptySupport

PROB_TOL = 1e-12
MERGE_TOL = 1e-9  # posterior means closer than this collapse into one type


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class MarketConfig:
    """Raw market: states, prior, signal structure, production cost.

    ``signal[i, j]`` is the probability that state ``i`` generates label
    ``j``; ``None`` means the identity (fully revealing) signal.
    """

    states: np.ndarray
    state_prior: np.ndarray
    signal: np.ndarray | None = None
    cost: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "states", _frozen(self.states))
        object.__setattr__(self, "state_prior", _frozen(self.state_prior))
        states, prior = self.states, self.state_prior
        if states.ndim != 1 or len(states) < 2:
            raise ConfigError("need at least two states")
        if np.any(states < 0):
            raise ConfigError("states must be nonnegative quality values")
        if prior.shape != states.shape:
            raise ConfigError("statePrior length must match states")
        if np.any(prior <= 0):
            raise ConfigError("statePrior entries must be strictly positive")
        if abs(prior.sum() - 1.0) > PROB_TOL:
            raise ConfigError("statePrior must sum to 1")
        if self.cost < 0:
            raise ConfigError("cost must be nonnegative")
        if self.signal is not None:
            sig = _frozen(self.signal)
            object.__setattr__(self, "signal", sig)
            if sig.ndim != 2 or sig.shape[0] != len(states):
                raise ConfigError("signal must have one row per state")
            if np.any(sig < 0):
                raise ConfigError("signal entries must be nonnegative")
            if np.any(np.abs(sig.sum(axis=1) - 1.0) > PROB_TOL):
                raise ConfigError("each signal row must sum to 1")

    def signal_matrix(self) -> np.ndarray:
        if self.signal is None:
            return np.eye(len(self.states))
        return self.signal


@dataclass(frozen=True)
class TypeSpace:
    """Reduced market: descending posterior-mean types with prior masses.

    ``efficient_cutoff`` is the 1-based index of the lowest type whose value
    strictly exceeds the production cost; a type exactly at cost counts as
    inefficient.
    """

    thetas: np.ndarray
    masses: np.ndarray
    cost: float
    efficient_cutoff: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "thetas", _frozen(self.thetas))
        object.__setattr__(self, "masses", _frozen(self.masses))
        th, mu = self.thetas, self.masses
        if len(th) < 2:
            raise CostOutOfRange("reduced market has a single type")
        if np.any(np.diff(th) >= 0):
            raise ConfigError("types must be strictly descending")
        if np.any(mu <= 0) or abs(mu.sum() - 1.0) > PROB_TOL:
            raise ConfigError("type masses must be positive and sum to 1")
        if not (th[-1] <= self.cost < th[0]):
            raise CostOutOfRange(
                f"cost {self.cost} outside [{th[-1]}, {th[0]})"
            )
        object.__setattr__(
            self, "efficient_cutoff", int(np.sum(th > self.cost))
        )

    @property
    def n_types(self) -> int:
        return len(self.thetas)

    def is_efficient(self, k: int) -> bool:
        """1-based index ``k`` has value strictly above cost."""
        return k <= self.efficient_cutoff

    def gain(self, k: int) -> float:
        """Trade surplus max{theta_k - c, 0} of type ``k`` (1-based)."""
        return max(self.thetas[k - 1] - self.cost, 0.0)


def build_type_space(cfg: MarketConfig) -> TypeSpace:
    """Reduce a raw market to its type space.

    Posterior means are computed label by label via Bayes' rule; labels whose
    means coincide within ``MERGE_TOL`` are merged (summed mass) so the
    reduced types are strictly descending.
    """
    sig = cfg.signal_matrix()
    label_mass = cfg.state_prior @ sig
    if np.any(label_mass <= PROB_TOL):
        raise EmptySupport("some signal label has zero total probability")
    means = (cfg.state_prior * cfg.states) @ sig / label_mass

    order = np.argsort(-means)
    means, label_mass = means[order], label_mass[order]
    merged_theta: list[float] = []
    merged_mass: list[float] = []
    for th, mu in zip(means, label_mass):
        if merged_theta and merged_theta[-1] - th <= MERGE_TOL:
            tot = merged_mass[-1] + mu
            merged_theta[-1] = (merged_theta[-1] * merged_mass[-1] + th * mu) / tot
            merged_mass[-1] = tot
        else:
            merged_theta.append(float(th))
            merged_mass.append(float(mu))

    return TypeSpace(np.array(merged_theta), np.array(merged_mass), cfg.cost)


def full_surplus(ts: TypeSpace) -> float:
    """Expected trade surplus E[max{theta - c, 0}]."""
    return float(np.sum(ts.masses * np.maximum(ts.thetas - ts.cost, 0.0)))


def prior_mean(ts: TypeSpace) -> float:
    """Consumer's prior valuation v0."""
    return float(ts.masses @ ts.thetas)


def with_cost(ts: TypeSpace, cost: float) -> TypeSpace:
    """Same types and masses under a different production cost."""
    return TypeSpace(ts.thetas, ts.masses, cost)


def with_prior(ts: TypeSpace, masses) -> TypeSpace:
    """Same types under a different prior; zero-mass types are dropped.

    Raises CostOutOfRange when the surviving support is degenerate (fewer
    than two types, or the cost window collapses).
    """
    masses = np.asarray(masses, dtype=float)
    if masses.shape != ts.masses.shape:
        raise ConfigError("prior length must match the number of types")
    keep = masses > 0
    return TypeSpace(ts.thetas[keep], masses[keep] / masses[keep].sum(), ts.cost)
