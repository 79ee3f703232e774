"""Brute-force verification of the isometry probability bound.

Draws K-sparse vectors with uniformly random supports and i.i.d.
symmetric nonzeros, measures Z^2 = ||Phi u||^2 / ||u||^2 per draw, and
compares the fraction landing inside [1 - delta, 1 + delta] against
the theoretical lower bound.  Trials run in fixed-size blocks with
counter-derived streams, so the result is a pure function of
(seed, trials) no matter how the blocks are scheduled.
"""

import math
from dataclasses import dataclass

import numpy as np

from .distributions import (
    MomentConstants,
    NonzeroDistribution,
    block_rng,
    moment_constants,
    sample_values,
)
from .guarantees import BP_DELTA, ExripInputs, GuaranteeResult, exrip_probability
from .sensing import SensingMatrix, quality_measures, sensing_matrix
from .signmatrix import SignMatrix

_BLOCK = 2048
_UNDERFLOW = 1e-300


@dataclass(frozen=True)
class SparseVector:
    length: int
    support: np.ndarray  # K distinct indices
    values: np.ndarray  # K nonzeros

    def dense(self) -> np.ndarray:
        u = np.zeros(self.length, dtype=self.values.dtype)
        u[self.support] = self.values
        return u


def sample_support(M: int, K: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform K-subset of range(M) by partial Fisher-Yates."""
    idx = np.arange(M)
    for i in range(K):
        j = i + int(rng.integers(0, M - i))
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:K].copy()


def sample_sparse_vector(
    M: int, K: int, dist: NonzeroDistribution, rng: np.random.Generator
) -> SparseVector:
    if not 1 <= K <= M:
        raise ValueError(f"need 1 <= K <= M, got K={K}, M={M}")
    support = sample_support(M, K, rng)
    values = sample_values(dist, K, rng)
    return SparseVector(M, support, values)


def _block_supports(M: int, K: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Partial Fisher-Yates vectorized across a block of trials."""
    idx = np.tile(np.arange(M), (count, 1))
    rows = np.arange(count)
    for i in range(K):
        j = i + rng.integers(0, M - i, size=count)
        tmp = idx[rows, i].copy()
        idx[rows, i] = idx[rows, j]
        idx[rows, j] = tmp
    return idx[:, :K]


@dataclass(frozen=True)
class ExripEstimate:
    trials: int
    empirical_p: float
    stderr: float
    moment2: float
    moment2_stderr: float
    moment4: float
    moment4_stderr: float
    delta: float
    K: int
    seed: int
    redraws: int

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "empirical_p": self.empirical_p,
            "stderr": self.stderr,
            "moment2": self.moment2,
            "moment2_stderr": self.moment2_stderr,
            "moment4": self.moment4,
            "moment4_stderr": self.moment4_stderr,
            "delta": self.delta,
            "K": self.K,
            "seed": self.seed,
            "redraws": self.redraws,
        }


def empirical_exrip(
    Phi: SensingMatrix | np.ndarray,
    K: int,
    delta: float,
    dist: NonzeroDistribution,
    trials: int,
    seed: int = 0,
) -> ExripEstimate:
    """Empirical isometry probability over `trials` sparse draws."""
    if trials < 10**3:
        raise ValueError(f"need at least 1000 trials, got {trials}")
    entries = Phi.entries if isinstance(Phi, SensingMatrix) else np.asarray(Phi)
    m, M = entries.shape
    if not 1 <= K <= M:
        raise ValueError(f"need 1 <= K <= M, got K={K}, M={M}")
    cols = entries.T.copy()  # M x m, row gather per support

    hits = 0
    s2 = s4 = s8 = 0.0
    redraws = 0
    done = 0
    block_index = 0
    while done < trials:
        take = min(_BLOCK, trials - done)
        rng = block_rng(seed, block_index)
        supports = _block_supports(M, K, take, rng)
        values = sample_values(dist, (take, K), rng)
        nrm2 = (np.abs(values) ** 2).sum(axis=1)
        for _ in range(100):
            bad = np.nonzero(nrm2 < _UNDERFLOW)[0]
            if bad.size == 0:
                break
            redraws += int(bad.size)
            values[bad] = sample_values(dist, (bad.size, K), rng)
            nrm2[bad] = (np.abs(values[bad]) ** 2).sum(axis=1)
        picked = cols[supports]  # take x K x m
        y = np.einsum("tkm,tk->tm", picked, values)
        z2 = (np.abs(y) ** 2).sum(axis=1) / nrm2
        hits += int((np.abs(z2 - 1.0) <= delta).sum())
        s2 += float(z2.sum())
        s4 += float((z2 * z2).sum())
        s8 += float((z2 * z2) @ (z2 * z2))
        done += take
        block_index += 1

    p = hits / trials
    stderr = math.sqrt(p * (1.0 - p) / trials)
    m2 = s2 / trials
    m4 = s4 / trials
    var2 = max(0.0, s4 / trials - m2 * m2)
    var4 = max(0.0, s8 / trials - m4 * m4)
    return ExripEstimate(
        trials,
        p,
        stderr,
        m2,
        math.sqrt(var2 / trials),
        m4,
        math.sqrt(var4 / trials),
        delta,
        K,
        seed,
        redraws,
    )


@dataclass(frozen=True)
class ValidityReport:
    """Theory versus simulation for one sign matrix.

    lower_bound_holds: empirical_p + 3 stderr is at least the
        theoretical probability (the bound claims to be a floor).
    mean_z2_is_one: empirical E[Z^2] is within 3 stderr of 1, which
        holds for any sign matrix under uniform supports.
    moment4_predicted: 1 + delta^2 (1 - raw) -- the fourth moment the
        bound's Chebyshev reading would imply; informational only.
    """

    theoretical: GuaranteeResult
    estimate: ExripEstimate
    lower_bound_holds: bool
    mean_z2_is_one: bool
    moment4_predicted: float
    moment4_gap: float

    def as_dict(self) -> dict:
        return {
            "theoretical": self.theoretical.as_dict(),
            "estimate": self.estimate.as_dict(),
            "lower_bound_holds": self.lower_bound_holds,
            "mean_z2_is_one": self.mean_z2_is_one,
            "moment4_predicted": self.moment4_predicted,
            "moment4_gap": self.moment4_gap,
        }


def bound_validity_report(
    S: SignMatrix,
    K: int,
    delta: float = BP_DELTA,
    dist: NonzeroDistribution | None = None,
    trials: int = 10**5,
    seed: int = 0,
    constants: MomentConstants | None = None,
    constant_samples: int = 10**6,
) -> ValidityReport:
    if dist is None:
        dist = NonzeroDistribution("complex_normal")
    if constants is None:
        constants = moment_constants(dist, K, samples=constant_samples, seed=0)
    q = quality_measures(S)
    theory = exrip_probability(
        ExripInputs(q.alpha, q.beta, q.gamma, S.m, S.M, K, delta, constants)
    )
    Phi = sensing_matrix(S)
    est = empirical_exrip(Phi, K, delta, dist, trials, seed)
    holds = est.empirical_p + 3.0 * est.stderr >= theory.probability
    mean_one = abs(est.moment2 - 1.0) <= 3.0 * est.moment2_stderr
    m4_pred = 1.0 + delta * delta * (1.0 - theory.raw_value)
    return ValidityReport(theory, est, holds, mean_one, m4_pred, est.moment4 - m4_pred)


__all__ = [
    "ExripEstimate",
    "SparseVector",
    "ValidityReport",
    "bound_validity_report",
    "empirical_exrip",
    "sample_sparse_vector",
    "sample_support",
]
