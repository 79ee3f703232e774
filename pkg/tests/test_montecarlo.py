"""Monte Carlo estimator for the isometry event probability: support
sampling statistics, exact degenerate cases, reproducibility, and the
validity report wiring."""

import numpy as np
import pytest

from mwclab.distributions import NonzeroDistribution, block_rng
from mwclab.montecarlo import (
    ExripEstimate,
    bound_validity_report,
    empirical_exrip,
    sample_sparse_vector,
    sample_support,
)
from mwclab.sensing import sensing_matrix
from mwclab.signmatrix import SignMatrix

CN = NonzeroDistribution("complex_normal")


def _phi(entries):
    return sensing_matrix(SignMatrix(np.asarray(entries, dtype=np.int8), "random", None))


def test_sample_support_is_uniform():
    M, K, draws = 195, 12, 4000
    rng = np.random.default_rng(0)
    counts = np.zeros(M)
    for _ in range(draws):
        s = sample_support(M, K, rng)
        assert len(s) == K
        assert len(set(int(i) for i in s)) == K
        counts[np.asarray(s)] += 1
    p = K / M
    sigma = np.sqrt(draws * p * (1 - p))
    assert np.all(np.abs(counts - draws * p) < 5 * sigma)


def test_sample_support_full():
    s = sample_support(7, 7, np.random.default_rng(1))
    assert sorted(int(i) for i in s) == list(range(7))


def test_sample_sparse_vector_bernoulli_values():
    d = NonzeroDistribution("bernoulli_sign", scale=3.0)
    v = sample_sparse_vector(50, 5, d, np.random.default_rng(2))
    assert v.length == 50
    assert len(v.support) == 5
    assert set(np.unique(np.abs(v.values))) == {3.0}
    dense = v.dense()
    assert dense.shape == (50,)
    assert np.count_nonzero(dense) == 5


def test_identity_matrix_never_fails():
    # Phi = I: Z^2 = 1 exactly, so every trial is inside any delta band
    Phi = _phi([[1, 1], [1, -1]])
    est = empirical_exrip(Phi, 1, 0.05, CN, 2000, seed=0)
    assert est.empirical_p == 1.0
    assert est.moment2 == 1.0
    assert est.moment4 == 1.0
    assert est.stderr == 0.0


def test_scale_invariance_of_event():
    Phi = _phi(np.random.default_rng(3).integers(0, 2, (6, 31)) * 2 - 1)
    a = empirical_exrip(Phi, 4, 0.3, NonzeroDistribution("complex_normal", 1.0), 2000, seed=5)
    b = empirical_exrip(Phi, 4, 0.3, NonzeroDistribution("complex_normal", 3.0), 2000, seed=5)
    assert a.empirical_p == b.empirical_p
    assert np.isclose(a.moment2, b.moment2, rtol=1e-12)


def test_bit_reproducibility():
    Phi = _phi(np.random.default_rng(4).integers(0, 2, (8, 63)) * 2 - 1)
    a = empirical_exrip(Phi, 6, 0.4, CN, 3000, seed=11)
    b = empirical_exrip(Phi, 6, 0.4, CN, 3000, seed=11)
    assert a == b
    c = empirical_exrip(Phi, 6, 0.4, CN, 3000, seed=12)
    assert a.empirical_p != c.empirical_p or a.moment2 != c.moment2


def test_trial_count_floor():
    Phi = _phi([[1, 1], [1, -1]])
    with pytest.raises(ValueError):
        empirical_exrip(Phi, 1, 0.4, CN, 999)


def test_mean_z2_close_to_one(gold_80_511):
    Phi = sensing_matrix(gold_80_511)
    est = empirical_exrip(Phi, 24, 0.41421356237309515, CN, 5000, seed=0)
    assert 0.0 <= est.empirical_p <= 1.0
    assert est.stderr > 0.0
    assert abs(est.moment2 - 1.0) < 5 * est.moment2_stderr
    assert est.redraws == 0


def test_estimate_as_dict_keys():
    Phi = _phi([[1, 1], [1, -1]])
    est = empirical_exrip(Phi, 1, 0.4, CN, 1000, seed=0)
    assert isinstance(est, ExripEstimate)
    d = est.as_dict()
    for key in ("trials", "empirical_p", "stderr", "moment2", "moment4", "seed", "redraws"):
        assert key in d


def test_validity_report_wiring(random_40_195):
    rep = bound_validity_report(random_40_195, 24, trials=5000, seed=0, constant_samples=10**5)
    d = rep.as_dict()
    assert set(d) == {
        "theoretical",
        "estimate",
        "lower_bound_holds",
        "mean_z2_is_one",
        "moment4_predicted",
        "moment4_gap",
    }
    assert isinstance(rep.lower_bound_holds, bool)
    assert isinstance(rep.mean_z2_is_one, bool)
    # the theoretical value is a lower bound; the empirical frequency
    # should exceed it comfortably at these sizes
    assert rep.estimate.empirical_p + 3 * rep.estimate.stderr >= rep.theoretical.probability
    assert rep.moment4_predicted > 1.0
