import numpy as np
import pytest

from socialpower import errors
from socialpower.degroot import appraisal_step_via_zeta, build_w, opinion_consensus
from socialpower.dynamics import Vertex, df_map
from socialpower.fixtures import interaction_set_6
from socialpower.topology import dominant_left_eigenvector, validate

STAR3 = np.array([[0, 0.5, 0.5], [1, 0, 0], [1, 0, 0]])


class TestBuildW:
    def test_zero_state_gives_interaction_matrix(self):
        c = interaction_set_6()[0]
        assert np.array_equal(build_w(np.zeros(6), c), c)

    def test_star_row(self):
        w = build_w(np.array([0.4, 0.3, 0.3]), STAR3)
        assert np.allclose(w[0], [0.4, 0.3, 0.3])
        assert np.allclose(w[1], [0.7, 0.3, 0.0])

    def test_rows_stochastic(self):
        rng = np.random.default_rng(2)
        c = interaction_set_6()[1]
        for _ in range(50):
            x = np.clip(rng.dirichlet(np.ones(6)), 0, 0.9)
            w = build_w(x, c)
            assert np.abs(w.sum(axis=1) - 1).max() <= 1e-12
            assert w.min() >= 0

    def test_self_weight_one_rejected(self):
        with pytest.raises(errors.ValidationError):
            build_w(np.array([1.0, 0.0, 0.0]), STAR3)

    def test_near_full_self_weight_row(self):
        w = build_w(np.array([1 - 1e-9, 0.0, 0.0]), STAR3)
        assert np.allclose(w[0], [1 - 1e-9, 0.5e-9, 0.5e-9])


class TestOpinionConsensus:
    def test_uniform_rank_one(self):
        w = np.full((4, 4), 0.25)
        result = opinion_consensus(w, np.array([1.0, 2.0, 3.0, 4.0]))
        assert result.consensus_value == pytest.approx(2.5, abs=1e-12)
        assert np.allclose(result.zeta, 0.25, atol=1e-12)

    def test_consensus_value_is_zeta_weighted_start(self):
        c = validate(interaction_set_6()[1])
        x = np.array([0.1, 0.2, 0.1, 0.2, 0.1, 0.2])
        y0 = np.array([3.0, -1.0, 0.5, 2.0, 7.0, -4.0])
        result = opinion_consensus(build_w(x, c.entries), y0)
        assert result.consensus_value == pytest.approx(float(result.zeta @ y0), abs=1e-10)
        assert abs(result.zeta.sum() - 1) <= 1e-12

    def test_periodic_w_does_not_converge(self):
        w = np.array([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(errors.NoConvergence):
            opinion_consensus(w, np.array([0.0, 1.0]), max_iters=500)


class TestAppraisalEquivalence:
    def test_vertex_passthrough(self):
        v = Vertex(0)
        assert appraisal_step_via_zeta(v, validate(STAR3)) is v

    def test_uniform_gives_gamma(self):
        c = validate(STAR3)
        out = appraisal_step_via_zeta(np.full(3, 1 / 3), c)
        assert np.abs(out - dominant_left_eigenvector(c)).max() <= 1e-10

    def test_matches_closed_form_on_random_states(self):
        # the opinion oracle and the closed-form map must agree
        c = validate(interaction_set_6()[1])
        gamma = dominant_left_eigenvector(c)
        rng = np.random.default_rng(7)
        for _ in range(25):
            x = np.clip(rng.dirichlet(np.full(6, 0.8)), 1e-6, 0.95)
            x = x / x.sum() * rng.uniform(0.3, 1.0)
            oracle = appraisal_step_via_zeta(x, c)
            closed = df_map(x, gamma)
            assert np.abs(oracle - closed).max() <= 1e-10

    def test_matches_closed_form_on_every_fixture_matrix(self):
        x = np.array([0.3, 0.1, 0.15, 0.2, 0.05, 0.1])
        for m in interaction_set_6():
            c = validate(m)
            gamma = dominant_left_eigenvector(c)
            assert np.abs(appraisal_step_via_zeta(x, c) - df_map(x, gamma)).max() <= 1e-10
