import json

import numpy as np
import pytest

from socialpower import errors
from socialpower.fixtures import cycle_matrix, interaction_set_6, star_matrix, switching_program_6
from socialpower.topology import (
    Constant,
    Periodic,
    RandomUniform,
    Scripted,
    TopologyProgram,
    classify_star,
    dominant_left_eigenvector,
    is_irreducible,
    load_program,
    max_gamma_profile,
    save_program,
    validate,
)

STAR3 = np.array([[0, 0.5, 0.5], [1, 0, 0], [1, 0, 0]])


def reachable_closure(adj):
    # independent oracle: boolean transitive closure by repeated squaring
    n = adj.shape[0]
    reach = adj | np.eye(n, dtype=bool)
    for _ in range(n):
        reach = reach | (reach @ reach)
    return reach


class TestValidate:
    def test_example_cycle_is_valid(self):
        m = validate(interaction_set_6()[0])
        assert m.n == 6

    def test_identity_rejected_on_diagonal(self):
        with pytest.raises(errors.NonzeroDiagonal):
            validate(np.eye(3))

    def test_disconnected_blocks_rejected(self):
        block = np.zeros((4, 4))
        block[0, 1] = block[1, 0] = 1.0
        block[2, 3] = block[3, 2] = 1.0
        with pytest.raises(errors.Reducible):
            validate(block)

    def test_small_dimension_rejected(self):
        with pytest.raises(errors.DimensionTooSmall):
            validate([[0, 1], [1, 0]])

    def test_negative_entry_rejected(self):
        bad = STAR3.copy()
        bad[0, 1], bad[0, 2] = -0.5, 1.5
        with pytest.raises(errors.NegativeEntry):
            validate(bad)

    def test_bad_row_sum_rejected(self):
        bad = STAR3.copy()
        bad[0, 1] = 0.49
        with pytest.raises(errors.RowSumError):
            validate(bad)


class TestIrreducibility:
    def test_cycle_irreducible(self):
        assert is_irreducible(interaction_set_6()[0])

    def test_triangular_reducible(self):
        assert not is_irreducible(np.triu(np.ones((3, 3)), 1))

    @pytest.mark.parametrize("idx", range(5))
    def test_fixture_matches_closure_oracle(self, idx):
        m = interaction_set_6()[idx]
        closure = reachable_closure(m > 1e-15)
        assert is_irreducible(m) == bool(closure.all())


class TestStarClassification:
    def test_three_node_star(self):
        result = classify_star(validate(STAR3))
        assert result.is_star and result.center == 0

    def test_cycle_not_star(self):
        assert not classify_star(validate(interaction_set_6()[0])).is_star

    def test_c4_not_star_by_edge_enumeration(self):
        m = interaction_set_6()[3]
        edges = [(i, j) for i in range(6) for j in range(6) if m[i, j] > 1e-15]
        common = [v for v in range(6) if all(i == v or j == v for i, j in edges)]
        assert common == []
        assert not classify_star(validate(m)).is_star

    def test_spectral_cross_check_on_fixtures(self):
        # structural star test must agree with max-gamma = 0.5 on every fixture
        for m in interaction_set_6() + [star_matrix(5), star_matrix(6, 2), STAR3]:
            validated = validate(m)
            gamma = dominant_left_eigenvector(validated)
            assert classify_star(validated).is_star == (abs(gamma.max() - 0.5) <= 1e-9)


class TestDominantLeftEigenvector:
    def test_star_center_half(self):
        gamma = dominant_left_eigenvector(validate(STAR3))
        assert np.allclose(gamma, [0.5, 0.25, 0.25], atol=1e-12)

    def test_doubly_stochastic_uniform(self):
        gamma = dominant_left_eigenvector(validate(cycle_matrix(6)))
        assert np.abs(gamma - 1 / 6).max() <= 1e-12

    def test_c2_matches_dense_eigensolver(self):
        c2 = interaction_set_6()[1]
        eigvals, eigvecs = np.linalg.eig(c2.T)
        vec = np.real(eigvecs[:, np.argmin(np.abs(eigvals - 1))])
        vec /= vec.sum()
        gamma = dominant_left_eigenvector(validate(c2))
        assert np.abs(gamma - vec).max() <= 1e-10

    def test_residual_positivity_contract(self):
        for m in interaction_set_6():
            gamma = dominant_left_eigenvector(validate(m), tol=1e-12)
            assert np.abs(gamma @ m - gamma).sum() <= 1e-12
            assert gamma.min() > 0
            assert abs(gamma.sum() - 1) <= 1e-12

    def test_bipartite_support_uses_damping(self):
        # period-2 support pattern whose eigenvector is not uniform
        m = np.array([
            [0, 0, 0.3, 0.7],
            [0, 0, 0.6, 0.4],
            [0.2, 0.8, 0, 0],
            [0.5, 0.5, 0, 0],
        ])
        gamma = dominant_left_eigenvector(validate(m))
        assert np.abs(gamma @ m - gamma).sum() <= 1e-12


class TestMaxGammaProfile:
    def test_example_group_profile(self):
        profile = max_gamma_profile([validate(m) for m in interaction_set_6()])
        expected = [0.4737, 0.2371, 0.2439, 0.2439, 0.2439, 0.2392]
        assert np.abs(profile - expected).max() <= 5e-5

    def test_singleton(self):
        m = validate(STAR3)
        assert np.allclose(max_gamma_profile([m]), dominant_left_eigenvector(m))

    def test_duplicates_idempotent(self):
        m = validate(interaction_set_6()[2])
        gamma = dominant_left_eigenvector(m)
        assert np.allclose(max_gamma_profile([m, m]), gamma)

    def test_dominates_each_member(self):
        matrices = [validate(m) for m in interaction_set_6()]
        profile = max_gamma_profile(matrices)
        for m in matrices:
            assert np.all(profile >= dominant_left_eigenvector(m) - 1e-15)


class TestProgramFiles:
    def test_round_trip_bit_exact(self, tmp_path):
        program = switching_program_6(seed=42)
        path = tmp_path / "program.json"
        save_program(program, path)
        loaded = load_program(path)
        assert len(loaded.matrices) == 5
        for a, b in zip(program.matrices, loaded.matrices):
            assert np.array_equal(a.entries, b.entries)
        assert loaded.signal == program.signal

    def test_round_trip_awkward_decimals(self, tmp_path):
        m = np.zeros((3, 3))
        m[0, 1] = 1 / 3
        m[0, 2] = 1 - 1 / 3
        m[1, 0] = 0.1
        m[1, 2] = 0.9
        m[2, 0] = 1.0
        program = TopologyProgram((validate(m),), Constant(0))
        path = tmp_path / "p.json"
        save_program(program, path)
        assert np.array_equal(load_program(path).matrices[0].entries, m)

    def test_empty_matrix_list_rejected(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text('{"n": 3, "matrices": [], "signal": {"kind": "constant", "index": 1}}')
        with pytest.raises(errors.ParseError):
            load_program(path)

    def test_bad_row_sum_in_file(self, tmp_path):
        bad = STAR3.copy()
        bad[0, 1] = 0.49
        doc = {"n": 3, "matrices": [bad.tolist()], "signal": {"kind": "constant", "index": 1}}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(errors.RowSumError):
            load_program(path)

    def test_signals_round_trip(self, tmp_path):
        matrices = tuple(validate(m) for m in interaction_set_6())
        for signal in [Constant(2), Periodic((0, 3, 1)), Scripted((0, 1, 2, 4)), RandomUniform(99)]:
            program = TopologyProgram(matrices, signal)
            path = tmp_path / "sig.json"
            save_program(program, path)
            assert load_program(path).signal == signal


class TestSignals:
    def test_periodic_convention_first_issue_uses_last_phase(self):
        log = Periodic((0, 1, 2)).realize(7, 3)
        assert log.tolist() == [2, 0, 1, 2, 0, 1, 2]

    def test_random_replays_bit_identically(self):
        a = RandomUniform(123).realize(50, 5)
        b = RandomUniform(123).realize(50, 5)
        assert np.array_equal(a, b)

    def test_scripted_too_short(self):
        with pytest.raises(errors.ValidationError):
            Scripted((0, 1)).realize(5, 3)
