"""Randomized invariant suite run by the `verify` CLI command.

Each check returns its worst observed margin so a failure names the
property and how badly it was missed, not just a boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import contraction_radii, jacobian, transform_chain
from .degroot import appraisal_step_via_zeta
from .dynamics import df_map
from .topology import RelativeInteractionMatrix, dominant_left_eigenvector


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst_margin: float
    detail: str = ""


def sample_interior(n: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """Interior simplex points, biased to include boundary-adjacent states."""
    raw = rng.dirichlet(np.full(n, 0.5), size=count)
    return np.clip(raw, 1e-9, None) / np.clip(raw, 1e-9, None).sum(axis=1, keepdims=True)


def finite_difference_jacobian(x: np.ndarray, gamma: np.ndarray, step: float = 1e-7) -> np.ndarray:
    """Central differences of the map formula around x."""
    n = x.size
    J = np.empty((n, n))
    for j in range(n):
        hi, lo = x.copy(), x.copy()
        hi[j] += step
        lo[j] -= step
        J[:, j] = (df_map(hi, gamma) - df_map(lo, gamma)) / (2 * step)
    return J


def check_jacobian_fd(gamma: np.ndarray, rng, samples: int = 100) -> CheckResult:
    worst = 0.0
    for x in sample_interior(gamma.size, rng, samples):
        pair = jacobian(x, df_map(x, gamma))
        fd = finite_difference_jacobian(x, gamma)
        rel = np.abs(pair.matrix - fd).max() / np.abs(pair.matrix).max()
        col_err = np.abs(pair.matrix.sum(axis=0)).max()
        worst = max(worst, rel, col_err / 1e-5)
    return CheckResult("jacobian_finite_difference", worst <= 1e-5, worst)


def check_contraction_certificates(gamma: np.ndarray, rng, samples: int = 1000) -> CheckResult:
    worst_norm = 0.0
    worst_struct = 0.0
    for x in sample_interior(gamma.size, rng, samples):
        rep = transform_chain(df_map(x, gamma))
        worst_norm = max(worst_norm, rep.h_one_norm)
        worst_struct = max(
            worst_struct,
            np.abs(rep.phi.sum(axis=0)).max(),
            np.abs(rep.phi - rep.phi.T).max(),
            max(0.0, -rep.phi_eigs.min()),
            np.abs(rep.h.sum(axis=1)).max(),
            abs(np.trace(rep.h) - 1.0),
            np.abs(rep.h_eigs.imag).max(),
        )
    passed = worst_norm < 1.0 and worst_struct <= 1e-9
    return CheckResult(
        "contraction_certificate", passed, worst_norm,
        detail=f"worst structural deviation {worst_struct:.2e}",
    )


def check_oracle_equivalence(matrix: RelativeInteractionMatrix, rng, samples: int = 1000) -> CheckResult:
    gamma = dominant_left_eigenvector(matrix)
    worst = 0.0
    for x in sample_interior(matrix.n, rng, samples):
        gap = np.abs(appraisal_step_via_zeta(x, matrix) - df_map(x, gamma)).sum()
        worst = max(worst, gap)
    return CheckResult("opinion_oracle_equivalence", worst <= 1e-10, worst)


def check_boundary_step(gamma: np.ndarray, rng, samples: int = 1000) -> CheckResult:
    """x_j <= 1 - r with r <= r_j must imply F_j(x) < 1 - r."""
    radii = contraction_radii(gamma)
    n = gamma.size
    worst = -np.inf
    for _ in range(samples):
        j = rng.integers(n)
        if radii[j] <= 0:
            continue
        r = rng.uniform(0, radii[j])
        x_j = 1.0 - r * rng.uniform(1.0, 1.5)
        rest = rng.dirichlet(np.full(n - 1, 1.0)) * (1.0 - x_j)
        x = np.insert(rest, j, x_j)
        if np.any(x >= 1.0 - 1e-12) or np.any(x <= 0):
            continue
        worst = max(worst, df_map(x, gamma)[j] - (1.0 - r))
    return CheckResult("boundary_contraction_step", worst < 0, worst)


def run_suite(matrix: RelativeInteractionMatrix, samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    gamma = dominant_left_eigenvector(matrix)
    return [
        check_jacobian_fd(gamma, rng, min(samples, 200)),
        check_contraction_certificates(gamma, rng, samples),
        check_oracle_equivalence(matrix, rng, samples),
        check_boundary_step(gamma, rng, samples),
    ]
