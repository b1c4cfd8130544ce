"""Executable contraction machinery: Jacobians, the transform chain,
certificates, radii, equilibrium bounds, rates, and vertex stability.

The transformed Jacobian H = Theta * Phi has induced 1-norm strictly
below 1 on interior states, which is what forces exponential convergence
of trajectory differences; `transform_chain` evaluates and certifies
this at a concrete state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .dynamics import df_map
from .errors import NearVertex, NoConvergence, StarTopology

STAR_GAMMA_TOL = 1e-9


@dataclass(frozen=True)
class Tolerances:
    """Central tolerance ledger; every certificate records the set it used."""

    near_vertex: float = 1e-12      # minimum allowed 1 - x_i
    structure: float = 1e-10        # row/column sums, trace
    psd: float = 1e-10              # eigenvalue nonnegativity slack
    imag: float = 1e-9              # allowed imaginary part of H eigenvalues
    fixed_point: float = 1e-13      # iteration stop for fixed points
    max_issues: int = 10_000


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class JacobianPair:
    x_now: np.ndarray
    x_next: np.ndarray
    matrix: np.ndarray


@dataclass(frozen=True)
class ContractionReport:
    theta: np.ndarray       # diagonal of Theta = diag(1/(1 - x_i))
    phi: np.ndarray
    h: np.ndarray
    h_one_norm: float
    phi_eigs: np.ndarray
    h_eigs: np.ndarray
    certified: bool
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES)

    @property
    def margin(self) -> float:
        """Measured contraction margin 1 - ||H||_1."""
        return 1.0 - self.h_one_norm


def _require_interior(x: np.ndarray, tol: Tolerances):
    if np.any(1.0 - x < tol.near_vertex):
        raise NearVertex(f"1 - x_i below {tol.near_vertex}; state too close to a vertex")
    if np.any(x <= 0):
        raise NearVertex("state must be strictly interior")


def jacobian(x_now: np.ndarray, x_next: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> JacobianPair:
    """Closed-form Jacobian of the power map between successive states.

    J_ii = x'_i (1 - x'_i)/(1 - x_i) and J_ij = -x'_i x'_j/(1 - x_j),
    written with x' = x_next.  Columns sum to 1.
    """
    x_now = np.asarray(x_now, dtype=float)
    x_next = np.asarray(x_next, dtype=float)
    _require_interior(x_now, tolerances)
    J = -np.outer(x_next, x_next / (1.0 - x_now))
    np.fill_diagonal(J, x_next * (1.0 - x_next) / (1.0 - x_now))
    return JacobianPair(x_now, x_next, J)


def transform_chain(x_next: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ContractionReport:
    """Build Theta, Phi and H at a post-update state and certify ||H||_1 < 1.

    Phi is the weighted Laplacian of a complete undirected graph
    (phi_ii = x_i(1 - x_i), phi_ij = -x_i x_j); H = Theta Phi has
    h_ii = x_i and h_ij = -x_i x_j/(1 - x_i).
    """
    x = np.asarray(x_next, dtype=float)
    _require_interior(x, tolerances)
    theta = 1.0 / (1.0 - x)
    phi = -np.outer(x, x)
    np.fill_diagonal(phi, x * (1.0 - x))
    h = theta[:, None] * phi
    h_one_norm = float(np.abs(h).sum(axis=0).max())
    phi_eigs = np.linalg.eigvalsh(phi)
    h_eigs = np.linalg.eigvals(h)
    return ContractionReport(
        theta=theta,
        phi=phi,
        h=h,
        h_one_norm=h_one_norm,
        phi_eigs=phi_eigs,
        h_eigs=h_eigs,
        certified=h_one_norm < 1.0,
        tolerances=tolerances,
    )


def contraction_radii(gamma: np.ndarray) -> np.ndarray:
    """Boundary radii r_j = (1 - 2 gamma_j)/(1 - gamma_j), 0 at a star centre."""
    gamma = np.asarray(gamma, dtype=float)
    return np.maximum((1.0 - 2.0 * gamma) / (1.0 - gamma), 0.0)


def equilibrium_upper_bound(gamma: np.ndarray) -> np.ndarray:
    """Limiting power bounds gamma_i/(1 - gamma_i).

    Strict for a constant topology, non-strict (per issue) when `gamma`
    is the entrywise max profile of a switching set.
    """
    gamma = np.asarray(gamma, dtype=float)
    if np.any(gamma >= 0.5 - STAR_GAMMA_TOL):
        raise StarTopology("bound undefined at a star centre (gamma_i = 0.5)")
    return gamma / (1.0 - gamma)


def convergence_rate(gammas) -> float | None:
    """Rate 2 * max gamma/(1 - gamma) when every entry is below 1/3.

    Returns None when any entry reaches 1/3: the Lipschitz rate argument
    only covers that matrix class.
    """
    stacked = np.vstack([np.asarray(g, dtype=float) for g in gammas])
    if np.any(stacked >= 1.0 / 3.0):
        return None
    beta = float(np.max(stacked / (1.0 - stacked)))
    return 2.0 * beta


class VertexStability(Enum):
    UNSTABLE = "unstable"
    ASYMPTOTICALLY_STABLE_NOT_EXPONENTIAL = "asymptotically_stable_not_exponential"


@dataclass(frozen=True)
class VertexClassification:
    stability: VertexStability
    eigenvalue: float


def vertex_stability(gamma: np.ndarray, i: int) -> VertexClassification:
    """Stability of the autocratic fixed point e_i.

    The linearization at e_i has a single nonzero eigenvalue
    (1 - gamma_i)/gamma_i: above 1 (unstable) when gamma_i < 0.5, exactly
    1 at a star centre, where e_i is attracting but not exponentially.
    """
    g = float(np.asarray(gamma, dtype=float)[i])
    eig = 1.0 / g - 1.0  # (1 - g)/g, written to round exactly at round weights
    if abs(g - 0.5) <= STAR_GAMMA_TOL:
        return VertexClassification(
            VertexStability.ASYMPTOTICALLY_STABLE_NOT_EXPONENTIAL, eig
        )
    return VertexClassification(VertexStability.UNSTABLE, eig)


def fixed_point(
    gamma: np.ndarray,
    tol: float = DEFAULT_TOLERANCES.fixed_point,
    max_issues: int = DEFAULT_TOLERANCES.max_issues,
) -> np.ndarray:
    """Unique interior equilibrium for a non-star eigenvector.

    Iterates the map from the uniform vector; exponential convergence
    makes the 1e-13 default reachable quickly away from star topologies.
    """
    gamma = np.asarray(gamma, dtype=float)
    if np.any(gamma >= 0.5 - STAR_GAMMA_TOL):
        raise StarTopology("no interior fixed point for a star topology")
    x = np.full(gamma.size, 1.0 / gamma.size)
    for _ in range(max_issues):
        x_new = df_map(x, gamma)
        if np.abs(x_new - x).sum() < tol:
            return x_new
        x = x_new
    raise NoConvergence(f"fixed point not reached within {max_issues} issues", max_issues)
