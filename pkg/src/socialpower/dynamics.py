"""The social power update map and multi-issue simulation.

The map sends the power vector x on the simplex to
alpha(x) * (gamma_i / (1 - x_i))_i, with simplex vertices as tagged
fixed points.  Under a switching program the applied eigenvector changes
per issue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalOverflow, ProgramMismatch, ValidationError, VertexInput
from .topology import TopologyProgram

# Untagged states with any 1 - x_i below this are rejected: honest
# trajectories stay away from vertices, so a near-vertex state is a
# caller error rather than a value to be propagated.
VERTEX_GUARD = 1e-14


@dataclass(frozen=True)
class Vertex:
    """Tagged autocratic configuration e_i (0-based index)."""

    index: int

    def as_array(self, n: int) -> np.ndarray:
        e = np.zeros(n)
        e[self.index] = 1.0
        return e


def alpha(x: np.ndarray, gamma: np.ndarray) -> float:
    """Normalizing scalar 1 / sum_i gamma_i / (1 - x_i)."""
    if isinstance(x, Vertex):
        raise VertexInput("alpha is undefined at a vertex")
    x = np.asarray(x, dtype=float)
    if np.any(x >= 1.0):
        raise VertexInput(f"alpha requires all x_i < 1, got max {x.max()}")
    return 1.0 / np.sum(gamma / (1.0 - x))


def df_map(x, gamma: np.ndarray):
    """One issue of the social power update; vertices are fixed points."""
    if isinstance(x, Vertex):
        return x
    x = np.asarray(x, dtype=float)
    if np.any(1.0 - x < VERTEX_GUARD):
        raise NumericalOverflow(
            "state within 1e-14 of a vertex; tag vertices explicitly"
        )
    scaled = gamma / (1.0 - x)
    return scaled / scaled.sum()


def df_step_dynamic(x, program: TopologyProgram, s: int):
    """Apply the map of the matrix selected by the program at issue s."""
    p = program.index_at(s)
    return df_map(x, program.gammas()[p])


@dataclass(frozen=True)
class Trajectory:
    """Issue-indexed states with the per-issue eigenvector and signal used.

    states[s+1] equals the map of states[s] under gamma applied_gamma[s];
    signal_log[s] is the 0-based matrix index sigma(s).
    """

    states: np.ndarray          # (S+1, n)
    applied_gamma: np.ndarray   # (S, n)
    signal_log: np.ndarray      # (S,)

    @property
    def issues(self) -> int:
        return self.states.shape[0] - 1

    @property
    def n(self) -> int:
        return self.states.shape[1]

    def to_csv(self, path) -> None:
        """One row per state; column p is the 1-based matrix index that
        produced the state (0 for the initial row)."""
        cols = ",".join(f"x_{i + 1}" for i in range(self.n))
        lines = [f"s,p,{cols}"]
        for s in range(self.states.shape[0]):
            p = 0 if s == 0 else int(self.signal_log[s - 1]) + 1
            row = ",".join(format(v, ".17g") for v in self.states[s])
            lines.append(f"{s},{p},{row}")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def _check_init(x0: np.ndarray):
    if np.any(x0 < 0) or np.any(x0 >= 1):
        raise ValidationError("initial condition requires 0 <= x_i < 1 for all i")
    if not np.any(x0 > 0):
        raise ValidationError("initial condition needs at least one x_j > 0")


def simulate(program: TopologyProgram, init, issues: int, signal_log=None) -> Trajectory:
    """Run the switching system for `issues` steps from `init`.

    `init` is either an admissible vector (0 <= x_i < 1, some x_j > 0)
    or a tagged Vertex, which yields a constant trajectory.  Passing a
    pre-realized `signal_log` lets several initial conditions share one
    signal realization.
    """
    if issues < 1:
        raise ValidationError("need at least one issue")
    if signal_log is None:
        signal_log = program.realize(issues)
    else:
        signal_log = np.asarray(signal_log, dtype=int)
        if signal_log.shape != (issues,):
            raise ValidationError("signal log length must equal the issue count")
    gammas = program.gammas()
    n = program.n
    states = np.empty((issues + 1, n))
    applied = np.empty((issues, n))

    if isinstance(init, Vertex):
        states[:] = init.as_array(n)
        for s in range(issues):
            applied[s] = gammas[signal_log[s]]
        return Trajectory(states, applied, signal_log)

    x = np.asarray(init, dtype=float)
    if x.shape != (n,):
        raise ValidationError(f"initial condition has shape {x.shape}, expected ({n},)")
    _check_init(x)
    states[0] = x
    for s in range(issues):
        g = gammas[signal_log[s]]
        applied[s] = g
        try:
            x = df_map(x, g)
        except NumericalOverflow as exc:
            raise NumericalOverflow(f"issue {s}: {exc}") from exc
        states[s + 1] = x
    return Trajectory(states, applied, signal_log)


def limit_gap(traj_a: Trajectory, traj_b: Trajectory) -> np.ndarray:
    """Per-issue 1-norm distance between two runs under one shared signal."""
    if traj_a.states.shape != traj_b.states.shape or not np.array_equal(
        traj_a.signal_log, traj_b.signal_log
    ):
        raise ProgramMismatch("trajectories come from different signal realizations")
    return np.abs(traj_a.states - traj_b.states).sum(axis=1)
