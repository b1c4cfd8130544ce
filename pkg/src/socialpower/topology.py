"""Relative interaction matrices, switching programs, and their spectral analysis.

An interaction matrix is row-stochastic with zero diagonal and an
irreducible support graph.  Its dominant left eigenvector encodes
eigenvector centrality of trust and drives the social power map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionTooSmall,
    NegativeEntry,
    NoConvergence,
    NonzeroDiagonal,
    ParseError,
    Reducible,
    RowSumError,
    ValidationError,
)

# Entries below this are structural zeros for graph construction; avoids
# spurious edges created by decimal round-trips.
STRUCTURAL_ZERO = 1e-15

ROW_SUM_TOL = 1e-12
DEFAULT_EIG_TOL = 1e-12
MAX_POWER_ITERS = 100_000


@dataclass(frozen=True)
class RelativeInteractionMatrix:
    """Validated row-stochastic, zero-diagonal, irreducible matrix."""

    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class StarClassification:
    is_star: bool
    center: int | None = None


def validate(matrix) -> RelativeInteractionMatrix:
    """Check all structural invariants, raising on the first violation.

    Violations are reported in a fixed order: dimension, negative entries,
    diagonal, row sums, irreducibility.
    """
    entries = np.array(matrix, dtype=float)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise DimensionTooSmall(f"expected a square matrix, got shape {entries.shape}")
    n = entries.shape[0]
    if n < 3:
        raise DimensionTooSmall(f"need n >= 3, got n = {n}")
    if np.any(entries < 0):
        i, j = np.argwhere(entries < 0)[0]
        raise NegativeEntry(f"entry ({i + 1},{j + 1}) = {entries[i, j]} is negative")
    diag = np.diagonal(entries)
    if np.any(diag != 0.0):
        i = int(np.argwhere(diag != 0.0)[0, 0])
        raise NonzeroDiagonal(f"diagonal entry {i + 1} = {diag[i]} must be exactly 0")
    row_sums = entries.sum(axis=1)
    bad = np.abs(row_sums - 1.0) > ROW_SUM_TOL
    if np.any(bad):
        i = int(np.argwhere(bad)[0, 0])
        raise RowSumError(f"row {i + 1} sums to {row_sums[i]}, expected 1")
    if not is_irreducible(entries):
        raise Reducible("support graph is not strongly connected")
    return RelativeInteractionMatrix(entries)


def _support(entries: np.ndarray) -> np.ndarray:
    return np.asarray(entries) > STRUCTURAL_ZERO


def is_irreducible(matrix) -> bool:
    """Strong connectivity of the support graph, decided structurally.

    Equivalent to a full SCC decomposition having a single component:
    node 0 must reach every node along the support pattern and along its
    transpose.
    """
    support = _support(np.asarray(matrix, dtype=float))
    n = support.shape[0]

    def reaches_all(adj):
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for w in np.flatnonzero(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        return bool(seen.all())

    return reaches_all(support) and reaches_all(support.T)


def classify_star(matrix: RelativeInteractionMatrix) -> StarClassification:
    """Detect whether every edge of the support graph touches one node."""
    support = _support(matrix.entries)
    np.fill_diagonal(support, False)
    edges = np.argwhere(support)
    for center in range(matrix.n):
        if np.all((edges[:, 0] == center) | (edges[:, 1] == center)):
            return StarClassification(True, center)
    return StarClassification(False, None)


def _power_left(matrix: np.ndarray, tol: float, max_iters: int, damping: float) -> tuple[np.ndarray, int]:
    """Sum-normalized left power iteration x^T <- (1-theta) x^T + theta x^T M."""
    n = matrix.shape[0]
    x = np.full(n, 1.0 / n)
    for it in range(1, max_iters + 1):
        x_new = (1.0 - damping) * x + damping * (x @ matrix)
        x_new /= x_new.sum()
        if np.abs(x_new @ matrix - x_new).sum() <= tol:
            return x_new, it
        x = x_new
    raise NoConvergence(f"left power iteration did not reach tol={tol}", max_iters)


def dominant_left_eigenvector(
    matrix: RelativeInteractionMatrix | np.ndarray,
    tol: float = DEFAULT_EIG_TOL,
    max_iters: int = MAX_POWER_ITERS,
) -> np.ndarray:
    """Unique positive left eigenvector at eigenvalue 1, normalized to sum 1.

    Plain power iteration first; on a no-convergence signal (period-2
    spectral oscillation of bipartite-like supports) retry once with
    damping 0.5, which shifts the offending eigenvalue without moving the
    fixed vector.
    """
    entries = matrix.entries if isinstance(matrix, RelativeInteractionMatrix) else np.asarray(matrix, dtype=float)
    try:
        gamma, _ = _power_left(entries, tol, min(5000, max_iters), damping=1.0)
    except NoConvergence:
        gamma, _ = _power_left(entries, tol, max_iters, damping=0.5)
    if np.any(gamma <= 0):
        raise NoConvergence("power iteration produced a nonpositive entry")
    return gamma


def max_gamma_profile(program) -> np.ndarray:
    """Entrywise maximum of the dominant left eigenvectors over a matrix set."""
    matrices = program.matrices if isinstance(program, TopologyProgram) else list(program)
    if not matrices:
        raise ValidationError("empty matrix set")
    gammas = [dominant_left_eigenvector(m) for m in matrices]
    return np.max(np.vstack(gammas), axis=0)


# ---------------------------------------------------------------------------
# Switching signals and programs


@dataclass(frozen=True)
class Constant:
    """Always selects the same matrix (0-based index)."""

    index: int

    def realize(self, issues: int, num_matrices: int) -> np.ndarray:
        if not 0 <= self.index < num_matrices:
            raise ValidationError(f"constant index {self.index} out of range")
        return np.full(issues, self.index, dtype=int)


@dataclass(frozen=True)
class Periodic:
    """Cycles through `order`; sigma(0) is the last element of the cycle.

    Matches the convention sigma(0) = P, sigma(Pq + p) = p: the first
    issue uses the final phase, then the cycle runs from the start.
    """

    order: tuple

    def realize(self, issues: int, num_matrices: int) -> np.ndarray:
        order = np.asarray(self.order, dtype=int)
        if order.size < 1 or np.any(order < 0) or np.any(order >= num_matrices):
            raise ValidationError(f"periodic order {self.order} out of range")
        period = order.size
        s = np.arange(issues)
        return order[np.where(s == 0, period - 1, (s - 1) % period)]


@dataclass(frozen=True)
class Scripted:
    """Explicit per-issue index list; must cover the whole run."""

    sequence: tuple

    def realize(self, issues: int, num_matrices: int) -> np.ndarray:
        seq = np.asarray(self.sequence, dtype=int)
        if seq.size < issues:
            raise ValidationError(f"scripted signal has {seq.size} entries, need {issues}")
        if np.any(seq < 0) or np.any(seq >= num_matrices):
            raise ValidationError("scripted index out of range")
        return seq[:issues].copy()


@dataclass(frozen=True)
class RandomUniform:
    """Independent uniform draws over the matrix set, from a 64-bit seed.

    The generator is numpy's default PCG64, so a fixed seed replays
    bit-identically across runs.
    """

    seed: int

    def realize(self, issues: int, num_matrices: int) -> np.ndarray:
        rng = np.random.default_rng(self.seed)
        return rng.integers(0, num_matrices, size=issues)


@dataclass(frozen=True)
class TopologyProgram:
    """A finite validated matrix set plus a switching signal."""

    matrices: tuple
    signal: object
    _gammas: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        if len(self.matrices) == 0:
            raise ValidationError("program needs at least one matrix")
        n = self.matrices[0].n
        for m in self.matrices:
            if not isinstance(m, RelativeInteractionMatrix):
                raise ValidationError("program matrices must be validated first")
            if m.n != n:
                raise ValidationError("all program matrices must share one dimension")

    @property
    def n(self) -> int:
        return self.matrices[0].n

    def gammas(self) -> list:
        if not self._gammas:
            self._gammas.extend(dominant_left_eigenvector(m) for m in self.matrices)
        return list(self._gammas)

    def realize(self, issues: int) -> np.ndarray:
        return self.signal.realize(issues, len(self.matrices))

    def index_at(self, s: int) -> int:
        return int(self.realize(s + 1)[-1])


# ---------------------------------------------------------------------------
# Program files: human-readable JSON, decimals at 17 significant digits,
# all indices 1-based.


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _signal_to_doc(signal) -> str:
    if isinstance(signal, Constant):
        return f'{{"kind": "constant", "index": {signal.index + 1}}}'
    if isinstance(signal, Periodic):
        order = ", ".join(str(i + 1) for i in signal.order)
        return f'{{"kind": "periodic", "order": [{order}]}}'
    if isinstance(signal, Scripted):
        seq = ", ".join(str(i + 1) for i in signal.sequence)
        return f'{{"kind": "scripted", "sequence": [{seq}]}}'
    if isinstance(signal, RandomUniform):
        return f'{{"kind": "random", "seed": {signal.seed}}}'
    raise ValidationError(f"unknown signal type {type(signal).__name__}")


def save_program(program: TopologyProgram, path) -> None:
    lines = ["{", f'  "n": {program.n},', '  "matrices": [']
    for k, m in enumerate(program.matrices):
        lines.append("    [")
        for i in range(m.n):
            row = ", ".join(_fmt(v) for v in m.entries[i])
            comma = "," if i < m.n - 1 else ""
            lines.append(f"      [{row}]{comma}")
        comma = "," if k < len(program.matrices) - 1 else ""
        lines.append(f"    ]{comma}")
    lines.append("  ],")
    lines.append(f'  "signal": {_signal_to_doc(program.signal)}')
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _signal_from_doc(doc) -> object:
    try:
        kind = doc["kind"]
        if kind == "constant":
            return Constant(int(doc["index"]) - 1)
        if kind == "periodic":
            return Periodic(tuple(int(i) - 1 for i in doc["order"]))
        if kind == "scripted":
            return Scripted(tuple(int(i) - 1 for i in doc["sequence"]))
        if kind == "random":
            return RandomUniform(int(doc["seed"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed signal section: {exc}") from exc
    raise ParseError(f"unknown signal kind {kind!r}")


def load_program(path) -> TopologyProgram:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict) or "matrices" not in doc or "signal" not in doc:
        raise ParseError(f"{path}: expected fields 'n', 'matrices', 'signal'")
    raw_matrices = doc["matrices"]
    if not isinstance(raw_matrices, list) or len(raw_matrices) == 0:
        raise ParseError(f"{path}: 'matrices' must be a nonempty list")
    matrices = tuple(validate(m) for m in raw_matrices)
    return TopologyProgram(matrices, _signal_from_doc(doc["signal"]))
