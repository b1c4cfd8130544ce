"""Reference networks used by the experiments, demos, and tests."""

from __future__ import annotations

import numpy as np

from .topology import RandomUniform, TopologyProgram, validate


def interaction_set_6() -> list[np.ndarray]:
    """The five 6-node interaction matrices of the switching experiment."""
    c1 = np.array([
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ], dtype=float)
    c2 = np.array([
        [0, 0, 0, 0, 1, 0],
        [0.8, 0, 0, 0, 0, 0.2],
        [0, 0.1, 0, 0, 0, 0.9],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ])
    c3 = np.array([
        [0, 0, 0, 0.2, 0, 0.8],
        [0.3, 0, 0.7, 0, 0, 0],
        [0, 0, 0, 0.5, 0.5, 0],
        [0, 1, 0, 0, 0, 0],
        [0.75, 0, 0, 0.25, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ])
    c4 = np.array([
        [0, 0, 0, 0, 0.85, 0.15],
        [1, 0, 0, 0, 0, 0],
        [0, 0.7, 0, 0.3, 0, 0],
        [0, 0, 0.5, 0, 0.5, 0],
        [0, 0, 0.9, 0, 0, 0.1],
        [0, 1, 0, 0, 0, 0],
    ])
    c5 = np.array([
        [0, 0.5, 0, 0, 0, 0.5],
        [0.9, 0, 0.1, 0, 0, 0],
        [0.9, 0, 0, 0, 0, 0.1],
        [0.9, 0.1, 0, 0, 0, 0],
        [0.9, 0, 0, 0.1, 0, 0],
        [0.9, 0, 0, 0, 0.1, 0],
    ])
    return [c1, c2, c3, c4, c5]


def switching_program_6(seed: int = 20170825) -> TopologyProgram:
    """The five-matrix set under seeded uniform random switching."""
    return TopologyProgram(
        tuple(validate(m) for m in interaction_set_6()), RandomUniform(seed)
    )


def star_matrix(n: int, center: int = 0) -> np.ndarray:
    """Star network: the centre trusts everyone equally, all trust the centre."""
    if n < 3:
        raise ValueError("need n >= 3")
    c = np.zeros((n, n))
    others = [i for i in range(n) if i != center]
    c[center, others] = 1.0 / (n - 1)
    c[others, center] = 1.0
    return c


def cycle_matrix(n: int) -> np.ndarray:
    """Directed n-cycle permutation matrix (doubly stochastic)."""
    return np.roll(np.eye(n), 1, axis=1)


def shift_mix_matrix(n: int, shifts, weights) -> np.ndarray:
    """Convex combination of cyclic shift permutations.

    Doubly stochastic with zero diagonal as long as no shift is 0 mod n.
    """
    c = np.zeros((n, n))
    for shift, w in zip(shifts, weights):
        if shift % n == 0:
            raise ValueError("shift 0 would put weight on the diagonal")
        c += w * np.roll(np.eye(n), shift, axis=1)
    return c
