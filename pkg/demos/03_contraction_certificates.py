"""Why the dynamics converge: a certificate you can check numerically.

The derivative of the issue-to-issue map, evaluated after one update,
factors as a diagonal scaling times a symmetric Laplacian-like matrix H
with trace 1, real eigenvalues in [0, 1) and induced 1-norm below 1.
That norm bound is the contraction certificate; this script computes it
at random states and runs the packaged invariant suite.
"""

import numpy as np

from socialpower import df_map, jacobian, transform_chain, validate
from socialpower.fixtures import interaction_set_6
from socialpower.topology import dominant_left_eigenvector
from socialpower.verification import run_suite, sample_interior

matrix = validate(interaction_set_6()[2])
gamma = dominant_left_eigenvector(matrix)
rng = np.random.default_rng(0)

worst = 0.0
for x in sample_interior(6, rng, 500):
    x_next = df_map(x, gamma)
    rep = transform_chain(x_next)
    worst = max(worst, rep.h_one_norm)
print(f"worst ||H||_1 over 500 sampled post-update states: {worst:.6f}  (< 1)")

x = np.array([0.3, 0.1, 0.15, 0.2, 0.05, 0.2])
J = jacobian(x, df_map(x, gamma)).matrix
print("derivative column sums (zero: the map fixes the total):",
      np.round(J.sum(axis=0), 12))

print("\npackaged invariant suite:")
for res in run_suite(matrix, samples=200, seed=0):
    print(f"  {res.name}: {'pass' if res.passed else 'FAIL'}"
          f" (worst margin {res.worst_margin:.3e})")
