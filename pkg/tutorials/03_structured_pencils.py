"""
Structure-preserving pencils
============================

When the realization is symmetric, T-even, T-odd or skew-symmetric, special
GFPRs (scaled by quasi-identities Q = diag(+-I)) inherit the structure.
"""

import numpy as np

from gfpr import tuples as T
from gfpr.blocks import MatrixAssignment
from gfpr.pencils import (build_block_symmetric, build_skew_symmetric, build_t_even,
                          build_t_odd)
from gfpr.sampling import random_realization
from gfpr.verify import structure_check, verify_linearization


def show(name, built, rz):
    p = built.pencil
    ok = structure_check(p, built.kind, tol=0)
    sg = lambda q: "".join("+" if s > 0 else "-" for s in q.signs)
    print(f"{name:10s} structure={ok} Q_A={sg(built.QA)} Q_D={sg(built.QD)} "
          f"convention={p.convention}")
    print("           " + verify_linearization(p, rz).summary())


rng = np.random.default_rng(1)

# symmetric: A_i, D_i symmetric and C = B^T; h and l must be even
rz = random_realization(rng, 2, 2, 3, 5, "symmetric")
XA = MatrixAssignment((0,), (np.array([[2.0, 1.0], [1.0, 3.0]]),))
empty = MatrixAssignment(())
show("symmetric", build_block_symmetric(rz, 2, 2, XA, empty, empty, empty), rz)

# T-even: even coefficients symmetric, odd ones skew, C = B^T
rz = random_realization(rng, 2, 2, 5, 4, "t_even")
show("t_even", build_t_even(rz, 2, 0, None, T.admissible_tuple(3, 3)), rz)

# T-odd: the same tuples, C = -B^T
rz = random_realization(rng, 2, 2, 5, 4, "t_odd")
show("t_odd", build_t_odd(rz, 2, 0, None, T.admissible_tuple(3, 3)), rz)

# skew-symmetric: every coefficient skew, so n and r must be even
rz = random_realization(rng, 2, 2, 4, 5, "skew_symmetric")
show("skew", build_skew_symmetric(rz, 2, 2), rz)

# The convention says which system matrix is linearized:
# minus_b is [[A, -B], [C, D]] and plus_b is [[A, B], [C, D]].
