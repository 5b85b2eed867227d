"""
A GFPR of a rational matrix
===========================

G(lam) = D(lam) + C A(lam)^-1 B is stored as a Realization.  A generalized
Fiedler pencil with repetition (GFPR) wraps Fiedler pencils of A and D with
side products, then couples them with B and C in two corner blocks.
"""

import numpy as np

from gfpr.pencils import GfprParams, build_gfpr
from gfpr.problem import pretty_blocks
from gfpr.sampling import random_gfpr_params, random_realization
from gfpr.verify import verify_linearization

rng = np.random.default_rng(0)

# n = r = 2, deg A = 5, deg D = 4, small integer coefficients
rz = random_realization(rng, 2, 2, 5, 4)
print(rz.size, "= size of the pencil")

# Hand-picked tuples: sigma and tau split {0..5} into a nonnegative and a
# negative part at h = 2, and the side tuples keep everything SIP.
p = GfprParams(h=2, sigma=(1, 0, 2), tau=(-3, -4, -5), sigma1=(0,), sigma2=(1,),
               tau1=(-5,), l=3, gamma=(1, 2, 3, 0), delta=(-4,), gamma2=(2, 1),
               matrices={"sigma1": [np.eye(2)], "tau1": [2 * np.eye(2)]})
L = build_gfpr(rz, p)

# "." marks a zero block, "*" anything else; B and C sit in the corners
print(pretty_blocks(L))
print("corners", (L.upper.row, L.upper.col), (L.lower.row, L.lower.col))

# det L / det S is a nonzero constant when L linearizes the system matrix S
rep = verify_linearization(L, rz)
print(rep.summary())

# Random valid parameters work just as well
for seed in range(3):
    q = random_gfpr_params(np.random.default_rng(seed), rz)
    print(verify_linearization(build_gfpr(rz, q), rz).summary())
