"""The worked examples as runnable fixtures.

The printed example pencils are symbolic, so each fixture pairs the printed
tuple parameters with a fixed integer realization of the right structure.
Where a printed matrix or tuple disagrees with the definitions, the fixture
follows the definitions and the disagreement is listed in ``errata``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .problem import ProblemSpec
from .sampling import _nonsingular_matrix, random_matrix, random_realization

__all__ = ["Demo", "DEMOS", "demo"]


@dataclass
class Demo:
    name: str
    title: str
    spec: ProblemSpec
    errata: list[str] = field(default_factory=list)
    expected: dict = field(default_factory=dict)


def _gfpr_ex() -> Demo:
    rng = np.random.default_rng(20240501)
    rz = random_realization(rng, 2, 2, 5, 4)
    X1 = _nonsingular_matrix(rng, 2)
    Y1 = _nonsingular_matrix(rng, 2)
    X2, X, Y = (random_matrix(rng, 2) for _ in range(3))
    tuples = dict(h=2, sigma=(1, 0, 2), tau=(-3, -4, -5), sigma1=(0,), sigma2=(1,),
                  tau1=(-5,), tau2=(), l=3, gamma=(1, 2, 3, 0), delta=(-4,), gamma1=(),
                  gamma2=(2, 1), delta1=(), delta2=())
    spec = ProblemSpec(rz, "gfpr", tuples,
                       {"sigma1": [X1], "tau1": [Y1], "sigma2": [X2], "gamma2": [X, Y]})
    errata = [
        "the printed L_D part uses I_n in places where the D-blocks are r x r; I_r is used",
        "the printed D-block contains a stray A_0 entry; the definition gives D-coefficients only",
        "the definition prints the lower corner without the C factor; the payload C is used",
        "the definition prints the upper-corner column as c_0(gamma, gamma_2); k - c_0 is used",
        "the parameter list repeats tau_1 = tau_2 = phi for the D side; it means delta_1 = delta_2 = phi",
        "block (5, 4) is printed as lam*I_n; row 5 is X_1 times a Fiedler row, so the "
        "definition gives lam*X_1 (consistent with the printed -X_1 beside it)",
    ]
    return Demo("gfpr_ex", "GFPR of a degree (5, 4) realization", spec, errata,
                dict(upper=(4, 3), lower=(3, 4), convention="minus_b"))


def _sym_ex() -> Demo:
    rng = np.random.default_rng(20240502)
    rz = random_realization(rng, 2, 2, 3, 5, "symmetric")
    XA, XD, YD = (_nonsingular_matrix(rng, 2, "symmetric") for _ in range(3))
    tuples = dict(h=2, l=2, t_w=(0,), t_v=(), t_wl=(0,), t_vl=(-5,))
    spec = ProblemSpec(rz, "symmetric", tuples, {"x_a": [XA], "x_d": [XD], "y_d": [YD]})
    errata = [
        "the example prints v_l = (-3) and c_vl = phi, but with k = 5 the simple admissible "
        "tuple shifted by -k is (-4, -3, -5) with symmetric complement (-4); t_vl = (-5) "
        "is only canonical for that tuple, so the definition-derived values are used",
        "block (2, 2) is printed as lam*A_1 + A_0; the definition gives -lam*A_1 + A_0, "
        "matching the printed D-side block (7, 7)",
    ]
    return Demo("sym_ex", "block-symmetric GFPR, m = 3, k = 5", spec, errata,
                dict(upper=(2, 4), lower=(4, 2), convention="plus_b"))


def _even_odd(name: str, structure: str, seed: int) -> Demo:
    rng = np.random.default_rng(seed)
    rz = random_realization(rng, 2, 2, 5, 4, structure)
    tuples = dict(h=2, l=0, z_h=(-4, -3, -5), z_l=(-4, -3, -2, -1))
    spec = ProblemSpec(rz, structure, tuples)
    if structure == "t_even":
        errata = ["block (3, 3) is printed as -lam*A_3 - A_3; the definition gives -lam*A_3 - A_2"]
        expected = dict(QA=(1, 1, -1, 1, -1), QD=(1, -1, 1, -1), upper=(4, 4), lower=(4, 4),
                        convention="minus_b")
        title = "T-even pencil, m = 5, k = 4"
    else:
        errata = [
            "the printed pencil shows 1 where the B block belongs; B is used",
            "the closing sentence calls the result T-even; it is T-odd",
        ]
        expected = dict(QA=(1, -1, 1, -1, -1), QD=(1, -1, 1, -1), upper=(4, 4), lower=(4, 4),
                        convention="plus_b")
        title = "T-odd pencil, m = 5, k = 4"
    return Demo(name, title, spec, errata, expected)


def _skew_ex() -> Demo:
    rng = np.random.default_rng(20240505)
    rz = random_realization(rng, 2, 2, 4, 5, "skew_symmetric")
    tuples = dict(h=2, l=2, z_h=(-4, -3), z_l=(-4, -3, -5), t_w=(), t_v=(), t_zh=(), t_zl=())
    spec = ProblemSpec(rz, "skew", tuples)
    errata = [
        "the construction writes the D-part factors with M-notation; the N-family of D is used",
        "one factor inside L_A reads c_{z_l}; c_{z_h} is used",
        "with the printed corner payloads B and B^T the constant coefficient cannot be "
        "skew-symmetric (it would need B^T = -B^T); the upper corner carries -B instead",
        "the tuple z_l is printed with a missing opening parenthesis",
        "block (3, 4) is printed as -lam*I; skew symmetry against block (4, 3) = -lam*I "
        "and the definition both give +lam*I",
    ]
    return Demo("skew_ex", "skew-symmetric pencil, m = 4, k = 5", spec, errata,
                dict(QA=(1, 1, 1, -1), QD=(1, -1, -1, -1, 1), upper=(3, 4), lower=(4, 3),
                     convention="plus_b"))


DEMOS = {
    "gfpr_ex": _gfpr_ex,
    "sym_ex": _sym_ex,
    "teven_ex": lambda: _even_odd("teven_ex", "t_even", 20240503),
    "todd_ex": lambda: _even_odd("todd_ex", "t_odd", 20240504),
    "skew_ex": _skew_ex,
}


def demo(name: str) -> Demo:
    try:
        return DEMOS[name]()
    except KeyError:
        raise ValueError(f"unknown demo {name!r}; choose from {sorted(DEMOS)}") from None
