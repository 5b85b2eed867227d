"""Random realizations and builder parameters for property testing.

All matrices have small integer entries, so products stay exactly
representable and structure checks can run with zero tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tuples as T
from .blocks import MatrixAssignment, PolynomialMatrix
from .pencils import GfprParams, Realization

__all__ = ["Instance", "random_matrix", "random_realization", "random_gfpr_params",
           "random_instance", "STRUCTURED_BUILDERS"]

STRUCTURED_BUILDERS = {"symmetric": "symmetric", "t_even": "t_even", "t_odd": "t_odd",
                       "skew_symmetric": "skew"}

# sign s in M^T = s M for coefficient j of each structure
_COEFF_KIND = {
    "none": lambda j: "general",
    "symmetric": lambda j: "symmetric",
    "t_even": lambda j: "symmetric" if j % 2 == 0 else "skew",
    "t_odd": lambda j: "skew" if j % 2 == 0 else "symmetric",
    "skew_symmetric": lambda j: "skew",
}


@dataclass
class Instance:
    """A realization plus the keyword arguments of one builder."""

    rz: Realization
    builder: str
    params: dict = field(default_factory=dict)


def random_matrix(rng: np.random.Generator, rows: int, cols: int | None = None,
                  kind: str = "general", bound: int = 3) -> np.ndarray:
    """Integer matrix with entries in ``[-bound, bound]``; square kinds are
    ``symmetric`` and ``skew``."""
    cols = rows if cols is None else cols
    M = rng.integers(-bound, bound + 1, size=(rows, cols)).astype(float)
    if kind == "general":
        return M
    if rows != cols:
        raise ValueError(f"{kind} matrices must be square")
    U = np.triu(M, 1)
    if kind == "symmetric":
        return U + U.T + np.diag(np.diag(M))
    if kind == "skew":
        return U - U.T
    raise ValueError(f"unknown matrix kind {kind!r}")


def _nonsingular_matrix(rng, n, kind="general", tries=200) -> np.ndarray:
    for _ in range(tries):
        M = random_matrix(rng, n, kind=kind)
        if abs(np.linalg.det(M)) > 0.5:  # integer determinant, so nonzero means >= 1
            return M
    raise RuntimeError(f"no nonsingular {kind} {n}x{n} integer matrix found")


def random_realization(rng: np.random.Generator, n: int, r: int, m: int, k: int,
                       structure: str = "none", singular_lead: bool = False) -> Realization:
    """Random realization with nonsingular extreme coefficients where the kind allows.

    With ``singular_lead`` the leading coefficients are left unconstrained
    (and are singular whenever the structure forces it).
    """
    kind_of = _COEFF_KIND[structure]

    def family(size, deg):
        cs = []
        for j in range(deg + 1):
            kind = kind_of(j)
            forced_singular = kind == "skew" and size % 2 == 1
            if j in (0, deg) and not forced_singular and not (singular_lead and j == deg):
                cs.append(_nonsingular_matrix(rng, size, kind))
            else:
                cs.append(random_matrix(rng, size, kind=kind))
        return PolynomialMatrix(tuple(cs))

    A, D = family(n, m), family(r, k)
    B = random_matrix(rng, n, r)
    C = {"none": lambda: random_matrix(rng, r, n), "symmetric": lambda: B.T,
         "t_even": lambda: B.T, "t_odd": lambda: -B.T,
         "skew_symmetric": lambda: B.T}[structure]()
    return Realization(A, D, B, C, structure)


def _random_side(rng, core: tuple[int, ...], lo: int, hi: int, max_len: int,
                 before: bool, tries: int = 30) -> tuple[int, ...]:
    """Random tuple over ``{lo..hi}`` keeping ``core`` (with it) SIP."""
    if hi < lo:
        return ()
    for _ in range(tries):
        t = tuple(int(x) for x in rng.integers(lo, hi + 1, size=rng.integers(0, max_len + 1)))
        if T.is_sip(t + core if before else core + t):
            return t
    return ()


def _assignment_matrices(rng, t, family: PolynomialMatrix, deg: int):
    """Random matrices for ``t``; positions ``0`` and ``-deg`` get nonsingular ones.

    Some positions are left ``None`` (Fiedler matrix) when that is safe.
    """
    out = []
    for i in t:
        critical = i in (0, -deg)
        if rng.random() < 0.3:
            coeff = family[0] if i == 0 else family[deg] if i == -deg else None
            if coeff is None or abs(np.linalg.det(coeff)) > 0.5:
                out.append(None)
                continue
        out.append(_nonsingular_matrix(rng, family.size) if critical
                   else random_matrix(rng, family.size))
    return out


def random_gfpr_params(rng: np.random.Generator, rz: Realization, max_side: int = 3) -> GfprParams:
    """Random valid GFPR parameters with nonsingular assignments."""
    sides: dict = {}
    mats: dict = {}
    for deg, fam, lev, (top, bot, t1, t2, b1, b2) in (
            (rz.m, rz.A, "h", ("sigma", "tau", "sigma1", "sigma2", "tau1", "tau2")),
            (rz.k, rz.D, "l", ("gamma", "delta", "gamma1", "gamma2", "delta1", "delta2"))):
        h = int(rng.integers(0, deg))
        top_t = tuple(int(x) for x in rng.permutation(h + 1))
        bot_t = tuple(int(x) for x in rng.permutation(np.arange(-deg, -h)))
        sides[lev], sides[top], sides[bot] = h, top_t, bot_t
        sides[t1] = _random_side(rng, top_t, 0, h - 1, max_side, before=True)
        sides[t2] = _random_side(rng, sides[t1] + top_t, 0, h - 1, max_side, before=False)
        sides[b1] = _random_side(rng, bot_t, -deg, -h - 2, max_side, before=True)
        sides[b2] = _random_side(rng, sides[b1] + bot_t, -deg, -h - 2, max_side, before=False)
        for name in (t1, t2, b1, b2):
            mats[name] = _assignment_matrices(rng, sides[name], fam, deg)
    return GfprParams(**sides, matrices=mats)


def _random_admissible(rng, r: int, require_index0: bool) -> T.AdmissibleTuple:
    qs = [q for q in range(r + 1) if (r - q) % 2 == 0]
    if require_index0:
        qs = [q for q in qs if q == 0]
    if not qs:
        raise ValueError(f"no admissible tuple of {{0..{r}}} with index 0")
    return T.admissible_tuple(r, int(rng.choice(qs)))


def _random_canonical(rng, r: int) -> tuple[int, ...]:
    starts = [int(rng.integers(0, r - 2 * j + 2)) for j in range(1, r // 2 + 1)]
    return T.canonical_form(r, starts)


def _random_type1(rng, base: tuple[int, ...], hi: int, max_len: int = 3) -> tuple[int, ...]:
    """Random type-1 tuple relative to ``base`` with entries in ``{0..hi}``."""
    out, cur = [], base
    for _ in range(int(rng.integers(0, max_len + 1))):
        cands = [s for s in range(hi + 1) if T.is_type1_index(cur, s)]
        if not cands:
            break
        s = int(rng.choice(cands))
        out.append(s)
        cur = T.zr_simple_tuple(cur, s)
    return tuple(out)


def _even_level(rng, deg: int) -> int:
    return int(rng.choice(np.arange(0, deg, 2)))


def _sym_assignment(rng, t, fam: PolynomialMatrix, deg: int) -> MatrixAssignment:
    ms = []
    for i in t:
        ms.append(_nonsingular_matrix(rng, fam.size, "symmetric") if i in (0, -deg)
                  else random_matrix(rng, fam.size, kind="symmetric"))
    return MatrixAssignment(t, ms)


def random_instance(rng: np.random.Generator, structure: str = "none",
                    dims: tuple[int, int, int, int] | None = None,
                    singular_lead_prob: float = 0.2) -> Instance:
    """Random realization of the given structure with valid builder parameters.

    ``dims = (n, r, m, k)``; when omitted, ``n, r`` come from ``{1, 2, 3}``
    (``{2}`` for skew-symmetric), ``m`` from ``1..5`` and ``k`` from ``1..4``.
    Combinations the constructions cannot handle are resampled.
    """
    for _ in range(1000):
        if dims is None:
            sizes = (2,) if structure == "skew_symmetric" else (1, 2, 3)
            n, r = (int(x) for x in rng.choice(sizes, size=2))
            m, k = int(rng.integers(1, 6)), int(rng.integers(1, 5))
        else:
            n, r, m, k = dims
        inst = _try_instance(rng, structure, n, r, m, k, singular_lead_prob)
        if inst is not None:
            return inst
        if dims is not None:
            raise ValueError(f"no valid {structure} instance for dims {dims}")
    raise RuntimeError("instance sampling did not terminate")


def _lead_is_singular(P: PolynomialMatrix) -> bool:
    return abs(np.linalg.det(P[P.degree])) < 0.5


def _try_instance(rng, structure, n, r, m, k, singular_lead_prob) -> Instance | None:
    if structure == "skew_symmetric" and (n % 2 or r % 2):
        return None
    if structure == "none":
        rz = random_realization(rng, n, r, m, k)
        return Instance(rz, "gfpr", {"p": random_gfpr_params(rng, rz)})
    singular = structure in ("t_even", "t_odd") and rng.random() < singular_lead_prob
    rz = random_realization(rng, n, r, m, k, structure, singular_lead=singular)
    if not np.any(rz.A[m]) or not np.any(rz.D[k]):
        return None  # a vanishing leading coefficient lowers the degree
    h, l = _even_level(rng, m), _even_level(rng, k)
    if structure == "symmetric":
        if (m % 2 == 0 and _lead_is_singular(rz.A)) or (k % 2 == 0 and _lead_is_singular(rz.D)):
            return None
        t_w, t_wl = _random_canonical(rng, h), _random_canonical(rng, l)
        t_v = T.shift(_random_canonical(rng, m - h - 1), -m)
        t_vl = T.shift(_random_canonical(rng, k - l - 1), -k)
        return Instance(rz, "symmetric", dict(
            h=h, l=l, XA=_sym_assignment(rng, t_w, rz.A, m), YA=_sym_assignment(rng, t_v, rz.A, m),
            XD=_sym_assignment(rng, t_wl, rz.D, k), YD=_sym_assignment(rng, t_vl, rz.D, k)))
    try:
        z_h = _random_admissible(rng, m - h - 1, _lead_is_singular(rz.A))
        z_l = _random_admissible(rng, k - l - 1, _lead_is_singular(rz.D))
    except ValueError:
        return None
    params = dict(h=h, l=l, z_h=z_h, z_l=z_l)
    if structure == "skew_symmetric":
        w, v = T.simple_admissible(h).entries, T.simple_admissible(l).entries
        params.update(
            t_w=_random_type1(rng, T.reverse(w), h - 1),
            t_v=_random_type1(rng, T.reverse(v), l - 1),
            t_zh=T.shift(_random_type1(rng, T.reverse(z_h.entries), m - h - 2), -m),
            t_zl=T.shift(_random_type1(rng, T.reverse(z_l.entries), k - l - 2), -k))
    return Instance(rz, STRUCTURED_BUILDERS[structure], params)
