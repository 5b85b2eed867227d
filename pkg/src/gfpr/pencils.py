"""Fiedler pencils and GFPRs of rational matrices in realization form.

A rational matrix ``G(lam) = C A(lam)^{-1} B + D(lam)`` is handled through its
realization ``(A, B, C, D)``.  Every builder returns a pencil ``L(lam) = lam*X + Y``
partitioned into ``m`` blocks of size ``n`` followed by ``k`` blocks of size ``r``.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import tuples as T
from .blocks import (MatrixAssignment, PolynomialMatrix, assignment_product,
                     corner_block, fiedler_product, _nonsingular)

__all__ = [
    "STRUCTURES", "CONVENTIONS", "Realization", "GfprParams", "Corner",
    "BlockPencil", "QuasiIdentity", "StructuredPencil", "StructureSearchError",
    "HypothesisWarning", "build_fiedler_pencil", "build_gfpr",
    "build_block_symmetric", "build_t_even", "build_t_odd",
    "build_skew_symmetric", "quasi_identity_search", "structure_holds",
]

STRUCTURES = ("none", "symmetric", "t_even", "t_odd", "skew_symmetric")
CONVENTIONS = ("minus_b", "plus_b")

# sign s_j in A_j^T = s_j A_j, and c in C = c B^T
_COEFF_SIGNS = {
    "symmetric": (lambda j: 1, 1),
    "t_even": (lambda j: (-1) ** j, 1),
    "t_odd": (lambda j: (-1) ** (j + 1), -1),
    "skew_symmetric": (lambda j: -1, 1),
}


class StructureSearchError(RuntimeError):
    """No unique (up to sign) quasi-identity makes the pencil structured."""


class HypothesisWarning(UserWarning):
    """A nonsingularity hypothesis of a construction could not be confirmed."""


@dataclass(frozen=True)
class Realization:
    """Realization ``(A, B, C, D)`` of ``G(lam) = C A(lam)^{-1} B + D(lam)``."""

    A: PolynomialMatrix
    D: PolynomialMatrix
    B: np.ndarray
    C: np.ndarray
    structure: str = "none"

    def __post_init__(self):
        A, D = self.A, self.D
        if not isinstance(A, PolynomialMatrix):
            object.__setattr__(self, "A", A := PolynomialMatrix(tuple(A)))
        if not isinstance(D, PolynomialMatrix):
            object.__setattr__(self, "D", D := PolynomialMatrix(tuple(D)))
        B = np.array(self.B, dtype=complex)
        C = np.array(self.C, dtype=complex)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        if A.degree < 1 or D.degree < 1:
            raise ValueError("A and D need degree >= 1")
        if B.shape != (A.size, D.size):
            raise ValueError(f"B has shape {B.shape}, expected {(A.size, D.size)}")
        if C.shape != (D.size, A.size):
            raise ValueError(f"C has shape {C.shape}, expected {(D.size, A.size)}")
        if self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure {self.structure!r}")
        if self.structure != "none":
            problem = structure_violation(A, D, B, C, self.structure)
            if problem:
                raise ValueError(f"realization is not {self.structure}: {problem}")

    @property
    def m(self) -> int:
        return self.A.degree

    @property
    def k(self) -> int:
        return self.D.degree

    @property
    def n(self) -> int:
        return self.A.size

    @property
    def r(self) -> int:
        return self.D.size

    @property
    def size(self) -> int:
        return self.m * self.n + self.k * self.r

    def transfer(self, lam: complex) -> np.ndarray:
        return self.C @ np.linalg.solve(self.A(lam), self.B) + self.D(lam)


def _close(a: np.ndarray, b: np.ndarray, tol: float | None) -> bool:
    if tol is None:
        scale = max(1.0, float(np.abs(a).max(initial=0)), float(np.abs(b).max(initial=0)))
        tol = 1e-12 * scale
    return bool(np.abs(a - b).max(initial=0) <= tol)


def structure_violation(A: PolynomialMatrix, D: PolynomialMatrix, B, C,
                        structure: str, tol: float | None = None) -> str | None:
    """Describe the first coefficient condition that fails, or return None."""
    sign, csign = _COEFF_SIGNS[structure]
    for name, P in (("A", A), ("D", D)):
        for j, Pj in enumerate(P.coeffs):
            if not _close(Pj.T, sign(j) * Pj, tol):
                return f"{name}_{j}^T != {sign(j):+d} {name}_{j}"
    if not _close(C, csign * B.T, tol):
        return f"C != {csign:+d} B^T"
    return None


@dataclass(frozen=True)
class Corner:
    row: int
    col: int
    payload: np.ndarray


@dataclass(frozen=True)
class BlockPencil:
    """``L(lam) = lam*X + Y`` with an ``(m x n) + (k x r)`` block partition.

    ``convention`` names the system matrix the pencil is meant to linearize:
    ``minus_b`` is ``[[A, -B], [C, D]]`` and ``plus_b`` is ``[[A, B], [C, D]]``.
    """

    X: np.ndarray
    Y: np.ndarray
    m: int
    n: int
    k: int
    r: int
    upper: Corner
    lower: Corner
    convention: str = "minus_b"

    @property
    def size(self) -> int:
        return self.m * self.n + self.k * self.r

    def __call__(self, lam: complex) -> np.ndarray:
        return lam * self.X + self.Y

    def block(self, M: np.ndarray, i: int, j: int) -> np.ndarray:
        """Block ``(i, j)`` (1-based) of ``M``, counting A-blocks then D-blocks."""
        offs = [0]
        for _ in range(self.m):
            offs.append(offs[-1] + self.n)
        for _ in range(self.k):
            offs.append(offs[-1] + self.r)
        return M[offs[i - 1]:offs[i], offs[j - 1]:offs[j]]


@dataclass(frozen=True)
class QuasiIdentity:
    signs: tuple[int, ...]
    bsize: int

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1, got {self.signs}")

    def matrix(self) -> np.ndarray:
        return np.diag(np.repeat(np.array(self.signs, dtype=float), self.bsize)).astype(complex)

    @classmethod
    def identity(cls, p: int, bsize: int) -> "QuasiIdentity":
        return cls((1,) * p, bsize)


@dataclass(frozen=True)
class StructuredPencil:
    pencil: BlockPencil
    kind: str
    QA: QuasiIdentity
    QD: QuasiIdentity
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GfprParams:
    """Index tuples (and optional explicit assignments) defining a GFPR.

    ``tau``-side tuples live on ``{-m..-1}`` and ``delta``-side tuples on
    ``{-k..-1}``.  ``matrices`` maps a side-tuple name (``sigma1``, ``sigma2``,
    ``tau1``, ``tau2``, ``gamma1``, ...) to one matrix per position; absent
    names, and ``None`` entries, use the Fiedler matrices.
    """

    h: int
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    l: int
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    sigma1: tuple[int, ...] = ()
    sigma2: tuple[int, ...] = ()
    tau1: tuple[int, ...] = ()
    tau2: tuple[int, ...] = ()
    gamma1: tuple[int, ...] = ()
    gamma2: tuple[int, ...] = ()
    delta1: tuple[int, ...] = ()
    delta2: tuple[int, ...] = ()
    matrices: Mapping[str, Sequence] = field(default_factory=dict)

    SIDES = ("sigma1", "sigma2", "tau1", "tau2", "gamma1", "gamma2", "delta1", "delta2")

    def __post_init__(self):
        for name in ("sigma", "tau", "gamma", "delta") + self.SIDES:
            object.__setattr__(self, name, tuple(int(e) for e in getattr(self, name)))
        object.__setattr__(self, "matrices", dict(self.matrices))
        unknown = set(self.matrices) - set(self.SIDES)
        if unknown:
            raise ValueError(f"assignments given for unknown tuples {sorted(unknown)}")

    def assignment(self, name: str) -> MatrixAssignment:
        t = getattr(self, name)
        ms = self.matrices.get(name)
        return MatrixAssignment(t, None if ms is None else tuple(ms))

    def validate(self, m: int, k: int) -> None:
        """Raise ``ValueError`` naming the first violated condition."""
        for deg, lev, (top, bot, top1, top2, bot1, bot2), lname in (
                (m, self.h, ("sigma", "tau", "sigma1", "sigma2", "tau1", "tau2"), "h"),
                (k, self.l, ("gamma", "delta", "gamma1", "gamma2", "delta1", "delta2"), "l")):
            if not 0 <= lev <= deg - 1:
                raise ValueError(f"{lname}={lev} outside [0, {deg - 1}]")
            if any(not 0 <= e <= lev for e in getattr(self, top)):
                raise ValueError(f"{top} entries must lie in {{0..{lev}}}")
            if any(not -deg <= e <= -lev - 1 for e in getattr(self, bot)):
                raise ValueError(f"{bot} entries must lie in {{-{deg}..{-lev - 1}}}")
            for name in (top1, top2):
                if any(not 0 <= e <= lev - 1 for e in getattr(self, name)):
                    raise ValueError(f"{name} entries must lie in {{0..{lev - 1}}}")
            for name in (bot1, bot2):
                if any(not -deg <= e <= -lev - 2 for e in getattr(self, name)):
                    raise ValueError(f"{name} entries must lie in {{-{deg}..{-lev - 2}}}")
            for a, b, c in ((top1, top, top2), (bot1, bot, bot2)):
                whole = getattr(self, a) + getattr(self, b) + getattr(self, c)
                if not T.is_sip(whole):
                    raise ValueError(f"({a},{b},{c}) = {whole} violates the SIP")
            if sorted(getattr(self, top)) != list(range(lev + 1)):
                raise ValueError(f"{top} must be a permutation of {{0..{lev}}}")
            if sorted(getattr(self, bot)) != list(range(-deg, -lev)):
                raise ValueError(f"{bot} must be a permutation of {{-{deg}..{-lev - 1}}}")


def _half_pencil(P: PolynomialMatrix, left: MatrixAssignment, tau, sigma,
                 right: MatrixAssignment) -> tuple[np.ndarray, np.ndarray]:
    """``left (lam M_tau - M_sigma) right`` as the coefficient pair ``(X, Y)``."""
    Lm = assignment_product(left, P)
    Rm = assignment_product(right, P)
    X = Lm @ fiedler_product(tau, P) @ Rm
    Y = -(Lm @ fiedler_product(sigma, P) @ Rm)
    return X, Y


def _assemble(rz: Realization, XA, YA, XD, YD, upper: Corner, lower: Corner,
              convention: str) -> BlockPencil:
    m, n, k, r = rz.m, rz.n, rz.k, rz.r
    N = m * n
    X = np.zeros((rz.size, rz.size), dtype=complex)
    Y = np.zeros_like(X)
    X[:N, :N], Y[:N, :N] = XA, YA
    X[N:, N:], Y[N:, N:] = XD, YD
    Y[:N, N:] += corner_block(upper.row, upper.col, upper.payload, (m, n), (k, r))
    Y[N:, :N] += corner_block(lower.row, lower.col, lower.payload, (k, r), (m, n))
    return BlockPencil(X, Y, m, n, k, r, upper, lower, convention)


def build_fiedler_pencil(rz: Realization, alpha: Sequence[int],
                         beta: Sequence[int]) -> BlockPencil:
    """Fiedler pencil ``[[lam M_{-m} - M_alpha, *], [*, lam N_{-k} - N_beta]]``."""
    alpha, beta = tuple(alpha), tuple(beta)
    if sorted(alpha) != list(range(rz.m)):
        raise ValueError(f"alpha must be a permutation of {{0..{rz.m - 1}}}")
    if sorted(beta) != list(range(rz.k)):
        raise ValueError(f"beta must be a permutation of {{0..{rz.k - 1}}}")
    empty = MatrixAssignment(())
    XA, YA = _half_pencil(rz.A, empty, (-rz.m,), alpha, empty)
    XD, YD = _half_pencil(rz.D, empty, (-rz.k,), beta, empty)
    upper = Corner(rz.m - T.inversions_at(alpha, 0), rz.k - T.consecutions_at(beta, 0), -rz.B)
    lower = Corner(rz.k - T.inversions_at(beta, 0), rz.m - T.consecutions_at(alpha, 0), rz.C)
    return _assemble(rz, XA, YA, XD, YD, upper, lower, "minus_b")


def _gfpr_parts(rz: Realization, p: GfprParams):
    XA, YA = _half_pencil(rz.A, p.assignment("tau1") + p.assignment("sigma1"), p.tau,
                          p.sigma, p.assignment("sigma2") + p.assignment("tau2"))
    XD, YD = _half_pencil(rz.D, p.assignment("delta1") + p.assignment("gamma1"), p.delta,
                          p.gamma, p.assignment("gamma2") + p.assignment("delta2"))
    upper_at = (rz.m - T.inversions_at(p.sigma1 + p.sigma, 0),
                rz.k - T.consecutions_at(p.gamma + p.gamma2, 0))
    lower_at = (rz.k - T.inversions_at(p.gamma1 + p.gamma, 0),
                rz.m - T.consecutions_at(p.sigma + p.sigma2, 0))
    return XA, YA, XD, YD, upper_at, lower_at


def _check_assignments(rz: Realization, p: GfprParams) -> None:
    for name in p.SIDES:
        fam, deg = (rz.A, rz.m) if name[0] in "st" else (rz.D, rz.k)
        if not p.assignment(name).is_nonsingular(deg, family=fam):
            warnings.warn(f"matrix assignment for {name} is singular; the pencil "
                          "need not be a linearization", HypothesisWarning, stacklevel=3)


def build_gfpr(rz: Realization, p: GfprParams) -> BlockPencil:
    """Generalized Fiedler pencil with repetition of ``G``.

    The corners are ``-B`` and ``C``, so the pencil linearizes the system
    matrix ``[[A, -B], [C, D]]``.
    """
    p.validate(rz.m, rz.k)
    _check_assignments(rz, p)
    XA, YA, XD, YD, up, lo = _gfpr_parts(rz, p)
    return _assemble(rz, XA, YA, XD, YD, Corner(*up, -rz.B), Corner(*lo, rz.C), "minus_b")


# -- structure predicates and the quasi-identity search ---------------------

_TRANSPOSE_SIGNS = {
    # kind: (s_X, s_Y) with X^T = s_X X and Y^T = s_Y Y
    "symmetric": (1, 1),
    "t_even": (-1, 1),
    "t_odd": (1, -1),
    "skew_symmetric": (-1, -1),
}


def structure_holds(X: np.ndarray, Y: np.ndarray, kind: str,
                    tol: float | None = None) -> bool:
    """Coefficient-level test of ``lam*X + Y`` for the given structure.

    ``tol=None`` uses ``1e-12`` times the largest entry (at least 1);
    ``tol=0`` demands exact equality.
    """
    sx, sy = _TRANSPOSE_SIGNS[kind]
    if tol is None:
        scale = max(1.0, float(np.abs(X).max(initial=0)), float(np.abs(Y).max(initial=0)))
        tol = 1e-12 * scale
    return (bool(np.abs(X.T - sx * X).max(initial=0) <= tol)
            and bool(np.abs(Y.T - sy * Y).max(initial=0) <= tol))


def quasi_identity_search(X: np.ndarray, Y: np.ndarray, kind: str, bsize: int,
                          tol: float | None = None) -> QuasiIdentity:
    """Find the quasi-identity ``Q`` (first sign ``+1``) making ``lam QX + QY`` structured.

    All ``2**p`` sign patterns are tried.  Exactly two (``Q`` and ``-Q``) must
    work, otherwise :class:`StructureSearchError` is raised.
    """
    p, rem = divmod(X.shape[0], bsize)
    if rem or X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ValueError(f"half pencil of shape {X.shape} is not {bsize}-blocked and square")
    found = []
    for signs in itertools.product((1, -1), repeat=p):
        q = np.repeat(np.array(signs, dtype=float), bsize)[:, None]
        if structure_holds(q * X, q * Y, kind, tol):
            found.append(signs)
    if len(found) != 2:
        raise StructureSearchError(
            f"expected exactly 2 quasi-identities making the pencil {kind}, found {len(found)}")
    return QuasiIdentity(next(s for s in found if s[0] == 1), bsize)


# -- structured builders ------------------------------------------------------

def _require_structure(rz: Realization, kind: str) -> None:
    if rz.structure != kind:
        problem = structure_violation(rz.A, rz.D, rz.B, rz.C, kind)
        if problem:
            raise ValueError(f"realization is not {kind}: {problem}")


def _check_even(name: str, value: int, deg: int) -> None:
    if not 0 <= value <= deg - 1:
        raise ValueError(f"{name}={value} outside [0, {deg - 1}]")
    if value % 2:
        raise ValueError(f"{name}={value} must be even")


def _warn_leading(P: PolynomialMatrix, z: T.AdmissibleTuple, label: str) -> None:
    if z.q != 0 and not _nonsingular(P[P.degree], 1e-10):
        warnings.warn(f"leading coefficient of {label} is singular but Ind(z)={z.q} != 0",
                      HypothesisWarning, stacklevel=3)


def _convention(upper_sign: int, lower_sign: int, eps_upper: int, eps_lower: int) -> str:
    # corner payloads are (upper_sign * B, lower_sign * C); after undoing the
    # quasi-identities the pencil is a GFPR of [[A, -B'], [C', D]] with
    # -B' = eps_upper*upper_sign*B and C' = eps_lower*lower_sign*C, which has
    # the determinant of [[A, -B], [C, D]] exactly when -B'C' equals -BC
    prod = eps_upper * upper_sign * eps_lower * lower_sign
    return "minus_b" if prod == -1 else "plus_b"


def build_block_symmetric(rz: Realization, h: int, l: int,
                          XA: MatrixAssignment, YA: MatrixAssignment,
                          XD: MatrixAssignment, YD: MatrixAssignment) -> StructuredPencil:
    """Block-symmetric GFPR built from simple admissible tuples.

    ``XA``/``YA`` are assignments for the canonical-form tuples ``t_w`` (on
    ``{0..h-1}``) and ``t_v`` (``t_v + m`` canonical for ``m - h - 1``);
    ``XD``/``YD`` likewise for ``D``.  Corners are ``B`` and ``C``.
    """
    m, k = rz.m, rz.k
    _check_even("h", h, m)
    _check_even("l", l, k)
    if not T.is_canonical_form(XA.indices, h):
        raise ValueError(f"XA tuple {XA.indices} is not in canonical form for {h}")
    if not T.is_canonical_form(T.shift(YA.indices, m), m - h - 1):
        raise ValueError(f"YA tuple {YA.indices} + {m} is not in canonical form for {m - h - 1}")
    if not T.is_canonical_form(XD.indices, l):
        raise ValueError(f"XD tuple {XD.indices} is not in canonical form for {l}")
    if not T.is_canonical_form(T.shift(YD.indices, k), k - l - 1):
        raise ValueError(f"YD tuple {YD.indices} + {k} is not in canonical form for {k - l - 1}")
    if rz.structure == "symmetric":
        for name, asg in (("XA", XA), ("YA", YA), ("XD", XD), ("YD", YD)):
            for X in asg.matrices or ():
                if X is not None and not _close(X.T, X, None):
                    raise ValueError(f"assignment {name} holds a non-symmetric matrix")

    w = T.simple_admissible(h)
    v = T.simple_admissible(m - h - 1)
    wl = T.simple_admissible(l)
    vl = T.simple_admissible(k - l - 1)
    cw, cv = T.symmetric_complement(w), T.shift(T.symmetric_complement(v), -m)
    cwl, cvl = T.symmetric_complement(wl), T.shift(T.symmetric_complement(vl), -k)

    def triv(t):
        return MatrixAssignment(t)

    p = GfprParams(
        h=h, sigma=w.entries, tau=T.shift(v.entries, -m),
        sigma1=XA.indices, sigma2=cw + XA.indices[::-1],
        tau1=YA.indices, tau2=cv + YA.indices[::-1],
        l=l, gamma=wl.entries, delta=T.shift(vl.entries, -k),
        gamma1=XD.indices, gamma2=cwl + XD.indices[::-1],
        delta1=YD.indices, delta2=cvl + YD.indices[::-1],
    )
    p.validate(m, k)
    for asg, fam, deg, label in ((XA, rz.A, m, "XA"), (YA, rz.A, m, "YA"),
                                 (XD, rz.D, k, "XD"), (YD, rz.D, k, "YD")):
        if not asg.is_nonsingular(deg, family=fam):
            warnings.warn(f"assignment {label} is singular", HypothesisWarning, stacklevel=2)
    if m % 2 == 0 and not _nonsingular(rz.A[m], 1e-10):
        warnings.warn("m is even and A_m is singular", HypothesisWarning, stacklevel=2)
    if k % 2 == 0 and not _nonsingular(rz.D[k], 1e-10):
        warnings.warn("k is even and D_k is singular", HypothesisWarning, stacklevel=2)

    # L_A = M_(t_v, t_w)(YA, XA) (lam M_v - M_w) M_(c_w, c_v) M_(rev t_w, rev t_v)(rev XA, rev YA)
    XA_, YA_ = _half_pencil(rz.A, YA + XA, p.tau, p.sigma,
                            triv(cw + cv) + XA.reversed() + YA.reversed())
    XD_, YD_ = _half_pencil(rz.D, YD + XD, p.delta, p.gamma,
                            triv(cwl + cvl) + XD.reversed() + YD.reversed())
    up = (m - T.inversions_at(p.sigma1 + p.sigma, 0), k - T.consecutions_at(p.gamma + p.gamma2, 0))
    lo = (k - T.inversions_at(p.gamma1 + p.gamma, 0), m - T.consecutions_at(p.sigma + p.sigma2, 0))
    pencil = _assemble(rz, XA_, YA_, XD_, YD_, Corner(*up, rz.B), Corner(*lo, rz.C),
                       _convention(1, 1, 1, 1))
    params = dict(h=h, l=l, w=w.entries, v=p.tau, c_w=cw, c_v=cv, t_w=XA.indices,
                  t_v=YA.indices, w_l=wl.entries, v_l=p.delta, c_wl=cwl, c_vl=cvl,
                  t_wl=XD.indices, t_vl=YD.indices, gfpr=p)
    return StructuredPencil(pencil, "symmetric", QuasiIdentity.identity(m, rz.n),
                            QuasiIdentity.identity(k, rz.r), params)


def _default_z(r: int) -> T.AdmissibleTuple:
    return T.admissible_tuple(r, 0) if r % 2 == 0 else T.simple_admissible(r)


def _even_odd(rz: Realization, h: int, l: int, z_h, z_l, kind: str) -> StructuredPencil:
    m, k = rz.m, rz.k
    _require_structure(rz, kind)
    _check_even("h", h, m)
    _check_even("l", l, k)
    z_h = _default_z(m - h - 1) if z_h is None else z_h
    z_l = _default_z(k - l - 1) if z_l is None else z_l
    if z_h.r != m - h - 1 or z_l.r != k - l - 1:
        raise ValueError("z_h (z_l) must be admissible on {0..m-h-1} ({0..k-l-1})")
    _warn_leading(rz.A, z_h, "A")
    _warn_leading(rz.D, z_l, "D")

    w, v = T.simple_admissible(h), T.simple_admissible(l)
    p = GfprParams(
        h=h, sigma=w.entries, tau=T.shift(z_h.entries, -m),
        sigma2=T.symmetric_complement(w), tau2=T.shift(T.symmetric_complement(z_h), -m),
        l=l, gamma=v.entries, delta=T.shift(z_l.entries, -k),
        gamma2=T.symmetric_complement(v), delta2=T.shift(T.symmetric_complement(z_l), -k),
    )
    p.validate(m, k)
    lower_sign = 1 if kind == "t_even" else -1
    # C = B^T (t_even) or -B^T (t_odd), so the lower payload B^T or -B^T is C itself
    params = dict(h=h, l=l, w=p.sigma, c_w=p.sigma2, z_h=p.tau, c_zh=p.tau2,
                  v=p.gamma, c_v=p.gamma2, z_l=p.delta, c_zl=p.delta2, gfpr=p)
    return _finish_quasi(rz, p, kind, 1, 1, params)


def _finish_quasi(rz, p: GfprParams, kind: str, upper_sign: int, lower_sign: int,
                  params: dict) -> StructuredPencil:
    XA, YA, XD, YD, up, lo = _gfpr_parts(rz, p)
    QA = quasi_identity_search(XA, YA, kind, rz.n)
    QD = quasi_identity_search(XD, YD, kind, rz.r)
    qa, qd = QA.matrix(), QD.matrix()
    conv = _convention(upper_sign, lower_sign, QA.signs[up[0] - 1], QD.signs[lo[0] - 1])
    pencil = _assemble(rz, qa @ XA, qa @ YA, qd @ XD, qd @ YD,
                       Corner(*up, upper_sign * rz.B), Corner(*lo, lower_sign * rz.C), conv)
    return StructuredPencil(pencil, kind, QA, QD, params)


def build_t_even(rz: Realization, h: int, l: int, z_h: T.AdmissibleTuple | None = None,
                 z_l: T.AdmissibleTuple | None = None) -> StructuredPencil:
    """T-even pencil ``diag(Q_A, Q_D) L`` with corners ``B`` and ``B^T``.

    ``z_h`` (``z_l``) is the admissible tuple on ``{0..m-h-1}`` (``{0..k-l-1}``)
    before the shift by ``-m`` (``-k``); by default the index-0 tuple when it
    exists, else the simple one.
    """
    return _even_odd(rz, h, l, z_h, z_l, "t_even")


def build_t_odd(rz: Realization, h: int, l: int, z_h: T.AdmissibleTuple | None = None,
                z_l: T.AdmissibleTuple | None = None) -> StructuredPencil:
    """T-odd counterpart of :func:`build_t_even`; the lower corner is ``-B^T``."""
    return _even_odd(rz, h, l, z_h, z_l, "t_odd")


def build_skew_symmetric(rz: Realization, h: int, l: int,
                         z_h: T.AdmissibleTuple | None = None,
                         z_l: T.AdmissibleTuple | None = None,
                         t_w: Sequence[int] = (), t_v: Sequence[int] = (),
                         t_zh: Sequence[int] = (), t_zl: Sequence[int] = ()) -> StructuredPencil:
    """Skew-symmetric pencil from type-1 index tuples.

    ``t_w`` must be of type 1 relative to ``rev(w)`` and ``t_zh + m`` of type 1
    relative to ``rev(z_h + m)`` (``t_zh`` is given on ``{-m..-1}``); likewise
    for the ``D`` side.  Corners are ``-B`` and ``C = B^T``.
    """
    m, k = rz.m, rz.k
    _require_structure(rz, "skew_symmetric")
    _check_even("h", h, m)
    _check_even("l", l, k)
    z_h = _default_z(m - h - 1) if z_h is None else z_h
    z_l = _default_z(k - l - 1) if z_l is None else z_l
    if z_h.r != m - h - 1 or z_l.r != k - l - 1:
        raise ValueError("z_h (z_l) must be admissible on {0..m-h-1} ({0..k-l-1})")
    t_w, t_v, t_zh, t_zl = (tuple(int(e) for e in t) for t in (t_w, t_v, t_zh, t_zl))
    w, v = T.simple_admissible(h), T.simple_admissible(l)
    for name, t, base, hi in (("t_w", t_w, w.entries, h - 1), ("t_v", t_v, v.entries, l - 1),
                              ("t_zh", T.shift(t_zh, m), z_h.entries, m - h - 2),
                              ("t_zl", T.shift(t_zl, k), z_l.entries, k - l - 2)):
        if any(not 0 <= e <= hi for e in t):
            raise ValueError(f"{name} entries out of range")
        if not T.is_type1_tuple(T.reverse(base), t):
            raise ValueError(f"{name} is not of type 1 relative to the reversed base tuple")
    _warn_leading(rz.A, z_h, "A")
    _warn_leading(rz.D, z_l, "D")
    for P, t, t_hi, label, deg in ((rz.A, t_w, t_zh, "A", m), (rz.D, t_v, t_zl, "D", k)):
        if 0 in t and not _nonsingular(P[0], 1e-10):
            warnings.warn(f"{label}_0 is singular and 0 occurs in the type-1 tuple",
                          HypothesisWarning, stacklevel=2)
        if -deg in t_hi and not _nonsingular(P[deg], 1e-10):
            warnings.warn(f"leading coefficient of {label} is singular and -{deg} occurs "
                          "in the type-1 tuple", HypothesisWarning, stacklevel=2)

    cw, cv = T.symmetric_complement(w), T.symmetric_complement(v)
    czh = T.shift(T.symmetric_complement(z_h), -m)
    czl = T.shift(T.symmetric_complement(z_l), -k)
    p = GfprParams(
        h=h, sigma=w.entries, tau=T.shift(z_h.entries, -m),
        sigma1=T.reverse(t_w), sigma2=cw + t_w, tau1=T.reverse(t_zh), tau2=czh + t_zh,
        l=l, gamma=v.entries, delta=T.shift(z_l.entries, -k),
        gamma1=T.reverse(t_v), gamma2=cv + t_v, delta1=T.reverse(t_zl), delta2=czl + t_zl,
    )
    p.validate(m, k)
    params = dict(h=h, l=l, w=p.sigma, c_w=cw, z_h=p.tau, c_zh=czh, t_w=t_w, t_zh=t_zh,
                  v=p.gamma, c_v=cv, z_l=p.delta, c_zl=czl, t_v=t_v, t_zl=t_zl, gfpr=p)
    return _finish_quasi(rz, p, "skew_symmetric", -1, 1, params)
