"""Numerical checks that a pencil linearizes a realization.

A Rosenbrock linearization ``L`` of ``G`` is unimodularly equivalent to
``diag(I, S, I)`` with ``S`` the system matrix, so ``det L = c * det S`` for a
nonzero constant ``c``.  :func:`verify_linearization` tests exactly that on a
circle of sample points.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg

from .pencils import BlockPencil, Realization, structure_holds

__all__ = ["VerifyOptions", "VerificationReport", "SpectraReport", "eval_system",
           "eval_pencil", "determinant", "verify_linearization", "structure_check",
           "detpoly", "poly_roots", "compare_spectra", "RootFindingError"]


class RootFindingError(RuntimeError):
    def __init__(self, msg: str, residuals: np.ndarray):
        super().__init__(msg)
        self.residuals = residuals


@dataclass(frozen=True)
class VerifyOptions:
    """Sampling parameters; ``num_samples=None`` means pencil size + 5.

    ``floor`` is relative: a sample is dropped when ``|det S|`` falls below
    ``floor`` times the Hadamard bound of ``S`` at that point.
    """

    num_samples: int | None = None
    radius: float = 1.7
    rel_tol: float = 1e-8
    floor: float = 1e-13
    offset: float = 0.3141592653589793


@dataclass
class VerificationReport:
    passed: bool
    inconclusive: bool
    ratio_estimate: complex
    max_relative_deviation: float
    samples_used: int
    samples_rejected: int
    convention: str
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "inconclusive" if self.inconclusive else ("passed" if self.passed else "FAILED")
        return (f"linearization {verdict}: convention={self.convention} "
                f"ratio={self.ratio_estimate:.6g} max_rel_dev={self.max_relative_deviation:.3e} "
                f"samples={self.samples_used} rejected={self.samples_rejected}")

    def to_dict(self) -> dict:
        return dict(passed=self.passed, inconclusive=self.inconclusive,
                    ratio_estimate=[self.ratio_estimate.real, self.ratio_estimate.imag],
                    max_relative_deviation=self.max_relative_deviation,
                    samples_used=self.samples_used, samples_rejected=self.samples_rejected,
                    convention=self.convention, notes=list(self.notes))


@dataclass
class SpectraReport:
    passed: bool
    pencil_roots: list[complex]
    system_roots: list[complex]
    matching: list[tuple[int, int, float]]
    max_pair_distance: float
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        return (f"spectra {'agree' if self.passed else 'DISAGREE'}: "
                f"{len(self.pencil_roots)} pencil roots, {len(self.system_roots)} system roots, "
                f"max pair distance {self.max_pair_distance:.3e}")

    def to_dict(self) -> dict:
        def pairs(zs):
            return [[z.real, z.imag] for z in zs]
        return dict(passed=self.passed, pencil_roots=pairs(self.pencil_roots),
                    system_roots=pairs(self.system_roots),
                    matching=[list(m) for m in self.matching],
                    max_pair_distance=self.max_pair_distance, notes=list(self.notes))


def eval_system(rz: Realization, lam: complex, conv: str = "minus_b") -> np.ndarray:
    """``[[A(lam), -B], [C, D(lam)]]`` (``minus_b``) or with ``+B`` (``plus_b``)."""
    if conv not in ("minus_b", "plus_b"):
        raise ValueError(f"unknown convention {conv!r}")
    sB = -rz.B if conv == "minus_b" else rz.B
    return np.block([[rz.A(lam), sB], [rz.C, rz.D(lam)]])


def eval_pencil(p: BlockPencil, lam: complex) -> np.ndarray:
    return lam * p.X + p.Y


def determinant(M: np.ndarray) -> complex:
    """Determinant from an LU factorization with partial pivoting."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"determinant of a non-square matrix of shape {M.shape}")
    if M.shape[0] == 0:
        return 1.0 + 0j
    with warnings.catch_warnings():
        # an exactly singular matrix simply has determinant 0
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    d = np.prod(np.diag(lu))
    return complex(-d if swaps % 2 else d)


def _hadamard(M: np.ndarray) -> float:
    return float(np.prod(np.linalg.norm(M, axis=1)))


def _samples(count: int, radius: float, offset: float) -> np.ndarray:
    return radius * np.exp(1j * (offset + 2 * np.pi * np.arange(count) / count))


def verify_linearization(p: BlockPencil, rz: Realization, conv: str | None = None,
                         opts: VerifyOptions = VerifyOptions()) -> VerificationReport:
    """Check that ``det L(lam) / det S(lam)`` is a nonzero constant.

    ``conv=None`` uses the convention recorded on the pencil.
    """
    conv = p.convention if conv is None else conv
    if (p.m, p.n, p.k, p.r) != (rz.m, rz.n, rz.k, rz.r):
        raise ValueError("pencil and realization dimensions differ")
    count = opts.num_samples or p.size + 5
    ratios, rejected, notes = [], 0, []
    for lam in _samples(count, opts.radius, opts.offset):
        S = eval_system(rz, lam, conv)
        dS = determinant(S)
        if abs(dS) <= opts.floor * max(_hadamard(S), np.finfo(float).tiny):
            rejected += 1
            continue
        ratios.append(determinant(eval_pencil(p, lam)) / dS)
    if not ratios:
        notes.append("det S is negligible at every sample (singular system matrix?)")
        return VerificationReport(False, True, 0j, float("inf"), 0, rejected, conv, notes)
    ratios = np.array(ratios)
    c = complex(np.median(ratios.real), np.median(ratios.imag))
    if c == 0 or not np.isfinite(c):
        notes.append("ratio estimate is zero: det L vanishes where det S does not")
        return VerificationReport(False, False, c, float("inf"), len(ratios), rejected, conv, notes)
    dev = float(np.max(np.abs(ratios - c)) / abs(c))
    passed = dev <= opts.rel_tol
    if not passed:
        notes.append(f"ratio varies by {dev:.3e} relative, above {opts.rel_tol:.1e}")
    return VerificationReport(passed, False, c, dev, len(ratios), rejected, conv, notes)


def structure_check(p: BlockPencil, kind: str, tol: float | None = None) -> bool:
    """Coefficient-level structure test; ``kind="none"`` is always true."""
    if kind == "none":
        return True
    return structure_holds(p.X, p.Y, kind, tol)


def detpoly(evaluator: Callable[[complex], np.ndarray], degree_bound: int,
            radius: float = 1.0) -> np.ndarray:
    """Coefficients (lowest degree first) of ``det evaluator(lam)``.

    The determinant is sampled at ``degree_bound + 1`` scaled roots of unity
    and interpolated by a discrete Fourier transform.  Coefficients below
    ``1e-10`` times the largest are set to zero and trailing zeros dropped.
    """
    N = degree_bound + 1
    nodes = radius * np.exp(2j * np.pi * np.arange(N) / N)
    vals = np.array([determinant(evaluator(z)) for z in nodes])
    # vals[j] = sum_i c_i r^i w^(ij), and the forward transform inverts that up to N
    coeffs = np.fft.fft(vals) / N / radius ** np.arange(N)
    big = np.abs(coeffs).max(initial=0)
    if big == 0:
        return np.zeros(1, dtype=complex)
    # coefficients below 1e-10 * max are roundoff: zero them and drop the trailing ones
    coeffs[np.abs(coeffs) <= 1e-10 * big] = 0
    keep = np.nonzero(coeffs)[0]
    return coeffs[:keep[-1] + 1]


def poly_roots(coeffs: Sequence[complex], max_iter: int = 500) -> list[complex]:
    """Roots of ``sum_i coeffs[i] lam**i`` by Durand-Kerner iteration."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    if c.size == 0:
        raise ValueError("the zero polynomial has no well-defined roots")
    deg = c.size - 1
    if deg == 0:
        return []
    a = c / c[-1]
    hi_first = a[::-1]
    scale = 1 + float(np.max(np.abs(a[:-1])))
    z = scale * 0.5 * np.exp(2j * np.pi * np.arange(deg) / deg + 0.4j) * (1 + 0.01 * np.arange(deg))

    def stable(pts):
        # residual no larger than a few rounding errors of Horner's rule
        vals = np.polyval(hi_first, pts)
        bound = np.polyval(np.abs(hi_first), np.abs(pts)) * 4 * deg * np.finfo(float).eps
        return vals, np.abs(vals) <= bound

    for _ in range(max_iter):
        vals, ok = stable(z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        denom = diff.prod(axis=1)
        step = np.where(ok, 0, vals / np.where(denom == 0, 1e-300, denom))
        z = z - step
        if np.max(np.abs(step)) < 1e-12 * scale or ok.all():
            # a few polishing sweeps tighten simple roots
            for _ in range(3):
                vals, ok = stable(z)
                diff = z[:, None] - z[None, :]
                np.fill_diagonal(diff, 1)
                denom = diff.prod(axis=1)
                z = z - np.where(ok, 0, vals / np.where(denom == 0, 1e-300, denom))
            return sorted((complex(x) for x in z), key=lambda x: (x.real, x.imag))
    vals, _ = stable(z)
    raise RootFindingError(f"Durand-Kerner did not converge in {max_iter} iterations",
                           np.abs(vals))


def _greedy_pairing(a: Sequence[complex], b: Sequence[complex]):
    left, right = list(range(len(a))), list(range(len(b)))
    pairs = []
    while left and right:
        i, j = min(((i, j) for i in left for j in right), key=lambda ij: abs(a[ij[0]] - b[ij[1]]))
        pairs.append((i, j, float(abs(a[i] - b[j]))))
        left.remove(i)
        right.remove(j)
    return pairs


def compare_spectra(p: BlockPencil, rz: Realization, conv: str | None = None,
                    tol: float = 1e-6) -> SpectraReport:
    """Pair the finite roots of ``det L`` and ``det S`` and compare them."""
    conv = p.convention if conv is None else conv
    deg_S = rz.m * rz.n + rz.k * rz.r
    cl = detpoly(lambda z: eval_pencil(p, z), p.size)
    cs = detpoly(lambda z: eval_system(rz, z, conv), deg_S)
    notes = []
    rl = poly_roots(cl) if np.any(cl) else []
    rs = poly_roots(cs) if np.any(cs) else []
    pairs = _greedy_pairing(rl, rs)
    dist = max((d for *_, d in pairs), default=0.0)
    passed = len(rl) == len(rs) and dist <= tol
    if len(rl) != len(rs):
        notes.append(f"root counts differ: {len(rl)} for det L, {len(rs)} for det S")
    return SpectraReport(passed, rl, rs, pairs, dist, notes)
