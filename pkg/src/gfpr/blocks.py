"""Elementary block matrices, Fiedler matrices and matrix assignments.

Matrices are dense ``complex128`` numpy arrays.  Block indices follow the
1-based ``e_j`` numbering used for corner placement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = ["PolynomialMatrix", "MatrixAssignment", "elementary", "fiedler",
           "fiedler_product", "assignment_product", "corner_block"]


def _as_complex(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class PolynomialMatrix:
    """Square matrix polynomial ``sum_j lam**j * coeffs[j]``."""

    coeffs: tuple[np.ndarray, ...]

    def __post_init__(self):
        cs = tuple(_as_complex(c) for c in self.coeffs)
        if len(cs) < 1:
            raise ValueError("a matrix polynomial needs at least one coefficient")
        n = cs[0].shape[0]
        for j, c in enumerate(cs):
            if c.shape != (n, n):
                raise ValueError(f"coefficient {j} has shape {c.shape}, expected {(n, n)}")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def size(self) -> int:
        return self.coeffs[0].shape[0]

    def __getitem__(self, j: int) -> np.ndarray:
        return self.coeffs[j]

    def __call__(self, lam: complex) -> np.ndarray:
        out = np.zeros_like(self.coeffs[0])
        for c in reversed(self.coeffs):
            out = lam * out + c
        return out

    def scaled(self, s: complex) -> "PolynomialMatrix":
        return PolynomialMatrix(tuple(s * c for c in self.coeffs))


def elementary(i: int, P, deg: int, bsize: int | None = None) -> np.ndarray:
    """The elementary block matrix ``M_i(P)`` of a degree-``deg`` family.

    The result has ``deg`` block rows of size ``bsize`` (taken from ``P`` when
    omitted).  Valid indices are ``-deg <= i <= deg - 1``.
    """
    P = _as_complex(P)
    b = P.shape[0] if bsize is None else bsize
    if P.shape != (b, b):
        raise ValueError(f"P has shape {P.shape}, expected {(b, b)}")
    if deg < 1 or not -deg <= i <= deg - 1:
        raise ValueError(f"index {i} out of range [-{deg}, {deg - 1}]")
    M = np.eye(deg * b, dtype=complex)
    if i == 0:
        M[(deg - 1) * b:, (deg - 1) * b:] = P
    elif i == -deg:
        M[:b, :b] = P
    else:
        # 2x2 block window on block rows deg-|i|, deg-|i|+1 (1-based)
        k = (deg - abs(i) - 1) * b
        I = np.eye(b)
        if i > 0:
            win = np.block([[P, I], [I, np.zeros((b, b))]])
        else:
            win = np.block([[np.zeros((b, b)), I], [I, P]])
        M[k:k + 2 * b, k:k + 2 * b] = win
    return M


def fiedler(i: int, A: PolynomialMatrix) -> np.ndarray:
    """Fiedler matrix ``M_i^A``: ``M_i(-A_i)`` for ``i >= 0``, ``M_i(A_{-i})`` otherwise."""
    m = A.degree
    if not -m <= i <= m - 1:
        raise ValueError(f"index {i} out of range [-{m}, {m - 1}]")
    P = -A[i] if i >= 0 else A[-i]
    return elementary(i, P, m)


def fiedler_product(t: Sequence[int], A: PolynomialMatrix) -> np.ndarray:
    """``M^A_t``, the product of Fiedler matrices over the tuple ``t``."""
    out = np.eye(A.degree * A.size, dtype=complex)
    for i in t:
        out = out @ fiedler(i, A)
    return out


@dataclass(frozen=True)
class MatrixAssignment:
    """Matrices attached to the positions of an index tuple.

    With ``matrices=None`` the assignment is trivial: each position uses the
    Fiedler matrix of whatever polynomial it is evaluated against.  A single
    ``None`` entry makes just that position trivial.
    """

    indices: tuple[int, ...]
    matrices: tuple[np.ndarray | None, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(e) for e in self.indices))
        if self.matrices is not None:
            ms = tuple(None if x is None else _as_complex(x) for x in self.matrices)
            if len(ms) != len(self.indices):
                raise ValueError(f"{len(ms)} matrices for a tuple of length {len(self.indices)}")
            object.__setattr__(self, "matrices", ms)

    @property
    def trivial(self) -> bool:
        return self.matrices is None or all(x is None for x in self.matrices)

    def matrix_at(self, pos: int) -> np.ndarray | None:
        return None if self.matrices is None else self.matrices[pos]

    @classmethod
    def trivial_for(cls, t: Sequence[int]) -> "MatrixAssignment":
        return cls(tuple(t))

    def reversed(self) -> "MatrixAssignment":
        ms = None if self.matrices is None else self.matrices[::-1]
        return MatrixAssignment(self.indices[::-1], ms)

    def __add__(self, other: "MatrixAssignment") -> "MatrixAssignment":
        if self.matrices is None and other.matrices is None:
            return MatrixAssignment(self.indices + other.indices)
        ms = tuple(self.matrix_at(p) for p in range(len(self.indices)))
        ms += tuple(other.matrix_at(p) for p in range(len(other.indices)))
        return MatrixAssignment(self.indices + other.indices, ms)

    def is_nonsingular(self, deg: int, rtol: float = 1e-10,
                       family: PolynomialMatrix | None = None) -> bool:
        """Matrices sitting on positions ``0`` and ``-deg`` must be invertible."""
        for pos, i in enumerate(self.indices):
            if i not in (0, -deg):
                continue
            X = self.matrix_at(pos)
            if X is None:
                if family is None:
                    raise ValueError("trivial positions need the polynomial family")
                X = family[-i] if i < 0 else family[0]
            if not _nonsingular(X, rtol):
                return False
        return True


def _nonsingular(X: np.ndarray, rtol: float) -> bool:
    s = np.linalg.svd(X, compute_uv=False)
    return bool(s[-1] > rtol * max(s[0], 1.0))


def assignment_product(asg: MatrixAssignment, family: PolynomialMatrix) -> np.ndarray:
    """Left-to-right product ``M_{p_1}(P_1) ... M_{p_k}(P_k)``.

    ``family`` fixes the degree and block size (and supplies the matrices of a
    trivial assignment).  An empty tuple gives the identity.
    """
    deg, b = family.degree, family.size
    out = np.eye(deg * b, dtype=complex)
    for pos, i in enumerate(asg.indices):
        P = asg.matrix_at(pos)
        if P is None:
            out = out @ fiedler(i, family)
        else:
            out = out @ elementary(i, P, deg, b)
    return out


def corner_block(row_blk: int, col_blk: int, payload,
                 row_part: tuple[int, int], col_part: tuple[int, int]) -> np.ndarray:
    """``e_row e_col^T (x) payload`` on a ``row_part x col_part`` block grid.

    Partitions are ``(block count, block size)``; block indices are 1-based.
    """
    payload = _as_complex(payload)
    (rc, rs), (cc, cs) = row_part, col_part
    if not (1 <= row_blk <= rc and 1 <= col_blk <= cc):
        raise ValueError(f"block ({row_blk}, {col_blk}) outside a {rc}x{cc} grid")
    if payload.shape != (rs, cs):
        raise ValueError(f"payload shape {payload.shape}, expected {(rs, cs)}")
    out = np.zeros((rc * rs, cc * cs), dtype=complex)
    out[(row_blk - 1) * rs:row_blk * rs, (col_blk - 1) * cs:col_blk * cs] = payload
    return out
