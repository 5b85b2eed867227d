"""Problem documents, builder dispatch and the plain-text matrix dump.

A problem document is a JSON object::

    {"dims": {"n": 2, "r": 2, "m": 3, "k": 2},
     "a_coeffs": [A_0, ..., A_m], "d_coeffs": [D_0, ..., D_k], "b": B, "c": C,
     "structure": "none|symmetric|t_even|t_odd|skew",
     "builder": "fiedler|gfpr|symmetric|t_even|t_odd|skew",
     "tuples": {...}, "assignments": {...}, "verify": {...}}

Matrices are lists of rows and every entry is a ``[re, im]`` pair (a bare
number is accepted on input).
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import tuples as T
from .blocks import MatrixAssignment, PolynomialMatrix
from .pencils import (BlockPencil, GfprParams, Realization, StructuredPencil,
                      build_block_symmetric, build_fiedler_pencil, build_gfpr,
                      build_skew_symmetric, build_t_even, build_t_odd)
from .verify import VerifyOptions

__all__ = ["ProblemError", "ProblemSpec", "parse_problem", "emit_problem", "build",
           "spec_from_instance", "dump_matrix", "load_matrix", "dump_pencil", "load_pencil"]

BUILDERS = ("fiedler", "gfpr", "symmetric", "t_even", "t_odd", "skew")
_STRUCT_IN = {"none": "none", "symmetric": "symmetric", "t_even": "t_even",
              "t_odd": "t_odd", "skew": "skew_symmetric", "skew_symmetric": "skew_symmetric"}
_STRUCT_OUT = {"none": "none", "symmetric": "symmetric", "t_even": "t_even",
               "t_odd": "t_odd", "skew_symmetric": "skew"}
TUPLE_KEYS = ("alpha", "beta", "sigma", "tau", "sigma1", "sigma2", "tau1", "tau2",
              "gamma", "delta", "gamma1", "gamma2", "delta1", "delta2",
              "z_h", "z_l", "t_w", "t_v", "t_zh", "t_zl", "t_wl", "t_vl")
_SYM_ASSIGNMENTS = {"x_a": "t_w", "y_a": "t_v", "x_d": "t_wl", "y_d": "t_vl"}
_VERIFY_KEYS = {"samples": int, "radius": float, "rel_tol": float, "floor": float}


class ProblemError(ValueError):
    """Invalid problem document; ``path`` is a JSON-pointer-style location."""

    def __init__(self, path: str, msg: str):
        super().__init__(f"{path or '/'}: {msg}")
        self.path = path


@dataclass
class ProblemSpec:
    rz: Realization
    builder: str
    tuples: dict[str, Any] = field(default_factory=dict)
    assignments: dict[str, list] = field(default_factory=dict)
    verify: dict[str, Any] = field(default_factory=dict)

    def options(self) -> VerifyOptions:
        kw = {}
        if "samples" in self.verify:
            kw["num_samples"] = self.verify["samples"]
        for key in ("radius", "rel_tol", "floor"):
            if key in self.verify:
                kw[key] = self.verify[key]
        return VerifyOptions(**kw)

    @property
    def structure(self) -> str:
        return self.rz.structure


# -- parsing ------------------------------------------------------------------

def _scalar(x, path) -> complex:
    if isinstance(x, bool):
        raise ProblemError(path, "expected a number or [re, im] pair")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, list) and len(x) == 2 and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in x):
        return complex(x[0], x[1])
    raise ProblemError(path, "expected a number or [re, im] pair")


def _matrix(x, path, shape) -> np.ndarray:
    if not isinstance(x, list) or len(x) != shape[0]:
        raise ProblemError(path, f"expected {shape[0]} rows")
    out = np.zeros(shape, dtype=complex)
    for i, row in enumerate(x):
        if not isinstance(row, list) or len(row) != shape[1]:
            raise ProblemError(f"{path}/{i}", f"expected {shape[1]} entries")
        for j, v in enumerate(row):
            out[i, j] = _scalar(v, f"{path}/{i}/{j}")
    return out


def _int(x, path, lo=None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ProblemError(path, "expected an integer")
    if lo is not None and x < lo:
        raise ProblemError(path, f"expected an integer >= {lo}")
    return x


def _int_list(x, path) -> tuple[int, ...]:
    if not isinstance(x, list):
        raise ProblemError(path, "expected an array of integers")
    return tuple(_int(v, f"{path}/{i}") for i, v in enumerate(x))


def parse_problem(document: str | bytes | dict) -> ProblemSpec:
    """Validate a problem document (JSON text or an already-decoded object)."""
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as e:
            raise ProblemError("", f"not valid JSON: {e}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise ProblemError("", "expected a JSON object")
    for key in ("dims", "a_coeffs", "d_coeffs", "b", "c"):
        if key not in doc:
            raise ProblemError(f"/{key}", "missing required key")
    dims = doc["dims"]
    if not isinstance(dims, dict):
        raise ProblemError("/dims", "expected an object")
    for key in ("n", "r", "m", "k"):
        if key not in dims:
            raise ProblemError(f"/dims/{key}", "missing required key")
    n, r = _int(dims["n"], "/dims/n", 1), _int(dims["r"], "/dims/r", 1)
    m, k = _int(dims["m"], "/dims/m", 1), _int(dims["k"], "/dims/k", 1)
    for key, size, deg in (("a_coeffs", n, m), ("d_coeffs", r, k)):
        if not isinstance(doc[key], list) or len(doc[key]) != deg + 1:
            raise ProblemError(f"/{key}", f"expected {deg + 1} coefficient matrices")
    A = [_matrix(x, f"/a_coeffs/{j}", (n, n)) for j, x in enumerate(doc["a_coeffs"])]
    D = [_matrix(x, f"/d_coeffs/{j}", (r, r)) for j, x in enumerate(doc["d_coeffs"])]
    B = _matrix(doc["b"], "/b", (n, r))
    C = _matrix(doc["c"], "/c", (r, n))
    structure = doc.get("structure", "none")
    if structure not in _STRUCT_IN:
        raise ProblemError("/structure", f"unknown structure {structure!r}")
    try:
        rz = Realization(PolynomialMatrix(tuple(A)), PolynomialMatrix(tuple(D)), B, C,
                         _STRUCT_IN[structure])
    except ValueError as e:
        raise ProblemError("/structure", str(e)) from None

    builder = doc.get("builder", "gfpr")
    if builder not in BUILDERS:
        raise ProblemError("/builder", f"unknown builder {builder!r}; expected one of {BUILDERS}")

    tuples_doc = doc.get("tuples", {})
    if not isinstance(tuples_doc, dict):
        raise ProblemError("/tuples", "expected an object")
    tuples: dict[str, Any] = {}
    for key, val in tuples_doc.items():
        if key in ("h", "l"):
            tuples[key] = _int(val, f"/tuples/{key}", 0)
        elif key in TUPLE_KEYS:
            tuples[key] = _int_list(val, f"/tuples/{key}")
        else:
            raise ProblemError(f"/tuples/{key}", "unknown tuple name")

    asg_doc = doc.get("assignments", {})
    if not isinstance(asg_doc, dict):
        raise ProblemError("/assignments", "expected an object")
    assignments: dict[str, list] = {}
    for key, val in asg_doc.items():
        if builder == "symmetric":
            if key not in _SYM_ASSIGNMENTS:
                raise ProblemError(f"/assignments/{key}", f"expected one of {sorted(_SYM_ASSIGNMENTS)}")
            tname = _SYM_ASSIGNMENTS[key]
        elif builder == "gfpr":
            if key not in GfprParams.SIDES:
                raise ProblemError(f"/assignments/{key}", f"expected one of {GfprParams.SIDES}")
            tname = key
        else:
            raise ProblemError(f"/assignments/{key}", f"builder {builder!r} takes no assignments")
        size = n if tname in ("sigma1", "sigma2", "tau1", "tau2", "t_w", "t_v") else r
        t = tuples.get(tname, ())
        if not isinstance(val, list) or len(val) != len(t):
            raise ProblemError(f"/assignments/{key}", f"expected {len(t)} entries, one per "
                               f"position of {tname}")
        assignments[key] = [None if x is None else _matrix(x, f"/assignments/{key}/{i}", (size, size))
                            for i, x in enumerate(val)]

    ver = doc.get("verify", {})
    if not isinstance(ver, dict):
        raise ProblemError("/verify", "expected an object")
    verify: dict[str, Any] = {}
    for key, val in ver.items():
        if key not in _VERIFY_KEYS:
            raise ProblemError(f"/verify/{key}", f"expected one of {sorted(_VERIFY_KEYS)}")
        if _VERIFY_KEYS[key] is int:
            verify[key] = _int(val, f"/verify/{key}", 1)
        elif isinstance(val, (int, float)) and not isinstance(val, bool) and val > 0:
            verify[key] = float(val)
        else:
            raise ProblemError(f"/verify/{key}", "expected a positive number")

    spec = ProblemSpec(rz, builder, tuples, assignments, verify)
    _check_params(spec)
    return spec


def _check_params(spec: ProblemSpec) -> None:
    """Run the builder's own validation so errors surface at parse time."""
    try:
        with warnings.catch_warnings():
            # hypothesis warnings are reported when the pencil is actually built
            warnings.simplefilter("ignore")
            build(spec)
    except (ValueError, TypeError, KeyError) as e:
        raise ProblemError("/tuples", str(e)) from None


# -- building -----------------------------------------------------------------

def _admissible(spec: ProblemSpec, key: str, shift: int, r: int):
    t = spec.tuples.get(key)
    if t is None:
        return None
    return T.as_admissible(T.shift(t, shift), r)


def build(spec: ProblemSpec) -> BlockPencil | StructuredPencil:
    """Run the builder named in ``spec``."""
    rz, tp, b = spec.rz, spec.tuples, spec.builder
    if b == "fiedler":
        return build_fiedler_pencil(rz, tp.get("alpha", tuple(range(rz.m))),
                                    tp.get("beta", tuple(range(rz.k))))
    if b == "gfpr":
        kw = {name: tp[name] for name in ("h", "sigma", "tau", "l", "gamma", "delta")
              if name in tp}
        missing = {"h", "sigma", "tau", "l", "gamma", "delta"} - set(kw)
        if missing:
            raise ValueError(f"gfpr builder needs tuples {sorted(missing)}")
        for name in GfprParams.SIDES:
            kw[name] = tp.get(name, ())
        return build_gfpr(rz, GfprParams(**kw, matrices=spec.assignments))
    h, l = tp.get("h", 0), tp.get("l", 0)
    if b == "symmetric":
        asg = {}
        for key, tname in _SYM_ASSIGNMENTS.items():
            ms = spec.assignments.get(key)
            asg[key] = MatrixAssignment(tp.get(tname, ()), None if ms is None else tuple(ms))
        return build_block_symmetric(rz, h, l, asg["x_a"], asg["y_a"], asg["x_d"], asg["y_d"])
    z_h = _admissible(spec, "z_h", rz.m, rz.m - h - 1)
    z_l = _admissible(spec, "z_l", rz.k, rz.k - l - 1)
    if b == "t_even":
        return build_t_even(rz, h, l, z_h, z_l)
    if b == "t_odd":
        return build_t_odd(rz, h, l, z_h, z_l)
    return build_skew_symmetric(rz, h, l, z_h, z_l, tp.get("t_w", ()), tp.get("t_v", ()),
                                tp.get("t_zh", ()), tp.get("t_zl", ()))


def pencil_of(built: BlockPencil | StructuredPencil) -> BlockPencil:
    return built if isinstance(built, BlockPencil) else built.pencil


# -- emitting -----------------------------------------------------------------

def _num(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _mat(M: np.ndarray) -> list:
    return [[_num(v) for v in row] for row in M]


def to_document(spec: ProblemSpec) -> dict:
    rz = spec.rz
    doc = {
        "dims": {"n": rz.n, "r": rz.r, "m": rz.m, "k": rz.k},
        "a_coeffs": [_mat(c) for c in rz.A.coeffs],
        "d_coeffs": [_mat(c) for c in rz.D.coeffs],
        "b": _mat(rz.B),
        "c": _mat(rz.C),
        "structure": _STRUCT_OUT[rz.structure],
        "builder": spec.builder,
        "tuples": {k: (v if isinstance(v, int) else list(v)) for k, v in spec.tuples.items()},
    }
    if spec.assignments:
        doc["assignments"] = {k: [None if x is None else _mat(x) for x in v]
                              for k, v in spec.assignments.items()}
    if spec.verify:
        doc["verify"] = dict(spec.verify)
    return doc


def emit_problem(spec: ProblemSpec) -> str:
    """Serialize to JSON; ``parse_problem(emit_problem(s))`` reproduces ``s``."""
    doc = to_document(spec)
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"


def spec_from_instance(inst) -> ProblemSpec:
    """Problem spec for a :class:`gfpr.sampling.Instance`."""
    rz, pr = inst.rz, inst.params
    tuples: dict[str, Any] = {}
    assignments: dict[str, list] = {}
    if inst.builder == "gfpr":
        p: GfprParams = pr["p"]
        for name in ("h", "sigma", "tau", "l", "gamma", "delta") + GfprParams.SIDES:
            tuples[name] = getattr(p, name)
        assignments = {k: list(v) for k, v in p.matrices.items() if len(v)}
    elif inst.builder == "symmetric":
        tuples.update(h=pr["h"], l=pr["l"])
        for key, tname in _SYM_ASSIGNMENTS.items():
            asg: MatrixAssignment = pr[key.upper().replace("_", "")]
            tuples[tname] = asg.indices
            if asg.matrices is not None and asg.indices:
                assignments[key] = list(asg.matrices)
    else:
        tuples.update(h=pr["h"], l=pr["l"], z_h=T.shift(pr["z_h"].entries, -rz.m),
                      z_l=T.shift(pr["z_l"].entries, -rz.k))
        for key in ("t_w", "t_v", "t_zh", "t_zl"):
            if key in pr:
                tuples[key] = tuple(pr[key])
    return ProblemSpec(rz, inst.builder, tuples, assignments, {})


# -- matrix dump ------------------------------------------------------------

def dump_matrix(M: np.ndarray) -> str:
    """``rows cols`` header, then one row per line of ``re imag`` pairs (17 digits)."""
    M = np.asarray(M, dtype=complex)
    lines = [f"{M.shape[0]} {M.shape[1]}"]
    for row in M:
        lines.append(" ".join(f"{v.real:.17g} {v.imag:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> np.ndarray:
    return _read_matrix(iter(text.strip().splitlines()))


def _read_matrix(lines) -> np.ndarray:
    rows, cols = (int(x) for x in next(lines).split())
    out = np.zeros((rows, cols), dtype=complex)
    for i in range(rows):
        vals = [float(x) for x in next(lines).split()]
        if len(vals) != 2 * cols:
            raise ValueError(f"row {i}: expected {2 * cols} numbers, got {len(vals)}")
        # set parts separately: re + 1j*im would turn -0.0 into 0.0
        out.real[i], out.imag[i] = vals[0::2], vals[1::2]
    return out


def dump_pencil(built: BlockPencil | StructuredPencil) -> str:
    """Header comments, then ``X`` and ``Y`` in the matrix dump format."""
    p = pencil_of(built)
    head = [f"# pencil L(lam) = lam*X + Y, size {p.size}",
            f"# blocks m={p.m} n={p.n} k={p.k} r={p.r} convention={p.convention}",
            f"# corners upper=({p.upper.row},{p.upper.col}) lower=({p.lower.row},{p.lower.col})"]
    if isinstance(built, StructuredPencil):
        sg = lambda q: "(" + ",".join("+" if s > 0 else "-" for s in q.signs) + ")"
        head.append(f"# kind={built.kind} Q_A={sg(built.QA)} Q_D={sg(built.QD)}")
    return "\n".join(head) + "\nX\n" + dump_matrix(p.X) + "Y\n" + dump_matrix(p.Y)


def load_pencil(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Read ``(X, Y)`` back from :func:`dump_pencil` output."""
    lines = iter(ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#"))
    out = {}
    for _ in range(2):
        name = next(lines).strip()
        out[name] = _read_matrix(lines)
    return out["X"], out["Y"]


def pretty_blocks(p: BlockPencil, which: str = "Y") -> str:
    """Block-annotated view of a coefficient; ``.`` marks an all-zero block."""
    M = p.X if which == "X" else p.Y
    nb = p.m + p.k
    rows = []
    for i in range(1, nb + 1):
        cells = []
        for j in range(1, nb + 1):
            blk = p.block(M, i, j)
            if not np.any(blk):
                cells.append(".")
            elif blk.shape[0] == blk.shape[1] and np.array_equal(blk, np.eye(blk.shape[0])):
                cells.append("I")
            elif blk.shape[0] == blk.shape[1] and np.array_equal(blk, -np.eye(blk.shape[0])):
                cells.append("-I")
            else:
                cells.append("*")
        rows.append(" ".join(f"{c:>2}" for c in cells[:p.m]) + " |"
                    + " ".join(f"{c:>2}" for c in cells[p.m:]))
        if i == p.m:
            rows.append("-" * len(rows[-1]))
    return "\n".join(rows)
