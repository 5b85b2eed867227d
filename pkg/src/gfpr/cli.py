"""Command line interface: ``gfpr build|verify|eigs|demo|random``.

Exit codes: 0 ok, 1 a check failed, 2 invalid input, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from .demos import DEMOS, demo
from .pencils import StructuredPencil, StructureSearchError
from .problem import (ProblemError, ProblemSpec, build, dump_pencil, emit_problem,
                      parse_problem, pencil_of, pretty_blocks, spec_from_instance)
from .sampling import random_instance
from .verify import compare_spectra, structure_check, verify_linearization

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3
_STRUCT = {"none": "none", "symmetric": "symmetric", "t_even": "t_even", "t_odd": "t_odd",
           "skew": "skew_symmetric", "skew_symmetric": "skew_symmetric"}


def _read_spec(args) -> ProblemSpec:
    if args.infile in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.infile, encoding="utf-8") as f:
            text = f.read()
    spec = parse_problem(text)
    for flag, key in (("samples", "samples"), ("radius", "radius")):
        if getattr(args, flag, None) is not None:
            spec.verify[key] = getattr(args, flag)
    if getattr(args, "tol", None) is not None and args.command == "verify":
        spec.verify["rel_tol"] = args.tol
    return spec


def _verify_lines(spec: ProblemSpec, built, conv: str | None) -> tuple[list[str], int, dict]:
    p = pencil_of(built)
    rep = verify_linearization(p, spec.rz, conv, spec.options())
    lines = [rep.summary()] + [f"  note: {n}" for n in rep.notes]
    record = {"linearization": rep.to_dict()}
    code = EXIT_OK if rep.passed else (EXIT_INCONCLUSIVE if rep.inconclusive else EXIT_FAILED)
    if isinstance(built, StructuredPencil):
        ok = structure_check(p, built.kind)
        lines.append(f"structure {built.kind}: {'passed' if ok else 'FAILED'}")
        record["structure"] = {"kind": built.kind, "passed": ok,
                               "Q_A": list(built.QA.signs), "Q_D": list(built.QD.signs)}
        if not ok:
            code = EXIT_FAILED
    return lines, code, record


def cmd_build(spec: ProblemSpec) -> str:
    return dump_pencil(build(spec))


def cmd_verify(spec: ProblemSpec, conv: str | None = None) -> tuple[str, int]:
    built = build(spec)
    lines, code, record = _verify_lines(spec, built, conv)
    return "\n".join(lines) + "\n" + json.dumps(record) + "\n", code


def cmd_eigs(spec: ProblemSpec, conv: str | None = None, tol: float = 1e-6) -> tuple[str, int]:
    p = pencil_of(build(spec))
    rep = compare_spectra(p, spec.rz, conv, tol)
    lines = [rep.summary()] + [f"  note: {n}" for n in rep.notes]
    for i, j, d in rep.matching:
        z, w = rep.pencil_roots[i], rep.system_roots[j]
        lines.append(f"  {z.real:+.10f}{z.imag:+.10f}j  {w.real:+.10f}{w.imag:+.10f}j  {d:.2e}")
    return "\n".join(lines) + "\n" + json.dumps(rep.to_dict()) + "\n", (
        EXIT_OK if rep.passed else EXIT_FAILED)


def cmd_demo(name: str, conv: str | None = None) -> tuple[str, int]:
    d = demo(name)
    built = build(d.spec)
    p = pencil_of(built)
    out = [f"# demo {d.name}: {d.title}"]
    out += [f"# errata: {e}" for e in d.errata] or ["# errata: none"]
    lines, code, _ = _verify_lines(d.spec, built, conv)
    out += [f"# {ln}" for ln in lines]
    out += ["# block pattern of Y:"] + [f"#   {ln}" for ln in pretty_blocks(p).splitlines()]
    return "\n".join(out) + "\n" + dump_pencil(built), code


def cmd_random(seed: int, dims: tuple[int, int, int, int] | None, structure: str) -> str:
    rng = np.random.default_rng(seed)
    return emit_problem(spec_from_instance(random_instance(rng, _STRUCT[structure], dims)))


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gfpr", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=("build", "verify", "eigs", "demo", "random"))
    ap.add_argument("--in", dest="infile", help="problem JSON file ('-' or omitted: stdin)")
    ap.add_argument("--out", dest="outfile", help="write output here instead of stdout")
    ap.add_argument("--demo", help=f"demo name: {', '.join(DEMOS)} (default: all)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dims", type=int, nargs=4, metavar=("N", "R", "M", "K"))
    ap.add_argument("--structure", default="none", choices=sorted(_STRUCT))
    ap.add_argument("--tol", type=float, help="relative ratio tolerance (verify) or "
                    "root-pairing distance (eigs, default 1e-6)")
    ap.add_argument("--samples", type=int)
    ap.add_argument("--radius", type=float)
    ap.add_argument("--convention", choices=("minus_b", "plus_b"),
                    help="system matrix to compare with (default: the pencil's own)")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.command == "build":
                text, code = cmd_build(_read_spec(args)), EXIT_OK
            elif args.command == "verify":
                text, code = cmd_verify(_read_spec(args), args.convention)
            elif args.command == "eigs":
                tol = 1e-6 if args.tol is None else args.tol
                text, code = cmd_eigs(_read_spec(args), args.convention, tol)
            elif args.command == "demo":
                names = [args.demo] if args.demo else list(DEMOS)
                parts, code = [], EXIT_OK
                for name in names:
                    t, c = cmd_demo(name, args.convention)
                    parts.append(t)
                    code = max(code, c)
                text = "\n".join(parts)
            else:
                text, code = cmd_random(args.seed, tuple(args.dims) if args.dims else None,
                                        args.structure), EXIT_OK
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except (ProblemError, ValueError, OSError, StructureSearchError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
