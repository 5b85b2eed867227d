"""
Spectra and the command line
============================

The finite eigenvalues of a linearization are the roots of det L, which
must match the roots of det S.  The same checks are available from the
``gfpr`` command.
"""

import subprocess
import sys

import numpy as np

from gfpr.cli import cmd_random
from gfpr.problem import build, parse_problem, pencil_of
from gfpr.verify import compare_spectra

spec = parse_problem(cmd_random(11, (1, 1, 3, 2), "none"))
rep = compare_spectra(pencil_of(build(spec)), spec.rz)
print(rep.summary())
for i, j, d in rep.matching:
    print(f"  {rep.pencil_roots[i]:.6f}  {rep.system_roots[j]:.6f}  {d:.1e}")

# The CLI reads and writes the same JSON problem documents.
def gfpr(*args, stdin=None):
    out = subprocess.run([sys.executable, "-m", "gfpr", *args], input=stdin,
                         capture_output=True, text=True)
    return out.returncode, out.stdout

code, doc = gfpr("random", "--seed", "4", "--structure", "t_even")
print("random ->", code)
code, text = gfpr("verify", stdin=doc)
print("verify ->", code, text.splitlines()[0])
code, text = gfpr("demo", "--demo", "teven_ex")
print("demo   ->", code)
print("\n".join(text.splitlines()[:8]))
