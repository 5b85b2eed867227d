"""Independent reference implementations used only by the tests.

Everything here is written straight from the definitions, without importing
the library's own helpers, so agreement is evidence rather than tautology.
"""
import itertools

import numpy as np


# -- tuples -------------------------------------------------------------------

def sip_bruteforce(t):
    t = list(t)
    if t and max(t) < 0:
        t = [e - min(t) for e in t]
    for s in range(len(t)):
        for u in range(s + 1, len(t)):
            if t[s] == t[u] and (t[s] + 1) not in t[s + 1:u]:
                return False
    return True


def subtuple_bruteforce(a, b):
    a = tuple(a)
    return any(tuple(b[i] for i in idx) == a
               for idx in itertools.combinations(range(len(b)), len(a)))


def csf_bruteforce(t):
    """Try every cut into nonempty strings m:n and check the end ordering."""
    t = list(t)
    if t and max(t) < 0:
        t = [e - min(t) for e in t]
    if not t:
        return True
    for cuts in itertools.product((False, True), repeat=len(t) - 1):
        pieces, cur = [], [t[0]]
        for cut, e in zip(cuts, t[1:]):
            if cut:
                pieces.append(cur)
                cur = [e]
            else:
                cur.append(e)
        pieces.append(cur)
        strings_ok = all(p == list(range(p[0], p[-1] + 1)) and 0 <= p[0] for p in pieces)
        ends = [p[-1] for p in pieces]
        if strings_ok and all(a > b for a, b in zip(ends, ends[1:])):
            return True
    return False


def consecutions_bruteforce(t, r):
    if r not in t:
        return -1
    s = 0
    while subtuple_bruteforce(tuple(range(r, r + s + 2)), t):
        s += 1
    return s


def inversions_bruteforce(t, r):
    if r not in t:
        return -1
    s = 0
    while subtuple_bruteforce(tuple(range(r + s + 1, r - 1, -1)), t):
        s += 1
    return s


# -- matrices -----------------------------------------------------------------

def elementary_loops(i, P, deg):
    """``M_i(P)`` filled entry by entry from the four displayed forms."""
    P = np.asarray(P, dtype=complex)
    b = P.shape[0]
    N = deg * b
    M = np.zeros((N, N), dtype=complex)
    for d in range(N):
        M[d, d] = 1
    if i == 0:
        lo = (deg - 1) * b
        for a in range(b):
            for c in range(b):
                M[lo + a, lo + c] = P[a, c]
        return M
    if i == -deg:
        for a in range(b):
            for c in range(b):
                M[a, c] = P[a, c]
        return M
    top = (deg - abs(i) - 1) * b
    for a in range(2 * b):
        for c in range(2 * b):
            M[top + a, top + c] = 0
    p_at = top if i > 0 else top + b
    for a in range(b):
        M[top + a, top + b + a] = 1
        M[top + b + a, top + a] = 1
        for c in range(b):
            M[p_at + a, p_at + c] = P[a, c]
    return M


def fiedler_loops(i, coeffs):
    deg = len(coeffs) - 1
    P = -np.asarray(coeffs[i]) if i >= 0 else np.asarray(coeffs[-i])
    return elementary_loops(i, P, deg)


def product(mats, size):
    out = np.eye(size, dtype=complex)
    for M in mats:
        out = out @ M
    return out


def det_cofactor(M):
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n == 1:
        return M[0, 0]
    total = 0j
    for j in range(n):
        minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
        total += (-1) ** j * M[0, j] * det_cofactor(minor)
    return total


def poly_from_roots(roots):
    """Coefficients, lowest degree first, of ``prod (x - z)`` by repeated expansion."""
    c = [1 + 0j]
    for z in roots:
        nxt = [0j] * (len(c) + 1)
        for i, a in enumerate(c):
            nxt[i + 1] += a
            nxt[i] -= z * a
        c = nxt
    return np.array(c)


# -- brute-force pencil assembly -----------------------------------------------

def factor(entries, coeffs, mats=None):
    """Product over a tuple; ``mats[pos]`` overrides the Fiedler matrix."""
    deg, b = len(coeffs) - 1, np.asarray(coeffs[0]).shape[0]
    out = []
    for pos, i in enumerate(entries):
        P = None if mats is None else mats[pos]
        out.append(fiedler_loops(i, coeffs) if P is None else elementary_loops(i, P, deg))
    return product(out, deg * b)


def half(coeffs, left, tau, sigma, right):
    """``left (lam M_tau - M_sigma) right`` as ``(X, Y)``; left/right are matrices."""
    return (left @ factor(tau, coeffs) @ right, -(left @ factor(sigma, coeffs) @ right))


def assemble(A, D, XA, YA, XD, YD, upper, lower, n, r):
    """Place the half pencils and the two corners ``(row, col, payload)``."""
    m, k = len(A) - 1, len(D) - 1
    N = m * n + k * r
    X = np.zeros((N, N), dtype=complex)
    Y = np.zeros((N, N), dtype=complex)
    X[:m * n, :m * n], Y[:m * n, :m * n] = XA, YA
    X[m * n:, m * n:], Y[m * n:, m * n:] = XD, YD
    row, col, P = upper
    e_r, e_c = np.zeros((m, 1)), np.zeros((1, k))
    e_r[row - 1, 0], e_c[0, col - 1] = 1, 1
    Y[:m * n, m * n:] += np.kron(e_r @ e_c, P)
    row, col, P = lower
    e_r, e_c = np.zeros((k, 1)), np.zeros((1, m))
    e_r[row - 1, 0], e_c[0, col - 1] = 1, 1
    Y[m * n:, :m * n] += np.kron(e_r @ e_c, P)
    return X, Y


def quasi(signs, b):
    return np.kron(np.diag(np.array(signs, dtype=float)), np.eye(b))
