"""Index-tuple combinatorics.

Index tuples are ordered tuples of integers.  Everything in this module is a
pure function on plain Python tuples; :class:`IndexTuple` adds a declared
range for callers that want it validated.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IndexTuple", "AdmissibleTuple", "negate", "reverse", "shift", "concat",
    "is_sip", "is_csf", "is_subtuple", "consecutions_at", "inversions_at",
    "admissible_tuple", "symmetric_complement", "simple_admissible",
    "is_canonical_form", "canonical_form", "permutation_csf", "csf_blocks",
    "is_type1_index", "zr_simple_tuple", "zr_iterated", "is_type1_tuple",
    "interval", "as_admissible",
]


@dataclass(frozen=True)
class IndexTuple:
    """An index tuple together with the inclusive range it is declared on."""

    entries: tuple[int, ...]
    lo: int
    hi: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.lo > self.hi:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]")
        bad = [e for e in self.entries if not self.lo <= e <= self.hi]
        if bad:
            raise ValueError(
                f"entries {bad} outside declared range [{self.lo}, {self.hi}]")

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def negate(self) -> "IndexTuple":
        return IndexTuple(negate(self.entries), -self.hi, -self.lo)

    def reverse(self) -> "IndexTuple":
        return IndexTuple(reverse(self.entries), self.lo, self.hi)

    def shift(self, c: int) -> "IndexTuple":
        return IndexTuple(shift(self.entries, c), self.lo + c, self.hi + c)

    def concat(self, other: "IndexTuple") -> "IndexTuple":
        return IndexTuple(concat(self.entries, other.entries),
                          min(self.lo, other.lo), max(self.hi, other.hi))


def interval(a: int, b: int) -> tuple[int, ...]:
    """The string ``(a:b) = (a, a+1, ..., b)``; empty when ``a > b``."""
    return tuple(range(a, b + 1))


def negate(t: Iterable[int]) -> tuple[int, ...]:
    return tuple(-e for e in t)


def reverse(t: Iterable[int]) -> tuple[int, ...]:
    return tuple(t)[::-1]


def shift(t: Iterable[int], c: int) -> tuple[int, ...]:
    return tuple(e + c for e in t)


def concat(*parts: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def _nonnegative_view(t: Sequence[int]) -> tuple[int, ...]:
    # all-negative tuples are tested through t + h with h = -min(t)
    t = tuple(t)
    if not t:
        return t
    if min(t) >= 0:
        return t
    if max(t) < 0:
        return shift(t, -min(t))
    raise ValueError(f"mixed-sign index tuple {t}")


def is_sip(t: Sequence[int]) -> bool:
    """Successor infix property.

    Between any two equal entries there must be an entry equal to their
    successor.  Raises ``ValueError`` for tuples mixing negative and
    nonnegative entries.
    """
    t = _nonnegative_view(t)
    last: dict[int, int] = {}
    for pos, e in enumerate(t):
        if e in last:
            if not any(x == e + 1 for x in t[last[e] + 1:pos]):
                return False
        last[e] = pos
    return True


def _runs(t: Sequence[int]) -> list[tuple[int, ...]]:
    runs: list[list[int]] = []
    for e in t:
        if runs and e == runs[-1][-1] + 1:
            runs[-1].append(e)
        else:
            runs.append([e])
    return [tuple(r) for r in runs]


def is_csf(t: Sequence[int]) -> bool:
    """True if ``t`` reads as ``(m_q:n_q, ..., m_1:n_1)`` with ``n_1 < ... < n_q``.

    A valid reading can only cut between non-successive entries (a cut between
    ``a`` and ``a + 1`` would make the next string end above ``a``), so the
    maximal ascending runs are the only candidate strings.
    """
    t = _nonnegative_view(t)
    ends = [r[-1] for r in _runs(t)]
    return all(a > b for a, b in zip(ends, ends[1:]))


def is_subtuple(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if ``a`` is obtained from ``b`` by deleting entries."""
    it = iter(b)
    return all(any(x == y for y in it) for x in a)


def consecutions_at(t: Sequence[int], r: int) -> int:
    """Number of consecutive consecutions of ``t`` at ``r``; -1 if ``r`` is absent."""
    t = tuple(t)
    if r not in t:
        return -1
    want, s = r, -1
    for e in t:
        if e == want:
            s += 1
            want += 1
    return s


def inversions_at(t: Sequence[int], r: int) -> int:
    """Number of consecutive inversions of ``t`` at ``r``; -1 if ``r`` is absent."""
    # (r+s, ..., r) is a subtuple of t iff (r, ..., r+s) is one of rev(t)
    return consecutions_at(reverse(t), r)


@dataclass(frozen=True)
class AdmissibleTuple:
    entries: tuple[int, ...]
    r: int
    q: int

    @property
    def index(self) -> int:
        return self.q


def admissible_tuple(r: int, q: int) -> AdmissibleTuple:
    """The admissible tuple of ``{0..r}`` with index ``q``.

    Its column standard form is ``(r-1:r, r-3:r-2, ..., q+1:q+2, 0:q)``, so
    ``r - q`` has to be even.
    """
    if r < 0 or not 0 <= q <= r:
        raise ValueError(f"need 0 <= q <= r, got r={r}, q={q}")
    if (r - q) % 2:
        raise ValueError(f"no admissible tuple of {{0..{r}}} has index {q}: "
                         "r - q must be even")
    pairs = [interval(a, a + 1) for a in range(r - 1, q, -2)]
    return AdmissibleTuple(concat(*pairs, interval(0, q)), r, q)


def as_admissible(t: Sequence[int], r: int) -> AdmissibleTuple:
    """Recognize ``t`` as the admissible tuple of ``{0..r}`` it equals."""
    t = tuple(int(e) for e in t)
    for q in range(r % 2, r + 1, 2):
        a = admissible_tuple(r, q)
        if a.entries == t:
            return a
    raise ValueError(f"{t} is not an admissible tuple of {{0..{r}}}")


def simple_admissible(r: int) -> AdmissibleTuple:
    return admissible_tuple(r, r % 2)


def symmetric_complement(a: AdmissibleTuple) -> tuple[int, ...]:
    r, q = a.r, a.q
    if r == 0:
        return ()
    head = tuple(range(r - 1, q, -2))
    tail = concat(*(interval(0, j) for j in range(q - 1, -1, -1)))
    return head + tail


def canonical_form(r: int, starts: Sequence[int]) -> tuple[int, ...]:
    """Build ``(s_1:r-2, s_2:r-4, ...)`` from the string starts ``s_j``.

    A start above its string's end gives an empty string.
    """
    if len(starts) != r // 2:
        raise ValueError(f"need {r // 2} string starts for r={r}, got {len(starts)}")
    if any(s < 0 for s in starts):
        raise ValueError("string starts must be nonnegative")
    return concat(*(interval(s, r - 2 * j) for j, s in enumerate(starts, 1)))


def is_canonical_form(t: Sequence[int], r: int) -> bool:
    """True if ``t`` can be written as ``(s_1:r-2, ..., s_p:r-2p)``, ``p = r // 2``.

    Strings may be empty.  For ``r`` in ``{0, 1}`` only the empty tuple qualifies.
    """
    t = tuple(t)

    def match(pos: int, j: int) -> bool:
        if j > r // 2:
            return pos == len(t)
        end = r - 2 * j
        if match(pos, j + 1):
            return True
        return any(t[pos:pos + end - s + 1] == interval(s, end) and
                   match(pos + end - s + 1, j + 1) for s in range(end + 1))

    return match(0, 1)


def csf_blocks(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """The strings ``b_d, ..., b_1`` of the column standard form of a permutation.

    For a permutation of ``{0..k}``, ``i`` and ``i + 1`` share a string exactly
    when ``i`` precedes ``i + 1``.
    """
    alpha = tuple(alpha)
    k = len(alpha) - 1
    if sorted(alpha) != list(range(k + 1)):
        raise ValueError(f"{alpha} is not a permutation of {{0..{k}}}")
    pos = {e: i for i, e in enumerate(alpha)}
    blocks: list[list[int]] = [[0]] if alpha else []
    for i in range(k):
        if pos[i] < pos[i + 1]:
            blocks[-1].append(i + 1)
        else:
            blocks.append([i + 1])
    return [tuple(b) for b in reversed(blocks)]


def permutation_csf(alpha: Sequence[int]) -> tuple[int, ...]:
    """Column standard form of a permutation (commutation-equivalent tuple)."""
    return concat(*csf_blocks(alpha))


def is_type1_index(alpha: Sequence[int], s: int) -> bool:
    """True if some string of ``csf(alpha)`` is ``(s:t)`` with ``s < t``."""
    return any(len(b) > 1 and b[0] == s for b in csf_blocks(alpha))


def zr_simple_tuple(alpha: Sequence[int], s: int) -> tuple[int, ...]:
    """Move the head ``s`` of its string onto the end of the next lower string."""
    if not is_type1_index(alpha, s):
        raise ValueError(f"{s} is not a right index of type 1 relative to {tuple(alpha)}")
    blocks = csf_blocks(alpha)  # b_d, ..., b_1
    i = next(j for j, b in enumerate(blocks) if b[0] == s)
    head, rest = blocks[i][0], blocks[i][1:]
    if s == 0:
        new = blocks[:i] + [rest, (head,)]
    else:
        new = blocks[:i] + [rest, blocks[i + 1] + (head,)] + blocks[i + 2:]
    return concat(*new)


def zr_iterated(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
    out = tuple(alpha)
    for s in beta:
        out = zr_simple_tuple(out, s)
    return out


def is_type1_tuple(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    out = tuple(alpha)
    for s in beta:
        if not is_type1_index(out, s):
            return False
        out = zr_simple_tuple(out, s)
    return True
