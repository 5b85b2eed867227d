"""
Index tuples
============

Pencils in this package are products of block matrices indexed by tuples of
integers.  This script walks through the tuple vocabulary.
"""

from gfpr import tuples as T

# A tuple has the successor infix property (SIP) when between two copies of
# an index there is a copy of its successor.
print(T.is_sip((0, 1, 0, 2, 1)))   # True
print(T.is_sip((0, 0)))            # False: nothing between the two zeros

# Consecutions and inversions measure how far an index climbs forward or
# backward through the tuple.  Both are -1 when the index is absent.
g = (3, 4, 1, 6, 2, 3, 1, 2, 4, 5, 2)
print(T.consecutions_at(g, 1), T.inversions_at(g, 2), T.consecutions_at(g, 0))

# Admissible tuples are permutations of {0..r} in column standard form.
# The simple one for r = 2 and its symmetric complement:
w = T.simple_admissible(2)
print(w.entries, T.symmetric_complement(w))

# Admissible tuples of a negative range are written shifted by -m.
z = T.admissible_tuple(3, 3)
print(T.shift(z.entries, -4), T.shift(T.symmetric_complement(z), -4))

# Canonical forms and type-1 moves drive the symmetric and skew constructions.
print(T.canonical_form(4, (1, 0)), T.is_canonical_form((1, 2, 0), 4))
print(T.zr_simple_tuple((1, 2, 0), 1))
