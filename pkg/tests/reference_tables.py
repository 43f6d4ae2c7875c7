"""Reference rows of the classification tables.

Indices are 1-based; on a doubled diagram of rank n the primed index i' is i + n.
"""

from __future__ import annotations

from fractions import Fraction as Q


def _p(i: int, n: int) -> int:
    return i + n


def lambda_full_reference(max_rank: int = 8) -> set[tuple]:
    """Concrete instances ``(family, rank, form, xi, pairs)`` of the generic Lambda = Xi table."""
    rows: set[tuple] = set()

    def add(fam, n, form, xi_base, pairs):
        if form == "C":
            xi = tuple(sorted(set(xi_base) | {_p(i, n) for i in xi_base}))
        else:
            xi = tuple(sorted(xi_base))
        rows.add((fam, n, form, xi, tuple(sorted(pairs))))

    for n in range(3, max_rank + 1):
        P = lambda i: _p(i, n)  # noqa: E731
        add("A", n, "R", (1, n), [(1, n)])
        add("A", n, "C", (1, n), [(1, n)])
        add("A", n, "C", (1, n), [(1, 2), (n, n - 1)])
        add("A", n, "C", (1, n), [(1, P(n)), (n, P(1))])
        add("A", n, "C", (1, n), [(1, P(n)), (1, 2)])
        add("A", n, "C", (1, n), [(n, n - 1), (n, P(1))])
        add("A", n, "C", (1, 2), [(1, 2), (2, 1)])
        add("A", n, "C", (1, 2), [(1, 2), (1, P(2))])
        add("A", n, "C", (1, 2), [(1, 2), (P(2), P(1))])
        add("A", n, "C", (1, 2), [(1, 2), (P(1), P(2))])
        add("A", n, "C", (1, 2), [(2, 1), (1, P(2))])
        add("A", n, "C", (1, 2), [(2, 1), (P(1), P(2))])
        for p in range(3, n):
            add("A", n, "C", (1, p), [(1, 2), (1, P(p))])
        if n >= 4:
            add("A", n, "C", (2, n - 1), [(2, 1), (n - 1, n)])
            add("A", n, "C", (1, 2, n), [(1, 2), (2, 1), (1, n)])
    if max_rank >= 3:
        add("B", 3, "R", (1, 3), [(3, 2)])
    n = 2
    add("C", 2, "C", (1, 2), [(1, 2), (_p(1, n), _p(2, n))])
    add("C", 2, "C", (1, 2), [(1, 2), (1, _p(2, n))])
    add("C", 2, "C", (1, 2), [(_p(1, n), _p(2, n)), (1, _p(2, n))])
    for n in range(3, max_rank + 1):
        add("C", n, "C", (1, 2), [(1, 2), (2, 1)])
    return rows


# (family, rank, doubled, xi, component, homogeneity, unprimed I_mu)
# I_mu is None where the table leaves it unstated for that instance.
HOMOGENEITY_ROWS = [
    ("A", 4, False, (1, 2), (1, 2), (2, 0), ()),
    ("A", 4, False, (1, 2), (2, 1), (1, 2), (1,)),
    ("A", 4, False, (1, 4), (1, 4), (1, 1), ()),
    ("A", 5, False, (1, 3), (1, 3), (1, 0), ()),
    ("A", 5, False, (2, 3), (3, 2), (0, 1), (2,)),
    ("A", 6, False, (1, 4), (1, 2), (2, -1), (4,)),
    ("A", 5, False, (2, 4), (2, 1), (2, -1), None),
    ("C", 2, False, (1, 2), (1, 2), (3, 0), ()),
    ("C", 3, False, (1, 2), (2, 1), (1, 2), (1,)),
    ("C", 4, False, (1, 4), (1, 2), (2, -1), (4,)),
    ("C", 3, False, (1, 2), (1, 2), (2, -1), ()),
    ("C", 3, False, (2, 3), (2, 3), (1, 0), ()),
    ("C", 3, False, (1, 3), (1, 3), (1, 0), ()),
    ("B", 3, False, (1, 3), (3, 2), (-1, 3), ()),
    ("B", 3, False, (2, 3), (3, 2), (0, 3), ()),
    ("D", 4, False, (3, 4), (3, 2), (2, -1), ()),
    ("D", 5, False, (1, 5), (1, 2), (2, -1), (5,)),
    ("B", 3, False, (1, 2), (1, 2), (2, 0), (2,)),
    ("D", 5, False, (1, 2), (1, 2), (2, 0), (2,)),
    ("B", 4, False, (1, 2), (2, 1), (0, 1), ()),
    ("B", 4, False, (2, 3), (3, 2), (0, 1), (2,)),
    ("G2", 2, False, (1, 2), (1, 2), (4, 0), ()),
    ("G2", 2, False, (1,), (1, 2), (4,), ()),
    ("A", 4, True, (2, 6), (6, 7), (-1, 2), ()),
    ("C", 3, True, (2, 5), (5, 6), (-2, 3), ()),
    ("C", 3, True, (3, 6), (6, 5), (-1, 2), ()),
    ("B", 3, True, (3, 6), (6, 5), (-2, 3), ()),
    ("D", 4, True, (4, 8), (8, 6), (-1, 2), ()),
    ("A", 5, True, (3, 4, 8, 9), (9, 8), (-1, -1, 1, 2), (3,)),
    ("A", 5, True, (1, 3, 6, 8), (1, 8), (1, -1, 0, 1), ()),
    ("A", 5, True, (1, 3, 6, 8), (1, 6), (1, -1, 1, 0), (3,)),
    ("C", 4, True, (3, 4, 7, 8), (7, 8), (-2, -1, 3, 1), ()),
    ("C", 4, True, (1, 4, 5, 8), (1, 5), (1, -1, 1, 0), (4,)),
]

# eigenvalues as points (log|j|, arg j / 2 pi)
ONE = (Q(0), Q(0))
NEG = (Q(0), Q(1, 2))
R = Q(1, 3)  # a generic real log-modulus
PHI = Q(1, 7)  # a generic phase


def W(n: int, k: int = 1):
    return (Q(0), Q(k, n))


def FREE(x=R, t=Q(0)):
    return (x, t)


# (family, rank, form, xi, components, point, roots spanning m)
# The m roots are representatives; the fixed set is compared as a set of
# modules, closed under conjugation on doubled diagrams.
SYMMETRY_ROWS = [
    ("A", 4, "R", (1, 2), [(1, 2)], [NEG, NEG], [(1, 1, 0, 0)]),
    ("A", 4, "R", (1, 2), [(1, 2)], [NEG, ONE], [(0, 1, 0, 0)]),
    ("A", 4, "R", (1, 2), [(1, 2)], [ONE, FREE()], [(1, 0, 0, 0)]),
    ("A", 4, "R", (1, 2), [(1, 2)], [NEG, FREE()], []),
    ("A", 4, "R", (1, 2), [(2, 1)], [ONE, NEG], [(1, 0, 0, 0)]),
    ("A", 4, "R", (1, 2), [(2, 1)], [FREE(-2 * R), FREE()], []),
    ("A", 4, "R", (1, 4), [(1, 4)], [FREE(), FREE(-R)], [(1, 1, 1, 1)]),
    ("A", 4, "su", (1, 4), [(1, 4)], [(Q(0), PHI), (Q(0), -PHI)], [(1, 1, 1, 1)]),
    ("C", 2, "C", (1, 2), [(1, 2)], [W(3), ONE], [(0, 1)]),
    ("C", 2, "C", (1, 2), [(1, 2)], [ONE, FREE(R, PHI)], [(1, 0)]),
    ("C", 2, "C", (1, 2), [(1, 2)], [W(3), W(3, 2)], [(1, 1)]),
    ("C", 2, "C", (1, 2), [(1, 2)], [W(3), W(3)], [(2, 1)]),
    ("C", 2, "C", (1, 2), [(1, 2)], [W(3), FREE(R, PHI)], []),
    ("G2", 2, "R", (1,), [(1, 2)], [NEG], [(2, 1)]),
    ("G2", 2, "C", (1,), [(1, 2)], [W(4)], []),
    ("C", 3, "R", (1,), [(1, 2)], [NEG], [(2, 2, 1)]),
    ("C", 4, "R", (1,), [(1, 2)], [NEG], [(2, 2, 2, 1)]),
    ("B", 3, "C", (1, 3), [(3, 2)], [ONE, W(3)], [(1, 0, 0)]),
    ("B", 3, "C", (1, 3), [(3, 2)], [W(4, 3), W(4)], [(1, 1, 1)]),
    ("B", 3, "R", (2, 3), [(3, 2)], [NEG, ONE], [(0, 0, 1), (1, 2, 2)]),
    ("B", 3, "C", (2, 3), [(3, 2)], [ONE, W(3)], [(0, 1, 0)]),
    ("D", 5, "R", (1, 5), [(1, 2)], [NEG, ONE], [(0, 0, 0, 0, 1)]),
    ("D", 5, "C", (1, 5), [(1, 2)], [W(3), W(3, 2)], [(1, 1, 1, 0, 1)]),
    ("G2", 2, "C", (1, 2), [(1, 2)], [W(4), ONE], [(0, 1)]),
    ("G2", 2, "R", (1, 2), [(1, 2)], [ONE, NEG], [(1, 0), (3, 2)]),
    ("G2", 2, "R", (1, 2), [(1, 2)], [NEG, NEG], [(1, 1), (3, 1)]),
    ("G2", 2, "R", (1, 2), [(1, 2)], [NEG, ONE], [(0, 1), (2, 1)]),
    ("G2", 2, "R", (1, 2), [(1, 2)], [ONE, FREE()], [(1, 0)]),
    ("C", 3, "C", (1, 4), [(1, 4)], [NEG, NEG], [(2, 2, 1, 0, 0, 0)]),
    ("A", 5, "C", (1, 3, 6, 8), [(1, 8)], [ONE, FREE(), ONE, FREE()], [(1, 0, 0, 0, 0, 0, 0, 0, 0, 0)]),
    (
        "C", 4, "C", (1, 4, 5, 8), [(1, 5)],
        [NEG, ONE, NEG, ONE],
        [(0, 0, 0, 1, 0, 0, 0, 0), (2, 2, 2, 1, 0, 0, 0, 0)],
    ),
]
