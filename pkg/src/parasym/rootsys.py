"""Root systems, weights, Weyl reflections and the dot action.

Simple roots are numbered from 1 in Bourbaki order.  A complex Lie algebra
viewed as a real one is modelled by two copies of its diagram; the copy of
``alpha_i`` is ``alpha_{i'}`` and carries index ``i + n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import inverse

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G2", "E6", "E7", "BC")
MIN_RANK = {"A": 2, "B": 3, "C": 2, "D": 4, "BC": 1}
FIXED_RANK = {"G2": 2, "E6": 6, "E7": 7}


class RootSystemError(ValueError):
    """Unsupported family/rank or a bad index."""


@dataclass(frozen=True)
class Weight:
    """A weight in the fundamental-weight basis."""

    fw: tuple[Q, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fw, other.fw)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fw, other.fw)))

    def scale(self, c) -> "Weight":
        return Weight(tuple(Q(c) * a for a in self.fw))

    def as_ints(self) -> tuple[int, ...]:
        if any(x.denominator != 1 for x in self.fw):
            raise ValueError("weight is not integral")
        return tuple(int(x) for x in self.fw)


def _gram(family: str, n: int) -> list[list[Q]]:
    g = [[Q(0)] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = Q(v)

    if family in ("A", "D", "E6", "E7"):
        for i in range(n):
            g[i][i] = Q(2)
        if family == "A":
            for i in range(n - 1):
                link(i, i + 1, -1)
        elif family == "D":
            for i in range(n - 2):
                link(i, i + 1, -1)
            link(n - 3, n - 1, -1)
        else:
            # Bourbaki: 1-3-4-5-6(-7), 2 attached to 4
            chain = [0, 2, 3, 4, 5] + ([6] if family == "E7" else [])
            for a, b in zip(chain, chain[1:]):
                link(a, b, -1)
            link(1, 3, -1)
    elif family in ("B", "BC"):
        for i in range(n - 1):
            g[i][i] = Q(2)
            if i < n - 2:
                link(i, i + 1, -1)
        g[n - 1][n - 1] = Q(1)
        if n > 1:
            link(n - 2, n - 1, -1)
    elif family == "C":
        for i in range(n - 1):
            g[i][i] = Q(2)
            if i < n - 2:
                link(i, i + 1, -1)
        g[n - 1][n - 1] = Q(4)
        link(n - 2, n - 1, -2)
    elif family == "G2":
        g[0][0], g[1][1] = Q(2), Q(6)
        link(0, 1, -3)
    return g


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Breadth-first closure from the simple roots using root strings."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - sum(beta[k] * cartan[k][i] for k in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    complex_as_real: bool
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Q, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    highest_root_weight_coords: tuple[int, ...]
    conjugation: tuple[int, ...]
    _cartan_inv: tuple[tuple[Q, ...], ...] = field(repr=False, compare=False)
    _root_set: frozenset = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        """Number of simple roots (twice the rank for doubled diagrams)."""
        return len(self.cartan)

    @property
    def indices(self) -> range:
        return range(1, self.size + 1)

    @property
    def rho(self) -> Weight:
        return Weight((Q(1),) * self.size)

    @property
    def highest_weight(self) -> Weight:
        return Weight(tuple(Q(r) for r in self.highest_root_weight_coords))

    def label(self, i: int) -> str:
        self._check(i)
        if i > self.rank:
            return f"{i - self.rank}'"
        return str(i)

    def parse_index(self, text: str) -> int:
        s = text.strip()
        primed = s.endswith("'")
        i = int(s.rstrip("'"))
        if primed:
            if not self.complex_as_real:
                raise RootSystemError(f"primed index {s} needs a doubled diagram")
            i += self.rank
        self._check(i)
        return i

    def conj(self, i: int) -> int:
        return self.conjugation[i - 1]

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.size:
            raise RootSystemError(f"simple root index {i} out of range 1..{self.size}")

    def is_root(self, coords: Sequence[int]) -> bool:
        c = tuple(coords)
        return c in self._root_set or tuple(-x for x in c) in self._root_set

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    def simple_root(self, i: int) -> Root:
        self._check(i)
        return tuple(int(k == i - 1) for k in range(self.size))

    def root_weight(self, coords: Sequence) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        n = self.size
        nz = [(k, coords[k]) for k in range(n) if coords[k]]
        if all(isinstance(c, int) for _, c in nz):
            return Weight(tuple(Q(sum(c * self.cartan[k][j] for k, c in nz)) for j in range(n)))
        return Weight(tuple(sum((Q(c) * self.cartan[k][j] for k, c in nz), Q(0)) for j in range(n)))

    def weight_root_coords(self, w: Weight) -> tuple[Q, ...]:
        n = self.size
        return tuple(sum((w.fw[k] * self._cartan_inv[k][j] for k in range(n)), Q(0)) for j in range(n))

    def inner(self, x: Sequence, y: Sequence) -> Q:
        """Invariant form on root coordinates."""
        n = self.size
        return sum(
            (Q(x[i]) * Q(y[j]) * self.gram[i][j] for i in range(n) for j in range(n) if x[i] and y[j]),
            Q(0),
        )

    def cartan_pairing_roots(self, i: int, j: int) -> int:
        """``<alpha_i, alpha_j>`` in the Cartan normalization."""
        self._check(i)
        self._check(j)
        return self.cartan[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "complex_as_real": self.complex_as_real}


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int, complex_as_real: bool = False) -> RootSystem:
    family = family.upper()
    if family not in FAMILIES:
        raise RootSystemError(f"unsupported family {family!r}")
    if family in FIXED_RANK:
        if rank != FIXED_RANK[family]:
            raise RootSystemError(f"{family} has rank {FIXED_RANK[family]}, got {rank}")
    elif rank < MIN_RANK[family]:
        raise RootSystemError(f"{family}{rank} is below the supported bound {family}{MIN_RANK[family]}")

    g1 = _gram(family, rank)
    c1 = [[int(2 * g1[i][j] / g1[j][j]) for j in range(rank)] for i in range(rank)]
    pos1 = _positive_roots(c1)
    if family == "BC":
        shorts = [r for r in pos1 if _norm(g1, r) == 1]
        pos1 = sorted(set(pos1) | {tuple(2 * x for x in r) for r in shorts}, key=lambda r: (sum(r), r))
    top = max(pos1, key=lambda r: (sum(r), r))

    if complex_as_real:
        n = 2 * rank
        gram = [[Q(0)] * n for _ in range(n)]
        cartan = [[0] * n for _ in range(n)]
        for i in range(rank):
            for j in range(rank):
                for off in (0, rank):
                    gram[i + off][j + off] = g1[i][j]
                    cartan[i + off][j + off] = c1[i][j]
        zeros = (0,) * rank
        pos = [r + zeros for r in pos1] + [zeros + r for r in pos1]
        highest = top + zeros
        conj = tuple(list(range(rank + 1, n + 1)) + list(range(1, rank + 1)))
    else:
        n = rank
        gram, cartan, pos, highest = g1, c1, pos1, top
        conj = tuple(range(1, n + 1))

    pos = sorted(pos, key=lambda r: (sum(r), r))
    hw = tuple(sum(highest[k] * cartan[k][j] for k in range(n)) for j in range(n))
    inv = inverse([[Q(x) for x in row] for row in cartan])
    return RootSystem(
        family=family,
        rank=rank,
        complex_as_real=complex_as_real,
        cartan=tuple(map(tuple, cartan)),
        gram=tuple(map(tuple, gram)),
        positive_roots=tuple(pos),
        highest_root=highest,
        highest_root_weight_coords=hw,
        conjugation=conj,
        _cartan_inv=tuple(map(tuple, inv)),
        _root_set=frozenset(pos),
    )


def _norm(g, r) -> Q:
    n = len(g)
    return sum((r[i] * r[j] * g[i][j] for i in range(n) for j in range(n)), Q(0))


def as_weight(rs: RootSystem, w: Weight | Sequence[int]) -> Weight:
    """Accept a ``Weight`` or simple-root coordinates of a root."""
    return w if isinstance(w, Weight) else rs.root_weight(w)


def pairing(rs: RootSystem, w: Weight | Sequence[int], i: int) -> Q:
    """``<w, alpha_i> = 2(w, alpha_i)/(alpha_i, alpha_i)``."""
    rs._check(i)
    return as_weight(rs, w).fw[i - 1]


def reflect(rs: RootSystem, w: Weight | Sequence[int], i: int) -> Weight:
    """Simple reflection ``s_i(w) = w - <w, alpha_i> alpha_i``."""
    w = as_weight(rs, w)
    c = pairing(rs, w, i)
    if not c:
        return w
    row = rs.cartan[i - 1]
    return Weight(tuple(x - c * a if a else x for x, a in zip(w.fw, row)))


def reflect_root(rs: RootSystem, coords: Sequence[int], i: int) -> Root:
    """Simple reflection on simple-root coordinates."""
    c = sum(coords[k] * rs.cartan[k][i - 1] for k in range(rs.size))
    out = list(coords)
    out[i - 1] -= c
    return tuple(out)


def affine_action(rs: RootSystem, word: Iterable[int], w: Weight | Sequence[int]) -> Weight:
    """Dot action ``word . w = word(w + rho) - rho``.

    The letters of ``word`` are applied in the order written, so ``[a, b]``
    computes ``s_b(s_a(w + rho)) - rho``.
    """
    v = as_weight(rs, w) + rs.rho
    for i in word:
        v = reflect(rs, v, i)
    return v - rs.rho
