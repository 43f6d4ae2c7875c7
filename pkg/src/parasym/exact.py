"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``.  Everything here is small and
dense; the callers keep problem sizes down by splitting along weights.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Matrix = list[list[Q]]
Vector = list[Q]


def parse_rational(text: str | int | Q) -> Q:
    """Parse ``"p/q"`` or an integer literal; floats are rejected."""
    if isinstance(text, Q):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Q(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational literal: {text!r}")
    s = text.strip()
    if not s or any(c in s for c in ".eE"):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Q(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(x: Q) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Q(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[Q(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Q(1)
    return out


def transpose(a: Sequence[Sequence[Q]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence[Q]], b: Sequence[Sequence[Q]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Q(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Q]], v: Sequence[Q]) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Q(0)) for row in a]


def rref(a: Sequence[Sequence[Q]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: Sequence[Sequence[Q]]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[Q]], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of ``{x : a x = 0}``."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return identity(n)
    red, piv = rref(a)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_space(vectors: Sequence[Sequence[Q]]) -> Matrix:
    """Echelon basis of the span of ``vectors``."""
    if not vectors:
        return []
    return rref(vectors)[0]


def solve(a: Sequence[Sequence[Q]], b: Sequence[Q]) -> Vector | None:
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [Q(0)] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return x


def inverse(a: Sequence[Sequence[Q]]) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    red, piv = rref(aug)
    if [p for p in piv if p < n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def in_span(basis: Sequence[Sequence[Q]], v: Sequence[Q]) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def intersect(u: Sequence[Sequence[Q]], w: Sequence[Sequence[Q]]) -> Matrix:
    """Basis of span(u) ∩ span(w), both given by rows."""
    if not u or not w:
        return []
    # x u - y w = 0  ->  x u is in the intersection
    stacked = transpose([list(r) for r in u] + [[-x for x in r] for r in w])
    null = nullspace(stacked, len(u) + len(w))
    vecs = []
    for coeffs in null:
        vec = [sum((c * r[j] for c, r in zip(coeffs[: len(u)], u)), Q(0)) for j in range(len(u[0]))]
        vecs.append(vec)
    return row_space(vecs)


def integer_row(v: Sequence[Q]) -> list[int]:
    """Scale a rational vector to a primitive integer vector."""
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, Q(x).denominator)
    ints = [int(Q(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints] if g else ints
