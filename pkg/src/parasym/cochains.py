"""Structure-constant Lie algebras and the Kostant cochain complex.

Cochains live in ``Lambda^k (g_-)^* (x) g`` and are stored sparsely as
``{(I, m): coeff}`` where ``I`` is an increasing tuple of positions in the
``g_-`` basis and ``m`` a basis index of ``g``.  The codifferential is the
``p_+``-chain boundary transported through the Killing pairing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exact import inverse, nullspace, rank, solve, transpose

Vec = dict  # sparse vector {basis index: Fraction}
Cochain = dict  # {(I, m): Fraction}


class AlgebraError(ValueError):
    pass


def _add(acc: dict, key, val) -> None:
    if not val:
        return
    v = acc.get(key, 0) + val
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def vec_add(a: Mapping, b: Mapping, scale: Q = Q(1)) -> Vec:
    out = dict(a)
    for k, v in b.items():
        _add(out, k, scale * v)
    return out


def vec_scale(a: Mapping, s) -> Vec:
    return {k: s * v for k, v in a.items()} if s else {}


@dataclass
class StructAlgebra:
    """A Lie algebra given by exact structure constants on a fixed basis."""

    dim: int
    basis_names: list[str]
    brackets: dict[tuple[int, int], Vec]  # only i < j stored

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return vec_scale(self.brackets.get((j, i), {}), -1)

    def bracket(self, x: Mapping, y: Mapping) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    _add(out, k, a * b * c)
        return out

    def antisymmetry_ok(self) -> bool:
        return all(i < j for i, j in self.brackets)

    def jacobi_failures(self, limit: int = 1) -> list[tuple[int, int, int]]:
        bad = []
        e = lambda i: {i: Q(1)}
        for i, j, k in itertools.combinations(range(self.dim), 3):
            s = vec_add(
                vec_add(self.bracket(e(i), self.bracket_basis(j, k)), self.bracket(e(j), self.bracket_basis(k, i))),
                self.bracket(e(k), self.bracket_basis(i, j)),
            )
            if s:
                bad.append((i, j, k))
                if len(bad) >= limit:
                    break
        return bad

    @cached_property
    def killing(self) -> list[list[Q]]:
        n = self.dim
        ad = [[self.bracket_basis(x, l) for l in range(n)] for x in range(n)]
        out = [[Q(0)] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                t = Q(0)
                for l in range(n):
                    for k, c in ad[x][l].items():
                        t += c * ad[y][k].get(l, 0)
                out[x][y] = out[y][x] = t
        return out

    def to_json(self) -> list:
        rows = []
        for (i, j), v in sorted(self.brackets.items()):
            rows.append([i, j, [[str(c), k] for k, c in sorted(v.items())]])
        return rows


def algebra_from_matrices(mats: Sequence, names: Sequence[str], coords) -> StructAlgebra:
    """Structure constants of a matrix Lie algebra; ``coords`` maps a matrix to a basis vector."""
    n = len(mats)
    br = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = _commutator(mats[i], mats[j])
            v = coords(c)
            if v:
                br[(i, j)] = v
    return StructAlgebra(n, list(names), br)


def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m) if a[i][k] and b[k][j]), Q(0)) for j in range(p)] for i in range(n)]


def _commutator(a, b):
    ab, ba = _matmul(a, b), _matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


# -- sl(N) with a root-labelled basis ----------------------------------------


@dataclass
class SlRealization:
    """``sl(N)`` on the basis ``E_ij`` (i != j) followed by ``H_k = E_kk - E_k+1,k+1``."""

    size: int
    entries: list[tuple[int, int]] = field(init=False)
    algebra: StructAlgebra = field(init=False)
    roots: list[tuple[int, ...]] = field(init=False)

    def __post_init__(self):
        N = self.size
        self.entries = [(i, j) for i in range(N) for j in range(N) if i != j]
        names = [f"E{i+1}{j+1}" for i, j in self.entries] + [f"H{k}" for k in range(1, N)]
        mats = [self._unit(i, j) for i, j in self.entries]
        for k in range(N - 1):
            h = self._unit(k, k)
            h[k + 1][k + 1] = Q(-1)
            mats.append(h)
        self.algebra = algebra_from_matrices(mats, names, self.coords)
        self.roots = [_root(i, j, N - 1) for i, j in self.entries] + [(0,) * (N - 1)] * (N - 1)

    def _unit(self, i, j):
        m = [[Q(0)] * self.size for _ in range(self.size)]
        m[i][j] = Q(1)
        return m

    @cached_property
    def _index(self):
        return {e: k for k, e in enumerate(self.entries)}

    def coords(self, mat) -> Vec:
        out: Vec = {}
        for (i, j), k in self._index.items():
            if mat[i][j]:
                out[k] = Q(mat[i][j])
        base = len(self.entries)
        run = Q(0)
        for k in range(self.size - 1):
            run += mat[k][k]
            if run:
                out[base + k] = run
        if sum((mat[k][k] for k in range(self.size)), Q(0)):
            raise AlgebraError("matrix is not traceless")
        return out

    def matrix(self, v: Mapping) -> list[list[Q]]:
        m = [[Q(0)] * self.size for _ in range(self.size)]
        base = len(self.entries)
        for k, c in v.items():
            if k < base:
                i, j = self.entries[k]
                m[i][j] += c
            else:
                h = k - base
                m[h][h] += c
                m[h + 1][h + 1] -= c
        return m


def _root(i: int, j: int, rank: int) -> tuple[int, ...]:
    c = [0] * rank
    if i < j:
        for k in range(i, j):
            c[k] = 1
    else:
        for k in range(j, i):
            c[k] = -1
    return tuple(c)


# -- graded algebra and the Kostant complex -----------------------------------


@dataclass
class GradedAlgebra:
    """A Lie algebra with a root label per basis vector and a grading set ``xi``."""

    algebra: StructAlgebra
    roots: list[tuple[int, ...]]
    xi: tuple[int, ...]

    def height(self, k: int, subset: Iterable[int] | None = None) -> int:
        s = self.xi if subset is None else tuple(subset)
        return sum(self.roots[k][i - 1] for i in s)

    def part(self, sign: str, subset: Iterable[int] | None = None) -> list[int]:
        s = tuple(self.xi if subset is None else subset)
        test = {"minus": lambda h: h < 0, "plus": lambda h: h > 0, "zero": lambda h: h == 0, "p": lambda h: h >= 0}[sign]
        return [k for k in range(self.algebra.dim) if test(self.height(k, s))]


class KostantComplex:
    def __init__(self, ga: GradedAlgebra):
        self.ga = ga
        self.g = ga.algebra
        self.minus = ga.part("minus")
        self.plus = ga.part("plus")
        self.pos = {k: p for p, k in enumerate(self.minus)}
        B = self.g.killing
        gram = [[B[z][x] for x in self.minus] for z in self.plus]
        if len(self.plus) != len(self.minus) or rank(gram) < len(self.minus):
            raise AlgebraError("Killing pairing between g_- and p_+ is degenerate")
        # Z_l = sum_z c_z e_z with sum_z c_z gram[z][m] = delta_lm, so c is row l of gram^-1
        gi = inverse(gram)
        self.duals: list[Vec] = [
            {self.plus[z]: gi[l][z] for z in range(len(self.plus)) if gi[l][z]} for l in range(len(self.minus))
        ]
        self._check_duals()

    def _check_duals(self):
        B = self.g.killing
        for l, z in enumerate(self.duals):
            for m, x in enumerate(self.minus):
                val = sum((c * B[k][x] for k, c in z.items()), Q(0))
                if val != (1 if l == m else 0):
                    raise AlgebraError("dual basis construction failed")

    # weights
    def weight(self, I: Sequence[int], m: int) -> tuple[int, ...]:
        r = list(self.ga.roots[m])
        for p in I:
            rr = self.ga.roots[self.minus[p]]
            r = [a - b for a, b in zip(r, rr)]
        return tuple(r)

    def homogeneity(self, I: Sequence[int], m: int) -> int:
        return sum(self.weight(I, m)[i - 1] for i in self.ga.xi)

    def basis(self, k: int, weight: tuple[int, ...] | None = None) -> list[tuple[tuple[int, ...], int]]:
        out = []
        for I in itertools.combinations(range(len(self.minus)), k):
            for m in range(self.g.dim):
                if weight is None or self.weight(I, m) == weight:
                    out.append((I, m))
        return out

    def minus_coords(self, v: Mapping) -> dict[int, Q]:
        out = {}
        for k, c in v.items():
            if k not in self.pos:
                raise AlgebraError("vector leaves g_-")
            out[self.pos[k]] = c
        return out

    def plus_to_dual_coords(self, v: Mapping) -> dict[int, Q]:
        """Coordinates of ``v`` in p_+ with respect to the dual basis ``Z_l``."""
        B = self.g.killing
        out = {}
        for l, x in enumerate(self.minus):
            c = sum((a * B[k][x] for k, a in v.items()), Q(0))
            if c:
                out[l] = c
        return out

    # evaluation of a cochain on g_- basis positions
    @staticmethod
    def evaluate(phi: Mapping, args: Sequence[int]) -> Vec:
        if len(set(args)) < len(args):
            return {}
        order = sorted(range(len(args)), key=lambda t: args[t])
        sign = _perm_sign(order)
        key = tuple(args[t] for t in order)
        out: Vec = {}
        for (I, m), c in phi.items():
            if I == key:
                _add(out, m, sign * c)
        return out

    def differential(self, phi: Mapping, k: int) -> Cochain:
        """Chevalley-Eilenberg differential of ``g_-`` with values in ``g``."""
        by_I: dict[tuple, Vec] = {}
        for (I, m), c in phi.items():
            by_I.setdefault(I, {})[m] = c
        out: Cochain = {}
        n = len(self.minus)
        br = {}

        def mb(a, b):
            key = (a, b)
            if key not in br:
                br[key] = self.minus_coords(self.g.bracket_basis(self.minus[a], self.minus[b]))
            return br[key]

        for J in itertools.combinations(range(n), k + 1):
            val: Vec = {}
            for i in range(k + 1):
                rest = J[:i] + J[i + 1 :]
                v = by_I.get(rest)
                if v:
                    w = self.g.bracket({self.minus[J[i]]: Q(1)}, v)
                    for mm, c in w.items():
                        _add(val, mm, (-1) ** i * c)
            for a in range(k + 1):
                for b in range(a + 1, k + 1):
                    rest = [J[t] for t in range(k + 1) if t not in (a, b)]
                    for p, c in mb(J[a], J[b]).items():
                        args = [p] + rest
                        if len(set(args)) < len(args):
                            continue
                        order = sorted(range(len(args)), key=lambda t: args[t])
                        key = tuple(args[t] for t in order)
                        v = by_I.get(key)
                        if v:
                            s = (-1) ** (a + b) * _perm_sign(order) * c
                            for mm, cc in v.items():
                                _add(val, mm, s * cc)
            for mm, c in val.items():
                out[(J, mm)] = c
        return out

    def codifferential(self, phi: Mapping) -> Cochain:
        """Kostant codifferential, lowering cochain degree by one."""
        out: Cochain = {}
        for (I, m), c in phi.items():
            k = len(I)
            a = {m: c}
            for i in range(k):
                rest = I[:i] + I[i + 1 :]
                w = self.g.bracket(self.duals[I[i]], a)
                for mm, cc in w.items():
                    _add(out, (rest, mm), (-1) ** i * cc)
            for i in range(k):
                for j in range(i + 1, k):
                    rest = [I[t] for t in range(k) if t not in (i, j)]
                    zz = self.g.bracket(self.duals[I[i]], self.duals[I[j]])
                    for l, cc in self.plus_to_dual_coords(zz).items():
                        args = [l] + rest
                        if len(set(args)) < len(args):
                            continue
                        order = sorted(range(len(args)), key=lambda t: args[t])
                        key = tuple(args[t] for t in order)
                        s = (-1) ** (i + j + 1) * _perm_sign(order) * cc * c
                        _add(out, (key, m), s)
        return out

    def codifferential_formula(self, phi: Mapping) -> Cochain:
        """Second route on 2-cochains:
        ``X -> sum_l [Z_l, phi(xi_l, X)] + 1/2 sum_l phi([Z_l, X]_-, xi_l)``."""
        n = len(self.minus)
        out: Cochain = {}
        for x in range(n):
            val: Vec = {}
            for l in range(n):
                v = self.evaluate(phi, (l, x))
                if v:
                    val = vec_add(val, self.g.bracket(self.duals[l], v))
                w = self.g.bracket(self.duals[l], {self.minus[x]: Q(1)})
                wm = {self.pos[k]: c for k, c in w.items() if k in self.pos}
                for p, c in wm.items():
                    val = vec_add(val, self.evaluate(phi, (p, l)), Q(1, 2) * c)
            for mm, c in val.items():
                out[((x,), mm)] = c
        return out

    # -- harmonic projection ----------------------------------------------

    def _block_matrix(self, op, src, dst):
        idx = {b: r for r, b in enumerate(dst)}
        cols = []
        for b in src:
            img = op({b: Q(1)})
            col = [Q(0)] * len(dst)
            for key, c in img.items():
                if key not in idx:
                    raise AlgebraError("operator left its weight block")
                col[idx[key]] = c
            cols.append(col)
        if not cols:
            return [[] for _ in dst]
        return transpose(cols)

    def block_operators(self, weight):
        c1, c2, c3 = self.basis(1, weight), self.basis(2, weight), self.basis(3, weight)
        return {
            "C1": c1,
            "C2": c2,
            "C3": c3,
            "d1": self._block_matrix(lambda p: self.differential(p, 1), c1, c2),
            "d2": self._block_matrix(lambda p: self.differential(p, 2), c2, c3),
            "s2": self._block_matrix(self.codifferential, c2, c1),
            "s3": self._block_matrix(self.codifferential, c3, c2),
        }

    def harmonic_basis(self, ops) -> list[list[Q]]:
        n = len(ops["C2"])
        rows = [r for r in ops["d2"]] + [r for r in ops["s2"]]
        if not rows:
            return [[Q(int(i == j)) for j in range(n)] for i in range(n)]
        return nullspace(rows)

    def harmonic_project(self, phi: Mapping) -> Cochain:
        """Projection of a 2-cochain to ``ker d ∩ ker d*`` along ``im d + im d*``."""
        blocks: dict[tuple, dict] = {}
        for (I, m), c in phi.items():
            blocks.setdefault(self.weight(I, m), {})[(I, m)] = c
        out: Cochain = {}
        for w, part in blocks.items():
            ops = self.block_operators(w)
            C2 = ops["C2"]
            hb = self.harmonic_basis(ops)
            if not hb:
                continue
            cols = [list(col) for col in transpose(ops["d1"])] if ops["C1"] else []
            cols += [list(h) for h in hb]
            cols += [list(col) for col in transpose(ops["s3"])] if ops["C3"] else []
            na = len(ops["C1"])
            if rank(transpose(cols)) != len(C2):
                raise AlgebraError(f"Hodge decomposition not direct at weight {w}")
            target = [part.get(b, Q(0)) for b in C2]
            sol = solve(transpose(cols), target)
            if sol is None:
                raise AlgebraError("cochain outside the Hodge decomposition")
            coef = sol[na : na + len(hb)]
            for r, b in enumerate(C2):
                v = sum((coef[t] * hb[t][r] for t in range(len(hb))), Q(0))
                if v:
                    out[b] = v
        return out


def _perm_sign(order: Sequence[int]) -> int:
    s = 1
    seen = list(order)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                s = -s
    return s


def sl_graded(size: int, xi: Sequence[int]) -> tuple[SlRealization, GradedAlgebra]:
    r = SlRealization(size)
    return r, GradedAlgebra(r.algebra, r.roots, tuple(sorted(xi)))
