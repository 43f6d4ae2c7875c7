"""Concrete extensions ``(alpha, iota)`` of ``(k, h)`` to ``(G, P)`` at the Lie algebra level.

``g`` is realized as ``sl(N)`` on a root-labelled basis; ``k`` is given by
structure constants and ``alpha`` by its matrix on the two bases.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .cochains import (
    GradedAlgebra,
    KostantComplex,
    SlRealization,
    StructAlgebra,
    Vec,
    vec_add,
    vec_scale,
)
from .exact import nullspace, parse_rational, rank, rref, solve, transpose
from .grading import graded_parabolic
from .kostant import CurvatureComponent, harmonic_components
from .rootsys import build_root_system


class ExtensionError(ValueError):
    """Domain failure: a hypothesis on the extension does not hold."""


class SchemaError(ValueError):
    """The input file does not follow the extension schema."""


@dataclass
class ExtensionData:
    k: StructAlgebra
    h: tuple[int, ...]
    g: SlRealization
    graded: GradedAlgebra
    alpha: list[list[Q]]  # row i = coordinates of alpha(k_i) in g
    j_generators: list[tuple[Q, ...]]
    real_form: str = "R"
    meta: dict = field(default_factory=dict)

    @property
    def xi(self) -> tuple[int, ...]:
        return self.graded.xi

    @property
    def rank(self) -> int:
        return self.g.size - 1

    def alpha_of(self, x: Mapping[int, Q]) -> Vec:
        out: Vec = {}
        for i, c in x.items():
            for m, a in enumerate(self.alpha[i]):
                if a:
                    out[m] = out.get(m, 0) + c * a
        return {m: v for m, v in out.items() if v}

    def name(self, i: int) -> str:
        return self.k.basis_names[i]


# -- loading -----------------------------------------------------------------


def _need(obj: Mapping, key: str, kind):
    if key not in obj:
        raise SchemaError(f"missing field {key!r}")
    if not isinstance(obj[key], kind):
        raise SchemaError(f"field {key!r} has the wrong type")
    return obj[key]


def _rat(text: Any) -> Q:
    try:
        return parse_rational(text)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad rational literal {text!r}") from exc


def extension_from_dict(doc: Mapping) -> ExtensionData:
    gdoc = _need(doc, "g", dict)
    family = str(_need(gdoc, "family", str)).upper()
    rnk = _need(gdoc, "rank", int)
    if family != "A":
        raise ExtensionError("only sl(N) realizations are supported for extensions")
    xi = tuple(_need(gdoc, "xi", list))
    real_form = gdoc.get("real_form", "R")
    g = SlRealization(rnk + 1)
    rb = _need(gdoc, "root_basis", list)
    if len(rb) != g.algebra.dim:
        raise SchemaError("root_basis has the wrong length")
    for entry in rb:
        k = _need(entry, "index", int)
        if not 0 <= k < g.algebra.dim or tuple(_need(entry, "root", list)) != g.roots[k]:
            raise SchemaError(f"root_basis entry {k} does not match the sl({rnk + 1}) realization")
    graded_parabolic(build_root_system("A", rnk), xi)

    kdoc = _need(doc, "k", dict)
    dim = _need(kdoc, "dim", int)
    names = kdoc.get("names") or [f"X{i + 1}" for i in range(dim)]
    if len(names) != dim:
        raise SchemaError("k names have the wrong length")
    br: dict[tuple[int, int], Vec] = {}
    for item in _need(kdoc, "brackets", list):
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError("bracket entries are [i, j, [[coeff, idx], ...]]")
        i, j, terms = item
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim and i != j):
            raise SchemaError(f"bad bracket indices {i}, {j}")
        v: Vec = {}
        for coeff, idx in terms:
            if not (isinstance(idx, int) and 0 <= idx < dim):
                raise SchemaError(f"bad bracket target {idx}")
            c = _rat(coeff)
            if c:
                v[idx] = v.get(idx, 0) + c
        if i > j:
            i, j, v = j, i, vec_scale(v, -1)
        if (i, j) in br and br[(i, j)] != v:
            raise SchemaError(f"conflicting brackets for ({i}, {j})")
        br[(i, j)] = v
    k = StructAlgebra(dim, list(names), {key: v for key, v in br.items() if v})
    bad = k.jacobi_failures()
    if bad:
        i, j, l = bad[0]
        raise SchemaError(f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[l]})")

    h = tuple(_need(doc, "h", list))
    if any(not isinstance(i, int) or not 0 <= i < dim for i in h):
        raise SchemaError("h indices out of range")
    alpha_rows = _need(doc, "alpha", list)
    if len(alpha_rows) != dim or any(len(r) != g.algebra.dim for r in alpha_rows):
        raise SchemaError("alpha must be dim(k) x dim(g)")
    alpha = [[_rat(x) for x in row] for row in alpha_rows]
    jg = []
    for row in doc.get("j_generators", []):
        if len(row) != len(xi):
            raise SchemaError("j_generators rows must have one entry per Xi index")
        jg.append(tuple(_rat(x) for x in row))
    return ExtensionData(
        k=k,
        h=h,
        g=g,
        graded=GradedAlgebra(g.algebra, g.roots, tuple(sorted(xi))),
        alpha=alpha,
        j_generators=jg,
        real_form=real_form,
        meta=dict(doc.get("meta", {})),
    )


def load_extension(path: str | Path) -> ExtensionData:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    return extension_from_dict(doc)


def example_path() -> Path:
    """Location of the bundled seventeen-dimensional example on sl(6)."""
    from importlib.resources import files

    return Path(str(files("parasym") / "data" / "sl6_extension.json"))


def load_example() -> ExtensionData:
    return load_extension(example_path())


def extension_to_dict(e: ExtensionData) -> dict:
    return {
        "g": {
            "family": "A",
            "rank": e.rank,
            "real_form": e.real_form,
            "xi": list(e.xi),
            "root_basis": [{"root": list(r), "index": k} for k, r in enumerate(e.g.roots)],
        },
        "k": {"dim": e.k.dim, "names": list(e.k.basis_names), "brackets": e.k.to_json()},
        "h": list(e.h),
        "alpha": [[str(x) for x in row] for row in e.alpha],
        "j_generators": [[str(x) for x in row] for row in e.j_generators],
        "meta": e.meta,
    }


# -- validation ----------------------------------------------------------------


@dataclass
class ValidationReport:
    isotropy_in_p: bool
    isomorphism: bool
    equivariant: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.isotropy_in_p and self.isomorphism and self.equivariant


def _minus_matrix(e: ExtensionData) -> list[list[Q]]:
    minus = e.graded.part("minus")
    return [[e.alpha[i][m] for i in range(e.k.dim)] for m in minus]


def validate_extension(e: ExtensionData) -> ValidationReport:
    failures = []
    minus = e.graded.part("minus")
    iso_p = True
    for i in e.h:
        for m in minus:
            if e.alpha[i][m]:
                iso_p = False
                failures.append(f"condition 1: alpha({e.name(i)}) has a component in {e.g.algebra.basis_names[m]}")
                break
    A = _minus_matrix(e)
    iso = rank(A) == len(minus) and e.k.dim - len(e.h) == len(minus)
    if not iso:
        failures.append(
            f"condition 2: alpha induces a map of rank {rank(A)} from a space of dimension "
            f"{e.k.dim - len(e.h)} to g/p of dimension {len(minus)}"
        )
    eq = True
    for i in e.h:
        for j in range(e.k.dim):
            lhs = e.g.algebra.bracket(e.alpha_of({i: Q(1)}), e.alpha_of({j: Q(1)}))
            rhs = e.alpha_of(e.k.bracket_basis(i, j))
            if lhs != rhs:
                eq = False
                failures.append(f"condition 3: [alpha({e.name(i)}), alpha({e.name(j)})] != alpha([{e.name(i)}, {e.name(j)}])")
    return ValidationReport(iso_p, iso, eq, failures)


# -- curvature -----------------------------------------------------------------


@dataclass
class CurvatureTensor:
    ext: ExtensionData
    complex: KostantComplex
    lifts: list[Vec]  # lifts[l] in k maps to xi_l modulo p
    cochain: dict

    def on_k(self, x: Mapping[int, Q], y: Mapping[int, Q]) -> Vec:
        return kappa(self.ext, x, y)

    def entries(self):
        """Nonzero entries ``((l, m), g-index, coeff, homogeneity)``."""
        out = []
        for (I, n), c in sorted(self.cochain.items()):
            out.append((I, n, c, self.complex.homogeneity(I, n)))
        return out


def kappa(e: ExtensionData, x: Mapping[int, Q], y: Mapping[int, Q]) -> Vec:
    ax, ay = e.alpha_of(x), e.alpha_of(y)
    return vec_add(e.g.algebra.bracket(ax, ay), e.alpha_of(e.k.bracket(x, y)), Q(-1))


def curvature(e: ExtensionData, check: bool = True) -> CurvatureTensor:
    if check:
        rep = validate_extension(e)
        if not rep.ok:
            raise ExtensionError("extension is not valid: " + "; ".join(rep.failures))
    kc = KostantComplex(e.graded)
    A = _minus_matrix(e)
    lifts = []
    for l in range(len(kc.minus)):
        target = [Q(int(l == r)) for r in range(len(kc.minus))]
        x = solve(A, target)
        if x is None:
            raise ExtensionError("alpha does not reach g/p")
        lifts.append({i: c for i, c in enumerate(x) if c})
    cochain = {}
    for l, m in itertools.combinations(range(len(kc.minus)), 2):
        for n, c in kappa(e, lifts[l], lifts[m]).items():
            cochain[((l, m), n)] = c
    return CurvatureTensor(e, kc, lifts, cochain)


def descends(e: ExtensionData) -> bool:
    """The curvature vanishes when one argument lies in ``h``."""
    return all(not kappa(e, {i: Q(1)}, {j: Q(1)}) for i in e.h for j in range(e.k.dim))


# -- harmonic part -------------------------------------------------------------


@dataclass
class HarmonicReport:
    is_regular: bool
    is_normal: bool
    harmonic_part: dict
    component_labels: list[tuple[int, int]]
    weights: list[tuple[int, ...]]


def label_weight(gp_components: Sequence[CurvatureComponent], xi: Sequence[int], weight: Sequence[int]):
    """Components whose g_0-module can contain a vector of the given weight."""
    out = []
    for c in gp_components:
        low = tuple(sum(v[k] for v in c.lowvec) for k in range(len(weight)))
        diff = [w - l for w, l in zip(weight, low)]
        if all(diff[i - 1] == 0 for i in xi) and all(d >= 0 for d in diff):
            out.append(c.pair)
    return out


def harmonic_decompose(t: CurvatureTensor) -> HarmonicReport:
    kc = t.complex
    regular = all(kc.homogeneity(I, n) > 0 for (I, n) in t.cochain)
    normal = not kc.codifferential(t.cochain)
    h = kc.harmonic_project(t.cochain)
    gp = graded_parabolic(build_root_system("A", t.ext.rank), t.ext.xi)
    comps = harmonic_components(gp)
    weights = sorted({kc.weight(I, n) for (I, n) in h})
    labels = sorted({p for w in weights for p in label_weight(comps, t.ext.xi, w)})
    return HarmonicReport(regular, normal, h, labels, weights)


# -- symmetry data -------------------------------------------------------------


@dataclass
class SymmetryData:
    phi_k: tuple[int, ...]
    theta_k: tuple[int, ...]
    lambda_k: tuple[int, ...]
    h_plus_basis: list[Vec]
    phi_within_imu: bool
    imu_bound: tuple[int, ...]


def _span_coords(e: ExtensionData, idx: Sequence[int]) -> list[list[Q]]:
    return [list(e.alpha[i]) for i in idx]


def analyze_symmetry_data(e: ExtensionData, harmonic: HarmonicReport | None = None) -> SymmetryData:
    g = e.graded
    plus = set(g.part("plus"))
    not_plus = [m for m in range(g.algebra.dim) if m not in plus]
    # elements of alpha(h) lying in p_+: combinations with no component outside p_+
    rows = _span_coords(e, e.h)
    coeffs = nullspace([[rows[r][m] for r in range(len(rows))] for m in not_plus], len(rows)) if rows else []
    hplus = []
    for cvec in coeffs:
        v = {}
        for r, c in enumerate(cvec):
            for m, a in enumerate(rows[r]):
                if a:
                    v[m] = v.get(m, 0) + c * a
        hplus.append({m: x for m, x in v.items() if x})
    gp = graded_parabolic(build_root_system("A", e.rank), e.xi)
    from .grading import grading_modules

    mods = grading_modules(gp)
    phi = set()
    for v in hplus:
        for m in v:
            r = g.roots[m]
            for i in e.xi:
                simple = tuple(int(k == i - 1) for k in range(e.rank))
                mod = next(md for md in mods if simple in md.members)
                if r in mod.members:
                    phi.add(i)
    theta = tuple(i for k, i in enumerate(e.xi) if all(jg[k] == 1 for jg in e.j_generators))
    lam = tuple(i for i in e.xi if i not in phi and i not in theta)
    if harmonic is None:
        harmonic = harmonic_decompose(curvature(e))
    bound = set(e.xi)
    for pair in harmonic.component_labels:
        c = next(c for c in harmonic_components(gp) if c.pair == pair)
        bound &= set(c.i_mu)
    return SymmetryData(tuple(sorted(phi)), theta, lam, hplus, phi <= bound, tuple(sorted(bound)))


# -- reduction -----------------------------------------------------------------


@dataclass
class Reduction:
    extension: ExtensionData
    vertical_fiber: list[tuple[int, ...]]  # roots of g_{Xi',0} / (g_{Xi',0} ∩ p)
    horizontal: list[tuple[int, ...]]  # roots of g_{Xi',-}


def reduce_geometry(e: ExtensionData, xi_prime: Iterable[int]) -> Reduction:
    xp = tuple(sorted(set(xi_prime)))
    if not set(xp) <= set(e.xi):
        raise ExtensionError("Xi' must be a subset of Xi")
    g = e.graded
    for i in e.h:
        for m, a in enumerate(e.alpha[i]):
            if a and g.height(m, xp) > 0:
                raise ExtensionError(
                    f"alpha({e.name(i)}) has a component in {e.g.algebra.basis_names[m]} "
                    f"(root {g.roots[m]}) outside q_Xi'"
                )
    new_alpha = [[a if g.height(m, xp) <= 0 else Q(0) for m, a in enumerate(row)] for row in e.alpha]
    red = ExtensionData(e.k, e.h, e.g, e.graded, new_alpha, list(e.j_generators), e.real_form, dict(e.meta))
    fiber = sorted({g.roots[m] for m in range(g.algebra.dim) if g.height(m, xp) == 0 and g.height(m) < 0})
    horiz = sorted({g.roots[m] for m in range(g.algebra.dim) if g.height(m, xp) < 0})
    return Reduction(red, fiber, horiz)


def congruent_mod_p(a: ExtensionData, b: ExtensionData) -> bool:
    minus = a.graded.part("minus")
    return all(a.alpha[i][m] == b.alpha[i][m] for i in range(a.k.dim) for m in minus)


# -- isotropy normalization -----------------------------------------------------


def _matexp_nilpotent(y):
    n = len(y)
    out = [[Q(int(i == j)) for j in range(n)] for i in range(n)]
    term = [row[:] for row in out]
    for k in range(1, n + 1):
        term = [[sum((term[i][t] * y[t][j] for t in range(n) if term[i][t] and y[t][j]), Q(0)) / k for j in range(n)] for i in range(n)]
        if not any(any(r) for r in term):
            break
        out = [[a + b for a, b in zip(r, s)] for r, s in zip(out, term)]
    return out


def _mm(a, b):
    n = len(a)
    return [[sum((a[i][t] * b[t][j] for t in range(n) if a[i][t] and b[t][j]), Q(0)) for j in range(n)] for i in range(n)]


def conjugate(e: ExtensionData, p) -> ExtensionData:
    """``Ad_p`` applied to alpha, for an invertible unipotent matrix ``p``."""
    pinv = _inverse_unipotent(p)
    rows = []
    for i in range(e.k.dim):
        m = e.g.matrix({c: v for c, v in enumerate(e.alpha[i]) if v})
        mm = _mm(_mm(p, m), pinv)
        v = e.g.coords(mm)
        rows.append([v.get(c, Q(0)) for c in range(e.g.algebra.dim)])
    return ExtensionData(e.k, e.h, e.g, e.graded, rows, list(e.j_generators), e.real_form, dict(e.meta))


def _inverse_unipotent(p):
    n = len(p)
    nil = [[p[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    out = [[Q(int(i == j)) for j in range(n)] for i in range(n)]
    term = [row[:] for row in out]
    for _ in range(n):
        term = [[-x for x in r] for r in _mm(term, nil)]
        if not any(any(r) for r in term):
            break
        out = [[a + b for a, b in zip(r, s)] for r, s in zip(out, term)]
    return out


@dataclass
class Normalization:
    conjugator: list[list[Q]]  # p with Ad_{p^-1} alpha(h) inside q_Lambda
    steps: list[Vec]  # Y_1, Y_2, ... by Lambda-height
    extension: ExtensionData
    obstruction: str | None = None

    @property
    def trivial(self) -> bool:
        return not any(self.steps)


def _root_allowed(roots_ok, r):
    return roots_ok is None or r in roots_ok


def normalize_isotropy(
    e: ExtensionData, lam: Iterable[int], m_roots: Iterable[Sequence[int]] | None = None
) -> Normalization:
    """Height-by-height search for ``p = exp(Y_1) exp(Y_2) ...`` with
    ``Y_j`` in ``m ∩ g_{Lambda, j}`` moving ``alpha(h)`` into ``q_Lambda``."""
    lam = tuple(sorted(lam))
    g = e.graded
    allowed = None if m_roots is None else {tuple(r) for r in m_roots}
    N = e.g.size
    total = [[Q(int(i == j)) for j in range(N)] for i in range(N)]
    steps: list[Vec] = []
    cur = e
    top = max((g.height(m, lam) for m in range(g.algebra.dim)), default=0)
    for j in range(1, top + 1):
        unknown = [m for m in range(g.algebra.dim) if g.height(m, lam) == j and _root_allowed(allowed, g.roots[m])]
        target = [m for m in range(g.algebra.dim) if g.height(m, lam) == j]
        rows, rhs = [], []
        for i in cur.h:
            z = cur.alpha_of({i: Q(1)})
            z0 = {m: c for m, c in z.items() if g.height(m, lam) == 0}
            zj = {m: c for m, c in z.items() if g.height(m, lam) == j}
            cols = [g.algebra.bracket({u: Q(1)}, z0) for u in unknown]
            for t in target:
                rows.append([col.get(t, Q(0)) for col in cols])
                rhs.append(zj.get(t, Q(0)))
        if not any(rhs):
            steps.append({})
            continue
        sol = solve(rows, rhs) if unknown else None
        if sol is None:
            bad = sorted({g.roots[t] for t, r in zip(target * len(cur.h), rhs) if r})
            return Normalization(total, steps, cur, f"inconsistent at Lambda-height {j}, roots {bad}")
        y = {u: c for u, c in zip(unknown, sol) if c}
        steps.append(y)
        # Ad_{exp(-Y)} removes the height-j part
        ey = _matexp_nilpotent(e.g.matrix(y))
        total = _mm(total, ey)
        cur = conjugate(cur, _inverse_unipotent(ey))
    for i in cur.h:
        for m, c in cur.alpha_of({i: Q(1)}).items():
            if g.height(m, lam) > 0:
                return Normalization(total, steps, cur, f"alpha({e.name(i)}) still meets root {g.roots[m]}")
    return Normalization(total, steps, cur, None)


def isotropy_in_q(e: ExtensionData, subset: Iterable[int]) -> bool:
    s = tuple(subset)
    return all(e.graded.height(m, s) <= 0 for i in e.h for m in e.alpha_of({i: Q(1)}))


# -- twistor subalgebras ---------------------------------------------------------


@dataclass
class TwistorSubalgebra:
    l_basis: list[list[Q]]
    closed: bool
    symmetric_pair: bool | None
    dimension: int


def _subspace_contains(basis: Sequence[Sequence[Q]], v: Sequence[Q]) -> bool:
    if not any(v):
        return True
    return rank([list(b) for b in basis] + [list(v)]) == rank(basis) if basis else False


def _bracket_dense(k: StructAlgebra, x: Sequence[Q], y: Sequence[Q]) -> list[Q]:
    v = k.bracket({i: c for i, c in enumerate(x) if c}, {i: c for i, c in enumerate(y) if c})
    return [v.get(i, Q(0)) for i in range(k.dim)]


def preimage(e: ExtensionData, subset: Iterable[int]) -> list[list[Q]]:
    """Basis of ``alpha^-1(p_subset)`` in ``k``, in reduced echelon form."""
    s = tuple(subset)
    bad = [m for m in range(e.g.algebra.dim) if e.graded.height(m, s) < 0]
    rows = [[e.alpha[i][m] for i in range(e.k.dim)] for m in bad]
    if not rows:
        return [[Q(int(i == j)) for j in range(e.k.dim)] for i in range(e.k.dim)]
    ns = nullspace(rows, e.k.dim)
    return rref(ns)[0] if ns else []


def is_subalgebra(k: StructAlgebra, basis: Sequence[Sequence[Q]]) -> bool:
    return all(_subspace_contains(basis, _bracket_dense(k, x, y)) for x, y in itertools.combinations(basis, 2))


def eigenspaces(e: ExtensionData, j: Sequence[Q]) -> dict[Q, list[list[Q]]]:
    """Eigenspaces of ``Ad_s`` on ``k`` for the symmetry with eigenvalues ``j`` on Xi."""
    g = e.graded

    def ev(m):
        out = Q(1)
        for k, i in enumerate(e.xi):
            out *= j[k] ** g.roots[m][i - 1]
        return out

    values = sorted({ev(m) for m in range(g.algebra.dim)})
    spaces = {}
    for lam in values:
        # X in k with alpha(X) inside the lam-eigenspace of g
        bad = [m for m in range(g.algebra.dim) if ev(m) != lam]
        rows = [[e.alpha[i][m] for i in range(e.k.dim)] for m in bad]
        ns = nullspace(rows, e.k.dim) if rows else [[Q(int(a == b)) for b in range(e.k.dim)] for a in range(e.k.dim)]
        if ns:
            spaces[lam] = rref(ns)[0]
    if sum(len(v) for v in spaces.values()) != e.k.dim:
        raise ExtensionError("alpha(k) is not stable under the symmetry")
    return spaces


def symmetric_pair(e: ExtensionData, j: Sequence[Q]) -> tuple[bool, list[list[Q]], list[list[Q]]]:
    """For an involutive symmetry: ``(ok, fixed, minus)`` with ``ok`` iff ``[m_k, m_k] ⊆ fixed``."""
    sp = eigenspaces(e, j)
    if set(sp) - {Q(1), Q(-1)}:
        raise ExtensionError("symmetry is not involutive on k")
    fixed, minus = sp.get(Q(1), []), sp.get(Q(-1), [])
    ok = all(_subspace_contains(fixed, _bracket_dense(e.k, x, y)) for x, y in itertools.combinations(minus, 2))
    return ok, fixed, minus


def twistor_subalgebra(
    e: ExtensionData, psi1: Iterable[int], involution: Sequence[Q] | None = None
) -> TwistorSubalgebra:
    rest = tuple(i for i in e.xi if i not in set(psi1))
    basis = preimage(e, rest)
    closed = is_subalgebra(e.k, basis)
    sym = None
    if involution is not None:
        sym = symmetric_pair(e, involution)[0]
    return TwistorSubalgebra(basis, closed, sym, len(basis))


def reductive_complement(k: StructAlgebra, l_basis: Sequence[Sequence[Q]]) -> list[list[Q]] | None:
    """An ``ad(l)``-stable complement of ``l`` in ``k``, or None.

    Solves for an ``l``-equivariant projection ``P: k -> k`` with image ``l``
    and ``P = id`` on ``l``; its kernel is the complement.
    """
    n, d = k.dim, len(l_basis)
    # unknown P as an n x d matrix of coordinates in the l basis: P(e_c) = sum_a T[c][a] l_a
    lb = [list(v) for v in l_basis]
    # coordinates of vectors of l in the l basis via a left inverse
    piv_rows, pivots = rref(lb)

    def lcoords(v):
        return [v[p] for p in pivots] if lb else []

    # rref rows give coordinates directly when l is in reduced form
    if [list(r) for r in piv_rows] != lb:
        lb = [list(r) for r in piv_rows]
    nunk = n * d
    eqs, rhs = [], []

    def var(c, a):
        return c * d + a

    # P(l_b) = l_b
    for b, v in enumerate(lb):
        for a in range(d):
            row = [Q(0)] * nunk
            for c, x in enumerate(v):
                if x:
                    row[var(c, a)] += x
            eqs.append(row)
            rhs.append(Q(int(a == b)))
    # P([Y, e_c]) = [Y, P(e_c)] for Y in l basis
    adl = []
    for y in lb:
        # ad_y on l in l-coordinates
        cols = [lcoords(_bracket_dense(k, y, lv)) for lv in lb]
        adl.append(cols)
    for yi, y in enumerate(lb):
        for c in range(n):
            e_c = [Q(int(t == c)) for t in range(n)]
            w = _bracket_dense(k, y, e_c)
            for a in range(d):
                row = [Q(0)] * nunk
                for t, x in enumerate(w):
                    if x:
                        row[var(t, a)] += x
                for b in range(d):
                    coef = adl[yi][b][a]
                    if coef:
                        row[var(c, b)] -= coef
                eqs.append(row)
                rhs.append(Q(0))
    sol = solve(eqs, rhs)
    if sol is None:
        return None
    P = [[sol[var(c, a)] for a in range(d)] for c in range(n)]
    # kernel of P
    ker = nullspace(transpose(P), n)
    return rref(ker)[0] if ker else []
