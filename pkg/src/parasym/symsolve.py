"""Eigenvalue families solving prod_i j_i^{a_i} = 1 under real-form constraints.

An eigenvalue is written ``j = exp(x) * exp(2 pi i theta)``.  The moduli ``x``
form a real vector space cut out by linear equations; the phases ``theta``
live on a torus cut out by integer congruences, which a Smith normal form
splits into a finite torsion group and free angle directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .exact import integer_row, nullspace, rref
from .grading import GradedParabolic, RootModule, grading_modules
from .kostant import CurvatureComponent, harmonic_components
from .rootsys import RootSystem
from .snf import smith_normal_form, verify

REAL, UNIT, COMPLEX = "real_nonzero", "unit_circle", "complex_unit_free"
REAL_FORMS = ("R", "C", "su")


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class ConstraintSystem:
    xi_order: tuple[int, ...]
    exponent_matrix: tuple[tuple[int, ...], ...]
    conjugation_pairs: tuple[tuple[int, int], ...]
    domain: tuple[str, ...]
    module_degrees: tuple[tuple[int, ...], ...] = ()

    @property
    def size(self) -> int:
        return len(self.xi_order)


def real_form_domains(rs: RootSystem, xi: Sequence[int], real_form: str):
    """Per-index domains and conjugation pairs for a real form label."""
    if real_form == "R":
        if rs.complex_as_real:
            raise SymmetryError("split real form needs an undoubled diagram")
        return tuple(REAL for _ in xi), ()
    if real_form == "C":
        if not rs.complex_as_real:
            # complex algebra with complex-linear symmetries
            return tuple(COMPLEX for _ in xi), ()
        pairs = tuple((i, rs.conj(i)) for i in xi if i <= rs.rank)
        return tuple(COMPLEX for _ in xi), pairs
    if real_form == "su":
        if rs.family != "A" or rs.complex_as_real:
            raise SymmetryError("su forms live on an undoubled A diagram")
        n = rs.rank
        if set(n + 1 - i for i in xi) != set(xi):
            raise SymmetryError("Xi must be stable under i -> n+1-i for su")
        pairs = tuple((i, n + 1 - i) for i in xi if i < n + 1 - i)
        doms = tuple(REAL if i == n + 1 - i else COMPLEX for i in xi)
        return doms, pairs
    raise SymmetryError(f"unsupported real form {real_form!r}")


def constraint_system(
    components: Sequence[CurvatureComponent], gp: GradedParabolic, real_form: str = "R"
) -> ConstraintSystem:
    if not gp.xi:
        raise SymmetryError("empty Xi")
    for c in components:
        if c.xi != gp.xi:
            raise SymmetryError(f"component {c.pair} belongs to a different grading")
    doms, pairs = real_form_domains(gp.rs, gp.xi, real_form)
    degs = sorted({m.xi_degree for m in grading_modules(gp)})
    return ConstraintSystem(
        xi_order=gp.xi,
        exponent_matrix=tuple(c.homogeneity for c in components),
        conjugation_pairs=pairs,
        domain=doms,
        module_degrees=tuple(degs),
    )


@dataclass(frozen=True)
class SymmetryFamily:
    """One stratum ``j = zeta * prod t_l^{v_l} * prod exp(i phi_k a_k)``.

    ``torsion`` holds the root-of-unity part as phases in ``[0, 1)``;
    ``moduli`` the integer exponent vectors of real parameters ``t_l`` in
    ``R^*``; ``angles`` the rational exponent vectors of phases ``phi_k``.
    """

    xi_order: tuple[int, ...]
    torsion: tuple[Q, ...]
    moduli: tuple[tuple[int, ...], ...]
    angles: tuple[tuple[Q, ...], ...]
    torsion_orders: tuple[int, ...]
    strata_conditions: tuple[tuple[int, ...], ...]
    fixed_degrees: tuple[tuple[int, ...], ...]

    @property
    def trivial(self) -> bool:
        return not self.moduli and not self.angles and not any(self.torsion)

    @property
    def dimension(self) -> int:
        return len(self.moduli) + len(self.angles)

    def is_identically_one(self, degree: Sequence[int]) -> bool:
        if sum(d * t for d, t in zip(degree, self.torsion)).denominator != 1:
            return False
        if any(sum(d * v for d, v in zip(degree, vec)) for vec in self.moduli):
            return False
        return not any(sum(d * a for d, a in zip(degree, vec)) for vec in self.angles)

    def theta(self) -> tuple[int, ...]:
        n = len(self.xi_order)
        return tuple(
            i for k, i in enumerate(self.xi_order) if self.is_identically_one([int(k == m) for m in range(n)])
        )

    def roots_of_unity(self) -> tuple[tuple[int, int], ...]:
        """Torsion part per index as ``(order, exponent)`` pairs."""
        return tuple((t.denominator, t.numerator) for t in self.torsion)

    def sample(self, params: Sequence[Q] | None = None) -> tuple[tuple[Q, Q], ...]:
        """A point ``(log|j|, arg j / 2 pi mod 1)`` per index."""
        nm, na = len(self.moduli), len(self.angles)
        params = list(params) if params is not None else [Q(1, 7 + k) for k in range(nm + na)]
        out = []
        for k in range(len(self.xi_order)):
            x = sum((params[l] * self.moduli[l][k] for l in range(nm)), Q(0))
            th = self.torsion[k] + sum((params[nm + l] * self.angles[l][k] for l in range(na)), Q(0))
            out.append((x, th - (th.numerator // th.denominator)))
        return tuple(out)

    def expressions(self, labels: Sequence[str] | None = None) -> tuple[str, ...]:
        return tuple(_expr(self, k) for k in range(len(self.xi_order)))


def _expr(f: SymmetryFamily, k: int) -> str:
    parts = []
    t = f.torsion[k]
    if t == Q(1, 2):
        sign = "-"
    else:
        sign = ""
        if t:
            parts.append(f"w{t.denominator}^{t.numerator}")
    for l, vec in enumerate(f.moduli, start=1):
        e = vec[k]
        if e == 1:
            parts.append(f"t{l}")
        elif e:
            parts.append(f"t{l}^{e}")
    phase = []
    for l, vec in enumerate(f.angles, start=1):
        a = vec[k]
        if a:
            phase.append(_coef(a) + f"phi{l}")
    if phase:
        s = "+".join(phase).replace("+-", "-")
        parts.append(f"exp(i({s}))")
    body = "*".join(parts) if parts else "1"
    return sign + body


def _coef(a: Q) -> str:
    if a == 1:
        return ""
    if a == -1:
        return "-"
    return f"{a}*"


# -- lattice helpers ---------------------------------------------------------


def _hnf_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row Hermite normal form (upper echelon, positive pivots)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    n = len(a[0])
    out = []
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    out = [tuple(row) for row in a[:r] if any(row)]
    return out


def _integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice ``{v in Z^n : rows . v = 0}``."""
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    f = smith_normal_form(rows)
    r = f.rank
    basis = [tuple(f.V[i][k] for i in range(n)) for k in range(r, n)]
    return _hnf_rows(basis)


def _mat_inverse_int(v) -> list[list[Q]]:
    from .exact import inverse

    return inverse([[Q(x) for x in row] for row in v])


# -- solver ------------------------------------------------------------------


@dataclass
class _Stratum:
    moduli: list[tuple[int, ...]]
    angles: list[tuple[Q, ...]]
    free_cols: list[tuple[int, ...]]
    divisors: tuple[int, ...]
    V: tuple[tuple[int, ...], ...]
    Vinv: list[list[Q]]
    cosets: list[tuple[Q, ...]] = field(default_factory=list)


def _stratum(cs: ConstraintSystem, extra: Sequence[Sequence[int]]) -> _Stratum:
    n = cs.size
    pos = {i: k for k, i in enumerate(cs.xi_order)}
    base = [list(r) for r in cs.exponent_matrix] + [list(r) for r in extra]

    mod_rows = [r for r in base]
    ph_rows = [r for r in base]
    for k, d in enumerate(cs.domain):
        e = [0] * n
        if d == UNIT:
            e[k] = 1
            mod_rows.append(e)
        elif d == REAL:
            e[k] = 2
            ph_rows.append(e)
    for i, j in cs.conjugation_pairs:
        e = [0] * n
        e[pos[i]], e[pos[j]] = 1, -1
        mod_rows.append(e)
        f = [0] * n
        f[pos[i]], f[pos[j]] = 1, 1
        ph_rows.append(f)

    moduli = _integer_kernel(mod_rows, n)
    form = smith_normal_form(ph_rows) if ph_rows else smith_normal_form([[0] * n])
    assert verify(ph_rows if ph_rows else [[0] * n], form)
    r = form.rank
    V = form.V
    free_cols = [tuple(V[i][k] for i in range(n)) for k in range(r, n)]
    angles = [tuple(row) for row in rref([[Q(x) for x in c] for c in free_cols])[0]] if free_cols else []
    st = _Stratum(moduli, angles, free_cols, form.divisors, V, _mat_inverse_int(V))
    gens = [(form.divisors[k], k) for k in range(r) if form.divisors[k] > 1]
    for ts in itertools.product(*[range(d) for d, _ in gens]):
        theta = [Q(0)] * n
        for t, (d, k) in zip(ts, gens):
            for i in range(n):
                theta[i] += Q(t, d) * V[i][k]
        st.cosets.append(tuple(x - (x.numerator // x.denominator) for x in theta))
    return st


def _coset_key(st: _Stratum, theta: Sequence[Q]) -> tuple[Q, ...]:
    r = len(st.divisors)
    n = len(theta)
    phi = [sum((st.Vinv[k][i] * theta[i] for i in range(n)), Q(0)) for k in range(r)]
    return tuple(x - (x.numerator // x.denominator) for x in phi)


def _fixed(degs, theta, moduli, angles) -> tuple[tuple[int, ...], ...]:
    out = []
    for d in degs:
        if sum(x * t for x, t in zip(d, theta)).denominator != 1:
            continue
        if any(sum(x * v for x, v in zip(d, vec)) for vec in moduli):
            continue
        if any(sum(x * a for x, a in zip(d, vec)) for vec in angles):
            continue
        out.append(tuple(d))
    return tuple(out)


def _orbits(st: _Stratum) -> list[tuple[Q, ...]]:
    """Merge cosets related by sign changes of the real parameters."""
    seen: dict[tuple, tuple[Q, ...]] = {}
    reps = []
    for theta in st.cosets:
        key = _coset_key(st, theta)
        if key in seen:
            continue
        orbit = [theta]
        keys = {key}
        frontier = [theta]
        while frontier:
            cur = frontier.pop()
            for v in st.moduli:
                nxt = tuple(_mod1(c + Q(x, 2)) for c, x in zip(cur, v))
                kk = _coset_key(st, nxt)
                if kk not in keys:
                    keys.add(kk)
                    orbit.append(nxt)
                    frontier.append(nxt)
        best = min(orbit, key=lambda th: (sum(1 for x in th if x), th))
        for kk in keys:
            seen[kk] = best
        reps.append(best)
    return reps


def _mod1(x: Q) -> Q:
    return x - (x.numerator // x.denominator)


def solve_symmetries(cs: ConstraintSystem, include_trivial: bool = True) -> list[SymmetryFamily]:
    """All strata of the solution set, one family per distinct fixed set."""
    degs = cs.module_degrees
    done: dict[frozenset, None] = {}
    out: list[SymmetryFamily] = []

    def process(S: frozenset):
        if S in done:
            return
        done[S] = None
        st = _stratum(cs, sorted(S))
        for theta in _orbits(st):
            m = _fixed(degs, theta, st.moduli, st.angles)
            if frozenset(m) != S:
                process(frozenset(m))
                continue
            fam = SymmetryFamily(
                xi_order=cs.xi_order,
                torsion=theta,
                moduli=tuple(st.moduli),
                angles=tuple(st.angles),
                torsion_orders=tuple(d for d in st.divisors if d > 1),
                strata_conditions=tuple(sorted(S)),
                fixed_degrees=m,
            )
            out.append(fam)
            for d in degs:
                if d not in S:
                    process(S | {d})

    process(frozenset())
    result = [f for f in out if include_trivial or not f.trivial]
    result.sort(key=_family_order)
    return result


def _family_order(f: SymmetryFamily):
    return (f.trivial, -f.dimension, len(f.fixed_degrees), f.fixed_degrees, f.torsion)


def satisfies(cs: ConstraintSystem, f: SymmetryFamily) -> bool:
    """Exact check that the family solves every row and domain constraint."""
    for row in cs.exponent_matrix:
        if not f.is_identically_one(row):
            return False
    pos = {i: k for k, i in enumerate(cs.xi_order)}
    for k, d in enumerate(cs.domain):
        if d == REAL:
            if f.torsion[k] not in (0, Q(1, 2)) or any(a[k] for a in f.angles):
                return False
        elif d == UNIT and any(v[k] for v in f.moduli):
            return False
    for i, j in cs.conjugation_pairs:
        a, b = pos[i], pos[j]
        if _mod1(f.torsion[a] + f.torsion[b]) != 0:
            return False
        if any(v[a] != v[b] for v in f.moduli) or any(v[a] != -v[b] for v in f.angles):
            return False
    return True


def point_satisfies(cs: ConstraintSystem, point: Sequence[tuple[Q, Q]]) -> bool:
    """Check an explicit eigenvalue tuple given as ``(log|j|, arg/2pi)``."""
    for row in cs.exponent_matrix:
        if sum(a * x for a, (x, _) in zip(row, point)) != 0:
            return False
        if sum(a * t for a, (_, t) in zip(row, point)).denominator != 1:
            return False
    pos = {i: k for k, i in enumerate(cs.xi_order)}
    for k, d in enumerate(cs.domain):
        x, t = point[k]
        if d == REAL and (2 * t).denominator != 1:
            return False
        if d == UNIT and x != 0:
            return False
    for i, j in cs.conjugation_pairs:
        (x1, t1), (x2, t2) = point[pos[i]], point[pos[j]]
        if x1 != x2 or (t1 + t2).denominator != 1:
            return False
    return True


def fixed_at_point(gp: GradedParabolic, point: Sequence[tuple[Q, Q]]) -> list[RootModule]:
    """Modules of ``p_+`` on which a given eigenvalue tuple acts trivially."""
    out = []
    for m in grading_modules(gp):
        d = m.xi_degree
        if sum(a * x for a, (x, _) in zip(d, point)) == 0 and sum(
            a * t for a, (_, t) in zip(d, point)
        ).denominator == 1:
            out.append(m)
    return out


@dataclass(frozen=True)
class FixedSet:
    m: tuple[RootModule, ...]

    def labels(self):
        return tuple(x.label for x in self.m)


def fixed_modules(f: SymmetryFamily, gp: GradedParabolic) -> FixedSet:
    return FixedSet(tuple(m for m in grading_modules(gp) if f.is_identically_one(m.xi_degree)))


@dataclass(frozen=True)
class DerivedSets:
    theta: tuple[int, ...]
    phi_bound: tuple[int, ...]
    lambda_: tuple[int, ...]


def derive_sets(
    families: Sequence[SymmetryFamily], components: Sequence[CurvatureComponent], gp: GradedParabolic
) -> DerivedSets:
    if not families:
        raise SymmetryError("need at least one family")
    theta = set(gp.xi)
    for f in families:
        theta &= set(f.theta())
    phi = set(gp.xi)
    for c in components:
        phi &= set(c.i_mu_real)
    lam = tuple(i for i in gp.xi if i not in phi and i not in theta)
    return DerivedSets(tuple(sorted(theta)), tuple(sorted(phi)), lam)


def generic_family(families: Sequence[SymmetryFamily]) -> SymmetryFamily:
    """The family with the fewest fixed modules, preferring larger dimension."""
    nontrivial = [f for f in families if not f.trivial]
    if not nontrivial:
        raise SymmetryError("only the trivial family exists")
    return min(nontrivial, key=lambda f: (len(f.fixed_degrees), -f.dimension, f.torsion))


def classify(gp: GradedParabolic, components: Sequence[CurvatureComponent], real_form: str = "R"):
    cs = constraint_system(components, gp, real_form)
    return cs, solve_symmetries(cs)


# -- generic Lambda = Xi classification ----------------------------------------


@dataclass(frozen=True)
class ScanCase:
    family: str
    rank: int
    form: str  # "R" split real, "C" complex (doubled diagram)
    xi: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def key(self):
        order = {"A": 0, "B": 1, "C": 2, "D": 3, "G2": 4, "E6": 5, "E7": 6}
        return (order.get(self.family, 9), self.rank, self.form, self.xi, self.pairs)


@dataclass(frozen=True)
class LambdaFullRow:
    case: ScanCase
    indecomposable_minus_one: bool
    witness: tuple[tuple[Q, ...], ...]  # torsion of a nontrivial family with empty Theta

    def label(self, rs: RootSystem | None = None) -> str:
        from .rootsys import build_root_system

        rs = rs or build_root_system(self.case.family, self.case.rank, self.case.form == "C")
        comps = ",".join(f"(a{rs.label(a)},a{rs.label(b)})" for a, b in self.case.pairs)
        xi = ",".join(rs.label(i) for i in self.case.xi)
        return f"{self.case.family}{self.case.rank} {self.case.form} {{{xi}}} {comps}"


def _gp_for(case: ScanCase):
    from .grading import graded_parabolic
    from .rootsys import build_root_system

    rs = build_root_system(case.family, case.rank, case.form == "C")
    return graded_parabolic(rs, case.xi)


def minus_one_indecomposable(gp: GradedParabolic) -> bool:
    """``g_{Xi,-1}`` is a single real module (one module up to conjugation)."""
    rs = gp.rs
    mods = [m for m in grading_modules(gp) if m.height == 1]
    if not mods:
        return False
    orbit = {mods[0].label}
    conj = tuple(_conj_root(rs, r) for r in mods[0].members)
    for m in mods:
        if any(r in m.members for r in conj):
            orbit.add(m.label)
    return len(orbit) == len(mods)


def _conj_root(rs: RootSystem, r: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(r)
    for i in range(1, len(r) + 1):
        out[rs.conj(i) - 1] = r[i - 1]
    return tuple(out)


def lambda_full_case(case: ScanCase) -> LambdaFullRow | None:
    """Row for ``case`` when ``phi_bound`` is empty and some nontrivial family has empty Theta."""
    gp = _gp_for(case)
    comps = {c.pair: c for c in harmonic_components(gp)}
    sel = [comps[p] for p in case.pairs]
    bound = set(gp.xi)
    for c in sel:
        bound &= set(c.i_mu_real)
    if bound:
        return None
    cs = constraint_system(sel, gp, case.form)
    witness = theta_free_coset(cs)
    if witness is None:
        return None
    return LambdaFullRow(case, minus_one_indecomposable(gp), (witness,))


def theta_free_coset(cs: ConstraintSystem) -> tuple[Q, ...] | None:
    """A torsion coset of the solution group on which no ``j_i`` is identically 1.

    Generic points of such a coset form a nontrivial family with empty Theta,
    so this decides existence without building the full stratification.
    """
    st = _stratum(cs, [])
    free = [any(v[k] for v in st.moduli) or any(a[k] for a in st.angles) for k in range(cs.size)]
    for theta in st.cosets or [tuple(Q(0) for _ in range(cs.size))]:
        if all(free[k] or theta[k] != 0 for k in range(cs.size)):
            return theta
    return None


SCAN_FAMILIES = {"A": (2, 8), "B": (3, 8), "C": (2, 8), "D": (4, 8), "G2": (2, 2), "E6": (6, 6), "E7": (7, 7)}


def scan_cases(
    max_rank: int = 8,
    max_xi: int = 3,
    max_subset: int = 3,
    forms: Sequence[str] = ("R", "C"),
    families: Sequence[str] | None = None,
    min_xi: int = 1,
) -> list[ScanCase]:
    """All (algebra, Xi, component subset) cases within the given bounds.

    ``max_xi`` bounds the number of Xi indices in the first copy; subsets
    are drawn from the regular components.
    """
    from .grading import graded_parabolic
    from .rootsys import build_root_system

    out = []
    for fam, (lo, hi) in SCAN_FAMILIES.items():
        if families is not None and fam not in families:
            continue
        for n in range(lo, min(hi, max_rank) + 1):
            for form in forms:
                rs = build_root_system(fam, n, form == "C")
                for size in range(min_xi, max_xi + 1):
                    for base in itertools.combinations(range(1, n + 1), size):
                        xi = tuple(sorted(set(base) | {rs.conj(i) for i in base}))
                        gp = graded_parabolic(rs, xi)
                        regs = [c.pair for c in harmonic_components(gp, regular_only=True)]
                        for k in range(1, min(max_subset, len(regs)) + 1):
                            for sub in itertools.combinations(regs, k):
                                out.append(ScanCase(fam, n, form, xi, sub))
    return out


def lambda_full_table(cases: Iterable[ScanCase], jobs: int = 1) -> list[LambdaFullRow]:
    cases = list(cases)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda_full_case, cases, chunksize=64))
    else:
        results = [lambda_full_case(c) for c in cases]
    rows = [r for r in results if r is not None]
    rows.sort(key=lambda r: r.case.key)
    return rows
