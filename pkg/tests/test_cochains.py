import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parasym.cochains import KostantComplex, SlRealization, StructAlgebra, sl_graded
from parasym.exact import nullspace, rank, solve, transpose

GRADINGS = [(3, (1, 2)), (3, (1,)), (4, (1, 3))]


@pytest.fixture(scope="module", params=GRADINGS, ids=lambda p: f"sl{p[0]}-{p[1]}")
def complex_(request):
    size, xi = request.param
    return KostantComplex(sl_graded(size, xi)[1])


def _random_cochain(kc, k, rnd, terms=6):
    basis = kc.basis(k)
    return {b: Q(rnd.randint(-5, 5), rnd.randint(1, 4)) for b in rnd.sample(basis, min(terms, len(basis)))}


def _clean(phi):
    return {k: v for k, v in phi.items() if v}


def test_sl_realization_is_a_lie_algebra():
    for n in (2, 3, 4):
        g = SlRealization(n).algebra
        assert g.antisymmetry_ok()
        assert not g.jacobi_failures(5)


def test_jacobi_detects_a_broken_bracket():
    g = SlRealization(3).algebra
    br = dict(g.brackets)
    key = next(iter(br))
    br[key] = {k: 2 * c for k, c in br[key].items()}
    broken = StructAlgebra(g.dim, g.basis_names, br)
    assert broken.jacobi_failures(1)


@pytest.mark.parametrize("seed", range(10))
def test_d_squared_zero(complex_, seed):
    rnd = random.Random(seed)
    for k in (1, 2):
        phi = _random_cochain(complex_, k, rnd)
        assert not _clean(complex_.differential(complex_.differential(phi, k), k + 1))


@pytest.mark.parametrize("seed", range(10))
def test_codifferential_squared_zero(complex_, seed):
    rnd = random.Random(100 + seed)
    for k in (2, 3):
        phi = _random_cochain(complex_, k, rnd)
        assert not _clean(complex_.codifferential(complex_.codifferential(phi)))


@pytest.mark.parametrize("seed", range(10))
def test_codifferential_two_routes(complex_, seed):
    rnd = random.Random(200 + seed)
    phi = _random_cochain(complex_, 2, rnd, terms=10)
    assert _clean(complex_.codifferential(phi)) == _clean(complex_.codifferential_formula(phi))


def _dense(kc, op, src, dst):
    idx = {b: r for r, b in enumerate(dst)}
    cols = []
    for b in src:
        col = [Q(0)] * len(dst)
        for key, c in op({b: Q(1)}).items():
            col[idx[key]] += c
        cols.append(col)
    return transpose(cols)


@pytest.fixture(scope="module")
def sl3_laplacian():
    """Full Laplacian on 2-cochains of sl(3) with the Borel grading."""
    kc = KostantComplex(sl_graded(3, (1, 2))[1])
    c1, c2, c3 = kc.basis(1), kc.basis(2), kc.basis(3)
    d1 = _dense(kc, lambda p: kc.differential(p, 1), c1, c2)
    d2 = _dense(kc, lambda p: kc.differential(p, 2), c2, c3)
    s2 = _dense(kc, kc.codifferential, c2, c1)
    s3 = _dense(kc, kc.codifferential, c3, c2)
    n = len(c2)

    def mm(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]

    lap = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(mm(d1, s2), mm(s3, d2))]
    ker = nullspace(lap, n)
    return kc, c2, lap, ker, s2


def test_harmonic_dimension(sl3_laplacian):
    kc, c2, lap, ker, _ = sl3_laplacian
    assert len(ker) == 2
    assert rank(lap) + len(ker) == len(c2)


def test_projection_matches_laplacian_oracle(sl3_laplacian):
    kc, c2, lap, ker, s2 = sl3_laplacian
    normal = nullspace(s2, len(c2))
    rnd = random.Random(7)
    lap_cols = transpose(lap)
    for _ in range(100):
        coeffs = [Q(rnd.randint(-6, 6), rnd.randint(1, 5)) for _ in normal]
        vec = [sum((c * v[i] for c, v in zip(coeffs, normal)), Q(0)) for i in range(len(c2))]
        phi = {b: x for b, x in zip(c2, vec) if x}
        # oracle: phi = h + lap(y), h in ker lap
        cols = [list(h) for h in ker] + lap_cols
        sol = solve(transpose(cols), vec)
        assert sol is not None
        h = [sum((sol[t] * ker[t][i] for t in range(len(ker))), Q(0)) for i in range(len(c2))]
        expected = {b: x for b, x in zip(c2, h) if x}
        got = kc.harmonic_project(phi)
        assert got == expected
        assert kc.harmonic_project(got) == got
        assert not _clean(kc.codifferential(got))
        assert not _clean(kc.differential(got, 2))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_projection_is_idempotent(values):
    kc = KostantComplex(sl_graded(3, (1, 2))[1])
    c2 = kc.basis(2)
    phi = {b: Q(v) for b, v in zip(c2, values) if v}
    p = kc.harmonic_project(phi)
    assert kc.harmonic_project(p) == p

