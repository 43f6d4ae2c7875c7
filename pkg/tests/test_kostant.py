import itertools

import pytest

from parasym.grading import graded_parabolic
from parasym.kostant import (
    ComponentError,
    bullet_homogeneity,
    components_for,
    find_component,
    harmonic_components,
    lowvec_homogeneity,
    negativity_ok,
    psi,
    twistor_regularity,
)
from parasym.rootsys import affine_action, build_root_system, reflect, reflect_root
from reference_tables import HOMOGENEITY_ROWS


def brute_force_weights(gp):
    """Weights w.mu over length-two w whose inversion set lies in p_+."""
    rs = gp.rs
    seen = {}
    for a, b in itertools.permutations(rs.indices, 2):
        # w = s_a s_b, so w^-1 applies s_a first
        key = reflect(rs, reflect(rs, rs.rho, b), a)
        if key in seen:
            continue
        inv = [r for r in rs.positive_roots if any(x < 0 for x in reflect_root(rs, reflect_root(rs, r, a), b))]
        assert len(inv) == 2
        if all(gp.height(r) > 0 for r in inv):
            seen[key] = affine_action(rs, [b, a], rs.highest_root)
    return set(seen.values())


SWEEP = [
    (fam, n, doubled, xi)
    for fam, n in [("A", 2), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G2", 2)]
    for doubled in (False, True)
    for size in (1, 2)
    for base in itertools.combinations(range(1, n + 1), size)
    for xi in [tuple(sorted(set(base) | ({i + n for i in base} if doubled else set())))]
]


@pytest.mark.parametrize("family,n,doubled,xi", SWEEP)
def test_components_match_weyl_enumeration(family, n, doubled, xi):
    gp = graded_parabolic(build_root_system(family, n, doubled), xi)
    got = {c.weight for c in harmonic_components(gp)}
    assert got == brute_force_weights(gp)


@pytest.mark.parametrize("family,n,doubled,xi", SWEEP)
def test_two_routes_and_dichotomy(family, n, doubled, xi):
    gp = graded_parabolic(build_root_system(family, n, doubled), xi)
    for c in harmonic_components(gp):
        assert c.homogeneity == lowvec_homogeneity(gp.rs, *c.pair, xi)
        assert negativity_ok(gp.rs, c)


@pytest.mark.parametrize("row", HOMOGENEITY_ROWS, ids=lambda r: f"{r[0]}{r[1]}{'x2' if r[2] else ''}-{r[3]}-{r[4]}")
def test_reference_homogeneities(row):
    family, n, doubled, xi, pair, hom, imu = row
    gp = graded_parabolic(build_root_system(family, n, doubled), xi)
    c = find_component(gp, *pair)
    assert c.homogeneity == hom
    assert bullet_homogeneity(gp.rs, *pair, xi) == hom
    if imu is not None:
        assert tuple(i for i in c.i_mu_real if i <= n) == imu


def test_example_i_mu_and_psi():
    gp, comps = components_for("A", 4, [1, 2], regular_only=True)
    by = {c.pair: c for c in comps}
    assert set(by) == {(1, 2), (2, 1)}
    assert by[(1, 2)].i_mu == ()
    assert by[(2, 1)].i_mu == (1,)
    assert psi([by[(1, 2)], by[(2, 1)]], gp).psi == ()
    assert psi([by[(1, 2)]], gp).psi == (2,)
    assert psi([by[(2, 1)]], gp).psi == (1,)


def test_regular_filter():
    gp, comps = components_for("A", 4, [1, 2])
    assert (2, 3) in {c.pair for c in comps}
    reg = harmonic_components(gp, regular_only=True)
    assert all(c.total > 0 for c in reg)
    assert (2, 3) not in {c.pair for c in reg}


def test_bad_component():
    gp = graded_parabolic(build_root_system("A", 4), [1, 2])
    with pytest.raises(ComponentError):
        find_component(gp, 3, 2)
    with pytest.raises(ComponentError):
        psi([], gp)


def test_component_from_other_grading_rejected():
    gp1, comps = components_for("A", 4, [1, 2])
    gp2 = graded_parabolic(build_root_system("A", 4), [1, 3])
    with pytest.raises(ComponentError):
        psi(comps, gp2)


def test_twistor_regularity():
    gp, comps = components_for("A", 5, [1, 2, 3, 5], regular_only=True)
    c = [x for x in comps if x.pair == (2, 1)]
    rep = twistor_regularity(gp, [1], c)
    assert not rep.regular and rep.offending == ((2, 1),)
    assert rep.homogeneities == (((2, 1), (2, -1, -1)),)
    with pytest.raises(ComponentError):
        twistor_regularity(gp, [2], c)
    assert twistor_regularity(gp, [], c).regular
