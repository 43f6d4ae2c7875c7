import pytest

from parasym.grading import GradingError, format_root, graded_parabolic, grading_modules, simple_module
from parasym.rootsys import build_root_system


def lowest_weight_roots(gp):
    """Roots of p_+ that cannot be lowered by a simple root outside Xi."""
    rs = gp.rs
    roots = set(rs.roots)
    out = []
    for r in rs.positive_roots:
        if gp.height(r) <= 0:
            continue
        lowered = False
        for j in rs.indices:
            if j in gp.xi:
                continue
            d = list(r)
            d[j - 1] -= 1
            if tuple(d) in roots:
                lowered = True
        if not lowered:
            out.append(r)
    return out


CASES = [
    ("A", 5, False, (1, 3)),
    ("B", 4, False, (2,)),
    ("C", 4, False, (1, 4)),
    ("D", 5, False, (2, 5)),
    ("G2", 2, False, (1,)),
    ("E6", 6, False, (1, 6)),
    ("A", 3, True, (1, 4)),
    ("E7", 7, False, (7,)),
]


@pytest.mark.parametrize("family,n,doubled,xi", CASES)
def test_modules_have_unique_lowest_weights(family, n, doubled, xi):
    gp = graded_parabolic(build_root_system(family, n, doubled), xi)
    mods = grading_modules(gp)
    lows = lowest_weight_roots(gp)
    assert len(mods) == len(lows)
    for m in mods:
        assert sum(1 for r in lows if r in m.members) == 1
        assert m.label in lows
        assert len({gp.degree(r) for r in m.members}) == 1


@pytest.mark.parametrize("family,n,doubled,xi", CASES)
def test_partition_of_p_plus(family, n, doubled, xi):
    gp = graded_parabolic(build_root_system(family, n, doubled), xi)
    members = [r for m in grading_modules(gp) for r in m.members]
    assert len(members) == len(set(members))
    assert set(members) == {r for r in gp.rs.positive_roots if gp.height(r) > 0}


def test_g2_first_node():
    gp = graded_parabolic(build_root_system("G2", 2), [1])
    mods = grading_modules(gp)
    assert [m.label for m in mods] == [(1, 0), (2, 1), (3, 1)]
    assert [len(m.members) for m in mods] == [2, 1, 2]
    assert gp.k == 3


def test_simple_module_and_format():
    rs = build_root_system("A", 3, True)
    gp = graded_parabolic(rs, [1, 4])
    assert simple_module(gp, 4).label == (0, 0, 0, 1, 0, 0)
    assert format_root(rs, (2, 1, 0, 0, 0, 1)) == "2a1+a2+a3'"
    assert format_root(rs, (-1, 0, 0, 0, 0, 0)) == "-a1"


def test_grading_errors():
    rs = build_root_system("A", 3, True)
    with pytest.raises(GradingError):
        graded_parabolic(rs, [1])
    with pytest.raises(GradingError):
        graded_parabolic(rs, [])
    gp = graded_parabolic(build_root_system("A", 3), [1])
    with pytest.raises(GradingError):
        simple_module(gp, 2)
    with pytest.raises(GradingError):
        grading_modules(gp, "upper")


def test_height_zero_modules_flagged():
    gp = graded_parabolic(build_root_system("A", 3), [2])
    zero = grading_modules(gp, "zero")
    assert zero and all(not m.exhaustive for m in zero)
    assert all(m.exhaustive for m in grading_modules(gp, "plus"))
