"""Harmonic curvature components, their homogeneities, I_mu and Psi.

A component is an ordered pair ``(a, b)`` of simple roots.  Its weight is
``s_a s_b (mu + rho) - rho`` with ``s_b`` applied first, where ``mu`` is the
highest root (of the first copy on a doubled diagram).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .grading import GradedParabolic, graded_parabolic
from .rootsys import Root, RootSystem, Weight, affine_action, reflect_root

# Which pair of positive roots makes up the form part of the lowest weight
# vector.  "a_first" gives {alpha_a, s_a(alpha_b)}, "b_first" gives
# {alpha_b, s_b(alpha_a)}.
CONVENTIONS = ("a_first", "b_first")
DEFAULT_CONVENTION = "a_first"


class ComponentError(ValueError):
    pass


@dataclass(frozen=True)
class CurvatureComponent:
    pair: tuple[int, int]
    weight: Weight
    lowvec: tuple[Root, Root, Root]
    homogeneity: tuple[int, ...]
    i_mu: tuple[int, ...]
    neg_set: tuple[int, ...]
    xi: tuple[int, ...]
    # I_mu shared with the implied conjugate component (equals i_mu on
    # undoubled diagrams)
    i_mu_real: tuple[int, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.homogeneity)

    def name(self, rs: RootSystem) -> str:
        a, b = self.pair
        return f"(a{rs.label(a)},a{rs.label(b)})"


def _add(*vs: Sequence[int], signs: Sequence[int] | None = None) -> Root:
    signs = signs or [1] * len(vs)
    return tuple(sum(s * v[k] for s, v in zip(signs, vs)) for k in range(len(vs[0])))


def component_weight(rs: RootSystem, a: int, b: int) -> Weight:
    return affine_action(rs, [b, a], rs.highest_root)


def lowest_weight_vector(rs: RootSystem, a: int, b: int, convention: str = DEFAULT_CONVENTION):
    """Roots ``(beta_1, beta_2, -w(mu))`` of the lowest weight vector."""
    if convention not in CONVENTIONS:
        raise ComponentError(f"unknown convention {convention!r}")
    mu = rs.highest_root
    wmu = reflect_root(rs, reflect_root(rs, mu, b), a)
    neg = tuple(-x for x in wmu)
    if convention == "a_first":
        return rs.simple_root(a), reflect_root(rs, rs.simple_root(b), a), neg
    return rs.simple_root(b), reflect_root(rs, rs.simple_root(a), b), neg


def bullet_homogeneity(rs: RootSystem, a: int, b: int, xi: Iterable[int]) -> tuple[int, ...]:
    """Homogeneity from the closed formula in ``k_i`` and ``r_i``."""
    k, r = rs.highest_root, rs.highest_root_weight_coords
    out = []
    for i in xi:
        if i == a:
            out.append(-k[a - 1] + 1 + r[a - 1] - rs.cartan[b - 1][a - 1] * (1 + r[b - 1]))
        elif i == b:
            out.append(-k[b - 1] + 1 + r[b - 1])
        else:
            out.append(-k[i - 1])
    return tuple(out)


def lowvec_homogeneity(
    rs: RootSystem, a: int, b: int, xi: Iterable[int], convention: str = DEFAULT_CONVENTION
) -> tuple[int, ...]:
    """Homogeneity as Xi-coordinates of the lowest weight vector."""
    b1, b2, v = lowest_weight_vector(rs, a, b, convention)
    s = _add(b1, b2, v)
    return tuple(s[i - 1] for i in xi)


def admissible(gp: GradedParabolic, a: int, b: int) -> bool:
    rs = gp.rs
    if a == b or a not in gp.xi:
        return False
    if gp.height(reflect_root(rs, rs.simple_root(b), a)) <= 0:
        return False
    # orthogonal pairs give the same Weyl element in either order
    if rs.cartan[a - 1][b - 1] == 0 and a > b:
        return False
    return True


def make_component(gp: GradedParabolic, a: int, b: int) -> CurvatureComponent:
    rs = gp.rs
    w = component_weight(rs, a, b)
    hom = bullet_homogeneity(rs, a, b, gp.xi)
    i_mu = tuple(i for i in gp.xi if w.fw[i - 1] == 0)
    i_mu_real = tuple(i for i in i_mu if rs.conj(i) in i_mu)
    neg = tuple(i for i in rs.indices if w.fw[i - 1] < 0)
    return CurvatureComponent((a, b), w, lowest_weight_vector(rs, a, b), hom, i_mu, neg, gp.xi, i_mu_real)


_CACHE: dict[tuple, tuple[CurvatureComponent, ...]] = {}


def harmonic_components(gp: GradedParabolic, regular_only: bool = False) -> list[CurvatureComponent]:
    """All components ``(a, b)`` of the harmonic curvature for ``gp``.

    On a doubled diagram only components with values in the first copy are
    produced; their conjugates are implied.
    """
    rs = gp.rs
    key = (rs.family, rs.rank, rs.complex_as_real, gp.xi)
    if key not in _CACHE:
        out = [make_component(gp, a, b) for a in gp.xi for b in rs.indices if admissible(gp, a, b)]
        out.sort(key=lambda c: c.pair)
        _CACHE[key] = tuple(out)
    return [c for c in _CACHE[key] if not regular_only or c.total > 0]


def find_component(gp: GradedParabolic, a: int, b: int) -> CurvatureComponent:
    if not admissible(gp, a, b):
        raise ComponentError(f"({gp.rs.label(a)},{gp.rs.label(b)}) is not a component for this grading")
    return make_component(gp, a, b)


def homogeneity_tuple(c: CurvatureComponent, gp: GradedParabolic) -> tuple[int, ...]:
    _check_same(c, gp)
    return bullet_homogeneity(gp.rs, *c.pair, gp.xi)


def i_mu(c: CurvatureComponent, gp: GradedParabolic) -> tuple[int, ...]:
    _check_same(c, gp)
    return c.i_mu


def _check_same(c: CurvatureComponent, gp: GradedParabolic) -> None:
    if c.xi != gp.xi:
        raise ComponentError("component was generated for a different grading")


def negativity_ok(rs: RootSystem, c: CurvatureComponent) -> bool:
    """Unique negative at ``alpha_a``, or exactly ``{a, b}`` when orthogonal."""
    a, b = c.pair
    expected = (a,) if rs.cartan[a - 1][b - 1] != 0 else tuple(sorted((a, b)))
    return c.neg_set == expected


@dataclass(frozen=True)
class PsiReport:
    psi: tuple[int, ...]
    certificates: tuple[tuple[tuple[int, int], tuple[int, ...], bool], ...]

    @property
    def dichotomy_holds(self) -> bool:
        return all(ok for _, _, ok in self.certificates)


def psi(components: Sequence[CurvatureComponent], gp: GradedParabolic) -> PsiReport:
    """Simple roots of Xi pairing non-negatively with every component weight."""
    if not components:
        raise ComponentError("Psi needs at least one nontrivial component")
    for c in components:
        _check_same(c, gp)
    rs = gp.rs
    # on doubled diagrams the conjugate of each component is present as well
    keep = tuple(
        i
        for i in gp.xi
        if all(c.weight.fw[i - 1] >= 0 and c.weight.fw[rs.conj(i) - 1] >= 0 for c in components)
    )
    certs = tuple((c.pair, c.neg_set, negativity_ok(gp.rs, c)) for c in components)
    return PsiReport(keep, certs)


@dataclass(frozen=True)
class TwistorReport:
    regular: bool
    offending: tuple[tuple[int, int], ...]
    homogeneities: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]


def twistor_regularity(
    gp: GradedParabolic, psi1: Iterable[int], components: Sequence[CurvatureComponent]
) -> TwistorReport:
    """Regularity of the geometry on the twistor space for ``Xi - psi1``."""
    drop = set(psi1)
    if not drop:
        homs = tuple((c.pair, c.homogeneity) for c in components)
        return TwistorReport(True, (), homs)
    allowed = set(psi(components, gp).psi) if components else set(gp.xi)
    if not drop <= allowed:
        bad = sorted(drop - allowed)
        raise ComponentError(f"psi1 contains {bad} which are not in Psi")
    rest = [i for i in gp.xi if i not in drop]
    homs = []
    offending = []
    for c in components:
        h = bullet_homogeneity(gp.rs, *c.pair, rest)
        homs.append((c.pair, h))
        if sum(h) <= 0:
            offending.append(c.pair)
    return TwistorReport(not offending, tuple(offending), tuple(homs))


def components_for(family: str, rank: int, xi: Iterable[int], complex_as_real: bool = False, regular_only: bool = False):
    from .rootsys import build_root_system

    gp = graded_parabolic(build_root_system(family, rank, complex_as_real), xi)
    return gp, harmonic_components(gp, regular_only)
