"""Gradings by Xi-heights and the module partition of a parabolic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .rootsys import Root, RootSystem, RootSystemError


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class GradedParabolic:
    rs: RootSystem
    xi: tuple[int, ...]

    @property
    def k(self) -> int:
        """Length of the grading."""
        return sum(self.rs.highest_root[i - 1] for i in self.xi)

    def labels(self) -> list[str]:
        return [self.rs.label(i) for i in self.xi]

    def degree(self, r: Sequence[int]) -> tuple[int, ...]:
        """Xi-coordinates of ``r``, in the order of ``xi``."""
        return tuple(r[i - 1] for i in self.xi)

    def height(self, r: Sequence[int]) -> int:
        return sum(r[i - 1] for i in self.xi)


def graded_parabolic(rs: RootSystem, xi: Iterable[int]) -> GradedParabolic:
    xs = tuple(sorted(set(xi)))
    if not xs:
        raise GradingError("Xi must be nonempty")
    for i in xs:
        rs._check(i)
    if rs.complex_as_real and set(rs.conj(i) for i in xs) != set(xs):
        raise GradingError("Xi must be closed under conjugation on a doubled diagram")
    return GradedParabolic(rs, xs)


def xi_height(gp: GradedParabolic, r: Sequence[int]) -> int:
    if not gp.rs.is_root(r):
        raise GradingError(f"{tuple(r)} is not a root")
    return gp.height(r)


@dataclass(frozen=True)
class RootModule:
    label: Root
    members: tuple[Root, ...]
    xi_degree: tuple[int, ...]
    exhaustive: bool = True  # False flags height-0 modules that may not exhaust g_0

    @property
    def height(self) -> int:
        return sum(self.xi_degree)


@lru_cache(maxsize=None)
def _modules(gp: GradedParabolic) -> tuple[RootModule, ...]:
    rs = gp.rs
    roots = rs.roots
    level0 = [r for r in roots if gp.height(r) == 0]
    rootset = set(roots)
    seen: set[Root] = set()
    out = []
    for r in sorted(roots):
        if r in seen:
            continue
        orbit = {r}
        stack = [r]
        while stack:
            b = stack.pop()
            for z in level0:
                c = tuple(x + y for x, y in zip(b, z))
                if c in rootset and c not in orbit:
                    orbit.add(c)
                    stack.append(c)
        seen |= orbit
        members = tuple(sorted(orbit))
        deg = gp.degree(r)
        out.append(RootModule(members[0], members, deg, exhaustive=sum(deg) != 0))
    out.sort(key=lambda m: (sum(m.xi_degree), m.xi_degree, m.label))
    return tuple(out)


def grading_modules(gp: GradedParabolic, part: str = "plus") -> list[RootModule]:
    """Modules ``V_{Xi,gamma}`` of one part of the grading.

    ``part`` is ``"plus"`` (positive heights), ``"minus"``, ``"zero"`` or
    ``"all"``.  Height-zero modules carry ``exhaustive=False``.
    """
    mods = _modules(gp)
    pick = {
        "plus": lambda h: h > 0,
        "minus": lambda h: h < 0,
        "zero": lambda h: h == 0,
        "all": lambda h: True,
    }
    if part not in pick:
        raise GradingError(f"unknown part {part!r}")
    return [m for m in mods if pick[part](m.height)]


def simple_module(gp: GradedParabolic, i: int) -> RootModule:
    """The module containing the simple root ``alpha_i`` for ``i`` in Xi."""
    if i not in gp.xi:
        raise GradingError(f"{gp.rs.label(i)} is not in Xi")
    r = gp.rs.simple_root(i)
    for m in grading_modules(gp):
        if r in m.members:
            return m
    raise RootSystemError("simple root missing from the partition")


def format_root(rs: RootSystem, r: Sequence[int]) -> str:
    """Human-readable form such as ``2a1+a2'``."""
    parts = []
    for i, c in enumerate(r, start=1):
        if not c:
            continue
        name = f"a{rs.label(i)}"
        if c == 1:
            parts.append(("+", name))
        elif c == -1:
            parts.append(("-", name))
        else:
            parts.append(("+" if c > 0 else "-", f"{abs(c)}{name}"))
    if not parts:
        return "0"
    s = "".join(sign + t for sign, t in parts)
    return s[1:] if s.startswith("+") else s
