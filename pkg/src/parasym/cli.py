"""Command line entry point.

Exit status is 0 on success, 2 when a mathematical precondition fails (a
JSON error record goes to stderr) and 1 for bad flags, files or schemas.
"""

from __future__ import annotations

import itertools
import json
import math
import sys
from fractions import Fraction as Q
from pathlib import Path
from typing import Sequence

import click

from . import extension as ext
from .emit import FORMATS, EmitError, emit_report, emit_table
from .grading import GradedParabolic, GradingError, format_root, graded_parabolic, grading_modules
from .kostant import ComponentError, find_component, harmonic_components, psi, twistor_regularity
from .rootsys import FIXED_RANK, RootSystemError, build_root_system
from .symsolve import (
    SymmetryError,
    _family_order,
    _mod1,
    classify as classify_families,
    fixed_modules,
    lambda_full_table,
    scan_cases,
)

ALIASES = {
    "sl": "A",
    "sp": "C",
    "so_odd": "B",
    "so_even": "D",
    "g2": "G2",
    "e6": "E6",
    "e7": "E7",
}
DOMAIN_ERRORS = (RootSystemError, GradingError, ComponentError, SymmetryError, ext.ExtensionError)
PLUMBING_ERRORS = (ext.SchemaError, EmitError, OSError, json.JSONDecodeError)


class Setup:
    def __init__(self, algebra: str, rank: int | None, real_form: str, xi: str | None):
        fam = ALIASES.get(algebra.lower(), algebra.upper())
        if fam == "SO":
            raise click.UsageError("use so_odd (type B) or so_even (type D)")
        if rank is None:
            if fam not in FIXED_RANK:
                raise click.UsageError(f"--rank is required for {algebra}")
            rank = FIXED_RANK[fam]
        self.real_form = real_form
        doubled = real_form == "C" and xi is not None and "'" in xi
        self.rs = build_root_system(fam, rank, doubled)
        self.gp: GradedParabolic | None = None
        if xi is not None:
            self.gp = graded_parabolic(self.rs, parse_indices(self.rs, xi))

    @property
    def name(self) -> str:
        tag = "x2" if self.rs.complex_as_real else ""
        base = self.rs.family if self.rs.family in FIXED_RANK else f"{self.rs.family}{self.rs.rank}"
        return base + tag

    def labels(self, idx: Sequence[int]) -> list[str]:
        return [self.rs.label(i) for i in idx]

    def root(self, r) -> str:
        return format_root(self.rs, r)

    def pair(self, p) -> str:
        return f"(a{self.rs.label(p[0])},a{self.rs.label(p[1])})"

    def components(self, text: str | None, include_all: bool = False):
        gp = self.need_xi()
        if text is None:
            return harmonic_components(gp, regular_only=not include_all)
        return [find_component(gp, *pair) for pair in parse_pairs(self.rs, text)]

    def need_xi(self) -> GradedParabolic:
        if self.gp is None:
            raise click.UsageError("--xi is required")
        return self.gp


def parse_indices(rs, text: str) -> list[int]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise GradingError("empty index list")
    try:
        return [rs.parse_index(s) for s in items]
    except ValueError as err:
        if isinstance(err, RootSystemError):
            raise
        raise click.UsageError(f"bad index list {text!r}") from err


def parse_pairs(rs, text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.split(";"):
        parts = [s for s in chunk.split(",") if s.strip()]
        if len(parts) != 2:
            raise click.UsageError(f"component {chunk!r} is not a pair a,b")
        out.append(tuple(parse_indices(rs, ",".join(parts))))
    return out


def _write(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


algebra_opt = click.option("--algebra", "-a", required=True, help="sl, sp, so_odd, so_even, g2, e6, e7 or a family letter.")
rank_opt = click.option("--rank", "-n", type=int, default=None)
form_opt = click.option("--real-form", type=click.Choice(["R", "C", "su"]), default="R", show_default=True)
xi_opt = click.option("--xi", help="Comma list of simple roots, primes for the second copy (1,1').")
comp_opt = click.option("--components", "comps", help="Pairs a,b separated by ';'.")
fmt_opt = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), envvar="PARASYM_FORMAT", default="text", show_default=True
)
out_opt = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)


@click.group()
def main():
    """Symmetries and curvature data of homogeneous parabolic geometries."""


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@fmt_opt
@out_opt
def roots(algebra, rank, real_form, xi, fmt, output):
    """Positive roots, or the module partition of p_+ when --xi is given."""
    s = Setup(algebra, rank, real_form, xi)
    if s.gp is None:
        rows = [{"root": s.root(r), "coords": list(r), "height": sum(r)} for r in s.rs.positive_roots]
    else:
        rows = [
            {
                "module": s.root(m.label),
                "degree": list(m.xi_degree),
                "height": m.height,
                "size": len(m.members),
            }
            for m in grading_modules(s.gp)
        ]
    cols = ["module", "degree", "height", "size"] if s.gp else ["root", "coords", "height"]
    _write(emit_table(rows, fmt, cols), output)


def _component_row(s: Setup, c) -> dict:
    return {
        "algebra": s.name,
        "xi": s.labels(c.xi),
        "component": s.pair(c.pair),
        "homogeneity": list(c.homogeneity),
        "regular": c.total > 0,
        "i_mu": s.labels(c.i_mu),
    }


COMPONENT_COLS = ["algebra", "xi", "component", "homogeneity", "regular", "i_mu"]


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@click.option("--all", "include_all", is_flag=True, help="Include non-regular components.")
@fmt_opt
@out_opt
def components(algebra, rank, real_form, xi, comps, include_all, fmt, output):
    """Harmonic curvature components with homogeneities."""
    s = Setup(algebra, rank, real_form, xi)
    rows = [_component_row(s, c) for c in s.components(comps, include_all)]
    _write(emit_table(rows, fmt, COMPONENT_COLS), output)


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@fmt_opt
@out_opt
def imu(algebra, rank, real_form, xi, comps, fmt, output):
    """I_mu for each selected component."""
    s = Setup(algebra, rank, real_form, xi)
    cs = s.components(comps, include_all=comps is not None)
    rows = [{"component": s.pair(c.pair), "i_mu": s.labels(c.i_mu), "i_mu_real": s.labels(c.i_mu_real)} for c in cs]
    _write(emit_table(rows, fmt, ["component", "i_mu", "i_mu_real"]), output)


@main.command("psi")
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@fmt_opt
@out_opt
def psi_cmd(algebra, rank, real_form, xi, comps, fmt, output):
    """Psi with the negativity certificate of each component."""
    s = Setup(algebra, rank, real_form, xi)
    cs = s.components(comps, include_all=comps is not None)
    rep = psi(cs, s.gp)
    rows = [
        {"component": s.pair(p), "negative": s.labels(neg), "dichotomy": ok, "psi": s.labels(rep.psi)}
        for p, neg, ok in rep.certificates
    ]
    _write(emit_table(rows, fmt, ["component", "negative", "dichotomy", "psi"]), output)


def _galois_key(torsion: Sequence[Q]) -> tuple[Q, ...]:
    n = math.lcm(*(t.denominator for t in torsion)) if torsion else 1
    units = [k for k in range(1, n + 1) if math.gcd(k, n) == 1]
    return min(tuple(_mod1(k * t) for t in torsion) for k in units)


def family_rows(s: Setup, comps, include_trivial: bool = False, merge: bool = True) -> list[dict]:
    gp = s.need_xi()
    _, fams = classify_families(gp, comps, s.real_form)
    phi = set(gp.xi)
    for c in comps:
        phi &= set(c.i_mu_real)
    groups: dict = {}
    for f in fams:
        if f.trivial and not include_trivial:
            continue
        key = (_galois_key(f.torsion) if merge else f.torsion, f.moduli, f.angles, f.fixed_degrees)
        groups.setdefault(key, []).append(f)
    rows = []
    for key, members in groups.items():
        f = min(members, key=_family_order)
        theta = f.theta()
        row = {
            "algebra": s.name,
            "real_form": s.real_form,
            "xi": s.labels(gp.xi),
            "components": [s.pair(c.pair) for c in comps],
            "homogeneity": [list(c.homogeneity) for c in comps],
            "i_mu": s.labels(sorted(phi)),
        }
        for i, e in zip(gp.xi, f.expressions()):
            row[f"j{s.rs.label(i)}"] = e
        row["conjugates"] = len(members)
        row["m"] = [s.root(m.label) for m in fixed_modules(f, gp).m]
        row["theta"] = s.labels(theta)
        row["lambda"] = s.labels([i for i in gp.xi if i not in phi and i not in theta])
        rows.append((_family_order(f), row))
    rows.sort(key=lambda t: t[0])
    return [r for _, r in rows]


def family_columns(s: Setup) -> list[str]:
    gp = s.need_xi()
    js = [f"j{s.rs.label(i)}" for i in gp.xi]
    return ["algebra", "real_form", "xi", "components", "homogeneity", "i_mu", *js, "conjugates", "m", "theta", "lambda"]


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@click.option("--trivial", "include_trivial", is_flag=True, help="Also list the identity.")
@click.option("--no-merge", is_flag=True, help="Keep Galois-conjugate root-of-unity families apart.")
@fmt_opt
@out_opt
def symmetries(algebra, rank, real_form, xi, comps, include_trivial, no_merge, fmt, output):
    """Eigenvalue families of symmetries for one component set."""
    s = Setup(algebra, rank, real_form, xi)
    cs = s.components(comps)
    rows = family_rows(s, cs, include_trivial, not no_merge)
    _write(emit_table(rows, fmt, family_columns(s)), output)


def _classify_job(args):
    algebra, rank, real_form, xi, pairs, include_trivial, merge = args
    s = Setup(algebra, rank, real_form, xi)
    comps = [find_component(s.gp, *p) for p in pairs]
    return family_rows(s, comps, include_trivial, merge)


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@click.option("--subsets", is_flag=True, help="Sweep every nonempty subset of the regular components.")
@click.option("--trivial", "include_trivial", is_flag=True)
@click.option("--no-merge", is_flag=True)
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True)
@fmt_opt
@out_opt
def classify(algebra, rank, real_form, xi, comps, subsets, include_trivial, no_merge, jobs, fmt, output):
    """Components and the symmetry families they allow."""
    s = Setup(algebra, rank, real_form, xi)
    cs = s.components(comps)
    if not cs:
        raise ComponentError("no regular components for this grading")
    if subsets:
        sets = [sub for k in range(1, len(cs) + 1) for sub in itertools.combinations(cs, k)]
    else:
        sets = [tuple(cs)]
    jobs_args = [(algebra, rank, real_form, xi, [c.pair for c in sub], include_trivial, not no_merge) for sub in sets]
    if jobs > 1 and len(jobs_args) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_classify_job, jobs_args))
    else:
        chunks = [_classify_job(a) for a in jobs_args]
    # subsets are generated in lexicographic order, so concatenation is canonical
    rows = [r for chunk in chunks for r in chunk]
    _write(emit_table(rows, fmt, family_columns(s)), output)


@main.command()
@algebra_opt
@rank_opt
@form_opt
@xi_opt
@comp_opt
@click.option("--psi1", required=True, help="Simple roots dropped from Xi.")
@fmt_opt
@out_opt
def twistor(algebra, rank, real_form, xi, comps, psi1, fmt, output):
    """Regularity of the correspondence space for Xi minus psi1."""
    s = Setup(algebra, rank, real_form, xi)
    cs = s.components(comps)
    rep = twistor_regularity(s.gp, parse_indices(s.rs, psi1), cs)
    pairs = [
        ("algebra", s.name),
        ("xi", s.labels(s.gp.xi)),
        ("psi1", s.labels(parse_indices(s.rs, psi1))),
        ("regular", rep.regular),
        ("offending", [s.pair(p) for p in rep.offending]),
        ("homogeneities", {s.pair(p): list(h) for p, h in rep.homogeneities}),
    ]
    _write(emit_report(pairs, fmt), output)


def _load(path: str) -> ext.ExtensionData:
    return ext.load_extension(path)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--xi-prime", required=True, help="Subset of Xi to reduce to.")
@fmt_opt
@out_opt
def reduce(path, xi_prime, fmt, output):
    """Reduce an extension to a smaller parabolic."""
    e = _load(path)
    xp = [int(x) for x in xi_prime.split(",") if x.strip()]
    red = ext.reduce_geometry(e, xp)
    pairs = [
        ("xi_prime", xp),
        ("vertical_fiber", [list(r) for r in red.vertical_fiber]),
        ("horizontal_dim", len(red.horizontal)),
        ("congruent", ext.congruent_mod_p(e, red.extension)),
    ]
    _write(emit_report(pairs, fmt), output)


@main.command("analyze-extension")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@fmt_opt
@out_opt
def analyze_extension(path, fmt, output):
    """Validate an extension and report curvature and symmetry data."""
    e = _load(path)
    val = ext.validate_extension(e)
    if not val.ok:
        raise ext.ExtensionError("; ".join(val.failures))
    t = ext.curvature(e)
    h = ext.harmonic_decompose(t)
    sd = ext.analyze_symmetry_data(e, h)
    names_g = e.g.algebra.basis_names
    minus = t.complex.minus
    comps = {}
    for (I, m), c in sorted(h.harmonic_part.items()):
        names = ",".join(names_g[minus[i]] for i in I)
        comps[f"({names})->{names_g[m]}"] = c
    pairs = [
        ("valid", True),
        ("descends", ext.descends(e)),
        ("regular", h.is_regular),
        ("normal", h.is_normal),
        ("harmonic", comps),
        ("components", [f"(a{a},a{b})" for a, b in h.component_labels]),
        ("Phi", list(sd.phi_k)),
        ("Theta", list(sd.theta_k)),
        ("Lambda", list(sd.lambda_k)),
        ("Phi_within_Imu", sd.phi_within_imu),
    ]
    _write(emit_report(pairs, fmt), output)


@main.command("lambda-full")
@click.option("--max-rank", type=click.IntRange(min=2), default=8, show_default=True)
@click.option("--max-xi", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--max-subset", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--forms", default="R,C", show_default=True)
@click.option("--families", default=None, help="Comma list of family letters.")
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True)
@fmt_opt
@out_opt
def lambda_full(max_rank, max_xi, max_subset, forms, families, jobs, fmt, output):
    """Cases whose generic symmetry leaves no Xi direction fixed."""
    fams = [f.strip().upper() for f in families.split(",")] if families else None
    cases = scan_cases(max_rank, max_xi, max_subset, tuple(f.strip() for f in forms.split(",")), fams)
    rows = []
    for r in lambda_full_table(cases, jobs):
        rs = build_root_system(r.case.family, r.case.rank, r.case.form == "C")
        rows.append(
            {
                "algebra": r.case.family if r.case.family in FIXED_RANK else f"{r.case.family}{r.case.rank}",
                "form": r.case.form,
                "xi": [rs.label(i) for i in r.case.xi],
                "components": [f"(a{rs.label(a)},a{rs.label(b)})" for a, b in r.case.pairs],
                "minus_one_indecomposable": r.indecomposable_minus_one,
                "witness": [str(x) for x in r.witness[0]],
            }
        )
    cols = ["algebra", "form", "xi", "components", "minus_one_indecomposable", "witness"]
    _write(emit_table(rows, fmt, cols), output)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit status instead of exiting."""
    try:
        main.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.exceptions.Exit as err:
        return err.exit_code
    except click.ClickException as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    except PLUMBING_ERRORS as err:
        return _code(err, 1)
    except DOMAIN_ERRORS as err:
        return _code(err, 2)
    return 0


def _code(err: Exception, code: int) -> int:
    record = {"error": type(err).__name__, "kind": "domain" if code == 2 else "io", "message": str(err)}
    click.echo(json.dumps(record), err=True)
    return code


def entry() -> None:
    sys.exit(run())
