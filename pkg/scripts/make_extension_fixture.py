"""Regenerate the seventeen-dimensional example fixture from its matrix description.

Writes src/parasym/data/sl6_extension.json and fixtures/sl6_extension.json.
"""

import json
import sys
from fractions import Fraction as Q
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from parasym.cochains import SlRealization, algebra_from_matrices  # noqa: E402
from parasym.extension import extension_from_dict  # noqa: E402

# positions (1-based row, col) of the coordinates X1..X17 in the 8x8 form of k
K_SLOTS = {
    1: [(5, 1, 1)], 2: [(5, 2, 1)], 3: [(6, 1, 1)], 4: [(6, 2, 1)],
    5: [(7, 3, 1)], 6: [(7, 4, 1)], 7: [(8, 3, 1)], 8: [(8, 4, 1)],
    9: [(1, 2, -1), (2, 1, 1), (3, 4, 1), (4, 3, 1)],
    10: [(5, 5, 1)], 11: [(5, 6, 1)], 12: [(6, 5, 1)], 13: [(6, 6, 1)],
    14: [(7, 7, 1)], 15: [(7, 8, 1)], 16: [(8, 7, 1)], 17: [(8, 8, 1)],
}


def k_matrix(x):
    m = [[Q(0)] * 8 for _ in range(8)]
    for i, slots in K_SLOTS.items():
        for r, c, s in slots:
            m[r - 1][c - 1] += s * x[i]
    return m


def alpha_matrix(x):
    C = -(x[10] + x[13] + x[14] + x[17]) / 6
    m = [[Q(0)] * 6 for _ in range(6)]
    put = {
        (1, 1): C, (2, 1): x[9], (2, 2): C,
        (3, 1): x[1], (3, 2): x[2], (3, 3): C + x[10], (3, 5): x[11],
        (4, 1): x[5], (4, 2): x[6], (4, 4): C + x[14], (4, 5): x[15], (4, 6): x[15],
        (5, 1): x[3], (5, 2): x[4], (5, 3): x[12], (5, 5): C + x[13],
        (6, 1): x[7] - x[3], (6, 2): x[8] - x[4], (6, 3): -x[12], (6, 4): x[16],
        (6, 5): x[17] - x[13], (6, 6): C + x[17],
    }
    for (r, c), v in put.items():
        m[r - 1][c - 1] = Q(v)
    return m


def basis_x(i):
    """E-coordinates of the i-th basis vector; b13 spans the diagonal x13 = x17 of h."""
    x = {t: Q(0) for t in range(1, 18)}
    x[i] = Q(1)
    if i == 13:
        x[17] = Q(1)
    return x


def coords_in_k(m):
    x = {i: Q(m[slots[0][0] - 1][slots[0][1] - 1]) * slots[0][2] for i, slots in K_SLOTS.items()}
    if k_matrix(x) != m:
        raise ValueError("matrix is not in k")
    out = {i - 1: v for i, v in x.items() if i not in (13, 17)}
    out[12] = x[13]
    out[16] = x[17] - x[13]
    return {k: v for k, v in out.items() if v}


def build():
    names = [f"X{i}" for i in range(1, 18)]
    names[12] = "X13+X17"
    mats = [k_matrix(basis_x(i)) for i in range(1, 18)]
    k = algebra_from_matrices(mats, names, coords_in_k)
    g = SlRealization(6)
    alpha = []
    for i in range(1, 18):
        v = g.coords(alpha_matrix(basis_x(i)))
        alpha.append([str(v.get(c, Q(0))) for c in range(g.algebra.dim)])
    doc = {
        "g": {
            "family": "A",
            "rank": 5,
            "real_form": "R",
            "xi": [1, 2, 5],
            "root_basis": [{"root": list(r), "index": c} for c, r in enumerate(g.roots)],
        },
        "k": {"dim": 17, "names": names, "brackets": k.to_json()},
        "h": [9, 10, 12, 13, 14],
        "alpha": alpha,
        "j_generators": [["1", "2", "1"], ["-1", "1", "1"], ["1", "-1", "1"]],
        "meta": {
            "description": "sl(6,R), Xi={1,2,5}; k is 17-dimensional inside gl(8,R), h is 5-dimensional",
            "g_basis": g.algebra.basis_names,
            "k_basis_note": "basis vector 13 is X13+X17, so h = span(X10, X11, X13+X17, X14, X15)",
        },
    }
    extension_from_dict(doc)
    return doc


if __name__ == "__main__":
    text = json.dumps(build(), indent=1) + "\n"
    for target in (ROOT / "src/parasym/data/sl6_extension.json", ROOT / "fixtures/sl6_extension.json"):
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        print("wrote", target)
