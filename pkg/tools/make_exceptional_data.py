"""Regenerate the generator files for G4, G12 and G24.

G4 and G12 come from the binary tetrahedral and octahedral groups in SU(2):
G4 is generated by omega*a for a of order 3 in 2T, and G12 is
2T together with i*(2O - 2T). G24 is Klein's 3-dimensional representation
of PSL(2,7) extended by -1. In each case we enumerate the ambient group,
collect its reflections and keep a small generating set of them.

    python tools/make_exceptional_data.py [outdir]
"""
from __future__ import annotations

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from graded_hecke.exact.cyclotomic import Cyclotomic, cyclo_make
from graded_hecke.groups.core import matrix_group
from graded_hecke.groups.exceptional import matrix_to_json
from graded_hecke.linalg import mat_mul

OUT = Path(__file__).resolve().parents[1] / "src" / "graded_hecke" / "groups" / "data"


def c(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(Fraction(x))


def quaternion(a, b, cc, d):
    i = cyclo_make(4, 1)
    a, b, cc, d = map(c, (a, b, cc, d))
    return [[a + b * i, cc + d * i], [-cc + d * i, a - b * i]]


def scale(s, m):
    return [[s * x for x in row] for row in m]


def binary_tetrahedral():
    h = Fraction(1, 2)
    out = []
    for k in range(4):
        for sgn in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = sgn
            out.append(quaternion(*v))
    for signs in itertools.product((h, -h), repeat=4):
        out.append(quaternion(*signs))
    return out


def binary_octahedral_extra():
    """The 24 elements of 2O outside 2T: (+-x +-y)/sqrt2 for two distinct axes."""
    r = (cyclo_make(8, 1) + cyclo_make(8, -1)) / 2  # 1/sqrt2
    out = []
    for a, b in itertools.combinations(range(4), 2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            v = [c(0)] * 4
            v[a] = r * sa
            v[b] = r * sb
            out.append(quaternion(*v))
    return out


def pick_generators(reflections, order, field_order, target):
    """Greedy small generating set of reflections for a group of size target."""
    best = None
    for k in (2, 3, 4):
        for combo in itertools.combinations(range(len(reflections)), k):
            gens = [reflections[j] for j in combo]
            try:
                g = matrix_group("probe", gens, field_order, cap=target)
            except Exception:
                continue
            if g.order == target:
                best = gens
                break
        if best:
            break
    if best is None:
        raise SystemExit(f"no generating set of reflections found for order {target}")
    return best


def reflections_of(group):
    return [group.matrix(s) for s in group.reflections]


def make_g4():
    omega = cyclo_make(3, 1)
    elems = [scale(omega, q) for q in binary_tetrahedral()]
    amb = matrix_group("ambient", elems, 12)
    refl = [m for m in reflections_of(amb) if _order_of(m) == 3]
    return pick_generators(refl, 3, 12, 24), 12


def make_g12():
    i = cyclo_make(4, 1)
    elems = binary_tetrahedral() + [scale(i, q) for q in binary_octahedral_extra()]
    amb = matrix_group("ambient", elems, 8)
    return pick_generators(reflections_of(amb), 2, 8, 48), 8


def make_g24():
    z = [cyclo_make(7, k) for k in range(7)]
    zero, one = c(0), c(1)
    s = [[z[1], zero, zero], [zero, z[4], zero], [zero, zero, z[2]]]
    t = [[zero, one, zero], [zero, zero, one], [one, zero, zero]]
    a, b, d = z[1] - z[6], z[2] - z[5], z[4] - z[3]
    sqrt_m7 = z[1] + z[2] + z[4] - z[3] - z[5] - z[6]
    f = -1 / sqrt_m7
    r = [[f * a, f * b, f * d], [f * b, f * d, f * a], [f * d, f * a, f * b]]
    minus = [[-one, zero, zero], [zero, -one, zero], [zero, zero, -one]]
    amb = matrix_group("ambient", [s, t, r, minus], 7)
    if amb.order != 336:
        raise SystemExit(f"Klein construction gave order {amb.order}")
    return pick_generators(reflections_of(amb), 2, 7, 336), 7


def _order_of(m):
    p = m
    for k in range(1, 100):
        if all((x == (1 if i == j else 0)) for i, row in enumerate(p) for j, x in enumerate(row)):
            return k
        p = mat_mul(p, m)
    return None


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else OUT
    out.mkdir(parents=True, exist_ok=True)
    for name, maker in (("G4", make_g4), ("G12", make_g12), ("G24", make_g24)):
        gens, order = maker()
        data = {
            "name": name,
            "field_order": order,
            "dimension": len(gens[0]),
            "generators": [matrix_to_json(g, order) for g in gens],
        }
        (out / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")
        print(f"wrote {name}.json with {len(gens)} generators")


if __name__ == "__main__":
    main()
