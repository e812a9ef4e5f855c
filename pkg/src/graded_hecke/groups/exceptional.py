"""Exceptional groups: G33 from its hyperplanes, G4/G12/G24 from data files."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..exact.cyclotomic import Cyclotomic, cyclo_make
from ..linalg import (
    HermitianForm,
    Matrix,
    Subspace,
    det,
    is_identity,
    mat_mul,
    mat_vec,
)
from .core import DEFAULT_CAP, CapExceededError, Group, GroupError, matrix_group

# checked on load; the full class tables are asserted in the tests
EXPECTED_PROFILES = {
    "G4": {
        "order": 24,
        "classes": 7,
    },
    "G12": {"order": 48, "classes": 8},
    "G24": {"order": 336},
}

FINITE_ORDER_BOUND = 1000


def reflection(alpha: list, form: HermitianForm | None = None) -> Matrix:
    """Order-2 reflection v -> v - 2 <v,a>/<a,a> a in the standard form."""
    n = len(alpha)
    form = form or HermitianForm.standard(n)
    aa = form.inner(alpha, alpha)
    out = []
    for j in range(n):
        e = [Cyclotomic.from_rational(int(i == j)) for i in range(n)]
        c = form.inner(e, alpha) * 2 / aa
        out.append([e[i] - c * alpha[i] for i in range(n)])
    # out holds images of basis vectors; matrix columns are images
    return [[out[j][i] for j in range(n)] for i in range(n)]


def g33_hyperplane_normals() -> list[list[Cyclotomic]]:
    """Normals a with H = {x : <x, a> = 0} for the five G33 mirrors in C^6."""
    z, o = Cyclotomic.from_rational(0), Cyclotomic.from_rational(1)
    omega = cyclo_make(3, 1)
    # x1 - omega x2 = <x, (1, -conj(omega), 0, ...)>
    return [
        [z, o, -o, z, z, z],
        [z, z, o, -o, z, z],
        [o, -o, z, z, z, z],
        [o, -omega.conj(), z, z, z, z],
        [o, o, o, o, o, o],
    ]


def g33(cap: int = DEFAULT_CAP) -> Group:
    if cap < 51840:
        raise CapExceededError("G33", cap, 51840)
    normals = [[x.promote(3) for x in a] for a in g33_hyperplane_normals()]
    big = [reflection(a) for a in normals]
    # Y^perp is spanned by the normals; restrict to it in echelon coordinates
    yperp = Subspace.span(normals, 6)
    basis = yperp.basis
    gens = []
    for s in big:
        cols = [yperp.coords(mat_vec(s, b)) for b in basis]
        gens.append([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])
    std = HermitianForm.standard(6)
    gram = [[std.inner(bi, bj) for bj in basis] for bi in basis]
    form = HermitianForm(gram)
    seeds = [yperp.coords(a) for a in normals]
    return matrix_group("G33", gens, 3, form=form, seeds=seeds, cap=cap)


# -- generator data files ----------------------------------------------------

def _matrix_from_json(rows) -> Matrix:
    return [[Cyclotomic.from_json(x) for x in row] for row in rows]


def matrix_to_json(m: Matrix, order: int) -> list:
    return [[x.promote(order).to_json() for x in row] for row in m]


def _finite_order(g: Matrix, bound: int = FINITE_ORDER_BOUND) -> int | None:
    p = g
    for k in range(1, bound + 1):
        if is_identity(p):
            return k
        p = mat_mul(p, g)
    return None


def load_generator_data(data: dict, source: str = "data") -> tuple[str, list[Matrix], int]:
    try:
        name = data["name"]
        order = int(data["field_order"])
        n = int(data["dimension"])
        gens = [_matrix_from_json(g) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"{source}: malformed generator file ({exc})") from None
    if not gens:
        raise GroupError(f"{source}: no generators")
    for k, g in enumerate(gens):
        if len(g) != n or any(len(row) != n for row in g):
            raise GroupError(f"{source}: generator {k} is not {n}x{n}")
        if any(x.order > 0 and order % x.order for row in g for x in row):
            raise GroupError(f"{source}: generator {k} has entries outside Q(zeta_{order})")
        if det(g).is_zero():
            raise GroupError(f"{source}: generator {k} is not invertible")
        if _finite_order(g) is None:
            raise GroupError(f"{source}: generator {k} has no finite order <= {FINITE_ORDER_BOUND}")
    return name, gens, order


def generator_file_group(path: str | Path, cap: int = DEFAULT_CAP) -> Group:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GroupError(f"cannot read generator file {path}: {exc}") from None
    name, gens, order = load_generator_data(data, str(path))
    return matrix_group(name, gens, order, cap=cap)


def named_exceptional(name: str, cap: int = DEFAULT_CAP) -> Group:
    """G4, G12 or G24 from the shipped data, checked against known invariants."""
    if name == "G33":
        return g33(cap)
    if name not in EXPECTED_PROFILES:
        raise GroupError(f"no data for exceptional group {name}")
    src = resources.files("graded_hecke.groups") / "data" / f"{name}.json"
    try:
        data = json.loads(src.read_text())
    except FileNotFoundError:
        raise GroupError(f"missing data file for {name}") from None
    _, gens, order = load_generator_data(data, f"{name}.json")
    group = matrix_group(name, gens, order, cap=cap)
    expected = EXPECTED_PROFILES[name]
    if group.order != expected["order"]:
        raise GroupError(f"{name}.json generates a group of order {group.order}, expected {expected['order']}")
    if "classes" in expected and len(group.classes) != expected["classes"]:
        raise GroupError(f"{name}.json gives {len(group.classes)} classes, expected {expected['classes']}")
    if any(group.codim_fixed(s) != 1 for s in group.generators):
        raise GroupError(f"{name}.json generators are not all reflections")
    return group
