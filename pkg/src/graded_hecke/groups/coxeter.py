"""Real reflection groups from Coxeter matrices (standard geometric representation)."""
from __future__ import annotations

from math import lcm

from ..exact.cyclotomic import Cyclotomic, cyclo_make
from ..linalg import HermitianForm, Matrix
from .core import DEFAULT_CAP, CapExceededError, Group, GroupError, matrix_group

# known orders, so oversized types are rejected before any enumeration
_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}


def _chain(n: int, labels: dict | None = None) -> list[list[int]]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    for (i, j), v in (labels or {}).items():
        m[i - 1][j - 1] = m[j - 1][i - 1] = v
    return m


def coxeter_matrix(kind: str, n: int | None = None) -> list[list[int]]:
    """Coxeter matrix with the node labelling of the usual diagram tables.

    E-types hang node 1 off node 4 of the chain 2-3-...; D_n joins nodes 1
    and 2 to node 3; B_n, F4, H3, H4 put the special bond at the left end
    except F4, whose double bond is 2=3.
    """
    if kind == "A":
        return _chain(n)
    if kind == "B":
        return _chain(n, {(1, 2): 4})
    if kind == "D":
        if n < 4:
            raise GroupError("D_n needs n >= 4")
        m = _chain(n, {(1, 2): 2, (1, 3): 3})
        return m
    if kind == "E":
        if n not in (6, 7, 8):
            raise GroupError("E_n needs n in 6, 7, 8")
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i in range(1, n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        m[0][3] = m[3][0] = 3
        return m
    if kind == "F":
        return _chain(4, {(2, 3): 4})
    if kind == "H":
        if n not in (3, 4):
            raise GroupError("H_n needs n in 3, 4")
        return _chain(n, {(1, 2): 5})
    if kind == "I":
        if n < 2:
            raise GroupError("I2(m) needs m >= 2")
        return [[1, n], [n, 1]]
    raise GroupError(f"unknown Coxeter type {kind}")


def check_coxeter_matrix(m: list[list[int]]) -> None:
    n = len(m)
    for i in range(n):
        if len(m[i]) != n or m[i][i] != 1:
            raise GroupError("Coxeter matrix needs 1 on the diagonal")
        for j in range(n):
            if i != j and (m[i][j] != m[j][i] or m[i][j] < 2):
                raise GroupError("Coxeter matrix must be symmetric with off-diagonal entries >= 2")


def _cos_pi_over(m: int) -> Cyclotomic:
    """cos(pi/m), demoted to a rational when it is one."""
    c = (cyclo_make(2 * m, 1) + cyclo_make(2 * m, -1)) / 2
    if c.is_rational():
        return Cyclotomic.from_rational(c.rational_value())
    return c


def coxeter_representation(m: list[list[int]]) -> tuple[list[Matrix], HermitianForm, int]:
    """Simple reflections in the root basis, the invariant form and the field order."""
    check_coxeter_matrix(m)
    n = len(m)
    cos = {}
    for i in range(n):
        for j in range(n):
            if m[i][j] not in cos:
                cos[m[i][j]] = _cos_pi_over(m[i][j])
    order = 1
    for c in cos.values():
        order = lcm(order, c.order)
    zero = Cyclotomic.from_rational(0)
    one = Cyclotomic.from_rational(1)
    gens = []
    for i in range(n):
        # sigma_i(alpha_j) = alpha_j + 2 cos(pi/m_ij) alpha_i, columns are images
        g = [[(one if r == c else zero) for c in range(n)] for r in range(n)]
        for j in range(n):
            g[i][j] = g[i][j] + 2 * cos[m[i][j]]
        gens.append([[x.promote(order) for x in row] for row in g])
    gram = [[(-cos[m[i][j]]).promote(order) for j in range(n)] for i in range(n)]
    return gens, HermitianForm(gram), order


def coxeter_group(name: str, m: list[list[int]], cap: int = DEFAULT_CAP) -> Group:
    if name in _ORDERS and _ORDERS[name] > cap:
        raise CapExceededError(name, cap, _ORDERS[name])
    gens, form, order = coxeter_representation(m)
    n = len(m)
    seeds = [[Cyclotomic.from_rational(int(i == j)).promote(order) for j in range(n)] for i in range(n)]
    group = matrix_group(name, gens, order, form=form, seeds=seeds, cap=cap)
    group.coxeter = m
    return group


def simple_reflection(group: Group, i: int) -> int:
    """Index of s_i (1-based) in a group built by coxeter_group."""
    return group.generators[i - 1]


# exponents of irreducible reflection groups
def exponents(kind: str, n: int) -> list[int]:
    if kind == "A":
        return list(range(1, n + 1))
    if kind == "B":
        return list(range(1, 2 * n, 2))
    if kind == "D":
        return sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    if kind == "E" and n == 6:
        return [1, 4, 5, 7, 8, 11]
    if kind == "E" and n == 7:
        return [1, 5, 7, 9, 11, 13, 17]
    if kind == "E" and n == 8:
        return [1, 7, 11, 13, 17, 19, 23, 29]
    if kind == "F":
        return [1, 5, 7, 11]
    if kind == "H" and n == 3:
        return [1, 5, 9]
    if kind == "H" and n == 4:
        return [1, 11, 19, 29]
    if kind == "I":
        return [1, n - 1]
    raise GroupError(f"no exponent data for {kind}{n}")


def monomial_exponents(r: int, p: int, n: int) -> list[int]:
    degrees = [r * i for i in range(1, n)] + [n * r // p]
    return sorted(d - 1 for d in degrees)


EXCEPTIONAL_EXPONENTS = {
    "G4": [3, 5],
    "G12": [5, 7],
    "G24": [3, 5, 13],
    "G33": [3, 5, 9, 11, 17],
}
