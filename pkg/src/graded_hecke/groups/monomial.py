"""The imprimitive groups G(r,p,n) as monomial matrices.

An element is xi^lam w: the permutation w (one-line, 1-indexed) followed by
the diagonal matrix xi_1^lam_1 ... xi_n^lam_n with xi = exp(2 pi i / r).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, gcd

import numpy as np

from ..exact.cyclotomic import Cyclotomic, cyclo_make
from ..linalg import HermitianForm, Matrix
from .core import DEFAULT_CAP, CapExceededError, Group, GroupError


@dataclass(frozen=True)
class MonomialElement:
    r: int
    lam: tuple[int, ...]
    w: tuple[int, ...]  # one-line notation, 1-indexed: j -> w[j-1]

    def __post_init__(self):
        if sorted(self.w) != list(range(1, len(self.w) + 1)):
            raise ValueError(f"not a permutation: {self.w}")
        if len(self.lam) != len(self.w):
            raise ValueError("exponent vector and permutation sizes differ")
        object.__setattr__(self, "lam", tuple(x % self.r for x in self.lam))

    @property
    def n(self) -> int:
        return len(self.w)

    @classmethod
    def identity(cls, r: int, n: int) -> MonomialElement:
        return cls(r, (0,) * n, tuple(range(1, n + 1)))

    @classmethod
    def xi(cls, r: int, n: int, exps: dict[int, int]) -> MonomialElement:
        """Diagonal element prod xi_i^{exps[i]}."""
        lam = [0] * n
        for i, e in exps.items():
            lam[i - 1] = e
        return cls(r, tuple(lam), tuple(range(1, n + 1)))

    @classmethod
    def cycle(cls, r: int, n: int, *points: int, lam: dict[int, int] | None = None) -> MonomialElement:
        """xi^lam times the cycle (points[0] -> points[1] -> ...)."""
        w = list(range(1, n + 1))
        for a, b in zip(points, points[1:] + points[:1]):
            w[a - 1] = b
        el = cls(r, (0,) * n, tuple(w))
        if lam:
            el = cls.xi(r, n, lam) * el
        return el

    def act(self, mu: tuple[int, ...]) -> tuple[int, ...]:
        """w acting on an exponent vector: (w mu)_{w(j)} = mu_j."""
        out = [0] * self.n
        for j, wj in enumerate(self.w):
            out[wj - 1] = mu[j]
        return tuple(out)

    def __mul__(self, other: MonomialElement) -> MonomialElement:
        wmu = self.act(other.lam)
        lam = tuple(a + b for a, b in zip(self.lam, wmu))
        wu = tuple(self.w[u - 1] for u in other.w)
        return MonomialElement(self.r, lam, wu)

    def inverse(self) -> MonomialElement:
        winv = [0] * self.n
        for j, wj in enumerate(self.w):
            winv[wj - 1] = j + 1
        winv = tuple(winv)
        # (xi^lam w)^-1 = w^-1 xi^-lam = xi^{-w^-1 lam} w^-1
        neg = tuple(-x for x in self.lam)
        lam = MonomialElement(self.r, (0,) * self.n, winv).act(neg)
        return MonomialElement(self.r, lam, winv)

    def in_group(self, p: int) -> bool:
        return sum(self.lam) % p == 0

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of w, each starting at its smallest point, fixed points included."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.w[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_data(self) -> list[tuple[int, int]]:
        """(length k, total exponent a) for each cycle."""
        return [(len(c), sum(self.lam[i - 1] for i in c) % self.r) for c in self.cycles()]

    def matrix(self) -> Matrix:
        n = self.n
        zero = Cyclotomic.from_rational(0)
        m = [[zero] * n for _ in range(n)]
        # g v_j = xi^{lam_{w(j)}} v_{w(j)}
        for j, wj in enumerate(self.w):
            m[wj - 1][j] = cyclo_make(self.r, self.lam[wj - 1])
        return m

    def __str__(self):
        parts = [
            f"xi{i + 1}^{e}" if e != 1 else f"xi{i + 1}"
            for i, e in enumerate(self.lam)
            if e
        ]
        cyc = [c for c in self.cycles() if len(c) > 1]
        parts += ["(" + ",".join(map(str, c)) + ")" for c in cyc]
        return "*".join(parts) if parts else "1"


def group_order(r: int, p: int, n: int) -> int:
    return r**n * factorial(n) // p


def monomial_group(r: int, p: int, n: int, cap: int = DEFAULT_CAP) -> Group:
    """Enumerate G(r,p,n) directly, in lex order of (lam, one-line w)."""
    if r < 1 or p < 1 or n < 1 or r % p:
        raise GroupError(f"G({r},{p},{n}) needs positive r, n and p dividing r")
    name = f"G({r},{p},{n})"
    order = group_order(r, p, n)
    if order > cap:
        raise CapExceededError(name, cap, order)
    lams = np.array([lam for lam in product(range(r), repeat=n) if sum(lam) % p == 0], dtype=np.int32)
    ws = np.array(list(permutations(range(n))), dtype=np.int32)
    # point i*r + k is zeta^k v_i; element sends it to zeta^{k + lam_{w(i)}} v_{w(i)}
    pts_i = np.repeat(np.arange(n), r)
    pts_k = np.tile(np.arange(r), n)
    nl, nw = len(lams), len(ws)
    wi = ws[:, pts_i]  # (nw, m)
    perms = np.empty((nl, nw, n * r), dtype=np.int32)
    for a in range(nl):
        shift = lams[a][wi]  # lam_{w(i)}
        perms[a] = wi * r + (pts_k[None, :] + shift) % r
    perms = perms.reshape(nl * nw, n * r)
    zero = Cyclotomic.from_rational(0)
    points = []
    for i in range(n):
        for k in range(r):
            v = [zero] * n
            v[i] = cyclo_make(r, k)
            points.append(v)
    base = [i * r for i in range(n)]
    group = Group(name, n, r, points, base, perms, [], HermitianForm.standard(n), monomial=(r, p, n))
    group._lams = np.repeat(lams, nw, axis=0)
    group._ws = np.tile(ws, (nl, 1))
    gens = []
    for s in monomial_generators(r, p, n):
        gens.append(index_of_monomial(group, s))
    group.generators = sorted(set(g for g in gens if g != group.identity_index))
    return group


def monomial_generators(r: int, p: int, n: int) -> list[MonomialElement]:
    gens = [MonomialElement.cycle(r, n, i, i + 1) for i in range(1, n)]
    if p < r:
        gens.append(MonomialElement.xi(r, n, {1: p}))
    if n >= 2:
        gens.append(MonomialElement.xi(r, n, {1: 1, 2: -1}))
    return gens


def element_of(group: Group, g: int) -> MonomialElement:
    r = group.monomial[0]
    lam = tuple(int(x) for x in group._lams[g])
    w = tuple(int(x) + 1 for x in group._ws[g])
    return MonomialElement(r, lam, w)


def index_of_monomial(group: Group, el: MonomialElement) -> int:
    r, _, n = group.monomial
    perm = np.empty(n * r, dtype=np.int32)
    for i in range(n):
        wi = el.w[i] - 1
        for k in range(r):
            perm[i * r + k] = wi * r + (k + el.lam[wi]) % r
    return group.index_of_perm(perm)


# -- conjugacy normal form -----------------------------------------------------

def _class_offset(el: MonomialElement) -> int:
    """Exponent sum (mod r) of a conjugator taking the standard form to el."""
    total = 0
    for cyc in el.cycles():
        k = len(cyc)
        a = sum(el.lam[i - 1] for i in cyc)
        partial = 0
        for t in range(1, k):
            partial += el.lam[cyc[t] - 1]
            total += partial
        total -= a
    return total % el.r


def normal_form(el: MonomialElement, p: int) -> MonomialElement:
    """Canonical conjugate of el in G(r,p,n).

    Cycles sorted by (length, exponent) are laid out on increasing blocks
    of indices, each carrying its exponent on its last index. The last block
    additionally carries xi_{first}^c xi_{last}^{-c}, where c in [0, d) and
    d = gcd(p, all lengths, all exponents) counts how the G(r,1,n)-class
    splits in G(r,p,n).
    """
    r, n = el.r, el.n
    data = sorted(el.cycle_data())
    d = p
    for k, a in data:
        d = gcd(d, gcd(k, a))
    c = (-_class_offset(el)) % d
    lam = [0] * n
    w = list(range(1, n + 1))
    start = 1
    for k, a in data:
        block = list(range(start, start + k))
        for x, y in zip(block, block[1:] + block[:1]):
            w[x - 1] = y
        lam[block[-1] - 1] = a
        start += k
    if c:
        first = start - data[-1][0]
        lam[first - 1] += c
        lam[n - 1] -= c
    return MonomialElement(r, tuple(lam), tuple(w))


def centralizer_order_formula(el: MonomialElement) -> int:
    """|Z(g)| in G(r,1,n) from the cycle data of g."""
    result = 1
    for (k, _a), mult in Counter(el.cycle_data()).items():
        result *= factorial(mult) * k**mult * el.r**mult
    return result


def center_formula(r: int, p: int, n: int) -> list[MonomialElement]:
    """Scalars xi^l * 1 with n*l = 0 mod p."""
    return [
        MonomialElement(r, (ell,) * n, tuple(range(1, n + 1)))
        for ell in range(r)
        if (n * ell) % p == 0
    ]


def reflection_formula(r: int, p: int, n: int) -> list[MonomialElement]:
    """xi_i^k xi_j^-k (i,j) and xi_i^{kp} for k != 0."""
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(r):
                out.append(MonomialElement.cycle(r, n, i, j, lam={i: k, j: -k}))
    for i in range(1, n + 1):
        for k in range(1, r // p):
            out.append(MonomialElement.xi(r, n, {i: k * p}))
    return out
