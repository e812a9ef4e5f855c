"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as integer coefficient vectors over a common positive
denominator, reduced modulo the N-th cyclotomic polynomial, so equality of
elements of the same order is equality of the stored data.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "CyclotomicZeroDivisionError",
    "cyclotomic_polynomial",
    "cyclo_make",
    "cyclo_arith",
    "zeta",
    "lcm",
]


class CyclotomicZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element of a cyclotomic field."""


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(_phi(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients of Phi_n, lowest degree first.

    Built by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("order must be positive")
    return [Fraction(c) for c in _phi(n)]


class _Field:
    """Cached reduction data for Q(zeta_N)."""

    __slots__ = ("order", "degree", "phi", "powers", "units")

    def __init__(self, order: int):
        self.order = order
        self.phi = _phi(order)
        self.degree = len(self.phi) - 1
        # powers[e] = reduced coefficient vector of zeta^e, 0 <= e < N
        powers = []
        for e in range(order):
            vec = [0] * max(e + 1, self.degree)
            vec[e] = 1
            powers.append(tuple(self.reduce(vec)))
        self.powers = powers
        self.units = [k for k in range(1, order + 1) if gcd(k, order) == 1]

    def reduce(self, vec: list[int]) -> list[int]:
        d = self.degree
        phi = self.phi
        vec = list(vec)
        for i in range(len(vec) - 1, d - 1, -1):
            c = vec[i]
            if c:
                base = i - d
                for j in range(d):
                    if phi[j]:
                        vec[base + j] -= c * phi[j]
                vec[i] = 0
        if len(vec) < d:
            vec.extend([0] * (d - len(vec)))
        return vec[:d]


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    return _Field(order)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


class Cyclotomic:
    """An element of Q(zeta_order), immutable.

    ``nums[k] / den`` is the coefficient of zeta^k, 0 <= k < phi(order).
    """

    __slots__ = ("order", "nums", "den", "_hash")

    def __init__(self, order: int, nums, den: int = 1, *, _reduced: bool = False):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        if _reduced:
            self.nums, self.den = nums, den
        else:
            fld = _field(order)
            vec = list(nums)
            if len(vec) > fld.degree:
                vec = fld.reduce(vec)
            else:
                vec = vec + [0] * (fld.degree - len(vec))
            self.nums, self.den = _normalize(vec, den)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rational(cls, value, order: int = 1) -> Cyclotomic:
        q = Fraction(value)
        deg = _field(order).degree
        nums = [0] * deg
        nums[0] = q.numerator
        return cls(order, nums, q.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> Cyclotomic:
        """Build from rational coefficients of 1, zeta, zeta^2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in fr]
        # reduce exponents >= order using zeta^order = 1
        full = [0] * order
        for k, c in enumerate(nums):
            full[k % order] += c
        return cls(order, full, den)

    # -- basic queries ----------------------------------------------------
    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.nums]

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0] if self.nums else 0, self.den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- promotion ----------------------------------------------------------
    def promote(self, order: int) -> Cyclotomic:
        """Embed into Q(zeta_order) via zeta_N -> zeta_order^(order/N)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot promote order {self.order} to {order}")
        step = order // self.order
        fld = _field(order)
        acc = [0] * fld.degree
        for k, c in enumerate(self.nums):
            if c:
                p = fld.powers[(k * step) % order]
                for j, pj in enumerate(p):
                    if pj:
                        acc[j] += c * pj
        return Cyclotomic(order, *_normalize(acc, self.den), _reduced=True)

    def key(self, order: int | None = None) -> tuple:
        """Hashable canonical encoding at a fixed order."""
        x = self if order is None else self.promote(order)
        return (x.nums, x.den)

    def _coerce(self, other) -> Cyclotomic | None:
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.from_rational(other, self.order)
        return None

    @staticmethod
    def _common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if a.order == b.order:
            return a, b
        n = lcm(a.order, b.order)
        return a.promote(n), b.promote(n)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        if b.is_zero():
            return a
        if a.is_zero():
            return b
        if a.den == b.den:
            nums = [x + y for x, y in zip(a.nums, b.nums)]
            return Cyclotomic(a.order, *_normalize(nums, a.den), _reduced=True)
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return Cyclotomic(a.order, *_normalize(nums, a.den * b.den), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.nums), self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        if a.is_zero() or b.is_zero():
            return Cyclotomic(a.order, tuple(0 for _ in a.nums), 1, _reduced=True)
        if b.is_rational():
            c = b.nums[0]
            return Cyclotomic(a.order, *_normalize([x * c for x in a.nums], a.den * b.den), _reduced=True)
        if a.is_rational():
            c = a.nums[0]
            return Cyclotomic(a.order, *_normalize([x * c for x in b.nums], a.den * b.den), _reduced=True)
        fld = _field(a.order)
        d = fld.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        prod[i + j] += x * y
        vec = fld.reduce(prod)
        return Cyclotomic(a.order, *_normalize(vec, a.den * b.den), _reduced=True)

    __rmul__ = __mul__

    def galois(self, k: int) -> Cyclotomic:
        """Apply the automorphism zeta -> zeta^k (gcd(k, order) == 1)."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        fld = _field(n)
        acc = [0] * fld.degree
        for i, c in enumerate(self.nums):
            if c:
                p = fld.powers[(i * k) % n]
                for j, pj in enumerate(p):
                    if pj:
                        acc[j] += c * pj
        return Cyclotomic(n, *_normalize(acc, self.den), _reduced=True)

    def conj(self) -> Cyclotomic:
        """Complex conjugation, zeta -> zeta^-1."""
        return self.galois(-1 % self.order if self.order > 1 else 1)

    def norm(self) -> Fraction:
        y = Cyclotomic.from_rational(1, self.order)
        for k in _field(self.order).units:
            y = y * self.galois(k)
        return y.rational_value()

    def inv(self) -> Cyclotomic:
        if self.is_zero():
            raise CyclotomicZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.rational_value(), self.order)
        y = Cyclotomic.from_rational(1, self.order)
        for k in _field(self.order).units:
            if k != 1:
                y = y * self.galois(k)
        nrm = (self * y).rational_value()
        return y * (1 / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Cyclotomic.from_rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        # normalized trace is independent of the ambient order
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def normalized_trace(self) -> Fraction:
        n = self.order
        total = Fraction(0)
        for k, c in enumerate(self.nums):
            if c:
                m = n // gcd(k, n)
                total += Fraction(c * _mobius(m), _totient(m))
        return total / self.den

    # -- rendering ------------------------------------------------------------
    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self.nums)) / self.den

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.nums)}, {self.den})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization --------------------------------------------------------
    def to_json(self) -> dict:
        coeffs = [str(c) for c in self.coeffs]
        coeffs += ["0"] * (self.order - len(coeffs))
        return {"order": self.order, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        return cls.from_coeffs(int(data["order"]), [Fraction(c) for c in data["coeffs"]])


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cyclo_make(order: int, power: int) -> Cyclotomic:
    """zeta_order ** power in canonical reduced form."""
    if order < 1:
        raise ValueError("order must be positive")
    fld = _field(order)
    return Cyclotomic(order, fld.powers[power % order], 1, _reduced=True)


zeta = cyclo_make


def cyclo_arith(a: Cyclotomic, b: Cyclotomic | None, op: str, order: int | None = None) -> Cyclotomic:
    """Dispatch helper: op in {add, mul, inv, conj, promote}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    if op == "promote":
        return a.promote(order)
    raise ValueError(f"unknown op {op!r}")


def as_cyclotomic(x, order: int = 1) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.from_rational(x, order)


ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)
