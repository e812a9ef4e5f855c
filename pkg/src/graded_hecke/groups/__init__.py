"""Group construction from textual specs."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import DEFAULT_CAP, CapExceededError, ConjClass, Group, GroupError, matrix_group
from .coxeter import coxeter_group, coxeter_matrix, exponents, monomial_exponents, EXCEPTIONAL_EXPONENTS
from .exceptional import generator_file_group, named_exceptional
from .monomial import MonomialElement, element_of, index_of_monomial, monomial_group

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "ConjClass",
    "Group",
    "GroupError",
    "GroupSpec",
    "MonomialElement",
    "build_group",
    "element_of",
    "group_exponents",
    "index_of_monomial",
    "matrix_group",
    "parse_spec",
]

_FAMILY = re.compile(r"^G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_DIHEDRAL = re.compile(r"^I2\(\s*(\d+)\s*\)$")
_COXETER = re.compile(r"^([ABDEFH])(\d+)$")
_NAMED = re.compile(r"^G(4|12|24|33)$")


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # family | coxeter | exceptional | file
    params: tuple

    def canonical(self) -> str:
        if self.kind == "family":
            return "G({},{},{})".format(*self.params)
        if self.kind == "coxeter":
            t, n = self.params
            return f"I2({n})" if t == "I" else f"{t}{n}"
        if self.kind == "exceptional":
            return self.params[0]
        return f"file:{self.params[0]}"


def parse_spec(text: str) -> GroupSpec:
    s = text.strip().replace("_", "")
    if m := _FAMILY.match(s):
        r, p, n = map(int, m.groups())
        if r < 1 or p < 1 or n < 1 or r % p:
            raise GroupError(f"bad group spec {text!r}: need p | r and positive r, p, n")
        return GroupSpec("family", (r, p, n))
    if m := _DIHEDRAL.match(s):
        k = int(m.group(1))
        if k < 2:
            raise GroupError(f"bad group spec {text!r}: I2(m) needs m >= 2")
        return GroupSpec("coxeter", ("I", k))
    if m := _NAMED.match(s):
        return GroupSpec("exceptional", ("G" + m.group(1),))
    if m := _COXETER.match(s):
        t, n = m.group(1), int(m.group(2))
        valid = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "H": n in (3, 4),
        }[t]
        if not valid:
            raise GroupError(f"bad group spec {text!r}: no type {t}{n}")
        return GroupSpec("coxeter", (t, n))
    if text.startswith("file:"):
        return GroupSpec("file", (text[5:],))
    raise GroupError(
        f"cannot parse group spec {text!r}; expected G(r,p,n), A3, B4, D4, E6, F4, H3, "
        "I2(m), G4, G12, G24, G33 or file:<path>"
    )


def build_group(spec: str | GroupSpec, cap: int = DEFAULT_CAP) -> Group:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind == "family":
        return monomial_group(*spec.params, cap=cap)
    if spec.kind == "coxeter":
        t, n = spec.params
        group = coxeter_group(spec.canonical(), coxeter_matrix(t, n), cap=cap)
        group.coxeter_type = (t, n)
        return group
    if spec.kind == "exceptional":
        return named_exceptional(spec.params[0], cap=cap)
    return generator_file_group(spec.params[0], cap=cap)


def group_exponents(spec: str | GroupSpec) -> list[int] | None:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind == "family":
        return monomial_exponents(*spec.params)
    if spec.kind == "coxeter":
        return exponents(*spec.params)
    if spec.kind == "exceptional":
        return EXCEPTIONAL_EXPONENTS[spec.params[0]]
    return None
