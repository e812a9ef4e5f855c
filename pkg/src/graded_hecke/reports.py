"""Report dictionaries and their json / markdown / text renderings.

Reports are plain dicts of str, int, bool and lists so that json output is
byte-stable: keys are sorted on dump and lists are built in class-label or
row order, never from set iteration.
"""
from __future__ import annotations

import json
from collections import deque

from . import __version__
from .classifier import (
    ParameterSpace,
    class_labels_of,
    classify,
    coxeter_pair_powers,
    table1_expected,
    table2_expected,
    table3_expected,
    two_reflection_shapes,
)
from .groups import build_group, group_exponents, index_of_monomial
from .groups.core import Group
from .groups.monomial import element_of

TABLE1_ROWS = [
    "A2", "A3", "A4", "A5", "B3", "B4", "D4", "E6", "F4", "H3", "H4",
    *(f"I2({m})" for m in range(3, 13)),
]
TABLE1_SKIPPED = ["E7", "E8"]
TABLE3_ROWS = ["G4", "G12", "G24", "G33"]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- element names ------------------------------------------------------------

def _words(group: Group) -> dict[int, tuple]:
    words = group.__dict__.get("_words")
    if words is None:
        words = {group.identity_index: ()}
        queue = deque([group.identity_index])
        while queue:
            x = queue.popleft()
            for i, s in enumerate(group.generators):
                y = group.mul(x, s)
                if y not in words:
                    words[y] = words[x] + (i + 1,)
                    queue.append(y)
        group.__dict__["_words"] = words
    return words


def element_label(group: Group, g: int) -> str:
    """Monomial notation for G(r,p,n), a shortest word in the generators otherwise."""
    if group.monomial:
        return str(element_of(group, g))
    w = _words(group)[g]
    return "*".join(f"s{i}" for i in w) if w else "1"


# -- classification --------------------------------------------------------------

def classification_report(group: Group, space: ParameterSpace | None = None, spec: str | None = None) -> dict:
    space = space or classify(group)
    by_label = {v.cls.label: v for v in space.verdicts}
    classes = []
    for c in group.classes:
        entry = {
            "label": c.label,
            "rep": element_label(group, c.rep),
            "order": c.order,
            "det": str(c.det),
            "size": c.size,
            "centralizer_order": c.centralizer_order,
        }
        v = by_label.get(c.label)
        if v is None:
            entry.update(codim=0, admissible=False)
        else:
            entry.update(codim=v.codim, admissible=v.admissible)
            if v.witness is not None:
                entry["witness"] = element_label(group, v.witness)
                entry["witness_det"] = str(v.det_value)
        classes.append(entry)
    return {
        "kind": "classification",
        "version": __version__,
        "group": spec or group.name,
        "order": group.order,
        "classes": classes,
        "d": space.d,
        "invariant_dim": space.invariant_dim,
        "total": space.total,
    }


def census_report(group: Group, spec: str | None = None) -> dict:
    """Codim-2 count against the exponent sum, plus reflections and center."""
    codim2 = 0
    for c in group.classes:
        if group.codim_fixed(c.rep) == 2:
            codim2 += c.size
    exps = group_exponents(spec) if spec else None
    expected = None
    if exps:
        expected = sum(a * b for i, a in enumerate(exps) for b in exps[i + 1:])
    return {
        "kind": "census",
        "version": __version__,
        "group": spec or group.name,
        "order": group.order,
        "classes": len(group.classes),
        "reflections": len(group.reflections),
        "center_order": len(group.center()),
        "codim2": codim2,
        "exponents": exps,
        "codim2_expected": expected,
        "status": "PASS" if expected is None or expected == codim2 else "FAIL",
    }


# -- tables --------------------------------------------------------------------

def _labels_json(group, labels) -> list[str]:
    reps = {c.label: c.rep for c in group.classes}
    return [element_label(group, reps[x]) for x in sorted(labels)]


def table1_row(spec: str, cap: int) -> dict:
    group = build_group(spec, cap=cap)
    kind, n = group.coxeter_type
    space = classify(group)
    expected = class_labels_of(group, table1_expected(group, kind, n))
    got = space.admissible_labels
    powers = class_labels_of(group, coxeter_pair_powers(group))
    return {
        "group": spec,
        "order": group.order,
        "expected": _labels_json(group, expected),
        "admissible": _labels_json(group, got),
        "pair_powers_cover": got <= powers,
        "invariant_dim": space.invariant_dim,
        "status": "PASS" if expected == got and got <= powers and space.invariant_dim == 0 else "FAIL",
    }


def table2_grid(max_r: int = 6, max_n: int = 4, dihedral_max: int = 12, half_even: tuple = (6, 10)) -> list[tuple]:
    rows = []
    for r in range(1, max_r + 1):
        for p in range(1, r + 1):
            if r % p:
                continue
            for n in range(2, max_n + 1):
                rows.append((r, p, n))
    rows += [(r, r, 2) for r in range(max_r + 1, dihedral_max + 1)]
    rows += [(r, r // 2, 2) for r in half_even if r > max_r]
    return rows


def table2_row(rpn: tuple, cap: int) -> dict:
    r, p, n = rpn
    spec = f"G({r},{p},{n})"
    group = build_group(spec, cap=cap)
    space = classify(group)
    expected = class_labels_of(group, (index_of_monomial(group, x) for x in table2_expected(r, p, n)))
    got = space.admissible_labels
    shapes = class_labels_of(group, (index_of_monomial(group, x) for x in two_reflection_shapes(r, p, n)))
    return {
        "group": spec,
        "order": group.order,
        "expected": _labels_json(group, expected),
        "admissible": _labels_json(group, got),
        "within_shapes": got <= shapes,
        "status": "PASS" if expected == got and got <= shapes else "FAIL",
    }


def table3_row(spec: str, cap: int) -> dict:
    group = build_group(spec, cap=cap)
    space = classify(group)
    expected = table3_expected(group, spec)
    got = space.admissible_labels
    return {
        "group": spec,
        "order": group.order,
        "expected": _labels_json(group, expected),
        "admissible": _labels_json(group, got),
        "total": space.total,
        "status": "PASS" if expected == got else "FAIL",
    }


def table_report(which: int, rows: list[dict]) -> dict:
    out = {
        "kind": f"table{which}",
        "version": __version__,
        "rows": rows,
        "status": "PASS" if all(r["status"] in ("PASS", "SKIPPED") for r in rows) else "FAIL",
    }
    return out


def skipped_rows() -> list[dict]:
    return [{"group": s, "status": "SKIPPED", "reason": "exceeds the enumeration cap"} for s in TABLE1_SKIPPED]


# -- rendering ------------------------------------------------------------------

def render_markdown(report: dict) -> str:
    kind = report["kind"]
    if kind.startswith("table"):
        lines = ["| Group | Representatives with a_g != 0 | Computed | Status |", "|---|---|---|---|"]
        for row in report["rows"]:
            exp = ", ".join(row.get("expected", [])) or "none"
            got = ", ".join(row.get("admissible", [])) or "none"
            lines.append(f"| {row['group']} | {exp} | {got} | {row['status']} |")
        return "\n".join(lines) + "\n"
    if kind == "classification":
        lines = [
            f"**{report['group']}**: order {report['order']}, d = {report['d']}, "
            f"invariant 2-forms = {report['invariant_dim']}, total = {report['total']}",
            "",
            "| Rep | Order | det | Size | Z | codim | admissible | witness |",
            "|---|---|---|---|---|---|---|---|",
        ]
        for c in report["classes"]:
            lines.append(
                f"| {c['rep']} | {c['order']} | {c['det']} | {c['size']} | {c['centralizer_order']} "
                f"| {c['codim']} | {'yes' if c['admissible'] else ''} | {c.get('witness', '')} |"
            )
        return "\n".join(lines) + "\n"
    return render_text(report)


def render_text(report: dict) -> str:
    kind = report["kind"]
    if kind.startswith("table"):
        lines = [f"{row['status']:8} {row['group']}" for row in report["rows"]]
        lines.append(f"overall: {report['status']}")
        return "\n".join(lines) + "\n"
    if kind == "classification":
        lines = [f"{report['group']} order={report['order']}"]
        for c in report["classes"]:
            mark = "admissible" if c["admissible"] else ""
            lines.append(f"  [{c['label']}] {c['rep']} order={c['order']} size={c['size']} codim={c['codim']} {mark}".rstrip())
        lines.append(f"d={report['d']} invariant_dim={report['invariant_dim']} total={report['total']}")
        return "\n".join(lines) + "\n"
    if "results" in report:
        lines = [f"{r['status']:5} {r['identity_id']} {r.get('counterexample', '')}".rstrip() for r in report["results"]]
        lines.append(f"overall: {report['status']}")
        return "\n".join(lines) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in sorted(report.items())) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    if fmt == "markdown":
        return render_markdown(report)
    return render_text(report)
