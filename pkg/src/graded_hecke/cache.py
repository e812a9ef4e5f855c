"""On-disk cache of group data and reports, one entry per canonical group spec.

Entries are keyed by a digest of the canonical spec and the engine version,
so a version bump invalidates everything. Writes go to a temporary file in
the same directory and are renamed into place.
"""
from __future__ import annotations

import hashlib
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from . import __version__

ENV_VAR = "GRADED_HECKE_CACHE"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "graded_hecke"


def digest(spec: str, version: str = __version__) -> str:
    return hashlib.sha256(f"{spec}\0{version}".encode()).hexdigest()[:24]


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class Cache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root else default_dir()

    def _json_path(self, spec: str) -> Path:
        return self.root / f"{digest(spec)}.json"

    def _npz_path(self, spec: str) -> Path:
        return self.root / f"{digest(spec)}.npz"

    def load(self, spec: str) -> dict | None:
        path = self._json_path(spec)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("spec") != spec or data.get("version") != __version__:
            return None
        return data

    def report(self, spec: str, kind: str) -> dict | None:
        entry = self.load(spec)
        return None if entry is None else entry.get("reports", {}).get(kind)

    def store_report(self, spec: str, kind: str, report: dict) -> None:
        entry = self.load(spec) or {"spec": spec, "version": __version__, "reports": {}}
        entry["reports"][kind] = report
        self._write_entry(spec, entry)

    def store_group(self, spec: str, group) -> None:
        """Element permutations, class partition and centralizer orders."""
        entry = self.load(spec) or {"spec": spec, "version": __version__, "reports": {}}
        entry["group"] = {
            "order": group.order,
            "class_labels": [int(x) for x in group.class_labels],
            "centralizer_orders": [c.centralizer_order for c in group.classes],
        }
        buf = io.BytesIO()
        np.savez_compressed(buf, perms=group.perms, base=group.base)
        _atomic_write(self._npz_path(spec), buf.getvalue())
        self._write_entry(spec, entry)

    def group_data(self, spec: str) -> dict | None:
        entry = self.load(spec)
        if entry is None or "group" not in entry:
            return None
        out = dict(entry["group"])
        try:
            with np.load(self._npz_path(spec)) as z:
                out["perms"] = z["perms"]
                out["base"] = z["base"]
        except OSError:
            return None
        return out

    def _write_entry(self, spec: str, entry: dict) -> None:
        text = json.dumps(entry, sort_keys=True, indent=1) + "\n"
        _atomic_write(self._json_path(spec), text.encode())

    def entries(self) -> list[dict]:
        out = []
        if not self.root.is_dir():
            return out
        for p in sorted(self.root.glob("*.json")):
            try:
                data = json.loads(p.read_text())
            except (OSError, ValueError):
                continue
            out.append({"file": p.name, "spec": data.get("spec"), "version": data.get("version")})
        return out

    def clear(self) -> int:
        n = 0
        if self.root.is_dir():
            for p in list(self.root.glob("*.json")) + list(self.root.glob("*.npz")):
                p.unlink(missing_ok=True)
                n += 1
        return n
