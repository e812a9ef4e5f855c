import subprocess
import sys

import numpy as np
import pytest

from graded_hecke import _kernels_py, kernels

try:
    from graded_hecke import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

needs_c = pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")


@needs_c
@pytest.mark.parametrize("spec", ["G(3,1,3)", "H3", "G12", "F4"])
def test_backends_agree(group, spec):
    g = group(spec)
    gens = g.perms[g.generators]
    a = _kernels_py.closure(gens, g.base, 10**6)
    b = np.asarray(_kernels_c.closure(gens, g.base, 10**6))
    assert np.array_equal(a, b)
    la = _kernels_py.conjugacy_labels(g.perms, g.base, g.generators, g._sorted_keys, g._key_order)
    lb = _kernels_c.conjugacy_labels(g.perms, g.base, g.generators, g._sorted_keys, g._key_order)
    assert np.array_equal(np.asarray(la), np.asarray(lb))
    for c in g.classes[:6]:
        ma = _kernels_py.centralizer_mask(g.perms, g.inverse_perms_base, g.perms[c.rep], g.base)
        mb = _kernels_c.centralizer_mask(g.perms, g.inverse_perms_base, g.perms[c.rep], g.base)
        assert np.array_equal(np.asarray(ma, dtype=bool), np.asarray(mb, dtype=bool))


@pytest.mark.parametrize("mod", [_kernels_py, pytest.param(_kernels_c, marks=needs_c)])
def test_closure_cap(group, mod):
    g = group("G(3,1,3)")
    with pytest.raises(kernels.CapExceeded):
        mod.closure(g.perms[g.generators], g.base, 50)


def test_pure_python_switch_gives_same_classes():
    code = (
        "from graded_hecke import kernels; from graded_hecke.groups import build_group;"
        "g = build_group('G(4,2,3)'); print(kernels.BACKEND, [c.size for c in g.classes])"
    )
    env = {"GRADED_HECKE_PURE_PYTHON": "1", "PATH": ""}
    out_py = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True).stdout
    out_default = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    assert out_py.split(" ", 1)[0] == "python"
    assert out_py.split(" ", 1)[1] == out_default.split(" ", 1)[1]
