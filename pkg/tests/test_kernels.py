import os
import random
import subprocess
import sys

import pytest

from char2sl import kernels
from char2sl.errors import BudgetExceeded
from char2sl.fields import parse_field
from char2sl.smallfield import context, gl_order, group, sl_order

needs_compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernel not built")
BACKENDS = [kernels.pure] + ([kernels.compiled] if kernels.compiled is not None else [])


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 1), (2, 3)])
def test_group_orders(k, n, r):
    F = parse_field("gf2" if r == 1 else f"gf2e:r={r}")
    ctx = context(F, n)
    q = F.order
    gl = k.enumerate_matrices(n, q, ctx.mul, ctx.inv, k.KIND_GL, 1 << 20)
    sl = k.enumerate_matrices(n, q, ctx.mul, ctx.inv, k.KIND_SL, 1 << 20)
    assert len(gl) == gl_order(n, q) and len(sl) == sl_order(n, q)
    assert len(set(gl)) == len(gl)


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_det_matches_matrix(k, F4):
    ctx = context(F4, 3)
    rng = random.Random(3)
    for _ in range(100):
        m = bytes(rng.randrange(4) for _ in range(9))
        M = ctx.decode(m)
        assert k.det(m, 3, 4, ctx.mul, ctx.inv) == M.det().value
        inv = k.inverse(m, 3, 4, ctx.mul, ctx.inv)
        if M.det():
            assert ctx.decode(inv) == M.inverse()
            assert k.matmul(m, inv, 3, 4, ctx.mul) == ctx.identity
        else:
            assert inv is None
        assert ctx.decode(k.transpose(m, 3)) == M.T


@needs_compiled
def test_backends_agree_on_group_scans(F2):
    ctx = context(F2, 3)
    mats, blob, binv = group(F2, 3, "GL")
    P, C = kernels.pure, kernels.compiled
    a = mats[17]
    s = bytes([1, 1, 0, 1, 0, 0, 0, 0, 1])
    assert P.conj_images(a, blob, binv, 3, 2, ctx.mul) == C.conj_images(a, blob, binv, 3, 2, ctx.mul)
    assert P.congruence_images(s, blob, 3, 2, ctx.mul) == C.congruence_images(s, blob, 3, 2, ctx.mul)
    assert P.commuting(blob, a, 3, 2, ctx.mul) == C.commuting(blob, a, 3, 2, ctx.mul)
    assert P.preserving(blob, s, 3, 2, ctx.mul) == C.preserving(blob, s, 3, 2, ctx.mul)
    assert P.square_scalar(blob, 3, 2, ctx.mul) == C.square_scalar(blob, 3, 2, ctx.mul)
    for kind in (1, 2, 3):
        assert P.enumerate_matrices(3, 2, ctx.mul, ctx.inv, kind, 1 << 20) == \
            C.enumerate_matrices(3, 2, ctx.mul, ctx.inv, kind, 1 << 20)


def test_budget(F4):
    with pytest.raises(BudgetExceeded):
        context(F4, 3).enumerate("GL", budget=1000)


def test_pure_python_selected_by_environment():
    env = dict(os.environ, CHAR2SL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from char2sl import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_compiled
def test_compiled_is_default():
    assert kernels.BACKEND == "cython"
