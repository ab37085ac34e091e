import os
import random
import subprocess
import sys

import pytest

from subcol import _pykernels, kernels
from subcol.errors import BudgetExceeded
from subcol.generators import generate
from subcol.orderings import VertexOrdering

ckernels = pytest.importorskip("subcol._ckernels", reason="compiled kernels not built")


def _inputs(g, seed):
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    indptr, indices = g.csr
    return indptr, indices, VertexOrdering(tuple(order)).pos_array


@pytest.mark.parametrize("seed", range(6))
def test_parity_on_graphs_wider_than_a_machine_word(seed):
    # ids beyond 63 exercise the arbitrary-width bit sets
    g = generate("random-plane-triangulation", {"n": 90}, seed).graph
    args = _inputs(g, seed)
    for k, l in ((1, 3), (2, 4), (3, 5), (5, 5)):
        assert ckernels.greach_all(*args, k, l) == _pykernels.greach_all(*args, k, l)
        assert ckernels.gcol_value(*args, k, l) == _pykernels.gcol_value(*args, k, l)
    for k in (2, 4, 5):
        assert ckernels.subreach_all(*args, k) == _pykernels.subreach_all(*args, k)
        assert ckernels.semiweak_value(*args, k) == _pykernels.semiweak_value(*args, k)


def test_parity_on_small_random_graphs():
    rnd = random.Random(0)
    for trial in range(150):
        n = rnd.randint(1, 12)
        g = generate("gnp", {"n": n, "p": rnd.choice([0.2, 0.4, 0.6])}, trial).graph
        args = _inputs(g, trial)
        k = rnd.randint(1, 5)
        l = rnd.randint(k, 6)
        for v in range(n):
            assert ckernels.greach(*args, v, k, l) == _pykernels.greach(*args, v, k, l)
            assert ckernels.subreach(*args, v, l) == _pykernels.subreach(*args, v, l)


def test_cutoff_is_a_lower_bound_shortcut():
    g = generate("random-plane-triangulation", {"n": 50}, 3).graph
    args = _inputs(g, 3)
    full = _pykernels.gcol_value(*args, 2, 4)
    for mod in (ckernels, _pykernels):
        assert mod.gcol_value(*args, 2, 4, full - 1) >= full - 1
        assert mod.gcol_value(*args, 2, 4, full + 5) == full


def test_both_kernels_honour_budgets():
    g = generate("random-plane-triangulation", {"n": 80}, 2).graph
    args = _inputs(g, 2)
    for mod in (ckernels, _pykernels):
        with pytest.raises(BudgetExceeded):
            mod.gcol_value(*args, 4, 8, -1, 100)
        with pytest.raises(BudgetExceeded):
            mod.semiweak_value(*args, 6, -1, 100)


def test_selector_prefers_compiled_and_honours_override():
    assert kernels.IMPLEMENTATION == "cython"
    code = "import subcol.kernels as k; print(k.IMPLEMENTATION)"
    env = dict(os.environ, SUBCOL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
