import random

import pytest

from oracles import naive_normal_form, same, scalar_to_sympy
from qgr import kernel
from qgr._pykernel import PBWKernel as PyKernel
from qgr.coeff import Scalar
from qgr.qmatrix import Ambient

try:
    from qgr._kernel import PBWKernel as CyKernel
except ImportError:  # extension not built
    CyKernel = None


def _words(m, n, count, maxlen, seed):
    rng = random.Random(seed)
    return [[rng.randrange(m * n) for _ in range(rng.randrange(0, maxlen + 1))] for _ in range(count)]


@pytest.mark.skipif(CyKernel is None, reason="compiled kernel not built")
@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 4)])
def test_backends_agree(m, n):
    py, cy = PyKernel(m, n), CyKernel(m, n)
    for w in _words(m, n, 150, 7, m * 10 + n):
        assert py.word(w) == cy.word(w)


@pytest.mark.skipif(CyKernel is None, reason="compiled kernel not built")
def test_backends_agree_at_inverse_parameter():
    py, cy = PyKernel(2, 3, True), CyKernel(2, 3, True)
    for w in _words(2, 3, 100, 6, 5):
        assert py.word(w) == cy.word(w)


@pytest.mark.parametrize("qinv", [False, True])
def test_kernel_matches_naive_rewriter(qinv):
    import sympy

    from oracles import q

    p = 1 / q if qinv else q
    m, n = 2, 3
    k = PyKernel(m, n, qinv)
    amb = Ambient(m, n)
    for w in _words(m, n, 40, 5, 11):
        got = {tuple(amb.index(g) for g in mono): scalar_to_sympy(Scalar.laurent(c)) for mono, c in k.word(w).items()}
        want = naive_normal_form({tuple(amb.index(g) for g in w): sympy.Integer(1)}, p)
        assert set(got) == set(want)
        assert all(same(got[x], want[x]) for x in got)


def test_spec_rewrite_examples():
    k = PyKernel(2, 2)
    x11, x12, x21, x22 = 0, 1, 2, 3
    assert k.word([x21, x12]) == {(x12, x21): {0: 1}}
    assert k.word([x22, x11]) == {(x11, x22): {0: 1}, (x12, x21): {1: -1, -1: 1}}
    assert k.word([x12, x11]) == {(x11, x12): {-1: 1}}


def test_memo_limit_bounds_cache():
    k = PyKernel(3, 3, False, 50)
    for w in _words(3, 3, 50, 6, 3):
        k.word(w)
    assert k.cache_size() <= 2 * 50 + 2
    unbounded = PyKernel(3, 3)
    for w in _words(3, 3, 50, 6, 3):
        assert unbounded.word(w) == k.word(w)


def test_backend_selection():
    assert kernel.BACKEND in ("cython", "python")
    assert kernel.get_kernel(2, 3) is kernel.get_kernel(2, 3)
    assert kernel.get_kernel(2, 3) is not kernel.get_kernel(2, 3, True)
