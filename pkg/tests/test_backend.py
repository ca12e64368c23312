from __future__ import annotations

from hypothesis import given, strategies as st

from qhopf import backend

pure = backend.load_pure_kernel()
kern = backend.kernel

polys = st.dictionaries(st.sampled_from([0, 1, 2, 1 << 16, (1 << 16) + 1, 1 << 32, 3]),
                        st.integers(-5, 5).filter(bool), max_size=4)


def _fe(mod, n, d):
    return mod.FieldElement.make(n or {}, d or mod.P_ONE)


@given(polys, polys, polys, polys)
def test_compiled_and_pure_kernels_agree(n1, d1, n2, d2):
    if not d1 or not d2:
        return
    a, b = _fe(kern, n1, d1), _fe(kern, n2, d2)
    pa, pb = _fe(pure, n1, d1), _fe(pure, n2, d2)
    for x, y in ((a * b, pa * pb), (a + b, pa + pb), (a - b, pa - pb)):
        assert (x.n, x.d) == (y.n, y.d)


@given(polys, polys)
def test_gcd_divides_both(a, b):
    if not a or not b:
        return
    g = pure.p_gcd(a, b)
    pure.p_divexact(a, g)
    pure.p_divexact(b, g)
    assert kern.p_gcd(a, b) == g


def test_selection_flag_is_consistent():
    assert backend.COMPILED == (not kern.__file__.endswith(".py"))
