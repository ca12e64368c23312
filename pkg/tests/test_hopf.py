from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qhopf.hopf import (HopfStructure, _gl_data, check_filtration_and_grading, hopf_structure,
                        verify_hopf_axioms, verify_respects_relations)
from qhopf.ncalg import preset
from qhopf.scalar import ONE, qpow


@pytest.mark.parametrize("name,aux", [("suq2", None), ("glq2", {"c": 1}), ("cq2", None)])
def test_hopf_axioms_small(name, aux):
    hs = hopf_structure(name)
    assert verify_hopf_axioms(hs, 3, aux)["failures"] == []
    assert not any(verify_respects_relations(hs).values())
    assert check_filtration_and_grading(hs, 3, aux) == []


def test_generator_coproducts():
    hs = hopf_structure("glq2")
    H = hs.pres
    d = hs.coproduct(H.gen("beta"))
    assert d.terms == {(H.parse_word("alpha"), H.parse_word("beta")): ONE,
                       (H.parse_word("beta"), H.parse_word("delta")): ONE}
    c = H.gen("c")
    assert hs.coproduct(c).terms == {(H.parse_word("c"), H.parse_word("c")): ONE}
    assert hs.antipode(H.gen("beta")) == -qpow(-1) * H.gen("beta") * H.gen("cinv")


def test_cq2_structure():
    hs = hopf_structure("cq2")
    P = hs.pres
    a, b, ainv = P.gen("a"), P.gen("b"), P.gen("ainv")
    assert a * b == qpow(2) * (b * a)
    assert hs.antipode(b) == -(b * ainv)


def test_sabotaged_antipode_is_detected():
    delta, counit, antipode = _gl_data(False)
    antipode["beta"] = {"beta": qpow(1)}
    bad = HopfStructure(preset("suq2"), delta, counit, antipode, name="sabotaged")
    res = verify_hopf_axioms(bad, 2)
    assert res["failures"]


words = st.lists(st.sampled_from(["alpha", "beta", "gamma", "delta"]), min_size=1, max_size=3)


@given(words, words)
def test_coproduct_is_multiplicative(u, v):
    from qhopf.hopf import tensor_multiply
    hs = hopf_structure("suq2")
    H = hs.pres
    a, b = (H.word(H.parse_word(x)) for x in (u, v))
    assert tensor_multiply(hs.coproduct(a), hs.coproduct(b)).terms == hs.coproduct(a * b).terms


@given(words)
def test_antipode_is_antimultiplicative_and_counit_multiplicative(u):
    hs = hopf_structure("glq2")
    H = hs.pres
    x = H.word(H.parse_word(u))
    y = H.gen("beta") + H.gen("c")
    assert hs.antipode(x * y) == hs.antipode(y) * hs.antipode(x)
    assert hs.counit(x * y) == hs.counit(x) * hs.counit(y)
