from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qhopf.ncalg import (PRESET_NAMES, check_confluence, check_gradings, involution,
                         preset)
from qhopf.scalar import ONE, qpow

ALL = PRESET_NAMES + ("sphere_pq", "cq2")


@pytest.mark.parametrize("name", ALL)
def test_presets_confluent_and_graded(name):
    pres = preset(name)
    assert check_confluence(pres, 4) == []
    assert check_gradings(pres) == []


def test_glq2_determinant_is_central_generator():
    H = preset("glq2")
    a, b, g, d, c = (H.gen(s) for s in ("alpha", "beta", "gamma", "delta", "c"))
    q = qpow(1)
    assert a * d - q * b * g == c
    for x in (a, b, g, d):
        assert x * c == c * x
    assert c * H.gen("cinv") == H.one()


def test_suq2_determinant_is_one():
    H = preset("suq2")
    a, b, g, d = (H.gen(s) for s in ("alpha", "beta", "gamma", "delta"))
    assert a * d - qpow(1) * b * g == H.one()
    assert d * a - qpow(-1) * b * g == H.one()


def test_plane_relation():
    P = preset("plane")
    x, y = P.gen("x"), P.gen("y")
    assert y * x == qpow(-1) * (x * y)


def test_sphere_involution_on_x():
    S = preset("sphere_pq")
    assert involution(S.gen("x")) == -qpow(1) * S.gen("y")


def test_broken_preset_is_not_confluent():
    # dropping the q from beta*delta = q delta*beta breaks the diamond lemma
    from qhopf.ncalg import Presentation, _gl_generators, _gl_rules, _GL_ORDER
    rules = _gl_rules(False)
    key = next(k for k in rules if set(k) == {"beta", "delta"})
    rhs = dict(rules[key])
    rules[key] = {w: ONE for w in rhs}
    broken = Presentation("broken", _gl_generators(False), rules, "Q(q)", order=_GL_ORDER)
    assert check_confluence(broken, 4)


words = st.lists(st.sampled_from(["alpha", "beta", "gamma", "delta"]), max_size=4)


@given(words, words, words)
def test_multiplication_is_associative(u, v, w):
    H = preset("suq2")
    a, b, c = (H.word(tuple(H.index(s) for s in x)) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)


@given(words)
def test_normal_form_is_idempotent(u):
    H = preset("glq2")
    x = H.word(tuple(H.index(s) for s in u))
    assert H.poly(x.terms) == x
    assert all(H.is_normal(w) for w in x.terms)


@given(words, words)
def test_involution_is_antimultiplicative(u, v):
    H = preset("suq2")
    a, b = (H.word(tuple(H.index(s) for s in x)) for x in (u, v))
    assert involution(a * b) == involution(b) * involution(a)
    assert involution(involution(a)) == a
