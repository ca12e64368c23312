from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qhopf.hopf import hopf_structure
from qhopf.quotient import (Character, DegreeNotCovered, Embedding, QuotientCoalgebra, Window,
                            character_check, chi_L_injectivity, coideal_span, coinvariants,
                            embedding, i_kappa_from_coaction, ideal_generators,
                            intertwiner_check, plane_quotient, plane_word, same_span,
                            sphere_i_z, sphere_quotient, verify_coideal,
                            verify_quotient_coalgebra, verify_rho_axioms)
from qhopf.scalar import ONE, symbol


@pytest.fixture(scope="module")
def plane():
    return plane_quotient(3, 1)


@pytest.fixture(scope="module")
def sphere():
    return sphere_quotient("sphere_pq", 3)


def test_plane_character_and_intertwiner():
    emb, kappa = embedding("plane")
    assert character_check(kappa) == []
    assert intertwiner_check(emb, 2)["failures"] == []
    x = emb.source.gen("x")
    assert i_kappa_from_coaction(x, emb, kappa) == emb.image(x)


def test_sphere_character_rejects_bad_value():
    emb, kappa = embedding("sphere_pq")
    assert character_check(kappa) == []
    bad = Character(emb.source, {**kappa.values, "z": 1})
    assert character_check(bad)


def test_plane_quotient_is_coalgebra(plane):
    Q, emb, kappa = plane
    assert Q.ideal.stabilized
    assert verify_coideal(Q.ideal, Q.hopf)["failures"] == []
    assert verify_quotient_coalgebra(Q)["failures"] == []
    assert set(Q.reps) == {plane_word(Q.H, m, n) for m in range(4) for n in range(-1, 5)
                           if Q.ideal.window.contains(Q.H, plane_word(Q.H, m, n))}


def test_plane_coinvariants_are_alpha_gamma(plane):
    Q, emb, _ = plane
    for N in range(1, 4):
        got = [b.terms for b in coinvariants(Q, N)]
        want = [emb.image_word(w) for w in emb.source.basis_words(N)]
        assert same_span(got, want)["equal"]


def test_sphere_dimensions(sphere):
    from qhopf.linalg import rank
    Q, _, _ = sphere
    for n in range(4):
        words = [w for w in Q.ideal.T if Q.H.length(w) <= n]
        assert rank([Q.pi_word(w) for w in words]) == 2 * n + 1


def test_sphere_third_generator_is_derived_value(sphere):
    Q, emb, kappa = sphere
    z = emb.source.gen("z")
    assert i_kappa_from_coaction(z, emb, kappa) == sphere_i_z("sphere_pq")
    assert all(Q.ideal.contains(g.terms) for g in ideal_generators(emb, kappa))


def test_non_coideal_fixture_fails():
    # beta alone generates a coideal; beta^2 does not
    hs = hopf_structure("suq2")
    H = hs.pres
    beta = H.gen("beta")
    J1 = coideal_span([beta], H, Window(3))
    assert verify_coideal(J1, hs)["failures"] == []
    J2 = coideal_span([beta * beta], H, Window(3))
    assert verify_coideal(J2, hs)["failures"]


def test_projection_outside_window_raises(plane):
    Q, _, _ = plane
    with pytest.raises(DegreeNotCovered):
        Q.pi_word(plane_word(Q.H, 9, 0))


def test_rho_axioms_on_plane(plane):
    Q, _, _ = plane
    res = verify_rho_axioms(Q, 1)
    assert res["failures"] == []
    assert res["counts"]["action"] > 0


def test_trivial_coaction_breaks_chi_L():
    emb, _ = embedding("plane")
    trivial = Embedding(emb.source, emb.hopf, {"x": {"alpha": 1}, "y": {"gamma": 1}},
                        {"x": {("", "x"): 1}, "y": {("", "y"): 1}}, name="trivial")
    res = chi_L_injectivity(trivial, 2)
    assert res["kernel_dim"] > 0 or res["diagram_failures"]


@given(st.integers(0, 3), st.integers(-1, 1), st.integers(0, 3), st.integers(-1, 1))
def test_delta_C_coassociative_on_representatives(m, n, k, l):
    Q, _, _ = plane_quotient(3, 1)
    w = plane_word(Q.H, m, n)
    if w not in Q.reps:
        return
    d = Q.delta_rep(w)
    left, right = {}, {}
    for (a, b), c in d.items():
        for (a1, a2), c1 in Q.delta_rep(a).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
        for (b1, b2), c2 in Q.delta_rep(b).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
    assert {k_: v for k_, v in left.items() if v} == {k_: v for k_, v in right.items() if v}
