from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qhopf.galois import (CertificationError, can_inverse, can_map, can_roundtrip,
                          chi_counit_check, chi_kernel_analysis, chi_surjectivity_witness,
                          verify_example_hypothesis)
from qhopf.hopf import hopf_structure
from qhopf.quotient import (QuotientCoalgebra, Window, coideal_span, coinvariants, embedding,
                            ideal_generators, plane_quotient)
from qhopf.scalar import ONE


@pytest.fixture(scope="module")
def plane():
    return plane_quotient(3, 1)


def test_can_roundtrip_suq2():
    assert can_roundtrip(hopf_structure("suq2"), 1)["failures"] == []


words = st.lists(st.sampled_from(["alpha", "beta", "gamma", "delta", "c", "cinv"]), max_size=2)


@given(words, words)
def test_can_inverse_undoes_can(u, v):
    hs = hopf_structure("glq2")
    H = hs.pres
    a, b = H.word(H.parse_word(u)), H.word(H.parse_word(v))
    fwd = can_map(a, b, hs)
    back = {}
    for (x, y), c in fwd.terms.items():
        for k, v2 in can_inverse({x: ONE}, {y: ONE}, hs).terms.items():
            back[k] = back.get(k, 0) + c * v2
    back = {k: v2 for k, v2 in back.items() if v2}
    want = {(x, y): ca * cb for x, ca in a.terms.items() for y, cb in b.terms.items()}
    assert back == want


def test_chi_witnesses_and_counit(plane):
    Q, _, _ = plane
    H = Q.H
    for a in Q.reps:
        if H.length(a) <= 2:
            chi_surjectivity_witness(a, Q, u=H.gen("beta"))
    assert chi_counit_check(Q, [w for w in Q.ideal.T if H.length(w) <= 1]) == []


def test_witness_certification_rejects_non_representative(plane):
    # a word outside the representative set is not its own class
    Q, _, _ = plane
    H = Q.H
    bad = next(w for w in Q.ideal.T if w not in Q.reps and H.length(w) <= 2)
    with pytest.raises(CertificationError):
        chi_surjectivity_witness(bad, Q)


def test_chi_kernel_in_relations(plane):
    Q, _, _ = plane
    res = chi_kernel_analysis(Q, 1, 1, inv_bound=0)
    assert res.kernel_in_relations
    assert res.rank + res.kernel_dim == len(res.domain)


def test_example_hypothesis_plane(plane):
    Q, emb, _ = plane
    assert verify_example_hypothesis(Q, 2, emb)["holds"]


def test_enlarged_ideal_breaks_hypothesis(plane):
    # adding beta to J shrinks C; the original coinvariants no longer generate ker pi
    Q, emb, kappa = plane
    H = Q.H
    gens = ideal_generators(emb, kappa) + [H.gen("beta")]
    J = coideal_span(gens, H, Q.ideal.window)
    Q2 = QuotientCoalgebra(Q.hopf, J, name="enlarged")
    res = verify_example_hypothesis(Q2, 2, coinv=coinvariants(Q, 2))
    assert not res["holds"]
