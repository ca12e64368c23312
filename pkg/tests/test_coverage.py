"""Every in-scope topic is exercised by at least one report check."""

from __future__ import annotations

import pytest

from qhopf.scenarios import run_axioms, run_galois, run_plane, run_sphere, run_sphere_mu_eq_nu

TOPICS = {
    "coideal definition": ["plane.coideal", "sphere.coideal"],
    "comodule axioms": ["axioms.plane.coaction", "axioms.sphere.coaction"],
    "quotient coalgebra": ["plane.quotient_coalgebra", "axioms.plane.quotient_coalgebra"],
    "character, i_kappa and chi_L": ["plane.character", "plane.i_kappa", "plane.chi_L"],
    "coideal generated by i(b) - kappa(b)": ["plane.coideal", "sphere.ideal_generators"],
    "coinvariant subalgebra and rho0": ["plane.coinvariants", "plane.rho0_well_defined"],
    "rho-action conditions": ["plane.rho_axioms"],
    "Galois extension": ["plane.chi_surjective", "plane.chi_kernel"],
    "Hopf algebra over a point": ["galois.hopf_case"],
    "surjectivity witness and minimal right ideal": ["galois.plane.chi_surjective",
                                                     "galois.plane.kernel_factorization"],
    "can is bijective": ["galois.can_glq2", "galois.can_suq2"],
    "relations and quantum determinant": ["plane.relations"],
    "plane coaction, kappa, i_kappa": ["plane.intertwiner", "plane.i_kappa"],
    "spanning set a(m,n)": ["plane.representatives", "plane.independence"],
    "coproduct of a(m,n) and q-binomials": ["plane.coproduct"],
    "right coaction formula": ["plane.coaction_formula"],
    "product on C and q-Vandermonde": ["plane.product_compatibility", "plane.q_vandermonde"],
    "polynomial Hopf structure on C": ["plane.polynomial_coalgebra", "plane.ab_relation",
                                      "plane.delta_b", "plane.antipode_b"],
    "explicit rho0": ["plane.rho0_formula"],
    "sphere relations and involution": ["sphere.relations"],
    "sphere coaction, kappa, i_kappa": ["sphere.character", "sphere.i_kappa",
                                        "sphere.intertwiner"],
    "sphere ideal generators": ["sphere.ideal_generators"],
    "reductions for beta and gamma": ["sphere.reductions", "sphere.right_replacement"],
    "sphere quotient dimensions": ["sphere.dimensions"],
    "linear system and its matrix": ["sphere.system", "sphere.system_determinant"],
    "D_n = P_(n-1)(p^2)": ["sphere.determinant", "sphere.laplace"],
    "sphere coproducts": ["sphere.coproduct_limit", "sphere.coproduct_n1",
                          "sphere.cocommutative"],
    "group-like elements": ["sphere.grouplike"],
    "coefficients c^n_k": ["sphere.c_coefficients"],
    "graded coinvariants": ["sphere.graded_coinvariants"],
    "mu = nu exploration": ["mu_eq_nu.reductions", "mu_eq_nu.dimensions",
                            "mu_eq_nu.coinvariants"],
}


@pytest.fixture(scope="module")
def all_ids():
    reps = [run_plane(2, 2, galois_degree=1), run_sphere(2, "pq", det_max=3, galois_degree=1),
            run_sphere_mu_eq_nu(2), run_axioms(("plane", "sphere"), 2), run_galois(1)]
    ids = set()
    for r in reps:
        for c in r.checks:
            assert c.statement and c.status in ("pass", "fail", "finding", "inconclusive")
            ids.add(c.id)
    return ids


@pytest.mark.parametrize("topic", sorted(TOPICS))
def test_topic_has_a_check(topic, all_ids):
    missing = [i for i in TOPICS[topic] if i not in all_ids]
    assert not missing
