from __future__ import annotations

import pytest
import sympy

from qhopf.linalg import det_bareiss
from qhopf.scalar import q_binomial, qpow, symbol
from qhopf.scenarios import (run_axioms, run_plane, run_sphere, run_sphere_mu_eq_nu,
                             sphere_determinant, sphere_laplace, sphere_matrix)

P = sympy.Symbol("p")


def _sympy_matrix(n):
    m = sphere_matrix(n, symbol("p"))
    conv = {"0": 0, "1": 1}
    out = []
    for row in m:
        out.append([sympy.sympify(str(x).replace("^", "**")) for x in row])
    return sympy.Matrix(out)


@pytest.mark.parametrize("n", range(1, 7))
def test_determinant_against_sympy(n):
    ref = sympy.expand(_sympy_matrix(n).det(method="berkowitz"))
    got = sympy.sympify(str(sphere_determinant(n)).replace("^", "**"))
    assert sympy.expand(got - ref) == 0


def test_small_determinants():
    p = symbol("p")
    assert sphere_determinant(2) == 1 + 2 * p * p
    assert sphere_determinant(4) == 1 + 6 * p ** 2 + 10 * p ** 4 + 4 * p ** 6
    assert sphere_laplace(5) == sphere_determinant(5)


def test_bareiss_against_sympy_generic():
    q, mu = symbol("q"), symbol("mu")
    m = [[q + i * j + (mu if i == j else 0) for j in range(4)] for i in range(4)]
    ref = sympy.Matrix([[sympy.Symbol("q") + i * j + (sympy.Symbol("mu") if i == j else 0)
                         for j in range(4)] for i in range(4)]).det()
    got = sympy.sympify(str(det_bareiss(m)).replace("^", "**"))
    assert sympy.expand(got - ref) == 0


def test_plane_small_all_pass():
    rep = run_plane(2, 1, galois_degree=1)
    assert rep.summary()["fail"] == 0, [c.id for c in rep.checks if c.status == "fail"]


def test_sabotaged_binomial_gives_witness():
    def bad(m, k):
        return q_binomial(m, k) * (qpow(1) if (m, k) == (2, 1) else 1)

    rep = run_plane(2, 1, binom=bad, galois_degree=0)
    c = rep.get("plane.coproduct")
    assert c.status == "fail"
    assert c.data["witness"]["m"] == 2 and c.data["witness"]["k"] == 1


def test_sphere_small():
    rep = run_sphere(2, "pq", det_max=3, galois_degree=0)
    bad = {c.id for c in rep.checks if c.status == "fail"}
    assert bad == {"sphere.i_kappa"}
    assert rep.get("sphere.coproduct_limit").data["upper_limit_n"]


def test_mu_eq_nu_only_findings():
    rep = run_sphere_mu_eq_nu(2)
    assert {c.status for c in rep.checks} == {"finding"}


def test_axioms_suq2():
    assert run_axioms("suq2", 2).ok


def test_report_summary_consistent():
    rep = run_axioms("cq2", 2)
    s = rep.summary()
    assert sum(s.values()) == len(rep.checks)
    d = rep.as_dict(timing=False)
    assert list(d) == ["version", "scenario", "parameters", "checks", "summary"]
    assert all(set(c) == {"id", "description", "statement", "status", "data"}
               for c in d["checks"])
