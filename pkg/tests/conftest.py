from __future__ import annotations

import sympy
from hypothesis import settings

from qhopf.scalar import FieldElement, VARS, _BITS, _MASK

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")

SYM = {v: sympy.Symbol(v) for v in VARS}


def _poly_to_sympy(poly: dict):
    out = sympy.Integer(0)
    for m, c in poly.items():
        term = sympy.Integer(c)
        for i, v in enumerate(VARS):
            e = (m >> (_BITS * i)) & _MASK
            term *= SYM[v] ** e
        out += term
    return out


def to_sympy(x: FieldElement):
    """Rational part of x as a sympy expression (t-part must be absent)."""
    assert x.tn is None
    return _poly_to_sympy(x.n) / _poly_to_sympy(x.d)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(results):
        ok, seconds, detail = results[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  ({seconds:.1f}s)  {detail}")
