from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from qhopf.ncalg import preset
from qhopf.parser import ParseError, expression_text, parse_expression
from qhopf.scalar import qpow, symbol


def test_quantum_determinant_is_c():
    H = preset("glq2")
    assert parse_expression("alpha*delta - q*beta*gamma", H) == H.gen("c")


def test_plane_examples():
    P = preset("plane")
    x, y = P.gen("x"), P.gen("y")
    assert parse_expression("x^2*y", P) == x * x * y
    assert parse_expression("q^-1*(x*y)", P) == qpow(-1) * (x * y)


def test_precedence_and_rationals():
    P = preset("plane")
    x = P.gen("x")
    assert parse_expression("1 + 2*x^2", P) == 1 + 2 * (x * x)
    assert parse_expression("-x + 3/4", P) == -x + symbol("q", 0) * 3 / 4
    assert parse_expression("(1 + x)^2", P) == 1 + 2 * x + x * x
    assert parse_expression("  mu *  x ", P) == symbol("mu") * x


def test_invertible_generator_negative_power():
    H = preset("glq2")
    assert parse_expression("c^-2 * c^2", H) == H.one()
    assert parse_expression("cinv^-1", H) == H.gen("c")


@pytest.mark.parametrize("text,pos", [
    ("x^-1", 0),            # non-invertible
    ("2 x", 2),             # juxtaposition
    ("x + ", 4),            # end of input
    ("x * (y", 6),          # unbalanced
    ("alpha", 0),           # generator of another presentation
    ("x + w", 4),           # unknown symbol
    ("p^-1", 0),            # negative power of p
    ("1/0", 2),
])
def test_errors_are_positioned(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_expression(text, preset("plane"))
    assert exc.value.pos == pos


gens = st.sampled_from(["alpha", "beta", "gamma", "delta", "c", "cinv"])
coefs = st.sampled_from(["1", "q", "q^-1", "2/3", "mu*p", "t", "-q^2"])


@st.composite
def glq2_texts(draw):
    terms = []
    for _ in range(draw(st.integers(1, 4))):
        word = draw(st.lists(gens, max_size=3))
        terms.append("*".join([f"({draw(coefs)})"] + word))
    return " + ".join(terms)


@given(glq2_texts())
def test_expression_text_round_trips(text):
    H = preset("glq2")
    x = parse_expression(text, H)
    assert parse_expression(expression_text(x), H) == x
