"""Exact scalars: rational functions in q, p, mu, nu with an optional
square root t of mu*nu, and the q-combinatorics built on top of them."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .backend import kernel as _k

FieldElement = _k.FieldElement
InexactDivision = _k.InexactDivision
ZERO = _k.ZERO
ONE = _k.ONE

VARS = ("q", "p", "mu", "nu")
_BITS = _k.BITS
_MASK = _k.MASK


def _mono(**exps: int) -> int:
    m = 0
    for i, name in enumerate(VARS):
        e = exps.get(name, 0)
        if not 0 <= e < (1 << (_BITS - 1)):
            raise ValueError(f"exponent out of range for {name}: {e}")
        m |= e << (_BITS * i)
    return m


def rational(num: int | Fraction, den: int = 1) -> FieldElement:
    x = Fraction(num, den)
    return FieldElement.make({0: x.numerator} if x else {}, {0: x.denominator})


def symbol(name: str, power: int = 1) -> FieldElement:
    """The indeterminate `name` (q, p, mu, nu or t) raised to `power`.

    Only q may carry a negative power.
    """
    if name == "t":
        if power < 0:
            raise ValueError("negative powers of t are not monomials")
        x = ONE
        t = FieldElement(_k.P_ZERO, _k.P_ONE, {0: 1}, _k.P_ONE)
        for _ in range(power):
            x = x * t
        return x
    if name not in VARS:
        raise ValueError(f"unknown scalar symbol {name!r}")
    if power < 0:
        if name != "q":
            raise ValueError(f"negative exponent on {name} is not allowed")
        return FieldElement({0: 1}, {_mono(q=-power): 1})
    return FieldElement({_mono(**{name: power}): 1}, _k.P_ONE)


def qpow(k: int) -> FieldElement:
    return symbol("q", k)


def as_field(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")


# --------------------------------------------------------------------------
# rendering


def _mono_text(m: int) -> str:
    parts = []
    for i, name in enumerate(VARS):
        e = (m >> (_BITS * i)) & _MASK
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_text(poly: dict) -> str:
    if not poly:
        return "0"
    keys = sorted(poly, key=lambda m: (_k.mono_degree(m), m), reverse=True)
    out = []
    for m in keys:
        c = poly[m]
        mono = _mono_text(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += sign + body
    return text


def _frac_text(n: dict, d: dict) -> str:
    if d == _k.P_ONE:
        return poly_text(n)
    if set(n) <= {0} and set(d) == {0}:
        return f"{poly_text(n)}/{poly_text(d)}"
    return f"({poly_text(n)})/({poly_text(d)})"


def render(x: FieldElement) -> str:
    """Canonical text, e.g. ``(q^2+1)/(q)``, ``t``, ``1/2``."""
    if x.tn is None:
        return _frac_text(x.n, x.d)
    tpart = _frac_text(x.tn, x.td)
    tpart = "t" if tpart == "1" else f"({tpart})*t"
    if not x.n:
        return tpart
    return f"{_frac_text(x.n, x.d)}+{tpart}"


FieldElement.__str__ = render


# --------------------------------------------------------------------------
# evaluation


def _eval_poly(poly: dict, vals: list) -> Fraction:
    total = Fraction(0)
    for m, c in poly.items():
        term = Fraction(c)
        for i in range(len(VARS)):
            e = (m >> (_BITS * i)) & _MASK
            if e:
                if vals[i] is None:
                    raise KeyError(f"no binding for {VARS[i]}")
                term *= vals[i] ** e
        total += term
    return total


def evaluate(x: FieldElement, bindings: dict) -> Fraction:
    """Substitute rational values for the symbols of `x` exactly."""
    vals = [None if bindings.get(v) is None else Fraction(bindings[v]) for v in VARS]
    tval = bindings.get("t")
    if tval is not None:
        mu, nu = bindings.get("mu"), bindings.get("nu")
        if mu is None or nu is None or Fraction(tval) ** 2 != Fraction(mu) * Fraction(nu):
            raise ValueError("binding for t must satisfy t^2 = mu*nu")
    den = _eval_poly(x.d, vals)
    if den == 0:
        raise ZeroDivisionError("denominator vanishes at the given binding")
    value = _eval_poly(x.n, vals) / den
    if x.tn is not None:
        if tval is None:
            raise KeyError("no binding for t")
        tden = _eval_poly(x.td, vals)
        if tden == 0:
            raise ZeroDivisionError("denominator vanishes at the given binding")
        value += _eval_poly(x.tn, vals) / tden * Fraction(tval)
    return value


def symbols_of(x: FieldElement) -> set[str]:
    used = 0
    for poly in (x.n, x.d, x.tn or {}, x.td or {}):
        for m in poly:
            used |= m
    out = {v for i, v in enumerate(VARS) if (used >> (_BITS * i)) & _MASK}
    if x.tn is not None:
        out.add("t")
    return out


# --------------------------------------------------------------------------
# q-combinatorics (balanced convention, [m] = (q^m - q^-m)/(q - q^-1))


def _require_laurent(x: FieldElement, what: str) -> FieldElement:
    if not x.is_laurent():
        raise InexactDivision(f"{what} is not a Laurent polynomial: {render(x)}")
    return x


def q_int(m: int) -> FieldElement:
    if m < 0:
        raise ValueError("q_int needs m >= 0")
    num = qpow(m) - qpow(-m)
    den = symbol("q") - qpow(-1)
    return _require_laurent(num / den, f"[{m}]_q")


def q_factorial(m: int) -> FieldElement:
    out = ONE
    for k in range(1, m + 1):
        out = out * q_int(k)
    return out


def q_binomial(m: int, k: int) -> FieldElement:
    if m < 0:
        raise ValueError("q_binomial needs m >= 0")
    if k < 0 or k > m:
        return ZERO
    val = q_factorial(m) / (q_factorial(m - k) * q_factorial(k))
    return _require_laurent(val, f"binom({m},{k})_q")


def q_vandermonde_check(k: int, m: int, r: int, binom=q_binomial) -> bool:
    """Constrained q-Vandermonde: sum over i+j=r of q^(im-kj) [k,i][m,j] = [k+m, r]."""
    if not 0 <= r <= k + m:
        raise ValueError("need 0 <= r <= k+m")
    lhs = ZERO
    for i in range(0, k + 1):
        j = r - i
        if 0 <= j <= m:
            lhs = lhs + qpow(i * m - k * j) * binom(k, i) * binom(m, j)
    return lhs == binom(k + m, r)


class QPolynomial:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def shift(self, a) -> "QPolynomial":
        """Coefficients of x -> P(x + a)."""
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            for k in range(i + 1):
                out[k] += c * comb(i, k) * Fraction(a) ** (i - k)
        return QPolynomial(out)

    def to_field(self, var: FieldElement) -> FieldElement:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * var + rational(c)
        return acc

    def __repr__(self):
        return f"QPolynomial({[str(c) for c in self.coeffs]})"


def p_polynomial(n: int) -> QPolynomial:
    """P_n(x) = sum_k C(2n+1-k, k) x^k."""
    if n < 0:
        raise ValueError("p_polynomial needs n >= 0")
    return QPolynomial([comb(2 * n + 1 - k, k) for k in range(n + 1)])


def c_coefficient(n: int, k: int) -> Fraction:
    """Coefficient of x^k in P_n(x - 1/4)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return sum((Fraction(-1, 4) ** (l - k) * comb(2 * n + 1 - l, l) * comb(l, k)
                for l in range(k, n + 1)), Fraction(0))
