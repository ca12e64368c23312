"""Noncommutative polynomials over presented algebras.

A word is a tuple of generator indices.  Rewrite rules have length-2
left-hand sides; normal forms are computed by a memoised right-insertion
strategy (`Presentation.mul_words`) and, for cross-checking, by naive
leftmost/rightmost rewriting (`Presentation.reduce`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby

from .backend import kernel as _k
from .scalar import ONE, ZERO, FieldElement, as_field, qpow, rational, render, symbol

_add_scaled = _k.vec_add_scaled


class RewriteBudgetExceeded(RuntimeError):
    """Rewriting did not terminate within the step budget."""


class UnsupportedOperation(RuntimeError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree_d: int = 0
    invertible: bool = False
    weight: int = 1
    inverse: str | None = None
    # +1 for c, -1 for its formal inverse; 0 for ordinary generators
    inv_sign: int = 0


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple[int, int]
    rhs: dict = field(hash=False, compare=False)


class Presentation:
    """Generators, length-2 rewrite rules and gradings of an algebra."""

    def __init__(self, name, generators, rules, field_tag, *, order=None,
                 involution=None, gradings=None, step_budget=2_000_000):
        self.name = name
        self.generators = tuple(generators)
        self.field_tag = field_tag
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self._index) != len(self.generators):
            raise ValueError("generator names must be unique")
        # letter ranks for the word order; defaults to generator order
        order = list(order) if order is not None else [g.name for g in self.generators]
        if sorted(order) != sorted(self._index):
            raise ValueError("order must list every generator once")
        rank = {name: r for r, name in enumerate(order)}
        self.ranks = tuple(rank[g.name] for g in self.generators)
        self.rules: dict[tuple[int, int], dict] = {}
        for (a, b), rhs in rules.items():
            lhs = (self.index(a), self.index(b))
            terms = {}
            for w, c in rhs.items():
                c = as_field(c)
                if c:
                    terms[self.parse_word(w)] = c
            self.rules[lhs] = terms
        self.weights = tuple(g.weight for g in self.generators)
        self.involution_images = None
        if involution is not None:
            self.involution_images = {}
            for gname, img in involution.items():
                self.involution_images[self.index(gname)] = {
                    self.parse_word(w): as_field(c) for w, c in img.items()}
        self.gradings = {}
        for gname, (degs, modulus) in (gradings or {}).items():
            self.gradings[gname] = (tuple(degs[g.name] for g in self.generators), modulus)
        self.step_budget = step_budget
        self._steps = 0
        self._app_cache: dict = {}
        self._mul_cache: dict = {}
        self._check_rules()

    # -- words ------------------------------------------------------------
    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r} in {self.name}") from None

    def parse_word(self, w) -> tuple[int, ...]:
        if isinstance(w, str):
            return tuple(self.index(s) for s in w.split()) if w else ()
        return tuple(self.index(s) if isinstance(s, str) else s for s in w)

    def word_key(self, w):
        return (sum(self.weights[i] for i in w), tuple(self.ranks[i] for i in w))

    def length(self, w) -> int:
        gens = self.generators
        return sum(1 for i in w if not gens[i].invertible)

    def inv_exponent(self, w) -> int:
        gens = self.generators
        return sum(gens[i].inv_sign for i in w)

    def degree_d(self, w) -> int:
        gens = self.generators
        return sum(gens[i].degree_d for i in w)

    def grading(self, name, w) -> int:
        degs, modulus = self.gradings[name]
        s = sum(degs[i] for i in w)
        return s % modulus if modulus else s

    def is_normal(self, w) -> bool:
        rules = self.rules
        return all((w[i], w[i + 1]) not in rules for i in range(len(w) - 1))

    def word_text(self, w) -> str:
        if not w:
            return "1"
        parts = []
        for i, run in groupby(w):
            k = len(list(run))
            g = self.generators[i]
            name, sign = g.name, 1
            if g.inv_sign < 0 and g.inverse is not None:
                name, sign = g.inverse, -1
            e = sign * k
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Presentation({self.name!r})"

    # -- construction checks ------------------------------------------------
    def _check_rules(self):
        for lhs, rhs in self.rules.items():
            lk = self.word_key(lhs)
            for w in rhs:
                if not self.word_key(w) < lk:
                    raise ValueError(
                        f"rule {self.word_text(lhs)} -> ... does not decrease the word order "
                        f"({self.word_text(w)})")
                if not self.is_normal(w):
                    raise ValueError(f"right-hand side word {self.word_text(w)} is reducible")
        if self.involution_images is not None and set(self.involution_images) != set(
                range(len(self.generators))):
            raise ValueError("involution must be given on every generator")

    # -- normal forms -------------------------------------------------------
    def _append(self, word, g):
        key = (word, g)
        res = self._app_cache.get(key)
        if res is not None:
            return res
        rhs = self.rules.get((word[-1], g)) if word else None
        if rhs is None:
            res = {word + (g,): ONE}
        else:
            self._steps += 1
            if self._steps > self.step_budget:
                raise RewriteBudgetExceeded(f"{self.name}: rewriting exceeded {self.step_budget} steps")
            prefix = word[:-1]
            res = {}
            for rw, c in rhs.items():
                _add_scaled(res, self.mul_words(prefix, rw), c)
        self._app_cache[key] = res
        return res

    def mul_words(self, u, v) -> dict:
        """Normal form of u*v for normal words u, v (shared dict; do not mutate)."""
        if not v:
            return {u: ONE}
        if not u:
            return {v: ONE}
        if (u[-1], v[0]) not in self.rules:
            return {u + v: ONE}
        key = (u, v)
        res = self._mul_cache.get(key)
        if res is not None:
            return res
        cur = {u: ONE}
        for g in v:
            nxt = {}
            for w, c in cur.items():
                _add_scaled(nxt, self._append(w, g), c)
            cur = nxt
        self._mul_cache[key] = cur
        return cur

    def nf_word(self, w) -> dict:
        """Normal form of an arbitrary word."""
        if self.is_normal(w):
            return {tuple(w): ONE}
        return self._nf_fold(tuple(w))

    def _nf_fold(self, w):
        cur = {(w[0],): ONE}
        for g in w[1:]:
            nxt = {}
            for u, c in cur.items():
                _add_scaled(nxt, self._append(u, g), c)
            cur = nxt
        return cur

    def nf_terms(self, terms: dict) -> dict:
        out = {}
        for w, c in terms.items():
            _add_scaled(out, self.nf_word(w), c)
        return out

    def mul_terms(self, a: dict, b: dict) -> dict:
        out = {}
        for u, cu in a.items():
            for v, cv in b.items():
                _add_scaled(out, self.mul_words(u, v), cu * cv)
        return out

    def reduce(self, terms: dict, strategy: str = "leftmost") -> dict:
        """Exhaustive naive rewriting at the leftmost or rightmost redex."""
        work = {tuple(w): as_field(c) for w, c in terms.items() if c}
        out = {}
        steps = 0
        rules = self.rules
        while work:
            w, c = work.popitem()
            pos = None
            rng = range(len(w) - 1)
            for i in (rng if strategy == "leftmost" else reversed(rng)):
                if (w[i], w[i + 1]) in rules:
                    pos = i
                    break
            if pos is None:
                _add_scaled(out, {w: c}, ONE)
                continue
            steps += 1
            if steps > self.step_budget:
                raise RewriteBudgetExceeded(f"{self.name}: naive rewriting exceeded budget")
            head, tail = w[:pos], w[pos + 2:]
            for rw, rc in rules[(w[pos], w[pos + 1])].items():
                nw = head + rw + tail
                v = work.get(nw)
                s = c * rc if v is None else v + c * rc
                if s:
                    work[nw] = s
                else:
                    work.pop(nw, None)
        return out

    # -- enumeration ---------------------------------------------------------
    def basis_words(self, max_len: int, aux_bounds: dict | None = None) -> list:
        """All normal words of length <= max_len (invertible letters bounded)."""
        bound = 0
        if aux_bounds:
            bound = max(aux_bounds.values())
        return enumerate_words(self, max_len, -bound, bound, shifted=False)

    # -- constructors ---------------------------------------------------------
    def gen(self, name: str) -> "NcPoly":
        return NcPoly(self, {(self.index(name),): ONE})

    def one(self) -> "NcPoly":
        return NcPoly(self, {(): ONE})

    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def scalar(self, c) -> "NcPoly":
        c = as_field(c)
        return NcPoly(self, {(): c} if c else {})

    def word(self, w) -> "NcPoly":
        return NcPoly(self, dict(self.nf_word(self.parse_word(w))))

    def poly(self, terms: dict) -> "NcPoly":
        """Build and normalise from {word (names or indices): coefficient}."""
        raw = {}
        for w, c in terms.items():
            _add_scaled(raw, {self.parse_word(w): as_field(c)}, ONE)
        return NcPoly(self, self.nf_terms(raw))


def enumerate_words(pres: Presentation, max_len: int, inv_lo: int, inv_hi: int,
                    shifted: bool = False) -> list:
    """Normal words with length <= max_len and invertible exponent r in
    [inv_lo, inv_hi]; with `shifted`, r + length <= inv_hi instead."""
    gens = pres.generators
    rules = pres.rules
    out = []

    def ok(w, ln, r):
        if r < inv_lo:
            return False
        return (r + ln <= inv_hi) if shifted else (r <= inv_hi)

    def rec(w, ln, r):
        if ok(w, ln, r):
            out.append(w)
        for i, g in enumerate(gens):
            if w and (w[-1], i) in rules:
                continue
            nl = ln + (0 if g.invertible else 1)
            nr = r + g.inv_sign
            if nl > max_len:
                continue
            if g.inv_sign and (abs(nr) > max(abs(inv_lo), abs(inv_hi)) + max_len):
                continue
            if g.inv_sign > 0 and nr > inv_hi:
                continue
            if g.inv_sign < 0 and nr < inv_lo:
                continue
            rec(w + (i,), nl, nr)

    rec((), 0, 0)
    out.sort(key=lambda w: (pres.length(w), pres.word_key(w)))
    return out


class NcPoly:
    """Element of a presented algebra, kept in normal form."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict):
        self.pres = pres
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            if other.pres is not self.pres:
                raise ValueError("polynomials over different presentations")
            return other
        return self.pres.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        _add_scaled(out, other.terms, ONE)
        return NcPoly(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            other = self._coerce(other)
            return NcPoly(self.pres, self.pres.mul_terms(self.terms, other.terms))
        c = as_field(other)
        if not c:
            return self.pres.zero()
        return NcPoly(self.pres, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        out = self.pres.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.pres is other.pres and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self.terms == self.pres.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w) -> FieldElement:
        return self.terms.get(self.pres.parse_word(w), ZERO)

    def max_length(self) -> int:
        return max((self.pres.length(w) for w in self.terms), default=0)

    def __str__(self):
        return terms_text(self.pres, self.terms)

    __repr__ = __str__


def terms_text(pres, terms: dict) -> str:
    if not terms:
        return "0"
    out = []
    for w in sorted(terms, key=lambda w: (pres.length(w), pres.word_key(w)), reverse=True):
        c = terms[w]
        ctext = render(c)
        wtext = pres.word_text(w)
        if wtext == "1":
            out.append(ctext)
        elif c.is_one():
            out.append(wtext)
        elif c == -1:
            out.append("-" + wtext)
        else:
            out.append(f"({ctext})*{wtext}")
    return " + ".join(out)


# --------------------------------------------------------------------------
# operations


def normal_form(x: NcPoly) -> NcPoly:
    return NcPoly(x.pres, x.pres.nf_terms(x.terms))


def multiply(x: NcPoly, y: NcPoly) -> NcPoly:
    return x * y


def degree_d(w, pres: Presentation) -> int:
    return pres.degree_d(pres.parse_word(w))


def basis_words(pres: Presentation, max_len: int, aux_bounds: dict | None = None) -> list:
    return pres.basis_words(max_len, aux_bounds)


def check_confluence(pres: Presentation, max_overlap_len: int = 3) -> list:
    """Unresolved overlap ambiguities; an empty list means confluent.

    With length-2 left-hand sides the only overlaps are words abc with ab
    and bc both reducible.
    """
    if max_overlap_len < 3:
        raise ValueError("max_overlap_len must be at least 3")
    failures = []
    rules = pres.rules
    for (a, b), r1 in rules.items():
        for (b2, c), r2 in rules.items():
            if b2 != b:
                continue
            left = {}
            for w, k in r1.items():
                _add_scaled(left, pres.nf_word(w + (c,)), k)
            right = {}
            for w, k in r2.items():
                _add_scaled(right, pres.nf_word((a,) + w), k)
            if left != right:
                diff = dict(left)
                _add_scaled(diff, right, -ONE)
                failures.append({
                    "overlap": pres.word_text((a, b, c)),
                    "left": terms_text(pres, left),
                    "right": terms_text(pres, right),
                    "difference": terms_text(pres, diff),
                })
    return failures


def check_gradings(pres: Presentation) -> list:
    """Rules that are not homogeneous for some declared grading (or d)."""
    bad = []
    names = ["d"] + list(pres.gradings)
    for lhs, rhs in pres.rules.items():
        for name in names:
            deg = (lambda w: pres.degree_d(w)) if name == "d" else (lambda w, n=name: pres.grading(n, w))
            if any(deg(w) != deg(lhs) for w in rhs):
                bad.append((name, pres.word_text(lhs)))
    return bad


def involution(x: NcPoly) -> NcPoly:
    """Anti-multiplicative involution; coefficients are real and fixed."""
    pres = x.pres
    imgs = pres.involution_images
    if imgs is None:
        raise UnsupportedOperation(f"{pres.name} has no involution")
    out = {}
    for w, c in x.terms.items():
        cur = {(): ONE}
        for g in reversed(w):
            cur = pres.mul_terms(cur, imgs[g])
        _add_scaled(out, cur, c)
    return NcPoly(pres, out)


# --------------------------------------------------------------------------
# presets


def _q(k=1):
    return qpow(k)


_GL_GENS = ("alpha", "beta", "gamma", "delta")
# delta ranks below beta, gamma so that normal words are alpha^a beta^b gamma^e
# or delta^f beta^b gamma^e and the length-2 rule set is complete
_GL_ORDER = ("alpha", "delta", "beta", "gamma")


def _gl_rules(with_c: bool):
    q, qi = _q(), _q(-1)
    unit = "c" if with_c else ""
    rules = {
        ("beta", "alpha"): {"alpha beta": qi},
        ("gamma", "alpha"): {"alpha gamma": qi},
        ("gamma", "beta"): {"beta gamma": 1},
        ("beta", "delta"): {"delta beta": q},
        ("gamma", "delta"): {"delta gamma": q},
        ("delta", "alpha"): {unit: 1, "beta gamma": qi},
        ("alpha", "delta"): {unit: 1, "beta gamma": q},
    }
    if with_c:
        for g in _GL_GENS:
            rules[("c", g)] = {f"{g} c": 1}
            rules[("cinv", g)] = {f"{g} cinv": 1}
        rules[("c", "cinv")] = {"": 1}
        rules[("cinv", "c")] = {"": 1}
    return rules


def _gl_generators(with_c: bool):
    gens = [
        Generator("alpha", degree_d=1, weight=2),
        Generator("beta", degree_d=1, weight=1),
        Generator("gamma", degree_d=-1, weight=1),
        Generator("delta", degree_d=-1, weight=2),
    ]
    if with_c:
        gens += [
            Generator("c", invertible=True, inverse="cinv", inv_sign=1),
            Generator("cinv", invertible=True, inverse="c", inv_sign=-1),
        ]
    return gens


def _sphere(name, s, dm, field_tag):
    """Sphere relations with mu*nu -> s and mu - nu -> dm."""
    q = _q()
    rules = {
        ("z", "x"): {"x z": _q(-2)},
        ("z", "y"): {"y z": _q(2)},
        ("x", "y"): {"": -q * s, "z": -q * dm, "z z": q},
        ("y", "x"): {"": -q * s, "z": -_q(-1) * dm, "z z": _q(-3)},
    }
    gens = [
        Generator("x", degree_d=2, weight=2),
        Generator("z", degree_d=0, weight=1),
        Generator("y", degree_d=-2, weight=2),
    ]
    inv = {"x": {"y": -q}, "y": {"x": -_q(-1)}, "z": {"z": 1}}
    return Presentation(name, gens, rules, field_tag, order=("x", "y", "z"), involution=inv)


@lru_cache(maxsize=None)
def preset(name: str) -> Presentation:
    """Named presentation: plane, glq2, suq2, sphere, sphere_pq,
    sphere_mu_eq_nu, cq2 (the Hopf algebra C^2_{q^2}[x^-1] on a, ainv, b)."""
    if name == "plane":
        gens = [Generator("x", degree_d=1), Generator("y", degree_d=1)]
        return Presentation("plane", gens, {("y", "x"): {"x y": _q(-1)}}, "Q(q)")
    if name == "glq2":
        col2 = {"alpha": 0, "beta": 1, "gamma": 0, "delta": 1, "c": 1, "cinv": -1}
        return Presentation("glq2", _gl_generators(True), _gl_rules(True), "Q(q)",
                            order=_GL_ORDER + ("c", "cinv"), gradings={"col2": (col2, 0)})
    if name == "suq2":
        inv = {"alpha": {"delta": 1}, "delta": {"alpha": 1},
               "beta": {"gamma": -_q()}, "gamma": {"beta": -_q(-1)}}
        parity = {g: 1 for g in _GL_GENS}
        return Presentation("suq2", _gl_generators(False), _gl_rules(False), "Q(q)",
                            order=_GL_ORDER, involution=inv, gradings={"parity": (parity, 2)})
    if name == "sphere":
        mu, nu = symbol("mu"), symbol("nu")
        return _sphere("sphere", mu * nu, mu - nu, "Q(q,mu,nu)[t]/(t^2-mu*nu)")
    if name == "sphere_pq":
        # generators rescaled by 1/(mu - nu): mu*nu -> p^2, mu - nu -> 1
        p = symbol("p")
        return _sphere("sphere_pq", p * p, ONE, "Q(q,p)")
    if name == "sphere_mu_eq_nu":
        mu = symbol("mu")
        return _sphere("sphere_mu_eq_nu", mu * mu, ZERO, "Q(q,mu)")
    if name == "cq2":
        gens = [
            Generator("a", invertible=True, inverse="ainv", inv_sign=1),
            Generator("ainv", invertible=True, inverse="a", inv_sign=-1),
            Generator("b"),
        ]
        rules = {
            ("b", "a"): {"a b": _q(-2)},
            ("b", "ainv"): {"ainv b": _q(2)},
            ("a", "ainv"): {"": 1},
            ("ainv", "a"): {"": 1},
        }
        return Presentation("cq2", gens, rules, "Q(q)")
    raise KeyError(f"unknown preset {name!r}")


PRESET_NAMES = ("plane", "glq2", "suq2", "sphere", "sphere_mu_eq_nu")
