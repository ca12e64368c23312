"""Coalgebra and Hopf structure maps on presented algebras.

Structure maps are given on generators and extended (anti-)multiplicatively
by `MultiplicativeMap`.  Images live in tensor products of "spaces": a space
is a `Presentation` (words multiply) or a quotient coalgebra (words are coset
representatives and never multiplied).  Tensor elements are dicts keyed by
tuples of words, one per slot.
"""

from __future__ import annotations

from .backend import kernel as _k
from .ncalg import NcPoly, Presentation, UnsupportedOperation, preset
from .scalar import ONE, ZERO, as_field, qpow

_add_scaled = _k.vec_add_scaled


def slot_product(spaces, a: dict, b: dict) -> dict:
    """Slotwise product of two tensor dicts over presentations `spaces`."""
    out = {}
    k = len(spaces)
    for ka, ca in a.items():
        for kb, cb in b.items():
            c = ca * cb
            acc = {(): c}
            for i in range(k):
                part = spaces[i].mul_words(ka[i], kb[i])
                if len(part) == 1:
                    (w, cw), = part.items()
                    acc = {key + (w,): v if cw.is_one() else v * cw for key, v in acc.items()}
                else:
                    nxt = {}
                    for key, v in acc.items():
                        for w, cw in part.items():
                            _add_scaled(nxt, {key + (w,): cw}, v)
                    acc = nxt
            _add_scaled(out, acc, ONE)
    return out


class MultiplicativeMap:
    """Algebra map (or anti-map) from a presentation into a tensor product.

    `images[g]` is a dict {tuple of words: coefficient}; arity 0 gives a
    character, arity 1 an ordinary algebra map.
    """

    def __init__(self, source: Presentation, targets, images: dict, anti: bool = False,
                 name: str = ""):
        self.source = source
        self.targets = tuple(targets)
        self.anti = anti
        self.name = name
        self.images = {}
        for g, img in images.items():
            gi = source.index(g) if isinstance(g, str) else g
            self.images[gi] = normalize_tensor(self.targets, img)
        missing = set(range(len(source.generators))) - set(self.images)
        if missing:
            names = sorted(source.generators[i].name for i in missing)
            raise ValueError(f"{name or 'map'}: no image for {names}")
        self._unit = {tuple(() for _ in self.targets): ONE}
        self._memo = {(): self._unit}

    @property
    def arity(self) -> int:
        return len(self.targets)

    def on_word(self, w) -> dict:
        w = tuple(w)
        res = self._memo.get(w)
        if res is None:
            head = self.on_word(w[:-1])
            img = self.images[w[-1]]
            if self.anti:
                res = slot_product(self.targets, img, head)
            else:
                res = slot_product(self.targets, head, img)
            self._memo[w] = res
        return res

    def apply(self, terms: dict) -> dict:
        out = {}
        for w, c in terms.items():
            _add_scaled(out, self.on_word(w), c)
        return out

    def __call__(self, x):
        if isinstance(x, NcPoly):
            return self.apply(x.terms)
        return self.apply(x)

    def respects_relations(self, eq=None) -> list:
        """Rules l -> r with f(l) != f(r); empty when well defined."""
        eq = eq or _exact
        bad = []
        for (a, b), rhs in self.source.rules.items():
            left = self.on_word((a, b))
            right = self.apply(rhs)
            if not eq(left, right):
                bad.append(self.source.word_text((a, b)))
        return bad


def normalize_tensor(spaces, terms: dict) -> dict:
    """Bring every slot word to normal form (slots must be presentations)."""
    out = {}
    for key, c in terms.items():
        c = as_field(c)
        if not c:
            continue
        acc = {(): c}
        for sp, w in zip(spaces, key):
            part = sp.nf_word(w)
            nxt = {}
            for k2, v in acc.items():
                for w2, cw in part.items():
                    _add_scaled(nxt, {k2 + (w2,): cw}, v)
            acc = nxt
        _add_scaled(out, acc, ONE)
    return out


def generator_images(pres: Presentation, targets, spec: dict) -> dict:
    """Translate {gen: {(word-string, ...): coef}} into index form."""
    out = {}
    for g, img in spec.items():
        conv = {}
        for key, c in img.items():
            if isinstance(key, str):
                key = (key,)
            conv[tuple(t.parse_word(w) for t, w in zip(targets, key))] = c
        out[g] = conv
    return out


class TensorElement:
    """Element of a tensor product of spaces, keyed by word tuples."""

    __slots__ = ("spaces", "terms")

    def __init__(self, spaces, terms: dict):
        self.spaces = tuple(spaces)
        self.terms = {k: v for k, v in terms.items() if v}

    @property
    def arity(self) -> int:
        return len(self.spaces)

    def _check(self, other):
        if not isinstance(other, TensorElement) or self.spaces != other.spaces:
            raise ValueError("tensor slots do not match")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        _add_scaled(out, other.terms, ONE)
        return TensorElement(self.spaces, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        _add_scaled(out, other.terms, -ONE)
        return TensorElement(self.spaces, out)

    def scale(self, c) -> "TensorElement":
        c = as_field(c)
        return TensorElement(self.spaces, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spaces == other.spaces and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return tensor_text(self.spaces, self.terms)

    __repr__ = __str__


def space_word_text(space, w) -> str:
    if hasattr(space, "rep_text"):
        return space.rep_text(w)
    return space.word_text(w)


def tensor_text(spaces, terms: dict) -> str:
    if not terms:
        return "0"
    from .scalar import render

    def key(k):
        return tuple(space_word_text(s, w) for s, w in zip(spaces, k))

    parts = []
    for k in sorted(terms, key=key):
        c = terms[k]
        body = "⊗".join(key(k)) if k else "1"
        if c.is_one():
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"({render(c)})*{body}")
    return " + ".join(parts)


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    s._check(t)
    for sp in s.spaces:
        if not isinstance(sp, Presentation):
            raise ValueError("only algebra slots can be multiplied")
    return TensorElement(s.spaces, slot_product(s.spaces, s.terms, t.terms))


def apply_slot(s: TensorElement, slot: int, f, target=None) -> TensorElement:
    """Apply a linear map f (word -> dict of words, or -> scalar when
    `target` is the string "scalar") to one slot."""
    spaces = list(s.spaces)
    out = {}
    if target == "scalar":
        del spaces[slot]
        for k, c in s.terms.items():
            v = f(k[slot])
            if v:
                rest = k[:slot] + k[slot + 1:]
                _add_scaled(out, {rest: as_field(v)}, c)
        return TensorElement(spaces, out)
    if target is not None:
        spaces[slot] = target
    for k, c in s.terms.items():
        img = f(k[slot])
        for w, cw in img.items():
            _add_scaled(out, {k[:slot] + (w,) + k[slot + 1:]: cw}, c)
    return TensorElement(spaces, out)


class HopfStructure:
    """Coproduct, counit and (optionally) antipode on a presentation."""

    def __init__(self, pres: Presentation, delta: dict, counit: dict, antipode: dict | None = None,
                 name: str | None = None):
        self.pres = pres
        self.name = name or pres.name
        self.delta = MultiplicativeMap(pres, (pres, pres),
                                       generator_images(pres, (pres, pres), delta), name="coproduct")
        self.eps = MultiplicativeMap(pres, (), {g: {(): v} for g, v in counit.items()}, name="counit")
        self.S = None
        if antipode is not None:
            self.S = MultiplicativeMap(pres, (pres,), generator_images(pres, (pres,), antipode),
                                       anti=True, name="antipode")

    # element-level API -----------------------------------------------------
    def coproduct(self, x) -> TensorElement:
        terms = x.terms if isinstance(x, NcPoly) else x
        return TensorElement((self.pres, self.pres), self.delta.apply(terms))

    def counit(self, x):
        terms = x.terms if isinstance(x, NcPoly) else x
        return self.eps.apply(terms).get((), ZERO)

    def counit_word(self, w):
        return self.eps.on_word(w).get((), ZERO)

    def antipode(self, x) -> NcPoly:
        if self.S is None:
            raise UnsupportedOperation(f"{self.name} has no antipode")
        terms = x.terms if isinstance(x, NcPoly) else x
        return NcPoly(self.pres, {k[0]: v for k, v in self.S.apply(terms).items()})

    def antipode_word(self, w) -> dict:
        if self.S is None:
            raise UnsupportedOperation(f"{self.name} has no antipode")
        return {k[0]: v for k, v in self.S.on_word(w).items()}

    def coproduct_word(self, w) -> dict:
        return self.delta.on_word(w)

    def __repr__(self):
        return f"HopfStructure({self.name!r})"


def coproduct(x: NcPoly, hs: HopfStructure) -> TensorElement:
    return hs.coproduct(x)


def counit(x: NcPoly, hs: HopfStructure):
    return hs.counit(x)


def antipode(x: NcPoly, hs: HopfStructure) -> NcPoly:
    return hs.antipode(x)


# --------------------------------------------------------------------------
# verification


def _exact(a, b, label=None) -> bool:
    return a == b


def check_word_axioms(hs: HopfStructure, w, eq=None) -> list:
    """Failed axiom names for one basis word.

    `eq(lhs, rhs, label)` compares coefficient dicts; exact equality by
    default (a Comparator can be passed to add numeric re-evaluation).
    """
    eq = eq or _exact
    pres = hs.pres
    fails = []
    D = hs.coproduct_word(w)
    left = {}
    right = {}
    for (u, v), c in D.items():
        for (u1, u2), c1 in hs.coproduct_word(u).items():
            _add_scaled(left, {(u1, u2, v): c1}, c)
        for (v1, v2), c2 in hs.coproduct_word(v).items():
            _add_scaled(right, {(u, v1, v2): c2}, c)
    if not eq(left, right, "coassociativity"):
        fails.append("coassociativity")
    target = {tuple(w): ONE}
    el, er = {}, {}
    for (u, v), c in D.items():
        eu = hs.counit_word(u)
        if eu:
            _add_scaled(el, {v: eu}, c)
        ev = hs.counit_word(v)
        if ev:
            _add_scaled(er, {u: ev}, c)
    if not eq(el, target, "left counit"):
        fails.append("left counit")
    if not eq(er, target, "right counit"):
        fails.append("right counit")
    if hs.S is not None:
        ew = hs.counit_word(w)
        unit = {(): ew} if ew else {}
        sl, sr = {}, {}
        for (u, v), c in D.items():
            _add_scaled(sl, pres.mul_terms(hs.antipode_word(u), {v: ONE}), c)
            _add_scaled(sr, pres.mul_terms({u: ONE}, hs.antipode_word(v)), c)
        if not eq(sl, unit, "left antipode"):
            fails.append("left antipode")
        if not eq(sr, unit, "right antipode"):
            fails.append("right antipode")
    return fails


def verify_hopf_axioms(hs: HopfStructure, max_len: int, aux_bounds: dict | None = None,
                       eq=None) -> dict:
    """Coassociativity, counit and antipode identities on all basis words."""
    words = hs.pres.basis_words(max_len, aux_bounds)
    failures = []
    for w in words:
        for f in check_word_axioms(hs, w, eq):
            failures.append({"axiom": f, "word": hs.pres.word_text(w)})
    return {"words": len(words), "failures": failures, "antipode_checked": hs.S is not None}


def verify_respects_relations(hs: HopfStructure, eq=None) -> dict:
    out = {"coproduct": hs.delta.respects_relations(eq),
           "counit": hs.eps.respects_relations(eq)}
    if hs.S is not None:
        out["antipode"] = hs.S.respects_relations(eq)
    return out


def check_filtration_and_grading(hs: HopfStructure, max_len: int, aux_bounds=None) -> list:
    """Words whose coproduct raises length in a slot or moves the d-degree
    of the left slot."""
    pres = hs.pres
    bad = []
    for w in pres.basis_words(max_len, aux_bounds):
        ln, dw = pres.length(w), pres.degree_d(w)
        for (u, v) in hs.coproduct_word(w):
            if pres.length(u) > ln or pres.length(v) > ln:
                bad.append(("filtration", pres.word_text(w)))
                break
            if pres.degree_d(u) != dw:
                bad.append(("grading", pres.word_text(w)))
                break
    return bad


def verify_coaction_axioms(hs: HopfStructure, coaction: MultiplicativeMap, max_len: int,
                           eq=None) -> dict:
    """Coassociativity and counit law of a left coaction H -> H (x) B."""
    eq = eq or _exact
    B = coaction.source
    failures = []
    words = B.basis_words(max_len)
    for w in words:
        D = coaction.on_word(w)
        left, right, counit_side = {}, {}, {}
        for (h, b), c in D.items():
            for (h1, h2), c1 in hs.coproduct_word(h).items():
                _add_scaled(left, {(h1, h2, b): c1}, c)
            for (h2, b2), c2 in coaction.on_word(b).items():
                _add_scaled(right, {(h, h2, b2): c2}, c)
            e = hs.counit_word(h)
            if e:
                _add_scaled(counit_side, {b: e}, c)
        if not eq(left, right, "coaction coassociativity"):
            failures.append({"axiom": "coassociativity", "word": B.word_text(w)})
        if not eq(counit_side, {tuple(w): ONE}, "coaction counit"):
            failures.append({"axiom": "counit", "word": B.word_text(w)})
    return {"words": len(words), "failures": failures}


# --------------------------------------------------------------------------
# presets


def _gl_data(with_c: bool):
    q = qpow(1)
    inv = " cinv" if with_c else ""
    delta = {
        "alpha": {("alpha", "alpha"): 1, ("beta", "gamma"): 1},
        "beta": {("alpha", "beta"): 1, ("beta", "delta"): 1},
        "gamma": {("gamma", "alpha"): 1, ("delta", "gamma"): 1},
        "delta": {("gamma", "beta"): 1, ("delta", "delta"): 1},
    }
    counit = {"alpha": ONE, "beta": ZERO, "gamma": ZERO, "delta": ONE}
    antipode = {
        "alpha": {"delta" + inv: 1},
        "beta": {"beta" + inv: -qpow(-1)},
        "gamma": {"gamma" + inv: -q},
        "delta": {"alpha" + inv: 1},
    }
    if with_c:
        delta["c"] = {("c", "c"): 1}
        delta["cinv"] = {("cinv", "cinv"): 1}
        counit["c"] = counit["cinv"] = ONE
        antipode["c"] = {"cinv": 1}
        antipode["cinv"] = {"c": 1}
    return delta, counit, antipode


_HOPF_CACHE: dict = {}


def hopf_structure(name: str) -> HopfStructure:
    """Hopf structures on glq2, suq2 and cq2."""
    hs = _HOPF_CACHE.get(name)
    if hs is not None:
        return hs
    if name in ("glq2", "suq2"):
        delta, counit, antipode = _gl_data(name == "glq2")
        hs = HopfStructure(preset(name), delta, counit, antipode)
    elif name == "cq2":
        delta = {"a": {("a", "a"): 1}, "ainv": {("ainv", "ainv"): 1},
                 "b": {("", "b"): 1, ("b", "a"): 1}}
        counit = {"a": ONE, "ainv": ONE, "b": ZERO}
        antipode = {"a": {"ainv": 1}, "ainv": {"a": 1}, "b": {"b ainv": -1}}
        hs = HopfStructure(preset("cq2"), delta, counit, antipode)
    else:
        raise KeyError(f"no Hopf structure for {name!r}")
    _HOPF_CACHE[name] = hs
    return hs
