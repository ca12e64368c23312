"""Characters, embeddings, coideals and quotient coalgebras C = H/J.

Everything is computed inside a finite window T of normal words (bounded
length, and for algebras with an invertible generator a bounded exponent).
J ∩ T is approximated from below by products g*w with w in a grown window;
the growth ("buffer") is increased until the dimension repeats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .backend import kernel as _k
from .hopf import HopfStructure, MultiplicativeMap, TensorElement, generator_images
from .linalg import Echelon, nullspace
from .ncalg import NcPoly, Presentation, enumerate_words
from .scalar import ONE, ZERO, as_field

_add_scaled = _k.vec_add_scaled


class DegreeNotCovered(LookupError):
    """A word fell outside the window on which the projection is known."""


# --------------------------------------------------------------------------
# characters and embeddings


class Character:
    """Algebra map B -> field given on generators."""

    def __init__(self, pres: Presentation, values: dict):
        self.pres = pres
        self.values = {g: as_field(v) for g, v in values.items()}
        self.map = MultiplicativeMap(pres, (), {g: {(): v} for g, v in self.values.items()},
                                     name="character")

    def word(self, w):
        return self.map.on_word(w).get((), ZERO)

    def __call__(self, x):
        terms = x.terms if isinstance(x, NcPoly) else x
        return self.map.apply(terms).get((), ZERO)


def character_check(kappa: Character, pres: Presentation | None = None) -> list:
    """Rules l -> r of B with kappa(l) != kappa(r)."""
    return kappa.map.respects_relations()


class Embedding:
    """Algebra inclusion i: B -> H together with the left coaction of H on B."""

    def __init__(self, source: Presentation, hopf: HopfStructure, images: dict, coaction: dict,
                 name: str = ""):
        self.source = source
        self.hopf = hopf
        self.target = hopf.pres
        self.name = name or source.name
        self.map = MultiplicativeMap(source, (self.target,),
                                     generator_images(source, (self.target,), images),
                                     name="embedding")
        self.coaction = MultiplicativeMap(source, (self.target, source),
                                          generator_images(source, (self.target, source), coaction),
                                          name="coaction")

    def image(self, x) -> NcPoly:
        terms = x.terms if isinstance(x, NcPoly) else x
        return NcPoly(self.target, {k[0]: v for k, v in self.map.apply(terms).items()})

    def image_word(self, w) -> dict:
        return {k[0]: v for k, v in self.map.on_word(w).items()}


def i_kappa_from_coaction(b, emb: Embedding, kappa: Character) -> NcPoly:
    """(id ⊗ kappa) applied to the coaction; raises if it differs from the
    stored image of b."""
    terms = b.terms if isinstance(b, NcPoly) else b
    out = {}
    for (h, w), c in emb.coaction.apply(terms).items():
        k = kappa.word(w)
        if k:
            _add_scaled(out, {h: k}, c)
    result = NcPoly(emb.target, out)
    stored = emb.image(terms)
    if result != stored:
        raise ValueError(f"coaction gives {result}, stored image is {stored}")
    return result


def kappa_image(b, emb: Embedding, kappa: Character) -> NcPoly:
    """(id ⊗ kappa)∘coaction without comparing to the stored image."""
    terms = b.terms if isinstance(b, NcPoly) else b
    out = {}
    for (h, w), c in emb.coaction.apply(terms).items():
        k = kappa.word(w)
        if k:
            _add_scaled(out, {h: k}, c)
    return NcPoly(emb.target, out)


def intertwiner_check(emb: Embedding, max_len: int) -> dict:
    """Δ_H(i(b)) = (id ⊗ i)(Δ_L(b)) for all B-basis words of length <= max_len."""
    hs = emb.hopf
    words = emb.source.basis_words(max_len)
    failures = []
    for w in words:
        left = hs.delta.apply(emb.image_word(w))
        right = {}
        for (h, b), c in emb.coaction.on_word(w).items():
            for ib, cb in emb.image_word(b).items():
                _add_scaled(right, {(h, ib): cb}, c)
        if left != right:
            failures.append(emb.source.word_text(w))
    return {"words": len(words), "failures": failures}


def chi_L_injectivity(emb: Embedding, max_len: int, sample: int = 12) -> dict:
    """Kernel of b ⊗ b' -> b(1) ⊗ b(∞) b' on B_{<=L} ⊗ B_{<=L}, and the
    diagram (id ⊗ i)∘chi_L = can∘(i ⊗ i) on the first `sample` pairs."""
    B = emb.source
    words = B.basis_words(max_len)
    cols = []
    pairs = [(u, v) for u in words for v in words]
    for u, v in pairs:
        vec = {}
        for (h, b), c in emb.coaction.on_word(u).items():
            for w, cw in B.mul_words(b, v).items():
                _add_scaled(vec, {(h, w): cw}, c)
        cols.append(vec)
    kernel = nullspace(cols)
    H = emb.target
    hs = emb.hopf
    diagram_fail = []
    for u, v in pairs[:sample]:
        left = {}
        for (h, w), c in cols[pairs.index((u, v))].items():
            for iw, ci in emb.image_word(w).items():
                _add_scaled(left, {(h, iw): ci}, c)
        right = {}
        for iu, cu in emb.image_word(u).items():
            for iv, cv in emb.image_word(v).items():
                for (h1, h2), cd in hs.coproduct_word(iu).items():
                    for w, cw in H.mul_words(h2, iv).items():
                        _add_scaled(right, {(h1, w): cw * cd}, cu * cv)
        if left != right:
            diagram_fail.append((B.word_text(u), B.word_text(v)))
    return {"domain": len(pairs), "kernel_dim": len(kernel), "diagram_failures": diagram_fail}


# --------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """Normal words with length <= max_len and invertible exponent r in
    [-inv_bound, inv_bound]; with `shifted`, the upper condition is
    r + length <= inv_bound + max_len instead."""

    max_len: int
    inv_bound: int = 0
    shifted: bool = False

    def contains(self, pres: Presentation, w) -> bool:
        ln = pres.length(w)
        if ln > self.max_len:
            return False
        r = pres.inv_exponent(w)
        if r < -self.inv_bound:
            return False
        if self.shifted:
            return r + ln <= self.inv_bound + self.max_len
        return r <= self.inv_bound

    def words(self, pres: Presentation) -> list:
        hi = self.inv_bound + (self.max_len if self.shifted else 0)
        words = enumerate_words(pres, self.max_len, -self.inv_bound, hi, shifted=self.shifted)
        return [w for w in words if self.contains(pres, w)]

    def grown(self, b: int) -> "Window":
        return Window(self.max_len + b, self.inv_bound + b, self.shifted)


# --------------------------------------------------------------------------
# ideal spans


class IdealSpan:
    """J ∩ T for the right ideal J generated by `gens`, with T a window."""

    def __init__(self, pres, gens, window, buffer, echelons, T, dims, stabilized, preferred):
        self.pres = pres
        self.gens = gens
        self.window = window
        self.buffer = buffer
        self._echelons = echelons
        self.T = T
        self.Tset = set(T)
        self.dims = dims
        self.stabilized = stabilized
        self.preferred = preferred
        for e in echelons.values():
            e.interreduce()
        self._pivots = {}
        for e in echelons.values():
            for col, row in e.pivots.items():
                if col in self.Tset:
                    self._pivots[col] = row
        self.reps = [w for w in T if w not in self._pivots]
        self._pi_cache: dict = {}

    @property
    def N(self) -> int:
        return self.window.max_len

    def basis(self) -> list:
        """RREF basis of J ∩ T as dicts word -> coefficient."""
        return [self._pivots[c] for c in self.T if c in self._pivots]

    def dim(self) -> int:
        return len(self._pivots)

    def project_word(self, w) -> dict:
        """π(w) in representative coordinates."""
        res = self._pi_cache.get(w)
        if res is not None:
            return res
        if w not in self.Tset:
            raise DegreeNotCovered(
                f"word {self.pres.word_text(w)} (length {self.pres.length(w)}) "
                f"outside the window of filtration {self.N}")
        row = self._pivots.get(w)
        if row is None:
            res = {w: ONE}
        else:
            res = {c: -v for c, v in row.items() if c != w}
        self._pi_cache[w] = res
        return res

    def project(self, terms: dict) -> dict:
        out = {}
        for w, c in terms.items():
            _add_scaled(out, self.project_word(w), c)
        return out

    def contains(self, terms: dict) -> bool:
        return not self.project(terms)


def _homogeneous_gradings(pres, gens):
    names = []
    for name in ["d"] + list(pres.gradings):
        deg = (lambda w: pres.degree_d(w)) if name == "d" else (lambda w, n=name: pres.grading(n, w))
        if all(len({deg(w) for w in g.terms}) <= 1 for g in gens):
            names.append(deg)
    return names


def coideal_span(gens, pres: Presentation, window, buffer: int = 2, max_buffer: int = 6,
                 preferred=()) -> IdealSpan:
    """Row-reduced basis of J ∩ T for J = sum_g g*H.

    Pivots are chosen among words outside T first, then by length (longest
    first); among words of equal length the words in `preferred` are
    pivoted last, so they survive as representatives whenever possible.
    """
    if isinstance(window, int):
        window = Window(window)
    gens = [g if isinstance(g, NcPoly) else NcPoly(pres, dict(g)) for g in gens]
    gens = [g for g in gens if g]
    T = window.words(pres)
    Tset = set(T)
    pref = set(preferred)

    def prio(col):
        return (0 if col in Tset else 1, pres.length(col), 0 if col in pref else 1,
                pres.word_key(col))

    degs = _homogeneous_gradings(pres, gens)
    echelons: dict = {}
    done = set()
    dims = []
    stabilized = False
    b = buffer
    while True:
        grown = window.grown(b)
        for w in grown.words(pres):
            wl = pres.length(w)
            for gi, g in enumerate(gens):
                if (gi, w) in done or g.max_length() + wl > grown.max_len:
                    continue
                done.add((gi, w))
                row = pres.mul_terms(g.terms, {w: ONE})
                if not row:
                    continue
                first = next(iter(row))
                key = tuple(f(first) for f in degs)
                e = echelons.get(key)
                if e is None:
                    e = echelons[key] = Echelon(prio)
                e.insert(row)
        dim = sum(1 for e in echelons.values() for c in e.pivots if c in Tset)
        dims.append((b, dim))
        if len(dims) >= 2 and dims[-1][1] == dims[-2][1]:
            stabilized = True
            break
        if b >= max_buffer or not gens:
            stabilized = not gens
            break
        b += 1
    return IdealSpan(pres, gens, window, b, echelons, T, dims, stabilized, tuple(preferred))


# --------------------------------------------------------------------------
# quotient coalgebras


class QuotientCoalgebra:
    """C = H/J on the window of `ideal`; representatives are words of H."""

    def __init__(self, hopf: HopfStructure, ideal: IdealSpan, labels=None, name: str = ""):
        self.hopf = hopf
        self.H = hopf.pres
        self.ideal = ideal
        self.reps = list(ideal.reps)
        self.labels = dict(labels or {})
        self.name = name or f"{self.H.name}/J"
        self._dc: dict = {}
        self._rho0: dict = {}

    # display ---------------------------------------------------------------
    def rep_text(self, w) -> str:
        lab = self.labels.get(w)
        return lab if lab is not None else f"[{self.H.word_text(w)}]"

    def word_text(self, w) -> str:
        return self.rep_text(w)

    def __repr__(self):
        return f"QuotientCoalgebra({self.name!r}, dim={len(self.reps)})"

    # structure maps ---------------------------------------------------------
    def pi(self, x) -> dict:
        terms = x.terms if isinstance(x, NcPoly) else x
        return self.ideal.project(terms)

    def pi_word(self, w) -> dict:
        return self.ideal.project_word(tuple(w))

    def delta_rep(self, rep) -> dict:
        """Δ_C(π(rep)) = (π ⊗ π)Δ(rep)."""
        res = self._dc.get(rep)
        if res is None:
            res = self.pi_pi(self.hopf.coproduct_word(rep))
            self._dc[rep] = res
        return res

    def delta(self, a: dict) -> dict:
        out = {}
        for rep, c in a.items():
            _add_scaled(out, self.delta_rep(rep), c)
        return out

    def counit(self, a: dict):
        out = ZERO
        for rep, c in a.items():
            out = out + c * self.hopf.counit_word(rep)
        return out

    def pi_pi(self, terms: dict) -> dict:
        out = {}
        pw = self.ideal.project_word
        for (u, v), c in terms.items():
            pu = pw(u)
            pv = pw(v)
            for ru, cu in pu.items():
                for rv, cv in pv.items():
                    _add_scaled(out, {(ru, rv): cu * cv}, c)
        return out

    def coaction_R(self, x) -> dict:
        """(id ⊗ π)∘Δ as a dict {(H word, rep): coef}."""
        terms = x.terms if isinstance(x, NcPoly) else x
        out = {}
        pw = self.ideal.project_word
        for w, c in terms.items():
            for (u, v), cd in self.hopf.coproduct_word(w).items():
                for r, cr in pw(v).items():
                    _add_scaled(out, {(u, r): cd * cr}, c)
        return out

    def coaction_element(self, x) -> TensorElement:
        return TensorElement((self.H, self), self.coaction_R(x))

    def rho0_word(self, rep, w) -> dict:
        """π(rep·w) for a representative word and a normal word."""
        key = (rep, w)
        res = self._rho0.get(key)
        if res is None:
            res = self.pi(self.H.mul_words(rep, w))
            self._rho0[key] = res
        return res

    @property
    def one(self):
        return self.pi_word(())


def verify_coideal(ideal: IdealSpan, hopf: HopfStructure, limit: int | None = None) -> dict:
    """ε(j) = 0 and (π ⊗ π)Δ(j) = 0 for each basis element j of J ∩ T.

    The second condition is equivalent to Δ(j) ∈ J⊗T + T⊗J since the kernel
    of π ⊗ π on T ⊗ T is exactly that sum.
    """
    failures = []
    basis = ideal.basis()
    if limit is not None:
        basis = basis[:limit]
    Q = QuotientCoalgebra(hopf, ideal)
    for j in basis:
        eps = hopf.counit(j)
        lead = max(j, key=lambda w: (ideal.pres.length(w), ideal.pres.word_key(w)))
        if eps:
            failures.append({"element": ideal.pres.word_text(lead), "reason": "counit"})
            continue
        try:
            img = Q.pi_pi(hopf.delta.apply(j))
        except DegreeNotCovered as exc:
            failures.append({"element": ideal.pres.word_text(lead), "reason": str(exc)})
            continue
        if img:
            failures.append({"element": ideal.pres.word_text(lead), "reason": "coproduct"})
    return {"checked": len(basis), "failures": failures}


def quotient(ideal: IdealSpan, hopf: HopfStructure, labels=None, name: str = "") -> QuotientCoalgebra:
    return QuotientCoalgebra(hopf, ideal, labels, name)


def verify_quotient_coalgebra(Q: QuotientCoalgebra) -> dict:
    """Coassociativity and counit of Δ_C on every representative."""
    fails = []
    for r in Q.reps:
        D = Q.delta_rep(r)
        left, right = {}, {}
        for (a, b), c in D.items():
            for (a1, a2), c1 in Q.delta_rep(a).items():
                _add_scaled(left, {(a1, a2, b): c1}, c)
            for (b1, b2), c2 in Q.delta_rep(b).items():
                _add_scaled(right, {(a, b1, b2): c2}, c)
        if left != right:
            fails.append((Q.rep_text(r), "coassociativity"))
        el, er = {}, {}
        for (a, b), c in D.items():
            ea = Q.hopf.counit_word(a)
            if ea:
                _add_scaled(el, {b: ea}, c)
            eb = Q.hopf.counit_word(b)
            if eb:
                _add_scaled(er, {a: eb}, c)
        if el != {r: ONE} or er != {r: ONE}:
            fails.append((Q.rep_text(r), "counit"))
    return {"reps": len(Q.reps), "failures": fails}


def coinvariants(Q: QuotientCoalgebra, N: int, block=None) -> list:
    """Basis of {u ∈ T_N : Δ_R(u) = u ⊗ 1}, as NcPolys.

    T_N is the window restricted to length <= N.  The system is solved in
    blocks of equal d-degree (Δ preserves the d-degree of the left slot);
    `block`, if given, restricts to one d-degree.
    """
    H = Q.H
    one = Q.one
    words = [w for w in Q.ideal.T if H.length(w) <= N]
    by_deg: dict = {}
    for w in words:
        by_deg.setdefault(H.degree_d(w), []).append(w)
    out = []
    for d in sorted(by_deg):
        if block is not None and d != block:
            continue
        ws = by_deg[d]
        cols = []
        for w in ws:
            vec = dict(Q.coaction_R({w: ONE}))
            for r, c in one.items():
                _add_scaled(vec, {(w, r): c}, -ONE)
            cols.append(vec)
        keys = {i: (H.length(w), H.word_key(w)) for i, w in enumerate(ws)}
        for k in nullspace(cols, priority=lambda i: keys[i]):
            out.append(NcPoly(H, {ws[i]: c for i, c in k.items()}))
    return out


def same_span(a: list, b: list) -> dict:
    """Both inclusions between spans of two lists of dicts."""
    ea = Echelon(priority=lambda c: c)
    for v in a:
        ea.insert(v)
    eb = Echelon(priority=lambda c: c)
    for v in b:
        eb.insert(v)
    a_in_b = all(eb.contains(v) for v in a)
    b_in_a = all(ea.contains(v) for v in b)
    return {"dim_a": len(ea), "dim_b": len(eb), "a_in_b": a_in_b, "b_in_a": b_in_a,
            "equal": a_in_b and b_in_a}


# --------------------------------------------------------------------------
# actions


def rho0(a, u, Q: QuotientCoalgebra) -> dict:
    """π(v·u) for a = π(v); `a` is a rep word or a dict rep -> coef."""
    if not isinstance(a, dict):
        a = {tuple(a): ONE}
    terms = u.terms if isinstance(u, NcPoly) else u
    out = {}
    for rep, c in a.items():
        for w, cw in terms.items():
            _add_scaled(out, Q.rho0_word(rep, w), c * cw)
    return out


def rho0_well_defined(Q: QuotientCoalgebra, u_words) -> dict:
    """π(j·u) = 0 for every J-basis element j and word u with j·u inside T."""
    H = Q.H
    checked = 0
    failures = []
    for j in Q.ideal.basis():
        jl = max(H.length(w) for w in j)
        for u in u_words:
            if jl + H.length(u) > Q.ideal.N:
                continue
            try:
                img = Q.pi(H.mul_terms(j, {u: ONE}))
            except DegreeNotCovered:
                continue
            checked += 1
            if img:
                failures.append(H.word_text(u))
    return {"checked": checked, "failures": failures}


def rho(s: dict, v, Q: QuotientCoalgebra) -> dict:
    """ρ(h ⊗ a, v) = h v(1) ⊗ ρ0(a, v(2)) extended bilinearly."""
    H = Q.H
    terms = v.terms if isinstance(v, NcPoly) else v
    out = {}
    for (h, rep), c in s.items():
        for w, cw in terms.items():
            for (v1, v2), cd in Q.hopf.coproduct_word(w).items():
                left = H.mul_words(h, v1)
                right = Q.rho0_word(rep, v2)
                k = c * cw * cd
                for lw, cl in left.items():
                    for r, cr in right.items():
                        _add_scaled(out, {(lw, r): cl * cr}, k)
    return out


def verify_rho_axioms(Q: QuotientCoalgebra, max_len: int, coinvariant_basis=None) -> dict:
    """Action law, conditions (1) and (2), and closure of coinvariants.

    Combinations whose intermediate words leave the window are counted as
    skipped rather than checked.
    """
    H = Q.H
    N = Q.ideal.N
    words = [w for w in Q.ideal.T if H.length(w) <= max_len and H.inv_exponent(w) == 0]
    reps = [r for r in Q.reps if H.length(r) <= max_len]
    fails = []
    counts = {"action": 0, "unit_condition": 0, "coaction_condition": 0, "closure": 0,
              "skipped": 0}
    one = Q.one

    def run(kind, fn, *labels):
        try:
            ok = fn()
        except DegreeNotCovered:
            counts["skipped"] += 1
            return
        counts[kind] += 1
        if not ok:
            fails.append((kind,) + labels)

    def unit_condition(u, v):
        # rho(u ⊗ 1, v) = u v(0) ⊗ v(1)
        lhs = rho({(u, r): c for r, c in one.items()}, {v: ONE}, Q)
        rhs = {}
        for (v0, v1), c in Q.coaction_R({v: ONE}).items():
            for w, cw in H.mul_words(u, v0).items():
                _add_scaled(rhs, {(w, v1): cw}, c)
        return lhs == rhs

    def coaction_condition(u, v):
        # rho(Δ_R u, v) = Δ_R(u v)
        return rho(Q.coaction_R({u: ONE}), {v: ONE}, Q) == Q.coaction_R(H.mul_words(u, v))

    def action(r, v, w):
        s = {((), r): ONE}
        return rho(rho(s, {v: ONE}, Q), {w: ONE}, Q) == rho(s, H.mul_words(v, w), Q)

    def closure(a, b):
        prod = H.mul_terms(a.terms, b.terms)
        rhs = {}
        for w, c in prod.items():
            for r, cr in one.items():
                _add_scaled(rhs, {(w, r): cr}, c)
        return Q.coaction_R(prod) == rhs

    for u in words:
        for v in words:
            if H.length(u) + H.length(v) > N:
                continue
            ut, vt = H.word_text(u), H.word_text(v)
            run("unit_condition", lambda: unit_condition(u, v), ut, vt)
            run("coaction_condition", lambda: coaction_condition(u, v), ut, vt)
    small = [w for w in words if H.length(w) <= max(1, max_len // 2)]
    for r in reps:
        for v in small:
            for w in small:
                if H.length(r) + H.length(v) + H.length(w) > N:
                    continue
                run("action", lambda: action(r, v, w), Q.rep_text(r), H.word_text(v),
                    H.word_text(w))
    for a in coinvariant_basis or ():
        for b in coinvariant_basis:
            if a.max_length() + b.max_length() > N:
                continue
            run("closure", lambda: closure(a, b), str(a), str(b))
    return {"counts": counts, "failures": fails}


# --------------------------------------------------------------------------
# presets


def _sphere_params(name):
    """(s, dm, t): sphere parameters and the square root t with t^2 = s."""
    from .scalar import symbol

    if name == "sphere":
        return symbol("mu") * symbol("nu"), symbol("mu") - symbol("nu"), symbol("t")
    if name == "sphere_pq":
        return symbol("p") ** 2, ONE, symbol("p")
    if name == "sphere_mu_eq_nu":
        return symbol("mu") ** 2, ZERO, symbol("mu")
    raise KeyError(name)


def sphere_i_z(name: str) -> NcPoly:
    """Image of z forced by the coaction and the character:
    -t(q αγ - βδ) - q (μ-ν) βγ."""
    from .hopf import hopf_structure
    from .scalar import qpow

    _, dm, t = _sphere_params(name)
    H = hopf_structure("suq2").pres
    return H.poly({"alpha gamma": -t * qpow(1), "beta delta": t, "beta gamma": -qpow(1) * dm})


def embedding(name: str) -> tuple[Embedding, Character]:
    """(embedding, character) for plane, sphere, sphere_pq, sphere_mu_eq_nu."""
    from .hopf import hopf_structure
    from .ncalg import preset
    from .scalar import qpow

    if name == "plane":
        hs = hopf_structure("glq2")
        B = preset("plane")
        images = {"x": {("alpha",): 1}, "y": {("gamma",): 1}}
        coaction = {"x": {("alpha", "x"): 1, ("beta", "y"): 1},
                    "y": {("gamma", "x"): 1, ("delta", "y"): 1}}
        return Embedding(B, hs, images, coaction), Character(B, {"x": 1, "y": 0})
    s, dm, t = _sphere_params(name)
    q = qpow(1)
    hs = hopf_structure("suq2")
    B = preset(name)
    images = {
        "x": {("alpha alpha",): t * q, ("beta beta",): -t, ("alpha beta",): dm},
        "y": {("gamma gamma",): t * q, ("delta delta",): -t, ("gamma delta",): dm},
        "z": {("alpha gamma",): -t * q, ("beta delta",): t, ("beta gamma",): -q * dm},
    }
    w = -(ONE + qpow(-2))
    coaction = {
        "x": {("alpha alpha", "x"): 1, ("alpha beta", ""): dm, ("alpha beta", "z"): w,
              ("beta beta", "y"): 1},
        "y": {("gamma gamma", "x"): 1, ("gamma delta", ""): dm, ("gamma delta", "z"): w,
              ("delta delta", "y"): 1},
        "z": {("alpha gamma", "x"): -1, ("beta delta", "y"): -1, ("beta gamma", ""): -q * dm,
              ("", "z"): 1, ("beta gamma", "z"): q + qpow(-1)},
    }
    kappa = Character(B, {"x": q * t, "y": -t, "z": 0})
    return Embedding(B, hs, images, coaction, name=name), kappa


def ideal_generators(emb: Embedding, kappa: Character) -> list:
    """i(b) - kappa(b) for the generators b of B."""
    out = []
    for g in emb.source.generators:
        img = emb.image({(emb.source.index(g.name),): ONE})
        out.append(img - kappa({(emb.source.index(g.name),): ONE}))
    return out


def _power_word(pres, name, n):
    return pres.parse_word(" ".join([name] * n)) if n > 0 else ()


def plane_quotient(N: int, inv_bound: int, buffer: int = 2):
    """Quotient of GL_q(2) by the plane coideal on the shifted window with
    lengths <= N and c-exponents r >= -inv_bound, r + length <= inv_bound + N.

    Returns (Q, emb, kappa); representatives β^m c^n are labelled a(m,n).
    """
    emb, kappa = embedding("plane")
    H = emb.target
    window = Window(N, inv_bound, shifted=True)
    lo, hi = -inv_bound - buffer - 2, inv_bound + N + buffer + 2
    pref, labels = [], {}
    for m in range(N + 1):
        for n in range(lo, hi + 1):
            w = plane_word(H, m, n)
            pref.append(w)
            labels[w] = f"a({m},{n})"
    J = coideal_span(ideal_generators(emb, kappa), H, window, buffer=buffer, preferred=pref)
    return QuotientCoalgebra(emb.hopf, J, labels, name="plane"), emb, kappa


def plane_word(H, m: int, n: int):
    """Normal word β^m c^n (c^n with n < 0 means cinv^-n)."""
    return _power_word(H, "beta", m) + (_power_word(H, "c", n) if n >= 0
                                         else _power_word(H, "cinv", -n))


def sphere_quotient(name: str, N: int, buffer: int = 2):
    """Quotient of SU_q(2) by the sphere coideal for the presets sphere,
    sphere_pq and sphere_mu_eq_nu.  Representatives: 1, x_n = [α^n],
    y_n = [δ^n]; for sphere_mu_eq_nu the second family is [α^(n-1) γ]."""
    emb, kappa = embedding(name)
    H = emb.target
    pref, labels = [()], {(): "1"}
    for n in range(1, N + buffer + 3):
        x = _power_word(H, "alpha", n)
        if name == "sphere_mu_eq_nu":
            y = H.parse_word(" ".join(["alpha"] * (n - 1) + ["gamma"]))
        else:
            y = _power_word(H, "delta", n)
        pref += [x, y]
        labels[x] = f"x{n}"
        labels[y] = f"y{n}"
    J = coideal_span(ideal_generators(emb, kappa), H, Window(N), buffer=buffer, preferred=pref)
    return QuotientCoalgebra(emb.hopf, J, labels, name=name), emb, kappa
