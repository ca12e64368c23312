"""Canonical maps can, can⁻¹ and χ, with truncated bijectivity evidence.

P ⊗_B P is never formed; kernel statements are phrased as "ker χ inside
F_N ⊗ F_N lies in the span of the balancing relations u·b ⊗ v - u ⊗ b·v".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backend import kernel as _k
from .hopf import HopfStructure, TensorElement
from .linalg import Echelon, nullspace
from .ncalg import NcPoly
from .quotient import QuotientCoalgebra, coinvariants
from .scalar import ONE, ZERO

_add_scaled = _k.vec_add_scaled


class CertificationError(ValueError):
    """A surjectivity witness did not map to the requested element."""


def _terms(x):
    if isinstance(x, NcPoly):
        return x.terms
    if isinstance(x, dict):
        return x
    return {tuple(x): ONE}


def can_terms(u: dict, v: dict, hs: HopfStructure) -> dict:
    H = hs.pres
    out = {}
    for uw, cu in u.items():
        for (u1, u2), cd in hs.coproduct_word(uw).items():
            for vw, cv in v.items():
                for w, cw in H.mul_words(u2, vw).items():
                    _add_scaled(out, {(u1, w): cw}, cu * cd * cv)
    return out


def can_inverse_terms(u: dict, v: dict, hs: HopfStructure) -> dict:
    if hs.S is None:
        raise ValueError(f"{hs.name} has no antipode")
    H = hs.pres
    out = {}
    for uw, cu in u.items():
        for (u1, u2), cd in hs.coproduct_word(uw).items():
            s = hs.antipode_word(u2)
            for vw, cv in v.items():
                prod = H.mul_terms(s, {vw: ONE})
                for w, cw in prod.items():
                    _add_scaled(out, {(u1, w): cw}, cu * cd * cv)
    return out


def can_map(u, v, hs: HopfStructure) -> TensorElement:
    """u ⊗ v -> u(1) ⊗ u(2) v."""
    return TensorElement((hs.pres, hs.pres), can_terms(_terms(u), _terms(v), hs))


def can_inverse(u, v, hs: HopfStructure) -> TensorElement:
    """u ⊗ v -> u(1) ⊗ S(u(2)) v."""
    return TensorElement((hs.pres, hs.pres), can_inverse_terms(_terms(u), _terms(v), hs))


def _apply_pairwise(f, s: dict, hs) -> dict:
    out = {}
    for (a, b), c in s.items():
        _add_scaled(out, f({a: ONE}, {b: ONE}, hs), c)
    return out


def _exact(a, b, label=None) -> bool:
    return a == b


def can_roundtrip(hs: HopfStructure, max_len: int, aux_bounds: dict | None = None,
                  eq=None) -> dict:
    """can∘can⁻¹ = id and can⁻¹∘can = id on every pair of basis words of
    F_max_len; equivalent to both matrix products being the identity."""
    eq = eq or _exact
    words = hs.pres.basis_words(max_len, aux_bounds)
    fails = []
    for u in words:
        for v in words:
            e = {(u, v): ONE}
            if not eq(_apply_pairwise(can_terms, can_inverse_terms({u: ONE}, {v: ONE}, hs), hs),
                      e, "can∘can⁻¹"):
                fails.append(("can∘can⁻¹", hs.pres.word_text(u), hs.pres.word_text(v)))
            if not eq(_apply_pairwise(can_inverse_terms, can_terms({u: ONE}, {v: ONE}, hs), hs),
                      e, "can⁻¹∘can"):
                fails.append(("can⁻¹∘can", hs.pres.word_text(u), hs.pres.word_text(v)))
    return {"pairs": len(words) ** 2, "failures": fails}


def chi_terms(u: dict, v: dict, Q: QuotientCoalgebra) -> dict:
    """u ⊗ v -> u v(0) ⊗ v(1) with the right coaction of Q."""
    H = Q.H
    out = {}
    for (v0, v1), c in Q.coaction_R(v).items():
        for uw, cu in u.items():
            for w, cw in H.mul_words(uw, v0).items():
                _add_scaled(out, {(w, v1): cw}, cu * c)
    return out


def chi_map(u, v, Q: QuotientCoalgebra) -> TensorElement:
    return TensorElement((Q.H, Q), chi_terms(_terms(u), _terms(v), Q))


def chi_surjectivity_witness(a, Q: QuotientCoalgebra, u=None, eq=None) -> dict:
    """Σ u S(v(1)) ⊗ v(2) for the representative word v of `a`, certified to
    map to u ⊗ a under χ."""
    hs = Q.hopf
    H = Q.H
    v = tuple(a)
    u_terms = _terms(u) if u is not None else {(): ONE}
    wit = {}
    for (v1, v2), cd in hs.coproduct_word(v).items():
        left = H.mul_terms(u_terms, hs.antipode_word(v1))
        for w, cw in left.items():
            _add_scaled(wit, {(w, v2): cw}, cd)
    image = _apply_pairwise(lambda x, y, _: chi_terms(x, y, Q), wit, hs)
    target = {(uw, v): c for uw, c in u_terms.items()}
    if not (eq or _exact)(image, target, "χ witness"):
        residual = dict(image)
        _add_scaled(residual, target, -ONE)
        raise CertificationError(f"χ(witness) - u⊗a = {residual}")
    return wit


@dataclass
class CanonicalMapMatrix:
    domain: list
    codomain: list
    columns: list
    kernel: list
    rank: int
    relation_dim: int = 0
    kernel_in_relations: bool | None = None
    uncovered: list = field(default_factory=list)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)


def _domain_words(Q: QuotientCoalgebra, N: int, inv_bound: int | None):
    H = Q.H
    words = [w for w in Q.ideal.T if H.length(w) <= N]
    if inv_bound is not None:
        words = [w for w in words if abs(H.inv_exponent(w)) <= inv_bound]
    return words


def chi_kernel_analysis(Q: QuotientCoalgebra, N: int, M: int, inv_bound: int | None = None,
                        coinv=None) -> CanonicalMapMatrix:
    """Matrix of χ on F_N ⊗ F_N, its kernel, and whether the kernel lies in
    R = span{u·b ⊗ v - u ⊗ b·v : u, v words of F_N, b coinvariant of
    length <= M}.  The products u·b and b·v may reach length N + M."""
    H = Q.H
    words = _domain_words(Q, N, inv_bound)
    domain = [(u, v) for u in words for v in words]
    cols = [chi_terms({u: ONE}, {v: ONE}, Q) for u, v in domain]
    codomain = sorted({k for c in cols for k in c})
    kernel_idx = nullspace(cols)
    kernel = [{domain[i]: c for i, c in k.items()} for k in kernel_idx]
    rank = len(domain) - len(kernel)
    if coinv is None:
        coinv = coinvariants(Q, M)
    coinv = [b for b in coinv if b.max_length() > 0]
    rel = Echelon(priority=lambda c: c)
    for b in coinv:
        for u in words:
            ub = H.mul_terms({u: ONE}, b.terms)
            for v in words:
                bv = H.mul_terms(b.terms, {v: ONE})
                vec = {(w, v): c for w, c in ub.items()}
                for w, c in bv.items():
                    _add_scaled(vec, {(u, w): c}, -ONE)
                rel.insert(vec)
    uncovered = [k for k in kernel if not rel.contains(k)]
    return CanonicalMapMatrix(domain, codomain, cols, kernel, rank, len(rel),
                              not uncovered, uncovered)


def chi_counit_check(Q: QuotientCoalgebra, words, eq=None) -> list:
    """(id ⊗ ε_C)χ(u ⊗ v) = u v on pairs of the given words."""
    eq = eq or _exact
    H = Q.H
    fails = []
    for u in words:
        for v in words:
            img = chi_terms({u: ONE}, {v: ONE}, Q)
            out = {}
            for (w, r), c in img.items():
                e = Q.hopf.counit_word(r)
                if e:
                    _add_scaled(out, {w: e}, c)
            if not eq(out, H.mul_words(u, v), "χ counit"):
                fails.append((H.word_text(u), H.word_text(v)))
    return fails


def verify_example_hypothesis(Q: QuotientCoalgebra, N: int, emb=None, coinv=None) -> dict:
    """(a) i(b) - ε(i(b)) ∈ ker π for B-basis words b with i(b) ∈ F_N;
    (b) ker π ∩ F_N ⊆ span{b·u : b ∈ ker ε ∩ coinvariants, u word}.

    `coinv` overrides the coinvariant basis used in (b).  In (b) the products b·u range over the whole window, so the span is
    taken before intersecting with F_N; elements of ker π are taken from
    the core |r| <= inv_bound of the window, away from its exponent edge.
    """
    H = Q.H
    hs = Q.hopf
    a_fail = []
    a_checked = 0
    if emb is not None:
        for w in emb.source.basis_words(N):
            img = emb.image_word(w)
            if not img or max(H.length(x) for x in img) > N:
                continue
            d = dict(img)
            _add_scaled(d, {(): ONE}, -hs.counit(img))
            a_checked += 1
            try:
                if Q.pi(d):
                    a_fail.append(emb.source.word_text(w))
            except LookupError:
                a_fail.append(emb.source.word_text(w))
    core = Q.ideal.window.inv_bound
    kerpi = [row for row in Q.ideal.basis()
             if all(H.length(w) <= N and abs(H.inv_exponent(w)) <= core for w in row)]
    base = coinvariants(Q, N) if coinv is None else coinv
    coinv = []
    for b in base:
        e = hs.counit(b.terms)
        t = dict(b.terms)
        if e:
            _add_scaled(t, {(): ONE}, -e)
        if t:
            coinv.append(t)
    span = Echelon(priority=lambda w: (H.length(w), H.word_key(w)))
    Tset = Q.ideal.Tset
    for b in coinv:
        for u in Q.ideal.T:
            prod = H.mul_terms(b, {u: ONE})
            if prod and all(w in Tset for w in prod):
                span.insert(prod)
    b_fail = [H.word_text(max(row, key=lambda w: (H.length(w), H.word_key(w))))
              for row in kerpi if not span.contains(row)]
    return {"a_checked": a_checked, "a_failures": a_fail, "kernel_pi_dim": len(kerpi),
            "b_span_dim": len(span), "b_failures": b_fail,
            "holds": not a_fail and not b_fail}
