"""Hot arithmetic kernels.

This module is plain Python and is also compiled by Cython at build time
(see ``setup.py``); the compiled extension shadows this file when present.
Keep it free of imports from the rest of the package.

Polynomials in ``Z[q, p, mu, nu]`` are dicts mapping a packed monomial to a
nonzero ``int``.  A packed monomial stores four 16-bit exponent fields
(q lowest); the top bit of each field is a guard used by the divisibility
test, so exponents must stay below 2**15.  Integer order on packed
monomials is lex with ``nu > mu > p > q`` and is a monomial order.
"""

from math import gcd as _igcd

NVARS = 4
BITS = 16
MASK = (1 << BITS) - 1
GUARDS = 0
for _i in range(NVARS):
    GUARDS |= 1 << (BITS * _i + BITS - 1)
del _i

ONE_MONO = 0
P_ZERO = {}
P_ONE = {0: 1}


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder."""


# --------------------------------------------------------------------------
# monomials


def mono_divides(d, m):
    r = m - d
    return r >= 0 and not (r & GUARDS)


def mono_min(a, b):
    out = 0
    for i in range(NVARS):
        s = BITS * i
        ea = (a >> s) & MASK
        eb = (b >> s) & MASK
        out |= (ea if ea < eb else eb) << s
    return out


def mono_degree(m):
    t = 0
    while m:
        t += m & MASK
        m >>= BITS
    return t


def mono_exp(m, var):
    return (m >> (BITS * var)) & MASK


# --------------------------------------------------------------------------
# polynomials


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            del out[m]
    return out


def p_sub(a, b):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            del out[m]
    return out


def p_neg(a):
    return {m: -c for m, c in a.items()}


def p_scale(a, k):
    if k == 1:
        return a
    if not k:
        return {}
    return {m: c * k for m, c in a.items()}


def p_mul(a, b):
    if len(a) == 1:
        (ma, ca), = a.items()
        return {ma + m: ca * c for m, c in b.items()}
    if len(b) == 1:
        (mb, cb), = b.items()
        return {mb + m: cb * c for m, c in a.items()}
    out = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def p_content(a):
    g = 0
    for c in a.values():
        g = _igcd(g, c)
        if g == 1:
            break
    return g


def p_mono_content(a):
    it = iter(a)
    m = next(it)
    for k in it:
        if not m:
            break
        m = mono_min(m, k)
    return m


def p_leading(a):
    """Graded-lex leading monomial (total degree, then packed order)."""
    best = None
    bdeg = -1
    for m in a:
        d = mono_degree(m)
        if d > bdeg or (d == bdeg and m > best):
            best = m
            bdeg = d
    return best


def p_divexact(a, b):
    """Return a/b if b divides a in Z[vars], else None."""
    if not a:
        return {}
    if len(b) == 1:
        (mb, cb), = b.items()
        out = {}
        for m, c in a.items():
            r = m - mb
            if r < 0 or (r & GUARDS):
                return None
            qc, rem = divmod(c, cb)
            if rem:
                return None
            out[r] = qc
        return out
    lm = max(b)
    lc = b[lm]
    rest = [(m, c) for m, c in b.items() if m != lm]
    r = dict(a)
    quo = {}
    while r:
        m = max(r)
        c = r.pop(m)
        s = m - lm
        if s < 0 or (s & GUARDS):
            return None
        qc, rem = divmod(c, lc)
        if rem:
            return None
        quo[s] = qc
        for mb, cb in rest:
            k = s + mb
            v = r.get(k, 0) - qc * cb
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return quo


def _split(a, var):
    """View a as univariate in `var`: {exponent: coefficient polynomial}."""
    s = BITS * var
    out = {}
    for m, c in a.items():
        e = (m >> s) & MASK
        rest = m - (e << s)
        d = out.get(e)
        if d is None:
            out[e] = {rest: c}
        else:
            d[rest] = c
    return out


def _join(u, var):
    s = BITS * var
    out = {}
    for e, coef in u.items():
        sh = e << s
        for m, c in coef.items():
            out[m + sh] = c
    return out


def _vars_of(a):
    used = 0
    for m in a:
        used |= m
    return [i for i in range(NVARS) if (used >> (BITS * i)) & MASK]


def _normalize_sign(a):
    if a and a[p_leading(a)] < 0:
        return p_neg(a)
    return a


def p_gcd(a, b):
    """Greatest common divisor in Z[q, p, mu, nu], graded-lex lead positive."""
    if not a:
        return _normalize_sign(b) if b else {}
    if not b:
        return _normalize_sign(a)
    c = _igcd(p_content(a), p_content(b))
    if len(a) == 1 or len(b) == 1:
        m = mono_min(p_mono_content(a), p_mono_content(b))
        return {m: c}
    ma = p_mono_content(a)
    mb = p_mono_content(b)
    m = mono_min(ma, mb)
    ca = p_content(a)
    cb = p_content(b)
    a1 = p_divexact(a, {ma: ca})
    b1 = p_divexact(b, {mb: cb})
    g = _gcd_primitive(a1, b1)
    if m or c != 1:
        g = {k + m: v * c for k, v in g.items()}
    return _normalize_sign(g)


def _gcd_primitive(a, b):
    # a, b: integer-primitive, monomial-free
    if a == b:
        return a
    if len(a) == 1 or len(b) == 1:
        return {0: 1}
    va = _vars_of(a)
    vb = _vars_of(b)
    g = _heu_gcd(a, b, max(va + vb))
    if g is not None:
        return g
    only_a = [v for v in va if v not in vb]
    only_b = [v for v in vb if v not in va]
    if only_a:
        # gcd cannot involve a variable absent from b
        return _gcd_through_coeffs(a, only_a[-1], b)
    if only_b:
        return _gcd_through_coeffs(b, only_b[-1], a)
    var = va[-1]
    ua = _split(a, var)
    ub = _split(b, var)
    conta = _ucontent(ua)
    contb = _ucontent(ub)
    cont = p_gcd(conta, contb)
    if conta != P_ONE:
        ua = {e: p_divexact(c, conta) for e, c in ua.items()}
    if contb != P_ONE:
        ub = {e: p_divexact(c, contb) for e, c in ub.items()}
    g = _prs(ua, ub)
    g = _join(g, var)
    return p_mul(g, cont) if cont != P_ONE else g


def _specialize(a, var, value):
    """Substitute an integer for `var`."""
    s = BITS * var
    out = {}
    for m, c in a.items():
        e = (m >> s) & MASK
        rest = m - (e << s)
        v = out.get(rest, 0) + c * value ** e
        if v:
            out[rest] = v
        else:
            out.pop(rest, None)
    return out


def _xi_adic(h, var, xi):
    """Polynomial whose balanced base-xi digits in `var` are the values of h."""
    s = BITS * var
    half = xi // 2
    out = {}
    cur = dict(h)
    e = 0
    while cur:
        if e >= (1 << (BITS - 1)) - 1:
            return None
        nxt = {}
        for m, c in cur.items():
            d = c % xi
            if d > half:
                d -= xi
            if d:
                out[m + (e << s)] = d
            r = (c - d) // xi
            if r:
                nxt[m] = r
        cur = nxt
        e += 1
    return out


def _heu_gcd(a, b, var):
    """Heuristic gcd by evaluation at a large integer; the candidate is
    accepted only if it divides both inputs exactly, else None."""
    na = max(abs(c) for c in a.values())
    nb = max(abs(c) for c in b.values())
    xi = 2 * min(na, nb) + 29
    for _ in range(4):
        ea = _specialize(a, var, xi)
        eb = _specialize(b, var, xi)
        if ea and eb:
            h = p_gcd(ea, eb)
            g = _xi_adic(h, var, xi)
            if g:
                c = p_content(g)
                if c != 1:
                    g = {m: v // c for m, v in g.items()}
                g = _normalize_sign(g)
                if p_divexact(a, g) is not None and p_divexact(b, g) is not None:
                    return g
        xi = xi * 73794 // 27011
    return None


def _gcd_through_coeffs(a, var, b):
    g = b
    for coef in _split(a, var).values():
        g = p_gcd(g, coef)
        if len(g) == 1:
            break
    return g


def _ucontent(u):
    g = {}
    for coef in u.values():
        g = p_gcd(g, coef)
        if len(g) == 1 and 0 in g and g[0] == 1:
            return P_ONE
    return g


def _udeg(u):
    return max(u) if u else -1


def _prem(a, b):
    db = _udeg(b)
    lcb = b[db]
    r = a
    while r and _udeg(r) >= db:
        dr = _udeg(r)
        lcr = r[dr]
        shift = dr - db
        nr = {}
        for e, c in r.items():
            nr[e] = p_mul(c, lcb)
        for e, c in b.items():
            k = e + shift
            v = p_sub(nr.get(k, {}), p_mul(c, lcr))
            if v:
                nr[k] = v
            else:
                nr.pop(k, None)
        r = nr
    return r


def _uprimitive(u):
    cont = _ucontent(u)
    if cont == P_ONE:
        return u
    return {e: p_divexact(c, cont) for e, c in u.items()}


def _prs(a, b):
    if _udeg(a) < _udeg(b):
        a, b = b, a
    while b:
        if _udeg(b) == 0:
            return {0: P_ONE}
        r = _prem(a, b)
        a, b = b, _uprimitive(r) if r else r
    return _uprimitive(a)


# --------------------------------------------------------------------------
# fractions over Z[q, p, mu, nu]


def frac_normalize(n, d):
    """Canonical (num, den) with gcd 1, joint content 1, den lead positive."""
    if not n:
        return P_ZERO, P_ONE
    if not d:
        raise ZeroDivisionError("zero denominator")
    if d != P_ONE:
        g = p_gcd(n, d)
        if g != P_ONE:
            n = p_divexact(n, g)
            d = p_divexact(d, g)
            if n is None or d is None:
                raise InexactDivision("gcd does not divide operands")
    c = _igcd(p_content(n), p_content(d))
    if d[p_leading(d)] < 0:
        c = -c
    if c != 1:
        n = {m: v // c for m, v in n.items()}
        d = {m: v // c for m, v in d.items()}
    return n, d


def _cancel(n, d):
    if d == P_ONE or not n:
        return n, d
    g = p_gcd(n, d)
    if g == P_ONE:
        return n, d
    return p_divexact(n, g), p_divexact(d, g)


def frac_add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == d2:
        return frac_normalize(p_add(n1, n2), d1)
    if d1 == P_ONE:
        return frac_normalize(p_add(p_mul(n1, d2), n2), d2)
    if d2 == P_ONE:
        return frac_normalize(p_add(n1, p_mul(n2, d1)), d1)
    g = p_gcd(d1, d2)
    if g == P_ONE:
        return frac_normalize(p_add(p_mul(n1, d2), p_mul(n2, d1)), p_mul(d1, d2))
    e1 = p_divexact(d1, g)
    e2 = p_divexact(d2, g)
    return frac_normalize(p_add(p_mul(n1, e2), p_mul(n2, e1)), p_mul(d1, e2))


def frac_mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return P_ZERO, P_ONE
    if d1 == P_ONE and d2 == P_ONE:
        n = p_mul(n1, n2)
        return _fix_sign_content(n, P_ONE)
    a, d2 = _cancel(n1, d2)
    b, d1 = _cancel(n2, d1)
    return _fix_sign_content(p_mul(a, b), p_mul(d1, d2))


def _fix_sign_content(n, d):
    c = _igcd(p_content(n), p_content(d))
    if d[p_leading(d)] < 0:
        c = -c
    if c != 1:
        n = {m: v // c for m, v in n.items()}
        d = {m: v // c for m, v in d.items()}
    return n, d


# --------------------------------------------------------------------------
# field elements: a + b*t with t**2 = mu*nu, a and b fractions

T_SQUARED = {(1 << (2 * BITS)) | (1 << (3 * BITS)): 1}


class FieldElement:
    """Exact element of Q(q, p, mu, nu)[t]/(t^2 - mu nu).

    ``n/d`` is the rational part, ``tn/td`` the coefficient of ``t`` (``None``
    when absent).  Instances are canonical, immutable and hashable.
    """

    __slots__ = ("n", "d", "tn", "td", "_hash")

    def __init__(self, n, d, tn=None, td=None):
        self.n = n
        self.d = d
        self.tn = tn
        self.td = td
        self._hash = None

    # construction helpers -------------------------------------------------
    @staticmethod
    def make(n, d=P_ONE, tn=None, td=None):
        n, d = frac_normalize(n, d)
        if tn is not None:
            if tn:
                tn, td = frac_normalize(tn, td if td is not None else P_ONE)
            else:
                tn = td = None
        return FieldElement(n, d, tn, td)

    # predicates -----------------------------------------------------------
    def __bool__(self):
        return bool(self.n) or self.tn is not None

    def is_one(self):
        return self.tn is None and self.d == P_ONE and self.n == P_ONE

    def is_laurent(self):
        """True when the value lies in Z[q, q^-1, p, mu, nu] (no t part)."""
        return self.tn is None and len(self.d) == 1 and all(
            (m & MASK) == m for m in self.d) and self.d[next(iter(self.d))] == 1

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return self.tn is None and self.d == P_ONE and (
                    self.n == ({0: other} if other else {}))
            return NotImplemented
        return (self.n == other.n and self.d == other.d
                and self.tn == other.tn and self.td == other.td)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((frozenset(self.n.items()), frozenset(self.d.items()),
                      frozenset(self.tn.items()) if self.tn is not None else None,
                      frozenset(self.td.items()) if self.td is not None else None))
            self._hash = h
        return h

    # arithmetic -----------------------------------------------------------
    def __neg__(self):
        return FieldElement(p_neg(self.n), self.d,
                            p_neg(self.tn) if self.tn is not None else None,
                            self.td)

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, int):
                return NotImplemented
            other = from_int(other)
        n, d = frac_add(self.n, self.d, other.n, other.d)
        if self.tn is None and other.tn is None:
            return FieldElement(n, d)
        if self.tn is None:
            tn, td = other.tn, other.td
        elif other.tn is None:
            tn, td = self.tn, self.td
        else:
            tn, td = frac_add(self.tn, self.td, other.tn, other.td)
            if not tn:
                tn = td = None
        return FieldElement(n, d, tn, td)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, int):
                return NotImplemented
            other = from_int(other)
        return self.__add__(-other)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return from_int(other).__add__(-self)

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, int):
                return NotImplemented
            other = from_int(other)
        if self.tn is None and other.tn is None:
            n, d = frac_mul(self.n, self.d, other.n, other.d)
            return FieldElement(n, d)
        # (a + b t)(c + e t) = (ac + be t^2) + (ae + bc) t
        a, ad = self.n, self.d
        c, cd = other.n, other.d
        ac = frac_mul(a, ad, c, cd)
        if self.tn is not None and other.tn is not None:
            be = frac_mul(self.tn, self.td, other.tn, other.td)
            be = frac_mul(be[0], be[1], T_SQUARED, P_ONE)
            rn, rd = frac_add(ac[0], ac[1], be[0], be[1])
        else:
            rn, rd = ac
        tn, td = P_ZERO, P_ONE
        if other.tn is not None:
            x = frac_mul(a, ad, other.tn, other.td)
            tn, td = frac_add(tn, td, x[0], x[1])
        if self.tn is not None:
            x = frac_mul(self.tn, self.td, c, cd)
            tn, td = frac_add(tn, td, x[0], x[1])
        if not tn:
            return FieldElement(rn, rd)
        return FieldElement(rn, rd, tn, td)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.tn is None:
            n, d = self.n, self.d
            c = -1 if n[p_leading(n)] < 0 else 1
            if c < 0:
                return FieldElement(p_neg(d), p_neg(n))
            return FieldElement(d, n)
        # (a + b t)^-1 = (a - b t) / (a^2 - b^2 t^2)
        a = FieldElement(self.n, self.d)
        b = FieldElement(self.tn, self.td)
        norm = a * a - b * b * FieldElement(T_SQUARED, P_ONE)
        inv = norm.inverse()
        ra = a * inv
        rb = -(b * inv)
        return FieldElement(ra.n, ra.d, rb.n, rb.d)

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, int):
                return NotImplemented
            other = from_int(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return from_int(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return "FieldElement(%r, %r, %r, %r)" % (self.n, self.d, self.tn, self.td)


def from_int(k):
    return FieldElement({0: k} if k else {}, P_ONE)


ZERO = FieldElement({}, P_ONE)
ONE = FieldElement({0: 1}, P_ONE)


# --------------------------------------------------------------------------
# sparse vectors: dict key -> FieldElement


def vec_axpy(target, coef, src, skip=None):
    """target += coef * src, in place, dropping zeros."""
    for k, v in src.items():
        if k == skip:
            continue
        cur = target.get(k)
        if cur is None:
            target[k] = coef * v
        else:
            s = cur + coef * v
            if s:
                target[k] = s
            else:
                del target[k]


def vec_add_scaled(target, src, coef):
    """target += coef * src, in place (coef may be ONE)."""
    if not coef:
        return
    one = coef.is_one()
    for k, v in src.items():
        w = v if one else coef * v
        cur = target.get(k)
        if cur is None:
            target[k] = w
        else:
            s = cur + w
            if s:
                target[k] = s
            else:
                del target[k]
