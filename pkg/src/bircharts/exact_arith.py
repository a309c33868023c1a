"""Exact symbolic arithmetic over the rationals.

Three layers: arbitrary-precision rationals (stdlib ``Fraction``), sparse
multivariate polynomials over a fixed ordered variable universe, and
rational functions kept in a unique canonical form.  All values are
immutable and all operations are pure, so equality of canonical forms is
plain structural equality.

Canonical form of a rational function num/den:

* gcd(num, den) = 1 as polynomials (primitive-part GCD),
* num and den have integer coefficients whose contents are coprime,
* den has a positive leading coefficient in graded-lex order,
* the zero function is 0/1.

Polynomials are dicts mapping exponent tuples (one entry per universe
variable, non-negative) to nonzero Fraction coefficients.  The graded-lex
order is used only for canonical printing and leading-term queries; no
mathematical meaning is attached to it.

Two values may be combined only when their universes agree; a constant is
silently promoted into the other operand's universe (a constant mentions
no variable, so no capture can occur).  Any other mix raises
``UniverseError``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd, lcm as _ilcm
from typing import Iterable, Mapping, Sequence

BigRational = Fraction


class UniverseError(ValueError):
    """Two values over different (non-constant) variable universes were mixed."""


class PoleError(ArithmeticError):
    """A substitution made a denominator vanish identically."""


def _grlex(exp):
    """Graded-lex sort key: total degree first, then the exponent tuple."""
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial over Q.

    ``vars`` is the ordered universe; ``terms`` maps exponent tuples of
    length len(vars) to nonzero coefficients.  The zero polynomial has no
    terms.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Fraction]):
        vs = tuple(vars)
        clean = {}
        width = len(vs)
        for exp, coeff in terms.items():
            e = tuple(int(x) for x in exp)
            if len(e) != width:
                raise ValueError(
                    f"exponent vector {e} has length {len(e)}, expected {width}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = Fraction(coeff)
            if c != 0:
                clean[e] = c
        self.vars = vs
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], value) -> "MultiPoly":
        c = Fraction(value)
        if c == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def one(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls.const(vars, 1)

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(vars)
        if name not in vs:
            raise UniverseError(f"variable {name!r} not in universe {vs}")
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls(vs, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(vars, {tuple(exp): Fraction(coeff)})

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    @property
    def is_one(self) -> bool:
        return self.is_const and self.const_value == 1

    @property
    def const_value(self) -> Fraction:
        if not self.is_const:
            raise ValueError("polynomial is not constant")
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_exp(self) -> tuple:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_exp()]

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int) -> int:
        if self.is_zero:
            return -1
        return max(e[index] for e in self.terms)

    def variables_present(self) -> tuple:
        """Indices of universe variables that actually occur."""
        seen = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen.add(i)
        return tuple(sorted(seen))

    # -- coercion -----------------------------------------------------

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return None, None
        if self.vars == other.vars:
            return self, other
        if other.is_const:
            return self, MultiPoly.const(self.vars, other.const_value)
        if self.is_const:
            return MultiPoly.const(other.vars, self.const_value), other
        raise UniverseError(
            f"cannot mix universes {self.vars} and {other.vars}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = MultiPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {e: x * c for e, x in self.terms.items()})

    # -- comparison / printing ----------------------------------------

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except UniverseError:
            return False
        if a is None:
            return NotImplemented
        return a.terms == b.terms

    __hash__ = None

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = str(mag) + "*" + "*".join(factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


# ---------------------------------------------------------------------
# polynomial division and GCD
# ---------------------------------------------------------------------


def poly_exact_div(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Exact division p/d; raises ValueError when d does not divide p."""
    p, d = p._pair(d)
    if d.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return p
    if d.is_const:
        return p.scale(Fraction(1) / d.const_value)
    rem = dict(p.terms)
    quot: dict = {}
    d_exp = d.leading_exp()
    d_lc = d.terms[d_exp]
    while rem:
        lexp = max(rem, key=_grlex)
        qexp = tuple(a - b for a, b in zip(lexp, d_exp))
        if any(x < 0 for x in qexp):
            raise ValueError("polynomial division is not exact")
        qc = rem[lexp] / d_lc
        quot[qexp] = qc
        for e, c in d.terms.items():
            t = tuple(a + b for a, b in zip(qexp, e))
            s = rem.get(t, Fraction(0)) - qc * c
            if s == 0:
                rem.pop(t, None)
            else:
                rem[t] = s
    return MultiPoly(p.vars, quot)


def _int_primitive(p: MultiPoly):
    """Write p = scale * P with P integer, content 1, positive leading coeff."""
    if p.is_zero:
        return Fraction(0), p
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = _igcd(num_gcd, c.numerator)
        den_lcm = _ilcm(den_lcm, c.denominator)
    scale = Fraction(num_gcd, den_lcm)
    if p.leading_coeff() < 0:
        scale = -scale
    return scale, p.scale(Fraction(1) / scale)


def _primitive_positive(p: MultiPoly) -> MultiPoly:
    """Integer-primitive associate with positive graded-lex leading coefficient."""
    if p.is_zero:
        return p
    _, prim = _int_primitive(p)
    return prim


def _monomial_content(p: MultiPoly) -> tuple:
    """Componentwise minimum exponent over all terms (p nonzero)."""
    mins = None
    for e in p.terms:
        mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
    return mins


def _shift_down(p: MultiPoly, mono: tuple) -> MultiPoly:
    if all(x == 0 for x in mono):
        return p
    return MultiPoly(
        p.vars,
        {tuple(a - b for a, b in zip(e, mono)): c for e, c in p.terms.items()})


def _univ(p: MultiPoly, v: int) -> dict:
    """View of p as univariate in variable index v: degree -> coefficient poly."""
    coeffs: dict = {}
    for e, c in p.terms.items():
        d = e[v]
        rest = list(e)
        rest[v] = 0
        key = tuple(rest)
        bucket = coeffs.setdefault(d, {})
        bucket[key] = bucket.get(key, Fraction(0)) + c
    return {d: MultiPoly(p.vars, t) for d, t in coeffs.items()}


def _from_univ(coeffs: dict, v: int, vars: tuple) -> MultiPoly:
    terms: dict = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            ee = list(e)
            ee[v] += d
            terms[tuple(ee)] = c
    return MultiPoly(vars, terms)


def _prem(f: dict, g: dict) -> dict:
    """Pseudo-remainder of univariate views (deg f >= deg g, g nonzero)."""
    n = max(f)
    m = max(g)
    lc_g = g[m]
    r = dict(f)
    e = n - m + 1
    while r and max(r) >= m:
        dr = max(r)
        s = r[dr]
        new = {d: c * lc_g for d, c in r.items()}
        for d, c in g.items():
            k = d + dr - m
            val = new.get(k)
            nv = (val - s * c) if val is not None else -(s * c)
            if nv.is_zero:
                new.pop(k, None)
            else:
                new[k] = nv
        r = new
        e -= 1
    if e > 0 and r:
        lcp = lc_g ** e
        r = {d: c * lcp for d, c in r.items()}
    return r


def _subresultant_last(f: dict, g: dict) -> dict:
    """Last nonzero member of the subresultant PRS of two univariate views."""
    n, m = max(f), max(g)
    if n < m:
        f, g, n, m = g, f, m, n
    d = n - m
    sign = Fraction(-1) ** (d + 1)
    h = _prem(f, g)
    h = {k: c.scale(sign) for k, c in h.items()}
    lc = g[m]
    c = lc ** d
    c = -c
    last = g
    while h:
        k = max(h)
        last = h
        f, g, m, d = g, h, k, m - k
        b = (-lc) * (c ** d)
        h = _prem(f, g)
        h = {deg: poly_exact_div(cf, b) for deg, cf in h.items()}
        lc = g[m]
        if d > 1:
            c = poly_exact_div((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
    return last


def _content_of_univ(coeffs: dict) -> MultiPoly:
    acc = None
    for cf in coeffs.values():
        acc = cf if acc is None else poly_gcd(acc, cf)
        if acc.is_one:
            break
    return acc


# Heuristic GCD: evaluate at a large integer, take the gcd one level down,
# reconstruct by balanced base-xi digits, and certify by trial division.
# Works on raw int dicts (the inputs are integer-primitive) and falls back
# to the subresultant PRS when it fails to converge.


class _HeuristicFailed(Exception):
    pass


def _int_primitive_raw(terms: dict) -> dict:
    content = 0
    for c in terms.values():
        content = _igcd(content, c)
        if content == 1:
            break
    lead = max(terms, key=_grlex)
    if terms[lead] < 0:
        content = -content
    if content in (0, 1):
        return terms
    return {e: c // content for e, c in terms.items()}


def _eval_at_int_raw(terms: dict, v: int, xi: int) -> dict:
    powers = {0: 1}
    out: dict = {}
    for e, c in terms.items():
        k = e[v]
        if k not in powers:
            powers[k] = xi ** k
        ee = list(e)
        ee[v] = 0
        key = tuple(ee)
        s = out.get(key, 0) + c * powers[k]
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _balanced_digits_raw(ge: dict, v: int, xi: int) -> dict:
    half = xi // 2
    cur = dict(ge)
    terms: dict = {}
    j = 0
    while cur:
        nxt: dict = {}
        for e, c in cur.items():
            d = c % xi
            if d > half:
                d -= xi
            if d:
                ee = list(e)
                ee[v] = j
                terms[tuple(ee)] = d
            rest = (c - d) // xi
            if rest:
                nxt[e] = rest
        cur = nxt
        j += 1
    return terms


def _exact_div_raw(p: dict, d: dict):
    """Exact division of integer term dicts; None when not divisible."""
    rem = dict(p)
    quot: dict = {}
    d_exp = max(d, key=_grlex)
    d_lc = d[d_exp]
    while rem:
        lexp = max(rem, key=_grlex)
        qexp = tuple(a - b for a, b in zip(lexp, d_exp))
        if any(x < 0 for x in qexp):
            return None
        qc, r = divmod(rem[lexp], d_lc)
        if r:
            return None
        quot[qexp] = qc
        for e, c in d.items():
            t = tuple(a + b for a, b in zip(qexp, e))
            s = rem.get(t, 0) - qc * c
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return quot


def _content_raw(terms: dict) -> int:
    content = 0
    for c in terms.values():
        content = _igcd(content, c)
        if content == 1:
            break
    return content


def _heu_gcd_raw(p: dict, q: dict, depth: int, width: int) -> dict:
    """Content-inclusive gcd over the integers of raw term dicts."""
    common = _igcd(_content_raw(p), _content_raw(q))
    if common > 1:
        p = {e: c // common for e, c in p.items()}
        q = {e: c // common for e, c in q.items()}
    present = set()
    for terms in (p, q):
        for e in terms:
            for i, x in enumerate(e):
                if x:
                    present.add(i)
    if not present:
        # contents were coprime after extraction, so the gcd is the common part
        return {(0,) * width: common}
    if depth > width + 2:
        raise _HeuristicFailed

    def deg(terms, i):
        return max(e[i] for e in terms)

    v = min(present, key=lambda i: max(deg(p, i), deg(q, i)))
    hp = max(abs(c) for c in p.values())
    hq = max(abs(c) for c in q.values())
    xi = 2 * min(hp, hq) + 29
    for _ in range(6):
        pe = _eval_at_int_raw(p, v, xi)
        qe = _eval_at_int_raw(q, v, xi)
        if pe and qe:
            try:
                g_low = _heu_gcd_raw(pe, qe, depth + 1, width)
            except _HeuristicFailed:
                g_low = None
            if g_low is not None:
                g = _balanced_digits_raw(g_low, v, xi)
                if g:
                    g = _int_primitive_raw(g)
                    if (_exact_div_raw(p, g) is not None
                            and _exact_div_raw(q, g) is not None):
                        if common > 1:
                            g = {e: common * c for e, c in g.items()}
                        return g
        xi = xi * 73 // 32 + 31
    raise _HeuristicFailed


def _heu_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Heuristic gcd of integer-primitive polynomials; raises on failure."""
    praw = {e: c.numerator for e, c in p.terms.items()}
    qraw = {e: c.numerator for e, c in q.terms.items()}
    graw = _heu_gcd_raw(praw, qraw, 0, len(p.vars))
    return MultiPoly(p.vars, {e: Fraction(c) for e, c in graw.items()})


def _gcd_core(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """GCD of nonzero polynomials with trivial monomial content (up to units)."""
    if p.is_const or q.is_const:
        return MultiPoly.one(p.vars)
    if p == q:
        return p
    present = set(p.variables_present()) | set(q.variables_present())
    v = min(present)
    pu = _univ(p, v)
    qu = _univ(q, v)
    cp = _content_of_univ(pu)
    cq = _content_of_univ(qu)
    cg = poly_gcd(cp, cq)
    pp = poly_exact_div(p, cp)
    qq = poly_exact_div(q, cq)
    if pp.degree_in(v) <= 0 or qq.degree_in(v) <= 0:
        return cg
    last = _subresultant_last(_univ(pp, v), _univ(qq, v))
    if max(last) == 0:
        return cg
    flat = _from_univ(last, v, p.vars)
    cont = _content_of_univ(_univ(flat, v))
    prim = poly_exact_div(flat, cont)
    return cg * prim


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor, integer-primitive with positive leading coeff.

    gcd(p, 0) is the normalized associate of p; gcd of two nonzero constants
    is 1 (constants are units over Q).
    """
    p, q = p._pair(q)
    if p.is_zero:
        return _primitive_positive(q)
    if q.is_zero:
        return _primitive_positive(p)
    mp = _monomial_content(p)
    mq = _monomial_content(q)
    shared = tuple(min(a, b) for a, b in zip(mp, mq))
    p0 = _shift_down(p, mp)
    q0 = _shift_down(q, mq)
    if p0.is_const or q0.is_const:
        core = MultiPoly.one(p.vars)
    else:
        try:
            core = _heu_gcd(_primitive_positive(p0), _primitive_positive(q0))
        except _HeuristicFailed:
            core = _gcd_core(p0, q0)
    if any(shared):
        core = core * MultiPoly.monomial(p.vars, shared)
    return _primitive_positive(core)


# ---------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------


class RatFunc:
    """Rational function over Q in canonical form (see module docstring)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, MultiPoly):
            raise TypeError("num must be a MultiPoly (or use RatFunc.const/var)")
        if den is None:
            den = MultiPoly.one(num.vars)
        f = ratfunc_normalize(num, den)
        self.num, self.den = f.num, f.den

    @classmethod
    def _raw(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def const(cls, vars: Sequence[str], value) -> "RatFunc":
        return cls(MultiPoly.const(vars, value))

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "RatFunc":
        return cls(MultiPoly.variable(vars, name))

    @property
    def universe(self) -> tuple:
        return self.num.vars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_const(self) -> bool:
        return self.num.is_const and self.den.is_const

    @property
    def const_value(self) -> Fraction:
        return self.num.const_value / self.den.const_value

    # -- coercion -----------------------------------------------------

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.universe, other)
        elif isinstance(other, MultiPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return None, None
        if self.universe == other.universe:
            return self, other
        if other.is_const:
            return self, RatFunc.const(self.universe, other.const_value)
        if self.is_const:
            return RatFunc.const(other.universe, self.const_value), other
        raise UniverseError(
            f"cannot mix universes {self.universe} and {other.universe}")

    # -- field arithmetic ----------------------------------------------
    #
    # Operands are canonical, so sums and products are reduced with the
    # classical small-gcd scheme (gcd of denominators first, then the
    # combined numerator against that): the results are automatically
    # coprime and only the integer-content scaling remains.

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        if a.den == b.den:
            t = a.num + b.num
            h = poly_gcd(t, a.den)
            if h.is_one:
                return _canonical_scale(t, a.den)
            return _canonical_scale(poly_exact_div(t, h),
                                    poly_exact_div(a.den, h))
        g = poly_gcd(a.den, b.den)
        if g.is_one:
            return _canonical_scale(a.num * b.den + b.num * a.den,
                                    a.den * b.den)
        bd = poly_exact_div(a.den, g)
        dd = poly_exact_div(b.den, g)
        t = a.num * dd + b.num * bd
        if t.is_zero:
            return RatFunc.const(a.universe, 0)
        h = poly_gcd(t, g)
        if h.is_one:
            return _canonical_scale(t, bd * b.den)
        return _canonical_scale(poly_exact_div(t, h),
                                bd * poly_exact_div(b.den, h))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.is_zero or b.is_zero:
            return RatFunc.const(a.universe, 0)
        g1 = poly_gcd(a.num, b.den)
        g2 = poly_gcd(b.num, a.den)
        an = a.num if g1.is_one else poly_exact_div(a.num, g1)
        bd = b.den if g1.is_one else poly_exact_div(b.den, g1)
        bn = b.num if g2.is_one else poly_exact_div(b.num, g2)
        ad = a.den if g2.is_one else poly_exact_div(a.den, g2)
        return _canonical_scale(an * bn, ad * bd)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        return b.__truediv__(a)

    def inv(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return _canonical_scale(self.den, self.num)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            return self.inv() ** (-k)
        return _canonical_scale(self.num ** k, self.den ** k)

    # -- comparison / printing ----------------------------------------

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except UniverseError:
            return False
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    __hash__ = None

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _canonical_scale(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Canonical scaling of an already poly-coprime pair."""
    if num.is_zero:
        return RatFunc._raw(num, MultiPoly.one(num.vars))
    cn, pn = _int_primitive(num)
    cd, pd = _int_primitive(den)
    ratio = cn / cd
    return RatFunc._raw(pn.scale(ratio.numerator), pd.scale(ratio.denominator))


def ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Canonical form of num/den; raises on a zero denominator."""
    num, den = num._pair(den)
    if den.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero:
        return RatFunc._raw(num, MultiPoly.one(num.vars))
    if not (num.is_const or den.is_const):
        g = poly_gcd(num, den)
        if not g.is_one:
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
    cn, pn = _int_primitive(num)
    cd, pd = _int_primitive(den)
    ratio = cn / cd
    num = pn.scale(ratio.numerator)
    den = pd.scale(ratio.denominator)
    return RatFunc._raw(num, den)


def ratfunc_arith(op: str, f: RatFunc, g: RatFunc) -> RatFunc:
    """Field arithmetic dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def is_polynomial(f: RatFunc) -> bool:
    """True iff the canonical denominator is a (nonzero) constant."""
    return f.den.is_const


def is_laurent_in(f: RatFunc, names: Iterable[str]) -> bool:
    """True iff the canonical denominator is a monomial in variables from names."""
    if not f.den.is_monomial:
        return False
    allowed = set(names)
    exp = next(iter(f.den.terms))
    for name, k in zip(f.den.vars, exp):
        if k and name not in allowed:
            return False
    return True


def _eval_poly(p: MultiPoly, nums: list, dens: list, tvars: tuple):
    """Evaluate p at per-variable values given as (num, den) MultiPoly pairs.

    Returns an unnormalized (numerator, denominator) pair computed with
    polynomial arithmetic only: p(n1/d1, ...) multiplied through by each
    d_i^deg_i(p).
    """
    degs = [0] * len(p.vars)
    for e in p.terms:
        for i, x in enumerate(e):
            if x > degs[i]:
                degs[i] = x
    npow = []
    dpow = []
    one = MultiPoly.one(tvars)
    for i, dmax in enumerate(degs):
        np_i = [one]
        dp_i = [one]
        for _ in range(dmax):
            np_i.append(np_i[-1] * nums[i])
            dp_i.append(dp_i[-1] * dens[i])
        npow.append(np_i)
        dpow.append(dp_i)
    total = MultiPoly.zero(tvars)
    for e, c in p.terms.items():
        term = MultiPoly.const(tvars, c)
        for i, x in enumerate(e):
            if degs[i] == 0:
                continue
            if x:
                term = term * npow[i][x]
            if degs[i] - x:
                term = term * dpow[i][degs[i] - x]
        total = total + term
    denom = one
    for i, dmax in enumerate(degs):
        if dmax:
            denom = denom * dpow[i][dmax]
    return total, denom


def _eval_poly_incremental(p: MultiPoly, values, tvars: tuple) -> RatFunc:
    """Evaluate p at rational-function values with canonical arithmetic.

    Keeps every intermediate in reduced form, so coefficient growth is
    bounded by the (small) reduced answers rather than by the cleared
    common denominator.
    """
    powers = [[RatFunc.const(tvars, 1)] for _ in values]
    total = RatFunc.const(tvars, 0)
    for e in sorted(p.terms, key=_grlex):
        term = RatFunc.const(tvars, p.terms[e])
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                while len(cache) <= k:
                    cache.append(cache[-1] * values[i])
                term = term * cache[k]
        total = total + term
    return total


def substitute(f: RatFunc, assignment: Mapping[str, RatFunc]) -> RatFunc:
    """Composite f(assignment); every universe variable of f must be assigned.

    Raises PoleError when the denominator of f vanishes identically under
    the assignment.
    """
    missing = [v for v in f.universe if v not in assignment]
    if missing:
        raise ValueError(f"unassigned variables: {missing}")
    values = []
    for v in f.universe:
        val = assignment[v]
        if isinstance(val, (int, Fraction)):
            val = RatFunc.const((), val)
        elif isinstance(val, MultiPoly):
            val = RatFunc(val)
        values.append(val)
    tvars = None
    for val in values:
        if not val.is_const:
            if tvars is None:
                tvars = val.universe
            elif val.universe != tvars:
                raise UniverseError(
                    "assignment values live in different universes")
    if tvars is None:
        tvars = values[0].universe if values else ()
    nums = []
    dens = []
    for val in values:
        n = val.num if val.num.vars == tvars else MultiPoly.const(tvars, val.num.const_value)
        d = val.den if val.den.vars == tvars else MultiPoly.const(tvars, val.den.const_value)
        nums.append(n)
        dens.append(d)
    if all(d.is_const for d in dens):
        # polynomial values: clearing denominators costs no gcd work
        pn, pd = _eval_poly(f.num, nums, dens, tvars)
        qn, qd = _eval_poly(f.den, nums, dens, tvars)
        if qn.is_zero:
            raise PoleError("pullback undefined: chart lies in pole locus")
        return ratfunc_normalize(pn * qd, pd * qn)
    rvalues = [RatFunc._raw(n, d) for n, d in zip(nums, dens)]
    num_val = _eval_poly_incremental(f.num, rvalues, tvars)
    den_val = _eval_poly_incremental(f.den, rvalues, tvars)
    if den_val.is_zero:
        raise PoleError("pullback undefined: chart lies in pole locus")
    return num_val / den_val
