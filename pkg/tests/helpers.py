"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from bircharts import MultiPoly, RatFunc


def random_poly(rng: random.Random, vars, max_deg=2, max_terms=3,
                coeff_range=(-5, 5)) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in vars)
        terms[exp] = rng.randint(*coeff_range)
    return MultiPoly(vars, terms)


def random_nonzero_poly(rng, vars, **kw) -> MultiPoly:
    while True:
        p = random_poly(rng, vars, **kw)
        if not p.is_zero:
            return p


def random_ratfunc(rng, vars, **kw) -> RatFunc:
    return RatFunc(random_poly(rng, vars, **kw), random_nonzero_poly(rng, vars, **kw))


def divide_univariate(num, den):
    """Long division of univariate coefficient lists (ascending powers).

    Independent oracle: returns (quotient, remainder) over Fraction.
    """
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    while len(rem) >= len(den) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(den):
            break
        shift = len(rem) - len(den)
        factor = rem[-1] / den[-1]
        quot[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] -= factor * c
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def enumerate_weyl_group(datum):
    """BFS over the Weyl group; element -> length of a shortest word."""
    ident = datum.identity()
    dist = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, datum.rank + 1):
                ws = w * datum.simple(i)
                if ws not in dist:
                    dist[ws] = dist[w] + 1
                    nxt.append(ws)
        frontier = nxt
    return dist


def all_reduced_words(element, datum, dist=None):
    """Every reduced word of an element, via descent recursion."""
    if dist is None:
        dist = enumerate_weyl_group(datum)
    if dist[element] == 0:
        return [()]
    words = []
    for i in range(1, datum.rank + 1):
        shorter = element * datum.simple(i)
        if dist[shorter] == dist[element] - 1:
            for w in all_reduced_words(shorter, datum, dist):
                words.append(w + (i,))
    return words


# Frozen closed forms for the two SL4 bipartite charts: strictly-upper
# entries as polynomials in the six chart parameters.

def golden_sl4_entries(eps: int):
    names = tuple(("a" if eps == 0 else "b") + str(k) for k in range(1, 7))
    v = {name: RatFunc.var(names, name) for name in names}
    if eps == 0:
        a1, a2, a3, a4, a5, a6 = (v[f"a{k}"] for k in range(1, 7))
        return names, {
            (1, 2): a2 + a5,
            (1, 3): a2 * a4,
            (1, 4): a2 * a4 * a6,
            (2, 3): a1 + a4,
            (2, 4): a1 * a3 + a1 * a6 + a4 * a6,
            (3, 4): a3 + a6,
        }
    b1, b2, b3, b4, b5, b6 = (v[f"b{k}"] for k in range(1, 7))
    return names, {
        (1, 2): b1 + b4,
        (1, 3): b1 * b3 + b1 * b6 + b4 * b6,
        (1, 4): b1 * b3 * b5,
        (2, 3): b3 + b6,
        (2, 4): b3 * b5,
        (3, 4): b2 + b5,
    }


# Frozen closed-form inverse of the first SL4 bipartite chart: the six
# parameters as rational functions of the strictly-upper entries.

SL4_INVERSION_EXPRS = (
    "(u(1,3)*u(2,4)-u(1,4)*u(2,3))/(u(1,3)*u(3,4)-u(1,4))",
    "(u(1,3)*u(3,4)-u(1,4))/(u(2,3)*u(3,4)-u(2,4))",
    "(u(1,3)*u(3,4)-u(1,4))/u(1,3)",
    "u(1,3)*(u(2,3)*u(3,4)-u(2,4))/(u(1,3)*u(3,4)-u(1,4))",
    "u(1,2)-(u(1,3)*u(3,4)-u(1,4))/(u(2,3)*u(3,4)-u(2,4))",
    "u(1,4)/u(1,3)",
)


def golden_sl4_transition():
    """Frozen closed form of the second-to-first word parameter transform."""
    names = tuple(f"b{k}" for k in range(1, 7))
    b = {v: RatFunc.var(names, v) for v in names}
    p = b["b1"] * b["b3"] + b["b1"] * b["b6"] + b["b4"] * b["b6"]
    q = b["b2"] * b["b3"] + b["b2"] * b["b6"] + b["b5"] * b["b6"]
    r = (b["b1"] * b["b2"] * b["b3"] + b["b1"] * b["b2"] * b["b6"]
         + b["b1"] * b["b5"] * b["b6"] + b["b2"] * b["b4"] * b["b6"]
         + b["b4"] * b["b5"] * b["b6"])
    formulas = (
        b["b3"] * b["b4"] * b["b5"] * b["b6"] / r,
        r / q,
        r / p,
        p * q / r,
        b["b2"] * b["b3"] * b["b4"] / q,
        b["b1"] * b["b3"] * b["b5"] / p,
    )
    return names, formulas, (p, q, r)
