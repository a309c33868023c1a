"""Coordinate-ring membership decision procedures.

A rational function on the unipotent group (resp. the flag-type quotient,
the full group) is regular if and only if its pullback along each of the
two (resp. four, eight) distinguished bipartite charts is a polynomial
(resp. a polynomial that is Laurent in the torus coordinates).  Each
decision returns a verdict with one certificate per chart; a certificate
records the pullback itself so it can be re-checked independently.

Chart inversion is provided for n <= 4: closed formulas for the first
bipartite word, with the second word's formulas derived by composing with
the braid-move transition between the two words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .exact_arith import (PoleError, RatFunc, is_laurent_in, is_polynomial,
                          substitute)
from .root_data import CartanDatum, cartan, distinguished_word
from .sl_realization import GroupMatrix, TorusPoint, chart_G, chart_GmodU, chart_U

DEFAULT_SEED = 20250801


@dataclass(frozen=True)
class ChartId:
    """Identifier of one distinguished chart.

    space "U" uses eps alone; "GmodU" adds a sign; "G" adds a second word
    index and a variant ("pm" for x t y, "mp" for y t^-1 x).
    """

    space: str
    eps: int
    sign: Optional[str] = None
    eps2: Optional[int] = None
    variant: Optional[str] = None

    @property
    def label(self) -> str:
        if self.space == "U":
            return f"u:jj{self.eps}"
        if self.space == "GmodU":
            return f"g-mod-u:jj{self.eps}:{self.sign}"
        return f"g:jj{self.eps},jj{self.eps2}:{self.variant}"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Certificate:
    chart: ChartId
    pullback: RatFunc
    ok: bool


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    certificates: tuple
    failing_chart: Optional[ChartId]


def _verdict(certs) -> MembershipVerdict:
    certs = tuple(certs)
    failing = next((c.chart for c in certs if not c.ok), None)
    return MembershipVerdict(failing is None, certs, failing)


# -- variable universes -------------------------------------------------


def _idx(i: int, j: int) -> str:
    return f"{i}{j}" if i < 10 and j < 10 else f"{i}_{j}"


def u_variables(n: int) -> tuple:
    return tuple(f"u{_idx(i, j)}" for i in range(1, n + 1)
                 for j in range(i + 1, n + 1))


def g_variables(n: int) -> tuple:
    return tuple(f"g{_idx(i, j)}" for i in range(1, n + 1)
                 for j in range(1, n + 1))


def param_names(eps: int, nu: int) -> tuple:
    stem = "a" if eps == 0 else "b"
    return tuple(f"{stem}{k}" for k in range(1, nu + 1))


def torus_names(n: int) -> tuple:
    return tuple(f"t{i}" for i in range(1, n))


def _nu(n: int) -> int:
    return n * (n - 1) // 2


# -- unipotent group ----------------------------------------------------


def _datum(n: int, datum: Optional[CartanDatum]) -> CartanDatum:
    return datum if datum is not None else cartan("A", n - 1)


def _chart_U_entries(n: int, eps: int, datum: Optional[CartanDatum] = None):
    d = _datum(n, datum)
    jj = distinguished_word(d, eps)
    universe = param_names(eps, d.nu)
    params = [RatFunc.var(universe, v) for v in universe]
    return chart_U(jj, params, n)


def pullback_U(phi: RatFunc, eps: int, n: int,
               datum: Optional[CartanDatum] = None) -> RatFunc:
    """Pullback along the bipartite unipotent chart for eps."""
    matrix = _chart_U_entries(n, eps, datum)
    assignment = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assignment[f"u{_idx(i, j)}"] = matrix.entry(i, j)
    return substitute(phi, assignment)


def decide_O_U(phi: RatFunc, n: int,
               datum: Optional[CartanDatum] = None) -> MembershipVerdict:
    """Membership in the polynomial ring of the unipotent group."""
    certs = []
    for eps in (0, 1):
        pb = pullback_U(phi, eps, n, datum)
        certs.append(Certificate(ChartId("U", eps), pb, is_polynomial(pb)))
    return _verdict(certs)


# -- flag-type quotient and full group ----------------------------------


def check_invariance(phi: RatFunc, side: str = "right_Uminus") -> bool:
    """Whether phi(g y_j(s)) = phi(g) for every lower one-parameter subgroup."""
    if side != "right_Uminus":
        raise ValueError(f"unknown side {side!r}")
    gvars = phi.universe
    n2 = len(gvars)
    n = round(n2 ** 0.5)
    if n * n != n2:
        raise ValueError("expected a full matrix-entry universe")
    big = gvars + ("s",)
    s = RatFunc.var(big, "s")
    idmap = {v: RatFunc.var(big, v) for v in gvars}
    phi_big = substitute(phi, idmap)
    for j in range(1, n):
        assignment = dict(idmap)
        for k in range(1, n + 1):
            assignment[f"g{_idx(k, j)}"] = (
                idmap[f"g{_idx(k, j)}"] + s * idmap[f"g{_idx(k, j + 1)}"])
        if substitute(phi, assignment) != phi_big:
            return False
    return True


def _pull_through_matrix(phi: RatFunc, matrix: GroupMatrix) -> RatFunc:
    n = matrix.n
    assignment = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assignment[f"g{_idx(i, j)}"] = matrix.entry(i, j)
    return substitute(phi, assignment)


def decide_O_GmodU(phi: RatFunc, n: int,
                   datum: Optional[CartanDatum] = None) -> MembershipVerdict:
    """Membership in the coordinate ring of the flag-type quotient.

    The input must be a right-invariant rational function of the matrix
    entries; each of the four chart pullbacks must be polynomial in the
    chart parameters and Laurent in the torus coordinates.
    """
    if not check_invariance(phi):
        raise ValueError("not a function on G/U-: input is not right-invariant")
    d = _datum(n, datum)
    tnames = torus_names(n)
    certs = []
    for eps in (0, 1):
        jj = distinguished_word(d, eps)
        universe = param_names(eps, d.nu) + tnames
        params = [RatFunc.var(universe, v) for v in param_names(eps, d.nu)]
        t = TorusPoint(tuple(RatFunc.var(universe, v) for v in tnames))
        for sign in ("+", "-"):
            matrix = chart_GmodU(jj, params, t, sign, n)
            pb = _pull_through_matrix(phi, matrix)
            certs.append(Certificate(ChartId("GmodU", eps, sign=sign), pb,
                                     is_laurent_in(pb, tnames)))
    return _verdict(certs)


def decide_O_G(phi: RatFunc, n: int,
               datum: Optional[CartanDatum] = None) -> MembershipVerdict:
    """Membership in the coordinate ring of the full group.

    Any rational representative in the matrix entries is accepted; all
    eight chart pullbacks must be polynomial in both parameter blocks and
    Laurent in the torus coordinates.
    """
    d = _datum(n, datum)
    tnames = torus_names(n)
    nu = d.nu
    anames = tuple(f"a{k}" for k in range(1, nu + 1))
    bnames = tuple(f"b{k}" for k in range(1, nu + 1))
    universe = anames + tnames + bnames
    aparams = [RatFunc.var(universe, v) for v in anames]
    bparams = [RatFunc.var(universe, v) for v in bnames]
    t = TorusPoint(tuple(RatFunc.var(universe, v) for v in tnames))
    certs = []
    for eps in (0, 1):
        for eps2 in (0, 1):
            jj = distinguished_word(d, eps)
            jj2 = distinguished_word(d, eps2)
            for variant in ("pm", "mp"):
                matrix = chart_G(jj, jj2, aparams, t, bparams, variant, n)
                pb = _pull_through_matrix(phi, matrix)
                certs.append(Certificate(
                    ChartId("G", eps, eps2=eps2, variant=variant), pb,
                    is_laurent_in(pb, tnames)))
    return _verdict(certs)


# -- chart inversion for small n -----------------------------------------


def _uvar(universe, i, j):
    return RatFunc.var(universe, f"u{_idx(i, j)}")


@lru_cache(maxsize=None)
def _inversion_formulas(word: tuple, n: int) -> tuple:
    """Inverse of the unipotent chart for a supported word, as rational
    functions of the strictly-upper matrix entries."""
    uu = u_variables(n)
    if n == 2 and word == (1,):
        return (_uvar(uu, 1, 2),)
    if n == 3:
        u12, u13, u23 = (_uvar(uu, 1, 2), _uvar(uu, 1, 3), _uvar(uu, 2, 3))
        if word == (1, 2, 1):
            return (u13 / u23, u23, u12 - u13 / u23)
        if word == (2, 1, 2):
            return (u23 - u13 / u12, u12, u13 / u12)
    if n == 4:
        u12, u13, u14 = (_uvar(uu, 1, 2), _uvar(uu, 1, 3), _uvar(uu, 1, 4))
        u23, u24, u34 = (_uvar(uu, 2, 3), _uvar(uu, 2, 4), _uvar(uu, 3, 4))
        if word == (2, 1, 3, 2, 1, 3):
            p = u13 * u34 - u14
            q = u23 * u34 - u24
            return (
                (u13 * u24 - u14 * u23) / p,
                p / q,
                p / u13,
                u13 * q / p,
                u12 - p / q,
                u14 / u13,
            )
        if word == (1, 3, 2, 1, 3, 2):
            # compose the first-word formulas with the word-to-word transition
            from .braid_engine import transition

            datum = cartan("A", 3)
            first = (2, 1, 3, 2, 1, 3)
            base = _inversion_formulas(first, 4)
            names = tuple(f"a{k}" for k in range(1, 7))
            tr = transition(first, word, datum, param_names=names)
            assignment = {name: base[k] for k, name in enumerate(names)}
            return tuple(substitute(f, assignment) for f in tr.formulas)
    raise ValueError(f"no inversion formulas for word {word} at n={n}")


def invert_chart(u: GroupMatrix, eps: int, n: int,
                 datum: Optional[CartanDatum] = None) -> tuple:
    """Chart parameters reproducing an upper unitriangular matrix (n <= 4)."""
    if n > 4:
        raise ValueError("general inversion not implemented")
    if u.n != n:
        raise ValueError("matrix size does not match n")
    if not u.is_upper_unitriangular:
        raise ValueError("chart inversion expects an upper unitriangular matrix")
    d = _datum(n, datum)
    word = distinguished_word(d, eps)
    formulas = _inversion_formulas(word, n)
    assignment = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assignment[f"u{_idx(i, j)}"] = u.entry(i, j)
    try:
        return tuple(substitute(f, assignment) for f in formulas)
    except (PoleError, ZeroDivisionError):
        raise ValueError("inverse undefined at this point") from None
