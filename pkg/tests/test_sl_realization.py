"""Pinned generators, charts, lifts, minors, Gauss decomposition, twist."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bircharts import (GroupMatrix, RatFunc, TorusPoint, cartan,
                       chart_G, chart_GmodU, chart_U, chart_weights,
                       distinguished_word, gauss_decompose, gen_minor,
                       generator, iota, lift, minor_spec, torus_point, twist,
                       weight_sets, weyl_apply)

from helpers import all_reduced_words, enumerate_weyl_group


def _sym(names):
    return {v: RatFunc.var(tuple(names), v) for v in names}


def test_generator_golden_matrices():
    s = _sym(["a"])["a"]
    x1 = generator("x", 1, s, 4)
    assert str(x1) == "[[1, a, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]"
    assert str(generator("sdot", 1, None, 2)) == "[[0, 1], [-1, 0]]"
    assert str(generator("sddot", 1, None, 2)) == "[[0, -1], [1, 0]]"
    with pytest.raises(ValueError):
        generator("x", 4, s, 4)
    with pytest.raises(ValueError):
        generator("x", 1, None, 4)


def test_torus_point():
    t = _sym(["t1", "t2"])
    m = torus_point([t["t1"], t["t2"]])
    assert m.is_diagonal
    # leading principal 2x2 minor reads the second coordinate
    assert m.entry(1, 1) * m.entry(2, 2) == t["t2"]
    assert torus_point([RatFunc.const((), 1)]) == GroupMatrix.identity(2)
    with pytest.raises(ValueError):
        torus_point([RatFunc.const((), 0)])


def test_chart_U_golden_sl3():
    a = _sym(["a1", "a2", "a3"])
    m = chart_U((1, 2, 1), [a["a1"], a["a2"], a["a3"]], 3)
    assert str(m) == "[[1, a1 + a3, a1*a2], [0, 1, a2], [0, 0, 1]]"
    assert chart_U((1, 2, 1), [0, 0, 0], 3) == GroupMatrix.identity(3)
    with pytest.raises(ValueError):
        chart_U((1, 2), [a["a1"]], 3)


def test_chart_GmodU_golden_sl2():
    v = _sym(["a", "t1"])
    t = TorusPoint((v["t1"],))
    plus = chart_GmodU((1,), [v["a"]], t, "+", 2)
    assert str(plus) == "[[t1, (a)/(t1)], [0, (1)/(t1)]]"
    minus = chart_GmodU((1,), [v["a"]], t, "-", 2)
    assert str(minus) == "[[0, t1], [(-1)/(t1), a*t1]]"
    ident = chart_GmodU((1,), [RatFunc.const(("t1",), 0)],
                        TorusPoint((RatFunc.const(("t1",), 1),)), "+", 2)
    assert ident == GroupMatrix.identity(2)


def test_chart_G_golden_sl2():
    v = _sym(["a", "t1", "b"])
    t = TorusPoint((v["t1"],))
    pm = chart_G((1,), (1,), [v["a"]], t, [v["b"]], "pm", 2)
    assert pm.entry(1, 1) == v["t1"] + v["a"] * v["b"] / v["t1"]
    assert pm.entry(1, 2) == v["a"] / v["t1"]
    assert pm.entry(2, 1) == v["b"] / v["t1"]
    assert pm.entry(2, 2) == v["t1"].inv()
    mp0 = chart_G((1,), (1,), [RatFunc.const(("t1",), 0)],
                  TorusPoint((RatFunc.var(("t1",), "t1"),)),
                  [RatFunc.const(("t1",), 0)], "mp", 2)
    tt = RatFunc.var(("t1",), "t1")
    assert mp0.entry(1, 1) == tt.inv() and mp0.entry(2, 2) == tt
    assert pm.det() == 1


def test_chart_G_swap_automorphism_identity():
    # the reversed-variant chart is the automorphism applied entrywise
    for n in (2, 3):
        nu = n * (n - 1) // 2
        names = ([f"a{k}" for k in range(1, nu + 1)]
                 + [f"t{i}" for i in range(1, n)]
                 + [f"b{k}" for k in range(1, nu + 1)])
        v = _sym(names)
        t = TorusPoint(tuple(v[f"t{i}"] for i in range(1, n)))
        d = cartan("A", n - 1)
        jj0 = distinguished_word(d, 0)
        jj1 = distinguished_word(d, 1)
        a = [v[f"a{k}"] for k in range(1, nu + 1)]
        b = [v[f"b{k}"] for k in range(1, nu + 1)]
        pm = chart_G(jj0, jj1, a, t, b, "pm", n)
        mp = chart_G(jj0, jj1, a, t, b, "mp", n)
        assert iota(pm) == mp


def test_lift_well_defined_exhaustive_sl3():
    d = cartan("A", 2)
    dist = enumerate_weyl_group(d)
    for elem in dist:
        words = all_reduced_words(elem, d, dist)
        for style in ("dot", "ddot"):
            lifts = [lift(w, style, 3) for w in words]
            assert all(m == lifts[0] for m in lifts)


def test_lift_rejects_non_reduced():
    with pytest.raises(ValueError):
        lift((1, 1), "dot", 3)
    assert lift((), "dot", 3) == GroupMatrix.identity(3)


def test_pinning_relations():
    # additivity and torus conjugation for every size up to five
    for n in range(2, 6):
        names = tuple(["a", "b"] + [f"t{i}" for i in range(1, n)])
        v = _sym(names)
        t = TorusPoint(tuple(v[f"t{i}"] for i in range(1, n)))
        tm = t.matrix()
        tinv = t.inverse().matrix()
        for i in range(1, n):
            xa = generator("x", i, v["a"], n)
            xb = generator("x", i, v["b"], n)
            assert xa @ xb == generator("x", i, v["a"] + v["b"], n)
            # alpha_i(t) = t_{i-1}^{-1} t_i^2 t_{i+1}^{-1} in these coordinates
            alpha = v[f"t{i}"] ** 2
            if i > 1:
                alpha = alpha / v[f"t{i-1}"]
            if i < n - 1:
                alpha = alpha / v[f"t{i+1}"]
            assert tm @ xa @ tinv == generator("x", i, alpha * v["a"], n)
            # the lift squares to the coroot at -1
            sq = generator("sdot", i, None, n) @ generator("sdot", i, None, n)
            expect = [[(-1 if a == b and a in (i - 1, i) else int(a == b))
                       for b in range(n)] for a in range(n)]
            assert sq == GroupMatrix(expect, check=False)


def test_braid_matrix_identity_sl3():
    v = _sym(["a", "b", "c"])
    a, b, c = v["a"], v["b"], v["c"]
    s = a + c
    for (i, j) in ((1, 2), (2, 1)):
        lhs = (generator("x", i, a, 3) @ generator("x", j, b, 3)
               @ generator("x", i, c, 3))
        rhs = (generator("x", j, b * c / s, 3) @ generator("x", i, s, 3)
               @ generator("x", j, a * b / s, 3))
        assert lhs == rhs


def test_iota_generator_identities():
    v = _sym(["a"])
    for n in (2, 3, 4):
        for i in range(1, n):
            assert iota(generator("x", i, v["a"], n)) == generator("y", i, v["a"], n)
            assert iota(generator("y", i, v["a"], n)) == generator("x", i, v["a"], n)
        names = tuple(f"t{i}" for i in range(1, n))
        tv = _sym(names)
        t = TorusPoint(tuple(tv[f"t{i}"] for i in range(1, n)))
        assert iota(t.matrix()) == t.inverse().matrix()


def test_iota_is_involution_random():
    rng = random.Random(17)
    for _ in range(10):
        n = rng.choice([2, 3])
        word = tuple(rng.randint(1, n - 1) for _ in range(4))
        params = [Fraction(rng.randint(-4, 4)) for _ in word]
        g = chart_U(word, params, n) @ generator(
            "y", 1, RatFunc.const((), rng.randint(1, 3)), n)
        assert iota(iota(g)) == g


def _symbolic_unitriangular(n, stem="u"):
    names = tuple(f"{stem}{i}{j}" for i in range(1, n + 1)
                  for j in range(i + 1, n + 1))
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(RatFunc.const(names, 1))
            elif i < j:
                row.append(RatFunc.var(names, f"{stem}{i}{j}"))
            else:
                row.append(RatFunc.const(names, 0))
        rows.append(row)
    return GroupMatrix(rows)


def test_gen_minor_examples():
    d = cartan("A", 2)
    u = _symbolic_unitriangular(3)
    for i in (1, 2):
        spec = minor_spec(d.fundamental_weight(i), d)
        assert gen_minor(spec, u) == 1
    g = weyl_apply((1,), d.fundamental_weight(1), d)
    assert str(gen_minor(minor_spec(g, d), u)) == "u12"


def test_gen_minor_witness_independent():
    # two distinct reduced witnesses of the same weight give equal minors
    for n in (3, 4):
        d = cartan("A", n - 1)
        dist = enumerate_weyl_group(d)
        u = _symbolic_unitriangular(n)
        from bircharts import MinorSpec

        seen = {}
        count = 0
        for elem in dist:
            for i in range(1, n):
                target = elem.apply(d.fundamental_weight(i))
                words = all_reduced_words(elem, d, dist)[:2]
                vals = [gen_minor(MinorSpec(i, w), u) for w in words]
                assert all(v == vals[0] for v in vals)
                key = (i, target.coords)
                if key in seen:
                    assert seen[key] == vals[0]
                    count += 1
                else:
                    seen[key] = vals[0]
            if count > 8:
                break


def test_minor_left_right_equivariance():
    # lower-unitriangular times torus on the left scales by the character;
    # upper-unitriangular on the right leaves the minor unchanged
    for n in (3, 4):
        d = cartan("A", n - 1)
        names = tuple([f"g{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
                      + [f"l{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
                      + [f"r{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
                      + [f"t{i}" for i in range(1, n)])
        v = _sym(names)
        g = [[v[f"g{i}{j}"] for j in range(1, n + 1)] for i in range(1, n + 1)]
        lo = [[v[f"l{j}{i}"] if i > j else RatFunc.const(names, 1 if i == j else 0)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
        up = [[v[f"r{i}{j}"] if i < j else RatFunc.const(names, 1 if i == j else 0)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
        t = TorusPoint(tuple(v[f"t{i}"] for i in range(1, n)))

        def minor(rows, i):
            from bircharts.sl_realization import _det
            return _det([[rows[a][b] for b in range(i)] for a in range(i)])

        def matmul(a_rows, b_rows):
            return [[sum((a_rows[i][k] * b_rows[k][j] for k in range(n)),
                         RatFunc.const((), 0)) for j in range(n)]
                    for i in range(n)]

        left = matmul(matmul(lo, [list(r) for r in t.matrix().entries]), g)
        right = matmul(g, up)
        for i in range(1, n):
            assert minor(left, i) == t.coords[i - 1] * minor(g, i)
            assert minor(right, i) == minor(g, i)
        assert gen_minor(minor_spec(d.fundamental_weight(1), d),
                         GroupMatrix.identity(n)) == 1


def test_minor_nonvanishing_on_chart():
    # every weight family member pulls back to a nonzero function
    for n in (3, 4):
        d = cartan("A", n - 1)
        for eps in (0, 1):
            jj = distinguished_word(d, eps)
            names = tuple(f"a{k}" for k in range(1, d.nu + 1))
            u = chart_U(jj, [RatFunc.var(names, v) for v in names], n)
            cw = chart_weights(d, eps)
            weights = set(cw.gamma.values()) | set(cw.gamma_tilde.values())
            for w in weights:
                assert not gen_minor(minor_spec(w, d), u).is_zero


def test_gauss_decompose():
    assert gauss_decompose(GroupMatrix.identity(3)) == (
        GroupMatrix.identity(3), GroupMatrix.identity(3), GroupMatrix.identity(3))
    a = RatFunc.var(("a",), "a")
    g = GroupMatrix([[a, RatFunc.const(("a",), -1)],
                     [RatFunc.const(("a",), 1), RatFunc.const(("a",), 0)]])
    L, D, U = gauss_decompose(g)
    assert str(L) == "[[1, 0], [(1)/(a), 1]]"
    assert str(D) == "[[a, 0], [0, (1)/(a)]]"
    assert str(U) == "[[1, (-1)/(a)], [0, 1]]"
    assert L @ D @ U == g
    with pytest.raises(ValueError):
        gauss_decompose(GroupMatrix([[0, 1], [-1, 0]]))


def test_twist_golden_and_involution():
    a = RatFunc.var(("a",), "a")
    u = GroupMatrix([[1, a], [0, 1]])
    tw = twist(u)
    assert str(tw) == "[[1, (1)/(a)], [0, 1]]"
    assert tw.is_upper_unitriangular
    assert twist(tw) == u
    u3 = chart_U((1, 2, 1), [1, 2, 3], 3)
    assert twist(twist(u3)) == u3
    with pytest.raises(ValueError):
        twist(GroupMatrix.identity(3))


def test_twist_involution_symbolic_sl3():
    d = cartan("A", 2)
    names = ("a1", "a2", "a3")
    params = [RatFunc.var(names, v) for v in names]
    for eps in (0, 1):
        u = chart_U(distinguished_word(d, eps), params, 3)
        assert twist(twist(u)) == u


def test_big_cell_spot_check_positive_points():
    # positive parameters land in the big cell with all interior minors nonzero
    rng = random.Random(20250801)
    for n in (3, 4):
        d = cartan("A", n - 1)
        for eps in (0, 1):
            jj = distinguished_word(d, eps)
            _, _, interior = weight_sets(d, eps)
            specs = [minor_spec(w, d) for w in interior]
            for _ in range(10):
                params = [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                          for _ in jj]
                u = chart_U(jj, params, n)
                au = twist(u)
                for spec in specs:
                    assert not gen_minor(spec, au).is_zero


def test_group_matrix_validation():
    with pytest.raises(ValueError):
        GroupMatrix([[1, 0], [0, 2]])
    with pytest.raises(ValueError):
        GroupMatrix([[1, 0, 0], [0, 1, 0]])
    m = GroupMatrix([[2, 1], [1, 1]])
    assert m.det() == 1
