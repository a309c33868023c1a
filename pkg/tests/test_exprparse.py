"""Expression grammar, precedence, errors, print round trip."""

from __future__ import annotations

import random

import pytest

from bircharts import (ParseError, RatFunc, parse_expression, u_variables)

from helpers import random_nonzero_poly, random_poly

UV = u_variables(4)


def test_parse_rejection_witness_expression():
    phi = parse_expression(
        "u(1,2) - (u(1,3)*u(3,4)-u(1,4))/(u(2,3)*u(3,4)-u(2,4))", UV)
    u = {v: RatFunc.var(UV, v) for v in UV}
    expected = u["u12"] - (u["u13"] * u["u34"] - u["u14"]) / (
        u["u23"] * u["u34"] - u["u24"])
    assert phi == expected


def test_parse_integer_division_is_exact():
    f = parse_expression("1/2 + 1/2", UV)
    assert f == RatFunc.const(UV, 1)
    with pytest.raises(ZeroDivisionError):
        parse_expression("1/0", UV)


def test_parse_exponent():
    f = parse_expression("a(1)^2*a(2)", ("a1", "a2"))
    a1 = RatFunc.var(("a1", "a2"), "a1")
    a2 = RatFunc.var(("a1", "a2"), "a2")
    assert f == a1 * a1 * a2
    assert parse_expression("a(1)^-1", ("a1", "a2")) == a1.inv()


def test_precedence_and_associativity():
    assert parse_expression("2-3-4", ()) == RatFunc.const((), -5)
    assert parse_expression("12/3/2", ()) == RatFunc.const((), 2)
    assert parse_expression("-2^2", ()) == RatFunc.const((), -4)
    assert parse_expression("2+3*4", ()) == RatFunc.const((), 14)
    assert parse_expression("(2+3)*4", ()) == RatFunc.const((), 20)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_expression("u(1,2) + ", UV)
    assert "position" in str(err.value)
    with pytest.raises(ParseError, match="unknown variable"):
        parse_expression("w(1,2)", UV)
    with pytest.raises(ParseError, match="out of bounds"):
        parse_expression("u(1,9)", UV)
    with pytest.raises(ParseError, match="unexpected character"):
        parse_expression("u(1,2) $ 3", UV)
    with pytest.raises(ParseError):
        parse_expression("u(1,2))", UV)


def test_bare_canonical_names_parse():
    assert parse_expression("u12", UV) == RatFunc.var(UV, "u12")


def test_parse_print_round_trip_random():
    rng = random.Random(20250801)
    for _ in range(25):
        f = RatFunc(random_poly(rng, UV[:3], max_deg=2, max_terms=3),
                    random_nonzero_poly(rng, UV[:3], max_deg=2, max_terms=2))
        assert parse_expression(str(f), UV[:3]) == f


def _random_expression(rng, names, depth):
    """Build (text, value) pairs bottom-up, evaluating with RatFunc ops."""
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            k = rng.randint(0, 9)
            return str(k), RatFunc.const(names, k)
        v = rng.choice(names)
        return f"{v[0]}({','.join(v[1:])})", RatFunc.var(names, v)
    op = rng.choice("+-*/^")
    left_text, left = _random_expression(rng, names, depth - 1)
    if op == "^":
        k = rng.randint(0, 3)
        return f"({left_text})^{k}", left ** k
    right_text, right = _random_expression(rng, names, depth - 1)
    if op == "+":
        return f"({left_text})+({right_text})", left + right
    if op == "-":
        return f"({left_text})-({right_text})", left - right
    if op == "*":
        return f"({left_text})*({right_text})", left * right
    if right.is_zero:
        return f"({left_text})", left
    return f"({left_text})/({right_text})", left / right


def test_parser_fuzz_against_direct_evaluation():
    rng = random.Random(99)
    names = UV[:4]
    for _ in range(60):
        text, expected = _random_expression(rng, names, 3)
        assert parse_expression(text, names) == expected
