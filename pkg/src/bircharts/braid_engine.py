"""Reduced-word graph under commuting and order-3 braid moves, and the
induced birational transition maps between chart parametrizations.

Only commuting moves and order-3 (simply-laced) braid moves are
implemented; connecting two reduced words that would require an order-4
or order-6 move is reported as unsupported.  The order-3 parameter rule

    x_i(a) x_j(b) x_i(c) = x_j(bc/(a+c)) x_i(a+c) x_j(ab/(a+c))

is certified against the symbolic matrix identity in the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact_arith import RatFunc
from .root_data import CartanDatum, is_reduced, weyl_from_word

DEFAULT_BFS_BUDGET = 200_000


@dataclass(frozen=True)
class Move:
    """A local rewrite at ``position``: "commute" swaps two letters whose
    generators commute, "braid3" rewrites an (i, j, i) pattern."""

    position: int
    kind: str


@dataclass(frozen=True)
class TransitionMap:
    """Change of chart parameters between two reduced words.

    ``formulas[k]`` expresses the k-th target parameter as a rational
    function of the source parameters: substituting them into the target
    chart reproduces the source chart.
    """

    source_word: tuple
    target_word: tuple
    formulas: tuple


def _commutes(datum: CartanDatum, i: int, j: int) -> bool:
    return datum.cartan[i - 1][j - 1] == 0


def _braid3_pair(datum: CartanDatum, i: int, j: int) -> bool:
    return (i != j and
            datum.cartan[i - 1][j - 1] * datum.cartan[j - 1][i - 1] == 1)


def _move_word(word: tuple, move: Move, datum: CartanDatum) -> tuple:
    p = move.position
    if move.kind == "commute":
        if p < 0 or p + 1 >= len(word):
            raise ValueError("move position out of range")
        i, j = word[p], word[p + 1]
        if i == j or not _commutes(datum, i, j):
            raise ValueError("commute move not applicable here")
        return word[:p] + (j, i) + word[p + 2:]
    if move.kind == "braid3":
        if p < 0 or p + 2 >= len(word):
            raise ValueError("move position out of range")
        i, j, i2 = word[p], word[p + 1], word[p + 2]
        if i != i2 or not _braid3_pair(datum, i, j):
            raise ValueError("braid move not applicable here")
        return word[:p] + (j, i, j) + word[p + 3:]
    raise ValueError(f"unknown move kind {move.kind!r}")


def apply_move(word: Sequence[int], params: Sequence[RatFunc], move: Move,
               datum: CartanDatum):
    """Apply a move to a word and its chart parameters.

    Returns (word', params') with the defining property that the chart
    product along word' at params' equals the chart product along word at
    params.
    """
    word = tuple(word)
    params = tuple(params)
    if len(word) != len(params):
        raise ValueError("length mismatch between word and parameters")
    new_word = _move_word(word, move, datum)
    p = move.position
    if move.kind == "commute":
        new_params = params[:p] + (params[p + 1], params[p]) + params[p + 2:]
    else:
        a, b, c = params[p], params[p + 1], params[p + 2]
        s = a + c
        if s.is_zero:
            raise ValueError("transition undefined on this locus")
        new_params = params[:p] + (b * c / s, s, a * b / s) + params[p + 3:]
    return new_word, new_params


def available_moves(word: tuple, datum: CartanDatum):
    moves = []
    for p in range(len(word) - 1):
        i, j = word[p], word[p + 1]
        if i != j and _commutes(datum, i, j):
            moves.append(Move(p, "commute"))
    for p in range(len(word) - 2):
        i, j = word[p], word[p + 1]
        if word[p + 2] == i and _braid3_pair(datum, i, j):
            moves.append(Move(p, "braid3"))
    return moves


def word_path(word1: Sequence[int], word2: Sequence[int], datum: CartanDatum,
              budget: int = DEFAULT_BFS_BUDGET):
    """Breadth-first move sequence transforming word1 into word2."""
    w1, w2 = tuple(word1), tuple(word2)
    if not is_reduced(w1, datum) or not is_reduced(w2, datum):
        raise ValueError("both words must be reduced")
    if weyl_from_word(w1, datum) != weyl_from_word(w2, datum):
        raise ValueError("reduced words have different Weyl-group products")
    if w1 == w2:
        return []
    parent: dict = {w1: None}
    queue = deque([w1])
    visited = 1
    while queue:
        cur = queue.popleft()
        for move in available_moves(cur, datum):
            nxt = _move_word(cur, move, datum)
            if nxt in parent:
                continue
            parent[nxt] = (cur, move)
            if nxt == w2:
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, mv = parent[node]
                    path.append(mv)
                    node = prev
                path.reverse()
                return path
            visited += 1
            if visited > budget:
                raise ValueError("word graph search budget exceeded")
            queue.append(nxt)
    raise ValueError(
        "connecting these words requires a braid move of order 4 or 6 (unsupported)")


def transition(word1: Sequence[int], word2: Sequence[int], datum: CartanDatum,
               param_names: Optional[Sequence[str]] = None,
               budget: int = DEFAULT_BFS_BUDGET) -> TransitionMap:
    """Composite parameter transform along a move path from word1 to word2."""
    w1, w2 = tuple(word1), tuple(word2)
    if param_names is None:
        param_names = tuple(f"a{k}" for k in range(1, len(w1) + 1))
    universe = tuple(param_names)
    if len(universe) != len(w1):
        raise ValueError("need one parameter name per letter")
    params = tuple(RatFunc.var(universe, v) for v in universe)
    path = word_path(w1, w2, datum, budget=budget)
    word, vals = w1, params
    for move in path:
        word, vals = apply_move(word, vals, move, datum)
    if word != w2:
        raise AssertionError("move path did not land on the target word")
    return TransitionMap(w1, w2, tuple(vals))
