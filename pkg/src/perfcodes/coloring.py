"""Equitable colorings of the binary Hamming graph.

A coloring of all 2^n vertices is equitable when the number of
j-colored neighbors of a vertex depends only on the vertex's own color;
the common counts form the parameter matrix.  The colorings built here
come from the i-even / i-odd halves of a perfect code and their
e_i-translates, plus the two shells of vertices one step away.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import Code
from .components import i_even_split
from .report import Report

SIX_COLOR_NAMES = ("I", "I+e_i", "I_1", "I'_1", "I'+e_i", "I'")
FOUR_COLOR_NAMES = ("I+I+e_i", "I_1", "I'_1", "I'+I'+e_i")


class ColoringError(ValueError):
    """The requested coloring is not a partition or not equitable."""


@dataclass
class Coloring:
    n: int
    color_of: np.ndarray          # int8 per vertex, values 0..t-1
    names: tuple[str, ...]

    @property
    def t(self) -> int:
        return len(self.names)

    def color_sizes(self) -> tuple[int, ...]:
        return tuple(int(c) for c in np.bincount(self.color_of, minlength=self.t))


def _shell(around: set[int], n: int) -> set[int]:
    shell = set()
    for w in around:
        for d in range(n):
            v = w ^ (1 << d)
            if v not in around:
                shell.add(v)
    return shell


def _assemble(n: int, parts: list[set[int]], names: tuple[str, ...]) -> Coloring:
    color_of = np.full(1 << n, -1, dtype=np.int8)
    for color, part in enumerate(parts):
        for w in part:
            if color_of[w] >= 0:
                raise ColoringError(
                    f"vertex {w:#x} is in both {names[color_of[w]]} and {names[color]}"
                )
            color_of[w] = color
    gap = np.flatnonzero(color_of < 0)
    if gap.size:
        raise ColoringError(f"vertex {int(gap[0]):#x} received no color")
    return Coloring(n=n, color_of=color_of, names=names)


def build_six_coloring(code: Code, i: int) -> Coloring:
    """Colors I, I+e_i, their distance-1 shell, the opposite shell, and
    the i-odd half with its translate."""
    n = code.length
    half_even, half_odd = i_even_split(code, i)
    e = 1 << i
    a = set(half_even)
    a_t = {w ^ e for w in a}
    b = set(half_odd)
    b_t = {w ^ e for w in b}
    a1 = _shell(a | a_t, n)
    b1 = _shell(b | b_t, n)
    return _assemble(n, [a, a_t, a1, b1, b_t, b], SIX_COLOR_NAMES)


def build_four_coloring(code: Code, i: int) -> Coloring:
    """Quotient of the six-coloring merging each half with its translate."""
    six = build_six_coloring(code, i)
    merge = np.array([0, 0, 1, 2, 3, 3], dtype=np.int8)
    return Coloring(n=six.n, color_of=merge[six.color_of], names=FOUR_COLOR_NAMES)


def verify_perfect_coloring(coloring: Coloring) -> np.ndarray:
    """Check equitability over every vertex and return the parameter
    matrix; raises ColoringError with a witness vertex otherwise."""
    n, t = coloring.n, coloring.t
    vertices = np.arange(1 << n, dtype=np.uint32)
    profile = np.zeros((1 << n, t), dtype=np.int16)
    for d in range(n):
        neighbor_colors = coloring.color_of[vertices ^ np.uint32(1 << d)]
        for c in range(t):
            profile[:, c] += neighbor_colors == c
    matrix = np.zeros((t, t), dtype=int)
    for c in range(t):
        rows = profile[coloring.color_of == c]
        if not (rows == rows[0]).all():
            off = np.flatnonzero((rows != rows[0]).any(axis=1))[0]
            vertex = int(vertices[coloring.color_of == c][off])
            raise ColoringError(
                f"vertex {vertex:#x} of color {coloring.names[c]} has profile "
                f"{rows[off].tolist()} != {rows[0].tolist()}"
            )
        matrix[c] = rows[0]
    sizes = coloring.color_sizes()
    for c in range(t):
        for d in range(t):
            if sizes[c] * matrix[c][d] != sizes[d] * matrix[d][c]:
                raise ColoringError(
                    f"edge reciprocity broken between {coloring.names[c]} "
                    f"and {coloring.names[d]}"
                )
    return matrix


def expected_six_matrix(n: int) -> np.ndarray:
    return np.array(
        [
            [0, 1, n - 1, 0, 0, 0],
            [1, 0, n - 1, 0, 0, 0],
            [1, 1, 1, n - 3, 0, 0],
            [0, 0, n - 3, 1, 1, 1],
            [0, 0, 0, n - 1, 0, 1],
            [0, 0, 0, n - 1, 1, 0],
        ],
        dtype=int,
    )


def expected_four_matrix(n: int) -> np.ndarray:
    return np.array(
        [
            [1, n - 1, 0, 0],
            [2, 1, n - 3, 0],
            [0, n - 3, 1, 2],
            [0, 0, n - 1, 1],
        ],
        dtype=int,
    )


def verify_half_colorings(code: Code, i: int) -> Report:
    """Both derived colorings are equitable with the expected matrices."""
    n = code.length
    rep = Report("half-colorings", {"n": n, "i": i})
    try:
        six = verify_perfect_coloring(build_six_coloring(code, i))
        rep.add(
            f"i={i}/six-coloring-matrix",
            (six == expected_six_matrix(n)).all(),
            witness=str(six.tolist()),
        )
    except ColoringError as exc:
        rep.add(f"i={i}/six-coloring-matrix", False, witness=str(exc))
    try:
        four = verify_perfect_coloring(build_four_coloring(code, i))
        rep.add(
            f"i={i}/four-coloring-matrix",
            (four == expected_four_matrix(n)).all(),
            witness=str(four.tolist()),
        )
    except ColoringError as exc:
        rep.add(f"i={i}/four-coloring-matrix", False, witness=str(exc))
    return rep


def search_matching_colorings(n: int = 7, budget: int = 200, seed: int = 1) -> dict:
    """Budgeted randomized search for equitable six-colorings whose first
    color is not an i-even half of any perfect code.

    For each attempt an independent candidate first color is sampled, the
    remaining colors are grown by the constraint structure of the target
    matrix, and the result is checked for equitability.  Findings are
    reported, never asserted: exhausting the budget decides nothing.
    """
    import random

    if n != 7:
        raise ValueError("the search is implemented for n=7")
    rng = random.Random(seed)
    target = expected_six_matrix(n)
    size = (1 << n) // 16  # forced by edge reciprocity against the target matrix
    attempts = 0
    hits = []
    space = list(range(1 << n))
    while attempts < budget:
        attempts += 1
        # color 1 candidate: independent set at pairwise distance >= 3
        first: list[int] = []
        pool = space[:]
        rng.shuffle(pool)
        for v in pool:
            if all((v ^ u).bit_count() >= 3 for u in first):
                first.append(v)
            if len(first) == size:
                break
        if len(first) < size:
            continue
        # color 2: one designated neighbor per first-color vertex
        second = []
        ok = True
        for v in first:
            choices = [v ^ (1 << d) for d in range(n)]
            rng.shuffle(choices)
            pick = next((c for c in choices if c not in second), None)
            if pick is None:
                ok = False
                break
            second.append(pick)
        if not ok:
            continue
        a = set(first)
        b = set(second)
        if a & b:
            continue
        a1 = _shell(a | b, n) - a - b
        rest = set(space) - a - b - a1
        b1 = {v for v in rest if any((v ^ u).bit_count() == 1 for u in a1)}
        tail = sorted(rest - b1)
        # the last two colors must induce a perfect matching on the tail
        fifth, sixth = set(), set()
        for v in tail:
            if v in fifth or v in sixth:
                continue
            partners = [v ^ (1 << d) for d in range(n) if v ^ (1 << d) in set(tail)]
            if len(partners) != 1:
                ok = False
                break
            fifth.add(v)
            sixth.add(partners[0])
        if not ok or len(fifth) != size or len(sixth) != size:
            continue
        try:
            coloring = _assemble(n, [a, b, a1, b1, fifth, sixth], SIX_COLOR_NAMES)
            matrix = verify_perfect_coloring(coloring)
        except ColoringError:
            continue
        if (matrix != target).any():
            continue
        # equitable with the target matrix: is the first color an i-even half?
        is_half = False
        for i in range(n):
            candidate = a | sixth
            if len(candidate) == 16:
                code_words = frozenset(candidate)
                if all(
                    min((w ^ u).bit_count() for u in code_words if u != w) >= 3
                    for w in code_words
                ):
                    split_even, _ = i_even_split(Code(n, code_words), i)
                    if split_even == frozenset(a):
                        is_half = True
                        break
        hits.append({"first_color": sorted(a), "is_i_even_half": is_half})
    return {
        "n": n,
        "budget": budget,
        "attempts": attempts,
        "matching_colorings_found": len(hits),
        "non_half_examples": [h for h in hits if not h["is_i_even_half"]],
        "note": "exploratory search; no conjecture is asserted",
    }
