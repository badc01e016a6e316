"""Components of codes under two-flip and single-flip adjacency.

Two notions of adjacency are used, both inducing a partition of a code
into connected components:

  * pair adjacency (even-length codes): x ~ z iff d(x, z) = 4 and the
    two words differ in both designated coordinates i and j;
  * single adjacency (odd-length codes):  x ~ z iff d(x, z) = 3 and the
    words differ in the designated coordinate i.

Switching a component (translating it by the flipped coordinates while
keeping the rest of the code) is the operation that produces new perfect
codes from old ones; the verifiers here check that the components of the
doubled product code always come in two half-code pieces and that the
resulting switches stay perfect.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from . import kernels
from .codes import (
    Code,
    distance_masks,
    distance_shell,
    is_extended_perfect,
    is_perfect,
    min_distance,
    weight,
)
from .report import Report

if TYPE_CHECKING:  # pragma: no cover
    from .partition import Partition


@dataclass(frozen=True)
class Component:
    code_label: str
    pair: tuple[int, ...]
    seed: int
    words: frozenset[int]


@dataclass(frozen=True)
class Census:
    pair: tuple[int, int]
    sizes: tuple[int, ...]
    total: int


def pair_adjacency_masks(i: int, j: int, length: int) -> np.ndarray:
    """XOR masks of the pair adjacency: weight 4, containing both i and j."""
    if i == j:
        raise ValueError("the two designated coordinates must differ")
    return distance_masks(length, 4, through=(i, j))


def single_adjacency_masks(i: int, length: int) -> np.ndarray:
    """XOR masks of the single adjacency: weight 3, containing i."""
    return distance_masks(length, 3, through=(i,))


def _labels(code: Code, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    words = code.word_array()
    lookup = kernels.make_lookup(words, code.length)
    return words, kernels.component_labels(words, lookup, masks)


def component(code: Code, seed: int, i: int, j: int) -> Component:
    """BFS closure of seed under pair adjacency inside the code."""
    if seed not in code:
        raise ValueError(f"seed {seed:#x} is not a codeword")
    words, labels = _labels(code, pair_adjacency_masks(i, j, code.length))
    seed_label = labels[int(np.searchsorted(words, seed))]
    members = frozenset(int(w) for w in words[labels == seed_label])
    return Component(code.label, (i, j), seed, members)


def i_component(code: Code, seed: int, i: int) -> Component:
    """BFS closure of seed under single adjacency inside the code."""
    if seed not in code:
        raise ValueError(f"seed {seed:#x} is not a codeword")
    words, labels = _labels(code, single_adjacency_masks(i, code.length))
    seed_label = labels[int(np.searchsorted(words, seed))]
    members = frozenset(int(w) for w in words[labels == seed_label])
    return Component(code.label, (i,), seed, members)


def census(code: Code, i: int, j: int) -> Census:
    """Multiset of pair-adjacency component sizes; sizes sum to |code|."""
    _, labels = _labels(code, pair_adjacency_masks(i, j, code.length))
    sizes = tuple(sorted(int(s) for s in np.bincount(labels)))
    return Census((i, j), sizes, len(code))


def i_census(code: Code, i: int) -> Census:
    _, labels = _labels(code, single_adjacency_masks(i, code.length))
    sizes = tuple(sorted(int(s) for s in np.bincount(labels)))
    return Census((i, i), sizes, len(code))


def switch(code: Code, comp: Component, i: int, j: int) -> Code:
    """Replace a pair-adjacency component K by K + e_i + e_j."""
    if not comp.words <= code.words:
        raise ValueError("component words are not a subset of the code")
    closure = component(code, min(comp.words), i, j)
    if closure.words != comp.words:
        raise ValueError("the given set is not a full component of the code")
    mask = (1 << i) | (1 << j)
    words = (code.words - comp.words) | {w ^ mask for w in comp.words}
    return Code(code.length, frozenset(words), f"{code.label}/sw({i},{j})")


def i_switch(code: Code, comp: Component, i: int) -> Code:
    """Replace a single-adjacency component K by K + e_i."""
    if not comp.words <= code.words:
        raise ValueError("component words are not a subset of the code")
    closure = i_component(code, min(comp.words), i)
    if closure.words != comp.words:
        raise ValueError("the given set is not a full i-component of the code")
    mask = 1 << i
    words = (code.words - comp.words) | {w ^ mask for w in comp.words}
    return Code(code.length, frozenset(words), f"{code.label}/sw({i})")


def ball_cover(words, length: int) -> frozenset[int]:
    """Union of radius-1 balls around the given words."""
    arr = kernels.words_array(words)
    masks = np.concatenate(
        [np.zeros(1, np.uint32), (np.uint32(1) << np.arange(length, dtype=np.uint32))]
    )
    return frozenset(int(v) for v in np.unique(arr[:, None] ^ masks[None, :]))


def is_i_component(kwords, i: int, length: int) -> bool:
    """True iff K and K + e_i cover the same vectors with radius-1 balls."""
    kwords = frozenset(kwords)
    if not kwords:
        raise ValueError("the empty set is not a component")
    translated = frozenset(w ^ (1 << i) for w in kwords)
    return ball_cover(kwords, length) == ball_cover(translated, length)


def minimal_component(n: int) -> frozenset[int]:
    """Smallest-possible component at odd length n: the doubled-half set
    {x || parity(x) || ~x}, normalized so all weights are (n-1)/2 or
    (n+1)/2.  It is the e-translate of {x || parity(x) || x} by the
    all-ones upper half, and translation preserves the covering
    condition checked by is_i_component."""
    if n % 2 == 0:
        raise ValueError("minimal components live at odd lengths")
    if n > 15:
        raise ValueError("length capped at 15")
    h = (n - 1) // 2
    flip = ((1 << h) - 1) << (h + 1)
    words = set()
    for x in range(1 << h):
        words.add((x | ((x.bit_count() & 1) << h) | (x << (h + 1))) ^ flip)
    return frozenset(words)


def i_even_split(code: Code, i: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split a perfect code into its i-even half I and i-odd half I'.

    I holds the words of odd weight containing coordinate i together with
    the words of even weight avoiding it; I' is the complement.
    """
    if code.length % 2 == 0:
        raise ValueError("the split is defined for odd-length (perfect) codes")
    even_half = set()
    odd_half = set()
    for w in code.words:
        if (weight(w) & 1) == (w >> i & 1):
            even_half.add(w)
        else:
            odd_half.add(w)
    return frozenset(even_half), frozenset(odd_half)


def verify_covering_shell(code: Code, i: int) -> Report:
    """Both halves of the i-even split have covering radius 3, and the
    distance-3 shell of I is exactly I' together with its e_i-translate."""
    n = code.length
    rep = Report("covering-shell", {"n": n, "i": i})
    half_even, half_odd = i_even_split(code, i)
    points = np.arange(1 << n, dtype=np.uint32)
    d_even = kernels.min_dist_to_set(points, kernels.words_array(half_even))
    d_odd = kernels.min_dist_to_set(points, kernels.words_array(half_odd))
    rho_even = int(d_even.max())
    rho_odd = int(d_odd.max())
    rep.add(f"i={i}/rho(I)=3", rho_even == 3, witness=f"rho={rho_even}")
    rep.add(f"i={i}/rho(I')=3", rho_odd == 3, witness=f"rho={rho_odd}")
    shell = frozenset(int(v) for v in points[d_even == 3])
    expected = half_odd | {w ^ (1 << i) for w in half_odd}
    bad = (shell ^ expected) and next(iter(shell ^ expected))
    rep.add(
        f"i={i}/shell(I,3)=I'+I'e_i",
        shell == expected,
        witness=None if shell == expected else f"vector {bad:#x}",
    )
    return rep


def _is_perfect_candidate(words: set[int], n: int) -> bool:
    # perfect at n = 2^r - 1 given the right cardinality: min distance >= 3
    ws = sorted(words)
    for a, b in itertools.combinations(ws, 2):
        if (a ^ b).bit_count() < 3:
            return False
    return True


def verify_completions(code: Code, i: int, exhaustive: bool | None = None) -> Report:
    """A half-code i-component completes the opposite i-even half to a
    perfect code in exactly two ways: itself and its e_i-translate.

    At n = 7 the two ways are confirmed by exhaustive search over the
    candidate words; at n = 15 only the two known completions are checked
    (the subset search is out of budget there).
    """
    n = code.length
    rep = Report("completions", {"n": n, "i": i})
    half_even, half_odd = i_even_split(code, i)
    rep.add(
        f"i={i}/odd-half-is-i-component",
        is_i_component(half_odd, i, n),
    )
    translated = frozenset(w ^ (1 << i) for w in half_odd)
    original = Code(n, half_even | half_odd, "I+I'")
    alternate = Code(n, half_even | translated, "I+I'e_i")
    rep.add(f"i={i}/I+I'-perfect", is_perfect(original))
    rep.add(f"i={i}/I+I'e_i-perfect", is_perfect(alternate))
    if exhaustive is None:
        exhaustive = n == 7
    if exhaustive:
        if n != 7:
            raise ValueError("exhaustive completion search is limited to n=7")
        candidates = sorted(half_odd | translated)
        target = len(half_odd)
        completions = []
        for combo in itertools.combinations(candidates, target):
            words = half_even | set(combo)
            if _is_perfect_candidate(words, n):
                completions.append(frozenset(combo))
        expected = {half_odd, translated}
        rep.add(
            f"i={i}/exactly-two-completions",
            set(completions) == expected and len(completions) == 2,
            witness=f"found {len(completions)}",
        )
    return rep


def verify_halving_components(
    partition: "Partition",
    samples: int = 50,
    seed: int = 1,
    exhaustive: bool = False,
) -> Report:
    """Every doubled product code built from the odd classes splits, for
    every same-half coordinate pair and any block permutation, into two
    half-code components, and switching either one stays extended perfect.
    """
    from .product import all_perms, identity_perm, random_perm, reversal_perm, doubled_product_code

    n = partition.field.size
    rep = Report(
        "halving-components",
        {"m": partition.field.m, "samples": samples, "seed": seed,
         "exhaustive": exhaustive},
    )
    if exhaustive:
        perms = [(f"perm-{idx}", p) for idx, p in enumerate(all_perms(n))]
    else:
        perms = [("identity", identity_perm(n)), ("reversal", reversal_perm(n))]
        import random

        rng = random.Random(seed)
        perms += [(f"random-{t}", random_perm(n, rng)) for t in range(samples)]

    length = 2 * n
    half = len(partition.odd[0].words)
    expected_size = n * half * half // 2
    left_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs = left_pairs + [(i + n, j + n) for i, j in left_pairs]
    masks2 = distance_masks(length, 2)
    for name, perm in perms:
        product = doubled_product_code(partition, perm)
        words = product.code.word_array()
        lookup = kernels.make_lookup(words, length)
        present = np.zeros(1 << length, dtype=np.uint8)
        bad: str | None = None
        for i, j in pairs:
            masks = pair_adjacency_masks(i, j, length)
            labels = kernels.component_labels(words, lookup, masks)
            sizes = np.bincount(labels)
            if sizes.size != 2 or not (sizes == expected_size).all():
                bad = f"pair ({i},{j}): sizes {sorted(sizes.tolist())}"
                break
            flip = np.uint32((1 << i) | (1 << j))
            for label in (0, 1):
                keep = words[labels != label]
                moved = words[labels == label] ^ flip
                switched = np.sort(np.concatenate([keep, moved]))
                if np.unique(switched).size != words.size:
                    bad = f"pair ({i},{j}): switch collides"
                    break
                present[switched] = 1
                close = kernels.has_close_pair(switched, present, masks2)
                present[switched] = 0
                if close:
                    bad = f"pair ({i},{j}): switched code has distance 2"
                    break
            if bad:
                break
        rep.add(f"{name}/56-pairs-halved-and-switchable", bad is None, witness=bad)
    return rep


def explore_small_radius_components(n: int = 7) -> dict:
    """Survey i-components of the length-n reference perfect code and
    record, for each, its size and covering radius.

    Exploratory output for the open question whether covering radius 3
    forces a half-code component; nothing is asserted here.
    """
    from .gf import make_field
    from .codes import overline_h, puncture

    if n != 7:
        raise ValueError("the survey is implemented for n=7")
    code = puncture(overline_h(make_field(3)), 0)
    records = []
    for i in range(n):
        words, labels = _labels(code, single_adjacency_masks(i, n))
        for label in range(int(labels.max()) + 1):
            members = frozenset(int(w) for w in words[labels == label])
            points = np.arange(1 << n, dtype=np.uint32)
            rho = int(kernels.min_dist_to_set(points, kernels.words_array(members)).max())
            records.append(
                {
                    "i": i,
                    "size": len(members),
                    "covering_radius": rho,
                    "is_half_code": len(members) * 2 == len(code),
                }
            )
    rho3 = [r for r in records if r["covering_radius"] == 3]
    return {
        "n": n,
        "components": records,
        "rho3_all_half_code": all(r["is_half_code"] for r in rho3),
        "note": "exploratory survey; no conjecture is asserted",
    }
