"""Doubled product codes built from the odd class family.

A block permutation pi pairs class l on the left half with class pi(l)
on the right half; the product code is the union over l of all
concatenations X || Y with X in class l and Y in class pi(l).
Coordinates 0..n-1 are the left half, n..2n-1 the right half.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .codes import Code, distance_masks, is_extended_perfect
from .partition import Partition
from .report import Report

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def reversal_perm(n: int) -> Perm:
    return tuple(reversed(range(n)))


def random_perm(n: int, rng: random.Random) -> Perm:
    images = list(range(n))
    rng.shuffle(images)
    return tuple(images)


def all_perms(n: int):
    for p in itertools.permutations(range(n)):
        yield p


def parse_perm(spec: str, n: int) -> Perm:
    """Permutation input: "identity", "reversal", or n space-separated images."""
    spec = spec.strip()
    if spec == "identity":
        return identity_perm(n)
    if spec == "reversal":
        return reversal_perm(n)
    try:
        images = tuple(int(tok) for tok in spec.split())
    except ValueError as exc:
        raise ValueError(f"bad permutation spec {spec!r}") from exc
    _check_perm(images, n)
    return images


def _check_perm(perm: Perm, n: int) -> None:
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")


def invert_perm(perm: Perm) -> Perm:
    inv = [0] * len(perm)
    for k, v in enumerate(perm):
        inv[v] = k
    return tuple(inv)


@dataclass
class ProductCode:
    code: Code
    partition: Partition
    perm: Perm
    half_length: int
    block_of: dict[int, int] = field(repr=False)


def doubled_product_code(partition: Partition, perm: Perm) -> ProductCode:
    """Concatenate every left word of class l with every right word of
    class perm(l); the result is an extended perfect code of length 2n."""
    n = partition.n
    _check_perm(perm, n)
    if 2 * n > 16:
        raise ValueError("product codes are limited to half length 8")
    words: set[int] = set()
    block_of: dict[int, int] = {}
    for l in range(n):
        rights = sorted(partition.odd[perm[l]].words)
        for x in partition.odd[l].words:
            for y in rights:
                w = x | (y << n)
                words.add(w)
                block_of[w] = l
    half = len(partition.odd[0].words)
    if len(words) != n * half * half:
        raise ValueError("blocks of the product overlap")
    code = Code(2 * n, frozenset(words), f"D[{'-'.join(map(str, perm))}]")
    if not is_extended_perfect(code):
        raise ValueError("product code failed the extended-perfect test")
    return ProductCode(
        code=code, partition=partition, perm=perm, half_length=n, block_of=block_of
    )


def n_ij(code: Code, x: int, i: int, j: int) -> frozenset[int]:
    """Codewords at distance 4 from x differing from it in both i and j."""
    if x not in code:
        raise ValueError(f"{x:#x} is not a codeword")
    if i == j:
        raise ValueError("the two coordinates must differ")
    bit = (1 << i) | (1 << j)
    return frozenset(
        z for z in code.words if (z ^ x).bit_count() == 4 and (z ^ x) & bit == bit
    )


def _neighbor_table(code: Code, i: int, j: int) -> dict[int, frozenset[int]]:
    # all-words variant of n_ij, vectorized over the candidate masks
    words = code.word_array()
    lookup = kernels.make_lookup(words, code.length)
    masks = distance_masks(code.length, 4, through=(i, j))
    cand = words[:, None] ^ masks[None, :]
    hit = lookup[cand] >= 0
    return {
        int(w): frozenset(int(c) for c in cand[row][hit[row]])
        for row, w in enumerate(words)
    }


def _structural_neighbors(
    product: ProductCode,
    w: int,
    i: int,
    j: int,
    class_tables: dict[tuple[int, int, int], dict[int, frozenset[int]]],
) -> frozenset[int]:
    """Right-hand side of the neighborhood identity, assembled from the
    class structure instead of scanning the product code."""
    part = product.partition
    perm = product.perm
    n = product.half_length
    low = (1 << n) - 1
    x, y = w & low, w >> n
    if i < n and j < n:
        k = product.block_of[w]
        xt = x ^ (1 << i) ^ (1 << j)
        l = part.class_of(xt)
        same_block = {z | (y << n) for z in class_tables[(k, i, j)][x]}
        cross = {
            xt | (z << n)
            for z in part.odd[perm[l]].words
            if (z ^ y).bit_count() == 2
        }
        return frozenset(same_block | cross)
    if i >= n and j >= n:
        ii, jj = i - n, j - n
        k = product.block_of[w]
        yt = y ^ (1 << ii) ^ (1 << jj)
        t = part.class_of(yt)
        inv = invert_perm(perm)
        same_block = {x | (z << n) for z in class_tables[(perm[k], ii, jj)][y]}
        cross = {
            z | (yt << n)
            for z in part.odd[inv[t]].words
            if (z ^ x).bit_count() == 2
        }
        return frozenset(same_block | cross)
    raise ValueError("the identity applies to same-half coordinate pairs only")


def verify_neighborhood_structure(
    product: ProductCode,
    samples: int | None = None,
    seed: int = 1,
) -> Report:
    """Compare, word by word, the scanned distance-4 neighborhoods of the
    product code against the structural formula, over every same-half
    coordinate pair (or a seeded sample of (word, pair) combinations)."""
    n = product.half_length
    part = product.partition
    rep = Report(
        "neighborhood-structure",
        {"perm": list(product.perm), "samples": samples, "seed": seed},
    )
    left_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs = left_pairs + [(i + n, j + n) for i, j in left_pairs]

    class_tables: dict[tuple[int, int, int], dict[int, frozenset[int]]] = {}
    for k in range(n):
        for i, j in left_pairs:
            class_tables[(k, i, j)] = _neighbor_table(part.odd[k], i, j)

    if samples is None:
        tasks = [(w, pair) for pair in pairs for w in sorted(product.code.words)]
    else:
        rng = random.Random(seed)
        words = sorted(product.code.words)
        tasks = [(rng.choice(words), rng.choice(pairs)) for _ in range(samples)]

    scanned_tables = {
        pair: _neighbor_table(product.code, *pair) for pair in pairs
    }
    bad = None
    for w, pair in tasks:
        scanned = scanned_tables[pair][w]
        structural = _structural_neighbors(product, w, *pair, class_tables)
        if scanned != structural:
            bad = f"word {w:#x}, pair {pair}"
            break
    rep.add(
        "scanned-equals-structural",
        bad is None,
        witness=bad,
    )
    return rep
