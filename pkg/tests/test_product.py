import random

import pytest

from perfcodes.codes import is_extended_perfect, min_distance, weight
from perfcodes.product import (
    identity_perm,
    invert_perm,
    n_ij,
    parse_perm,
    random_perm,
    reversal_perm,
    doubled_product_code,
    verify_neighborhood_structure,
)


def test_parse_perm():
    assert parse_perm("identity", 4) == (0, 1, 2, 3)
    assert parse_perm("reversal", 4) == (3, 2, 1, 0)
    assert parse_perm("2 0 3 1", 4) == (2, 0, 3, 1)
    with pytest.raises(ValueError):
        parse_perm("0 0 1 2", 4)
    with pytest.raises(ValueError):
        parse_perm("a b", 2)


def test_invert_perm():
    perm = (2, 0, 3, 1)
    inv = invert_perm(perm)
    assert [perm[inv[k]] for k in range(4)] == [0, 1, 2, 3]


def test_identity_product_is_extended_perfect(product_identity):
    code = product_identity.code
    assert code.length == 16
    assert len(code) == 2048
    assert all(weight(w) % 2 == 0 for w in code.words)
    assert min_distance(code) == 4
    assert is_extended_perfect(code)


def test_random_products_are_extended_perfect(partition3):
    rng = random.Random(5)
    for _ in range(5):
        product = doubled_product_code(partition3, random_perm(partition3.n, rng))
        assert is_extended_perfect(product.code)


def test_block_of_consistent_with_classes(product_identity):
    part = product_identity.partition
    n = product_identity.half_length
    low = (1 << n) - 1
    for w in list(product_identity.code.words)[:200]:
        l = product_identity.block_of[w]
        assert (w & low) in part.odd[l].words
        assert (w >> n) in part.odd[product_identity.perm[l]].words


def test_n_ij_requires_codeword_and_distinct_coords(product_identity):
    code = product_identity.code
    w = min(code.words)
    with pytest.raises(ValueError):
        n_ij(code, w ^ 1, 0, 1)
    with pytest.raises(ValueError):
        n_ij(code, w, 3, 3)


def test_n_ij_matches_direct_scan(product_identity):
    code = product_identity.code
    w = min(code.words)
    got = n_ij(code, w, 0, 5)
    expected = {
        z
        for z in code.words
        if (z ^ w).bit_count() == 4 and (z ^ w) & 0b100001 == 0b100001
    }
    assert got == expected


def test_neighborhood_structure_sampled(partition3):
    product = doubled_product_code(partition3, reversal_perm(partition3.n))
    report = verify_neighborhood_structure(product, samples=200, seed=3)
    assert report.passed


def test_neighborhood_structure_deterministic(product_identity):
    a = verify_neighborhood_structure(product_identity, samples=50, seed=9)
    b = verify_neighborhood_structure(product_identity, samples=50, seed=9)
    assert a.to_json() == b.to_json()


def test_identity_perm_helpers():
    assert identity_perm(3) == (0, 1, 2)
    assert reversal_perm(3) == (2, 1, 0)
