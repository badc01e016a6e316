import pytest

from perfcodes.gf import (
    PRIMITIVE_POLYS,
    coordinate_order,
    coord_of,
    element_at,
    make_field,
)


def test_antilog_is_permutation_of_nonzero(field3, field4):
    for f in (field3, field4):
        assert sorted(f.antilog) == list(range(1, f.size))


def test_known_antilog_sequence_m3(field3):
    # x^3 = x + 1 under the fixed defining polynomial
    assert field3.antilog == (1, 2, 4, 3, 6, 7, 5)


def test_log_inverts_antilog(field3, field4):
    for f in (field3, field4):
        for t, e in enumerate(f.antilog):
            assert f.log[e] == t


def test_addition_is_xor(field3):
    assert field3.add(0b011, 0b110) == 0b101
    assert field3.add(5, 5) == 0


def test_multiplication_table_m3(field3):
    f = field3
    # a^3 * a^5 = a^(8 mod 7) = a^1
    assert f.mul(f.antilog[3], f.antilog[5]) == f.antilog[1]
    assert f.mul(0, f.alpha) == 0
    assert all(f.mul(1, e) == e for e in range(f.size))


def test_mul_is_commutative_and_distributive(field4):
    f = field4
    for a in range(f.size):
        for b in range(f.size):
            assert f.mul(a, b) == f.mul(b, a)
            for c in range(f.size):
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_pow_and_cube(field3):
    f = field3
    for e in range(f.size):
        assert f.cube(e) == f.mul(e, f.mul(e, e))
    assert f.pow(f.alpha, f.order) == 1
    assert f.pow(0, 5) == 0
    assert f.pow(0, 0) == 1


def test_alpha_is_primitive(field3, field4):
    for f in (field3, field4):
        powers = {f.pow(f.alpha, t) for t in range(f.order)}
        assert len(powers) == f.order


def test_coordinate_order_roundtrip(field4):
    f = field4
    coords = coordinate_order(f)
    assert coords[0] == 0
    assert len(coords) == f.size
    for idx, e in enumerate(coords):
        assert coord_of(f, e) == idx
        assert element_at(f, idx) == e


def test_element_label(field3):
    assert field3.element_label(0) == "0"
    assert field3.element_label(field3.alpha) == "a^1"


def test_make_field_rejects_bad_degrees():
    with pytest.raises(ValueError):
        make_field(1)
    with pytest.raises(ValueError):
        make_field(7)


def test_registered_polynomials_are_primitive():
    for m in PRIMITIVE_POLYS:
        f = make_field(m, cap=6)
        assert len(set(f.antilog)) == f.order
