"""Arithmetic in GF(2^m) via log/antilog tables.

Elements are polynomial bitmasks: bit k of an element is the coefficient
of x^k.  The field zero is the distinguished element 0 and never appears
in the log table; it is not given an integer exponent.

Code coordinates are the field elements listed in the canonical order
[0, a^0, a^1, ..., a^(2^m - 2)], where a is the primitive element x.
Bit i of a word refers to coordinate i of this order.
"""

from __future__ import annotations

from dataclasses import dataclass

# Fixed defining polynomials (bitmask includes the leading term), so the
# generated tables are reproducible across runs and platforms.
PRIMITIVE_POLYS = {
    2: 0b111,       # x^2 + x + 1
    3: 0b1011,      # x^3 + x + 1
    4: 0b10011,     # x^4 + x + 1
    5: 0b100101,    # x^5 + x^2 + 1
    6: 0b1000011,   # x^6 + x + 1
}

DEFAULT_DEGREE_CAP = 6


@dataclass(frozen=True)
class Field:
    """GF(2^m) with complete log/antilog tables.

    Immutable after construction; safe to share between threads.
    """

    m: int
    primitive_poly: int
    antilog: tuple[int, ...]   # antilog[t] = a^t, length 2^m - 1
    log: tuple[int, ...]       # log[e] = t for nonzero e; log[0] = -1 (unused)

    @property
    def size(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        return (1 << self.m) - 1

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def alpha(self) -> int:
        return self.antilog[1]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.order]

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        return self.antilog[(self.log[a] * k) % self.order]

    def cube(self, a: int) -> int:
        return self.pow(a, 3)

    def element_label(self, e: int) -> str:
        """Human-readable name: "0" for the zero element, else "a^t"."""
        if e == 0:
            return "0"
        return f"a^{self.log[e]}"


def make_field(m: int, cap: int = DEFAULT_DEGREE_CAP) -> Field:
    """Build GF(2^m) with the fixed defining polynomial for m.

    Rejects m < 2 and m > cap (tables grow as 2^m).
    """
    if m < 2:
        raise ValueError(f"extension degree must be at least 2, got {m}")
    if m > cap:
        raise ValueError(f"extension degree {m} exceeds the cap {cap}")
    if m not in PRIMITIVE_POLYS:
        raise ValueError(f"no defining polynomial registered for m={m}")
    poly = PRIMITIVE_POLYS[m]
    order = (1 << m) - 1
    antilog = []
    e = 1
    for _ in range(order):
        antilog.append(e)
        e <<= 1
        if e >> m & 1:
            e ^= poly
    if e != 1 or len(set(antilog)) != order:
        raise ValueError(f"polynomial {poly:#b} is not primitive for m={m}")
    log = [-1] * (1 << m)
    for t, el in enumerate(antilog):
        log[el] = t
    return Field(m=m, primitive_poly=poly, antilog=tuple(antilog), log=tuple(log))


def coordinate_order(field: Field) -> tuple[int, ...]:
    """Field elements in coordinate order: [0, a^0, a^1, ...], length 2^m."""
    return (0,) + field.antilog


def coord_of(field: Field, element: int) -> int:
    """Coordinate index of a field element (0 for the zero element)."""
    if element == 0:
        return 0
    return field.log[element] + 1


def element_at(field: Field, index: int) -> int:
    """Field element sitting at coordinate index."""
    if index == 0:
        return 0
    return field.antilog[index - 1]
