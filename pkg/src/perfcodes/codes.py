"""Binary codes as explicit word sets.

A word of length n is an int whose low n bits are coordinate values;
bit i corresponds to coordinate i of gf.coordinate_order.  The support
of a word is the set of field elements at its one-positions, so the
check sums of the builders are XOR-folds of per-coordinate constants.

Codes at the target scale hold at most 2048 words, so set membership,
coset decomposition and distance sweeps are all exact and exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .gf import Field, coordinate_order

BRUTE_FORCE_LENGTH_CAP = 16


def weight(w: int) -> int:
    return w.bit_count()


def distance(a: int, b: int) -> int:
    return (a ^ b).bit_count()


def support(w: int, length: int) -> tuple[int, ...]:
    return tuple(i for i in range(length) if w >> i & 1)


def word_to_str(w: int, length: int) -> str:
    """Binary string, leftmost character = coordinate 0."""
    return "".join("1" if w >> i & 1 else "0" for i in range(length))


def str_to_word(s: str) -> int:
    w = 0
    for i, ch in enumerate(s):
        if ch == "1":
            w |= 1 << i
        elif ch != "0":
            raise ValueError(f"non-binary character {ch!r} in word string")
    return w


@dataclass(frozen=True)
class Code:
    length: int
    words: frozenset[int]
    label: str = ""

    def __post_init__(self):
        limit = 1 << self.length
        for w in self.words:
            if not 0 <= w < limit:
                raise ValueError(
                    f"word {w:#x} does not fit code length {self.length}"
                )

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: int) -> bool:
        return w in self.words

    def __iter__(self):
        return iter(sorted(self.words))

    def word_array(self) -> np.ndarray:
        return kernels.words_array(self.words)

    def weight_spectrum(self) -> dict[int, int]:
        spectrum: dict[int, int] = {}
        for w in self.words:
            k = weight(w)
            spectrum[k] = spectrum.get(k, 0) + 1
        return dict(sorted(spectrum.items()))


@dataclass(frozen=True)
class CheckSum:
    """XOR-linear functional on supports: a word passes iff the XOR of
    coeffs[i] over its one-positions equals target."""

    coeffs: tuple[int, ...]
    target: int

    def evaluate(self, w: int) -> int:
        acc = 0
        for i, c in enumerate(self.coeffs):
            if w >> i & 1:
                acc ^= c
        return acc


def hamming_check_sums(field: Field, alpha: int, p: int) -> list[CheckSum]:
    """Overall parity p plus the cubed-translate sum anchored at alpha."""
    if p not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {p}")
    coords = coordinate_order(field)
    return [
        CheckSum((1,) * field.size, p),
        CheckSum(tuple(field.cube(field.add(x, alpha)) for x in coords), 0),
    ]


def h_bar_check_sums(field: Field) -> list[CheckSum]:
    """Even parity plus plain element sum."""
    coords = coordinate_order(field)
    return [
        CheckSum((1,) * field.size, 0),
        CheckSum(coords, 0),
    ]


def bch_check_sums(field: Field) -> list[CheckSum]:
    """Even parity, element sum and cubed element sum."""
    coords = coordinate_order(field)
    return h_bar_check_sums(field) + [
        CheckSum(tuple(field.cube(x) for x in coords), 0)
    ]


def solve_affine_gf2(
    rows: list[tuple[int, int]], n: int
) -> tuple[int, list[int]] | None:
    """Solve the system {parity(w & mask) == rhs} over GF(2).

    Returns (particular solution, nullspace basis) or None if inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        for pbit, (pmask, prhs) in pivots.items():
            if mask >> pbit & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                return None
            continue
        pbit = mask.bit_length() - 1
        for qbit, (qmask, qrhs) in list(pivots.items()):
            if qmask >> pbit & 1:
                pivots[qbit] = (qmask ^ mask, qrhs ^ rhs)
        pivots[pbit] = (mask, rhs)
    particular = 0
    for pbit, (_, rhs) in pivots.items():
        particular |= rhs << pbit
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        vec = 1 << f
        for pbit, (mask, _) in pivots.items():
            if mask >> f & 1:
                vec |= 1 << pbit
        basis.append(vec)
    return particular, basis


def code_from_check_sums(length: int, checks: list[CheckSum], label: str = "") -> Code:
    """Kernel builder: expand check sums to GF(2) rows and enumerate the
    affine solution set."""
    rows: list[tuple[int, int]] = []
    for cs in checks:
        width = max(
            max((c.bit_length() for c in cs.coeffs), default=0),
            cs.target.bit_length(),
            1,
        )
        for b in range(width):
            mask = 0
            for i, c in enumerate(cs.coeffs):
                if c >> b & 1:
                    mask |= 1 << i
            rows.append((mask, cs.target >> b & 1))
    solution = solve_affine_gf2(rows, length)
    if solution is None:
        return Code(length, frozenset(), label)
    particular, basis = solution
    words = [particular]
    for b in basis:
        words += [w ^ b for w in words]
    return Code(length, frozenset(words), label)


def brute_force_code(length: int, checks: list[CheckSum], label: str = "") -> Code:
    """Independent oracle: test every one of the 2^length subsets against
    the check sums.  Refuses lengths above the enumeration cap."""
    if length > BRUTE_FORCE_LENGTH_CAP:
        raise ValueError(
            f"enumeration capped at length {BRUTE_FORCE_LENGTH_CAP}, got {length}"
        )
    w = np.arange(1 << length, dtype=np.uint32)
    keep = np.ones(w.size, dtype=bool)
    for cs in checks:
        acc = np.zeros(w.size, dtype=np.uint32)
        for i, c in enumerate(cs.coeffs):
            acc ^= ((w >> i) & 1) * np.uint32(c)
        keep &= acc == np.uint32(cs.target)
    return Code(length, frozenset(int(x) for x in w[keep]), label)


def extended_hamming(field: Field, alpha: int, p: int, label: str | None = None) -> Code:
    """Length-2^m code cut out by parity p and the cubed-translate sum at
    alpha; p=0 is linear, p=1 its odd-weight coset."""
    if not 0 <= alpha < field.size:
        raise ValueError(f"{alpha} is not an element of GF(2^{field.m})")
    if label is None:
        label = f"H[{field.element_label(alpha)}]^{p}"
    return code_from_check_sums(field.size, hamming_check_sums(field, alpha, p), label)


def overline_h(field: Field) -> Code:
    """Even-weight words whose support sums to the zero element."""
    return code_from_check_sums(field.size, h_bar_check_sums(field), "Hbar")


def bch_code(field: Field) -> Code:
    """Words with even weight, zero element sum and zero cubed sum."""
    return code_from_check_sums(field.size, bch_check_sums(field), "BCH")


def intersect(a: Code, b: Code) -> Code:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")
    return Code(a.length, a.words & b.words, f"{a.label}&{b.label}")


def min_distance(code: Code) -> int:
    if len(code) < 2:
        raise ValueError("minimum distance needs at least two words")
    return kernels.min_distance_of_words(code.word_array())


def covering_radius(words, length: int) -> int:
    """Largest distance from any vector of the full space to the set."""
    centers = kernels.words_array(words)
    if centers.size == 0:
        raise ValueError("covering radius of the empty set is undefined")
    if length > BRUTE_FORCE_LENGTH_CAP:
        raise ValueError(f"full-space sweep capped at length {BRUTE_FORCE_LENGTH_CAP}")
    points = np.arange(1 << length, dtype=np.uint32)
    return int(kernels.min_dist_to_set(points, centers).max())


def distance_shell(words, length: int, radius: int) -> frozenset[int]:
    """All vectors of the full space at exactly the given distance from the set."""
    centers = kernels.words_array(words)
    points = np.arange(1 << length, dtype=np.uint32)
    d = kernels.min_dist_to_set(points, centers)
    return frozenset(int(v) for v in points[d == radius])


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def is_perfect(code: Code) -> bool:
    """Radius-1 tiling test for odd lengths 2^r - 1: size 2^n/(n+1) and
    minimum distance at least 3."""
    n = code.length
    if not _is_power_of_two(n + 1) or n < 3:
        raise ValueError(f"length {n} is not of the form 2^r - 1")
    if len(code) != (1 << n) // (n + 1):
        return False
    return min_distance(code) >= 3


def is_extended_perfect(code: Code) -> bool:
    """Even-weight length-2^r code of full size with minimum distance >= 4.

    Distances between even-weight words are even and the words are
    distinct, so excluding distance-2 pairs is exactly distance >= 4.
    """
    n = code.length
    if not _is_power_of_two(n) or n < 4:
        raise ValueError(f"length {n} is not a power of two (>= 4)")
    r = n.bit_length() - 1
    if len(code) != 1 << (n - r - 1):
        return False
    if any(weight(w) % 2 for w in code.words):
        return False
    arr = code.word_array()
    present = np.zeros(1 << n, dtype=np.uint8)
    present[arr] = 1
    masks = distance_masks(n, 2)
    return not kernels.has_close_pair(arr, present, masks)


def distance_masks(length: int, d: int, through: tuple[int, ...] = ()) -> np.ndarray:
    """All weight-d XOR masks over `length` bits whose support contains
    every coordinate in `through` (and nothing else fixed)."""
    from itertools import combinations

    base = 0
    for t in through:
        base |= 1 << t
    rest = [i for i in range(length) if not base >> i & 1]
    k = d - len(through)
    if k < 0:
        raise ValueError("mask weight smaller than the forced support")
    masks = []
    for combo in combinations(rest, k):
        m = base
        for c in combo:
            m |= 1 << c
        masks.append(m)
    return np.array(sorted(masks), dtype=np.uint32)


def puncture(code: Code, i: int) -> Code:
    """Delete coordinate i from every word."""
    if not 0 <= i < code.length:
        raise ValueError(f"coordinate {i} out of range for length {code.length}")
    low = (1 << i) - 1
    words = frozenset((w & low) | ((w >> (i + 1)) << i) for w in code.words)
    return Code(code.length - 1, words, f"{code.label}\\{i}")


def extend_parity(code: Code, i: int = 0) -> Code:
    """Insert an overall-parity coordinate at position i."""
    if not 0 <= i <= code.length:
        raise ValueError(f"insert position {i} out of range")
    low = (1 << i) - 1
    words = set()
    for w in code.words:
        v = (w & low) | ((w >> i) << (i + 1))
        if weight(v) % 2:
            v |= 1 << i
        words.add(v)
    return Code(code.length + 1, frozenset(words), f"{code.label}+parity@{i}")


@dataclass(frozen=True)
class Coset:
    leader: int
    members: frozenset[int]


@dataclass(frozen=True)
class CosetTable:
    subcode: Code
    cosets: tuple[Coset, ...]


def _leader(members) -> int:
    # minimum weight, ties broken by smallest integer value
    return min(members, key=lambda w: (weight(w), w))


def cosets(ambient, subcode: Code) -> CosetTable:
    """Decompose an ambient word set into XOR-cosets of a linear subcode."""
    sub = sorted(subcode.words)
    if 0 not in subcode.words:
        raise ValueError("subcode is not linear: missing the zero word")
    for a in sub:
        for b in sub:
            if a ^ b not in subcode.words:
                raise ValueError("subcode is not linear: not closed under XOR")
    ambient_set = set(ambient)
    seen: set[int] = set()
    table = []
    for w in sorted(ambient_set):
        if w in seen:
            continue
        members = frozenset(w ^ s for s in sub)
        if not members <= ambient_set:
            raise ValueError(
                f"ambient set is not a union of cosets (offender {w:#x})"
            )
        table.append(Coset(_leader(members), members))
        seen |= members
    table.sort(key=lambda c: (weight(c.leader), c.leader))
    return CosetTable(subcode=subcode, cosets=tuple(table))
