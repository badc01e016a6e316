"""The indexed family of codes covering the odd-weight words.

For every field element t the pair (H[t]^1, H[t]^0) is the odd class and
its even companion cut out by the cubed-translate check anchored at t.
Classes are indexed by the coordinate position of their anchor element,
so class 0 belongs to the field zero and class k+1 to a^k.

At m = 3 the odd classes tile the odd-weight words of length 8 and the
even companions pairwise intersect in exactly four words, whose two
weight-4 members split the coordinates into the complementary quadruples
used by the coset-leader and component verifiers below.

For even m the cubed-translate map is 3-to-1 on nonzero elements, the
class assignment equation has 0 or 3 solutions for most words, and the
tiling fails; building the family at m = 4 therefore aborts during
invariant validation (see build notes in the repository).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Code, cosets, extended_hamming, intersect, support, weight
from .components import component
from .gf import Field, coordinate_order
from .report import Report


class PartitionInvariantError(RuntimeError):
    """A structural invariant of the class family failed to hold."""


@dataclass(frozen=True)
class Partition:
    field: Field
    odd: tuple[Code, ...]    # odd-weight classes, indexed by anchor coordinate
    even: tuple[Code, ...]   # even companions, same indexing

    @property
    def n(self) -> int:
        return self.field.size

    def class_of(self, word: int) -> int:
        """Index of the unique odd class containing an odd-weight word."""
        hits = [k for k, c in enumerate(self.odd) if word in c.words]
        if len(hits) != 1:
            raise PartitionInvariantError(
                f"word {word:#x} lies in {len(hits)} odd classes"
            )
        return hits[0]


def build_classes(field: Field) -> tuple[tuple[Code, ...], tuple[Code, ...]]:
    """Raw class family, without invariant validation."""
    elements = coordinate_order(field)
    odd = tuple(extended_hamming(field, e, 1) for e in elements)
    even = tuple(extended_hamming(field, e, 0) for e in elements)
    return odd, even


def odd_class_partition(field: Field, validate: bool = True) -> Partition:
    """Build the class family and check the tiling invariants.

    Raises PartitionInvariantError with a diagnostic when the odd classes
    fail to tile the odd-weight words or the even companions do not meet
    in the minimum possible number of words.
    """
    odd, even = build_classes(field)
    partition = Partition(field=field, odd=odd, even=even)
    if validate:
        validate_partition(partition)
    return partition


def validate_partition(partition: Partition) -> None:
    n = partition.n
    m = partition.field.m
    class_size = 1 << (n - m - 1)
    for k, code in enumerate(partition.odd):
        if len(code) != class_size:
            raise PartitionInvariantError(
                f"odd class {k} has {len(code)} words, expected {class_size}"
            )
    union: set[int] = set()
    total = 0
    for code in partition.odd:
        total += len(code)
        union |= code.words
    if len(union) != total:
        raise PartitionInvariantError(
            f"odd classes overlap: union {len(union)} < sum {total}"
        )
    if len(union) != 1 << (n - 1):
        raise PartitionInvariantError(
            f"odd classes cover {len(union)} of {1 << (n - 1)} odd-weight words"
        )
    if any(weight(w) % 2 == 0 for w in union):
        raise PartitionInvariantError("an odd class contains an even-weight word")
    expected = 1 << (n - 2 * m)
    for i in range(n):
        for j in range(i + 1, n):
            got = len(partition.even[i].words & partition.even[j].words)
            if got != expected:
                raise PartitionInvariantError(
                    f"even classes {i},{j} intersect in {got} words, expected {expected}"
                )


@dataclass(frozen=True)
class PiSplit:
    """Complementary coordinate quadruples carried by the two weight-4
    words of an even-class intersection (m = 3 only)."""

    i: int
    j: int
    pi0: frozenset[int]   # contains coordinate i
    pi1: frozenset[int]   # contains coordinate j
    x0: int
    x1: int


def pi_split(partition: Partition, i: int, j: int) -> PiSplit:
    n = partition.n
    if partition.field.m != 3:
        raise ValueError("the four-word intersection structure is specific to m=3")
    if i == j:
        raise ValueError("class indices must differ")
    inter = partition.even[i].words & partition.even[j].words
    full = (1 << n) - 1
    heavy = sorted(w for w in inter if 0 < w < full)
    if len(inter) != 4 or len(heavy) != 2 or {weight(w) for w in heavy} != {4}:
        raise PartitionInvariantError(
            f"intersection of even classes {i},{j} is not {{0, 1^n, x0, x1}}: "
            f"{sorted(inter)}"
        )
    x0, x1 = heavy
    if x0 ^ x1 != full:
        raise PartitionInvariantError("the two weight-4 words are not complementary")
    for w in heavy:
        if w >> i & 1 and w >> j & 1:
            raise PartitionInvariantError(
                f"weight-4 word {w:#x} carries ones at both anchors {i} and {j}"
            )
    if not x0 >> i & 1:
        x0, x1 = x1, x0
    return PiSplit(
        i=i,
        j=j,
        pi0=frozenset(support(x0, n)),
        pi1=frozenset(support(x1, n)),
        x0=x0,
        x1=x1,
    )


def verify_coset_leaders(partition: Partition, i: int, j: int) -> Report:
    """The sumset of two odd classes splits into 16 cosets of the even
    intersection, each holding a unique weight-2 leader, and the leaders
    are exactly the cross pairs of the two coordinate quadruples."""
    rep = Report("coset-leaders", {"i": i, "j": j})
    split = pi_split(partition, i, j)
    sub = intersect(partition.even[i], partition.even[j])
    sumset = {x ^ y for x in partition.odd[i].words for y in partition.odd[j].words}
    table = cosets(sumset, sub)
    rep.add(
        f"({i},{j})/16-cosets",
        len(table.cosets) == 16,
        witness=f"{len(table.cosets)} cosets",
    )
    bad = None
    for coset in table.cosets:
        wt2 = [w for w in coset.members if weight(w) == 2]
        if len(wt2) != 1 or weight(coset.leader) != 2:
            bad = f"coset of {coset.leader:#x} has {len(wt2)} weight-2 words"
            break
    rep.add(f"({i},{j})/unique-weight-2-leader", bad is None, witness=bad)
    leaders = {c.leader for c in table.cosets}
    expected = {(1 << r) | (1 << s) for r in split.pi0 for s in split.pi1}
    rep.add(
        f"({i},{j})/leaders-are-cross-pairs",
        leaders == expected,
        witness=None if leaders == expected else f"diff {sorted(leaders ^ expected)}",
    )
    return rep


def verify_low_weight_coset_reps(partition: Partition, i: int, j: int) -> Report:
    """Every coset of an even class by the even intersection meets the
    zero-word component (pair adjacency at the two anchor coordinates)
    in a word of weight at most 4."""
    rep = Report("low-weight-coset-reps", {"i": i, "j": j})
    sub = intersect(partition.even[i], partition.even[j])
    comp = component(partition.even[i], 0, i, j)
    table = cosets(partition.even[i].words, sub)
    bad = None
    for coset in table.cosets:
        if not any(w in comp.words and weight(w) <= 4 for w in coset.members):
            bad = f"coset of {coset.leader:#x} has no light in-component word"
            break
    rep.add(f"({i},{j})/weight<=4-representatives", bad is None, witness=bad)
    return rep


@dataclass(frozen=True)
class CrossGraph:
    k: int
    l: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    adjacency: dict[int, tuple[int, ...]]


def cross_graph(partition: Partition, k: int, l: int) -> CrossGraph:
    """Distance-2 bipartite graph between two odd classes."""
    if k == l:
        raise ValueError("class indices must differ")
    left = tuple(sorted(partition.odd[k].words))
    right = tuple(sorted(partition.odd[l].words))
    adjacency: dict[int, list[int]] = {w: [] for w in left + right}
    for x in left:
        for y in right:
            if (x ^ y).bit_count() == 2:
                adjacency[x].append(y)
                adjacency[y].append(x)
    return CrossGraph(
        k=k,
        l=l,
        left=left,
        right=right,
        adjacency={w: tuple(sorted(nb)) for w, nb in adjacency.items()},
    )


def is_connected(graph: CrossGraph) -> bool:
    vertices = graph.left + graph.right
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for nb in graph.adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(vertices)


def verify_cross_graph(partition: Partition, k: int, l: int) -> Report:
    """The distance-2 graph of two odd classes is connected and
    (n/2)-regular bipartite."""
    rep = Report("cross-graph", {"k": k, "l": l})
    graph = cross_graph(partition, k, l)
    degree = partition.n // 2
    degrees = {len(nb) for nb in graph.adjacency.values()}
    rep.add(f"({k},{l})/connected", is_connected(graph))
    rep.add(
        f"({k},{l})/{degree}-regular",
        degrees == {degree},
        witness=f"degrees {sorted(degrees)}",
    )
    return rep


def verify_translate_class_separation(
    partition: Partition, k: int, r: int, s: int
) -> Report:
    """Distance-4 words of one odd class lying in a common component of
    the (r, s) pair adjacency land in different classes after the
    e_r + e_s translate."""
    if r == s:
        raise ValueError("the two translate coordinates must differ")
    rep = Report("translate-class-separation", {"k": k, "r": r, "s": s})
    code = partition.odd[k]
    mask = (1 << r) | (1 << s)
    remaining = set(code.words)
    bad = None
    while remaining and bad is None:
        comp = component(code, min(remaining), r, s)
        members = sorted(comp.words)
        for a_idx, x in enumerate(members):
            for x2 in members[a_idx + 1 :]:
                if (x ^ x2).bit_count() != 4:
                    continue
                if partition.class_of(x ^ mask) == partition.class_of(x2 ^ mask):
                    bad = f"pair {x:#x},{x2:#x} translates into one class"
                    break
            if bad:
                break
        remaining -= comp.words
    rep.add(f"({k},{r},{s})/translates-separate", bad is None, witness=bad)
    return rep
