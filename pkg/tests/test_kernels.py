import numpy as np
import pytest

from perfcodes import kernels


@pytest.fixture()
def random_words():
    rng = np.random.default_rng(42)
    return np.unique(rng.integers(0, 1 << 16, size=300).astype(np.uint32))


def test_backend_reports_a_known_name():
    assert kernels.backend() in {"numba", "numpy"}


def test_popcount_agrees_with_int_bit_count(random_words):
    got = kernels.popcount(random_words)
    assert [int(x) for x in got] == [int(w).bit_count() for w in random_words]


def test_words_array_sorts_and_dedups():
    arr = kernels.words_array({5, 1, 9, 1})
    assert arr.dtype == np.uint32
    assert arr.tolist() == [1, 5, 9]


def test_make_lookup_inverts_words(random_words):
    lookup = kernels.make_lookup(random_words, 16)
    for idx, w in enumerate(random_words):
        assert lookup[w] == idx
    assert (lookup >= 0).sum() == random_words.size


def test_min_distance_matches_numpy_fallback(random_words):
    expected = kernels._min_distance_np(random_words)
    assert kernels.min_distance_of_words(random_words) == expected


def test_min_dist_to_set_matches_numpy_fallback(random_words):
    points = np.arange(1 << 12, dtype=np.uint32)
    centers = random_words[:40]
    expected = kernels._min_dist_to_set_np(points, centers)
    got = kernels.min_dist_to_set(points, centers)
    assert np.array_equal(got, expected)


def test_component_labels_match_numpy_fallback(random_words):
    masks = np.array([0b11, 0b101, 0b1100], dtype=np.uint32)
    lookup = kernels.make_lookup(random_words, 16)
    expected = kernels._component_labels_np(random_words, lookup, masks)
    got = kernels.component_labels(random_words, lookup, masks)
    # label numbering is implementation-defined; the partitions must agree
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for a, b in zip(expected.tolist(), got.tolist()):
        assert forward.setdefault(a, b) == b
        assert backward.setdefault(b, a) == a


def test_has_close_pair_matches_numpy_fallback(random_words):
    present = np.zeros(1 << 16, dtype=np.uint8)
    present[random_words] = 1
    for masks in (
        np.array([1], dtype=np.uint32),
        np.array([0b1111000000000000], dtype=np.uint32),
    ):
        expected = kernels._has_close_pair_np(random_words, present, masks)
        assert kernels.has_close_pair(random_words, present, masks) == expected


def test_component_labels_two_known_components():
    words = np.array([0b000, 0b011, 0b110, 0b101, 0b111], dtype=np.uint32)
    masks = np.array([0b011, 0b110], dtype=np.uint32)
    lookup = kernels.make_lookup(words, 3)
    labels = kernels.component_labels(words, lookup, masks)
    # {0, 3, 6, 5} is closed under the two masks; {7} is isolated
    assert labels[0] == labels[1] == labels[2] == labels[3]
    assert labels[4] != labels[0]


def test_warmup_runs_on_either_backend():
    kernels.warmup()
