"""Hot bit-level kernels: distance sweeps and component BFS.

Every kernel has two interchangeable implementations: a numba @njit loop
and a vectorized pure-numpy fallback.  The numba path is used when numba
imports cleanly and the environment variable PERFCODES_NUMBA is not set
to 0/false/off.  Both paths are exercised by the test suite and timed
against each other by benchmarks/bench_kernels.py.

Words are at most 16 bits wide (code length <= 16), carried as uint32.
"""

from __future__ import annotations

import os

import numpy as np

# popcount lookup covering every representable word; shared by both paths
_POP16 = (
    np.unpackbits(np.arange(1 << 16, dtype=np.uint16).view(np.uint8))
    .reshape(-1, 16)
    .sum(axis=1)
    .astype(np.uint8)
)


def _numba_enabled() -> bool:
    flag = os.environ.get("PERFCODES_NUMBA", "1").strip().lower()
    if flag in {"0", "false", "off", "no"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_enabled()


def backend() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"


def words_array(words) -> np.ndarray:
    """Sorted uint32 array from any iterable of word ints."""
    return np.array(sorted(words), dtype=np.uint32)


def make_lookup(words: np.ndarray, length: int) -> np.ndarray:
    """Position table over the full 2^length space: word -> index, -1 if absent."""
    lookup = np.full(1 << length, -1, dtype=np.int32)
    lookup[words] = np.arange(words.size, dtype=np.int32)
    return lookup


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr)


# ---------------------------------------------------------------------------
# numpy fallbacks

_CHUNK = 1024


def _min_distance_np(words: np.ndarray) -> int:
    best = 17
    for start in range(0, words.size, _CHUNK):
        chunk = words[start : start + _CHUNK]
        d = np.bitwise_count(chunk[:, None] ^ words[None, :])
        nz = d[d > 0]
        if nz.size:
            best = min(best, int(nz.min()))
    return best


def _min_dist_to_set_np(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    out = np.empty(points.size, dtype=np.uint8)
    for start in range(0, points.size, _CHUNK * 4):
        chunk = points[start : start + _CHUNK * 4]
        d = np.bitwise_count(chunk[:, None] ^ centers[None, :])
        out[start : start + chunk.size] = d.min(axis=1)
    return out


def _component_labels_np(
    words: np.ndarray, lookup: np.ndarray, masks: np.ndarray
) -> np.ndarray:
    labels = np.full(words.size, -1, dtype=np.int32)
    comp = 0
    for s in range(words.size):
        if labels[s] >= 0:
            continue
        labels[s] = comp
        frontier = words[s : s + 1]
        while frontier.size:
            cand = (frontier[:, None] ^ masks[None, :]).ravel()
            idx = lookup[cand]
            idx = idx[idx >= 0]
            idx = np.unique(idx[labels[idx] < 0])
            if idx.size == 0:
                break
            labels[idx] = comp
            frontier = words[idx]
        comp += 1
    return labels


def _has_close_pair_np(
    words: np.ndarray, present: np.ndarray, masks: np.ndarray
) -> bool:
    for start in range(0, words.size, _CHUNK):
        chunk = words[start : start + _CHUNK]
        cand = chunk[:, None] ^ masks[None, :]
        if present[cand].any():
            return True
    return False


# ---------------------------------------------------------------------------
# numba kernels

if NUMBA_ENABLED:
    import numba

    @numba.njit
    def _min_distance_nb(words):  # pragma: no cover - timed via dispatcher
        best = 17
        for i in range(words.size):
            wi = words[i]
            for j in range(i + 1, words.size):
                d = _POP16[wi ^ words[j]]
                if d < best:
                    best = d
        return best

    @numba.njit
    def _min_dist_to_set_nb(points, centers):  # pragma: no cover
        out = np.empty(points.size, dtype=np.uint8)
        for i in range(points.size):
            p = points[i]
            best = np.uint8(255)
            for j in range(centers.size):
                d = _POP16[p ^ centers[j]]
                if d < best:
                    best = d
            out[i] = best
        return out

    @numba.njit
    def _component_labels_nb(words, lookup, masks):  # pragma: no cover
        labels = np.full(words.size, -1, dtype=np.int32)
        stack = np.empty(words.size, dtype=np.int32)
        comp = 0
        for s in range(words.size):
            if labels[s] >= 0:
                continue
            labels[s] = comp
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                w = words[stack[top]]
                for k in range(masks.size):
                    u = lookup[w ^ masks[k]]
                    if u >= 0 and labels[u] < 0:
                        labels[u] = comp
                        stack[top] = u
                        top += 1
            comp += 1
        return labels

    @numba.njit
    def _has_close_pair_nb(words, present, masks):  # pragma: no cover
        for i in range(words.size):
            w = words[i]
            for k in range(masks.size):
                if present[w ^ masks[k]]:
                    return True
        return False


# ---------------------------------------------------------------------------
# dispatchers


def min_distance_of_words(words: np.ndarray) -> int:
    """Minimum pairwise Hamming distance of a set of distinct words."""
    if NUMBA_ENABLED:
        return int(_min_distance_nb(words))
    return _min_distance_np(words)


def min_dist_to_set(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """Per-point minimum Hamming distance to a nonempty center set."""
    if NUMBA_ENABLED:
        return _min_dist_to_set_nb(points, centers)
    return _min_dist_to_set_np(points, centers)


def component_labels(
    words: np.ndarray, lookup: np.ndarray, masks: np.ndarray
) -> np.ndarray:
    """Connected-component labels under the adjacency w ~ w ^ mask.

    `masks` enumerates every XOR step of the adjacency relation; `lookup`
    maps each point of the ambient space to its index in `words` or -1.
    """
    if NUMBA_ENABLED:
        return _component_labels_nb(words, lookup, masks)
    return _component_labels_np(words, lookup, masks)


def has_close_pair(
    words: np.ndarray, present: np.ndarray, masks: np.ndarray
) -> bool:
    """True iff some word XOR some mask hits the `present` indicator."""
    if NUMBA_ENABLED:
        return bool(_has_close_pair_nb(words, present, masks))
    return _has_close_pair_np(words, present, masks)


def warmup() -> None:
    """Force JIT compilation of the numba kernels (no-op on numpy path)."""
    w = np.array([0, 3, 12, 15], dtype=np.uint32)
    lookup = make_lookup(w, 4)
    masks = np.array([3, 5], dtype=np.uint32)
    present = np.zeros(16, dtype=np.uint8)
    min_distance_of_words(w)
    min_dist_to_set(np.arange(16, dtype=np.uint32), w)
    component_labels(w, lookup, masks)
    has_close_pair(w, present, masks)
