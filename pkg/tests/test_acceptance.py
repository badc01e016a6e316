"""Acceptance gate: fifteen numbered end-to-end criteria.

Each test prints exactly one [PASS]/[FAIL] line and enforces its time
budget.  Criterion 3 is known-red: at degree 4 the cubed-translate map
is three-to-one on nonzero field elements, so the odd classes cover only
12288 of the 32768 odd-weight words and the tiling clause genuinely
fails (see the build notes outside the package for the full analysis).
The clause is asserted faithfully rather than weakened.
"""

import json
import time

import pytest
from click.testing import CliRunner

from perfcodes import kernels
from perfcodes.cli import main, product_suite
from perfcodes.codes import (
    brute_force_code,
    bch_code,
    extended_hamming,
    hamming_check_sums,
    intersect,
    min_distance,
    overline_h,
    weight,
)
from perfcodes.coloring import (
    build_four_coloring,
    build_six_coloring,
    expected_four_matrix,
    expected_six_matrix,
    verify_perfect_coloring,
)
from perfcodes.components import (
    is_i_component,
    minimal_component,
    verify_completions,
    verify_covering_shell,
    verify_halving_components,
)
from perfcodes.gf import coordinate_order, make_field
from perfcodes.partition import (
    build_classes,
    pi_split,
    verify_coset_leaders,
    verify_cross_graph,
    verify_low_weight_coset_reps,
    verify_translate_class_separation,
)
from perfcodes.product import identity_perm, doubled_product_code, verify_neighborhood_structure

PAIRS8 = [(i, j) for i in range(8) for j in range(i + 1, 8)]


def _verdict(num: int, ok: bool, detail: str, elapsed: float, budget: float):
    within = elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    print(f"[{status}] criterion {num:02d}: {detail} ({elapsed:.2f}s / {budget:g}s)")
    assert ok, f"criterion {num}: {detail}"
    assert within, f"criterion {num}: exceeded budget ({elapsed:.2f}s >= {budget}s)"


@pytest.fixture(scope="module", autouse=True)
def _warm():
    kernels.warmup()


def test_criterion_01_oracle_equivalence():
    start = time.perf_counter()
    bad = None
    for m in (3, 4):
        f = make_field(m)
        for alpha in coordinate_order(f):
            for p in (0, 1):
                built = extended_hamming(f, alpha, p)
                oracle = brute_force_code(f.size, hamming_check_sums(f, alpha, p))
                if built.words != oracle.words:
                    bad = f"m={m}, alpha={f.element_label(alpha)}, p={p}"
                    break
    _verdict(
        1,
        bad is None,
        bad or "kernel builds equal enumeration for all anchors at m=3,4",
        time.perf_counter() - start,
        5.0,
    )


def test_criterion_02_pairwise_intersections_are_triple_check():
    start = time.perf_counter()
    bad = None
    for m in (3, 4):
        f = make_field(m)
        hbar = overline_h(f)
        bch = bch_code(f)
        for alpha in coordinate_order(f):
            if intersect(hbar, extended_hamming(f, alpha, 0)).words != bch.words:
                bad = f"m={m}, alpha={f.element_label(alpha)}"
                break
    _verdict(
        2,
        bad is None,
        bad or "base-code intersections equal the triple-check code at m=3,4",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_03_partition_both_degrees():
    # Known-red: the m=4 tiling clause fails (see module docstring).
    start = time.perf_counter()
    problems = []
    for m, n_classes, class_size, odd_total, inter_size in (
        (3, 8, 16, 128, 4),
        (4, 16, 2048, 32768, 256),
    ):
        f = make_field(m)
        odd, even = build_classes(f)
        if len(odd) != n_classes or any(len(c) != class_size for c in odd):
            problems.append(f"m={m}: wrong class count/sizes")
        union = set().union(*(c.words for c in odd))
        disjoint = len(union) == sum(len(c) for c in odd)
        covers = len(union) == odd_total
        if not (disjoint and covers):
            problems.append(
                f"m={m}: classes cover {len(union)}/{odd_total}"
                f"{'' if disjoint else ' with overlaps'}"
            )
        n = f.size
        if any(
            len(even[i].words & even[j].words) != inter_size
            for i in range(n)
            for j in range(i + 1, n)
        ):
            problems.append(f"m={m}: wrong even-intersection size")
    _verdict(
        3,
        not problems,
        "; ".join(problems) or "both class families tile with the right sizes",
        time.perf_counter() - start,
        30.0,
    )


def test_criterion_04_intersection_structure(partition3):
    start = time.perf_counter()
    bad = None
    n = partition3.n
    full = (1 << n) - 1
    for i, j in PAIRS8:
        split = pi_split(partition3, i, j)
        inter = partition3.even[i].words & partition3.even[j].words
        if inter != {0, full, split.x0, split.x1}:
            bad = f"({i},{j}): unexpected intersection"
            break
        if i not in split.pi0 or j not in split.pi1 or (split.pi0 & split.pi1):
            bad = f"({i},{j}): quadruples do not separate the anchors"
            break
    _verdict(
        4,
        bad is None,
        bad or "all 28 intersections are {0, all-ones, x0, x1} with split anchors",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_05_coset_leaders(partition3):
    start = time.perf_counter()
    bad = None
    for i, j in PAIRS8:
        report = verify_coset_leaders(partition3, i, j)
        if not report.passed:
            bad = f"({i},{j}): {report.failures[0].name}"
            break
    _verdict(
        5,
        bad is None,
        bad or "16 distinct weight-2 cross-pair leaders for all 28 pairs",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_06_light_reps_and_translate_separation(partition3):
    start = time.perf_counter()
    bad = None
    for i, j in PAIRS8:
        if not verify_low_weight_coset_reps(partition3, i, j).passed:
            bad = f"low-weight reps failed at ({i},{j})"
            break
    if bad is None:
        for k in range(partition3.n):
            for r, s in PAIRS8:
                if not verify_translate_class_separation(partition3, k, r, s).passed:
                    bad = f"translate separation failed at (k={k},{r},{s})"
                    break
            if bad:
                break
    _verdict(
        6,
        bad is None,
        bad or "light coset reps and translate separation hold for all indices",
        time.perf_counter() - start,
        5.0,
    )


def test_criterion_07_cross_graphs(partition3):
    start = time.perf_counter()
    bad = None
    for k, l in PAIRS8:
        if not verify_cross_graph(partition3, k, l).passed:
            bad = f"({k},{l})"
            break
    _verdict(
        7,
        bad is None,
        bad or "all 28 cross graphs connected and 4-regular bipartite",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_08_product_codes(partition3):
    start = time.perf_counter()
    report = product_suite(partition3, samples=50, seed=1)
    ok = report.passed
    detail = "identity + 50 random perms give size-2048 distance-4 even codes"
    if ok:
        # spot-check the exact minimum distance on the identity product
        product = doubled_product_code(partition3, identity_perm(partition3.n))
        ok = min_distance(product.code) == 4 and all(
            weight(w) % 2 == 0 for w in product.code.words
        )
    else:
        detail = report.failures[0].witness or "a product failed"
    _verdict(8, ok, detail, time.perf_counter() - start, 60.0)


def test_criterion_09_neighborhood_identity_exhaustive(product_identity):
    start = time.perf_counter()
    report = verify_neighborhood_structure(product_identity, samples=None)
    _verdict(
        9,
        report.passed,
        report.failures[0].witness
        if not report.passed
        else "scanned = structural for all 2048 words x 56 same-half pairs",
        time.perf_counter() - start,
        120.0,
    )


def test_criterion_10_halving_and_switching(partition3):
    start = time.perf_counter()
    report = verify_halving_components(partition3, samples=50, seed=1)
    _verdict(
        10,
        report.passed,
        report.failures[0].witness
        if not report.passed
        else "52 perms x 56 pairs: census {1024,1024} and both switches stay perfect",
        time.perf_counter() - start,
        600.0,
    )


def test_criterion_11_covering_shells(h7, h15):
    start = time.perf_counter()
    bad = None
    for code, n in ((h7, 7), (h15, 15)):
        for i in range(n):
            report = verify_covering_shell(code, i)
            if not report.passed:
                bad = f"n={n}, i={i}: {report.failures[0].name}"
                break
        if bad:
            break
    _verdict(
        11,
        bad is None,
        bad or "rho(I)=rho(I')=3 and shell identity for every i at n=7,15",
        time.perf_counter() - start,
        60.0,
    )


def test_criterion_12_coloring_matrices(h7, h15):
    start = time.perf_counter()
    bad = None
    for code, n in ((h7, 7), (h15, 15)):
        six_expected = expected_six_matrix(n)
        four_expected = expected_four_matrix(n)
        for i in range(n):
            six = verify_perfect_coloring(build_six_coloring(code, i))
            four = verify_perfect_coloring(build_four_coloring(code, i))
            if (six != six_expected).any() or (four != four_expected).any():
                bad = f"n={n}, i={i}"
                break
        if bad:
            break
    _verdict(
        12,
        bad is None,
        bad or "six- and four-coloring matrices match for every i at n=7,15",
        time.perf_counter() - start,
        60.0,
    )


def test_criterion_13_completions(h7, h15):
    start = time.perf_counter()
    bad = None
    for i in range(7):
        report = verify_completions(h7, i, exhaustive=True)
        if not report.passed:
            bad = f"n=7, i={i}: {report.failures[0].name}"
            break
    if bad is None:
        for i in range(15):
            report = verify_completions(h15, i, exhaustive=False)
            if not report.passed:
                bad = f"n=15, i={i}: {report.failures[0].name}"
                break
    _verdict(
        13,
        bad is None,
        bad or "exactly 2 completions at n=7 (exhaustive); both verified at n=15",
        time.perf_counter() - start,
        120.0,
    )


def test_criterion_14_minimal_component():
    start = time.perf_counter()
    bad = None
    for n in (7, 15):
        h = (n - 1) // 2
        mc = minimal_component(n)
        if len(mc) != 1 << h:
            bad = f"n={n}: size {len(mc)}"
            break
        if {w.bit_count() for w in mc} != {h, h + 1}:
            bad = f"n={n}: weights {sorted({w.bit_count() for w in mc})}"
            break
        if not is_i_component(mc, h, n):
            bad = f"n={n}: covering property fails at i={h}"
            break
    _verdict(
        14,
        bad is None,
        bad or "sizes 8/128, weights {(n-1)/2,(n+1)/2}, covering property holds",
        time.perf_counter() - start,
        1.0,
    )


def test_criterion_15_run_all_determinism(tmp_path):
    start = time.perf_counter()
    runner = CliRunner()
    args = ["run-all", "--samples", "2", "--prop1-samples", "30",
            "--seed", "1", "--format", "json"]
    outputs = []
    for run in range(2):
        out = tmp_path / f"report{run}.json"
        result = runner.invoke(main, args + ["--out", str(out)])
        assert result.exit_code == 0, result.output
        outputs.append(out.read_bytes())
        json.loads(outputs[-1])  # schema-stable JSON
    _verdict(
        15,
        outputs[0] == outputs[1],
        "two seeded run-all invocations emit byte-identical JSON",
        time.perf_counter() - start,
        120.0,
    )
