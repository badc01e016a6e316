"""Command-line front end and the one-shot verification pipeline.

Reports are emitted as text or JSON (sorted keys, no timings unless
requested), so a fixed seed yields byte-identical output.  Exit codes:
0 all checks pass, 1 a verification failed, 2 usage or I/O error.
"""

from __future__ import annotations

import json
import pathlib
import random
import sys

import click

from . import kernels
from .codes import (
    Code,
    brute_force_code,
    extended_hamming,
    hamming_check_sums,
    intersect,
    min_distance,
    overline_h,
    bch_code,
    puncture,
    str_to_word,
    word_to_str,
)
from .coloring import (
    ColoringError,
    build_four_coloring,
    build_six_coloring,
    expected_four_matrix,
    expected_six_matrix,
    verify_half_colorings,
    verify_perfect_coloring,
)
from .components import (
    census as census_of,
    explore_small_radius_components,
    is_i_component,
    minimal_component,
    verify_completions,
    verify_covering_shell,
    verify_halving_components,
)
from .gf import Field, coordinate_order, make_field
from .partition import (
    Partition,
    PartitionInvariantError,
    odd_class_partition,
    pi_split,
    verify_coset_leaders,
    verify_cross_graph,
    verify_low_weight_coset_reps,
    verify_translate_class_separation,
)
from .product import (
    identity_perm,
    parse_perm,
    random_perm,
    doubled_product_code,
    verify_neighborhood_structure,
)
from .report import Report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# code-file I/O (one binary-string word per line, #-prefixed headers)


def write_code(code: Code, stream) -> None:
    stream.write(f"# length: {code.length}\n")
    stream.write(f"# label: {code.label}\n")
    for w in sorted(code.words):
        stream.write(word_to_str(w, code.length) + "\n")


def write_code_file(code: Code, path: pathlib.Path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        write_code(code, fh)


class CodeFileError(ValueError):
    """Malformed code file; message carries the offending line number."""


def parse_code_lines(lines, source: str = "<input>") -> Code:
    length: int | None = None
    label = ""
    words: set[int] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, _, value = body.partition(":")
            key = key.strip().lower()
            value = value.strip()
            if key == "length":
                try:
                    length = int(value)
                except ValueError:
                    raise CodeFileError(
                        f"{source}:{lineno}: bad length header {value!r}"
                    ) from None
            elif key == "label":
                label = value
            continue
        if length is None:
            raise CodeFileError(
                f"{source}:{lineno}: word line before the '# length:' header"
            )
        if len(line) != length:
            raise CodeFileError(
                f"{source}:{lineno}: word has {len(line)} characters, expected {length}"
            )
        try:
            words.add(str_to_word(line))
        except ValueError as exc:
            raise CodeFileError(f"{source}:{lineno}: {exc}") from None
    if length is None:
        raise CodeFileError(f"{source}: missing '# length:' header")
    return Code(length, frozenset(words), label)


def read_code_file(path: pathlib.Path) -> Code:
    with open(path, encoding="ascii") as fh:
        return parse_code_lines(fh, source=str(path))


# ---------------------------------------------------------------------------
# output plumbing


def _resolve(ctx, fmt, out, seed=None):
    root = ctx.obj or {}
    fmt = fmt or root.get("format") or "text"
    out = out if out is not None else root.get("out")
    if seed is None:
        seed = root.get("seed")
    if seed is None:
        seed = 1
    return fmt, out, seed


def _deliver(text: str, out) -> None:
    if out:
        pathlib.Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


def _emit_reports(reports: list[Report], fmt: str, out, timings: bool = False) -> None:
    ok = all(r.passed for r in reports)
    if fmt == "json":
        payload = {
            "reports": [r.to_dict(timings=timings) for r in reports],
            "aggregate": "pass" if ok else "fail",
        }
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = "\n\n".join(r.to_text(timings=timings) for r in reports)
    _deliver(text, out)
    sys.exit(EXIT_PASS if ok else EXIT_FAIL)


def _emit_data(payload: dict, fmt: str, out, text_lines=None) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = "\n".join(text_lines or [json.dumps(payload, indent=2, sort_keys=True)])
    _deliver(text, out)


def _io_guard(fn, *args):
    try:
        return fn(*args)
    except (OSError, CodeFileError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


FMT_OPT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default=None,
    help="Output format (default: text).",
)
OUT_OPT = click.option(
    "--out", type=click.Path(path_type=pathlib.Path), default=None,
    help="Write output to a file instead of stdout.",
)


# ---------------------------------------------------------------------------
# root group


@click.group()
@click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default=None,
    help="Default output format for subcommands.",
)
@click.option("--seed", type=int, default=None, help="Default RNG seed.")
@click.option(
    "--out", type=click.Path(path_type=pathlib.Path), default=None,
    help="Default output file for subcommands.",
)
@click.pass_context
def main(ctx, fmt, seed, out):
    """Build and exhaustively verify small perfect binary codes."""
    if seed is not None and seed < 0:
        raise click.UsageError("--seed must be nonnegative")
    ctx.obj = {"format": fmt, "seed": seed, "out": out}


# ---------------------------------------------------------------------------
# field


@main.group("field")
@click.option("--m", "m", type=int, required=True, help="Extension degree.")
@click.pass_context
def field_group(ctx, m):
    """Finite-field tables."""
    try:
        ctx.obj = dict(ctx.obj or {}, field=make_field(m))
    except ValueError as exc:
        raise click.UsageError(str(exc))


@field_group.command("table")
@FMT_OPT
@OUT_OPT
@click.pass_context
def field_table(ctx, fmt, out):
    """Print the log/antilog tables and the coordinate order."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    f: Field = ctx.obj["field"]
    coords = coordinate_order(f)
    payload = {
        "m": f.m,
        "primitive_poly": f.primitive_poly,
        "antilog": list(f.antilog),
        "log": list(f.log),
        "coordinate_order": list(coords),
    }
    lines = [f"GF(2^{f.m}), defining polynomial {f.primitive_poly:#b}"]
    lines += [f"  a^{t} = {e:0{f.m}b}" for t, e in enumerate(f.antilog)]
    lines.append(
        "coordinate order: " + " ".join(f.element_label(e) for e in coords)
    )
    _emit_data(payload, fmt, out, text_lines=lines)


# ---------------------------------------------------------------------------
# code


@main.group("code")
def code_group():
    """Build code files and inspect their statistics."""


@code_group.command("build")
@click.option("--m", "m", type=int, required=True)
@click.option(
    "--alpha", "alpha_spec", required=True,
    help="Anchor element: an exponent K (meaning a^K) or 'zero'.",
)
@click.option("--parity", type=click.IntRange(0, 1), required=True)
@click.option(
    "--oracle", is_flag=True,
    help="Cross-check the kernel build against full enumeration.",
)
@OUT_OPT
@click.pass_context
def code_build(ctx, m, alpha_spec, parity, oracle, out):
    """Build the code cut out by the parity and cubed-translate checks."""
    _, out, _ = _resolve(ctx, None, out)
    try:
        f = make_field(m)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if alpha_spec.strip().lower() == "zero":
        alpha = 0
    else:
        try:
            alpha = f.antilog[int(alpha_spec) % f.order]
        except ValueError:
            raise click.UsageError(f"bad --alpha value {alpha_spec!r}")
    code = extended_hamming(f, alpha, parity)
    if oracle:
        reference = brute_force_code(
            f.size, hamming_check_sums(f, alpha, parity), code.label
        )
        if reference.words != code.words:
            click.echo("oracle mismatch: kernel build != enumeration", err=True)
            sys.exit(EXIT_FAIL)
    if out:
        _io_guard(write_code_file, code, out)
    else:
        write_code(code, sys.stdout)
    sys.exit(EXIT_PASS)


@code_group.command("stats")
@click.argument("file", type=click.Path(exists=True, path_type=pathlib.Path))
@FMT_OPT
@OUT_OPT
@click.pass_context
def code_stats(ctx, file, fmt, out):
    """Print size, minimum distance, and weight spectrum of a code file."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    code = _io_guard(read_code_file, file)
    dist = min_distance(code) if len(code) >= 2 else None
    spectrum = code.weight_spectrum()
    payload = {
        "label": code.label,
        "length": code.length,
        "size": len(code),
        "min_distance": dist,
        "weight_spectrum": {str(k): v for k, v in spectrum.items()},
    }
    lines = [
        f"label: {code.label}",
        f"length: {code.length}",
        f"size: {len(code)}",
        f"min distance: {dist}",
        "weight spectrum: "
        + " ".join(f"{k}:{v}" for k, v in spectrum.items()),
    ]
    _emit_data(payload, fmt, out, text_lines=lines)


# ---------------------------------------------------------------------------
# partition


def _partition_or_fail(m: int) -> Partition:
    try:
        return odd_class_partition(make_field(m))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    except PartitionInvariantError as exc:
        click.echo(f"partition invariant failed: {exc}", err=True)
        sys.exit(EXIT_FAIL)


def partition_suites(partition: Partition) -> list[Report]:
    """Every class-family verifier, in a fixed order."""
    n = partition.n
    reports = []

    sizes = Report("partition-invariants", {"m": partition.field.m})
    class_size = 1 << (n - partition.field.m - 1)
    sizes.add(
        "class-sizes",
        all(len(c) == class_size for c in partition.odd),
        witness=f"expected {class_size}",
    )
    union = set().union(*(c.words for c in partition.odd))
    sizes.add(
        "odd-classes-tile-odd-words",
        len(union) == 1 << (n - 1)
        and len(union) == sum(len(c) for c in partition.odd),
    )
    expected = 1 << (n - 2 * partition.field.m)
    sizes.add(
        "even-intersections",
        all(
            len(partition.even[i].words & partition.even[j].words) == expected
            for i in range(n)
            for j in range(i + 1, n)
        ),
        witness=f"expected {expected}",
    )
    reports.append(sizes)

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    splits = Report("intersection-structure", {"pairs": len(pairs)})
    for i, j in pairs:
        try:
            split = pi_split(partition, i, j)
            ok = (
                i in split.pi0
                and j in split.pi1
                and not (split.pi0 & split.pi1)
                and split.pi0 | split.pi1 == set(range(n))
            )
            splits.add(f"({i},{j})/quadruple-split", ok)
        except PartitionInvariantError as exc:
            splits.add(f"({i},{j})/quadruple-split", False, witness=str(exc))
    reports.append(splits)

    leaders = Report("coset-leaders", {"pairs": len(pairs)})
    for i, j in pairs:
        leaders.extend(verify_coset_leaders(partition, i, j))
    reports.append(leaders)

    reps = Report("low-weight-coset-reps", {"pairs": len(pairs)})
    for i, j in pairs:
        reps.extend(verify_low_weight_coset_reps(partition, i, j))
    reports.append(reps)

    graphs = Report("cross-graphs", {"pairs": len(pairs)})
    for k, l in pairs:
        graphs.extend(verify_cross_graph(partition, k, l))
    reports.append(graphs)

    separation = Report("translate-class-separation", {"classes": n})
    for k in range(n):
        for r, s in pairs:
            separation.extend(verify_translate_class_separation(partition, k, r, s))
    reports.append(separation)

    return reports


@main.group("partition")
def partition_group():
    """The family of codes tiling the odd-weight words."""


@partition_group.command("build")
@click.option("--m", "m", type=int, required=True)
@click.option(
    "--dump", type=click.Path(path_type=pathlib.Path), default=None,
    help="Directory receiving one code file per class.",
)
@click.pass_context
def partition_build(ctx, m, dump):
    """Build and validate the class family; optionally dump class files."""
    partition = _partition_or_fail(m)
    if dump:
        _io_guard(lambda p: p.mkdir(parents=True, exist_ok=True), dump)
        for k in range(partition.n):
            _io_guard(write_code_file, partition.odd[k], dump / f"odd_{k:02d}.code")
            _io_guard(write_code_file, partition.even[k], dump / f"even_{k:02d}.code")
    click.echo(
        f"built {partition.n} odd classes of {len(partition.odd[0])} words "
        f"(m={m}); all invariants hold"
    )
    sys.exit(EXIT_PASS)


@partition_group.command("verify")
@click.option("--m", "m", type=int, required=True)
@FMT_OPT
@OUT_OPT
@click.pass_context
def partition_verify(ctx, m, fmt, out):
    """Run every class-family verifier and report pass/fail per check."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    partition = _partition_or_fail(m)
    if partition.field.m != 3:
        raise click.UsageError(
            "the intersection-structure suites are specific to m=3"
        )
    _emit_reports(partition_suites(partition), fmt, out)


# ---------------------------------------------------------------------------
# product


def _perm_from_options(n: int, perm_spec: str | None, perm_seed: int | None):
    if perm_spec is not None and perm_seed is not None:
        raise click.UsageError("--perm and --perm-seed are mutually exclusive")
    if perm_seed is not None:
        return random_perm(n, random.Random(perm_seed))
    if perm_spec is None:
        return identity_perm(n)
    try:
        return parse_perm(perm_spec, n)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.group("product")
def product_group():
    """Doubled product codes over the class family."""


@product_group.command("build")
@click.option("--m", "m", type=int, default=3, show_default=True)
@click.option("--perm", "perm_spec", default=None,
              help="'identity', 'reversal', or space-separated images.")
@click.option("--perm-seed", type=int, default=None,
              help="Draw a random block permutation from this seed.")
@OUT_OPT
@click.pass_context
def product_build(ctx, m, perm_spec, perm_seed, out):
    """Build the doubled product code for a block permutation."""
    _, out, _ = _resolve(ctx, None, out)
    partition = _partition_or_fail(m)
    perm = _perm_from_options(partition.n, perm_spec, perm_seed)
    try:
        product = doubled_product_code(partition, perm)
    except ValueError as exc:
        click.echo(f"product construction failed: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    if out:
        _io_guard(write_code_file, product.code, out)
    else:
        write_code(product.code, sys.stdout)
    sys.exit(EXIT_PASS)


@product_group.command("verify-prop1")
@click.option("--m", "m", type=int, default=3, show_default=True)
@click.option("--perm", "perm_spec", default=None)
@click.option("--perm-seed", type=int, default=None)
@click.option("--exhaustive", is_flag=True,
              help="Check every (word, same-half pair) combination.")
@click.option("--samples", type=int, default=None,
              help="Number of sampled (word, pair) combinations.")
@click.option("--seed", type=int, default=None)
@FMT_OPT
@OUT_OPT
@click.pass_context
def product_verify_prop1(ctx, m, perm_spec, perm_seed, exhaustive, samples,
                         seed, fmt, out):
    """Scanned distance-4 neighborhoods equal the structural formula."""
    fmt, out, seed = _resolve(ctx, fmt, out, seed)
    if exhaustive and samples is not None:
        raise click.UsageError("--exhaustive and --samples are mutually exclusive")
    if not exhaustive and samples is None:
        samples = 500
    partition = _partition_or_fail(m)
    perm = _perm_from_options(partition.n, perm_spec, perm_seed)
    product = doubled_product_code(partition, perm)
    report = verify_neighborhood_structure(
        product, samples=None if exhaustive else samples, seed=seed
    )
    _emit_reports([report], fmt, out)


# ---------------------------------------------------------------------------
# components


@main.group("components")
def components_group():
    """Component censuses and switching verifiers."""


def _reference_perfect_code(n: int) -> Code:
    if n == 7:
        return puncture(overline_h(make_field(3)), 0)
    if n == 15:
        return puncture(overline_h(make_field(4)), 0)
    raise click.UsageError("reference perfect codes exist for n in {7, 15}")


@components_group.command("census")
@click.argument("file", type=click.Path(exists=True, path_type=pathlib.Path))
@click.option("--pair", type=int, nargs=2, default=None,
              help="Coordinate pair I J.")
@click.option("--all-pairs", is_flag=True)
@click.option("--homogeneous-only", is_flag=True,
              help="With --all-pairs: restrict to same-half pairs.")
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_census(ctx, file, pair, all_pairs, homogeneous_only, fmt, out):
    """Component-size multiset of a code file under pair adjacency."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    if bool(pair) == all_pairs:
        raise click.UsageError("give exactly one of --pair I J or --all-pairs")
    code = _io_guard(read_code_file, file)
    n = code.length
    if pair:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n and i != j):
            raise click.UsageError(f"bad coordinate pair {pair} for length {n}")
        pairs = [tuple(pair)]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        if homogeneous_only:
            if n % 2:
                raise click.UsageError(
                    "--homogeneous-only needs an even-length (doubled) code"
                )
            h = n // 2
            pairs = [(i, j) for i, j in pairs if (i < h) == (j < h)]
    entries = []
    for i, j in pairs:
        c = census_of(code, i, j)
        entries.append({"pair": [i, j], "sizes": list(c.sizes)})
    payload = {"file": str(file), "label": code.label, "census": entries}
    lines = [f"census of {code.label or file} (length {n})"]
    lines += [f"  pair {e['pair']}: sizes {e['sizes']}" for e in entries]
    _emit_data(payload, fmt, out, text_lines=lines)


@components_group.command("theorem1")
@click.option("--m", "m", type=int, default=3, show_default=True)
@click.option("--samples", type=int, default=50, show_default=True,
              help="Number of random block permutations to test.")
@click.option("--seed", type=int, default=None)
@click.option("--exhaustive", is_flag=True,
              help="Test every block permutation (slow).")
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_theorem1(ctx, m, samples, seed, exhaustive, fmt, out):
    """Every doubled product splits into two switchable half components."""
    fmt, out, seed = _resolve(ctx, fmt, out, seed)
    if m != 3:
        raise click.UsageError("the halving suite runs at m=3")
    partition = _partition_or_fail(m)
    report = verify_halving_components(
        partition, samples=samples, seed=seed, exhaustive=exhaustive
    )
    _emit_reports([report], fmt, out)


@components_group.command("prop3")
@click.option("--n", "n", type=click.Choice(["7", "15"]), required=True)
@click.option("--i", "i", type=int, required=True)
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_prop3(ctx, n, i, fmt, out):
    """Covering radii of the i-even halves and the distance-3 shell."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    n = int(n)
    if not 0 <= i < n:
        raise click.UsageError(f"coordinate {i} out of range for length {n}")
    code = _reference_perfect_code(n)
    _emit_reports([verify_covering_shell(code, i)], fmt, out)


@components_group.command("corollary5")
@click.option("--n", "n", type=click.Choice(["7", "15"]), default="7",
              show_default=True)
@click.option("--i", "i", type=int, required=True)
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_corollary5(ctx, n, i, fmt, out):
    """The odd half completes the even half in exactly two ways."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    n = int(n)
    if not 0 <= i < n:
        raise click.UsageError(f"coordinate {i} out of range for length {n}")
    code = _reference_perfect_code(n)
    _emit_reports([verify_completions(code, i)], fmt, out)


@components_group.command("minimal")
@click.option("--n", "n", type=int, required=True)
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_minimal(ctx, n, fmt, out):
    """Size, weights, and covering property of the smallest component."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    try:
        words = minimal_component(n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    report = minimal_component_report(n, words)
    _emit_reports([report], fmt, out)


def minimal_component_report(n: int, words=None) -> Report:
    if words is None:
        words = minimal_component(n)
    h = (n - 1) // 2
    weights = sorted({w.bit_count() for w in words})
    report = Report("minimal-component", {"n": n})
    report.add("size", len(words) == 1 << h, witness=f"{len(words)} words")
    report.add(
        "weights",
        weights == [h, h + 1],
        witness=f"weights {weights}",
    )
    report.add(
        "covers-like-its-translate",
        is_i_component(words, h, n),
        witness=f"i={h}",
    )
    return report


@components_group.command("explore-rho3")
@FMT_OPT
@OUT_OPT
@click.pass_context
def components_explore_rho3(ctx, fmt, out):
    """Survey covering radii of single-flip components (reports only)."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    findings = explore_small_radius_components(7)
    lines = [f"components of the length-7 reference code ({findings['note']})"]
    lines += [
        f"  i={r['i']} size={r['size']} rho={r['covering_radius']}"
        f" half-code={r['is_half_code']}"
        for r in findings["components"]
    ]
    lines.append(f"rho=3 components all half-code: {findings['rho3_all_half_code']}")
    _emit_data(findings, fmt, out, text_lines=lines)


# ---------------------------------------------------------------------------
# coloring


@main.group("coloring")
def coloring_group():
    """Equitable colorings derived from code halves."""


@coloring_group.command("verify")
@click.option("--n", "n", type=click.Choice(["7", "15"]), required=True)
@click.option("--i", "i", type=int, required=True)
@click.option("--colors", type=click.Choice(["4", "6"]), required=True)
@FMT_OPT
@OUT_OPT
@click.pass_context
def coloring_verify(ctx, n, i, colors, fmt, out):
    """Verify equitability and compare against the expected matrix."""
    fmt, out, _ = _resolve(ctx, fmt, out)
    n, colors = int(n), int(colors)
    if not 0 <= i < n:
        raise click.UsageError(f"coordinate {i} out of range for length {n}")
    code = _reference_perfect_code(n)
    builder = build_six_coloring if colors == 6 else build_four_coloring
    expected = expected_six_matrix(n) if colors == 6 else expected_four_matrix(n)
    report = Report("coloring", {"n": n, "i": i, "colors": colors})
    try:
        matrix = verify_perfect_coloring(builder(code, i))
        report.add(
            f"i={i}/{colors}-coloring-matrix",
            (matrix == expected).all(),
            witness=str(matrix.tolist()),
        )
    except ColoringError as exc:
        report.add(f"i={i}/{colors}-coloring-matrix", False, witness=str(exc))
    _emit_reports([report], fmt, out)


# ---------------------------------------------------------------------------
# run-all


def gf_suite() -> Report:
    report = Report("field-tables", {"degrees": [3, 4]})
    for m in (3, 4):
        f = make_field(m)
        report.add(
            f"m={m}/antilog-permutes-nonzero",
            sorted(f.antilog) == list(range(1, f.size)),
        )
        report.add(
            f"m={m}/alpha-order",
            f.pow(f.alpha, f.order) == 1
            and all(f.pow(f.alpha, t) != 1 for t in range(1, f.order)),
        )
        coords = coordinate_order(f)
        report.add(
            f"m={m}/coordinate-order",
            coords[0] == 0 and list(coords[1:]) == list(f.antilog),
        )
    return report


def oracle_suite() -> Report:
    """Kernel-built codes equal full enumeration, and the two-code
    intersection identity holds, at both field degrees."""
    report = Report("code-oracles", {"degrees": [3, 4]})
    for m in (3, 4):
        f = make_field(m)
        mismatch = None
        for alpha in coordinate_order(f):
            for p in (0, 1):
                built = extended_hamming(f, alpha, p)
                oracle = brute_force_code(f.size, hamming_check_sums(f, alpha, p))
                if built.words != oracle.words:
                    mismatch = f"alpha={f.element_label(alpha)}, p={p}"
                    break
            if mismatch:
                break
        report.add(f"m={m}/kernel-equals-enumeration", mismatch is None,
                   witness=mismatch)
        hbar = overline_h(f)
        bch = bch_code(f)
        bad = None
        for alpha in coordinate_order(f):
            inter = intersect(hbar, extended_hamming(f, alpha, 0))
            if inter.words != bch.words:
                bad = f"alpha={f.element_label(alpha)}"
                break
        report.add(f"m={m}/pairwise-intersection-is-triple-check", bad is None,
                   witness=bad)
    return report


def m4_partial_suite() -> Report:
    """The class-family facts that survive at m=4: class sizes and
    even-intersection sizes (the odd classes do not tile there)."""
    from .partition import build_classes

    f = make_field(4)
    odd, even = build_classes(f)
    n = f.size
    report = Report("m4-class-family", {"m": 4})
    report.add(
        "class-sizes-2048",
        all(len(c) == 2048 for c in odd) and all(len(c) == 2048 for c in even),
    )
    expected = 1 << (n - 2 * f.m)
    bad = None
    for i in range(n):
        for j in range(i + 1, n):
            got = len(even[i].words & even[j].words)
            if got != expected:
                bad = f"({i},{j}) size {got}"
                break
        if bad:
            break
    report.add(f"even-intersections-{expected}", bad is None, witness=bad)
    return report


def product_suite(partition: Partition, samples: int, seed: int) -> Report:
    """Identity plus seeded random block permutations all give codes of
    the right size that pass the extended-perfect test."""
    report = Report("product-codes", {"samples": samples, "seed": seed})
    rng = random.Random(seed)
    perms = [("identity", identity_perm(partition.n))]
    perms += [(f"random-{t}", random_perm(partition.n, rng)) for t in range(samples)]
    half = len(partition.odd[0])
    expected = partition.n * half * half
    bad = None
    for name, perm in perms:
        try:
            product = doubled_product_code(partition, perm)
        except ValueError as exc:
            bad = f"{name}: {exc}"
            break
        if len(product.code) != expected:
            bad = f"{name}: size {len(product.code)}"
            break
    report.add("all-perms-extended-perfect", bad is None, witness=bad)
    return report


def coloring_suite(ns=(7, 15)) -> Report:
    report = Report("half-colorings", {"lengths": list(ns)})
    for n in ns:
        code = _reference_perfect_code(n)
        for i in range(n):
            report.extend(verify_half_colorings(code, i))
    return report


def covering_suite(ns=(7, 15)) -> Report:
    report = Report("covering-shells", {"lengths": list(ns)})
    for n in ns:
        code = _reference_perfect_code(n)
        for i in range(n):
            report.extend(verify_covering_shell(code, i))
    return report


def completion_suite() -> Report:
    report = Report("completions", {"lengths": [7, 15]})
    code7 = _reference_perfect_code(7)
    for i in range(7):
        report.extend(verify_completions(code7, i))
    code15 = _reference_perfect_code(15)
    for i in range(15):
        report.extend(verify_completions(code15, i))
    return report


def run_all_reports(
    samples: int = 50,
    seed: int = 1,
    prop1_samples: int | None = 500,
) -> list[Report]:
    """The full verification pipeline in dependency order.

    `prop1_samples=None` makes the neighborhood-structure check
    exhaustive over all words and same-half pairs.
    """
    kernels.warmup()
    reports = [gf_suite(), oracle_suite(), m4_partial_suite()]
    partition = odd_class_partition(make_field(3))
    reports += partition_suites(partition)
    reports.append(product_suite(partition, samples=samples, seed=seed))
    product = doubled_product_code(partition, identity_perm(partition.n))
    reports.append(
        verify_neighborhood_structure(product, samples=prop1_samples, seed=seed)
    )
    reports.append(
        verify_halving_components(partition, samples=samples, seed=seed)
    )
    reports.append(covering_suite())
    reports.append(completion_suite())
    reports.append(minimal_component_report(7))
    reports.append(minimal_component_report(15))
    reports.append(coloring_suite())
    return reports


@main.command("run-all")
@click.option("--samples", type=int, default=50, show_default=True,
              help="Random block permutations per sampled suite.")
@click.option("--seed", type=int, default=None)
@click.option("--prop1-samples", type=int, default=500, show_default=True,
              help="Sampled neighborhood checks; 0 means exhaustive.")
@click.option("--timings", is_flag=True, help="Include timings in the output.")
@FMT_OPT
@OUT_OPT
@click.pass_context
def run_all(ctx, samples, seed, prop1_samples, timings, fmt, out):
    """Run every verifier in dependency order and aggregate the result."""
    fmt, out, seed = _resolve(ctx, fmt, out, seed)
    if samples < 0 or prop1_samples < 0:
        raise click.UsageError("sample counts must be nonnegative")
    reports = run_all_reports(
        samples=samples,
        seed=seed,
        prop1_samples=prop1_samples or None,
    )
    _emit_reports(reports, fmt, out, timings=timings)


if __name__ == "__main__":
    main()
