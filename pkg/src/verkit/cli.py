"""Command-line front end.

Every command computes (or loads from the JSON cache) the CategoryData of
one Ver_{p^n} and emits a deterministic document in json, csv or text form.
Text tables use the L_i / P_i / T_m notation of the printed tables so golden
diffs stay readable; csv is restricted to matrix payloads.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import json
import os
import tempfile

import click
import mpmath
import numpy as np

from . import catalog, digits, grring, tilting
from .charring import dim_at_one

SCHEMA_VERSION = 1
NUMERIC_DIGITS = 20


# ---------------------------------------------------------------------------
# serialization


def _nstr(x) -> str:
    return mpmath.nstr(x, NUMERIC_DIGITS)


def _matrix_payload(rows: list[str], cols: list[str], M) -> dict:
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[int(M[i, j]) for j in range(len(cols))] for i in range(len(rows))],
    }


def category_payload(data: catalog.CategoryData, samples: int, seed: int) -> dict:
    p, n = data.p, data.n
    fpdim = []
    for i in data.simples:
        fs = data.fpdim_simples[i]
        fp = data.fpdim_projectives[i]
        fpdim.append(
            {
                "label": i,
                "simple_coeffs": list(fs.coeffs),
                "simple_numeric": _nstr(fs.numeric_real()),
                "projective_coeffs": list(fp.coeffs),
                "projective_numeric": _nstr(fp.numeric_real()),
            }
        )
    return {
        "p": p,
        "n": n,
        "schema_version": SCHEMA_VERSION,
        "simples": data.simples,
        "steinberg": [[i, data.proj_of_simple[i]] for i in data.simples],
        "dims": [[i, data.dims[i]] for i in data.simples],
        "decomposition": _matrix_payload(
            [f"T{i}" for i in data.projectives],
            [f"W{j}" for j in range(p**n - 1)],
            data.decomposition,
        ),
        "cartan": _matrix_payload(
            [f"T{i}" for i in data.projectives],
            [f"T{i}" for i in data.projectives],
            data.cartan,
        ),
        "blocks": [
            {
                "projectives": block,
                "simples": [data.simple_of_proj[s] for s in block],
                "size": len(block),
                "det": data.block_dets[tuple(block)],
            }
            for block in data.blocks
        ],
        "fpdim": fpdim,
        "stable": data.stable,
        "ext1": data.ext1_edges,
        "verification": {
            "samples": samples,
            "seed": seed,
            "all_passed": data.verification.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in data.verification.checks
            ],
        },
    }


# ---------------------------------------------------------------------------
# cache


def _cache_dir(explicit: str | None) -> str:
    if explicit:
        return explicit
    env = os.environ.get("VERKIT_CACHE_DIR")
    if env:
        return env
    xdg = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
    return os.path.join(xdg, "verkit")


def _cache_path(cache_dir: str, p: int, n: int) -> str:
    return os.path.join(cache_dir, f"verpn_{p}_{n}_v{SCHEMA_VERSION}.json")


def _atomic_write(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_or_build(p: int, n: int, cache_dir: str | None, samples: int, seed: int) -> dict:
    """Cached category payload; rebuilt when the verification knobs differ."""
    path = _cache_path(_cache_dir(cache_dir), p, n)
    if os.path.exists(path):
        try:
            with open(path) as handle:
                payload = json.load(handle)
        except (OSError, json.JSONDecodeError):
            payload = None
        if (
            payload
            and payload.get("schema_version") == SCHEMA_VERSION
            and payload.get("verification", {}).get("samples") == samples
            and payload.get("verification", {}).get("seed") == seed
        ):
            return payload
    data = catalog.build(p, n, samples=samples, seed=seed)
    payload = category_payload(data, samples, seed)
    _atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return payload


# ---------------------------------------------------------------------------
# output


def _document(kind: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "payload": payload}


def _emit(doc: dict, fmt: str, output: str | None, text_renderer, check_roundtrip: bool) -> None:
    if fmt == "json":
        body = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if check_roundtrip and json.loads(body) != doc:
            raise click.ClickException("JSON round-trip mismatch")
    elif fmt == "csv":
        payload = doc["payload"]
        if not (isinstance(payload, dict) and "entries" in payload):
            raise click.UsageError("csv output is only defined for matrix payloads")
        lines = ["," + ",".join(payload["cols"])]
        for label, row in zip(payload["rows"], payload["entries"]):
            lines.append(label + "," + ",".join(str(v) for v in row))
        body = "\n".join(lines) + "\n"
    else:
        body = text_renderer(doc["payload"])
        if not body.endswith("\n"):
            body += "\n"
    if output:
        _atomic_write(os.path.abspath(output), body)
    else:
        click.echo(body, nl=False)


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


def fold_text(p: int, n: int, v: grring.GrElement) -> str:
    """Render a class the way the worked tables do: simples then projectives."""
    simples, projectives, _ = grring.fold_projectives(p, n, v)
    parts = [f"{c if c > 1 else ''}L{i}" for i, c in sorted(simples.items())]
    parts += [f"{c if c > 1 else ''}P{i}" for i, c in sorted(projectives.items())]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# click plumbing


def _common(f):
    f = click.option("-p", "prime", type=int, required=True, help="Prime p.")(f)
    f = click.option("-n", "level", type=int, required=True, help="Level n >= 1.")(f)
    f = click.option(
        "--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text"
    )(f)
    f = click.option("--output", type=click.Path(), default=None)(f)
    f = click.option("--cache-dir", type=click.Path(), default=None)(f)
    f = click.option("--samples", type=int, default=100, show_default=True)(f)
    f = click.option("--rng-seed", "seed", type=int, default=0, show_default=True)(f)
    f = click.option("--check-roundtrip", is_flag=True, default=False)(f)
    return f


def _validated(prime: int, level: int) -> None:
    if not catalog.is_prime(prime):
        raise click.UsageError(f"{prime} is not a prime")
    if level < 1:
        raise click.UsageError(f"level must be >= 1, got {level}")
    if prime ** (level - 1) * (prime - 1) > catalog.DEFAULT_BOUND:
        raise click.UsageError("category exceeds the build bound")


@click.group()
def main() -> None:
    """Exact invariants of the symmetric tensor categories Ver_{p^n}."""


@main.command()
@_common
def report(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip):
    """Full category report; exit 1 when a verification check fails."""
    _validated(prime, level)
    payload = load_or_build(prime, level, cache_dir, samples, seed)

    def render(pl: dict) -> str:
        lines = [f"Ver_{{{prime}^{level}}}: {len(pl['simples'])} simple objects"]
        lines.append("")
        lines.append("correspondence (simple <-> projective cover):")
        pairs = [[f"L{i}" for i, _ in pl["steinberg"]], [f"T{s}" for _, s in pl["steinberg"]]]
        lines.append(_grid(pairs))
        lines.append("")
        lines.append("cartan matrix:")
        lines.append(
            _grid(
                [[""] + pl["cartan"]["cols"]]
                + [
                    [r] + [str(v) for v in row]
                    for r, row in zip(pl["cartan"]["rows"], pl["cartan"]["entries"])
                ]
            )
        )
        lines.append("")
        lines.append("blocks:")
        for b in pl["blocks"]:
            members = ", ".join(f"T{s}" for s in b["projectives"])
            lines.append(f"  size {b['size']}, det {b['det']}: {members}")
        lines.append("")
        lines.append("fpdims of simples:")
        for entry in pl["fpdim"]:
            lines.append(f"  L{entry['label']}: {entry['simple_numeric']}")
        lines.append("")
        order = pl["stable"]["order"]
        lines.append(f"stable Grothendieck ring: order {order}")
        lines.append("")
        lines.append("verification:")
        for c in pl["verification"]["checks"]:
            status = "pass" if c["passed"] else f"FAIL ({c['witness']})"
            lines.append(f"  {c['name']}: {status}")
        return "\n".join(lines)

    _emit(_document("category_report", payload), fmt, output, render, check_roundtrip)
    if not payload["verification"]["all_passed"]:
        raise SystemExit(1)


@main.command()
@_common
@click.option("-a", "label_a", type=int, required=True)
@click.option("-b", "label_b", type=int, required=True)
def fuse(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip, label_a, label_b):
    """Tensor product of two simples, raw vector plus folded presentation."""
    _validated(prime, level)
    top = prime ** (level - 1) * (prime - 1)
    if not (0 <= label_a < top and 0 <= label_b < top):
        raise click.UsageError(f"labels must lie in [0, {top - 1}]")
    v = grring.fuse_simples(prime, level, label_a, label_b)
    simples, projectives, _ = grring.fold_projectives(prime, level, v)
    payload = {
        "p": prime,
        "n": level,
        "a": label_a,
        "b": label_b,
        "vector": list(v.coeffs),
        "folded": {
            "simples": sorted(simples.items()),
            "projectives": sorted(projectives.items()),
            "text": fold_text(prime, level, v),
        },
    }

    def render(pl: dict) -> str:
        return (
            f"L{label_a} (x) L{label_b} = {pl['folded']['text']}\n"
            f"vector {tuple(pl['vector'])}"
        )

    _emit(_document("fusion_product", payload), fmt, output, render, check_roundtrip)


@main.command()
@_common
@click.option("--even-only", is_flag=True, default=False)
def table(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip, even_only):
    """Full tensor table of simple objects."""
    _validated(prime, level)
    labels = [i for i in digits.simple_range(prime, level) if not even_only or i % 2 == 0]
    cells = []
    for a in labels:
        row = []
        for b in labels:
            v = grring.fuse_simples(prime, level, a, b)
            row.append({"vector": list(v.coeffs), "text": fold_text(prime, level, v)})
        cells.append(row)
    payload = {"p": prime, "n": level, "labels": labels, "cells": cells}

    def render(pl: dict) -> str:
        head = [""] + [f"L{b}" for b in pl["labels"]]
        rows = [head]
        for a, row in zip(pl["labels"], pl["cells"]):
            rows.append([f"L{a}"] + [cell["text"] for cell in row])
        return _grid(rows)

    _emit(_document("fusion_table", payload), fmt, output, render, check_roundtrip)


def _matrix_command(name: str, help_text: str):
    def register(builder):
        @main.command(name=name, help=help_text)
        @_common
        @click.option("--even-only", is_flag=True, default=False)
        def cmd(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip, even_only):
            _validated(prime, level)
            payload = builder(prime, level, even_only)

            def render(pl: dict) -> str:
                return _grid(
                    [[""] + pl["cols"]]
                    + [[r] + [str(v) for v in row] for r, row in zip(pl["rows"], pl["entries"])]
                )

            _emit(_document("matrix", payload), fmt, output, render, check_roundtrip)

        return cmd

    return register


def _cartan_payload(p: int, n: int, even_only: bool) -> dict:
    cartan = digits.cartan_descendant(p, n)
    rows = list(digits.projective_range(p, n))
    if not even_only:
        return _matrix_payload([f"T{i}" for i in rows], [f"T{i}" for i in rows], cartan)
    pos = {s: a for a, s in enumerate(rows)}
    order: list[int] = []
    for block in digits.block_partition(p, n):
        members = [digits.simple_of_projective(p, n, s) for s in block]
        if members[0] % 2 == 0:
            order.extend(sorted(members))
    idx = [pos[digits.steinberg_label(p, n, i)] for i in order]
    sub = cartan[np.ix_(idx, idx)]
    labels = [f"L{i}" for i in order]
    return _matrix_payload(labels, labels, sub)


_matrix_command("cartan", "Cartan matrix (use --even-only for the even-part block order).")(
    _cartan_payload
)


def _decomp_payload(p: int, n: int, even_only: bool) -> dict:
    D = digits.decomposition_matrix(p, n)
    rows = [f"T{i}" for i in digits.projective_range(p, n)]
    cols = [f"W{j}" for j in range(p**n - 1)]
    return _matrix_payload(rows, cols, D)


_matrix_command("decomp", "Decomposition matrix (tilting rows, Weyl columns).")(_decomp_payload)


@main.command()
@_common
def blocks(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip):
    """Block partition with sizes and Cartan determinants."""
    _validated(prime, level)
    dets = catalog.block_cartan_dets(prime, level)
    payload = {
        "p": prime,
        "n": level,
        "blocks": [
            {
                "projectives": list(block),
                "simples": [digits.simple_of_projective(prime, level, s) for s in block],
                "size": len(block),
                "det": dets[tuple(block)],
            }
            for block in digits.block_partition(prime, level)
        ],
    }

    def render(pl: dict) -> str:
        lines = []
        for b in pl["blocks"]:
            members = ", ".join(
                f"T{s} (L{i})" for s, i in zip(b["projectives"], b["simples"])
            )
            lines.append(f"size {b['size']}, det {b['det']}: {members}")
        return "\n".join(lines)

    _emit(_document("block_report", payload), fmt, output, render, check_roundtrip)


@main.command()
@_common
def ext1(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip):
    """Ext^1 adjacency between simples (odd p only)."""
    _validated(prime, level)
    if prime == 2:
        raise click.UsageError("Ext^1 adjacency is only computed for odd p")
    edges = [
        [a, b]
        for a in digits.simple_range(prime, level)
        for b in digits.simple_range(prime, level)
        if a < b and digits.ext1(prime, level, a, b)
    ]
    payload = {"p": prime, "n": level, "edges": edges}

    def render(pl: dict) -> str:
        if not pl["edges"]:
            return "no extensions"
        return "\n".join(f"L{a} -- L{b}" for a, b in pl["edges"])

    _emit(_document("ext1", payload), fmt, output, render, check_roundtrip)


@main.command()
@_common
@click.option("-M", "depth", type=int, default=12, show_default=True)
def invariants(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip, depth):
    """Invariant dimensions in tensor powers, by both routes."""
    _validated(prime, level)
    if depth < 0:
        raise click.UsageError("M must be >= 0")
    tensor_route = tilting.invariant_dims(prime, level, depth)
    series_route = tilting.series_fn(prime, level, depth)
    payload = {
        "p": prime,
        "n": level,
        "M": depth,
        "tensor_route": tensor_route,
        "series_route": series_route,
        "equal": tensor_route == series_route,
    }

    def render(pl: dict) -> str:
        return (
            f"tensor route: {pl['tensor_route']}\n"
            f"series route: {pl['series_route']}\n"
            f"equal: {pl['equal']}"
        )

    _emit(_document("series", payload), fmt, output, render, check_roundtrip)
    if not payload["equal"]:
        raise SystemExit(1)


@main.command(name="tilting")
@_common
@click.option("-m", "index", type=int, required=True)
def tilting_cmd(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip, index):
    """Weyl factors, dimension and character of one tilting module."""
    _validated(prime, level)
    if not 0 <= index <= prime**level - 2:
        raise click.UsageError(f"tilting index must lie in [0, {prime**level - 2}]")
    char = tilting.tilting_char(prime, index)
    payload = {
        "p": prime,
        "n": level,
        "m": index,
        "weyl_factors": sorted(digits.extended_decomposition_row(prime, level, index).items()),
        "dim": dim_at_one(char),
        "projective": index in digits.projective_range(prime, level),
        "character": sorted(char.coeffs.items()),
    }

    def render(pl: dict) -> str:
        factors = " + ".join(f"{c if c > 1 else ''}W{j}" for j, c in pl["weyl_factors"])
        status = "projective" if pl["projective"] else "not projective"
        return f"T{pl['m']} = {factors}, dim {pl['dim']}, {status} in Ver_{{{prime}^{level}}}"

    _emit(_document("tilting_module", payload), fmt, output, render, check_roundtrip)


@main.command()
@_common
def verify(prime, level, fmt, output, cache_dir, samples, seed, check_roundtrip):
    """Run the verification suite; exit 1 on any failure."""
    _validated(prime, level)
    payload = load_or_build(prime, level, cache_dir, samples, seed)["verification"]

    def render(pl: dict) -> str:
        lines = []
        for c in pl["checks"]:
            status = "pass" if c["passed"] else f"FAIL ({c['witness']})"
            lines.append(f"{c['name']}: {status}")
        lines.append("all passed" if pl["all_passed"] else "FAILURES PRESENT")
        return "\n".join(lines)

    _emit(_document("verification", payload), fmt, output, render, check_roundtrip)
    if not payload["all_passed"]:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
