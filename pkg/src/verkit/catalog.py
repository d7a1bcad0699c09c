"""Assembly and cross-validation of one category Ver_{p^n}.

`build` collects everything the rest of the package computes - decomposition
and Cartan matrices by independent routes, blocks, Steinberg labels, exact
and numeric Frobenius-Perron dimensions, Ext^1 adjacency and the stable
Grothendieck ring - into a single record, and `verify_all` runs every
consistency check as a named entry of a VerificationReport.  Checks collect
failures instead of aborting so a regression produces a full differential
report.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import cyclo, digits, grring, tilting
from .errors import BoundExceeded
from .linalg import det, is_positive_definite, permutation_equivalent, smith_normal_form

DEFAULT_BOUND = 2000
INVARIANT_SERIES_DEPTH = 12
FPDIM_TOLERANCE = mpmath.mpf("1e-9")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.checks.append(Check(name, bool(passed), witness))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass
class CategoryData:
    p: int
    n: int
    simples: list[int]
    projectives: list[int]
    proj_of_simple: dict[int, int]
    simple_of_proj: dict[int, int]
    decomposition: np.ndarray
    cartan: np.ndarray
    blocks: list[list[int]]
    block_dets: dict[tuple[int, ...], int]
    dims: dict[int, int]
    fpdim_simples: dict[int, cyclo.CycloInt]
    fpdim_projectives: dict[int, cyclo.CycloInt]
    ext1_edges: list[tuple[int, int]] | None
    stable: dict
    verification: VerificationReport


def cartan_character(p: int, n: int) -> np.ndarray:
    """Cartan matrix through tilting characters: D D^T with D from Weyl rows."""
    rows = list(digits.projective_range(p, n))
    cols = p**n - 1
    D = np.zeros((len(rows), cols), dtype=object)
    for a, i in enumerate(rows):
        for j, c in digits.extended_decomposition_row(p, n, i).items():
            D[a, j] = c
    return D @ D.T


def block_size_classes(p: int, n: int) -> dict[int, int]:
    """Map trailing-zero count of i+1 to the expected size of such blocks."""
    classes = {n - 1: 1}
    for m in range(1, n):
        classes[n - 1 - m] = p ** (m - 1) * (p - 1)
    return classes


def expected_block_det(p: int, n: int, block: list[int]) -> int:
    """Determinant forced by the block's divisibility class."""
    a = block[0] + 1
    tz = 0
    while a % p == 0:
        a //= p
        tz += 1
    if tz == n - 1:
        return 1
    m = n - 1 - tz
    return p ** (p ** (m - 1))


def block_cartan_dets(p: int, n: int) -> dict[tuple[int, ...], int]:
    """Exact determinant of each block's Cartan submatrix."""
    cartan = digits.cartan_descendant(p, n)
    rows = list(digits.projective_range(p, n))
    out = {}
    for block in digits.block_partition(p, n):
        idx = [rows.index(s) for s in block]
        out[tuple(block)] = int(det(cartan[np.ix_(idx, idx)]))
    return out


def stable_gr(p: int, n: int) -> dict:
    """Additive invariants of the stable Grothendieck ring: Cartan cokernel."""
    cartan = digits.cartan_descendant(p, n)
    factors, U, V = smith_normal_form(cartan)
    order = 1
    for f in factors:
        order *= abs(f)
    return {"order": order, "invariant_factors": factors, "U": U, "V": V}


def _brauer_line(size: int) -> np.ndarray:
    M = np.zeros((size, size), dtype=object)
    for i in range(size):
        M[i, i] = 2
        if i + 1 < size:
            M[i, i + 1] = M[i + 1, i] = 1
    return M


def verify_all(p: int, n: int, samples: int = 100, seed: int = 0) -> VerificationReport:
    """Run every consistency check; never raises."""
    report = VerificationReport()
    rows = list(digits.projective_range(p, n))
    pos = {s: a for a, s in enumerate(rows)}
    cartan = digits.cartan_descendant(p, n)

    routes_char = cartan_character(p, n)
    routes_kron = digits.cartan_kronecker(p, n)
    agree = (cartan == routes_char).all() and (cartan == routes_kron).all()
    report.add("cartan_routes_agree", agree, "" if agree else "routes disagree")

    report.add("cartan_symmetric_posdef", is_positive_definite(cartan))

    powers = {0} | {2**m for m in range(n)}
    bad = [(i, j) for i in range(len(rows)) for j in range(len(rows)) if int(cartan[i, j]) not in powers]
    report.add("entries_powers_of_two", not bad, "" if not bad else f"entry at {bad[0]}")

    unit = pos[digits.steinberg_label(p, n, 0)]
    report.add(
        "unit_diagonal_entry",
        int(cartan[unit, unit]) == 2 ** (n - 1),
        f"got {int(cartan[unit, unit])}",
    )

    simples = list(digits.simple_range(p, n))
    report.add("simple_count", len(simples) == p ** (n - 1) * (p - 1))

    blocks = digits.block_partition(p, n)
    report.add("block_count", len(blocks) == n * (p - 1), f"got {len(blocks)}")

    sizes = sorted(len(b) for b in blocks)
    expected_sizes = sorted(
        size for size in block_size_classes(p, n).values() for _ in range(p - 1)
    )
    report.add("block_sizes", sizes == expected_sizes, f"got {sizes}")

    # Group by divisibility class, not raw size: at p=2 the semisimple
    # blocks and the smallest non-semisimple ones both have one member.
    same = True
    witness = ""
    by_size: dict[tuple[int, int], list[list[int]]] = {}
    for b in blocks:
        by_size.setdefault((len(b), expected_block_det(p, n, b)), []).append(b)
    for size, group in by_size.items():
        first = group[0]
        ref = cartan[np.ix_([pos[s] for s in first], [pos[s] for s in first])]
        for other in group[1:]:
            sub = cartan[np.ix_([pos[s] for s in other], [pos[s] for s in other])]
            if permutation_equivalent(ref, sub) is None:
                same = False
                witness = f"blocks {first} vs {other}"
    report.add("same_size_blocks_identical", same, witness)

    if n >= 2:
        ok = True
        witness = ""
        for block in blocks:
            if expected_block_det(p, n, block) == p and len(block) == p - 1:
                sub = cartan[np.ix_([pos[s] for s in block], [pos[s] for s in block])]
                if (sub != _brauer_line(p - 1)).any():
                    ok = False
                    witness = f"block {block}"
        report.add("p2_nonsemisimple_block_is_brauer_line", ok, witness)
    else:
        report.add("p2_nonsemisimple_block_is_brauer_line", True, "no such blocks at n=1")

    report.add("det_total", det(cartan) == p ** (p ** (n - 1) - 1))

    dets = block_cartan_dets(p, n)
    bad_blocks = [b for b, d in dets.items() if d != expected_block_det(p, n, list(b))]
    report.add("det_per_block", not bad_blocks, "" if not bad_blocks else f"block {bad_blocks[0]}")

    ok, wit = cyclo.verify_cd_eq_p(p, n, cartan)
    report.add("cd_eq_p", ok, "" if ok else f"row {wit}")

    total = cyclo.fpdim_category(p, n)
    closed = cyclo.fpdim_category_closed_form(p, n)
    report.add(
        "fpdim_category",
        abs(total - closed) < FPDIM_TOLERANCE,
        f"|{mpmath.nstr(total, 15)} - {mpmath.nstr(closed, 15)}|",
    )

    if p**n > 2:
        x = cyclo.fpdim_simple(p, n, 1)
        at_level = cyclo.chebyshev_Q(p, n)(x)
        below = cyclo.chebyshev_Q(p, n - 1)(x)
        report.add("chebyshev_roots", (not at_level) and bool(below))
    else:
        report.add("chebyshev_roots", True, "no two-dimensional generator in Ver_2")

    depth = INVARIANT_SERIES_DEPTH
    report.add(
        "invariants_series",
        tilting.invariant_dims(p, n, depth) == tilting.series_fn(p, n, depth),
    )

    if p > 2:
        sym = True
        within = True
        witness = ""
        for a in simples:
            for b in simples[a:]:
                e = digits.ext1(p, n, a, b)
                if e != digits.ext1(p, n, b, a) or (a == b and e):
                    sym = False
                    witness = f"({a},{b})"
                if e and digits.block_key(p, n, digits.steinberg_label(p, n, a)) != digits.block_key(
                    p, n, digits.steinberg_label(p, n, b)
                ):
                    within = False
                    witness = f"({a},{b})"
        report.add("ext1_symmetric", sym, witness if not sym else "")
        report.add("ext1_within_blocks", within, witness if not within else "")
    else:
        report.add("ext1_symmetric", True, "p=2 rule not implemented here")
        report.add("ext1_within_blocks", True, "p=2 rule not implemented here")

    bij = all(
        digits.simple_of_projective(p, n, digits.steinberg_label(p, n, i)) == i for i in simples
    ) and all(
        digits.steinberg_label(p, n, digits.simple_of_projective(p, n, s)) == s for s in rows
    )
    report.add("steinberg_bijection", bij)

    if n >= 2:
        covers = all(
            digits.steinberg_label(p, n, p * i)
            == 2 * p - 2 + p * digits.steinberg_label(p, n - 1, i)
            for i in digits.simple_range(p, n - 1)
        )
        report.add("covers_compat", covers)
    else:
        report.add("covers_compat", True, "no smaller category at n=1")

    if p > 2:
        res = grring.check_ring_hom_fusion(p, n, samples=samples, seed=seed)
        report.add(
            "fusion_consistency",
            res["passed"],
            "" if res["passed"] else f"pair {res['counterexample']}",
        )
    else:
        report.add("fusion_consistency", True, "tilting-route check needs odd p")

    return report


def build(
    p: int,
    n: int,
    bound: int = DEFAULT_BOUND,
    samples: int = 100,
    seed: int = 0,
) -> CategoryData:
    """Assemble the full CategoryData record for Ver_{p^n}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    count = p ** (n - 1) * (p - 1)
    if count > bound:
        raise BoundExceeded(f"{count} simple objects exceeds the bound {bound}")

    simples = list(digits.simple_range(p, n))
    projectives = list(digits.projective_range(p, n))
    proj_of_simple = {i: digits.steinberg_label(p, n, i) for i in simples}
    simple_of_proj = {s: digits.simple_of_projective(p, n, s) for s in projectives}

    ext1_edges = None
    if p > 2:
        ext1_edges = [
            (a, b)
            for a in simples
            for b in simples[a + 1 :]
            if digits.ext1(p, n, a, b)
        ]

    stable = stable_gr(p, n)
    return CategoryData(
        p=p,
        n=n,
        simples=simples,
        projectives=projectives,
        proj_of_simple=proj_of_simple,
        simple_of_proj=simple_of_proj,
        decomposition=digits.decomposition_matrix(p, n),
        cartan=digits.cartan_descendant(p, n),
        blocks=digits.block_partition(p, n),
        block_dets=block_cartan_dets(p, n),
        dims={i: cyclo.dim_simple(p, n, i)[0] for i in simples},
        fpdim_simples={i: cyclo.fpdim_simple(p, n, i) for i in simples},
        fpdim_projectives={i: cyclo.fpdim_projective(p, n, i) for i in simples},
        ext1_edges=ext1_edges,
        stable={"order": stable["order"], "invariant_factors": stable["invariant_factors"]},
        verification=verify_all(p, n, samples=samples, seed=seed),
    )
