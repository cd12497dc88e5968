"""Acceptance checks 1-15, shared by ``combquot verify-paper`` and the test suite.

Each check returns a :class:`CriterionResult`; nothing here loosens a tolerance
to make a check pass.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import birational as bir
from .catalog import (
    REFERENCE_GALE_GR_5_2,
    ChartSpec,
    chart_weights,
    diagonal_action_projection,
    expected_gale,
    product_fan,
    projective_space_fan,
    standard_fan,
)
from .linalg import hnf, identity, matmul, same_row_lattice, same_row_space, transposed_gale_dual
from .polyhedral import Fan, fan_isomorphic, fan_report, fans_equal, is_coarsening, normal_fan
from .quotients import (
    WeightSystem,
    check_certificate,
    chow_polytope,
    git_chambers,
    git_quotient_fan,
    is_fully_definite,
    quotient_fan,
    quotient_fan_general,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.title} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "details": self.details, "seconds": round(self.seconds, 3)}


def _qfan(family: str, n: int = 0, k: int = 0, copies: int = 0) -> Fan:
    return quotient_fan(chart_weights(ChartSpec(family, n, k, copies)))


def git_models(ws: WeightSystem, target: Fan) -> list[tuple[tuple[int, ...], Fan]]:
    """GIT fans (one per chamber representative) isomorphic to ``target``."""
    found = []
    for v in git_chambers(ws).representatives:
        g = git_quotient_fan(ws, v)
        if (len(g.rays), len(g.max_cones)) != (len(target.rays), len(target.max_cones)):
            continue
        if fan_isomorphic(g, target) is not None:
            found.append((v, g))
    return found


def check_1() -> CriterionResult:
    res = CriterionResult(1, "odd/even quadric quotients are projective spaces", True)
    t0 = time.perf_counter()
    cases = [("quadric_odd", n, n - 1) for n in range(2, 6)] + \
            [("quadric_even", n, n - 2) for n in range(3, 6)]
    for fam, n, d in cases:
        f = _qfan(fam, n)
        ok = fans_equal(f, projective_space_fan(d)) and \
            fan_isomorphic(f, projective_space_fan(d)) is not None
        res.details.append(f"{fam} n={n}: rays {len(f.rays)}, P^{d} {'ok' if ok else 'MISMATCH'}")
        res.passed &= ok
    elapsed = time.perf_counter() - t0
    if elapsed > 10:
        res.passed = False
        res.details.append(f"runtime {elapsed:.1f}s exceeds 10s")
    return res


def check_2() -> CriterionResult:
    res = CriterionResult(2, "P(T_P^n) quotients and Gale dual [I | -1 | I]", True)
    for n in range(2, 6):
        spec = ChartSpec("ptpn", n)
        ws = chart_weights(spec)
        fan_ok = fans_equal(quotient_fan(ws), projective_space_fan(n - 1))
        gale = transposed_gale_dual(ws.matrix)
        gale_ok = same_row_space(gale, expected_gale(spec)) and \
            same_row_lattice(gale, expected_gale(spec))
        res.details.append(f"n={n}: fan {fan_ok}, gale {gale_ok}")
        res.passed &= fan_ok and gale_ok
    return res


def check_3() -> CriterionResult:
    res = CriterionResult(3, "Grassmannians of lines give permutohedral fans", True)
    for n in (3, 4, 5):
        f = _qfan("grassmann", n, 1)
        M = fan_isomorphic(f, standard_fan("permutohedral", n - 2))
        res.details.append(f"n={n}: rays {len(f.rays)}, cones {len(f.max_cones)}, "
                           f"isomorphic {M is not None}")
        res.passed &= M is not None
        if n == 4:
            res.passed &= len(f.rays) == 6 and len(f.max_cones) == 6
    return res


def check_4() -> CriterionResult:
    res = CriterionResult(4, "Grassmann Gale duals are Delta^k (x) Delta^(n-k-1)", True)
    for n, k in ((3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)):
        spec = ChartSpec("grassmann", n, k)
        gale = transposed_gale_dual(chart_weights(spec).matrix)
        ok = same_row_space(gale, expected_gale(spec)) and same_row_lattice(gale, expected_gale(spec))
        res.details.append(f"(n,k)=({n},{k}): {ok}")
        res.passed &= ok
    computed = hnf(transposed_gale_dual(chart_weights(ChartSpec("grassmann", 5, 2)).matrix))
    reference = hnf(REFERENCE_GALE_GR_5_2)
    exact = computed == reference
    res.passed &= exact
    if exact:
        res.details.append("(5,2): HNF equals the reference 4x9 matrix")
    else:
        weights = chart_weights(ChartSpec("grassmann", 5, 2)).matrix
        defect = matmul(weights, tuple(zip(*REFERENCE_GALE_GR_5_2)))
        diff = [(i + 1, j + 1, reference[i][j], computed[i][j])
                for i in range(len(computed)) for j in range(len(computed[0]))
                if reference[i][j] != computed[i][j]]
        res.details.append(f"(5,2): reference matrix differs from HNF at (row, col, reference, "
                           f"computed) {diff}; weights * reference^T = "
                           f"{[list(r) for r in defect]}")
    return res


def check_5() -> CriterionResult:
    res = CriterionResult(5, "odd quadric GIT chambers: 2^(n-1), each giving P^(n-1)", True)
    for n in (3, 4):
        ws = chart_weights(ChartSpec("quadric_odd", n))
        cc = git_chambers(ws)
        ok_count = len(cc.chambers) == 2 ** (n - 1)
        ok_fans = all(fans_equal(git_quotient_fan(ws, v), projective_space_fan(n - 1))
                      for v in cc.representatives)
        res.details.append(f"n={n}: {len(cc.chambers)} chambers, all P^{n - 1}: {ok_fans}")
        res.passed &= ok_count and ok_fans
    return res


def _square_is_identity(M) -> bool:
    return matmul(M, M) == identity(len(M))


def check_6() -> CriterionResult:
    res = CriterionResult(6, "quadric boundary hyperplanes and involutive transitions", True)
    for n in (3, 4):
        odd = set(bir.quadric_boundary(n))
        want = {(1,) * n} | {tuple(int(s == t) for s in range(n)) for t in range(1, n)}
        even = set(bir.quadric_boundary(n, even=True))
        want_even = {(1,) * (n - 1)} | {tuple(int(s == t) for s in range(n - 1))
                                         for t in range(n - 1)}
        inv = all(_square_is_identity(bir.quadric_transition(n, i)) for i in range(2, n + 1)) \
            and all(_square_is_identity(bir.even_quadric_transition(n, i))
                    for i in range(2, n + 1))
        res.details.append(f"n={n}: odd {odd == want}, even {even == want_even}, involutions {inv}")
        res.passed &= odd == want and even == want_even and inv
    return res


def corrupted_generator(n: int, k: int = 1) -> bir.MultiProjectiveMap:
    """r_{k+1} with the sign of its first component flipped."""
    exprs = bir.mutation_exprs(n, k, k + 1)
    exprs = [[-c[0]] + list(c[1:]) for c in exprs]
    return bir.MultiProjectiveMap.from_exprs(bir.factor_vars(n, k), exprs)


COXETER_CASES = ((3, 1), (4, 1), (4, 2), (5, 2))


def check_7() -> CriterionResult:
    res = CriterionResult(7, "Coxeter relations of the mutation maps", True)
    t0 = time.perf_counter()
    for n, k in COXETER_CASES:
        maps = [bir.mutation_map(n, k, i) for i in range(1, n + 1)]
        rep = bir.verify_coxeter(maps, mode="symbolic")
        res.details.append(f"(n,k)=({n},{k}): {len(rep.results)} relations, "
                           f"symbolic, holds {rep.holds}")
        res.passed &= rep.holds
    maps = [bir.mutation_map(4, 1, i) for i in range(1, 5)]
    maps[1] = corrupted_generator(4)
    bad = bir.verify_coxeter(maps, mode="symbolic")
    sq = next(r for r in bad.results if r.relation == "r2^2")
    res.details.append(f"corrupted r2: r2^2 holds {sq.holds}, witness {sq.witness}")
    res.passed &= not sq.holds and bool(sq.witness)
    elapsed = time.perf_counter() - t0
    if elapsed > 60:
        res.passed = False
        res.details.append(f"runtime {elapsed:.1f}s exceeds 60s")
    return res


def check_8() -> CriterionResult:
    res = CriterionResult(8, "quotient map intertwines chart and mutation actions", True)
    for n, k in COXETER_CASES:
        rep = bir.verify_equivariance(n, k, mode="symbolic")
        res.details.append(f"(n,k)=({n},{k}): {len(rep.results)} generators, holds {rep.holds}")
        res.passed &= rep.holds
    return res


def check_9() -> CriterionResult:
    res = CriterionResult(9, "line mutations permute the points p_1..p_n", True)
    for n in (4, 5):
        maps = [bir.mutation_map(n, 1, i) for i in range(2, n + 1)]
        pts = bir.lines_points(n)
        orbit = bir.point_orbit(maps, pts[0])
        swaps = all(
            bir.projectively_equal(bir.apply_point(maps[i - 2], pts[i - 2]), pts[i - 1])
            and bir.projectively_equal(bir.apply_point(maps[i - 2], pts[i - 1]), pts[i - 2])
            for i in range(2, n + 1))
        covers = all(any(bir.projectively_equal(p, q) for q in orbit) for p in pts)
        res.details.append(f"n={n}: orbit size {len(orbit)}, adjacent swaps {swaps}")
        res.passed &= len(orbit) == n and swaps and covers
    return res


def check_10() -> CriterionResult:
    res = CriterionResult(10, "(P^1)^3 modulo the diagonal equals the Gr(2,4) chart quotient", True)
    fan, q = diagonal_action_projection(1, 3)
    general = quotient_fan_general(fan, q)
    M = fan_isomorphic(general, _qfan("grassmann", 4, 1))
    res.details.append(f"rays {len(general.rays)}, cones {len(general.max_cones)}, "
                       f"isomorphic {M is not None}")
    res.passed = M is not None
    return res


def check_11() -> CriterionResult:
    res = CriterionResult(11, "k <-> n-k-1 duality and the P^1 x P^1 diagonal quotient", True)
    M = fan_isomorphic(_qfan("grassmann", 4, 1), _qfan("grassmann", 4, 2))
    fan, q = diagonal_action_projection(1, 2)
    g = quotient_fan_general(fan, q)
    M2 = fan_isomorphic(g, standard_fan("permutohedral", 1))
    res.details.append(f"Gr(2,4) vs Gr(3,4) charts: {M is not None}; "
                       f"(P^1)^2 diagonal quotient vs permutohedral 1: {M2 is not None}")
    res.passed = M is not None and M2 is not None
    return res


def check_12() -> CriterionResult:
    res = CriterionResult(12, "normal fan of the Chow polytope equals the quotient fan", True)
    for spec in (ChartSpec("quadric_odd", 3), ChartSpec("grassmann", 4, 1)):
        ws = chart_weights(spec)
        nf = normal_fan(chow_polytope(ws))
        ok = fans_equal(nf, quotient_fan(ws))
        res.details.append(f"{spec.family} n={spec.n} k={spec.k}: {ok}")
        res.passed &= ok
    return res


def check_13() -> CriterionResult:
    res = CriterionResult(13, "GIT models P^1 x P^1 and P^2 coarsen the Gr(3,4) chart quotient",
                          True)
    ws = chart_weights(ChartSpec("grassmann", 4, 2))
    fine = quotient_fan(ws)
    for name, target in (("P1xP1", product_fan([projective_space_fan(1)] * 2)),
                         ("P2", projective_space_fan(2))):
        models = git_models(ws, target)
        ok = bool(models) and all(is_coarsening(g, fine) for _, g in models)
        res.details.append(f"{name}: {len(models)} chambers, all coarsenings {ok}"
                           + (f", e.g. v={list(models[0][0])}" if models else ""))
        res.passed &= ok
    return res


def check_14() -> CriterionResult:
    res = CriterionResult(14, "Gr(2,5) stress case", True)
    t0 = time.perf_counter()
    ws = chart_weights(ChartSpec("grassmann", 5, 2))
    fine = quotient_fan(ws)
    t_fan = time.perf_counter() - t0
    rep = fan_report(fine)
    res.details.append(f"quotient fan in {t_fan:.2f}s: {rep.to_json()}")
    models = git_models(ws, product_fan([projective_space_fan(2)] * 2))
    coarse = bool(models) and all(is_coarsening(g, fine) for _, g in models)
    res.details.append(f"(P^2)^2 GIT models: {len(models)}, all coarsenings {coarse}"
                       + (f", e.g. v={list(models[0][0])}" if models else ""))
    res.passed = rep.is_complete and coarse and t_fan <= 300
    return res


def catalog_specs() -> list[ChartSpec]:
    specs = [ChartSpec("ptpn", n) for n in range(2, 6)]
    specs += [ChartSpec("quadric_odd", n) for n in range(2, 6)]
    specs += [ChartSpec("quadric_even", n) for n in range(3, 6)]
    specs += [ChartSpec("grassmann", n, k) for n in range(3, 6) for k in range(1, n - 1)]
    specs += [ChartSpec("product_diagonal", 0, k, c) for k in (1, 2) for c in (2, 3)]
    return specs


def check_15() -> CriterionResult:
    res = CriterionResult(15, "full definiteness with certificates", True)
    for spec in catalog_specs():
        ws = chart_weights(spec)
        ok, U = is_fully_definite(ws)
        good = ok and check_certificate(ws, U)
        res.passed &= good
        if not good:
            res.details.append(f"{spec}: no certificate")
    res.details.append(f"{len(catalog_specs())} catalog charts checked")
    for weights in ([(1,), (-1,)], [(1,), (0,)], [(1, 0), (0, 1), (0, 0)],
                    [(1, 0), (0, 1), (-1, -1)]):
        ok, _ = is_fully_definite(WeightSystem.from_weights(weights))
        res.details.append(f"{weights}: fully definite {ok}")
        res.passed &= not ok
    return res


CHECKS: dict[int, Callable[[], CriterionResult]] = {
    i: globals()[f"check_{i}"] for i in range(1, 16)
}


def run_check(i: int) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        res = CHECKS[i]()
    except Exception as exc:  # a crash is a failure, reported as such
        res = CriterionResult(i, f"criterion {i}", False, [f"error: {exc!r}"])
    res.seconds = time.perf_counter() - t0
    return res


def run_all(which=None) -> list[CriterionResult]:
    return [run_check(i) for i in (which or sorted(CHECKS))]
