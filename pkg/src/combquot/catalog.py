"""Weight matrices and reference fans for the example families.

Families:

``ptpn``
    Tangent space of the flag variety P(T_{P^n}) at the identity flag, rows
    in the simple-root basis; weights a_1, a_1+a_2, ..., a_1+...+a_n,
    a_2+...+a_n, ..., a_n.
``quadric_odd``
    Tangent space of the smooth quadric of dimension 2n-1 at its first torus
    fixed point, coordinates (rho1, rho2+, ..., rhon+, rho2-, ..., rhon-).
``quadric_even``
    Same for the quadric of dimension 2n-2, coordinates
    (rho2+, ..., rhon+, rho2-, ..., rhon-).
``grassmann``
    Bruhat chart of Gr(k+1, n+1) around the span of e_0..e_k, coordinates
    u{j}_{l} in (j, l) lexicographic order, rows in the basis t_1, ..., t_n.
``product_diagonal``
    Tangent space of (P^k)^copies at the first fixed point under the diagonal
    (C^*)^k action.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .linalg import Matrix, hstack, identity, kron, transposed_gale_dual, vstack
from .polyhedral import Fan, Polytope, convex_hull
from .quotients import WeightSystem

FAMILIES = ("ptpn", "quadric_odd", "quadric_even", "grassmann", "product_diagonal")


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class ChartSpec:
    family: str
    n: int = 0
    k: int = 0
    copies: int = 0

    def __post_init__(self):
        f, n, k, c = self.family, self.n, self.k, self.copies
        if f not in FAMILIES:
            raise CatalogError(f"unknown family {f!r}")
        ok = {
            "ptpn": n >= 2,
            "quadric_odd": n >= 2,
            "quadric_even": n >= 3,
            "grassmann": 1 <= k <= n - 2,
            "product_diagonal": k >= 1 and c >= 2,
        }[f]
        if not ok:
            raise CatalogError(f"invalid parameters for {f}: n={n}, k={k}, copies={c}")


def ones(m: int, n: int) -> Matrix:
    return tuple((1,) * n for _ in range(m))


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def simplex_matrix(m: int) -> Matrix:
    """``(I_m | -(1)_{m x 1})``."""
    return hstack(identity(m), tuple((-1,) for _ in range(m)))


def chart_weights(spec: ChartSpec) -> WeightSystem:
    f, n, k = spec.family, spec.n, spec.k
    if f == "ptpn":
        weights, labels = [], []
        for j in range(1, n + 1):
            weights.append(tuple(int(i < j) for i in range(n)))
            labels.append(f"a1..{j}")
        for i in range(2, n + 1):
            weights.append(tuple(int(t >= i - 1) for t in range(n)))
            labels.append(f"a{i}..{n}")
        return WeightSystem.from_weights(weights, labels)
    if f in ("quadric_odd", "quadric_even"):
        def e(i, s=1):
            return tuple(s * int(t == i - 1) for t in range(n))
        first = [] if f == "quadric_even" else [tuple(-x for x in e(1))]
        plus = [tuple(a - b for a, b in zip(e(i), e(1))) for i in range(2, n + 1)]
        minus = [tuple(-a - b for a, b in zip(e(i), e(1))) for i in range(2, n + 1)]
        labels = ([] if f == "quadric_even" else ["rho1"]) \
            + [f"rho{i}+" for i in range(2, n + 1)] + [f"rho{i}-" for i in range(2, n + 1)]
        return WeightSystem.from_weights(first + plus + minus, labels)
    if f == "grassmann":
        weights, labels = [], []
        for j in range(k + 1):
            for l in range(k + 1, n + 1):
                # weight t_l - t_j, with t_0 = 0
                w = [0] * n
                w[l - 1] += 1
                if j:
                    w[j - 1] -= 1
                weights.append(tuple(w))
                labels.append(f"u{j}_{l}")
        return WeightSystem.from_weights(weights, labels)
    # product_diagonal
    mat = hstack(*[identity(k)] * spec.copies)
    labels = [f"x{c}_{i}" for c in range(1, spec.copies + 1) for i in range(1, k + 1)]
    return WeightSystem(mat, tuple(labels))


def grassmann_weight_matrix_blocks(n: int, k: int) -> Matrix:
    """The weight matrix assembled from blocks as in the t-basis block formula."""
    top = hstack(zeros(k, n - k), kron(tuple(tuple(-x for x in r) for r in identity(k)),
                                       ones(1, n - k)))
    bottom = hstack(identity(n - k), kron(ones(1, k), identity(n - k)))
    return vstack(top, bottom)


def grassmann_simple_root_basis(n: int) -> Matrix:
    """Unimodular change from t-coordinates to simple-root coordinates.

    ``t_j = alpha_1 + ... + alpha_j``, so a vector with t-coordinates ``c`` has
    alpha-coordinates ``a_i = sum_{j >= i} c_j``.
    """
    return tuple(tuple(int(j >= i) for j in range(n)) for i in range(n))


def expected_gale(spec: ChartSpec) -> Matrix:
    """Closed-form projection matrices for each family (not HNF-reduced)."""
    f, n, k = spec.family, spec.n, spec.k
    if f == "ptpn":
        return hstack(identity(n - 1), tuple((-1,) for _ in range(n - 1)), identity(n - 1))
    if f == "quadric_odd":
        return hstack(tuple((-2,) for _ in range(n - 1)), identity(n - 1), identity(n - 1))
    if f == "quadric_even":
        block = tuple(tuple(-1 if c == r else 1 if c == r + 1 else 0 for c in range(n - 1))
                      for r in range(n - 2))
        return hstack(block, block)
    if f == "grassmann":
        return kron(simplex_matrix(k), simplex_matrix(n - k - 1))
    raise CatalogError(f"no closed-form projection for family {f!r}")


# reference 4x9 transposed Gale dual for n=5, k=2, kept verbatim (entry (1,3) has the wrong sign)
REFERENCE_GALE_GR_5_2: Matrix = (
    (1, 0, 1, 0, 0, 0, -1, 0, 1),
    (0, 1, -1, 0, 0, 0, 0, -1, 1),
    (0, 0, 0, 1, 0, -1, -1, 0, 1),
    (0, 0, 0, 0, 1, -1, 0, -1, 1),
)

REFERENCE_WEIGHTS_GR_5_2: Matrix = (
    (0, 0, 0, -1, -1, -1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, -1, -1),
    (1, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 0, 0, 1),
)


def subtorus_gale(n: int, k: int) -> Matrix:
    """``Delta^k (x) I_{n-k}``: Gale dual for the last ``n-k`` rows of the weight matrix."""
    return kron(simplex_matrix(k), identity(n - k))


# ---------------------------------------------------------------------------
# standard fans


def projective_space_fan(d: int) -> Fan:
    rays = [tuple(int(i == j) for j in range(d)) for i in range(d)] + [(-1,) * d]
    return Fan.from_cones(d, itertools.combinations(rays, d))


def product_fan(fans: Sequence[Fan]) -> Fan:
    total = sum(f.rank for f in fans)
    offsets = list(itertools.accumulate([0] + [f.rank for f in fans]))
    cones = []
    for choice in itertools.product(*[f.cone_rays() for f in fans]):
        rays = []
        for f, off, c in zip(fans, offsets, choice):
            for r in c:
                v = [0] * total
                v[off:off + f.rank] = r
                rays.append(tuple(v))
        cones.append(rays)
    return Fan.from_cones(total, cones)


def standard_fan(kind: str, dims: int | Sequence[int]) -> Fan:
    """``projective_space`` d, ``product`` (d_1, ..., d_m), or ``permutohedral`` d."""
    if kind == "projective_space":
        if int(dims) < 1:
            raise CatalogError("dimension must be positive")
        return projective_space_fan(int(dims))
    if kind == "product":
        dims = list(dims)
        if not dims or min(dims) < 1:
            raise CatalogError("dimensions must be positive")
        return product_fan([projective_space_fan(d) for d in dims])
    if kind == "permutohedral":
        d = int(dims)
        if d < 1:
            raise CatalogError("dimension must be positive")
        from .polyhedral import normal_fan
        return normal_fan(permutohedron(d))
    raise CatalogError(f"unknown fan kind {kind!r}")


def permutohedron(d: int) -> Polytope:
    return convex_hull(itertools.permutations(range(1, d + 2)))


def diagonal_action_projection(k: int, copies: int) -> tuple[Fan, Matrix]:
    """Fan of (P^k)^copies and the saturated projection killing the diagonal Z^k."""
    if k < 1 or copies < 2:
        raise CatalogError("need k >= 1 and copies >= 2")
    fan = product_fan([projective_space_fan(k)] * copies)
    diagonal = hstack(*[identity(k)] * copies)
    return fan, transposed_gale_dual(diagonal)


# ---------------------------------------------------------------------------
# fixed points


@dataclass(frozen=True)
class FixedPointWeightData:
    labels: tuple[str, ...]
    weights: tuple[tuple[int, ...], ...]

    def weight_polytope(self) -> Polytope:
        return convex_hull(self.weights)


def fixed_point_weights(spec: ChartSpec) -> FixedPointWeightData:
    f, n, k = spec.family, spec.n, spec.k
    if f in ("quadric_odd", "quadric_even"):
        labels, weights = [], []
        for s, off in ((1, 0), (-1, n)):
            for i in range(1, n + 1):
                labels.append(f"P{i + off}")
                weights.append(tuple(s * int(t == i - 1) for t in range(n)))
        return FixedPointWeightData(tuple(labels), tuple(weights))
    if f == "grassmann":
        labels, weights = [], []
        for I in itertools.combinations(range(n + 1), k + 1):
            labels.append("I" + "".join(map(str, I)))
            weights.append(tuple(int(i in I) for i in range(n + 1)))
        return FixedPointWeightData(tuple(labels), tuple(weights))
    raise CatalogError(f"no fixed point data for family {f!r}")


def catalog_gale(spec: ChartSpec) -> Matrix:
    return transposed_gale_dual(chart_weights(spec).matrix)


# ---------------------------------------------------------------------------
# identification


def _product_dims(rank_: int, n_rays: int, n_cones: int) -> list[tuple[int, ...]]:
    """Multisets (d_1 >= ... >= d_m), m >= 2, with the ray and cone counts of a product."""
    out = []

    def rec(left, cap, acc):
        if left == 0:
            if len(acc) >= 2 and sum(d + 1 for d in acc) == n_rays:
                prod = 1
                for d in acc:
                    prod *= d + 1
                if prod == n_cones:
                    out.append(tuple(acc))
            return
        for d in range(min(left, cap), 0, -1):
            rec(left - d, d, acc + [d])

    rec(rank_, rank_, [])
    return out


def parse_against(spec: str) -> tuple[str, Fan]:
    """``projective_space:d``, ``product:d1,d2,...`` or ``permutohedral:d``."""
    kind, _, params = spec.partition(":")
    if not params:
        raise CatalogError(f"--against needs kind:params, got {spec!r}")
    try:
        dims = [int(x) for x in params.split(",")]
    except ValueError:
        raise CatalogError(f"bad parameters in {spec!r}")
    if kind == "product":
        return spec, standard_fan(kind, dims)
    if len(dims) != 1:
        raise CatalogError(f"{kind} takes one dimension")
    return spec, standard_fan(kind, dims[0])


def identify(fan: Fan, against: str | None = None, max_rays: int = 14) -> dict:
    """Recognize a fan as a standard one, cheapest checks first."""
    from .polyhedral import fan_isomorphic, fan_report

    report = fan_report(fan)
    out = {"report": report.to_json(), "identified": None, "matrix": None}
    if against is not None:
        _, target = parse_against(against)
        M = None if target.rank != fan.rank else fan_isomorphic(fan, target, max_rays)
        out.update(isomorphic=M is not None, against=against,
                   matrix=[list(r) for r in M] if M is not None else None)
        if M is not None:
            out["identified"] = against
        return out
    d = fan.rank
    candidates = []
    if report.is_smooth and report.is_complete:
        if report.ray_count == d + 1:
            candidates.append(f"projective_space:{d}")
        for dims in _product_dims(d, report.ray_count, report.max_cone_count):
            candidates.append("product:" + ",".join(map(str, dims)))
        if d >= 1 and report.ray_count == 2 ** (d + 1) - 2:
            candidates.append(f"permutohedral:{d}")
    for cand in candidates:
        _, target = parse_against(cand)
        M = fan_isomorphic(fan, target, max(max_rays, len(target.rays)))
        if M is not None:
            out.update(identified=cand, matrix=[list(r) for r in M])
            break
    return out
