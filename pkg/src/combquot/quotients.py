"""Combinatorial and GIT quotients of a torus acting diagonally on affine space.

A :class:`WeightSystem` stores the torus weights on the coordinates of affine
space as the columns of an integer matrix (rows = torus rank).  That matrix is
the character map; its transposed Gale dual is the lattice projection onto the
cocharacters of the quotient torus.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

from .linalg import (
    Matrix,
    as_matrix,
    dot,
    matmul,
    primitive,
    rank,
    transpose,
    transposed_gale_dual,
    unimodular_extension,
)
from .polyhedral import (
    Cone,
    Fan,
    Polytope,
    chamber_complex,
    cone_dual,
    minkowski_sum,
    normal_fan,
    trivial_fan,
    vertex_enumeration,
)


class QuotientError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    matrix: Matrix
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        mat = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", mat)
        if not mat or not mat[0]:
            raise QuotientError("weight matrix must be nonempty")
        if rank(mat) != len(mat):
            raise QuotientError("weight matrix not of full rank")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(len(mat[0]))))
        elif len(self.labels) != len(mat[0]):
            raise QuotientError("one label per coordinate required")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def n_coords(self) -> int:
        return len(self.matrix[0])

    def weights(self) -> list[tuple[int, ...]]:
        return list(transpose(self.matrix))

    @classmethod
    def from_weights(cls, weights: Sequence[Sequence[int]], labels: Sequence[str] = ()
                     ) -> "WeightSystem":
        return cls(transpose(as_matrix(weights)), tuple(labels))

    def to_json(self) -> dict:
        return {"weights": [list(w) for w in self.weights()], "labels": list(self.labels)}

    @classmethod
    def from_json(cls, d: dict) -> "WeightSystem":
        if "weights" not in d:
            raise QuotientError("missing field 'weights'")
        try:
            weights = [[int(x) for x in w] for w in d["weights"]]
        except (TypeError, ValueError) as exc:
            raise QuotientError(f"field 'weights' must be a list of integer vectors: {exc}")
        return cls.from_weights(weights, d.get("labels", ()))


def gale_projection(ws: WeightSystem) -> Matrix:
    return transposed_gale_dual(ws.matrix)


# ---------------------------------------------------------------------------
# full definiteness


def is_fully_definite(ws: WeightSystem) -> tuple[bool, Matrix | None]:
    """Decide full definiteness and return a basis-change certificate.

    The action is fully definite iff no weight is zero and the weights span a
    pointed cone: a strictly positive covector ``c`` then exists, and any basis
    ``(c, u_2, ..., u_r)`` can be sheared to ``(c, u_2 + t_2 c, ...)`` with all
    weights nonnegative.  The certificate ``U`` satisfies ``U @ matrix >= 0`` with no
    zero column.
    """
    weights = ws.weights()
    if any(not any(w) for w in weights):
        return False, None
    dual = cone_dual(Cone.from_generators(ws.rank, weights))
    c = dual.relative_interior_point()
    if not any(c) or not all(dot(c, w) > 0 for w in weights):
        return False, None
    c = primitive(c)
    U = [list(row) for row in unimodular_extension(c)]
    for row in U[1:]:
        t = max(ceil(Fraction(-dot(row, w), dot(c, w))) for w in weights)
        if t > 0:
            row[:] = [x + t * y for x, y in zip(row, c)]
    return True, tuple(map(tuple, U))


def check_certificate(ws: WeightSystem, U: Sequence[Sequence[int]]) -> bool:
    from .linalg import is_unimodular
    UW = matmul(U, ws.matrix)
    return (is_unimodular(U) and all(x >= 0 for row in UW for x in row)
            and all(any(col) for col in zip(*UW)))


# ---------------------------------------------------------------------------
# quotient fans


def _bases(vectors: Sequence[Sequence[int]], d: int, within: Sequence[Sequence[int]] | None = None):
    index_sets = within if within is not None else [range(len(vectors))]
    seen = set()
    for S in index_sets:
        for B in itertools.combinations(sorted(S), d):
            if B in seen:
                continue
            seen.add(B)
            gens = [vectors[i] for i in B]
            if rank(gens) == d:
                yield gens


def quotient_fan(ws: WeightSystem, projection: Sequence[Sequence[int]] | None = None) -> Fan:
    """Quotient fan of the fan of faces of the positive orthant under ``projection``.

    ``projection`` defaults to the canonical transposed Gale dual of the weight matrix;
    any other saturated representative may be passed.
    """
    if projection is None:
        if ws.n_coords == ws.rank:
            return trivial_fan()
        projection = gale_projection(ws)
    d = len(projection)
    if d == 0:
        return trivial_fan()
    images = list(transpose(projection))
    return chamber_complex(d, list(_bases(images, d)))


def quotient_fan_general(fan: Fan, projection: Sequence[Sequence[int]]) -> Fan:
    """Quotient fan ``q_*(f)``: maximal cells are intersections of projected cones."""
    proj = as_matrix(projection)
    d = len(proj)
    if d == 0:
        return trivial_fan()
    if len(proj[0]) != fan.rank:
        raise QuotientError("projection does not match the rank of the fan")
    if rank(proj) != d:
        raise QuotientError("projection is not surjective")
    from .linalg import smith_invariants
    if any(x != 1 for x in smith_invariants(proj)):
        raise QuotientError("projection is not surjective onto the lattice")
    images = [tuple(dot(row, r) for row in proj) for r in fan.rays]
    cones = fan.cone_rays()
    simplicial = all(rank(c) == len(c) for c in cones if c)
    if simplicial:
        # every subset of a simplicial cone spans a face
        gens = list(_bases(images, d, within=fan.max_cones))
    else:
        gens = []
        for c in fan.cones():
            for face in _faces(c):
                img = [tuple(dot(row, r) for row in proj) for r in face]
                if img and rank(img) == d:
                    gens.append(img)
    return chamber_complex(d, gens)


def _faces(c: Cone) -> list[tuple]:
    """Generator sets of all nonzero faces of a pointed cone."""
    facets = [set(g) for _, g in c.facets()]
    faces = {frozenset(c.generators)}
    frontier = [frozenset(c.generators)]
    while frontier:
        new = []
        for F in frontier:
            for S in facets:
                G = frozenset(F & S)
                if G and G != F and G not in faces:
                    faces.add(G)
                    new.append(G)
        frontier = new
    return [tuple(sorted(F)) for F in faces]


# ---------------------------------------------------------------------------
# GIT chambers and fibers


@dataclass(frozen=True)
class ChamberComplex:
    rank: int
    support: Cone
    chambers: tuple[Cone, ...]
    representatives: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "support": [list(g) for g in self.support.generators],
                "chambers": [{"generators": [list(g) for g in c.generators],
                              "representative": list(v)}
                             for c, v in zip(self.chambers, self.representatives)]}


def git_chambers(ws: WeightSystem) -> ChamberComplex:
    """Maximal cells of the chamber decomposition of ``pi(P)``."""
    weights = ws.weights()
    fan = chamber_complex(ws.rank, list(_bases(weights, ws.rank)))
    chambers, reps = [], []
    for rays in fan.cone_rays():
        chambers.append(Cone(ws.rank, tuple(sorted(rays))))
        # sum of primitive integral rays is integral and interior
        reps.append(tuple(sum(c) for c in zip(*rays)))
    support = Cone.from_generators(ws.rank, weights)
    return ChamberComplex(ws.rank, support, tuple(chambers), tuple(reps))


def _as_vector(v: Sequence, r: int) -> tuple[Fraction, ...]:
    v = tuple(Fraction(x) for x in v)
    if len(v) != r:
        raise QuotientError(f"linearization must have {r} coordinates, got {len(v)}")
    return v


def fiber_polytope(ws: WeightSystem, v: Sequence) -> Polytope:
    """``{x >= 0 : matrix @ x = v}`` in the coordinate space."""
    v = _as_vector(v, ws.rank)
    N = ws.n_coords
    ineqs = [tuple(int(i == j) for j in range(N)) + (0,) for i in range(N)]
    eqs = [tuple(row) + (-vi,) for row, vi in zip(ws.matrix, v)]
    return Polytope.from_hrep(N, ineqs, eqs)


def git_quotient_fan(ws: WeightSystem, v: Sequence) -> Fan:
    """Normal fan of the fiber polytope, in the coordinates of :func:`quotient_fan`."""
    p = fiber_polytope(ws, v)
    if not p.is_bounded():
        raise QuotientError("not fully definite at this linearization")
    if p.is_empty():
        raise QuotientError("linearization outside the weight cone")
    return normal_fan(p)


def semistable_support(ws: WeightSystem, v: Sequence) -> list[bool]:
    """For each coordinate, whether it may vanish on a point of the fiber.

    ``False`` marks a coordinate positive on the whole fiber, whose hyperplane
    is therefore unstable.  The fiber is read rationally, i.e. lattice points
    of all multiples ``m v`` are taken into account.
    """
    p = fiber_polytope(ws, v)
    if not p.is_bounded():
        raise QuotientError("not fully definite at this linearization")
    verts = vertex_enumeration(p)
    if not verts:
        raise QuotientError("linearization outside the weight cone")
    return [min(x[i] for x in verts) == 0 for i in range(ws.n_coords)]


def unstable_coordinates(ws: WeightSystem, v: Sequence) -> list[str]:
    return [lab for lab, ok in zip(ws.labels, semistable_support(ws, v)) if not ok]


def chow_polytope(ws: WeightSystem) -> Polytope:
    """Minkowski sum of the fiber polytopes over one point of each maximal chamber."""
    ok, _ = is_fully_definite(ws)
    if not ok:
        raise QuotientError("weight system is not fully definite")
    cc = git_chambers(ws)
    return minkowski_sum([fiber_polytope(ws, v) for v in cc.representatives])
