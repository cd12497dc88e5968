"""Exact rational cones, fans and polytopes.

All vectors are integer or :class:`~fractions.Fraction` tuples.  Conversion
between generator and inequality descriptions is done by the double
description method (:func:`double_description`) in pure integer arithmetic.

Polytope inequality rows ``(c_1, ..., c_r, b)`` mean ``c . x + b >= 0``;
equation rows mean ``c . x + b == 0``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .linalg import (
    determinant,
    dot,
    hnf,
    inverse,
    matvec,
    primitive,
    primitive_rational,
    rank,
)

Vector = tuple[int, ...]


class PolyhedralError(ValueError):
    pass


class UnboundedError(PolyhedralError):
    pass


# ---------------------------------------------------------------------------
# double description


def _to_int_row(row: Sequence) -> tuple[int, ...]:
    den = 1
    for x in row:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    out = tuple(int(Fraction(x) * den) for x in row)
    g = 0
    for x in out:
        g = gcd(g, abs(x))
    return tuple(x // g for x in out) if g > 1 else out


def _normalize(v: Iterable[int]) -> Vector:
    v = tuple(v)
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return tuple(x // g for x in v) if g > 1 else v


def double_description(inequalities: Sequence[Sequence], dim: int,
                       equations: Sequence[Sequence] = ()
                       ) -> tuple[list[Vector], list[Vector]]:
    """Generators of ``{x : A x >= 0, E x = 0}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extreme rays of the cone modulo it, all as primitive integer vectors.
    """
    rows = [_to_int_row(a) for a in inequalities]
    for e in equations:
        e = _to_int_row(e)
        rows.append(e)
        rows.append(tuple(-x for x in e))
    rows = [a for a in dict.fromkeys(rows) if any(a)]

    lin: list[Vector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[Vector] = []
    tight: list[int] = []
    for idx, a in enumerate(rows):
        bit = 1 << idx
        k = next((t for t, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            l = lin.pop(k)
            al = dot(a, l)
            if al < 0:
                l, al = tuple(-x for x in l), -al
            lin = [_normalize(al * x - dot(a, m) * y for x, y in zip(m, l)) for m in lin]
            rays = [_normalize(al * x - dot(a, r) * y for x, y in zip(r, l)) for r in rays]
            tight = [z | bit for z in tight]
            full = (1 << idx) - 1
            rays.append(l)
            tight.append(full)
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            tight = [z | bit if v == 0 else z for z, v in zip(tight, vals)]
            continue
        need = dim - len(lin) - 2
        new_rays, new_tight = [], []
        for i in range(len(rays)):
            if vals[i] >= 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i] | bit if vals[i] == 0 else tight[i])
        for p in pos:
            for n in neg:
                z = tight[p] & tight[n]
                if z.bit_count() < need:
                    continue
                if any(t != p and t != n and (tight[t] & z) == z for t in range(len(rays))):
                    continue
                vp, vn = vals[p], vals[n]
                new_rays.append(_normalize(vp * y - vn * x
                                           for x, y in zip(rays[p], rays[n])))
                new_tight.append(z | bit)
        rays, tight = new_rays, new_tight
    return lin, rays


def _canonical_sign(v: Vector) -> Vector:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone given by primitive generators."""

    rank: int
    generators: tuple[Vector, ...]
    _hrep: list = field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def from_generators(cls, rank: int, gens: Iterable[Sequence]) -> "Cone":
        gens = [primitive_rational(g) for g in gens if any(g)]
        if not gens:
            return cls(rank, ())
        # irredundant generators: extreme rays plus lineality
        c = cls.from_inequalities(rank, _dual_hrep(rank, gens))
        return c

    @classmethod
    def from_inequalities(cls, rank: int, inequalities: Sequence[Sequence],
                          equations: Sequence[Sequence] = ()) -> "Cone":
        lin, rays = double_description(inequalities, rank, equations)
        gens = [primitive(r) for r in rays]
        for l in lin:
            l = primitive(l)
            gens.append(l)
            gens.append(tuple(-x for x in l))
        return cls(rank, tuple(sorted(set(gens))))

    def hrep(self) -> tuple[list[Vector], list[Vector]]:
        """(inequalities, equations) with ``a . x >= 0`` / ``e . x == 0``."""
        if self._hrep is None:
            lin, rays = double_description(self.generators, self.rank)
            eqs = [_canonical_sign(primitive(l)) for l in lin]
            object.__setattr__(self, "_hrep", [sorted(set(map(primitive, rays))), sorted(eqs)])
        return self._hrep[0], self._hrep[1]

    @property
    def dim(self) -> int:
        return rank(self.generators) if self.generators else 0

    def is_pointed(self) -> bool:
        ineqs, eqs = self.hrep()
        return rank(list(ineqs) + list(eqs)) == self.rank if self.rank else True

    def contains(self, x: Sequence) -> bool:
        ineqs, eqs = self.hrep()
        return all(dot(a, x) >= 0 for a in ineqs) and all(dot(e, x) == 0 for e in eqs)

    def interior_contains(self, x: Sequence) -> bool:
        """Relative interior membership."""
        ineqs, eqs = self.hrep()
        return all(dot(a, x) > 0 for a in ineqs) and all(dot(e, x) == 0 for e in eqs)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_set(self, other: "Cone") -> bool:
        return self.rank == other.rank and self.contains_cone(other) and other.contains_cone(self)

    def facets(self) -> list[tuple[Vector, tuple[Vector, ...]]]:
        """(inner normal, generators on the facet) for each facet."""
        ineqs, _ = self.hrep()
        return [(a, tuple(g for g in self.generators if dot(a, g) == 0)) for a in ineqs]

    def relative_interior_point(self) -> Vector:
        if not self.generators:
            return (0,) * self.rank
        return tuple(sum(c) for c in zip(*self.generators))


def _dual_hrep(rank_: int, gens: Sequence[Vector]) -> list[Vector]:
    lin, rays = double_description(gens, rank_)
    out = list(rays)
    for l in lin:
        out.append(l)
        out.append(tuple(-x for x in l))
    return out


def cone_dual(c: Cone) -> Cone:
    """``{u : u . x >= 0 for all x in c}``."""
    if not c.generators:
        return Cone.from_inequalities(c.rank, [])
    return Cone.from_generators(c.rank, _dual_hrep(c.rank, c.generators))


def cone_intersect(a: Cone, b: Cone) -> Cone:
    if a.rank != b.rank:
        raise PolyhedralError("cones live in lattices of different rank")
    ia, ea = a.hrep()
    ib, eb = b.hrep()
    return Cone.from_inequalities(a.rank, list(ia) + list(ib), list(ea) + list(eb))


def orthant(rank_: int) -> Cone:
    return Cone(rank_, tuple(tuple(int(i == j) for j in range(rank_)) for i in range(rank_)))


# ---------------------------------------------------------------------------
# fans


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cones(cls, rank_: int, cones: Iterable[Iterable[Sequence[int]]]) -> "Fan":
        """Canonical fan from maximal cones given by their ray generators."""
        cones = [tuple(sorted(set(primitive(r) for r in c))) for c in cones]
        rays = tuple(sorted({r for c in cones for r in c}))
        index = {r: i for i, r in enumerate(rays)}
        max_cones = tuple(sorted({tuple(sorted(index[r] for r in c)) for c in cones}))
        return cls(rank_, rays, max_cones)

    def canonical(self) -> "Fan":
        return Fan.from_cones(self.rank, self.cone_rays())

    def cone_rays(self) -> list[tuple[Vector, ...]]:
        return [tuple(self.rays[i] for i in c) for c in self.max_cones]

    def cones(self) -> list[Cone]:
        return [Cone(self.rank, tuple(sorted(r))) for r in self.cone_rays()]

    def transform(self, M: Sequence[Sequence[int]]) -> "Fan":
        return Fan.from_cones(self.rank, [[matvec(M, r) for r in c] for c in self.cone_rays()])

    def to_json(self) -> dict:
        return {"rank": self.rank, "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, d: dict) -> "Fan":
        r = int(d["rank"])
        rays = [tuple(int(x) for x in ray) for ray in d["rays"]]
        for ray in rays:
            if len(ray) != r:
                raise PolyhedralError(f"field 'rays': ray {list(ray)} has wrong length for rank {r}")
        return cls.from_cones(r, [[rays[i] for i in c] for c in d["max_cones"]])


def trivial_fan() -> Fan:
    return Fan(0, (), ((),))


@dataclass(frozen=True)
class FanReport:
    is_smooth: bool
    is_simplicial: bool
    is_complete: bool
    picard_number: int | None
    ray_count: int
    max_cone_count: int

    def to_json(self) -> dict:
        return {"is_smooth": self.is_smooth, "is_simplicial": self.is_simplicial,
                "is_complete": self.is_complete, "picard_number": self.picard_number,
                "ray_count": self.ray_count, "max_cone_count": self.max_cone_count}


def _cone_facet_raysets(rank_: int, rays: Sequence[Vector]) -> list[frozenset]:
    d = rank(rays)
    if len(rays) == d:
        return [frozenset(s) for s in itertools.combinations(rays, d - 1)]
    return [frozenset(g) for _, g in Cone(rank_, tuple(rays)).facets()]


def fan_report(f: Fan) -> FanReport:
    if f.rank == 0:
        return FanReport(True, True, True, 0, 0, len(f.max_cones))
    cones = f.cone_rays()
    dims = [rank(c) if c else 0 for c in cones]
    simplicial = all(len(c) == d for c, d in zip(cones, dims))
    smooth = simplicial and all(
        d == 0 or _lattice_index(c) == 1 for c, d in zip(cones, dims))
    complete = False
    if cones and all(d == f.rank for d in dims):
        walls: dict[frozenset, int] = {}
        for c in cones:
            for w in _cone_facet_raysets(f.rank, c):
                walls[w] = walls.get(w, 0) + 1
        complete = all(v == 2 for v in walls.values())
    picard = len(f.rays) - f.rank if simplicial and complete else None
    return FanReport(smooth, simplicial, complete, picard, len(f.rays), len(f.max_cones))


def _lattice_index(gens: Sequence[Vector]) -> int:
    """Index of the lattice spanned by linearly independent ``gens`` in its saturation."""
    H = hnf(gens)
    if len(H) == len(H[0]):
        return abs(int(determinant(H)))
    # gcd of maximal minors
    g = 0
    for cols in itertools.combinations(range(len(H[0])), len(H)):
        g = gcd(g, abs(int(determinant([[r[c] for c in cols] for r in H]))))
    return g


def is_face(face: Cone, cone: Cone) -> bool:
    """Whether ``face`` is a face of ``cone`` (both given as point sets)."""
    if not cone.contains_cone(face):
        return False
    ineqs, _ = cone.hrep()
    if not face.generators:
        # {0} is a face iff the cone is pointed
        return cone.is_pointed()
    tight = [a for a in ineqs if all(dot(a, g) == 0 for g in face.generators)]
    # smallest face of `cone` containing `face`
    gens = [g for g in cone.generators if all(dot(a, g) == 0 for a in tight)]
    smallest = Cone(cone.rank, tuple(gens)) if gens else Cone(cone.rank, ())
    return face.contains_cone(smallest)


def fan_is_valid(f: Fan, limit: int = 200) -> bool:
    """Check that pairwise intersections of maximal cones are faces of both."""
    cones = f.cones()
    if len(cones) > limit:
        cones = cones[:limit]
    for a, b in itertools.combinations(cones, 2):
        i = cone_intersect(a, b)
        if not (is_face(i, a) and is_face(i, b)):
            return False
    return True


def fan_support_contains(f: Fan, x: Sequence) -> bool:
    return any(c.contains(x) for c in f.cones())


# ---------------------------------------------------------------------------
# chamber complexes / refinements


def _wall_key(a: Vector) -> Vector:
    return _canonical_sign(primitive(a))


class _Walker:
    """Enumerate maximal cells of ``x -> intersection of cells containing x``.

    Cells are full-dimensional cones given by inner facet normals.  With
    ``strict=True`` every cell not containing ``x`` also contributes the sign
    pattern of ``x`` on its facet hyperplanes, which yields a valid common
    refinement for arbitrary inputs.
    """

    def __init__(self, dim: int, cells: Sequence[Sequence[Vector]],
                 gens: Sequence[Sequence[Vector]], strict: bool = False):
        self.dim = dim
        self.cells = [list(c) for c in cells]
        self.gens = [list(g) for g in gens]
        self.strict = strict
        self.walls = sorted({_wall_key(a) for c in self.cells for a in c})

    def generic(self, p: Sequence, skip: Vector | None = None) -> bool:
        return all(dot(b, p) != 0 for b in self.walls if b != skip)

    def chamber_hrep(self, p: Sequence) -> list[Vector] | None:
        ineqs: list[Vector] = []
        inside = False
        for c in self.cells:
            vals = [dot(a, p) for a in c]
            if all(v > 0 for v in vals):
                inside = True
                ineqs.extend(c)
            elif self.strict:
                ineqs.extend(a if v > 0 else tuple(-x for x in a) for a, v in zip(c, vals))
        if not inside:
            return None
        return list(dict.fromkeys(ineqs))

    def chamber(self, p: Sequence):
        hrep = self.chamber_hrep(p)
        if hrep is None:
            return None
        lin, rays = double_description(hrep, self.dim)
        if lin:
            raise PolyhedralError("chamber is not pointed")
        rays = sorted(rays)
        facets = {}
        for a in hrep:
            t = frozenset(i for i, r in enumerate(rays) if dot(a, r) == 0)
            if t not in facets and rank([rays[i] for i in t]) == self.dim - 1:
                facets[t] = a
        return tuple(rays), facets

    def point_in(self, gens: Sequence[Vector], skip: Vector | None = None) -> tuple | None:
        gens = list(gens)
        if not gens:
            return None
        for s in range(1, 4 * len(self.walls) * max(len(gens), 1) + 3):
            p = tuple(sum(s ** j * g[i] for j, g in enumerate(gens)) for i in range(self.dim))
            if self.generic(p, skip):
                return p
        raise PolyhedralError("no generic point found")

    def step_across(self, face_rays: Sequence[Vector], a: Vector) -> tuple:
        if self.dim == 1:
            return tuple(-x for x in a)
        f = self.point_in(face_rays, skip=_wall_key(a))
        eps = None
        for b in self.walls:
            ba, bf = dot(b, a), dot(b, f)
            if ba != 0 and bf != 0:
                e = Fraction(abs(bf), abs(ba))
                eps = e if eps is None or e < eps else eps
        eps = Fraction(1) if eps is None else eps / 2
        return primitive_rational([Fraction(x) - eps * y for x, y in zip(f, a)])

    def run(self) -> list[tuple[Vector, ...]]:
        found: dict[tuple, dict] = {}
        queue: list = []

        def visit(p):
            ch = self.chamber(p)
            if ch is None:
                return
            rays, facets = ch
            if rays not in found:
                found[rays] = facets
                queue.append(rays)

        for g in self.gens:
            p = self.point_in(g)
            if any(all(dot(a, p) > 0 for a in facets.values()) for facets in found.values()):
                continue
            visit(p)
            while queue:
                rays = queue.pop()
                for t, a in found[rays].items():
                    q = self.step_across([rays[i] for i in sorted(t)], a)
                    if any(all(dot(b, q) > 0 for b in fc.values()) for fc in found.values()):
                        continue
                    visit(q)
        return sorted(found)


def chamber_complex(dim: int, generator_sets: Sequence[Sequence[Sequence[int]]],
                    strict: bool = False) -> Fan:
    """Fan of maximal cells ``x -> intersection of the given cones containing x``.

    Only full-dimensional cones take part; lower-dimensional ones are unions of
    faces of the result whenever the family is closed under taking faces.
    """
    if dim == 0:
        return trivial_fan()
    cells, gens = [], []
    for gs in generator_sets:
        gs = [tuple(int(x) for x in g) for g in gs if any(g)]
        if not gs or rank(gs) < dim:
            continue
        if len(gs) == dim:
            # x = G^T lam, so the facet normals are the columns of G^{-1}
            normals = [primitive_rational(col) for col in zip(*inverse(gs))]
        else:
            normals, eqs = Cone.from_generators(dim, gs).hrep()
        cells.append(normals)
        gens.append(gs)
    if not cells:
        return Fan(dim, (), ())
    walker = _Walker(dim, cells, gens, strict=strict)
    return Fan.from_cones(dim, walker.run())


def common_refinement(cones: Sequence[Cone], rank_: int) -> Fan:
    """Common refinement of cones whose support is their union.

    Tries the intersection rule first (exact for face-closed families such as
    projected faces of a fan); if the cells overlap, falls back to refining by
    the facet hyperplanes of the non-containing cones as well.
    """
    gens = [c.generators for c in cones if c.rank == rank_]
    if len(gens) != len(cones):
        raise PolyhedralError("cones live in lattices of different rank")
    fan = chamber_complex(rank_, gens)
    if not _interiors_disjoint(fan):
        fan = chamber_complex(rank_, gens, strict=True)
    return fan


def _interiors_disjoint(f: Fan) -> bool:
    cones = f.cones()
    for a, b in itertools.combinations(cones, 2):
        if cone_intersect(a, b).dim == f.rank:
            return False
    return True


def is_refinement(fine: Fan, coarse: Fan) -> bool:
    """Every maximal cone of ``coarse`` is a union of maximal cones of ``fine``."""
    if fine.rank != coarse.rank:
        return False
    fcones, ccones = fine.cones(), coarse.cones()
    owner: dict[int, list[int]] = {i: [] for i in range(len(ccones))}
    for j, fc in enumerate(fcones):
        hits = [i for i, cc in enumerate(ccones) if cc.contains_cone(fc)]
        if not hits:
            return False
        owner[hits[0]].append(j)
    for i, cc in enumerate(ccones):
        parts = [fine.cone_rays()[j] for j in owner[i]]
        if not parts:
            return False
        cfacets = [a for a, _ in cc.facets()]
        walls: dict[frozenset, int] = {}
        for p in parts:
            for w in _cone_facet_raysets(fine.rank, p):
                walls[w] = walls.get(w, 0) + 1
        for w, count in walls.items():
            on_boundary = any(all(dot(a, r) == 0 for r in w) for a in cfacets)
            if on_boundary:
                if count != 1:
                    return False
            elif count != 2:
                return False
    return True


def is_coarsening(coarse: Fan, fine: Fan) -> bool:
    return is_refinement(fine, coarse)


# ---------------------------------------------------------------------------
# fan isomorphism


def fan_isomorphic(f: Fan, g: Fan, max_rays: int = 14) -> tuple[tuple[int, ...], ...] | None:
    """A unimodular ``M`` with ``M`` mapping the fan ``f`` onto ``g``, or None."""
    if f.rank != g.rank:
        raise PolyhedralError("fans live in lattices of different rank")
    if len(f.rays) != len(g.rays) or len(f.max_cones) != len(g.max_cones):
        return None
    if len(f.rays) > max_rays:
        raise PolyhedralError(f"isomorphism search capped at {max_rays} rays")
    d = f.rank
    if d == 0:
        return ()

    def degrees(h: Fan):
        deg = [0] * len(h.rays)
        for c in h.max_cones:
            for i in c:
                deg[i] += 1
        return deg

    fdeg, gdeg = degrees(f), degrees(g)
    if sorted(fdeg) != sorted(gdeg):
        return None
    if sorted(len(c) for c in f.max_cones) != sorted(len(c) for c in g.max_cones):
        return None

    basis = _independent_in_cone(f)
    if basis is None:
        return None
    B = [f.rays[i] for i in basis]
    Binv = inverse([list(col) for col in zip(*B)])
    gindex = {r: i for i, r in enumerate(g.rays)}
    gcones = set(g.max_cones)
    for gc in g.max_cones:
        if len(gc) < d:
            continue
        for tup in itertools.permutations(gc, d):
            if any(fdeg[i] != gdeg[j] for i, j in zip(basis, tup)):
                continue
            C = [list(col) for col in zip(*(g.rays[j] for j in tup))]
            M = [[sum(Fraction(C[i][k]) * Binv[k][j] for k in range(d)) for j in range(d)]
                 for i in range(d)]
            if any(x.denominator != 1 for row in M for x in row):
                continue
            M = tuple(tuple(int(x) for x in row) for row in M)
            if abs(determinant(M)) != 1:
                continue
            perm = []
            for r in f.rays:
                j = gindex.get(matvec(M, r))
                if j is None:
                    break
                perm.append(j)
            else:
                if {tuple(sorted(perm[i] for i in c)) for c in f.max_cones} == gcones:
                    return M
    return None


def _independent_in_cone(f: Fan) -> list[int] | None:
    for c in f.max_cones:
        chosen: list[int] = []
        for i in c:
            if rank([f.rays[j] for j in chosen + [i]]) == len(chosen) + 1:
                chosen.append(i)
            if len(chosen) == f.rank:
                return chosen
    return None


def fans_equal(f: Fan, g: Fan) -> bool:
    return f.rank == g.rank and f.canonical() == g.canonical()


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class Polytope:
    """H-described polytope; rows are ``(c_1..c_r, b)`` meaning ``c.x + b >= 0`` (or ``== 0``)."""

    rank: int
    inequalities: tuple[tuple[Fraction, ...], ...] = ()
    equations: tuple[tuple[Fraction, ...], ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_hrep(cls, rank_: int, inequalities=(), equations=()) -> "Polytope":
        def conv(rows):
            out = []
            for r in rows:
                r = tuple(Fraction(x) for x in r)
                if len(r) != rank_ + 1:
                    raise PolyhedralError(f"row {r} has wrong length for rank {rank_}")
                out.append(r)
            return tuple(out)
        return cls(rank_, conv(inequalities), conv(equations))

    def _homogenized(self):
        # variables (t, x): c.x + b t >= 0, t >= 0
        ineqs = [(r[-1],) + r[:-1] for r in self.inequalities]
        ineqs.append((1,) + (0,) * self.rank)
        eqs = [(r[-1],) + r[:-1] for r in self.equations]
        return double_description(ineqs, self.rank + 1, eqs)

    def _analyze(self):
        if "vertices" not in self._cache:
            lin, rays = self._homogenized()
            verts = sorted({tuple(Fraction(x, r[0]) for x in r[1:]) for r in rays if r[0] > 0})
            recession = [r for r in rays if r[0] == 0] + list(lin)
            self._cache["vertices"] = verts
            self._cache["bounded"] = not (verts and recession)
        return self._cache["vertices"], self._cache["bounded"]

    def is_empty(self) -> bool:
        return not self._analyze()[0]

    def is_bounded(self) -> bool:
        return self._analyze()[1]

    def vertices(self) -> list[tuple[Fraction, ...]]:
        return vertex_enumeration(self)

    def dim(self) -> int:
        v = self.vertices()
        if not v:
            return -1
        return rank([[a - b for a, b in zip(x, v[0])] for x in v[1:]]) if len(v) > 1 else 0

    def to_json(self) -> dict:
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        d = {"rank": self.rank,
             "inequalities": [[enc(x) for x in r] for r in self.inequalities],
             "equations": [[enc(x) for x in r] for r in self.equations]}
        verts, bounded = self._analyze()
        d["bounded"] = bounded
        d["empty"] = not verts
        if bounded:
            d["vertices"] = [[enc(x) for x in v] for v in verts]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Polytope":
        return cls.from_hrep(int(d["rank"]), d.get("inequalities", []), d.get("equations", []))


def vertex_enumeration(p: Polytope) -> list[tuple[Fraction, ...]]:
    """Exact vertex list; ``[]`` if empty; raises :class:`UnboundedError` if unbounded."""
    verts, bounded = p._analyze()
    if not bounded:
        raise UnboundedError("polytope is unbounded")
    return list(verts)


def convex_hull(points: Iterable[Sequence], rank_: int | None = None) -> Polytope:
    """H-representation (and vertices) of the convex hull of finitely many points."""
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise PolyhedralError("convex hull of no points")
    r = len(pts[0]) if rank_ is None else rank_
    # dual cone of cone{(1, p)}: (b, c) with b + c.p >= 0
    lin, rays = double_description([(1,) + p for p in pts], r + 1)
    ineqs = [tuple(Fraction(x) for x in c[1:]) + (Fraction(c[0]),) for c in rays]
    eqs = [tuple(Fraction(x) for x in e[1:]) + (Fraction(e[0]),) for e in lin]
    eq_normals = [e[:-1] for e in eqs]
    verts = []
    for p in pts:
        tight = [c[:-1] for c in ineqs if dot(c[:-1], p) + c[-1] == 0]
        if rank(tight + eq_normals) == r:
            verts.append(p)
    poly = Polytope(r, tuple(ineqs), tuple(eqs))
    poly._cache["vertices"] = sorted(verts)
    poly._cache["bounded"] = True
    return poly


def minkowski_sum(ps: Sequence[Polytope]) -> Polytope:
    if not ps:
        raise PolyhedralError("empty Minkowski sum")
    r = ps[0].rank
    if any(p.rank != r for p in ps):
        raise PolyhedralError("summands live in spaces of different rank")
    acc = [tuple(Fraction(0) for _ in range(r))]
    for p in ps:
        vs = vertex_enumeration(p)
        if not vs:
            raise PolyhedralError("Minkowski sum with an empty polytope")
        pts = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in vs}
        acc = convex_hull(pts, r).vertices()
    return convex_hull(acc, r)


def affine_lattice_basis(p: Polytope) -> tuple[tuple[int, ...], ...]:
    """HNF basis of the saturated lattice parallel to the affine span of ``p``."""
    verts = vertex_enumeration(p)
    if not verts:
        raise PolyhedralError("empty polytope")
    diffs = [[a - b for a, b in zip(v, verts[0])] for v in verts[1:]]
    diffs = [primitive_rational(d) for d in diffs if any(d)]
    if not diffs:
        return ()
    # saturation of the span: kernel of the kernel
    from .linalg import integer_kernel
    K = integer_kernel(diffs, p.rank)
    return integer_kernel(K, p.rank) if K else tuple(
        tuple(int(i == j) for j in range(p.rank)) for i in range(p.rank))


def normal_fan(p: Polytope) -> Fan:
    """Inner normal fan, in the dual of the lattice parallel to the affine span.

    Coordinates are taken with respect to the HNF basis of that lattice (see
    :func:`affine_lattice_basis`), so for a full-dimensional polytope they are
    the ambient ones.
    """
    if not p.is_bounded():
        raise UnboundedError("normal fan of an unbounded polytope")
    verts = vertex_enumeration(p)
    if not verts:
        raise PolyhedralError("normal fan of an empty polytope")
    B = affine_lattice_basis(p)
    s = len(B)
    if s == 0:
        return trivial_fan()
    # coordinates y with v = v0 + B^T y
    sol = _coordinates_in_basis(B, [[a - b for a, b in zip(v, verts[0])] for v in verts])
    cones = []
    for i, y in enumerate(sol):
        diffs = [[a - b for a, b in zip(z, y)] for j, z in enumerate(sol) if j != i]
        lin, rays = double_description(diffs, s)
        if lin:
            raise PolyhedralError("normal cone is not pointed")
        cones.append(rays)
    return Fan.from_cones(s, cones)


def _coordinates_in_basis(B: Sequence[Sequence[int]], vectors) -> list[tuple[Fraction, ...]]:
    s = len(B)
    # pick s independent columns of B to solve
    cols: list[int] = []
    for j in range(len(B[0])):
        if rank([[B[i][c] for c in cols + [j]] for i in range(s)]) == len(cols) + 1:
            cols.append(j)
        if len(cols) == s:
            break
    Binv = inverse([[B[i][c] for i in range(s)] for c in cols])
    out = []
    for v in vectors:
        y = tuple(sum(Binv[a][b] * Fraction(v[cols[b]]) for b in range(s)) for a in range(s))
        out.append(y)
    return out


def braid_fan(d: int) -> Fan:
    """Braid fan in ``Z^{d+1}/(1,...,1)`` with coordinates ``x_1..x_d`` (``x_0`` set to 0)."""
    cones = []
    n = d + 1
    for perm in itertools.permutations(range(n)):
        rays = []
        for m in range(1, n):
            s = set(perm[:m])
            v = [0] * n
            for i in s:
                v[i] = 1
            if v[0]:
                v = [x - 1 for x in v]
            rays.append(tuple(v[1:]))
        cones.append(rays)
    return Fan.from_cones(d, cones)
