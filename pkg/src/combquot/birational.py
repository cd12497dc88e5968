"""Exact rational maps: Grassmannian chart maps, mutation tables, quadric transitions.

Polynomials are :class:`sympy.Poly` objects over ``QQ``.  Variable names:

* ``u{j}_{l}`` coordinates of the Grassmannian Bruhat chart, ``j = 0..k``, ``l = k+1..n``;
* ``z{j}_{l}`` homogeneous coordinates of the j-th factor of (P^{n-k-1})^k,
  ``j = 0..k-1``, ``l = k+1..n``;
* ``y{j}_{l}`` affine torus coordinates, ``y_l^j = z_l^j / z_n^j``.

Variables are ordered by ``(j, l)``; normal forms use the graded
lexicographic order on that variable order.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import sympy
from sympy import Poly, QQ, Symbol

ORDER = "grlex"


class BirationalError(ValueError):
    pass


class IndeterminateError(BirationalError):
    pass


def _sym(prefix: str, j: int, l: int) -> Symbol:
    return Symbol(f"{prefix}{j}_{l}")


def chart_vars(n: int, k: int) -> tuple[Symbol, ...]:
    return tuple(_sym("u", j, l) for j in range(k + 1) for l in range(k + 1, n + 1))


def torus_vars(n: int, k: int) -> tuple[Symbol, ...]:
    return tuple(_sym("y", j, l) for j in range(k) for l in range(k + 1, n))


def factor_vars(n: int, k: int) -> tuple[tuple[Symbol, ...], ...]:
    return tuple(tuple(_sym("z", j, l) for l in range(k + 1, n + 1)) for j in range(k))


def _frac(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _terms(p: Poly) -> list[tuple[tuple[int, ...], Fraction]]:
    return [(m, _frac(c)) for m, c in p.terms()]


def _eval_terms(terms, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for mono, c in terms:
        t = c
        for x, e in zip(point, mono):
            if e:
                t *= x ** e
        total += t
    return total


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Reduced quotient of polynomials; the denominator is monic in grlex order."""

    __slots__ = ("num", "den", "_nt", "_dt")

    def __init__(self, num: Poly, den: Poly | None = None, reduced: bool = False):
        if den is None:
            den = Poly(1, *num.gens, domain=QQ)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not reduced:
            g = num.gcd(den)
            if not g.is_one:
                num, den = num.exquo(g), den.exquo(g)
            lc = den.LC(order=ORDER)
            if lc != 1:
                num, den = num.quo_ground(lc), den.quo_ground(lc)
        self.num, self.den = num, den
        self._nt = self._dt = None

    @classmethod
    def from_expr(cls, expr, gens: Sequence[Symbol]) -> "RationalFunction":
        n, d = sympy.fraction(sympy.together(sympy.sympify(expr)))
        return cls(Poly(n, *gens, domain=QQ), Poly(d, *gens, domain=QQ))

    @property
    def gens(self):
        return self.num.gens

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(Poly(other, *self.gens, domain=QQ))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.as_expr(), self.den.as_expr()))

    def is_zero(self) -> bool:
        return self.num.is_zero

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def __repr__(self):
        return f"RationalFunction({self.as_expr()})"

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        if self._nt is None:
            self._nt, self._dt = _terms(self.num), _terms(self.den)
        d = _eval_terms(self._dt, point)
        if d == 0:
            raise IndeterminateError("denominator vanishes")
        return _eval_terms(self._nt, point) / d

    def substitute(self, images: Sequence["RationalFunction"]) -> "RationalFunction":
        """Replace the i-th generator by ``images[i]`` (all over a common variable set)."""
        num_n, num_d = _subs_poly(self.num, images)
        den_n, den_d = _subs_poly(self.den, images)
        return RationalFunction(num_n * den_d, num_d * den_n)


def _subs_poly(p: Poly, images: Sequence[RationalFunction]) -> tuple[Poly, Poly]:
    gens = images[0].gens
    one = Poly(1, *gens, domain=QQ)
    degs = p.degree_list()
    cache: dict = {}

    def power(i, kind, e):
        key = (i, kind, e)
        if key not in cache:
            base = images[i].num if kind == 0 else images[i].den
            cache[key] = base ** e if e else one
        return cache[key]

    num = Poly(0, *gens, domain=QQ)
    for mono, c in p.terms():
        t = one.mul_ground(c)
        for i, e in enumerate(mono):
            if degs[i]:
                t = t * power(i, 0, e) * power(i, 1, degs[i] - e)
        num = num + t
    den = one
    for i, D in enumerate(degs):
        if D:
            den = den * power(i, 1, D)
    return num, den


# ---------------------------------------------------------------------------
# maps of products of projective spaces


def _clear_factor(polys: Sequence[Poly]) -> tuple[Poly, ...]:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise IndeterminateError("all components of a factor vanish identically")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = g.gcd(p)
        if g.is_one:
            break
    out = [p.exquo(g) if not g.is_one else p for p in polys]
    # integer primitive, first nonzero component with positive grlex leading coefficient
    den = 1
    for p in out:
        for c in p.coeffs():
            den = sympy.ilcm(den, sympy.Rational(c).q)
    out = [p.mul_ground(den) for p in out]
    cont = 0
    for p in out:
        for c in p.coeffs():
            cont = sympy.igcd(cont, sympy.Rational(c).p)
    first = next(p for p in out if not p.is_zero)
    if first.LC(order=ORDER) < 0:
        cont = -cont
    return tuple(p.quo_ground(cont) for p in out)


@dataclass(frozen=True)
class MultiProjectiveMap:
    """Rational self-map or map between products of projective spaces.

    ``source`` lists the homogeneous variables per source factor;
    ``components`` the cleared homogeneous polynomials per target factor,
    written in the flattened source variables.
    """

    source: tuple[tuple[Symbol, ...], ...]
    components: tuple[tuple[Poly, ...], ...]
    _terms: list = field(default=None, compare=False, repr=False, hash=False)

    @property
    def gens(self) -> tuple[Symbol, ...]:
        return tuple(v for f in self.source for v in f)

    @property
    def source_signature(self) -> tuple[int, ...]:
        return tuple(len(f) - 1 for f in self.source)

    @property
    def target_signature(self) -> tuple[int, ...]:
        return tuple(len(c) - 1 for c in self.components)

    @classmethod
    def from_exprs(cls, source: Sequence[Sequence[Symbol]], comps: Sequence[Sequence]
                   ) -> "MultiProjectiveMap":
        source = tuple(tuple(f) for f in source)
        gens = tuple(v for f in source for v in f)
        factors = []
        for comp in comps:
            fracs = [sympy.fraction(sympy.together(sympy.sympify(e))) for e in comp]
            nums = [Poly(n, *gens, domain=QQ) for n, _ in fracs]
            dens = [Poly(d, *gens, domain=QQ) for _, d in fracs]
            L = dens[0]
            for d in dens[1:]:
                L = L.lcm(d)
            factors.append(_clear_factor([n * L.exquo(d) for n, d in zip(nums, dens)]))
        return cls(source, tuple(factors))

    @classmethod
    def identity(cls, source: Sequence[Sequence[Symbol]]) -> "MultiProjectiveMap":
        return cls.from_exprs(source, source)

    def exprs(self):
        return [[p.as_expr() for p in f] for f in self.components]

    def __str__(self):
        return " x ".join("[" + " : ".join(str(e) for e in f) + "]" for f in self.exprs())

    def evaluate(self, point: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
        if self._terms is None:
            object.__setattr__(self, "_terms", [[_terms(p) for p in f] for f in self.components])
        flat = [Fraction(x) for f in point for x in f]
        out = []
        for f in self._terms:
            vals = tuple(_eval_terms(t, flat) for t in f)
            if not any(vals):
                raise IndeterminateError("indeterminate")
            out.append(vals)
        return tuple(out)


def compose(f: MultiProjectiveMap, g: MultiProjectiveMap) -> MultiProjectiveMap:
    """``f o g``."""
    if g.target_signature != f.source_signature:
        raise BirationalError(
            f"signature mismatch: {g.target_signature} -> {f.source_signature}")
    gens = g.gens
    one = Poly(1, *gens, domain=QQ)
    images = [p for comp in g.components for p in comp]
    cache: dict = {}

    def power(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = images[i] ** e if e else one
        return cache[(i, e)]

    factors = []
    for comp in f.components:
        polys = []
        for p in comp:
            acc = Poly(0, *gens, domain=QQ)
            for mono, c in p.terms():
                t = one.mul_ground(c)
                for i, e in enumerate(mono):
                    if e:
                        t = t * power(i, e)
                acc = acc + t
            polys.append(acc)
        factors.append(_clear_factor(polys))
    return MultiProjectiveMap(g.source, tuple(factors))


def maps_equal(f: MultiProjectiveMap, g: MultiProjectiveMap) -> tuple[bool, str | None]:
    """Equality up to per-factor scaling: all 2x2 minors of each factor vanish."""
    if f.target_signature != g.target_signature or f.gens != g.gens:
        return False, "signature mismatch"
    for F, G in zip(f.components, g.components):
        for a, b in itertools.combinations(range(len(F)), 2):
            minor = F[a] * G[b] - F[b] * G[a]
            if not minor.is_zero:
                return False, str(minor.as_expr())
        if all(p.is_zero for p in F) != all(p.is_zero for p in G):
            return False, "zero factor"
    return True, None


def projectively_equal(p: Sequence[Sequence[Fraction]], q: Sequence[Sequence[Fraction]]) -> bool:
    for a, b in zip(p, q):
        if len(a) != len(b):
            return False
        for i, j in itertools.combinations(range(len(a)), 2):
            if a[i] * b[j] != a[j] * b[i]:
                return False
        if not any(a) or not any(b):
            return False
    return True


def normalize_point(p: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    out = []
    for f in p:
        f = [Fraction(x) for x in f]
        lead = next((x for x in f if x), None)
        if lead is None:
            raise IndeterminateError("indeterminate")
        out.append(tuple(x / lead for x in f))
    return tuple(out)


def apply_point(f: MultiProjectiveMap, pt: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Image of a point; raises :class:`IndeterminateError` on the base locus."""
    if tuple(len(x) - 1 for x in pt) != f.source_signature:
        raise BirationalError("point does not match the source signature")
    return normalize_point(f.evaluate(pt))


# ---------------------------------------------------------------------------
# Grassmannian chart, quotient and mutation maps


def _transposition(i: int) -> Callable[[int], int]:
    def r(x: int) -> int:
        return i if x == i - 1 else i - 1 if x == i else x
    return r


def _check_nk(n: int, k: int):
    if not 1 <= k <= n - 2:
        raise BirationalError(f"need 1 <= k <= n-2, got n={n}, k={k}")


def _check_i(n: int, i: int):
    if not 1 <= i <= n:
        raise BirationalError(f"need 1 <= i <= n, got i={i}")


def grassmann_weyl_chart_map(n: int, k: int, i: int) -> dict[Symbol, RationalFunction]:
    """Action of the transposition (i-1, i) on the chart coordinates u_l^j."""
    _check_nk(n, k)
    _check_i(n, i)
    gens = chart_vars(n, k)
    u = {(j, l): _sym("u", j, l) for j in range(k + 1) for l in range(k + 1, n + 1)}
    r = _transposition(i)
    out = {}
    for (j, l), var in u.items():
        if i <= k:
            e = u[(r(j), l)]
        elif i > k + 1:
            e = u[(j, r(l))]
        else:
            piv = u[(k, k + 1)]
            if l == k + 1:
                e = 1 / piv if j == k else -u[(j, k + 1)] / piv
            elif j == k:
                e = u[(k, l)] / piv
            else:
                e = (piv * u[(j, l)] - u[(k, l)] * u[(j, k + 1)]) / piv
        out[var] = RationalFunction.from_expr(e, gens)
    return out


def grassmann_quotient_map(n: int, k: int) -> dict[Symbol, RationalFunction]:
    """``y_l^j = u_l^j u_n^k / (u_l^k u_n^j)``."""
    _check_nk(n, k)
    gens = chart_vars(n, k)
    out = {}
    for j in range(k):
        for l in range(k + 1, n):
            e = _sym("u", j, l) * _sym("u", k, n) / (_sym("u", k, l) * _sym("u", j, n))
            out[_sym("y", j, l)] = RationalFunction.from_expr(e, gens)
    return out


def quotient_exponent_matrix(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the quotient map monomials, one row per y_l^j."""
    gens = chart_vars(n, k)
    rows = []
    for rf in grassmann_quotient_map(n, k).values():
        (num_m, _), = rf.num.terms()
        (den_m, _), = rf.den.terms()
        rows.append(tuple(a - b for a, b in zip(num_m, den_m)))
    assert len(rows[0]) == len(gens)
    return tuple(rows)


def projective_involution(zs: Sequence) -> list:
    """``[z_1 : ... : z_m] -> [-z_1 : z_2 - z_1 : ... : z_m - z_1]``."""
    return [-zs[0]] + [z - zs[0] for z in zs[1:]]


def mutation_exprs(n: int, k: int, i: int) -> list[list]:
    _check_nk(n, k)
    _check_i(n, i)
    zv = factor_vars(n, k)
    ls = list(range(k + 1, n + 1))
    r = _transposition(i)
    if i <= k - 1:
        return [list(zv[r(j)]) for j in range(k)]
    if i == k:
        last = zv[k - 1]
        comps = [[zv[j][t] / last[t] for t in range(len(ls))] for j in range(k - 1)]
        comps.append([1 / last[t] for t in range(len(ls))])
        return comps
    if i == k + 1:
        return [projective_involution(list(zv[j])) for j in range(k)]
    pos = {l: t for t, l in enumerate(ls)}
    return [[zv[j][pos[r(l)]] for l in ls] for j in range(k)]


def mutation_map(n: int, k: int, i: int) -> MultiProjectiveMap:
    """Generator r_i of the mutation group acting on (P^{n-k-1})^k."""
    return MultiProjectiveMap.from_exprs(factor_vars(n, k), mutation_exprs(n, k, i))


def affine_mutation_map(n: int, k: int, i: int) -> dict[Symbol, RationalFunction]:
    """The mutation r_i read in the torus coordinates ``y_l^j = z_l^j / z_n^j``."""
    zv = factor_vars(n, k)
    gens = torus_vars(n, k)
    subs = {}
    for j in range(k):
        for t, z in enumerate(zv[j]):
            subs[z] = 1 if t == len(zv[j]) - 1 else _sym("y", j, k + 1 + t)
    out = {}
    for j, comp in enumerate(mutation_exprs(n, k, i)):
        comp = [sympy.sympify(c).xreplace(subs) for c in comp]
        for t in range(len(comp) - 1):
            out[_sym("y", j, k + 1 + t)] = RationalFunction.from_expr(comp[t] / comp[-1], gens)
    return out


def lines_points(n: int) -> list[tuple[tuple[Fraction, ...]]]:
    """``p_1 = [1:...:1]`` and the coordinate points ``p_2..p_n`` of P^{n-2}."""
    m = n - 1
    pts = [(tuple(Fraction(1) for _ in range(m)),)]
    for a in range(m):
        pts.append((tuple(Fraction(int(b == a)) for b in range(m)),))
    return pts


def point_orbit(maps: Sequence[MultiProjectiveMap], start) -> list:
    """Orbit of a point under the group generated by ``maps`` (all defined on it)."""
    start = normalize_point(start)
    seen = [start]
    frontier = [start]
    while frontier:
        new = []
        for p in frontier:
            for f in maps:
                q = apply_point(f, p)
                if not any(projectively_equal(q, s) for s in seen):
                    seen.append(q)
                    new.append(q)
        frontier = new
    return seen


def base_locus_components(f: MultiProjectiveMap) -> int:
    """Number of coordinate-pair loci ``{z_a = z_b = 0}`` on which some target factor is undefined."""
    gens = f.gens
    for comp in f.components:
        monomial = all(len(p.terms()) <= 1 for p in comp)
        linear = all(p.is_zero or p.total_degree() == 1 and p.is_homogeneous for p in comp)
        if not (monomial or linear):
            raise BirationalError("unsupported map shape for base locus count")
    count = 0
    for factor in f.source:
        if len(factor) < 3:
            continue  # {z_a = z_b = 0} is empty on P^1
        for a, b in itertools.combinations(factor, 2):
            idx = (gens.index(a), gens.index(b))
            for comp in f.components:
                if all(all(any(m[i] for i in idx) for m, _ in p.terms()) for p in comp):
                    count += 1
                    break
    return count


# ---------------------------------------------------------------------------
# relation checks


@dataclass
class RelationResult:
    relation: str
    holds: bool
    witness: str | None = None

    def to_json(self) -> dict:
        return {"relation": self.relation, "holds": self.holds, "witness": self.witness}


@dataclass
class RelationReport:
    kind: str
    mode: str
    results: list[RelationResult]
    seed: int | None = None
    samples: int | None = None

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results)

    def to_json(self) -> dict:
        return {"kind": self.kind, "mode": self.mode, "seed": self.seed,
                "samples": self.samples, "holds": self.holds,
                "results": [r.to_json() for r in self.results]}


def coxeter_words(m: int) -> list[tuple[str, tuple[int, ...]]]:
    """Relations of S_{m+1} in the generators r_1..r_m as words of 1-based indices."""
    words = []
    for i in range(1, m + 1):
        words.append((f"r{i}^2", (i, i)))
    for i in range(1, m):
        words.append((f"(r{i} r{i + 1})^3", (i, i + 1) * 3))
    for i, j in itertools.combinations(range(1, m + 1), 2):
        if j - i >= 2:
            words.append((f"(r{i} r{j})^2", (i, j) * 2))
    return words


def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def verify_coxeter(maps: Sequence[MultiProjectiveMap], mode: str = "symbolic",
                   seed: int = 0, samples: int = 20) -> RelationReport:
    """Check the Coxeter relations of S_{m+1} for the self-maps r_1..r_m."""
    if len({m.source_signature for m in maps}) > 1:
        raise BirationalError("maps do not share a signature")
    if mode not in ("symbolic", "eval"):
        raise BirationalError(f"unknown mode {mode!r}")
    results = []
    if mode == "symbolic":
        ident = MultiProjectiveMap.identity(maps[0].source)
        for name, word in coxeter_words(len(maps)):
            acc = ident
            for i in reversed(word):
                acc = compose(maps[i - 1], acc)
            ok, wit = maps_equal(acc, ident)
            results.append(RelationResult(name, ok, wit))
        return RelationReport("coxeter", mode, results)
    rng = random.Random(seed)
    sig = maps[0].source_signature
    for name, word in coxeter_words(len(maps)):
        ok, wit, done = True, None, 0
        attempts = 0
        while done < samples and ok:
            attempts += 1
            if attempts > 50 * samples:
                raise BirationalError("could not sample points off the base loci")
            pt = tuple(tuple(random_rational(rng) for _ in range(d + 1)) for d in sig)
            try:
                img = pt
                for i in reversed(word):
                    img = maps[i - 1].evaluate(img)
            except IndeterminateError:
                continue
            done += 1
            if not projectively_equal(img, pt):
                ok, wit = False, f"{name} moves {[[str(x) for x in f] for f in pt]}"
        results.append(RelationResult(name, ok, wit))
    return RelationReport("coxeter", mode, results, seed=seed, samples=samples)


def verify_equivariance(n: int, k: int, mode: str = "symbolic", seed: int = 0,
                        samples: int = 20) -> RelationReport:
    """Check that the quotient map intertwines the chart action and the mutation, per generator."""
    quot = grassmann_quotient_map(n, k)
    yvars = list(quot)
    q_list = [quot[y] for y in yvars]
    uvars = chart_vars(n, k)
    results = []
    rng = random.Random(seed)
    for i in range(1, n + 1):
        chart = grassmann_weyl_chart_map(n, k, i)
        chart_list = [chart[u] for u in uvars]
        mu = affine_mutation_map(n, k, i)
        mu_list = [mu[y] for y in yvars]
        name = f"q o r{i} = mu(r{i}) o q"
        if mode == "symbolic":
            wit = None
            for y, qy, muy in zip(yvars, q_list, mu_list):
                lhs = qy.substitute(chart_list)
                rhs = muy.substitute(q_list)
                if lhs != rhs:
                    wit = f"{y}: {(lhs - rhs).as_expr()}"
                    break
            results.append(RelationResult(name, wit is None, wit))
            continue
        ok, wit, done, attempts = True, None, 0, 0
        while done < samples and ok:
            attempts += 1
            if attempts > 50 * samples:
                raise BirationalError("could not sample points off the denominators")
            pt = [random_rational(rng) for _ in uvars]
            try:
                moved = [c.evaluate(pt) for c in chart_list]
                lhs = [c.evaluate(moved) for c in q_list]
                qy = [c.evaluate(pt) for c in q_list]
                rhs = [c.evaluate(qy) for c in mu_list]
            except (IndeterminateError, ZeroDivisionError):
                continue
            done += 1
            if lhs != rhs:
                ok, wit = False, f"mismatch at u = {[str(x) for x in pt]}"
        results.append(RelationResult(name, ok, wit))
    return RelationReport("equivariance", mode, results,
                          seed=seed if mode == "eval" else None,
                          samples=samples if mode == "eval" else None)


# ---------------------------------------------------------------------------
# quadric chart transitions


def quadric_transition(n: int, i: int, order: str = "involutive") -> tuple[tuple[int, ...], ...]:
    """Transition between the quotients of chart 1 and chart i, a matrix on (y_1..y_n).

    ``order="literal"`` returns ``(y_1 : -sum y : y_2 : ... : ^y_i : ... : y_n)``;
    ``order="involutive"`` writes the same coordinates with ``-sum y`` in the
    slot of ``y_i``, which differs by a permutation of the target slots 2..n
    and is an involution.
    """
    if not 2 <= i <= n:
        raise BirationalError(f"need 2 <= i <= n, got i={i}")

    def e(t):
        return tuple(int(s == t) for s in range(n))

    minus_sum = (-1,) * n
    if order == "literal":
        rows = [e(0), minus_sum] + [e(t) for t in range(1, n) if t != i - 1]
    elif order == "involutive":
        rows = [minus_sum if t == i - 1 else e(t) for t in range(n)]
    else:
        raise BirationalError(f"unknown order {order!r}")
    return tuple(rows)


def even_quadric_transition(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Transition on P^{n-2} with coordinates (y_2..y_n): ``y_i -> -(y_2 + ... + y_n)``."""
    if not 2 <= i <= n:
        raise BirationalError(f"need 2 <= i <= n, got i={i}")
    m = n - 1
    return tuple((-1,) * m if t == i - 2 else tuple(int(s == t) for s in range(m))
                 for t in range(m))


def _sign_normal(v: Sequence[int]) -> tuple[int, ...]:
    from .linalg import primitive
    v = primitive(v)
    lead = next(x for x in v if x)
    return v if lead > 0 else tuple(-x for x in v)


def quadric_boundary(n: int, even: bool = False) -> list[tuple[int, ...]]:
    """Pullbacks to the quotient of chart 1 of the boundary hyperplanes of every chart.

    Odd case: forms on (y_1..y_n); boundary coordinates y_2..y_n.
    Even case: forms on (y_2..y_n); every coordinate is a boundary coordinate.
    """
    if n < (3 if even else 2):
        raise BirationalError("dimension too small")
    m = n - 1 if even else n
    ident = tuple(tuple(int(s == t) for s in range(m)) for t in range(m))
    if even:
        charts = [ident] + [even_quadric_transition(n, i) for i in range(2, n + 1)]
        slots = range(m)
    else:
        charts = [ident] + [quadric_transition(n, i) for i in range(2, n + 1)]
        slots = range(1, m)
    # antipodal charts P_{n+i} induce the identity on quotients: same pullbacks
    forms = {_sign_normal(M[s]) for M in charts for s in slots}
    return sorted(forms, key=lambda f: (-sum(1 for x in f if x), f))


def format_linear_form(form: Sequence[int], first_index: int = 1) -> str:
    terms = []
    for t, c in enumerate(form):
        if not c:
            continue
        var = f"y{t + first_index}"
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        terms.append(f"{coef}{var}")
    return " + ".join(terms).replace("+ -", "- ")
