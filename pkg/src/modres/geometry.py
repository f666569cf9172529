"""Projective line geometry over finite fields: directrices, line complexes, carriers.

Everything is computed in the coordinates of a fixed basis of an ambient
subspace (normally K0 of a neighborly structure); points are reported back
in the coordinates of F^n so they compare directly with V(Gamma).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import field as ff
from .field import Field, Vector
from .graphs import NeighborlyStructure
from .matroid import Matroid
from .neighborly import k_space
from .resonance import DEFAULT_POINT_CAP, CapExceeded

DEFAULT_LINE_CAP = 10**6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class ProjectiveSpace:
    """P(W) for W = span(basis) inside F^n; local coordinates refer to `basis`."""

    field: Field
    basis: tuple[Vector, ...]
    n: int

    @classmethod
    def of(cls, f: Field, basis: Sequence[Sequence[int]], n: int | None = None) -> "ProjectiveSpace":
        basis = ff.span(f, basis, n if n is not None else len(basis[0]))
        if not basis:
            raise ValueError("ambient subspace is zero")
        return cls(f, tuple(basis), len(basis[0]))

    @classmethod
    def full(cls, f: Field, k: int) -> "ProjectiveSpace":
        return cls(f, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)), k)

    @property
    def k(self) -> int:
        """Vector-space dimension of W."""
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.k - 1

    def embed(self, c: Sequence[int]) -> Vector:
        return ff.combine(self.field, c, self.basis, self.n)

    def coords(self, v: Sequence[int]) -> Vector:
        """Local coordinates of an ambient vector (raises if v is not in W)."""
        f = self.field
        # the basis is in RREF, so coordinates are read off at pivot columns
        pivots = [next(i for i, x in enumerate(b) if x) for b in self.basis]
        c = tuple(v[p] for p in pivots)
        if tuple(self.embed(c)) != tuple(v):
            raise ValueError("vector is not in the ambient subspace")
        return c

    def local_subspace(self, vectors: Iterable[Sequence[int]]) -> list[Vector]:
        return ff.span(self.field, [self.coords(v) for v in vectors], self.k)

    def count_points(self) -> int:
        return ff.count_projective_points(self.field.q, self.k)

    def points(self, cap: int = DEFAULT_POINT_CAP) -> list[Vector]:
        """Canonical points, in ambient coordinates."""
        if self.count_points() > cap:
            raise CapExceeded("projective points", self.count_points(), cap)
        return sorted(ff.normalize(self.field, self.embed(c)) for c in ff.projective_points(self.field, self.k))

    def count_lines(self) -> int:
        return gaussian_binomial(self.k, 2, self.field.q)

    def lines(self, cap: int = DEFAULT_LINE_CAP) -> list["ProjectiveLine"]:
        if self.count_lines() > cap:
            raise CapExceeded("projective lines", self.count_lines(), cap)
        return list(iter_lines(self.field, self.k))


@dataclass(frozen=True)
class ProjectiveLine:
    """A line in local coordinates, held as the RREF pair spanning it."""

    rows: tuple[Vector, Vector]
    plucker: tuple[int, ...]

    @classmethod
    def through(cls, f: Field, a: Sequence[int], b: Sequence[int]) -> "ProjectiveLine":
        rows = ff.span(f, [a, b], len(a))
        if len(rows) != 2:
            raise ValueError("points do not span a line")
        return cls((rows[0], rows[1]), plucker(f, rows[0], rows[1]))

    def points(self, f: Field) -> list[Vector]:
        return ff.subspace_points(f, self.rows, len(self.rows[0]))


def plucker(f: Field, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Coordinates L_ij = a_i b_j - a_j b_i for i < j, scaled to first nonzero 1."""
    k = len(a)
    v = [f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i])) for i, j in itertools.combinations(range(k), 2)]
    return ff.normalize(f, v)


def plucker_relations(f: Field, p: Sequence[int], k: int) -> list[int]:
    """Values of the three-term relations p_ij p_kl - p_ik p_jl + p_il p_jk."""
    index = {pair: t for t, pair in enumerate(itertools.combinations(range(k), 2))}
    out = []
    for i, j, a, b in itertools.combinations(range(k), 4):
        x = f.mul(p[index[i, j]], p[index[a, b]])
        y = f.mul(p[index[i, a]], p[index[j, b]])
        z = f.mul(p[index[i, b]], p[index[j, a]])
        out.append(f.add(f.sub(x, y), z))
    return out


def iter_lines(f: Field, k: int):
    """All lines of P^{k-1}(F), as RREF pairs, ordered by pivot pair then entries."""
    q = f.q
    for i, j in itertools.combinations(range(k), 2):
        free1 = [c for c in range(i + 1, k) if c != j]
        free2 = list(range(j + 1, k))
        for v1 in itertools.product(range(q), repeat=len(free1)):
            a = [0] * k
            a[i] = 1
            for c, x in zip(free1, v1):
                a[c] = x
            for v2 in itertools.product(range(q), repeat=len(free2)):
                b = [0] * k
                b[j] = 1
                for c, x in zip(free2, v2):
                    b[c] = x
                ta, tb = tuple(a), tuple(b)
                yield ProjectiveLine((ta, tb), plucker(f, ta, tb))


def meets(f: Field, line: ProjectiveLine, d: Sequence[Sequence[int]]) -> bool:
    """L meets P(D) iff rank [B | xi | nu] < dim D + 2."""
    d = list(d)
    if not d:
        return False
    k = len(line.rows[0])
    return ff.rank(f, d + list(line.rows), k) < ff.rank(f, d, k) + 2


# -- directrices ---------------------------------------------------------------------

@dataclass(frozen=True)
class Directrix:
    block: tuple[int, ...]  # block together with cone vertices
    basis: tuple[Vector, ...]  # ambient coordinates, inside the ambient space

    @property
    def dim(self) -> int:
        """Projective dimension (-1 when empty)."""
        return len(self.basis) - 1

    @property
    def is_pole(self) -> bool:
        return len(self.basis) == 1


def ambient_space(m: Matroid, f: Field, g: NeighborlyStructure) -> ProjectiveSpace:
    """P(K0) for the structure."""
    K0 = k_space(m, f, g).K0
    if not K0:
        raise ValueError(f"K0 is zero for {g.format(m.labels)}")
    return ProjectiveSpace(f, tuple(K0), m.n)


def directrices(m: Matroid, f: Field, g: NeighborlyStructure) -> list[Directrix]:
    """D_S = {xi in K0 : xi_i = 0 for i in S}, one per clique S = block | cones."""
    ks = k_space(m, f, g)
    out = []
    for S in g.cliques():
        # combinations of the K0 basis vanishing on S
        coeff_rows = [[b[s] for b in ks.K0] for s in sorted(S)]
        coeffs = ff.kernel_basis(f, coeff_rows, len(ks.K0))
        basis = ff.span(f, [ff.combine(f, c, ks.K0, m.n) for c in coeffs], m.n)
        out.append(Directrix(tuple(sorted(S)), tuple(basis)))
    return out


# -- line complexes -----------------------------------------------------------------------

@dataclass
class LineComplex:
    space: ProjectiveSpace
    lines: list[ProjectiveLine]
    proper: list[tuple[Vector, ...]]  # local bases of the proper directrices actually tested

    def __len__(self) -> int:
        return len(self.lines)


def _proper_part(space: ProjectiveSpace, ds: Sequence[Sequence[Sequence[int]]]) -> list[list[Vector]]:
    """Drop hyperplanes and the whole space: every line meets them."""
    out = []
    for d in ds:
        local = space.local_subspace(d)
        if len(local) < space.k - 1:
            out.append(local)
    return out


def line_complex(space: ProjectiveSpace, ds: Sequence[Sequence[Sequence[int]] | Directrix],
                 cap: int = DEFAULT_LINE_CAP) -> LineComplex:
    """All lines of the space meeting every P(D)."""
    f = space.field
    bases = [d.basis if isinstance(d, Directrix) else d for d in ds]
    proper = _proper_part(space, bases)
    # a line meets P(D) iff its two spanning vectors become dependent modulo D
    quotients = [ff.annihilator(f, d, space.k) if d else None for d in proper]
    if any(Q is None for Q in quotients):
        return LineComplex(space, [], [tuple(d) for d in proper])
    if not proper:
        return LineComplex(space, space.lines(cap), [])
    if space.count_lines() > cap:
        raise CapExceeded("projective lines", space.count_lines(), cap)
    kept = []
    for L in iter_lines(f, space.k):
        a, b = L.rows
        for Q in quotients:
            qa = [ff.dot(f, r, a) for r in Q]
            qb = [ff.dot(f, r, b) for r in Q]
            if ff.rank(f, [qa, qb], len(Q)) == 2:
                break
        else:
            kept.append(L)
    return LineComplex(space, kept, [tuple(d) for d in proper])


@dataclass
class Carrier:
    space: ProjectiveSpace
    points: set[Vector]  # ambient coordinates
    depth: dict[Vector, int]

    def stratum(self, k: int) -> set[Vector]:
        return {p for p, d in self.depth.items() if d >= k}


def carrier(c: LineComplex) -> Carrier:
    """Union of the complex's lines, with depth = dim of the union of lines through a point."""
    f = c.space.field
    through: dict[Vector, list[ProjectiveLine]] = {}
    for L in c.lines:
        for p in L.points(f):
            through.setdefault(p, []).append(L)
    pts: set[Vector] = set()
    depth = {}
    for p, ls in through.items():
        amb = ff.normalize(f, c.space.embed(p))
        pts.add(amb)
        rows = [r for L in ls for r in L.rows]
        depth[amb] = ff.rank(f, rows, c.space.k) - 1
    return Carrier(c.space, pts, depth)


def structure_carrier(m: Matroid, f: Field, g: NeighborlyStructure,
                      cap_lines: int = DEFAULT_LINE_CAP) -> tuple[list[Directrix], LineComplex, Carrier]:
    space = ambient_space(m, f, g)
    ds = directrices(m, f, g)
    cx = line_complex(space, ds, cap_lines)
    return ds, cx, carrier(cx)


# -- hypersurfaces -------------------------------------------------------------------------

def monomials(k: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree d in k variables, lexicographically descending."""
    out = []
    for combo in itertools.combinations_with_replacement(range(k), d):
        e = [0] * k
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


def evaluate(f: Field, mono: Sequence[tuple[int, ...]], coeffs: Sequence[int], x: Sequence[int]) -> int:
    acc = 0
    for e, c in zip(mono, coeffs):
        if c:
            t = c
            for xi, ei in zip(x, e):
                if ei:
                    t = f.mul(t, f.pow(xi, ei))
            acc = f.add(acc, t)
    return acc


def _monomial_row(f: Field, mono, x) -> list[int]:
    return [evaluate(f, [e], [1], x) for e in mono]


@dataclass
class Hypersurface:
    degree: int
    dim: int  # dimension of the space of degree-d forms vanishing on the points
    monomials: list[tuple[int, ...]]
    coeffs: list[int]  # first form of the RREF solution basis
    basis: list[Vector]
    exact: bool  # common zero set of the solution space equals the point set
    all_points: bool  # the first form vanishes on every rational point of the ambient space

    def format(self, f: Field, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(len(self.monomials[0]))]
        terms = []
        for e, c in zip(self.monomials, self.coeffs):
            if not c:
                continue
            mono = "*".join(n if p == 1 else f"{n}^{p}" for n, p in zip(names, e) if p)
            cs = f.format(c)
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(terms) or "0"


def interpolate_hypersurface(points: Iterable[Sequence[int]], space: ProjectiveSpace,
                             max_deg: int = 4, cap: int = DEFAULT_POINT_CAP) -> Hypersurface | None:
    """Lowest degree d <= max_deg with a nonzero form vanishing on the points.

    Only rational points are seen, so over small fields a form may vanish on
    every point of the ambient space; ``all_points`` flags that case.
    """
    f = space.field
    local = [space.coords(p) for p in points]
    ambient = [ff.normalize(f, c) for c in ff.projective_points(f, space.k)] if space.count_points() <= cap else None
    target = {ff.normalize(f, c) for c in local}
    for d in range(1, max_deg + 1):
        mono = monomials(space.k, d)
        rows = [_monomial_row(f, mono, x) for x in local]
        sol = ff.kernel_basis(f, rows, len(mono))
        if not sol:
            continue
        exact = False
        all_points = False
        if ambient is not None:
            zeros = {x for x in ambient if all(evaluate(f, mono, s, x) == 0 for s in sol)}
            exact = zeros == target
            all_points = all(evaluate(f, mono, sol[0], x) == 0 for x in ambient)
        return Hypersurface(d, len(sol), mono, list(sol[0]), list(sol), exact, all_points)
    return None


# -- incidence report ----------------------------------------------------------------------

@dataclass
class DirectrixReport:
    pair_dims: dict[tuple[int, int], int]  # projective dim of D_a & D_b (-1 if empty)
    points: list[Vector]  # distinct intersection points of pairs meeting in a point
    points_span_dim: int
    on_directrix: dict[int, list[Vector]] = field(default_factory=dict)
    collinear_on: dict[int, bool] = field(default_factory=dict)
    poles: list[int] = field(default_factory=list)
    poles_collinear: bool | None = None

    @property
    def coplanar(self) -> bool:
        return self.points_span_dim <= 2


def directrix_geometry_report(f: Field, ds: Sequence[Sequence[Sequence[int]] | Directrix], n: int) -> DirectrixReport:
    bases = [list(d.basis) if isinstance(d, Directrix) else [tuple(v) for v in d] for d in ds]
    pair_dims = {}
    pts: list[Vector] = []
    for a, b in itertools.combinations(range(len(bases)), 2):
        inter = ff.intersect(f, bases[a], bases[b], n)
        pair_dims[(a, b)] = len(inter) - 1
        if len(inter) == 1:
            p = ff.normalize(f, inter[0])
            if p not in pts:
                pts.append(p)
    span_dim = ff.rank(f, pts, n) - 1 if pts else -1
    on, col = {}, {}
    for a, B in enumerate(bases):
        here = [p for p in pts if ff.in_span(f, B, p)]
        on[a] = here
        col[a] = ff.rank(f, here, n) <= 2 if here else True
    poles = [a for a, B in enumerate(bases) if len(B) == 1]
    poles_col = None
    if len(poles) >= 2:
        poles_col = ff.rank(f, [bases[a][0] for a in poles], n) <= 2
    return DirectrixReport(pair_dims, sorted(pts), span_dim, on, col, poles, poles_col)


def carrier_json(f: Field, car: Carrier, hyp: Hypersurface | None) -> dict:
    pts = sorted(car.points)
    out = {
        "ambient_dim": car.space.dim,
        "points": [ff.format_vector(f, p) for p in pts],
        "depth": {ff.format_vector(f, p): car.depth[p] for p in pts},
        "hypersurface": None,
    }
    if hyp is not None:
        out["hypersurface"] = {
            "degree": hyp.degree,
            "coeffs": [f.format(c) for c in hyp.coeffs],
            "monomials": [list(e) for e in hyp.monomials],
            "solution_dim": hyp.dim,
            "exact": hyp.exact,
            "all_points": hyp.all_points,
        }
    return out
