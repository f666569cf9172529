"""Neighborly structures, the spaces K and K0, and the strata V_k(Gamma)."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import field as ff
from .field import Field, Vector
from .graphs import NeighborlyStructure
from .matroid import Matroid
from .resonance import DEFAULT_POINT_CAP, CapExceeded, ResonanceError, enumerate_resonance

MAX_ENUMERATION_N = 12


# -- neighborliness -----------------------------------------------------------------

def restricted_lines(m: Matroid, support: Sequence[int]) -> list[tuple[int, ...]]:
    """Lines of the restriction of m to `support` (sets of size >= 2)."""
    u = set(support)
    out = []
    for X in m.all_lines():
        Y = tuple(i for i in X if i in u)
        if len(Y) >= 2:
            out.append(Y)
    return out


def is_neighborly(m: Matroid, g: NeighborlyStructure) -> bool:
    """|X & S| >= |X| - 1 implies X <= S, for every line X and block S.

    Cone vertices are removed first (the graph is neighborly iff its
    restriction to the support is neighborly for the restricted matroid),
    so lines are cut down to the support before testing.
    """
    if g.n != m.n:
        return False
    where = g.block_of()
    for Y in restricted_lines(m, g.support):
        counts: dict[int, int] = {}
        for i in Y:
            counts[where[i]] = counts.get(where[i], 0) + 1
        if len(counts) > 1 and max(counts.values()) >= len(Y) - 1:
            return False
    return True


def x_gamma(m: Matroid, g: NeighborlyStructure) -> list[tuple[int, ...]]:
    """Nontrivial lines of m that are not cliques of the structure."""
    return [X for X in m.lines if not g.is_clique(X)]


def incidence_matrix(m: Matroid, g: NeighborlyStructure) -> list[list[int]]:
    """0/1 line-point incidence matrix of x_gamma (one row per line)."""
    return [[1 if i in X else 0 for i in range(m.n)] for X in x_gamma(m, g)]


@dataclass(frozen=True)
class KSpace:
    K: tuple[Vector, ...]
    K0: tuple[Vector, ...]

    @property
    def dim_K(self) -> int:
        return len(self.K)

    @property
    def dim_K0(self) -> int:
        return len(self.K0)


@functools.lru_cache(maxsize=4096)
def k_space(m: Matroid, f: Field, g: NeighborlyStructure) -> KSpace:
    """K = {xi : xi_X = 0 on x_gamma, xi = 0 on cones}; K0 = K with coordinate sum 0.

    Vectors of V(Gamma) and their partners vanish on cone vertices, so the
    cone coordinates are cut out here as well.
    """
    rows = [[f.from_int(x) for x in r] for r in incidence_matrix(m, g)]
    rows += [[1 if i == c else 0 for i in range(m.n)] for c in sorted(g.cones)]
    K = ff.kernel_basis(f, rows, m.n)
    K0 = ff.kernel_basis(f, rows + [[1] * m.n], m.n)
    return KSpace(tuple(K), tuple(K0))


def in_k(m: Matroid, f: Field, g: NeighborlyStructure, lam: Sequence[int]) -> bool:
    return ff.in_span(f, k_space(m, f, g).K, lam)


def _z_gamma_basis(f: Field, g: NeighborlyStructure, K: Sequence[Vector], lam: Sequence[int]) -> list[Vector]:
    rows = []
    for i, j in g.block_edges():
        li, lj = lam[i], lam[j]
        rows.append([f.sub(f.mul(li, b[j]), f.mul(lj, b[i])) for b in K])
    coeffs = ff.kernel_basis(f, rows, len(K))
    n = len(lam)
    return ff.span(f, [ff.combine(f, c, K, n) for c in coeffs], n)


def z_gamma(m: Matroid, f: Field, g: NeighborlyStructure, lam: Sequence[int]) -> list[Vector]:
    """Z_Gamma(lam): vectors of K parallel to lam along every edge."""
    ks = k_space(m, f, g)
    if not ff.in_span(f, ks.K, lam):
        raise ResonanceError("weight is not in K(Gamma)")
    return _z_gamma_basis(f, g, ks.K, lam)


def _dims_over_k(m: Matroid, f: Field, g: NeighborlyStructure, cap: int) -> dict[Vector, int]:
    ks = k_space(m, f, g)
    total = ff.count_projective_points(f.q, ks.dim_K)
    if total > cap:
        raise CapExceeded(f"P(K) for {g.format(m.labels)}", total, cap)
    return dict(_dims_cached(m, f, g))


@functools.lru_cache(maxsize=4096)
def _dims_cached(m: Matroid, f: Field, g: NeighborlyStructure):
    ks = k_space(m, f, g)
    out = []
    for lam in ff.subspace_points(f, ks.K, m.n):
        d = len(_z_gamma_basis(f, g, ks.K, lam))
        if d >= 2:
            out.append((lam, d))
    return tuple(sorted(out))


def v_stratum(m: Matroid, f: Field, g: NeighborlyStructure, k: int = 1,
              cap: int = DEFAULT_POINT_CAP) -> set[Vector]:
    """Canonical points of P(K) with dim Z_Gamma >= k + 1."""
    return {p for p, d in _dims_over_k(m, f, g, cap).items() if d >= k + 1}


def v_depths(m: Matroid, f: Field, g: NeighborlyStructure, cap: int = DEFAULT_POINT_CAP) -> dict[Vector, int]:
    """Point of V(Gamma) -> dim Z_Gamma(point) - 1."""
    return {p: d - 1 for p, d in _dims_over_k(m, f, g, cap).items()}


# -- enumeration ----------------------------------------------------------------------

def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions, via restricted growth strings."""
    items = list(items)
    if not items:
        yield []
        return
    n = len(items)
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            blocks: list[list] = [[] for _ in range(top + 1)]
            for x, b in zip(items, a):
                blocks[b].append(x)
            yield blocks
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)


def _forced_groups(m: Matroid, support: Sequence[int]) -> list[list[int]]:
    """Union-find over the 2-point lines of the restriction: they must share a block."""
    parent = {i: i for i in support}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for Y in restricted_lines(m, support):
        if len(Y) == 2:
            a, b = find(Y[0]), find(Y[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in support:
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def candidate_structures(m: Matroid) -> Iterator[NeighborlyStructure]:
    """Neighborly partition-type structures with at least two blocks."""
    for size in range(m.n + 1):
        for cones in itertools.combinations(range(m.n), size):
            support = [i for i in range(m.n) if i not in cones]
            if len(support) < 2:
                continue
            groups = _forced_groups(m, support)
            if len(groups) < 2:
                continue
            for part in set_partitions(groups):
                if len(part) < 2:
                    continue
                blocks = [sorted(x for grp in blk for x in grp) for blk in part]
                g = NeighborlyStructure.make(m.n, cones, blocks)
                if is_neighborly(m, g):
                    yield g


def enumerate_neighborly(m: Matroid, f: Field, max_n: int = MAX_ENUMERATION_N) -> list[NeighborlyStructure]:
    """Neighborly structures with dim K >= 2, deduplicated, in a fixed order."""
    if m.n > max_n:
        raise CapExceeded("neighborly enumeration (ground set size)", m.n, max_n)
    return list(_enumerate_cached(m, f))


@functools.lru_cache(maxsize=64)
def _enumerate_cached(m: Matroid, f: Field) -> tuple[NeighborlyStructure, ...]:
    seen = {}
    for g in candidate_structures(m):
        if g.key not in seen and k_space(m, f, g).dim_K >= 2:
            seen[g.key] = g
    return tuple(seen.values())


# -- constituents ----------------------------------------------------------------------

@dataclass
class ConstituentReport:
    structure: NeighborlyStructure
    dim_K: int
    dim_K0: int
    strata: dict[int, frozenset[Vector]]
    is_maximal: bool = True
    contained_in: list[NeighborlyStructure] = field(default_factory=list)
    same_as: list[NeighborlyStructure] = field(default_factory=list)

    @property
    def points(self) -> frozenset[Vector]:
        return self.strata.get(1, frozenset())

    @property
    def essential(self) -> bool:
        return not self.structure.cones

    def span_dim(self, f: Field) -> int:
        """Projective dimension of the linear span of V."""
        n = self.structure.n
        return ff.rank(f, list(self.points), n) - 1

    def is_linear(self, f: Field) -> bool:
        return len(self.points) == ff.count_projective_points(f.q, self.span_dim(f) + 1)


def constituents(m: Matroid, f: Field, cap: int = DEFAULT_POINT_CAP,
                 include_all: bool = False) -> list[ConstituentReport]:
    """V(Gamma) for every enumerated structure, with maximality by point-set containment.

    Structures with empty V are dropped.  Among structures with equal V the
    first in enumeration order represents the set.  Only maximal reports are
    returned unless `include_all`.
    """
    reports = []
    for g in enumerate_neighborly(m, f):
        depths = _dims_over_k(m, f, g, cap)
        if not depths:
            continue
        top = max(depths.values()) - 1
        strata = {k: frozenset(p for p, d in depths.items() if d >= k + 1) for k in range(1, top + 1)}
        ks = k_space(m, f, g)
        reports.append(ConstituentReport(g, ks.dim_K, ks.dim_K0, strata))
    for r in reports:
        for s in reports:
            if s is r:
                continue
            if r.points == s.points:
                r.same_as.append(s.structure)
            elif r.points < s.points:
                r.contained_in.append(s.structure)
    chosen = []
    taken: list[frozenset] = []
    for r in reports:
        if r.contained_in or r.points in taken:
            r.is_maximal = False
        else:
            taken.append(r.points)
        if include_all or r.is_maximal:
            chosen.append(r)
    return chosen


@dataclass
class DecompositionReport:
    k: int
    resonance: set[Vector]
    union: set[Vector]

    @property
    def missing(self) -> set[Vector]:
        return self.resonance - self.union

    @property
    def extra(self) -> set[Vector]:
        return self.union - self.resonance

    @property
    def equal(self) -> bool:
        return self.resonance == self.union


def verify_decomposition(m: Matroid, f: Field, k: int = 1, cap: int = DEFAULT_POINT_CAP) -> DecompositionReport:
    """Brute-force R_k against the union of V_k(Gamma) over enumerated structures."""
    brute = enumerate_resonance(m, f, k, cap)
    union: set[Vector] = set()
    for g in enumerate_neighborly(m, f):
        union |= v_stratum(m, f, g, k, cap)
    return DecompositionReport(k, brute, union)
