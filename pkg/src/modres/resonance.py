"""Degree-two Orlik-Solomon multiplication and resonance.

A weight is a tuple of field-element encodings of length n.  The degree-two
part of the OS algebra is written in the basis that splits over the lines
of the matroid: for a line ``x1 < x2 < ... < xm`` the products
``a_{x1} a_{xj}`` (j >= 2) form a basis of its summand.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import field as ff
from .field import Field, Vector
from .graphs import NeighborlyStructure, PairGraph
from .matroid import Matroid

DEFAULT_POINT_CAP = 10 ** 7


class ResonanceError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what} needs {required} items, above the cap of {cap}; raise the cap to at least {required}")
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class Degree2Basis:
    labels: tuple[tuple[int, int], ...]
    index: dict
    line_of: dict

    @property
    def dim(self) -> int:
        return len(self.labels)

    def rewrite(self, i: int, j: int) -> list[tuple[int, int]]:
        """a_i a_j (i < j) as [(label index, integer coefficient), ...]."""
        X = self.line_of[(i, j)]
        x1 = X[0]
        if i == x1:
            return [(self.index[(x1, j)], 1)]
        # from the relation e_i e_j - e_x1 e_j + e_x1 e_i = 0
        return [(self.index[(x1, j)], 1), (self.index[(x1, i)], -1)]


@functools.lru_cache(maxsize=64)
def degree2_basis(m: Matroid) -> Degree2Basis:
    labels = []
    line_of = {}
    for X in m.all_lines():
        labels.extend((X[0], x) for x in X[1:])
        for pair in itertools.combinations(X, 2):
            line_of[pair] = X
    labels = tuple(labels)
    return Degree2Basis(labels, {lab: k for k, lab in enumerate(labels)}, line_of)


def _minor(f: Field, lam: Sequence[int], eta: Sequence[int], i: int, j: int) -> int:
    return f.sub(f.mul(lam[i], eta[j]), f.mul(lam[j], eta[i]))


def multiply(m: Matroid, f: Field, lam: Sequence[int], eta: Sequence[int]) -> Vector:
    """Coordinates of a_lam * a_eta in the degree-two basis."""
    if len(lam) != m.n or len(eta) != m.n:
        raise ResonanceError("weights must have length n")
    basis = degree2_basis(m)
    out = [0] * basis.dim
    for i, j in itertools.combinations(range(m.n), 2):
        d = _minor(f, lam, eta, i, j)
        if d:
            for k, c in basis.rewrite(i, j):
                out[k] = f.add(out[k], f.mul(f.from_int(c), d))
    return tuple(out)


def multiplication_matrix(m: Matroid, f: Field, lam: Sequence[int]) -> list[list[int]]:
    """Matrix of eta -> a_lam * a_eta (rows: degree-two basis, columns: eta)."""
    basis = degree2_basis(m)
    mat = [[0] * m.n for _ in range(basis.dim)]
    for i, j in itertools.combinations(range(m.n), 2):
        for k, c in basis.rewrite(i, j):
            c = f.from_int(c)
            # d_ij = lam_i eta_j - lam_j eta_i
            if lam[i]:
                mat[k][j] = f.add(mat[k][j], f.mul(c, lam[i]))
            if lam[j]:
                mat[k][i] = f.sub(mat[k][i], f.mul(c, lam[j]))
    return mat


def z_of(m: Matroid, f: Field, lam: Sequence[int]) -> list[Vector]:
    """Basis (RREF) of Z(lam) = {eta : a_lam a_eta = 0}."""
    return ff.kernel_basis(f, multiplication_matrix(m, f, lam), m.n)


def depth_of(m: Matroid, f: Field, lam: Sequence[int]) -> int:
    if ff.is_zero(lam):
        raise ResonanceError("depth is undefined for the zero weight")
    return len(z_of(m, f, lam)) - 1


def is_parallel(f: Field, a: Sequence[int], b: Sequence[int]) -> bool:
    return ff.rank(f, [a, b], len(a)) < 2


# -- brute-force enumeration ------------------------------------------------------

def _search_tables(m: Matroid, f: Field):
    basis = degree2_basis(m)
    # order coordinates greedily so that lines close as early as possible
    lines = m.all_lines()
    order: list[int] = []
    remaining = set(range(m.n))
    while remaining:
        def score(c):
            placed = set(order) | {c}
            closed = sum(len(X) - 1 for X in lines if c in X and set(X) <= placed)
            return (closed, -c)
        c = max(remaining, key=score)
        order.append(c)
        remaining.discard(c)
    pos = {c: k for k, c in enumerate(order)}

    terms: list[list[tuple[int, int, int]]] = [[] for _ in range(basis.dim)]
    for i, j in itertools.combinations(range(m.n), 2):
        for k, c in basis.rewrite(i, j):
            c = f.from_int(c)
            terms[k].append((j, i, c))
            terms[k].append((i, j, f.neg(c)))
    row_ptr = np.zeros(basis.dim + 1, dtype=np.int64)
    flat = []
    for k, t in enumerate(terms):
        flat.extend(t)
        row_ptr[k + 1] = len(flat)
    term_col = np.array([t[0] for t in flat], dtype=np.int64)
    term_lam = np.array([t[1] for t in flat], dtype=np.int64)
    term_coef = np.array([t[2] for t in flat], dtype=np.int64)

    # rows of each line become available once its last coordinate is placed;
    # nontrivial lines first since they add rank fastest
    by_depth: list[list[int]] = [[] for _ in range(m.n)]
    for X in lines:
        d = max(pos[x] for x in X)
        by_depth[d].extend(basis.index[(X[0], x)] for x in X[1:])
    depth_ptr = np.zeros(m.n + 1, dtype=np.int64)
    depth_rows = []
    for d, rows in enumerate(by_depth):
        depth_rows.extend(rows)
        depth_ptr[d + 1] = len(depth_rows)
    return (np.array(order, dtype=np.int64), row_ptr, term_col, term_lam, term_coef,
            depth_ptr, np.array(depth_rows, dtype=np.int64))


def resonance_dims(m: Matroid, f: Field, kmin: int = 1, cap: int = DEFAULT_POINT_CAP,
                   compiled: bool = True) -> dict[Vector, int]:
    """All projective weights with dim Z >= kmin + 1, mapped to dim Z.

    Exhaustive over P^{n-1}(F); refuses when the point count exceeds cap.
    """
    total = ff.count_projective_points(f.q, m.n)
    if total > cap:
        raise CapExceeded(f"P^{m.n - 1}(F_{f.q})", total, cap)
    return dict(_resonance_dims_cached(m, f, kmin, compiled))


@functools.lru_cache(maxsize=32)
def _resonance_dims_cached(m: Matroid, f: Field, kmin: int, compiled: bool):
    from . import _kernels

    tables = _search_tables(m, f)
    search = _kernels.resonance_search if compiled else _kernels.resonance_search.py_func
    thresh = m.n - 1 - kmin
    size = 4096
    while True:
        out_pts = np.zeros((size, m.n), dtype=np.int64)
        out_dim = np.zeros(size, dtype=np.int64)
        count = search(m.n, f.q, f.add_table, f.mul_table, f.neg_table, f.inv_table, *tables,
                       thresh, out_pts, out_dim)
        if count <= size:
            break
        size = count
    found = {}
    for k in range(count):
        found[ff.normalize(f, tuple(int(x) for x in out_pts[k]))] = int(out_dim[k])
    return tuple(sorted(found.items()))


def enumerate_resonance(m: Matroid, f: Field, k: int = 1, cap: int = DEFAULT_POINT_CAP) -> set[Vector]:
    """Canonical projective points of R_k: weights with dim Z >= k + 1."""
    if k < 1:
        raise ResonanceError("k must be at least 1")
    dims = resonance_dims(m, f, 1, cap)
    return {p for p, d in dims.items() if d >= k + 1}


# -- graphs of weights ----------------------------------------------------------------

def gamma_of_pair(m: Matroid, f: Field, lam: Sequence[int], eta: Sequence[int]) -> PairGraph:
    if is_parallel(f, lam, eta):
        raise ResonanceError("weights are parallel")
    if any(multiply(m, f, lam, eta)):
        raise ResonanceError("pair is not resonant")
    edges = frozenset(
        (i, j) for i, j in itertools.combinations(range(m.n), 2) if _minor(f, lam, eta, i, j) == 0
    )
    return PairGraph(m.n, edges)


def gamma_lambda(m: Matroid, f: Field, lam: Sequence[int]) -> NeighborlyStructure:
    """Graph of lam against all of Z(lam), read off a kernel basis.

    {i, j} is an edge iff the minor vanishes for every eta in Z(lam), which
    is the graph of lam with a generic partner.
    """
    z = z_of(m, f, lam)
    if len(z) < 2:
        raise ResonanceError("weight is not resonant")
    n = m.n
    edges = frozenset(
        (i, j) for i, j in itertools.combinations(range(n), 2)
        if all(_minor(f, lam, eta, i, j) == 0 for eta in z)
    )
    return PairGraph(n, edges).to_structure()


# -- generic partners -----------------------------------------------------------------

class GenericPartnerError(ResonanceError):
    def __init__(self, message: str, minimal_degree: int):
        super().__init__(message)
        self.minimal_degree = minimal_degree


def generic_partner_bound(m: Matroid) -> int:
    """A field with more elements than this always contains a generic partner."""
    return math.comb(m.n, 2) + len(m.lines) + 1


def embedding(small: Field, big: Field) -> list[int]:
    """Images of the elements of `small` in `big` (a subfield embedding)."""
    if small.p != big.p or big.e % small.e:
        raise ResonanceError(f"{small} does not embed in {big}")
    if small.e == 1:
        return list(range(small.q))
    # send g to a root of the small modulus
    for r in range(big.q):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            break
    else:  # pragma: no cover
        raise ResonanceError("no root of the modulus found")
    images = []
    for a in range(small.q):
        digits = small._digits(a)
        acc = 0
        for c in reversed(digits):
            acc = big.add(big.mul(acc, r), c)
        images.append(acc)
    return images


def is_generic_partner(m: Matroid, f: Field, lam: Sequence[int], mu: Sequence[int],
                       z: Sequence[Sequence[int]] | None = None) -> bool:
    """Check both genericity conditions of mu against the weights in z."""
    if z is None:
        z = z_of(m, f, lam)
    if any(multiply(m, f, lam, mu)) or is_parallel(f, lam, mu):
        return False
    for X in m.lines:
        mu_x = functools.reduce(f.add, (mu[i] for i in X), 0)
        if mu_x == 0 and any(functools.reduce(f.add, (eta[i] for i in X), 0) for eta in z):
            return False
    for i, j in itertools.combinations(range(m.n), 2):
        if _minor(f, lam, mu, i, j) == 0 and any(_minor(f, lam, eta, i, j) for eta in z):
            return False
    return True


def generic_partner(m: Matroid, f: Field, lam: Sequence[int], ext_e: int = 1) -> tuple[Field, Vector]:
    """A generic partner of lam over GF(p^(e * ext_e)), found by exhaustive search.

    Returns the extension field and the partner (in its encodings).  The
    size bound only guarantees existence; smaller fields are searched too.
    """
    big = ff.make_field(f.p, f.e * ext_e)
    bound = generic_partner_bound(m)
    minimal = next(t for t in itertools.count(1) if f.p ** (f.e * t) > bound)
    z_small = z_of(m, f, lam)
    if len(z_small) < 2:
        raise ResonanceError("weight is not resonant")
    emb = embedding(f, big)
    lam_big = tuple(emb[x] for x in lam)
    z = [tuple(emb[x] for x in eta) for eta in z_small]
    need_line = [X for X in m.lines if any(functools.reduce(big.add, (eta[i] for i in X), 0) for eta in z)]
    need_pair = [(i, j) for i, j in itertools.combinations(range(m.n), 2)
                 if any(_minor(big, lam_big, eta, i, j) for eta in z)]
    for c in ff.projective_points(big, len(z)):
        mu = ff.combine(big, c, z, m.n)
        if is_parallel(big, lam_big, mu):
            continue
        if any(functools.reduce(big.add, (mu[i] for i in X), 0) == 0 for X in need_line):
            continue
        if any(_minor(big, lam_big, mu, i, j) == 0 for i, j in need_pair):
            continue
        return big, mu
    raise GenericPartnerError(
        f"no generic partner over {big}; GF({f.p}^{f.e * minimal}) suffices", minimal)
