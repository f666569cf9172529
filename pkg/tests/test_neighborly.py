from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modres import field as ff
from modres import neighborly as nb
from modres import resonance as rs
from modres.field import make_field, parse_vector
from modres.graphs import NeighborlyStructure
from modres.matroid import catalog

S = NeighborlyStructure.parse
BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_neighborly_examples():
    assert nb.is_neighborly(catalog("nonfano"), S("127|3|4|5|6", 7))
    assert nb.is_neighborly(catalog("braid"), S("12|34|56", 6))
    assert not nb.is_neighborly(catalog("braid"), S("13|24|56", 6))
    # local structures: cone vertices are ignored by the test
    assert nb.is_neighborly(catalog("braid"), S("1|3|6", 6))
    # a trivial line split between blocks
    assert not nb.is_neighborly(catalog("braid"), S("1|2|34|56", 6))


def test_x_gamma_examples():
    assert len(nb.x_gamma(catalog("nonfano"), S("127|3|4|5|6", 7))) == 6
    assert len(nb.x_gamma(catalog("hessian"), S("123|456|789|abc", 12))) == 9
    assert nb.x_gamma(catalog("pencil(4)"), S("1234|", 4)) == []


def test_incidence_ranks():
    g = S("127|3|4|5|6", 7)
    assert ff.rank(make_field(2), nb.incidence_matrix(catalog("nonfano"), g), 7) == 4
    h = S("123|456|789|abc", 12)
    assert ff.rank(make_field(3), nb.incidence_matrix(catalog("hessian"), h), 12) == 6


def test_k_space_examples():
    ks = nb.k_space(catalog("hessian"), make_field(3), S("123|456|789|abc", 12))
    assert (ks.dim_K, ks.dim_K0) == (6, 5)
    ks = nb.k_space(catalog("nonfano"), make_field(2), S("127|3|4|5|6", 7))
    assert ks.dim_K == 3 and ks.K == ks.K0
    f3 = make_field(3)
    ks = nb.k_space(catalog("pencil(3)"), f3, S("1|2|3", 3))
    assert ks.dim_K0 == 2 and all(sum(v) % 3 == 0 for v in ks.K0)


def test_z_gamma_examples():
    m, f = catalog("nonfano"), make_field(2)
    g = S("127|3|4|5|6", 7)
    lam = parse_vector(f, "0011110", 7)
    assert nb.z_gamma(m, f, g, lam) == rs.z_of(m, f, lam)
    b, f5 = catalog("braid"), make_field(5)
    lam = parse_vector(f5, "1,1,0,0,-1,-1", 6)
    z = nb.z_gamma(b, f5, S("12|34|56", 6), lam)
    assert z == [parse_vector(f5, "1,1,0,0,-1,-1", 6), parse_vector(f5, "0,0,1,1,-1,-1", 6)]
    with pytest.raises(rs.ResonanceError):
        nb.z_gamma(b, f5, S("12|34|56", 6), parse_vector(f5, "1,0,0,0,0,0", 6))


def test_nonfano_strata():
    m, f = catalog("nonfano"), make_field(2)
    g = S("127|3|4|5|6", 7)
    assert len(nb.v_stratum(m, f, g, 1)) == 7
    assert nb.v_stratum(m, f, g, 2) == {parse_vector(f, "0011110", 7)}


def test_enumerate_braid_gf5():
    gs = nb.enumerate_neighborly(catalog("braid"), make_field(5))
    assert len(gs) == 5
    assert sum(1 for g in gs if not g.cones) == 1
    assert S("12|34|56", 6) in gs


def test_enumerate_nonfano_gf3():
    m, f = catalog("nonfano"), make_field(3)
    gs = nb.enumerate_neighborly(m, f)
    assert all(g.cones for g in gs)
    local = [g for g in gs if len(g.support) == 3]
    assert len(local) == 6
    # the remaining structures are essential structures of braid deletions (one cone vertex)
    assert sorted(g.format() for g in gs if len(g.support) != 3) == ["12|34|56 cones=7", "17|35|46 cones=2",
                                                                       "27|36|45 cones=1"]


def test_enumerate_hessian_gf3_contains_net():
    assert S("123|456|789|abc", 12) in nb.enumerate_neighborly(catalog("hessian"), make_field(3))


def test_enumeration_cap():
    from modres.matroid import from_lines
    with pytest.raises(rs.CapExceeded):
        nb.enumerate_neighborly(from_lines(13, [(1, 2, 3)]), make_field(2))


def test_braid_constituents_disjoint():
    for p in (3, 5, 7):
        f = make_field(p)
        cs = nb.constituents(catalog("braid"), f)
        assert len(cs) == 5
        for a, b in itertools.combinations(cs, 2):
            assert not (a.points & b.points)
        for c in cs:
            assert c.span_dim(f) == 1 and c.is_linear(f)


def test_deleted_b3_constituents_intersect():
    m, f = catalog("deletedB3"), make_field(2)
    cs = {c.structure: c for c in nb.constituents(m, f)}
    g1, g2 = S("1457|27|37|67|78", 8), S("2357|15|45|56|58", 8)
    assert g1 in cs and g2 in cs
    common = cs[g1].points & cs[g2].points
    assert parse_vector(f, "11110000", 8) in common
    assert cs[g1].points == set(ff.subspace_points(f, rs.z_of(m, f, parse_vector(f, "01100101", 8)), 8))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_pencil_single_constituent(k):
    f = make_field(2)
    cs = nb.constituents(catalog(f"pencil({k})"), f)
    assert len(cs) == 1
    assert cs[0].dim_K0 == k - 1 and len(cs[0].points) == 2 ** (k - 1) - 1


def test_constituents_report_containment():
    m, f = catalog("pencil(4)"), make_field(2)
    every = nb.constituents(m, f, include_all=True)
    assert sum(r.is_maximal for r in every) == 1
    assert all(r.contained_in or r.same_as for r in every if not r.is_maximal)


CASES = [(n, p) for n in ("braid", "nonfano", "deletedB3", "hessian", "pencil(3)", "pencil(4)", "pencil(5)")
         for p in (2, 3)] + [(n, 5) for n in ("braid", "nonfano", "deletedB3", "pencil(4)", "pencil(5)")]


@pytest.mark.parametrize("name,p", CASES)
def test_decomposition(name, p):
    m, f = catalog(name), make_field(p)
    for k in (1, 2):
        rep = nb.verify_decomposition(m, f, k)
        assert rep.equal, (sorted(rep.missing)[:3], sorted(rep.extra)[:3])


@pytest.mark.parametrize("name,p", [c for c in CASES if c[0] != "hessian"])
def test_structure_invariants(name, p):
    m, f = catalog(name), make_field(p)
    gs = nb.enumerate_neighborly(m, f)
    for g in gs:
        assert nb.is_neighborly(m, g)
        V = nb.v_stratum(m, f, g, 1)
        V2 = nb.v_stratum(m, f, g, 2)
        assert V2 <= V
        for lam in V:
            assert sum(lam) % p == 0
            assert ff.in_span(f, nb.k_space(m, f, g).K0, lam)
        for lam in ff.subspace_points(f, nb.k_space(m, f, g).K, m.n):
            zg = nb.z_gamma(m, f, g, lam)
            z = rs.z_of(m, f, lam)
            assert all(ff.in_span(f, z, v) for v in zg)
    # nested structures: a refinement with the same K has the larger V
    for a, b in itertools.permutations(gs, 2):
        if a.cones == b.cones and a != b and _refines(b, a):
            if nb.k_space(m, f, a).K == nb.k_space(m, f, b).K:
                assert nb.v_stratum(m, f, a, 1) <= nb.v_stratum(m, f, b, 1)


def _refines(fine: NeighborlyStructure, coarse: NeighborlyStructure) -> bool:
    return all(any(set(b) <= set(c) for c in coarse.blocks) for b in fine.blocks)


@pytest.mark.parametrize("name", ["braid", "nonfano", "deletedB3", "pencil(5)"])
def test_local_components(name):
    m = catalog(name)
    for p in (2, 3, 5):
        f = make_field(p)
        for X in m.lines:
            g = NeighborlyStructure.make(m.n, [i for i in range(m.n) if i not in X], [[i] for i in X])
            V = nb.v_stratum(m, f, g, 1)
            assert V == set(ff.subspace_points(f, nb.k_space(m, f, g).K0, m.n))
            assert ff.rank(f, list(V), m.n) - 1 == len(X) - 2


@given(st.integers(0, 7))
def test_set_partitions_count(n):
    parts = list(nb.set_partitions(range(n)))
    assert len(parts) == BELL[n]
    assert len({tuple(tuple(b) for b in p) for p in parts}) == BELL[n]


@given(st.integers(3, 12).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, 3), min_size=n, max_size=n))))
def test_structure_format_roundtrip(data):
    n, colors = data
    cones = [i for i, c in enumerate(colors) if c == 0]
    blocks = [[i for i, c in enumerate(colors) if c == k] for k in (1, 2, 3)]
    if sum(1 for b in blocks if b) < 2:
        return
    g = NeighborlyStructure.make(n, cones, blocks)
    assert S(g.format(), n) == g
    assert S(g.paper_format(), n) == g
