from __future__ import annotations

import itertools
import json

import pytest

from modres import matroid as mt
from modres.field import make_field
from modres.matroid import MatroidError


def lines(m):
    return sorted(m.fmt_set(X) for X in m.lines)


def test_catalog_lines():
    assert lines(mt.catalog("braid")) == ["136", "145", "235", "246"]
    assert lines(mt.catalog("nonfano")) == ["136", "145", "235", "246", "347", "567"]
    assert lines(mt.catalog("deletedB3")) == ["128", "136", "147", "235", "246", "348", "5678"]
    h = mt.catalog("hessian")
    assert h.n == 12 and len(h.lines) == 9 and all(len(X) == 4 for X in h.lines)
    assert lines(mt.catalog("pencil(4)")) == ["1234"]


def test_hessian_trivial_pairs_are_the_four_blocks():
    h = mt.catalog("hessian")
    # nine 4-point lines cover 54 pairs; the 12 uncovered pairs are the
    # edges of the triangles 123, 456, 789, abc
    covered = {pair for X in h.lines for pair in itertools.combinations(X, 2)}
    assert len(covered) == 54
    triangles = {tuple(sorted(p)) for b in ("123", "456", "789", "abc")
                 for p in itertools.combinations([i - 1 for i in mt.parse_symbols(b)], 2)}
    assert set(h.trivial_lines()) == triangles


@pytest.mark.parametrize("name,normals", [
    ("braid", mt.BRAID_NORMALS), ("nonfano", mt.NONFANO_NORMALS), ("deletedB3", mt.DELETED_B3_NORMALS),
])
def test_realizations_match_catalog(name, normals):
    assert lines(mt.from_realization(normals)) == lines(mt.catalog(name))


def test_nonfano_realization_collapses_over_gf2():
    # (1,1,0) and (1,-1,0) coincide in characteristic two
    with pytest.raises(MatroidError):
        mt.from_realization(mt.NONFANO_NORMALS, make_field(2))


def test_deletions_of_deleted_b3():
    db3 = mt.catalog("deletedB3")
    nf, braid = mt.catalog("nonfano"), mt.catalog("braid")
    assert mt.is_isomorphic(mt.delete(db3, [6]), nf)
    assert mt.is_isomorphic(mt.delete(db3, [4]), nf)
    assert mt.is_isomorphic(mt.delete(db3, [4, 6]), braid)
    assert mt.is_isomorphic(mt.delete(nf, [6]), braid)
    assert mt.delete(db3, [6]).labels == (1, 2, 3, 4, 5, 6, 8)


def test_invalid_lines_rejected():
    with pytest.raises(MatroidError):
        mt.from_lines(4, [(1, 2, 3), (1, 2, 4)])
    with pytest.raises(MatroidError):
        mt.from_lines(4, [(1, 2)])
    with pytest.raises(MatroidError):
        mt.from_lines(3, [(1, 2, 4)])
    with pytest.raises(MatroidError):
        mt.catalog("nosuch")


def test_json_roundtrip(tmp_path):
    m = mt.catalog("nonfano")
    path = tmp_path / "nf.json"
    path.write_text(json.dumps(m.to_json()))
    assert lines(mt.load(str(path))) == lines(m)
    real = {"name": "b", "realization": {"field": "Q", "rows": [list(r) for r in mt.BRAID_NORMALS]}}
    path2 = tmp_path / "b.json"
    path2.write_text(json.dumps(real))
    assert lines(mt.load(str(path2))) == lines(mt.catalog("braid"))
    real5 = {"name": "b5", "realization": {"field": "5", "rows": [list(r) for r in mt.BRAID_NORMALS]}}
    assert lines(mt.from_json(real5)) == lines(mt.catalog("braid"))


def test_symbols():
    assert mt.parse_symbols("149b") == [1, 4, 9, 11]
    assert mt.parse_symbols("αβγ") == [10, 11, 12]
    assert mt.parse_symbols("10,11") == [10, 11]
    assert "".join(mt.symbol(i) for i in (1, 9, 10, 12)) == "19ac"


def test_all_lines_cover_every_pair_once():
    for m in mt.catalog_entries():
        seen = {}
        for X in m.all_lines():
            for pair in itertools.combinations(X, 2):
                assert pair not in seen
                seen[pair] = X
        assert len(seen) == m.n * (m.n - 1) // 2
