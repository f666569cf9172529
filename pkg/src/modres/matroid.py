"""Simple matroids recorded by their rank-two flats.

Elements are 0-based internally.  ``labels`` carries the 1-based names used
for display, so deletions keep the original numbering.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import field as ff


class MatroidError(ValueError):
    pass


_SYMBOLS = "123456789abcdefghijklmnopqrstuvwxyz"
_GREEK = {"α": 10, "β": 11, "γ": 12}


def symbol(label: int) -> str:
    """Paper-style single character for a 1-based label (10 -> 'a')."""
    if 1 <= label <= len(_SYMBOLS):
        return _SYMBOLS[label - 1]
    return f"<{label}>"


def parse_symbols(text: str) -> list[int]:
    """Inverse of :func:`symbol`; also accepts comma lists and greek letters."""
    text = text.strip()
    if "," in text:
        return [int(t) for t in text.split(",") if t.strip()]
    out = []
    for ch in text:
        if ch in _GREEK:
            out.append(_GREEK[ch])
        elif ch.lower() in _SYMBOLS:
            out.append(_SYMBOLS.index(ch.lower()) + 1)
        else:
            raise MatroidError(f"unknown element symbol {ch!r}")
    return out


@dataclass(frozen=True)
class Line:
    elements: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return len(self.elements) == 2


@dataclass(frozen=True)
class Matroid:
    n: int
    lines: tuple[tuple[int, ...], ...]  # nontrivial rank-two flats, 0-based, sorted
    name: str = ""
    labels: tuple[int, ...] = ()
    realization: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))

    @property
    def nontrivial_lines(self) -> tuple[tuple[int, ...], ...]:
        return self.lines

    def all_lines(self) -> list[tuple[int, ...]]:
        """Nontrivial lines first, then the trivial pairs, each sorted."""
        covered = {pair for X in self.lines for pair in itertools.combinations(X, 2)}
        trivial = [pair for pair in itertools.combinations(range(self.n), 2) if pair not in covered]
        return list(self.lines) + trivial

    def line_objects(self) -> list[Line]:
        return [Line(X) for X in self.all_lines()]

    def line_of_pair(self, i: int, j: int) -> tuple[int, ...]:
        i, j = min(i, j), max(i, j)
        for X in self.lines:
            if i in X and j in X:
                return X
        return (i, j)

    def trivial_lines(self) -> list[tuple[int, int]]:
        return [X for X in self.all_lines() if len(X) == 2]

    def fmt_set(self, s: Iterable[int]) -> str:
        return "".join(symbol(self.labels[i]) for i in sorted(s))

    def __str__(self) -> str:
        body = " ".join(self.fmt_set(X) for X in self.lines) or "(no nontrivial lines)"
        return f"{self.name or 'matroid'}: n={self.n}, lines {body}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "lines": [[self.labels[i] for i in X] for X in self.lines],
        }


def _validate(n: int, lines: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    out = set()
    seen: dict[tuple[int, int], tuple[int, ...]] = {}
    for X in lines:
        X = tuple(sorted(set(X)))
        if len(X) < 3:
            raise MatroidError(f"nontrivial line {X} has fewer than 3 points")
        if X[0] < 0 or X[-1] >= n:
            raise MatroidError(f"line {X} has an index out of range")
        for pair in itertools.combinations(X, 2):
            if pair in seen and seen[pair] != X:
                raise MatroidError(f"pair {pair} lies in two lines {seen[pair]} and {X}")
            seen[pair] = X
        out.add(X)
    return tuple(sorted(out))


def from_lines(n: int, lines: Iterable[Iterable[int]], name: str = "", one_based: bool = True) -> Matroid:
    """Matroid on n elements with the given nontrivial lines.

    With ``one_based`` (the default) the lines use the paper's 1..n labels.
    """
    shift = 1 if one_based else 0
    return Matroid(n, _validate(n, ([i - shift for i in X] for X in lines)), name)


# -- realizations -----------------------------------------------------------

def _frac_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                t = m[i][c] / m[r][c]
                m[i] = [a - t * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def from_realization(rows: Sequence[Sequence], fld: ff.Field | None = None, name: str = "") -> Matroid:
    """Matroid of the hyperplanes with the given normal vectors.

    ``fld=None`` means exact rationals.  Lines are found by pairwise
    closure: each pair together with every row in its span.
    """
    if fld is None:
        vecs = [tuple(Fraction(x) for x in r) for r in rows]

        def rk(idx):
            return _frac_rank([vecs[i] for i in idx])
    else:
        vecs = [tuple(fld.parse(x) if isinstance(x, str) else fld.from_int(x) for x in r) for r in rows]

        def rk(idx):
            return ff.rank(fld, [vecs[i] for i in idx], len(vecs[0]))
    n = len(vecs)
    for i in range(n):
        if rk([i]) == 0:
            raise MatroidError(f"row {i + 1} is zero")
    for i, j in itertools.combinations(range(n), 2):
        if rk([i, j]) < 2:
            raise MatroidError(f"rows {i + 1} and {j + 1} are proportional")
    lines = set()
    for i, j in itertools.combinations(range(n), 2):
        X = [i, j] + [k for k in range(n) if k not in (i, j) and rk([i, j, k]) == 2]
        if len(X) >= 3:
            lines.add(tuple(sorted(X)))
    return Matroid(n, _validate(n, lines), name, realization=(fld, tuple(map(tuple, rows))))


# -- operations ---------------------------------------------------------------

def delete(m: Matroid, s: Iterable[int]) -> Matroid:
    """Restriction to the complement of s (0-based).  Labels are kept."""
    s = set(s)
    keep = [i for i in range(m.n) if i not in s]
    index = {old: new for new, old in enumerate(keep)}
    lines = []
    for X in m.lines:
        Y = [index[i] for i in X if i in index]
        if len(Y) >= 3:
            lines.append(Y)
    name = f"{m.name}-{m.fmt_set(s)}" if s else m.name
    return Matroid(len(keep), _validate(len(keep), lines), name, tuple(m.labels[i] for i in keep))


def restrict(m: Matroid, keep: Iterable[int]) -> Matroid:
    keep = set(keep)
    return delete(m, [i for i in range(m.n) if i not in keep])


def is_isomorphic(a: Matroid, b: Matroid) -> bool:
    """Brute force over permutations; intended for small n."""
    if a.n != b.n or sorted(map(len, a.lines)) != sorted(map(len, b.lines)):
        return False
    target = {frozenset(X) for X in b.lines}
    for perm in itertools.permutations(range(a.n)):
        if all(frozenset(perm[i] for i in X) in target for X in a.lines):
            return True
    return False


# -- catalog -------------------------------------------------------------------

BRAID_NORMALS = [(1, 1, 0), (1, -1, 0), (0, 1, 1), (0, 1, -1), (1, 0, 1), (-1, 0, 1)]
NONFANO_NORMALS = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (0, 0, 1)]
DELETED_B3_NORMALS = [
    (1, 1, 1), (1, 1, -1), (1, -1, -1), (1, -1, 1),
    (1, 0, -1), (1, 0, 0), (1, 0, 1), (0, 0, 1),
]
HESSIAN_LINES = ["149b", "157a", "168c", "247c", "258b", "269a", "348a", "359c", "367b"]


def _pencil(k: int) -> Matroid:
    if k < 3:
        raise MatroidError("a pencil needs at least 3 lines")
    return from_lines(k, [range(1, k + 1)], name=f"pencil({k})")


def catalog(name: str) -> Matroid:
    key = name.strip().lower().replace("_", "").replace("-", "")
    if key in ("braid", "k4", "d3"):
        m = from_lines(6, [(1, 3, 6), (1, 4, 5), (2, 3, 5), (2, 4, 6)], name="braid")
        return Matroid(m.n, m.lines, m.name, realization=(None, tuple(BRAID_NORMALS)))
    if key in ("nonfano",):
        m = from_lines(7, [(1, 3, 6), (1, 4, 5), (2, 3, 5), (2, 4, 6), (3, 4, 7), (5, 6, 7)], name="nonfano")
        return Matroid(m.n, m.lines, m.name, realization=(None, tuple(NONFANO_NORMALS)))
    if key in ("deletedb3", "db3"):
        return from_realization(DELETED_B3_NORMALS, name="deletedB3")
    if key == "hessian":
        return from_lines(12, [parse_symbols(X) for X in HESSIAN_LINES], name="hessian")
    m = re.fullmatch(r"pencil\(?(\d+)\)?", key)
    if m:
        return _pencil(int(m.group(1)))
    raise MatroidError(f"unknown catalog matroid {name!r}")


CATALOG_NAMES = ("braid", "nonfano", "deletedB3", "hessian", "pencil(k)")


def catalog_entries(pencils: Sequence[int] = (3, 4, 5)) -> list[Matroid]:
    return [catalog(n) for n in ("braid", "nonfano", "deletedB3", "hessian")] + [_pencil(k) for k in pencils]


# -- file format ---------------------------------------------------------------------

def from_json(data: dict) -> Matroid:
    name = data.get("name", "")
    if "lines" in data:
        return from_lines(int(data["n"]), data["lines"], name=name)
    if "realization" in data:
        real = data["realization"]
        tag = str(real.get("field", "Q"))
        fld = None if tag.upper() == "Q" else ff.parse_field(tag)
        rows = real["rows"]
        if fld is None:
            rows = [[Fraction(str(x)) for x in r] for r in rows]
        else:
            rows = [[x if isinstance(x, str) else int(x) for x in r] for r in rows]
        return from_realization(rows, fld, name=name)
    raise MatroidError("matroid JSON needs 'lines' or 'realization'")


def load(source: str) -> Matroid:
    """Catalog name or path to a JSON matroid file."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise MatroidError(f"cannot read matroid file {source}: {exc}") from None
        return from_json(data)
    return catalog(source)
