"""The Chow ring of G(2,k) with Pieri multiplication, and carrier dimension/degree formulas."""
from __future__ import annotations

import re
from dataclasses import dataclass, field


class SchubertError(ValueError):
    pass


def _check(a: int, b: int, k: int) -> None:
    if not (k - 2 >= a >= b >= 0):
        raise SchubertError(f"({a},{b}) is not a Schubert partition for G(2,{k})")


@dataclass(frozen=True)
class ChowClass:
    """Integer combination of Schubert classes W_(a,b) in G(2,k)."""

    k: int
    coeffs: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def make(cls, k: int, coeffs: dict[tuple[int, int], int]) -> "ChowClass":
        for a, b in coeffs:
            _check(a, b, k)
        return cls(k, tuple(sorted(((p, c) for p, c in coeffs.items() if c), reverse=True)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def coefficient(self, a: int, b: int) -> int:
        return self.as_dict().get((a, b), 0)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if other.k != self.k:
            raise SchubertError("classes live in different Grassmannians")
        d = self.as_dict()
        for p, c in other.coeffs:
            d[p] = d.get(p, 0) + c
        return ChowClass.make(self.k, d)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "ChowClass":
        return ChowClass.make(self.k, {p: c * x for p, x in self.coeffs})

    def __mul__(self, other: "ChowClass") -> "ChowClass":
        if other.k != self.k:
            raise SchubertError("classes live in different Grassmannians")
        out = ChowClass(self.k)
        for (a, b), c in other.coeffs:
            out = out + multiply_basis(self, a, b).scaled(c)
        return out

    def codimensions(self) -> set[int]:
        return {a + b for (a, b), _ in self.coeffs}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in self.coeffs:
            term = f"W({a},{b})"
            parts.append(term if c == 1 else f"{c}*{term}")
        return " + ".join(parts).replace("+ -", "- ")


def schubert_class(a: int, b: int, k: int) -> ChowClass:
    _check(a, b, k)
    return ChowClass.make(k, {(a, b): 1})


def identity(k: int) -> ChowClass:
    return schubert_class(0, 0, k)


def pieri(s: int, c: ChowClass) -> ChowClass:
    """W_(s,0) * W_(a,b) = sum of W_(x,y) with x+y = a+b+s and k-2 >= x >= a >= y >= b."""
    if s < 0:
        raise SchubertError("special class index must be nonnegative")
    k = c.k
    if s > k - 2:
        return ChowClass(k)
    out: dict[tuple[int, int], int] = {}
    for (a, b), coef in c.coeffs:
        total = a + b + s
        for x in range(a, k - 1):
            y = total - x
            if b <= y <= a and y <= x:
                out[(x, y)] = out.get((x, y), 0) + coef
    return ChowClass.make(k, out)


def multiply_basis(c: ChowClass, a: int, b: int) -> ChowClass:
    """c * W_(a,b), via W_(a,b) = W_(a,0) W_(b,0) - W_(a+1,0) W_(b-1,0)."""
    _check(a, b, c.k)
    if b == 0:
        return pieri(a, c)
    return pieri(b, pieri(a, c)) - pieri(b - 1, pieri(a + 1, c))


_TOKEN = re.compile(r"\s*(?:(\d+)|([sW])\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)(?:\^(\d+))?)\s*")


def evaluate(expr: str, k: int) -> ChowClass:
    """Evaluate a product like ``s(1)^4 * s(2)`` or ``2 * W(2,1) * s(1)`` left to right."""
    result = identity(k)
    factors = [t for t in expr.split("*")]
    if not expr.strip():
        raise SchubertError("empty expression")
    for tok in factors:
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise SchubertError(f"cannot parse factor {tok.strip()!r}")
        if m.group(1) is not None:
            result = result.scaled(int(m.group(1)))
            continue
        kind, a = m.group(2), int(m.group(3))
        b = int(m.group(4)) if m.group(4) is not None else 0
        power = int(m.group(5)) if m.group(5) is not None else 1
        if kind == "s" and m.group(4) is not None:
            raise SchubertError("s(i) takes one index")
        _check(a, b, k)
        for _ in range(power):
            result = multiply_basis(result, a, b)
    return result


def carrier_dimension(dim_complex: int, depth: int) -> int:
    """dim |L| = dim L - depth + 2."""
    if not 1 <= depth <= dim_complex + 1:
        raise SchubertError(f"depth {depth} outside 1..{dim_complex + 1}")
    return dim_complex - depth + 2


@dataclass
class DegreeResult:
    degree: int
    s: int
    sigma: tuple[int, int]
    expansions: list[ChowClass] = field(default_factory=list)
    proper_asserted: bool = True
    note: str = ""


def carrier_degree(k: int, codims: list[int], depth: int, proper: bool = True) -> DegreeResult:
    """Degree of the carrier of a proper intersection of complexes L_D in G(2,k).

    ``codims`` are c(D) = codim(D) - 1.  The product of the W_(c,0) is cut
    by W_(s,0), where s completes the class of a point-of-carrier condition:
    s = 2(k-2) - sum(c) - depth + 1, and the degree is read off W_sigma with
    sigma = (k-2, k-1-depth).  Propriety is the caller's assertion.
    """
    if k < 2:
        raise SchubertError("k must be at least 2")
    if depth < 1 or depth > k - 1:
        raise SchubertError(f"depth {depth} outside 1..{k - 1}")
    s = 2 * (k - 2) - sum(codims) - depth + 1
    if s < 0:
        raise SchubertError(f"overdetermined: s = {s} < 0")
    cls = identity(k)
    steps = []
    for c in codims:
        cls = pieri(c, cls)
        steps.append(cls)
    cls = pieri(s, cls)
    steps.append(cls)
    sigma = (k - 2, k - 1 - depth)
    deg = cls.coefficient(*sigma)
    note = "" if deg else f"W{sigma} does not occur in {cls}"
    return DegreeResult(deg, s, sigma, steps, proper, note)
