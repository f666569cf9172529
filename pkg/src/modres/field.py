"""Exact arithmetic and linear algebra over GF(p) and GF(p^e).

Elements are encoded as integers ``0 <= a < q``: the residue
``c_0 + c_1 g + ... + c_{e-1} g^{e-1}`` is stored as ``sum(c_i * p**i)``.
For prime fields this is the usual residue.  All linear algebra works on
these integer encodings; :class:`FieldElement` is a thin operator-friendly
wrapper for interactive use.
"""
from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

Vector = tuple[int, ...]


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p), coefficient lists low -> high ---------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    """Monic degree-d polynomials, ordered by their integer encoding."""
    for code in range(p ** d):
        coeffs = []
        for _ in range(d):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    d = len(poly) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in _monic_polys(p, k):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, e):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


# -- the field ------------------------------------------------------------

class Field:
    """GF(p^e) with a fixed monic irreducible modulus.

    Use :func:`make_field` rather than constructing directly; it caches
    instances so equal parameters give the identical object.
    """

    def __init__(self, p: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        self.p = p
        self.e = len(modulus) - 1
        self.q = p ** self.e
        self.modulus = modulus
        if self.e > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        if self.e > 1:
            self._build_log_tables()

    # construction helpers
    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c % self.p
        return a

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._encode(_poly_mod(prod, self.modulus, self.p) or [0])

    def _build_log_tables(self) -> None:
        q = self.q
        for cand in range(2, q):
            exp = [1]
            x = cand
            while x != 1:
                exp.append(x)
                x = self._poly_mul(x, cand)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - a finite field always has a primitive element
            raise RuntimeError("no primitive element found")
        self.primitive = cand
        self._exp = exp + exp
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i

    # arithmetic on encodings
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        return self._encode([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._encode([-x for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if a == 0:
            return 1 if k == 0 else 0
        if self.e == 1:
            return pow(a, k, self.p)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p

    @property
    def generator(self) -> int:
        """Encoding of the class of x (for prime fields, 1)."""
        return self.p % self.q if self.e > 1 else 1

    def elements(self) -> range:
        return range(self.q)

    # dense tables, used by vectorised and compiled code paths
    @functools.cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self.add)

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self.mul)

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)

    def _table(self, op) -> np.ndarray:
        if self.q > 1024:
            raise FieldError("dense tables are limited to q <= 1024")
        t = np.empty((self.q, self.q), dtype=np.int64)
        for a in range(self.q):
            for b in range(self.q):
                t[a, b] = op(a, b)
        return t

    # text
    def format(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        terms = []
        for deg in range(self.e - 1, -1, -1):
            c = self._digits(a)[deg]
            if not c:
                continue
            if deg == 0:
                terms.append(str(c))
            else:
                mono = "g" if deg == 1 else f"g^{deg}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    _TERM = re.compile(r"^(?:(-?\d+)\*?)?(g(?:\^(\d+))?)?$")

    def parse(self, text: str) -> int:
        s = text.strip().replace(" ", "")
        if not s:
            raise FieldError("empty field element")
        if self.e == 1 or re.fullmatch(r"-?\d+", s):
            try:
                return int(s) % self.p
            except ValueError:
                raise FieldError(f"cannot parse {text!r} in {self}") from None
        coeffs = [0] * self.e
        for term in re.split(r"\+(?=.)", s.replace("-", "+-")):
            if not term:
                continue
            m = self._TERM.match(re.sub(r"^-(?=g)", "-1*", term))
            if not m or (m.group(1) is None and m.group(2) is None):
                raise FieldError(f"cannot parse {text!r} in {self}")
            c = 1 if m.group(1) is None else int(m.group(1))
            deg = 0 if m.group(2) is None else int(m.group(3) or 1)
            if deg >= self.e:
                raise FieldError(f"degree {deg} too large in {text!r}")
            coeffs[deg] += c
        return self._encode(coeffs)

    def element(self, value: int | str) -> "FieldElement":
        if isinstance(value, str):
            value = self.parse(value)
        if not 0 <= value < self.q:
            raise FieldError(f"{value} is not an element encoding of {self}")
        return FieldElement(self, value)

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __reduce__(self):
        return (make_field, (self.p, self.e))


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> Field:
    """GF(p^e) with the smallest monic irreducible modulus of degree e.

    Candidates are ordered by their encoding ``sum(c_i p^i)`` over the
    non-leading coefficients, so the choice is reproducible.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if e < 1:
        raise FieldError("extension degree must be positive")
    modulus = (0, 1) if e == 1 else smallest_irreducible(p, e)
    return Field(p, modulus)


def parse_field(spec: str | int) -> Field:
    """Parse ``"5"``, ``"2^5"`` or ``"9"`` (prime powers are factored)."""
    s = str(spec).strip()
    if "^" in s:
        p, e = (int(t) for t in s.split("^"))
        return make_field(p, e)
    q = int(s)
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return make_field(p, e)
    raise FieldError(f"{spec!r} is not a prime power")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format(self.value)


# -- vectors and matrices ---------------------------------------------------

def format_vector(f: Field, v: Sequence[int], bits: bool = True) -> str:
    """Bit-string form over GF(2), comma list otherwise."""
    if bits and f.q == 2:
        return "".join(str(x) for x in v)
    return ",".join(f.format(x) for x in v)


def parse_vector(f: Field, text: str, n: int | None = None) -> Vector:
    s = text.strip()
    if f.q == 2 and re.fullmatch(r"[01]+", s) and (n is None or len(s) == n):
        v = tuple(int(c) for c in s)
    elif "," in s or n == 1:
        v = tuple(f.parse(t) for t in s.split(","))
    else:
        raise FieldError(f"weights over {f} must be comma separated: {text!r}")
    if n is not None and len(v) != n:
        raise FieldError(f"expected {n} coordinates, got {len(v)}")
    return v


def scale(f: Field, c: int, v: Sequence[int]) -> Vector:
    return tuple(f.mul(c, x) for x in v)


def axpy(f: Field, c: int, x: Sequence[int], y: Sequence[int]) -> Vector:
    """c*x + y."""
    return tuple(f.add(f.mul(c, a), b) for a, b in zip(x, y))


def dot(f: Field, x: Sequence[int], y: Sequence[int]) -> int:
    s = 0
    for a, b in zip(x, y):
        if a and b:
            s = f.add(s, f.mul(a, b))
    return s


def normalize(f: Field, v: Sequence[int]) -> Vector:
    """Canonical projective representative: first nonzero coordinate is 1."""
    for x in v:
        if x:
            return scale(f, f.inv(x), v) if x != 1 else tuple(v)
    raise FieldError("the zero vector has no projective point")


def is_zero(v: Iterable[int]) -> bool:
    return not any(v)


def rref(f: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; pivots are taken leftmost-column first.

    Returns the nonzero reduced rows and their pivot columns.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != 1:
            iv = f.inv(piv)
            m[r] = [f.mul(iv, x) for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                c_i = f.neg(m[i][c])
                m[i] = [f.add(f.mul(c_i, a), b) if a else b for a, b in zip(row, m[i])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(f: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> int:
    return len(rref(f, rows, ncols)[1])


def kernel_basis(f: Field, rows: Iterable[Sequence[int]], ncols: int) -> list[Vector]:
    """Right null space, returned as the (unique) reduced echelon basis."""
    red, pivots = rref(f, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for row, pc in zip(red, pivots):
            if row[j]:
                v[pc] = f.neg(row[j])
        basis.append(tuple(v))
    return rref(f, basis, ncols)[0]


def span(f: Field, vectors: Iterable[Sequence[int]], ncols: int) -> list[Vector]:
    """Canonical basis (RREF) of the span."""
    return rref(f, vectors, ncols)[0]


def in_span(f: Field, basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    n = len(v)
    return rank(f, list(basis) + [v], n) == rank(f, basis, n)


def annihilator(f: Field, basis: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of linear forms vanishing on span(basis)."""
    return kernel_basis(f, basis, ncols)


def intersect(f: Field, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    ann = annihilator(f, a, ncols) + annihilator(f, b, ncols)
    return kernel_basis(f, ann, ncols)


def combine(f: Field, coeffs: Sequence[int], basis: Sequence[Sequence[int]], ncols: int) -> Vector:
    out = [0] * ncols
    for c, b in zip(coeffs, basis):
        if c:
            out = [f.add(f.mul(c, x), y) for x, y in zip(b, out)]
    return tuple(out)


def projective_points(f: Field, d: int) -> Iterator[Vector]:
    """Canonical points of P^{d-1}, i.e. of F^d up to scalars, in lex order."""
    for lead in range(d):
        for tail in itertools.product(range(f.q), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def count_projective_points(q: int, d: int) -> int:
    return (q ** d - 1) // (q - 1) if d > 0 else 0


def subspace_points(f: Field, basis: Sequence[Sequence[int]], ncols: int) -> Iterator[Vector]:
    """Canonical points of P(span(basis)) in ambient coordinates."""
    basis = span(f, basis, ncols)
    for c in projective_points(f, len(basis)):
        yield normalize(f, combine(f, c, basis, ncols))


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix over a finite field, entries as encodings."""

    field: Field
    rows: tuple[Vector, ...]
    ncols: int

    @classmethod
    def from_rows(cls, f: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise FieldError("ragged matrix")
        if any(not 0 <= x < f.q for r in rows for x in r):
            raise FieldError(f"entries must be encodings of {f}")
        return cls(f, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return rank(self.field, self.rows, self.ncols)

    def kernel_basis(self) -> list[Vector]:
        return kernel_basis(self.field, self.rows, self.ncols)

    def __str__(self) -> str:
        return "\n".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
