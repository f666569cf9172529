"""Graph-like data shared by the resonance and neighborly modules."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matroid import MatroidError, parse_symbols, symbol


@dataclass(frozen=True)
class NeighborlyStructure:
    """Cone vertices plus a partition of the remaining vertices into blocks.

    The associated graph on range(n) has an edge {i, j} whenever i and j
    lie in a common clique ``block | cones``.
    """

    n: int
    cones: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, n: int, cones: Iterable[int], blocks: Iterable[Iterable[int]]) -> "NeighborlyStructure":
        cones = frozenset(cones)
        blocks = tuple(sorted(tuple(sorted(b)) for b in blocks if b))
        seen = set(cones)
        for b in blocks:
            if seen & set(b):
                raise ValueError(f"block {b} overlaps another block or the cone set")
            seen |= set(b)
        if seen != set(range(n)):
            raise ValueError("blocks and cones must cover the ground set")
        return cls(n, cones, blocks)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if i not in self.cones)

    @property
    def key(self) -> tuple:
        return (tuple(sorted(self.cones)), self.blocks)

    def cliques(self) -> list[frozenset[int]]:
        """Maximal cliques: each block together with the cone vertices."""
        return [frozenset(b) | self.cones for b in self.blocks]

    def block_of(self) -> dict[int, int]:
        return {i: k for k, b in enumerate(self.blocks) for i in b}

    def is_edge(self, i: int, j: int) -> bool:
        if i in self.cones or j in self.cones:
            return True
        where = self.block_of()
        return where[i] == where[j]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in itertools.combinations(range(self.n), 2) if self.is_edge(i, j)]

    def block_edges(self) -> list[tuple[int, int]]:
        """Edges inside blocks (the ones that constrain vectors vanishing on cones)."""
        return [pair for b in self.blocks for pair in itertools.combinations(b, 2)]

    def is_clique(self, s: Iterable[int]) -> bool:
        rest = [i for i in s if i not in self.cones]
        where = self.block_of()
        return len({where[i] for i in rest}) <= 1

    def format(self, labels: Sequence[int] | None = None) -> str:
        labels = labels or tuple(range(1, self.n + 1))
        body = "|".join("".join(symbol(labels[i]) for i in b) for b in self.blocks)
        cones = "".join(symbol(labels[i]) for i in sorted(self.cones))
        return f"{body} cones={cones}" if cones else body

    def paper_format(self, labels: Sequence[int] | None = None) -> str:
        """Clique notation, e.g. ``1457|27|37|67|78``."""
        labels = labels or tuple(range(1, self.n + 1))
        return "|".join("".join(symbol(labels[i]) for i in sorted(c)) for c in self.cliques())

    @classmethod
    def parse(cls, text: str, n: int, labels: Sequence[int] | None = None) -> "NeighborlyStructure":
        """Parse ``127|3|4|5|6`` or ``1457|27|37|67|78`` or ``145|2|3|6|8 cones=7``.

        Without a ``cones=`` part, the cone set is everything not listed,
        plus any element occurring in every block.
        """
        labels = labels or tuple(range(1, n + 1))
        index = {lab: i for i, lab in enumerate(labels)}
        m = re.fullmatch(r"\s*([^;\s]+)\s*(?:[;\s]\s*cones\s*=\s*(\S*))?\s*", text)
        if not m:
            raise MatroidError(f"cannot parse structure {text!r}")

        def idx(sym: str) -> list[int]:
            try:
                return [index[lab] for lab in parse_symbols(sym)]
            except KeyError as exc:
                raise MatroidError(f"element {exc.args[0]} not in ground set") from None

        blocks = [set(idx(b)) for b in m.group(1).split("|")]
        if m.group(2) is not None:
            cones = set(idx(m.group(2))) if m.group(2) else set()
        else:
            common = set.intersection(*blocks) if len(blocks) > 1 else set()
            listed = set().union(*blocks)
            cones = common | (set(range(n)) - listed)
        blocks = [b - cones for b in blocks]
        try:
            return cls.make(n, cones, blocks)
        except ValueError as exc:
            raise MatroidError(str(exc)) from None


@dataclass(frozen=True)
class PairGraph:
    """The graph of a resonant pair: {i, j} is an edge iff the 2x2 minor vanishes."""

    n: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def cone_vertices(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if all(self.has_edge(i, j) for j in range(self.n) if j != i))

    def to_structure(self) -> NeighborlyStructure:
        """Cone set plus the components on the support (which are cliques)."""
        cones = self.cone_vertices()
        rest = [i for i in range(self.n) if i not in cones]
        blocks: list[list[int]] = []
        for i in rest:
            for b in blocks:
                if self.has_edge(b[0], i):
                    b.append(i)
                    break
            else:
                blocks.append([i])
        return NeighborlyStructure.make(self.n, cones, blocks)
