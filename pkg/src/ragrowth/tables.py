"""Structures (monoid / RAAG / RACG) and per-type count tables."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .arith import Series
from .graph import Clique


class Structure(enum.Enum):
    MONOID = "monoid"
    RAAG = "raag"
    RACG = "racg"

    @property
    def signs(self) -> tuple[int, ...]:
        """Exponents available on each generator."""
        return (1, -1) if self is Structure.RAAG else (1,)


@dataclass(frozen=True)
class CountTable:
    """Counts indexed by (length ``n >= 1``, type clique), known for
    ``n <= order``.  Zero entries are not stored; length 0 is the identity
    (empty type) and is implicit."""

    structure: Structure
    order: int
    counts: Mapping[tuple[int, Clique], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {(n, tuple(c)): int(v) for (n, c), v in self.counts.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("counts must be non-negative")
        if any(n < 1 or n > self.order for n, _ in clean):
            raise ValueError("count recorded at a length outside 1..order")
        object.__setattr__(self, "counts", clean)

    def count(self, n: int, c: Iterable[int]) -> int:
        return self.counts.get((n, tuple(c)), 0)

    def types(self) -> list[Clique]:
        return sorted({c for _, c in self.counts}, key=lambda c: (len(c), c))

    def totals(self) -> list[int]:
        """Total count at each length ``0..order`` (1 at length 0)."""
        out = [1] + [0] * self.order
        for (n, _), v in self.counts.items():
            out[n] += v
        return out

    def totals_series(self) -> Series:
        return Series(self.totals(), self.order)

    def type_series(self, c: Iterable[int]) -> Series:
        """``sum_{n>=1} count(n, c) t^n``."""
        c = tuple(c)
        return Series([0] + [self.count(n, c) for n in range(1, self.order + 1)], self.order)

    def restricted_series(self, allowed: Iterable[int]) -> Series:
        """Series of counts over types contained in ``allowed``, plus 1."""
        allowed = set(allowed)
        out = [1] + [0] * self.order
        for (n, c), v in self.counts.items():
            if set(c) <= allowed:
                out[n] += v
        return Series(out, self.order)

    def by_cardinality(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (n, c), v in self.counts.items():
            out[n, len(c)] += v
        return dict(out)

    def truncate(self, order: int) -> "CountTable":
        return type(self)(self.structure, order,
                          {k: v for k, v in self.counts.items() if k[0] <= order})

    def to_json(self) -> dict:
        rows = sorted(self.counts.items(), key=lambda kv: (kv[0][0], len(kv[0][1]), kv[0][1]))
        return {
            "structure": self.structure.value,
            "rows": [{"n": n, "type": list(c), "count": str(v)} for (n, c), v in rows],
        }


class TypeCountTable(CountTable):
    """Elements of each length and type."""


class GeodesicCountTable(CountTable):
    """Reduced words of each length and type."""
