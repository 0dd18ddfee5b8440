"""Finite simple graphs, their cliques, links and link-regularity.

Nodes are labelled ``1..m``.  A clique is a strictly increasing tuple of
node labels; the empty tuple is the empty clique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .arith import Poly

Clique = tuple[int, ...]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad labels, loops, repeated edges)."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on nodes ``1..m``.

    ``labels[k-1]`` is the label node ``k`` had in the graph this one was
    cut out of (see :func:`induced_delete`); it defaults to ``k``.
    """

    m: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[int, ...] = ()
    _adj: tuple[frozenset[int], ...] = field(default=(), repr=False, compare=False)
    _masks: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __init__(self, m: int, edges: Iterable[Sequence[int]] = (),
                 labels: Sequence[int] | None = None):
        if not isinstance(m, int) or m < 0:
            raise GraphFormatError(f"node count must be a non-negative integer, got {m!r}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {e!r} does not have two endpoints")
            i, j = int(e[0]), int(e[1])
            if not (1 <= i <= m and 1 <= j <= m):
                raise GraphFormatError(f"edge {e!r} has an endpoint outside 1..{m}")
            if i == j:
                raise GraphFormatError(f"self-loop at node {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphFormatError(f"repeated edge {key}")
            seen.add(key)
        adj: list[set[int]] = [set() for _ in range(m + 1)]
        for i, j in seen:
            adj[i].add(j)
            adj[j].add(i)
        if labels is None:
            labels = range(1, m + 1)
        labels = tuple(labels)
        if len(labels) != m:
            raise GraphFormatError("labels must name every node")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(
            self, "_masks", tuple(sum(1 << v for v in a) for a in adj))

    @property
    def nodes(self) -> range:
        return range(1, self.m + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Bitmask of the neighbours of ``v`` (bit ``u`` set iff ``u ~ v``)."""
        return self._masks[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def is_clique(self, nodes: Iterable[int]) -> bool:
        ns = list(nodes)
        if any(not (1 <= v <= self.m) for v in ns) or len(set(ns)) != len(ns):
            return False
        return all(self.adjacent(u, v) for k, u in enumerate(ns) for v in ns[k + 1:])

    # -- constructors for the standard fixtures ---------------------------

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)])

    @classmethod
    def empty(cls, m: int) -> "Graph":
        return cls(m, [])

    @classmethod
    def path(cls, m: int) -> "Graph":
        """The line graph A_m: 1 - 2 - ... - m."""
        return cls(m, [(i, i + 1) for i in range(1, m)])

    @classmethod
    def cycle(cls, m: int) -> "Graph":
        if m < 3:
            raise GraphFormatError("a cycle needs at least 3 nodes")
        return cls(m, [(i, i % m + 1) for i in range(1, m + 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"nodes": self.m, "edges": [list(e) for e in sorted(self.edges)]}


def parse_graph(text: str) -> Graph:
    """Parse either ``{"nodes": m, "edges": [[i, j], ...]}`` or the text
    format (``nodes m`` followed by ``edge i j`` lines; ``#`` comments)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict) or "nodes" not in data:
            raise GraphFormatError('JSON graph needs a "nodes" field')
        m = data["nodes"]
        if isinstance(m, bool) or not isinstance(m, int):
            raise GraphFormatError('"nodes" must be an integer')
        edges = data.get("edges", [])
        if not isinstance(edges, list) or any(
                not isinstance(e, list) or not all(isinstance(x, int) for x in e)
                for e in edges):
            raise GraphFormatError('"edges" must be a list of integer pairs')
        return Graph(m, edges)

    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "nodes" and len(parts) == 2 and m is None:
                m = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}") from None
    if m is None:
        raise GraphFormatError('missing "nodes m" line')
    return Graph(m, edges)


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


# -- cliques ---------------------------------------------------------------


@dataclass(frozen=True)
class CliqueIndex:
    """All non-empty cliques, sorted by size and then lexicographically."""

    cliques: tuple[Clique, ...]
    _pos: dict = field(repr=False, compare=False, hash=False)

    def __init__(self, cliques: Iterable[Clique]):
        cs = tuple(sorted((tuple(c) for c in cliques), key=lambda c: (len(c), c)))
        object.__setattr__(self, "cliques", cs)
        object.__setattr__(self, "_pos", {c: k for k, c in enumerate(cs)})

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[Clique]:
        return iter(self.cliques)

    def __getitem__(self, k: int) -> Clique:
        return self.cliques[k]

    def __contains__(self, c) -> bool:
        return tuple(c) in self._pos

    def index(self, c: Iterable[int]) -> int:
        return self._pos[tuple(sorted(c))]


def enumerate_cliques(g: Graph) -> CliqueIndex:
    out: list[Clique] = []

    def extend(clique: Clique, candidates: list[int]) -> None:
        out.append(clique)
        for k, v in enumerate(candidates):
            extend(clique + (v,), [u for u in candidates[k + 1:] if g.adjacent(u, v)])

    for v in g.nodes:
        extend((v,), sorted(u for u in g.neighbors(v) if u > v))
    return CliqueIndex(out)


def clique_polynomial(g: Graph) -> Poly:
    counts = [1]
    for c in enumerate_cliques(g):
        while len(counts) <= len(c):
            counts.append(0)
        counts[len(c)] += 1
    return Poly(counts)


def induced_delete(g: Graph, remove: Iterable[int]) -> Graph:
    """Induced subgraph on the nodes not in ``remove``, relabelled ``1..m'``.

    The surviving nodes keep their relative order; ``labels`` of the result
    records the original label of each new node.
    """
    remove = set(remove)
    if not remove <= set(g.nodes):
        raise ValueError(f"nodes {sorted(remove - set(g.nodes))} are not in the graph")
    keep = [v for v in g.nodes if v not in remove]
    new = {v: k for k, v in enumerate(keep, 1)}
    edges = [(new[i], new[j]) for i, j in g.edges if i in new and j in new]
    return Graph(len(keep), edges, labels=[g.labels[v - 1] for v in keep])


def link(g: Graph, c: Iterable[int]) -> frozenset[int]:
    c = tuple(c)
    if not g.is_clique(c):
        raise ValueError(f"{c} is not a clique")
    out = set(g.nodes) - set(c)
    for v in c:
        out &= g.neighbors(v)
    return frozenset(out)


@dataclass(frozen=True)
class LinkProfile:
    """Link sizes of a link-regular graph: ``L[r]`` is the size of the link
    of any ``r``-clique, for ``r = 0..d``, with ``L[0] = m``."""

    m: int
    d: int
    L: tuple[int, ...]

    def to_json(self) -> dict:
        return {"m": self.m, "d": self.d, "L": list(self.L)}

    @classmethod
    def from_json(cls, data: dict) -> "LinkProfile":
        return cls(int(data["m"]), int(data["d"]), tuple(int(x) for x in data["L"]))


def link_regular_profile(g: Graph) -> LinkProfile | None:
    """Return the link profile of ``g``, or ``None`` if ``g`` is not link-regular."""
    sizes: dict[int, int] = {0: g.m}
    for c in enumerate_cliques(g):
        s = len(link(g, c))
        if sizes.setdefault(len(c), s) != s:
            return None
    d = max(sizes)
    profile = LinkProfile(g.m, d, tuple(sizes[r] for r in range(d + 1)))

    # double count (clique, vertex) incidences: n c_n = c_{n-1} L_{n-1}
    c = clique_polynomial(g)
    for n in range(1, d + 1):
        if n * c[n] != c[n - 1] * profile.L[n - 1]:
            raise AssertionError(f"clique count identity fails at n={n} for {g}")
    return profile
