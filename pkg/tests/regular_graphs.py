"""Exhaustive enumeration of small regular graphs.

A link-regular graph is regular (all vertex links have one size), so
searching every regular graph on n vertices finds every link-regular one.
"""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from ragrowth import Graph, clique_polynomial, link_regular_profile


def regular_graphs(n: int, k: int) -> Iterator[list[tuple[int, int]]]:
    """Every labelled k-regular graph on 1..n whose node 1 has neighbours
    2..k+1.  Up to isomorphism that is every k-regular graph."""
    if n == 0:
        yield []
        return
    if k >= n or (n * k) % 2:
        return
    need = [0] + [k] * n
    edges = [(1, j) for j in range(2, k + 2)]
    need[1] = 0
    for j in range(2, k + 2):
        need[j] -= 1
    pairs = [(i, j) for i in range(2, n + 1) for j in range(i + 1, n + 1)]

    def rec(p: int) -> Iterator[list[tuple[int, int]]]:
        if p == len(pairs):
            if not any(need):
                yield list(edges)
            return
        i, j = pairs[p]
        for take in (True, False):
            if take:
                if not (need[i] and need[j]):
                    continue
                need[i] -= 1
                need[j] -= 1
                edges.append((i, j))
            # j == n is the last chance to finish node i
            if j < n or not need[i]:
                yield from rec(p + 1)
            if take:
                need[i] += 1
                need[j] += 1
                edges.pop()

    yield from rec(0)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from(g.edges)
    return h


def regular_classes(n: int, k: int) -> list[Graph]:
    """One representative per isomorphism class of k-regular graphs on n nodes."""
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for edges in regular_graphs(n, k):
        h = nx.Graph()
        h.add_nodes_from(range(1, n + 1))
        h.add_edges_from(edges)
        reps = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
            out.append(Graph(n, edges))
    return out


def link_regular_classes(max_nodes: int) -> tuple[int, dict[tuple[int, ...], list[Graph]]]:
    """Scan every regular graph on at most ``max_nodes`` nodes.  Returns the
    number of labelled graphs scanned and the link-regular isomorphism
    classes grouped by clique polynomial."""
    scanned = 0
    groups: dict[tuple[int, ...], list[Graph]] = {}
    for n in range(1, max_nodes + 1):
        for k in range(n):
            for edges in regular_graphs(n, k):
                scanned += 1
                g = Graph(n, edges)
                if link_regular_profile(g) is None:
                    continue
                reps = groups.setdefault(clique_polynomial(g).coeffs, [])
                h = to_nx(g)
                if not any(nx.is_isomorphic(h, to_nx(r)) for r in reps):
                    reps.append(g)
    return scanned, groups
