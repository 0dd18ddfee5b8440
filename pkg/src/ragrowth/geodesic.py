"""Geodesic (reduced word) growth via weak branching of cliques."""

from __future__ import annotations

from .arith import RationalFunction
from .graph import CliqueIndex, Graph, enumerate_cliques
from .resolvent import IntMatrix, resolvent_apply, resolvent_total
from .spherical import _branching_matrix, start_vector
from .tables import GeodesicCountTable, Structure


def branching_matrix_weak(g: Graph, idx: CliqueIndex | None = None) -> IntMatrix:
    """B1 with ``B1[i, j] = 1`` iff clique ``j`` weakly branches to clique ``i``."""
    idx = idx if idx is not None else enumerate_cliques(g)
    return _branching_matrix(g, idx, strict=False)


def diagonal_matrix(idx: CliqueIndex) -> IntMatrix:
    return IntMatrix.diagonal([len(c) for c in idx], idx.cliques)


def geodesic_transfer_matrix(g: Graph, s: Structure, idx: CliqueIndex | None = None) -> IntMatrix:
    """D + B1, D + 2 B1 or B1 according to the structure."""
    idx = idx if idx is not None else enumerate_cliques(g)
    b1 = branching_matrix_weak(g, idx)
    if s is Structure.RACG:
        return b1
    return diagonal_matrix(idx) + (b1 * 2 if s is Structure.RAAG else b1)


def geodesic_type_series(g: Graph, s: Structure, order: int) -> GeodesicCountTable:
    if order < 1:
        raise ValueError("order must be at least 1")
    idx = enumerate_cliques(g)
    vectors = resolvent_apply(geodesic_transfer_matrix(g, s, idx), start_vector(idx, s), order)
    counts = {(n, c): v for n, vec in enumerate(vectors, 1) for c, v in zip(idx, vec)}
    return GeodesicCountTable(s, order, counts)


def geodesic_gf_exact(g: Graph, s: Structure) -> RationalFunction:
    idx = enumerate_cliques(g)
    return resolvent_total(geodesic_transfer_matrix(g, s, idx), start_vector(idx, s))
