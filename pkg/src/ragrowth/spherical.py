"""Spherical growth of graph monoids, right-angled Artin and Coxeter groups.

Closed forms come from the clique polynomial evaluated at a Mobius
argument; per-type counts come from the strict branching recurrence on
cliques.  The two are cross-checked through the functional relations
that tie the three structures together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .arith import Poly, RationalFunction, Series, poly_substitute_mobius, series_compose
from .graph import CliqueIndex, Graph, clique_polynomial, enumerate_cliques, induced_delete
from .resolvent import IntMatrix, resolvent_apply
from .tables import Structure, TypeCountTable

# p(-t), p(-t/(1+t)), p(-2t/(1+t)) as (a, b, c) in p(a t / (b + c t))
MOBIUS_ARGUMENT = {
    Structure.MONOID: (-1, 1, 0),
    Structure.RACG: (-1, 1, 1),
    Structure.RAAG: (-2, 1, 1),
}


def spherical_gf_closed(g: Graph, s: Structure) -> RationalFunction:
    return poly_substitute_mobius(clique_polynomial(g), *MOBIUS_ARGUMENT[s]).reciprocal()


def spherical_gf_restricted(g: Graph, s: Structure, allowed: Iterable[int]) -> RationalFunction:
    """Growth series of the elements whose type lies inside ``allowed``."""
    arg = MOBIUS_ARGUMENT[s]
    rest = clique_polynomial(induced_delete(g, allowed))
    return poly_substitute_mobius(rest, *arg) / poly_substitute_mobius(clique_polynomial(g), *arg)


def strictly_branches(g: Graph, src: tuple[int, ...], dst: tuple[int, ...]) -> bool:
    """``src -> dst``: ``dst`` adds one new node ``i`` to ``src``, equals the
    maximal clique of ``src + {i}`` through ``i``, and ``i`` is its maximum."""
    if not weakly_branches(g, src, dst):
        return False
    new = (set(dst) - set(src)).pop()
    return new == max(dst)


def weakly_branches(g: Graph, src: tuple[int, ...], dst: tuple[int, ...]) -> bool:
    extra = set(dst) - set(src)
    if len(extra) != 1:
        return False
    i = extra.pop()
    return set(dst) == {i} | {v for v in src if g.adjacent(v, i)}


def branching_matrix_strict(g: Graph, idx: CliqueIndex | None = None) -> IntMatrix:
    """B0 with ``B0[i, j] = 1`` iff clique ``j`` strictly branches to clique ``i``."""
    idx = idx if idx is not None else enumerate_cliques(g)
    return _branching_matrix(g, idx, strict=True)


def _branching_matrix(g: Graph, idx: CliqueIndex, strict: bool) -> IntMatrix:
    n = len(idx)
    rows = [[0] * n for _ in range(n)]
    for j, src in enumerate(idx):
        members = set(src)
        for i in g.nodes:
            if i in members:
                continue
            dst = tuple(sorted({i} | (members & g.neighbors(i))))
            if strict and i != dst[-1]:
                continue
            rows[idx.index(dst)][j] = 1
    return IntMatrix(rows, idx.cliques)


def start_vector(idx: CliqueIndex, s: Structure) -> list[int]:
    """Counts at length one: each generator alone, with both signs in a RAAG."""
    per = 2 if s is Structure.RAAG else 1
    return [per if len(c) == 1 else 0 for c in idx]


def spherical_transfer_matrix(g: Graph, s: Structure, idx: CliqueIndex | None = None) -> IntMatrix:
    """I + B0, I + 2 B0 or B0 according to the structure."""
    idx = idx if idx is not None else enumerate_cliques(g)
    b0 = branching_matrix_strict(g, idx)
    eye = IntMatrix.identity(len(idx), idx.cliques)
    if s is Structure.MONOID:
        return eye + b0
    if s is Structure.RAAG:
        return eye + b0 * 2
    return b0


def spherical_type_series(g: Graph, s: Structure, order: int) -> TypeCountTable:
    if order < 1:
        raise ValueError("order must be at least 1")
    idx = enumerate_cliques(g)
    vectors = resolvent_apply(spherical_transfer_matrix(g, s, idx), start_vector(idx, s), order)
    counts = {(n, c): v for n, vec in enumerate(vectors, 1) for c, v in zip(idx, vec)}
    return TypeCountTable(s, order, counts)


# -- functional relations -------------------------------------------------

# (name, target structure, source structure, substituted argument)
_T = Poly.t()
RELATIONS = (
    ("M = W(t/(1-t))", Structure.MONOID, Structure.RACG, RationalFunction(_T, 1 - _T)),
    ("A = W(2t/(1-t))", Structure.RAAG, Structure.RACG, RationalFunction(_T * 2, 1 - _T)),
    ("W = M(t/(1+t))", Structure.RACG, Structure.MONOID, RationalFunction(_T, 1 + _T)),
    ("A = M(2t/(1+t))", Structure.RAAG, Structure.MONOID, RationalFunction(_T * 2, 1 + _T)),
)


@dataclass
class Mismatch:
    relation: str
    clique: tuple[int, ...] | None  # None for the total series
    n: int
    expected: int
    got: int


@dataclass
class RelationReport:
    order: int
    checked: list[str] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "ok": self.ok,
            "checked": self.checked,
            "mismatches": [
                {"relation": m.relation, "type": None if m.clique is None else list(m.clique),
                 "n": m.n, "expected": str(m.expected), "got": str(m.got)}
                for m in self.mismatches
            ],
        }


def _compare(report: RelationReport, name: str, clique, lhs: Series, rhs: Series) -> None:
    for n in range(report.order + 1):
        if lhs[n] != rhs[n]:
            report.mismatches.append(Mismatch(name, clique, n, lhs[n], rhs[n]))


def verify_functional_relations(g: Graph, order: int) -> RelationReport:
    """Check each per-type relation, and its sum over types, through ``t^order``."""
    tables = {s: spherical_type_series(g, s, max(order, 1)) for s in Structure}
    report = RelationReport(order)
    idx = enumerate_cliques(g)
    for name, target, source, arg in RELATIONS:
        for c in idx:
            lhs = tables[target].type_series(c).truncate(order)
            rhs = series_compose(tables[source].type_series(c), arg, order)
            _compare(report, name, c, lhs, rhs)
        lhs = tables[target].totals_series().truncate(order)
        rhs = series_compose(tables[source].totals_series(), arg, order)
        _compare(report, name, None, lhs, rhs)
        report.checked.append(name)
    return report
