"""Brute-force enumeration of elements and reduced words.

This is the ground truth the matrix methods are tested against, so it
works directly with words and the defining relations: commuting adjacent
generators, cancelling ``x x^-1`` (RAAG) and ``x x`` (RACG).  Nothing here
uses cliques or branching.

A letter is a pair ``(node, sign)``; a word is a tuple of letters.
"""

from __future__ import annotations

import os
from collections import defaultdict
from typing import Iterable

from .graph import Graph
from .tables import GeodesicCountTable, Structure, TypeCountTable

Letter = tuple[int, int]
Word = tuple[Letter, ...]

DEFAULT_CAP = 2_000_000


class OracleCapExceeded(RuntimeError):
    def __init__(self, depth: int, cap: int):
        super().__init__(f"enumeration cap of {cap} words exceeded at depth {depth}")
        self.depth = depth
        self.cap = cap


def default_cap() -> int:
    """The enumeration cap, overridable through ``GROWTH_CAP``."""
    env = os.environ.get("GROWTH_CAP")
    return int(env) if env else DEFAULT_CAP


def alphabet(graph: Graph, s: Structure) -> list[Letter]:
    return [(i, e) for i in graph.nodes for e in s.signs]


def _letter_key(letter: Letter) -> tuple[int, int]:
    return (letter[0], 0 if letter[1] > 0 else 1)


def _partner(letter: Letter, s: Structure) -> Letter | None:
    """The letter that cancels against ``letter``."""
    if s is Structure.RAAG:
        return (letter[0], -letter[1])
    if s is Structure.RACG:
        return letter
    return None


def append_and_reduce(w: Word, g: Letter, graph: Graph, s: Structure) -> tuple[Word, bool]:
    """Append ``g`` to the reduced word ``w``.

    Returns ``(word, cancelled)``.  If some letter of ``w`` cancels with
    ``g`` after being shuffled to the end, that letter is removed and
    ``cancelled`` is True; otherwise the result is ``w + (g,)``.
    """
    partner = _partner(g, s)
    if partner is not None:
        node = g[0]
        nbrs = graph.neighbor_mask(node)
        for p in range(len(w) - 1, -1, -1):
            letter = w[p]
            if letter == partner:
                return w[:p] + w[p + 1:], True
            if not (nbrs >> letter[0]) & 1:
                break
    return w + (g,), False


def canonical_form(w: Word, graph: Graph) -> Word:
    """Lexicographically least word reachable from ``w`` by shuffles.

    Greedy: repeatedly take the least letter that has no non-commuting
    letter in front of it.
    """
    rest = list(w)
    out = []
    while rest:
        best = None
        best_pos = -1
        front = -1  # bitmask of nodes commuting with everything seen so far
        for p, letter in enumerate(rest):
            node = letter[0]
            if (front >> node) & 1 and (best is None or _letter_key(letter) < _letter_key(best)):
                best, best_pos = letter, p
            front &= graph.neighbor_mask(node)
            if not front:
                break
        out.append(best)
        del rest[best_pos]
    return tuple(out)


def word_type(w: Word, graph: Graph) -> tuple[int, ...]:
    """Nodes whose letter in ``w`` can be shuffled to the end."""
    back = -1
    out = []
    for p in range(len(w) - 1, -1, -1):
        node = w[p][0]
        if (back >> node) & 1:
            out.append(node)
        back &= graph.neighbor_mask(node)
        if not back:
            break
    return tuple(sorted(out))


def is_reduced(w: Word, graph: Graph, s: Structure) -> bool:
    """Rebuild ``w`` letter by letter and check nothing cancels."""
    acc: Word = ()
    for g in w:
        acc, cancelled = append_and_reduce(acc, g, graph, s)
        if cancelled:
            return False
    return True


def reduce_word(w: Iterable[Letter], graph: Graph, s: Structure) -> Word:
    acc: Word = ()
    for g in w:
        acc, _ = append_and_reduce(acc, g, graph, s)
    return acc


class _Codes:
    """Letters encoded as small ints so words can be stored as ``bytes``.

    Code ``2 (node - 1) + (0 if sign > 0 else 1)`` orders letters by node,
    then positive before negative, which is the canonical-form order.
    """

    def __init__(self, graph: Graph, s: Structure):
        self.letters = alphabet(graph, s)
        count = 2 * graph.m
        self.node = [0] * count
        self.commute = [0] * count  # bitmask over codes
        self.partner = [-1] * count
        for i in graph.nodes:
            for e in (1, -1):
                code = self.encode((i, e))
                self.node[code] = i
                self.commute[code] = sum(
                    3 << (2 * (j - 1)) for j in graph.neighbors(i))
                p = _partner((i, e), s)
                self.partner[code] = self.encode(p) if p is not None else -1
        self.codes = [self.encode(g) for g in self.letters]
        self.node_mask = [graph.neighbor_mask(self.node[c]) for c in range(count)]

    @staticmethod
    def encode(letter: Letter) -> int:
        return 2 * (letter[0] - 1) + (0 if letter[1] > 0 else 1)

    @staticmethod
    def decode(code: int) -> Letter:
        return (code // 2 + 1, -1 if code & 1 else 1)

    def extend_canonical(self, w: bytes, g: int) -> bytes | None:
        """Canonical form of ``w g`` given canonical ``w``; None if ``g`` cancels.

        ``g`` slides left over letters it commutes with and stops in front
        of the first letter larger than itself inside that commuting suffix.
        """
        partner = self.partner[g]
        comm = self.commute[g]
        insert = len(w)
        for p in range(len(w) - 1, -1, -1):
            c = w[p]
            if c == partner:
                return None
            if not (comm >> c) & 1:
                break
            if c > g:
                insert = p
        return w[:insert] + bytes((g,)) + w[insert:]

    def extend(self, w: bytes, g: int) -> bytes | None:
        """``w g`` if no letter of ``w`` cancels against ``g``, else None."""
        partner = self.partner[g]
        if partner >= 0:
            comm = self.commute[g]
            for p in range(len(w) - 1, -1, -1):
                c = w[p]
                if c == partner:
                    return None
                if not (comm >> c) & 1:
                    break
        return w + bytes((g,))

    def word_type(self, w: bytes) -> tuple[int, ...]:
        back = -1
        out = []
        for p in range(len(w) - 1, -1, -1):
            node = self.node[w[p]]
            if (back >> node) & 1:
                out.append(node)
            back &= self.node_mask[w[p]]
            if not back:
                break
        return tuple(sorted(out))


def count_elements_by_type(graph: Graph, s: Structure, depth: int,
                           cap: int | None = None) -> TypeCountTable:
    """Breadth-first search over elements, deduplicated by canonical form.

    Each level holds the canonical words of one length; a child is kept
    only when appending a letter does not cancel.
    """
    cap = default_cap() if cap is None else cap
    enc = _Codes(graph, s)
    counts: dict = defaultdict(int)
    level: set[bytes] = {b""}
    for n in range(1, depth + 1):
        nxt: set[bytes] = set()
        for w in level:
            for g in enc.codes:
                w2 = enc.extend_canonical(w, g)
                if w2 is not None:
                    nxt.add(w2)
            if len(nxt) > cap:
                raise OracleCapExceeded(n, cap)
        for w in nxt:
            counts[n, enc.word_type(w)] += 1
        level = nxt
    return TypeCountTable(s, depth, counts)


def count_geodesics_by_type(graph: Graph, s: Structure, depth: int,
                            cap: int | None = None) -> GeodesicCountTable:
    """Depth-first enumeration of every reduced word up to ``depth``."""
    cap = default_cap() if cap is None else cap
    enc = _Codes(graph, s)
    counts: dict = defaultdict(int)
    visited = 0
    stack: list[bytes] = [b""]
    while stack:
        w = stack.pop()
        for g in enc.codes:
            w2 = enc.extend(w, g)
            if w2 is None:
                continue
            visited += 1
            if visited > cap:
                raise OracleCapExceeded(len(w2), cap)
            counts[len(w2), enc.word_type(w2)] += 1
            if len(w2) < depth:
                stack.append(w2)
    return GeodesicCountTable(s, depth, counts)


def shuffle_class(w: Word, graph: Graph) -> frozenset[Word]:
    """Every word obtained from ``w`` by shuffles (closure under swaps of
    adjacent commuting letters).  Exponential; only for tiny words."""
    seen = {w}
    todo = [w]
    while todo:
        u = todo.pop()
        for p in range(len(u) - 1):
            a, b = u[p], u[p + 1]
            if graph.adjacent(a[0], b[0]):
                v = u[:p] + (b, a) + u[p + 2:]
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return frozenset(seen)


def parent(w: Word, graph: Graph) -> Word:
    """The element obtained by deleting the letter of the largest node in
    the type; ``w`` must be a non-empty reduced word."""
    top = max(word_type(w, graph))
    for p in range(len(w) - 1, -1, -1):
        if w[p][0] == top:
            return w[:p] + w[p + 1:]
    raise AssertionError("type node missing from word")
