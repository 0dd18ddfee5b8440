"""Integer matrices and the resolvent ``t (I - M t)^{-1} v``.

Two independent routes are provided: :func:`resolvent_apply` iterates
``v_n = M^{n-1} v_1`` coefficient by coefficient, while
:func:`resolvent_exact` solves ``(I - M t) x = t v_1`` in closed form by
fraction-free elimination on the polynomial matrix.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import Poly, RationalFunction, _slot_bits, _unpack, series_expand


class IntMatrix:
    """Square integer matrix, optionally carrying a label per row/column."""

    __slots__ = ("rows", "labels")

    def __init__(self, rows: Iterable[Iterable[int]], labels: Sequence | None = None):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("IntMatrix must be square")
        if labels is not None and len(labels) != n:
            raise ValueError("one label per row is required")
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def zeros(cls, n: int, labels=None) -> "IntMatrix":
        return cls([[0] * n for _ in range(n)], labels)

    @classmethod
    def identity(cls, n: int, labels=None) -> "IntMatrix":
        return cls.diagonal([1] * n, labels)

    @classmethod
    def diagonal(cls, entries: Sequence[int], labels=None) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], labels)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.size != other.size:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.labels or other.labels)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[a * other for a in r] for r in self.rows], self.labels)
        if isinstance(other, IntMatrix):
            if self.size != other.size:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.rows))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                              for r in self.rows], self.labels)
        return NotImplemented

    __rmul__ = __mul__

    def matvec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.size:
            raise ValueError(f"dimension mismatch: matrix {self.size}, vector {len(v)}")
        return [sum(a * x for a, x in zip(r, v) if a) for r in self.rows]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_nilpotent(self) -> bool:
        p = IntMatrix.identity(self.size)
        for _ in range(self.size):
            p = p * self
        return p.is_zero()

    def nonzero_entries(self) -> list[tuple[int, int, int]]:
        return [(i, j, a) for i, r in enumerate(self.rows) for j, a in enumerate(r) if a]

    def to_json(self) -> dict:
        out = {"rows": [[str(a) for a in r] for r in self.rows]}
        if self.labels is not None:
            out["labels"] = [list(c) if isinstance(c, tuple) else c for c in self.labels]
        return out


def resolvent_apply(M: IntMatrix, v1: Sequence[int], order: int) -> list[list[int]]:
    """Vectors ``v_1, ..., v_order`` with ``v_n = M^(n-1) v_1``."""
    if len(v1) != M.size:
        raise ValueError(f"dimension mismatch: matrix {M.size}, vector {len(v1)}")
    if order < 1:
        return []
    out = [[int(x) for x in v1]]
    for _ in range(order - 1):
        out.append(M.matvec(out[-1]))
    return out


def resolvent_solve(M: IntMatrix, v1: Sequence[int]) -> tuple[list[Poly], Poly]:
    """Polynomials ``y_i`` and ``det`` with ``x_i = y_i / det`` solving
    ``(I - M t) x = t v_1``; ``det = det(I - M t)``.

    Bareiss elimination keeps every intermediate entry a polynomial (a minor
    of the augmented matrix), and the back substitution divides exactly
    because ``det * x`` is polynomial.  Polynomials are carried packed as
    their values at ``t = 2^k``: evaluation is a ring map, so the updates and
    exact divisions carry over to integers.  The slot width ``k`` is chosen
    so that every minor, and hence ``det`` and each ``y_i``, unpacks uniquely.
    """
    n = M.size
    if len(v1) != n:
        raise ValueError(f"dimension mismatch: matrix {n}, vector {len(v1)}")
    if n == 0:
        return [], Poly.const(1)
    # the coefficients of any minor are bounded by the product of the row
    # l1-norms, counting every coefficient of every entry
    bound = 1
    for i in range(n):
        bound *= 1 + sum(abs(x) for x in M.rows[i]) + abs(int(v1[i]))
    k = _slot_bits(bound)
    x = 1 << k
    a = [[int(i == j) - M[i, j] * x for j in range(n)] + [int(v1[i]) * x] for i in range(n)]

    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            # cannot happen: leading principal minors of I - Mt are 1 at t = 0
            raise ZeroDivisionError("zero pivot in I - Mt")
        piv, rowp = a[p][p], a[p]
        for i in range(p + 1, n):
            rowi = a[i]
            aip = rowi[p]
            for j in range(p + 1, n + 1):
                aij, apj = rowi[j], rowp[j]
                if aip == 0 or apj == 0:
                    if aij == 0:
                        continue
                    val = piv * aij
                else:
                    val = piv * aij - aip * apj
                rowi[j] = val // prev if prev != 1 else val
            rowi[p] = 0
        prev = piv
    det = a[n - 1][n - 1]
    if det == 0:
        raise ZeroDivisionError("I - Mt is singular")

    y = [0] * n
    for i in range(n - 1, -1, -1):
        acc = det * a[i][n]
        row = a[i]
        for j in range(i + 1, n):
            if row[j] and y[j]:
                acc -= row[j] * y[j]
        y[i] = acc // row[i]
    slots = n + 2
    return [Poly(_unpack(v, k, slots)) for v in y], Poly(_unpack(det, k, slots))


def resolvent_exact(M: IntMatrix, v1: Sequence[int]) -> list[RationalFunction]:
    """Components of ``t (I - M t)^{-1} v_1`` as reduced rational functions."""
    y, det = resolvent_solve(M, v1)
    return [RationalFunction(p, det) for p in y]


def resolvent_total(M: IntMatrix, v1: Sequence[int]) -> RationalFunction:
    """``1 + 1' t (I - M t)^{-1} v_1``: the sum of all components plus one."""
    y, det = resolvent_solve(M, v1)
    num = det
    for p in y:
        num = num + p
    return RationalFunction(num, det)


def resolvents_agree(M: IntMatrix, v1: Sequence[int], order: int) -> bool:
    """Whether the closed form expands to the iterated vectors through ``t^order``."""
    iterated = resolvent_apply(M, v1, order)
    for k, f in enumerate(resolvent_exact(M, v1)):
        if series_expand(f, order).coeffs[1:] != tuple(v[k] for v in iterated):
            return False
    return True
