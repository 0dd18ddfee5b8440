"""Exact integer polynomials, rational functions and truncated power series.

Everything here works over Python ints, so there is no rounding and no
overflow.  Rational functions are kept in a canonical form: numerator and
denominator coprime, joint content 1, denominator with positive leading
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Sequence, Union


def _strip(cs: Iterable[int]) -> tuple[int, ...]:
    cs = [int(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


# Above this length products and quotients go through Kronecker substitution:
# pack the coefficients into one big integer and let CPython's bigint
# arithmetic do the work.
_KRONECKER_MIN = 12


def _slot_bits(bound: int) -> int:
    """Slot width in bits (a multiple of 8) holding signed values below ``bound``."""
    return (bound.bit_length() + 2 + 7) // 8 * 8


def _bias(k: int, n: int) -> int:
    # half a slot in each of n slots: half * (1 + 2^k + ... + 2^(k(n-1)))
    return (1 << (k - 1)) * (((1 << (k * n)) - 1) // ((1 << k) - 1))


def _pack(cs: Sequence[int], k: int) -> int:
    half, step = 1 << (k - 1), k // 8
    raw = b"".join((c + half).to_bytes(step, "little") for c in cs)
    return int.from_bytes(raw, "little") - _bias(k, len(cs))


def _unpack(v: int, k: int, n: int) -> list[int]:
    # shifting every digit up by half a slot makes them all nonnegative
    half, step = 1 << (k - 1), k // 8
    raw = (v + _bias(k, n)).to_bytes(n * step, "little")
    return [int.from_bytes(raw[i:i + step], "little") - half for i in range(0, len(raw), step)]


def _kron_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    k = _slot_bits(bound)
    n = len(a) + len(b) - 1
    return _unpack(_pack(a, k) * _pack(b, k), k, n)


def _kron_div(a: Sequence[int], b: Sequence[int]) -> list[int] | None:
    """Quotient of ``a`` by ``b`` if it divides exactly, else ``None``."""
    n = len(a) - len(b) + 1
    if n <= 0:
        return None
    # any exact factor has sup-norm at most 2^deg times the 2-norm of ``a``
    norm2 = sum(c * c for c in a)
    k = _slot_bits((1 << n) * (isqrt(norm2) + 1))
    va, vb = _pack(a, k), _pack(b, k)
    q, r = divmod(va, vb)
    if r:
        return None
    try:
        q = _unpack(q, k, n)
    except OverflowError:
        return None
    if _kron_mul(q, b) != list(a):
        return None
    return q


class Poly:
    """Integer polynomial in one variable, coefficients listed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if min(len(a), len(b)) >= _KRONECKER_MIN:
            return Poly(_kron_mul(a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "Poly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return Poly(c // g for c in self.coeffs)

    def exact_div(self, other: Union["Poly", int]) -> "Poly":
        """Quotient ``self / other``; raises ArithmeticError unless it is an
        integer polynomial."""
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            if any(c % other for c in self.coeffs):
                raise ArithmeticError(f"{self!r} is not divisible by {other}")
            return Poly(c // other for c in self.coeffs)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        if len(other.coeffs) >= _KRONECKER_MIN:
            q = _kron_div(self.coeffs, other.coeffs)
            if q is None:
                raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
            return Poly(q)
        rem = list(self.coeffs)
        db, lb = other.degree, other.lc
        b = other.coeffs
        q = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            if c % lb:
                raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
            c //= lb
            q[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
        if any(rem):
            raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
        return Poly(q)

    def pseudo_rem(self, other: "Poly") -> "Poly":
        """Remainder of ``lc(other)^(deg self - deg other + 1) * self`` by ``other``."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        b = other.coeffs
        delta = len(r) - 1 - db
        if delta < 0:
            return self
        for k in range(delta, -1, -1):
            c = r[k + db]
            r = [x * lb for x in r]
            for j in range(db + 1):
                r[k + j] -= c * b[j]
            r.pop()
        return Poly(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Gcd over the integers, normalised to positive leading coefficient."""
    if a.is_zero():
        return b.primitive() * b.content() if b.coeffs else b
    if b.is_zero():
        return a.primitive() * a.content()
    c = gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive() * c


class RationalFunction:
    """Reduced quotient of two integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, int, Sequence[int]],
                 den: Union[Poly, int, Sequence[int]] = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        self.num, self.den = num.exact_div(c), den.exact_div(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Poly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def pretty(self, var: str = "t") -> str:
        """Human-readable form; shown with positive constant term in the
        denominator when it is nonzero, which is how series are read."""
        if self.den == 1:
            return self.num.pretty(var)
        num, den = self.num, self.den
        if den[0] < 0:
            num, den = -num, -den
        return f"({num.pretty(var)}) / ({den.pretty(var)})"

    __str__ = pretty

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(1) / self ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(1) / self

    def expand(self, order: int) -> "Series":
        return series_expand(self, order)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(Poly(int(c) for c in data["num"]), Poly(int(c) for c in data["den"]))


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.const(x)
    return Poly(x)


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Poly)):
        return RationalFunction(x)
    return NotImplemented


def rf_normalize(n: Poly, d: Poly) -> RationalFunction:
    return RationalFunction(n, d)


def poly_substitute_mobius(p: Poly, a: int, b: int, c: int) -> RationalFunction:
    """``p(a t / (b + c t))`` as a reduced rational function."""
    if b == 0:
        raise ValueError("pole at origin: the Mobius argument needs b != 0")
    if p.is_zero():
        raise ValueError("cannot substitute into the zero polynomial")
    n = p.degree
    lin = Poly((b, c))
    powers = [Poly.const(1)]
    for _ in range(n):
        powers.append(powers[-1] * lin)
    num = Poly()
    for k, coeff in enumerate(p.coeffs):
        if coeff:
            num = num + Poly([0] * k + [coeff * a ** k]) * powers[n - k]
    return RationalFunction(num, powers[n])


@dataclass(frozen=True)
class Series:
    """Power series known through ``t^order`` (coefficients ``a_0..a_order``)."""

    order: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        cs = (cs + [0] * (order + 1))[:order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __getitem__(self, k: int) -> int:
        if k > self.order:
            raise IndexError(f"coefficient {k} is beyond order {self.order}")
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series(self.coeffs, order)

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series((self.coeffs[k] - other.coeffs[k] for k in range(n + 1)), n)

    def __mul__(self, other) -> "Series":
        if isinstance(other, int):
            return Series((c * other for c in self.coeffs), self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return Series(out, n)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Series":
        return cls((int(c) for c in data["coeffs"]), int(data["order"]))


def series_expand(f: Union[RationalFunction, Poly], order: int) -> Series:
    """Maclaurin coefficients of ``f`` through ``t^order`` by long division."""
    if isinstance(f, Poly):
        f = RationalFunction(f)
    d0 = f.den[0]
    if d0 == 0:
        raise ValueError("not expandable at origin: denominator vanishes at t=0")
    den = f.den.coeffs
    out: list[int] = []
    for n in range(order + 1):
        acc = f.num[n] - sum(den[k] * out[n - k] for k in range(1, min(n, len(den) - 1) + 1))
        if acc % d0:
            raise ArithmeticError(f"coefficient of t^{n} is not an integer")
        out.append(acc // d0)
    return Series(out, order)


def series_compose(outer: Union[Series, RationalFunction],
                   inner: Union[Series, RationalFunction], order: int) -> Series:
    """Truncated ``outer(inner(t))`` through ``t^order``; ``inner(0)`` must be 0."""
    if not isinstance(inner, Series):
        inner = series_expand(inner, order)
    if inner.order < order:
        raise ValueError("inner series is known to a lower order than requested")
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    if not isinstance(outer, Series):
        outer = series_expand(outer, order)
    if outer.order < order:
        raise ValueError("outer series is known to a lower order than requested")
    inner = inner.truncate(order)
    acc = Series([outer[order]], order)
    for k in range(order - 1, -1, -1):
        acc = acc * inner
        acc = Series((acc.coeffs[0] + outer[k],) + acc.coeffs[1:], order)
    return acc
