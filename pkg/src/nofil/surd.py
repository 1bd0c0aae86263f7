"""Exact numbers of the form r + s*sqrt(d) with rational r, s and integer d >= 0.

Comparisons never touch floating point: signs of sums with up to two square
roots are decided by squaring with explicit sign analysis.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering

Number = int | Fraction


def _sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def sign_root(a: Fraction, b: Fraction, p: int) -> int:
    """sign(a + b*sqrt(p))."""
    if b == 0 or p == 0:
        return _sign(a)
    sb = _sign(b)
    if a == 0 or _sign(a) == sb:
        return sb
    diff = a * a - b * b * p
    if diff > 0:
        return _sign(a)
    if diff < 0:
        return sb
    return 0


def sign_two_roots(a: Fraction, b: Fraction, p: int, c: Fraction, q: int) -> int:
    """sign(a + b*sqrt(p) + c*sqrt(q))."""
    if p == q:
        return sign_root(a, b + c, p)
    sx = _sign_pair(b, p, c, q)
    sa = _sign(a)
    if sx == 0:
        return sa
    if sa == 0 or sa == sx:
        return sx
    # opposite signs: compare X^2 with a^2
    cmp = sign_root(b * b * p + c * c * q - a * a, 2 * b * c, p * q)
    if cmp > 0:
        return sx
    if cmp < 0:
        return sa
    return 0


def _sign_pair(b: Fraction, p: int, c: Fraction, q: int) -> int:
    """sign(b*sqrt(p) + c*sqrt(q))."""
    sb = _sign(b) if p else 0
    sc = _sign(c) if q else 0
    if sb == 0:
        return sc
    if sc == 0 or sb == sc:
        return sb
    diff = b * b * p - c * c * q
    return sb if diff > 0 else (sc if diff < 0 else 0)


@lru_cache(maxsize=4096)
def _squarefree_split(d: int) -> tuple[int, int]:
    """d = k*k*m with m as small as cheaply found; returns (k, m)."""
    if d == 0:
        return 0, 0
    root = math.isqrt(d)
    if root * root == d:
        return root, 1
    k, m = 1, d
    f = 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


@total_ordering
class Surd:
    __slots__ = ("r", "s", "d")

    def __init__(self, r: Number = 0, s: Number = 0, d: int = 0):
        if d < 0:
            raise ValueError(f"negative radicand {d}")
        r, s = Fraction(r), Fraction(s)
        k, m = _squarefree_split(d)
        s *= k
        if m == 1:
            r, s, m = r + s, Fraction(0), 0
        if s == 0:
            m = 0
        self.r, self.s, self.d = r, s, m

    @classmethod
    def sqrt(cls, d: Number) -> "Surd":
        d = Fraction(d)
        # sqrt(n/m) = sqrt(n*m)/m
        return cls(0, Fraction(1, d.denominator), d.numerator * d.denominator)

    def __add__(self, other):
        other = _coerce(other)
        if self.d and other.d and self.d != other.d:
            raise ValueError("cannot add surds with different radicands")
        d = self.d or other.d
        return Surd(self.r + other.r, self.s + other.s, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.r, -self.s, self.d)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, k: Number):
        if isinstance(k, Surd):
            if k.s and self.s:
                raise ValueError("product of two irrational surds not supported")
            if k.s:
                return k * self.r
            k = k.r
        k = Fraction(k)
        return Surd(self.r * k, self.s * k, self.d)

    __rmul__ = __mul__

    def __truediv__(self, k: Number):
        return self * (Fraction(1) / Fraction(k))

    def compare(self, other) -> int:
        other = _coerce(other)
        return sign_two_roots(self.r - other.r, self.s, self.d, -other.s, other.d)

    def __eq__(self, other):
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        return self.compare(other) < 0

    def __hash__(self):
        return hash(self.r) if self.s == 0 else hash((self.r, self.s, self.d))

    def __float__(self):
        return float(self.r) + float(self.s) * math.sqrt(self.d)

    def floor(self) -> int:
        k = math.floor(float(self))
        while self < k:
            k -= 1
        while self >= k + 1:
            k += 1
        return k

    def ceil(self) -> int:
        return -((-self).floor())

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def __repr__(self):
        return f"Surd({self})"

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        root = f"sqrt({self.d})" if self.s == 1 else f"{self.s}*sqrt({self.d})"
        if self.r == 0:
            return root
        sign = "+" if self.s > 0 else "-"
        mag = abs(self.s)
        root = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
        return f"{self.r} {sign} {root}"


def _coerce(x) -> Surd:
    return x if isinstance(x, Surd) else Surd(x)
