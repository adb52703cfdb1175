"""Exact arithmetic in the localization Z[1/n].

Elements are stored as reduced fractions ``num/den`` with ``den > 0`` and
every prime of ``den`` dividing ``n``.  The ``(k, p)`` view ``k / n**p`` is a
derived representation (it is not unique for composite ``n``: 1/3 == 2/6).

Z[1/n] is a Euclidean domain whose units are the numbers
``+-prod(p_i**a_i)`` (``a_i`` in Z) over the primes ``p_i`` of ``|n|``.  Every
nonzero element factors uniquely as ``unit * m`` with ``m`` a positive integer
coprime to ``n``; ``m`` is used as the canonical representative of the
principal ideal generated by the element.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import (
    ContextMismatch,
    ExponentOverflow,
    NotInRing,
    ParseError,
    UnsupportedModulus,
    ZeroArgument,
)

__all__ = [
    "MAX_EXPONENT",
    "NContext",
    "LocalNumber",
    "PowerForm",
    "BezoutData",
    "make_context",
    "add",
    "sub",
    "neg",
    "mul",
    "to_power_form",
    "from_power_form",
    "is_unit",
    "unit_decompose",
    "gcd",
    "bezout",
    "divides",
    "factorize",
    "xgcd",
    "check_exponent",
    "exact_log",
]

# Upper bound on |e| for every power n**e and every t-exponent.
MAX_EXPONENT = 1 << 16


def check_exponent(e: int) -> int:
    if not -MAX_EXPONENT <= e <= MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {e} exceeds the supported range +-{MAX_EXPONENT}")
    return e


def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``|m|`` by trial division, as sorted ``(p, e)`` pairs."""
    m = abs(m)
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class NContext:
    """The integer ``n`` (``|n| >= 2``) together with the factorization of ``|n|``."""

    n: int
    primes: tuple[tuple[int, int], ...]

    @property
    def prime_list(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.primes)

    @property
    def zero(self) -> LocalNumber:
        return LocalNumber._raw(0, 1, self)

    @property
    def one(self) -> LocalNumber:
        return LocalNumber._raw(1, 1, self)

    def split_integer(self, m: int) -> tuple[int, int]:
        """Split a nonzero integer as ``smooth * free`` where ``smooth`` has
        only primes of ``n`` (and carries the sign) and ``free > 0`` is coprime to n."""
        if m == 0:
            raise ZeroArgument("cannot split 0")
        smooth = -1 if m < 0 else 1
        m = abs(m)
        for p in self.prime_list:
            while m % p == 0:
                m //= p
                smooth *= p
        return smooth, m

    def is_smooth(self, m: int) -> bool:
        """True iff ``m != 0`` and every prime of ``m`` divides ``n``."""
        return m != 0 and self.split_integer(m)[1] == 1

    def number(self, num: int, den: int = 1) -> LocalNumber:
        """Build ``num/den``; raises ``NotInRing`` unless the reduced denominator is n-smooth."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = math.gcd(num, den)
        num, den = num // g, den // g
        if den < 0:
            num, den = -num, -den
        if not self.is_smooth(den):
            raise NotInRing(f"{num}/{den} is not an element of Z[1/{self.n}]")
        return LocalNumber._raw(num, den, self)

    def from_fraction(self, value: Union[Fraction, int]) -> LocalNumber:
        value = Fraction(value)
        return self.number(value.numerator, value.denominator)

    def coerce(self, value: Union[LocalNumber, int, Fraction]) -> LocalNumber:
        if isinstance(value, LocalNumber):
            if value.ctx.n != self.n:
                raise ContextMismatch(f"value lives in Z[1/{value.ctx.n}], expected Z[1/{self.n}]")
            return value
        if isinstance(value, int):
            return LocalNumber._raw(value, 1, self)
        return self.from_fraction(value)

    def power(self, e: int) -> LocalNumber:
        """``n**e`` for any integer ``e`` (negative powers are units)."""
        check_exponent(e)
        if e >= 0:
            return LocalNumber._raw(self.n ** e, 1, self)
        q = self.n ** (-e)
        return LocalNumber._raw(1 if q > 0 else -1, abs(q), self)

    def geometric(self, c: int) -> LocalNumber:
        """``(n**c - 1) / (n - 1)`` computed exactly, for any sign of ``c``."""
        check_exponent(c)
        if c >= 0:
            return LocalNumber._raw((self.n ** c - 1) // (self.n - 1), 1, self)
        head = (self.n ** (-c) - 1) // (self.n - 1)
        return from_power_form(-head, -c, self)

    def parse(self, text: str) -> LocalNumber:
        """Parse ``k`` or ``k/d``."""
        m = _NUMBER_RE.fullmatch(text)
        if m is None:
            raise ParseError("malformed number", 0, "integer or integer/integer", text)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError("zero denominator", m.start(2), "nonzero integer", text)
        return self.number(num, den)


_NUMBER_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?")


@functools.lru_cache(maxsize=None)
def make_context(n: int) -> NContext:
    if n in (-1, 0, 1):
        raise UnsupportedModulus(f"BS({n},1) is not supported; need |n| >= 2")
    return NContext(n, factorize(n))


Coercible = Union["LocalNumber", int, Fraction]


class LocalNumber:
    """An element of Z[1/n] in lowest terms; immutable."""

    __slots__ = ("num", "den", "ctx")

    num: int
    den: int
    ctx: NContext

    def __init__(self, num: int, den: int, ctx: NContext):
        other = ctx.number(num, den)
        object.__setattr__(self, "num", other.num)
        object.__setattr__(self, "den", other.den)
        object.__setattr__(self, "ctx", ctx)

    @classmethod
    def _raw(cls, num: int, den: int, ctx: NContext) -> LocalNumber:
        # caller guarantees den > 0 and den n-smooth; only reduces
        g = math.gcd(num, den)
        if g != 1:
            num, den = num // g, den // g
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "ctx", ctx)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("LocalNumber is immutable")

    def __reduce__(self):
        return (LocalNumber, (self.num, self.den, self.ctx))

    # -- conversions --------------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def is_integer(self) -> bool:
        return self.den == 1

    def __bool__(self) -> bool:
        return self.num != 0

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"LocalNumber({self}, n={self.ctx.n})"

    def __eq__(self, other) -> bool:
        if isinstance(other, LocalNumber):
            return self.num == other.num and self.den == other.den and self.ctx.n == other.ctx.n
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        if isinstance(other, Fraction):
            return self.num == other.numerator and self.den == other.denominator
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.num) if self.den == 1 else hash((self.num, self.den))

    # -- ring operations ----------------------------------------------------

    def _other(self, other) -> LocalNumber:
        if isinstance(other, LocalNumber):
            if other.ctx.n != self.ctx.n:
                raise ContextMismatch(f"Z[1/{self.ctx.n}] and Z[1/{other.ctx.n}] mixed")
            return other
        if isinstance(other, int):
            return LocalNumber._raw(other, 1, self.ctx)
        if isinstance(other, Fraction):
            return self.ctx.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return LocalNumber._raw(self.num + o.num, self.den, self.ctx)
        return LocalNumber._raw(self.num * o.den + o.num * self.den, self.den * o.den, self.ctx)

    __radd__ = __add__

    def __neg__(self) -> LocalNumber:
        return LocalNumber._raw(-self.num, self.den, self.ctx)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return LocalNumber._raw(self.num * o.num, self.den * o.den, self.ctx)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Exact quotient; raises ``NotInRing`` when it leaves Z[1/n]."""
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o.num == 0:
            raise ZeroDivisionError("division by zero in Z[1/n]")
        return self.ctx.number(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, e: int) -> LocalNumber:
        if e >= 0:
            return LocalNumber._raw(self.num ** e, self.den ** e, self.ctx)
        return self.ctx.one / LocalNumber._raw(self.num ** (-e), self.den ** (-e), self.ctx)


class PowerForm(NamedTuple):
    """``k / n**p`` with ``p`` minimal."""

    k: int
    p: int


class BezoutData(NamedTuple):
    d: LocalNumber
    sigma: LocalNumber
    tau: LocalNumber


def add(a: LocalNumber, b: LocalNumber) -> LocalNumber:
    return a + b


def sub(a: LocalNumber, b: LocalNumber) -> LocalNumber:
    return a - b


def neg(a: LocalNumber) -> LocalNumber:
    return -a


def mul(a: LocalNumber, b: LocalNumber) -> LocalNumber:
    return a * b


def to_power_form(a: LocalNumber) -> PowerForm:
    n_abs = abs(a.ctx.n)
    p, q = 0, 1
    while q % a.den:
        q *= n_abs
        p += 1
    check_exponent(p)
    return PowerForm(a.num * a.ctx.n ** p // a.den, p)


def from_power_form(k: int, p: int, ctx: NContext) -> LocalNumber:
    if p < 0:
        raise ValueError("power-form exponent must be nonnegative")
    return ctx.power(-p) * k


def is_unit(a: LocalNumber) -> bool:
    return a.num != 0 and a.ctx.is_smooth(a.num)


def unit_decompose(a: LocalNumber) -> tuple[LocalNumber, int]:
    """Write ``a == u * m`` with ``u`` a unit and ``m > 0`` coprime to n."""
    if a.num == 0:
        raise ZeroArgument("0 has no unit decomposition")
    smooth, m = a.ctx.split_integer(a.num)
    return LocalNumber._raw(smooth, a.den, a.ctx), m


def gcd(a: LocalNumber, b: LocalNumber) -> LocalNumber:
    """Canonical gcd: the positive n-free integer generating the ideal (a, b)."""
    ctx = a.ctx
    b = a._other(b)
    ma = unit_decompose(a)[1] if a else 0
    mb = unit_decompose(b)[1] if b else 0
    return LocalNumber._raw(math.gcd(ma, mb), 1, ctx)


def bezout(a: LocalNumber, b: LocalNumber) -> BezoutData:
    """Coefficients with ``sigma*a + tau*b == gcd(a, b)``."""
    ctx = a.ctx
    b = a._other(b)
    zero = ctx.zero
    if not a and not b:
        return BezoutData(zero, zero, zero)
    if not b:
        ua, ma = unit_decompose(a)
        return BezoutData(LocalNumber._raw(ma, 1, ctx), ctx.one / ua, zero)
    if not a:
        ub, mb = unit_decompose(b)
        return BezoutData(LocalNumber._raw(mb, 1, ctx), zero, ctx.one / ub)
    ua, ma = unit_decompose(a)
    ub, mb = unit_decompose(b)
    d, s, t = xgcd(ma, mb)
    return BezoutData(LocalNumber._raw(d, 1, ctx), s / ua, t / ub)


def divides(a: LocalNumber, b: LocalNumber) -> bool:
    """True iff ``b == a*c`` for some ``c`` in Z[1/n]."""
    b = a._other(b)
    if not a:
        return not b
    if not b:
        return True
    return unit_decompose(b)[1] % unit_decompose(a)[1] == 0


def exact_log(value: Union[LocalNumber, Fraction, int], n: int) -> Union[int, None]:
    """The integer ``r`` with ``value == n**r`` (signs respected), or None."""
    fr = value.as_fraction() if isinstance(value, LocalNumber) else Fraction(value)
    if fr.denominator == 1:
        m, sign = fr.numerator, 1
    elif fr.numerator in (1, -1):
        m, sign = fr.denominator * fr.numerator, -1
    else:
        return None
    r = 0
    while abs(m) > 1 and m % n == 0:
        m //= n
        r += 1
    return sign * r if m == 1 else None
