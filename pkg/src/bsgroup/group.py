"""BS(n,1) as the semidirect product Z[1/n] x| Z.

Every element is stored in its unique normal form ``a^nu t^c``.  The product
and inverse are

    (a^x t^c)(a^y t^d) = a^(x + n^c y) t^(c+d)
    (a^x t^c)^-1       = a^(-n^-c x) t^-c

and ``a -> [[1,1],[0,1]]``, ``t -> [[n,0],[0,1]]`` is a faithful 2x2 rational
representation, kept here as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ContextMismatch
from .ring import LocalNumber, NContext, check_exponent

__all__ = [
    "BsElement",
    "RationalMatrix2",
    "identity",
    "gen_a",
    "gen_t",
    "element",
    "multiply",
    "inverse",
    "power",
    "conjugate",
    "matrix_rep",
    "from_matrix",
]


@dataclass(frozen=True)
class BsElement:
    """The normal form ``a^nu t^c``."""

    nu: LocalNumber
    c: int

    @property
    def ctx(self) -> NContext:
        return self.nu.ctx

    def __mul__(self, other: BsElement) -> BsElement:
        if not isinstance(other, BsElement):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, r: int) -> BsElement:
        return power(self, r)

    def __invert__(self) -> BsElement:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.c == 0 and not self.nu

    def __str__(self) -> str:
        from .words import format_element

        return format_element(self)


def element(ctx: NContext, nu: Union[LocalNumber, int, Fraction] = 0, c: int = 0) -> BsElement:
    return BsElement(ctx.coerce(nu), check_exponent(c))


def identity(ctx: NContext) -> BsElement:
    return BsElement(ctx.zero, 0)


def gen_a(ctx: NContext, exponent: Union[LocalNumber, int, Fraction] = 1) -> BsElement:
    return BsElement(ctx.coerce(exponent), 0)


def gen_t(ctx: NContext, exponent: int = 1) -> BsElement:
    return BsElement(ctx.zero, check_exponent(exponent))


def _same(g: BsElement, h: BsElement) -> None:
    if g.nu.ctx.n != h.nu.ctx.n:
        raise ContextMismatch(f"BS({g.nu.ctx.n},1) and BS({h.nu.ctx.n},1) elements mixed")


def multiply(g: BsElement, h: BsElement) -> BsElement:
    _same(g, h)
    c = check_exponent(g.c + h.c)
    if not h.nu:
        return BsElement(g.nu, c)
    return BsElement(g.nu + g.ctx.power(g.c) * h.nu, c)


def inverse(g: BsElement) -> BsElement:
    return BsElement(-(g.ctx.power(-g.c) * g.nu), -g.c)


def power(g: BsElement, r: int) -> BsElement:
    """``g**r`` from the closed form ``a^(((n^(rc)-1)/(n^c-1)) nu) t^(rc)``."""
    ctx = g.ctx
    if r == 0:
        return identity(ctx)
    if g.c == 0:
        return BsElement(g.nu * r, 0)
    rc = check_exponent(r * g.c)
    n = Fraction(ctx.n)
    factor = ctx.from_fraction((n ** rc - 1) / (n ** g.c - 1))
    return BsElement(factor * g.nu, rc)


def conjugate(g: BsElement, h: BsElement) -> BsElement:
    """Left conjugation ``h g h^-1``.

    Right conjugation ``h^-1 g h`` is ``conjugate(g, inverse(h))``.
    """
    return multiply(multiply(h, g), inverse(h))


@dataclass(frozen=True)
class RationalMatrix2:
    """A 2x2 matrix ``[[a, b], [c, d]]`` of exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def of(cls, a, b, c, d) -> RationalMatrix2:
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @classmethod
    def eye(cls) -> RationalMatrix2:
        return cls.of(1, 0, 0, 1)

    def __matmul__(self, o: RationalMatrix2) -> RationalMatrix2:
        if not self.c and not o.c:
            # upper triangular, the common case for the image of BS(n,1)
            return RationalMatrix2(self.a * o.a, self.a * o.b + self.b * o.d, self.c, self.d * o.d)
        return RationalMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def inv(self) -> RationalMatrix2:
        det = self.det()
        return RationalMatrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __pow__(self, r: int) -> RationalMatrix2:
        base = self if r >= 0 else self.inv()
        r = abs(r)
        out = RationalMatrix2.eye()
        while r:
            if r & 1:
                out = out @ base
            base = base @ base
            r >>= 1
        return out

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))


def matrix_rep(g: BsElement) -> RationalMatrix2:
    """Image of ``g`` under ``a -> [[1,1],[0,1]]``, ``t -> [[n,0],[0,1]]``."""
    return RationalMatrix2(Fraction(g.ctx.n) ** g.c, g.nu.as_fraction(), Fraction(0), Fraction(1))


def from_matrix(m: RationalMatrix2, ctx: NContext) -> BsElement:
    """Inverse of ``matrix_rep`` on its image; ``ValueError`` off the image."""
    if m.c != 0 or m.d != 1:
        raise ValueError("matrix is not upper unitriangular-affine")
    top = m.a
    c = 0
    n = Fraction(ctx.n)
    if abs(top) >= 1:
        while abs(top) > 1:
            top /= n
            c += 1
    else:
        while abs(top) < 1:
            top *= n
            c -= 1
    if top != 1:
        raise ValueError(f"{m.a} is not a power of {ctx.n}")
    return BsElement(ctx.from_fraction(m.b), c)
