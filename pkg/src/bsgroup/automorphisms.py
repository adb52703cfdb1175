"""Aut(BS(n,1)) = { phi(alpha; beta) : alpha a unit of Z[1/n], beta in Z[1/n] }.

``phi(alpha; beta)`` sends ``a -> a^alpha`` and ``t -> a^beta t``, hence

    (a^nu t^c) phi = a^(nu*alpha + ((n^c - 1)/(n - 1)) * beta) t^c.

Automorphisms act on the right.  ``compose(f, g)`` is "f first, then g",
which corresponds to the matrix product ``M(f) @ M(g)`` of the lower
triangular matrices ``M(phi(alpha; beta)) = [[alpha, 0], [beta, 1]]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ContextMismatch, NotAUnit, ParseError
from .group import BsElement, RationalMatrix2
from .ring import LocalNumber, NContext, divides, exact_log, is_unit

__all__ = [
    "Automorphism",
    "make_aut",
    "identity_aut",
    "compose",
    "invert",
    "apply",
    "inner_of",
    "is_inner",
    "aut_matrix",
    "parse_aut",
    "format_aut",
]


@dataclass(frozen=True)
class Automorphism:
    alpha: LocalNumber
    beta: LocalNumber

    @property
    def ctx(self) -> NContext:
        return self.alpha.ctx

    def __call__(self, g: BsElement) -> BsElement:
        return apply(self, g)

    def __str__(self) -> str:
        return format_aut(self)


Value = Union[LocalNumber, int, Fraction]


def make_aut(ctx: NContext, alpha: Value, beta: Value = 0) -> Automorphism:
    alpha = ctx.coerce(alpha)
    if not is_unit(alpha):
        raise NotAUnit(f"alpha = {alpha} is not a unit of Z[1/{ctx.n}]")
    return Automorphism(alpha, ctx.coerce(beta))


def identity_aut(ctx: NContext) -> Automorphism:
    return Automorphism(ctx.one, ctx.zero)


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """The automorphism ``x -> (x f) g``."""
    if f.ctx.n != g.ctx.n:
        raise ContextMismatch("automorphisms of different groups")
    return Automorphism(f.alpha * g.alpha, f.beta * g.alpha + g.beta)


def invert(f: Automorphism) -> Automorphism:
    inv_alpha = f.ctx.one / f.alpha
    return Automorphism(inv_alpha, -(f.beta * inv_alpha))


def apply(f: Automorphism, g: BsElement) -> BsElement:
    if f.ctx.n != g.ctx.n:
        raise ContextMismatch("automorphism and element of different groups")
    nu = g.nu * f.alpha
    if g.c and f.beta:
        nu = nu + f.ctx.geometric(g.c) * f.beta
    return BsElement(nu, g.c)


def inner_of(g: BsElement) -> Automorphism:
    """The automorphism ``x -> g x g^-1``; for ``g = a^beta t^r`` it is ``phi(n^r; (1-n) beta)``."""
    ctx = g.ctx
    return Automorphism(ctx.power(g.c), g.nu * (1 - ctx.n))


def is_inner(f: Automorphism) -> bool:
    if exact_log(f.alpha, f.ctx.n) is None:
        return False
    return divides(f.ctx.coerce(f.ctx.n - 1), f.beta)


def aut_matrix(f: Automorphism) -> RationalMatrix2:
    return RationalMatrix2(f.alpha.as_fraction(), Fraction(0), f.beta.as_fraction(), Fraction(1))


_AUT_RE = re.compile(r"\s*phi\s*\(([^;()]*);([^;()]*)\)\s*")


def parse_aut(text: str, ctx: NContext) -> Automorphism:
    """Parse ``phi(alpha; beta)``."""
    m = _AUT_RE.fullmatch(text)
    if m is None:
        raise ParseError("malformed automorphism", 0, "phi(alpha; beta)", text)
    return make_aut(ctx, ctx.parse(m.group(1)), ctx.parse(m.group(2)))


def format_aut(f: Automorphism) -> str:
    return f"phi({f.alpha}; {f.beta})"

