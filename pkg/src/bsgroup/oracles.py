"""Slow reference implementations used by the tests and by ``--check``.

Nothing in here calls :mod:`bsgroup.decision`.  Searches enumerate a bounded
box in a fixed order (``|numerator|``, then n-exponent, then sign, then
t-exponent by absolute value) so that failures reproduce.  Witness checks go
through the 2x2 matrix representation rather than the normal-form product.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterator, Optional, Union

from .automorphisms import Automorphism, make_aut
from .group import BsElement, RationalMatrix2, from_matrix, matrix_rep
from .ring import LocalNumber, NContext, factorize, to_power_form

__all__ = [
    "SearchBounds",
    "box_numbers",
    "box_elements",
    "box_units",
    "brute_conjugator",
    "brute_conjugacy_class",
    "brute_twisted_conjugator",
    "brute_orbit_aut",
    "brute_coset_unit",
    "random_number",
    "random_element",
    "random_unit",
    "random_aut",
    "modular_unit_residues",
    "coset_unit_oracle",
    "matrix_multiply",
    "matrix_apply",
    "power_by_repetition",
    "verify_conjugator",
    "verify_twisted_conjugator",
    "verify_orbit_aut",
    "conjugator_bounds",
]


@dataclass(frozen=True)
class SearchBounds:
    max_num: int
    max_exp: int

    def __post_init__(self):
        if self.max_num < 1 or self.max_exp < 1:
            raise ValueError("search bounds must be positive")


Rng = Union[random.Random, int, None]


def _rng(seed: Rng) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _t_order(max_exp: int) -> list[int]:
    out = [0]
    for r in range(1, max_exp + 1):
        out += [r, -r]
    return out


def box_numbers(ctx: NContext, bounds: SearchBounds) -> Iterator[LocalNumber]:
    """Distinct values ``k / n^p`` with ``|k| <= max_num``, ``0 <= p <= max_exp``."""
    seen = set()
    for absk in range(bounds.max_num + 1):
        for p in range(bounds.max_exp + 1):
            for k in ((absk, -absk) if absk else (0,)):
                x = ctx.from_fraction(Fraction(k, 1) / Fraction(ctx.n) ** p)
                if x not in seen:
                    seen.add(x)
                    yield x


def box_elements(ctx: NContext, bounds: SearchBounds) -> Iterator[BsElement]:
    ts = _t_order(bounds.max_exp)
    for nu in box_numbers(ctx, bounds):
        for r in ts:
            yield BsElement(nu, r)


def box_units(ctx: NContext, max_exp: int) -> Iterator[LocalNumber]:
    """Units ``+-prod p_i^a_i`` with ``|a_i| <= max_exp``, by increasing ``sum |a_i|``."""
    primes = ctx.prime_list
    vectors = [()]
    for _ in primes:
        vectors = [v + (a,) for v in vectors for a in range(-max_exp, max_exp + 1)]
    vectors.sort(key=lambda v: (sum(map(abs, v)), v))
    for v in vectors:
        value = Fraction(1)
        for p, a in zip(primes, v):
            value *= Fraction(p) ** a
        for sign in (1, -1):
            yield ctx.from_fraction(sign * value)


def _mat_conj(u: RationalMatrix2, g: RationalMatrix2) -> RationalMatrix2:
    return g @ u @ g.inv()


@lru_cache(maxsize=8)
def _box_matrices(ctx: NContext, bounds: SearchBounds) -> tuple:
    return tuple((g, matrix_rep(g), matrix_rep(g).inv()) for g in box_elements(ctx, bounds))


def brute_conjugacy_class(u: BsElement, bounds: SearchBounds) -> dict[BsElement, BsElement]:
    """Map each ``g u g^-1`` (g in the box) to the first such ``g``."""
    out: dict[BsElement, BsElement] = {}
    mu = matrix_rep(u)
    for g, mg, mg_inv in _box_matrices(u.ctx, bounds):
        out.setdefault(from_matrix(mg @ mu @ mg_inv, u.ctx), g)
    return out


def brute_conjugator(u: BsElement, v: BsElement, bounds: SearchBounds) -> Optional[BsElement]:
    mu, mv = matrix_rep(u), matrix_rep(v)
    for g in box_elements(u.ctx, bounds):
        if _mat_conj(mu, matrix_rep(g)) == mv:
            return g
    return None


def matrix_apply(f: Automorphism, g: BsElement) -> BsElement:
    """Image of ``g`` under ``f`` computed from generator images in matrices.

    ``g = t^-p a^k t^(p+c)`` is rewritten letter by letter with
    ``a -> A^alpha`` and ``t -> A^beta T``.
    """
    ctx = g.ctx
    k, p = to_power_form(g.nu)
    a_img = RationalMatrix2.of(1, f.alpha.as_fraction(), 0, 1)
    t_img = RationalMatrix2.of(1, f.beta.as_fraction(), 0, 1) @ RationalMatrix2.of(ctx.n, 0, 0, 1)
    m = (t_img ** (-p)) @ (a_img ** k) @ (t_img ** (p + g.c))
    return from_matrix(m, ctx)


def matrix_multiply(g: BsElement, h: BsElement) -> BsElement:
    return from_matrix(matrix_rep(g) @ matrix_rep(h), g.ctx)


def _twisted_ok(u, v, f, x) -> bool:
    img = matrix_rep(matrix_apply(f, x))
    return img.inv() @ matrix_rep(u) @ matrix_rep(x) == matrix_rep(v)


def brute_twisted_conjugator(
    u: BsElement, v: BsElement, f: Automorphism, bounds: SearchBounds
) -> Optional[BsElement]:
    for x in box_elements(u.ctx, bounds):
        if _twisted_ok(u, v, f, x):
            return x
    return None


def brute_orbit_aut(u: BsElement, v: BsElement, bounds: SearchBounds) -> Optional[Automorphism]:
    ctx = u.ctx
    betas = list(box_numbers(ctx, bounds))
    for alpha in box_units(ctx, bounds.max_exp):
        for beta in betas:
            f = make_aut(ctx, alpha, beta)
            if matrix_apply(f, u) == v:
                return f
    return None


def brute_coset_unit(alpha: LocalNumber, delta, bounds: SearchBounds) -> Optional[LocalNumber]:
    ctx = alpha.ctx
    delta = ctx.coerce(delta)
    for lam in box_numbers(ctx, bounds):
        value = alpha + delta * lam
        if value and _smooth(value.num, ctx):
            return lam
    return None


def _smooth(m: int, ctx: NContext) -> bool:
    # independent of ring.is_unit: factor |m| outright
    return all(ctx.n % p == 0 for p, _ in factorize(m))


# -- random sampling ----------------------------------------------------------


def random_number(ctx: NContext, bounds: SearchBounds, seed: Rng = None) -> LocalNumber:
    rng = _rng(seed)
    k = rng.randint(-bounds.max_num, bounds.max_num)
    p = rng.randint(0, bounds.max_exp)
    return ctx.from_fraction(Fraction(k) / Fraction(ctx.n) ** p)


def random_element(ctx: NContext, bounds: SearchBounds, seed: Rng = None) -> BsElement:
    rng = _rng(seed)
    nu = random_number(ctx, bounds, rng)
    return BsElement(nu, rng.randint(-bounds.max_exp, bounds.max_exp))


def random_unit(ctx: NContext, max_exp: int, seed: Rng = None) -> LocalNumber:
    rng = _rng(seed)
    value = Fraction(rng.choice((1, -1)))
    for p in ctx.prime_list:
        value *= Fraction(p) ** rng.randint(-max_exp, max_exp)
    return ctx.from_fraction(value)


def random_aut(
    ctx: NContext, bounds: SearchBounds, seed: Rng = None, unit_exp: Optional[int] = None
) -> Automorphism:
    """``phi(alpha; beta)`` with ``alpha = +-prod p_i^a_i``, ``|a_i| <= unit_exp``
    (default ``bounds.max_exp``)."""
    rng = _rng(seed)
    alpha = random_unit(ctx, bounds.max_exp if unit_exp is None else unit_exp, rng)
    return make_aut(ctx, alpha, random_number(ctx, bounds, rng))


# -- residues -----------------------------------------------------------------


def modular_unit_residues(delta: int, ctx: NContext) -> frozenset[int]:
    """Residues mod ``delta`` of the integral units ``+-prod p_i^a_i`` (``a_i >= 0``),
    by closing ``{+-1, +-p_i}`` under multiplication."""
    if delta < 1:
        raise ValueError("delta must be positive")
    gens = {g % delta for p in ctx.prime_list for g in (p, -p)} | {1 % delta, -1 % delta}
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % delta
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def coset_unit_oracle(alpha: LocalNumber, delta: int, ctx: NContext) -> bool:
    """Exhaustive modular test: does ``alpha + delta Z[1/n]`` contain a unit?

    With ``d`` the part of ``delta`` coprime to n, Z[1/n] / d Z[1/n] is Z/d and
    the units of Z[1/n] map onto :func:`modular_unit_residues`.
    """
    if delta == 0:
        return alpha.num != 0 and _smooth(alpha.num, ctx)
    d = abs(delta)
    for p in ctx.prime_list:
        while d % p == 0:
            d //= p
    if d == 1:
        return True
    value = alpha.num * pow(alpha.den, -1, d) % d
    return value in modular_unit_residues(d, ctx)


# -- verification -------------------------------------------------------------


def power_by_repetition(g: BsElement, r: int) -> BsElement:
    m = matrix_rep(g) if r >= 0 else matrix_rep(g).inv()
    out = RationalMatrix2.eye()
    for _ in range(abs(r)):
        out = out @ m
    return from_matrix(out, g.ctx)


def verify_conjugator(u: BsElement, v: BsElement, g: BsElement) -> bool:
    return _mat_conj(matrix_rep(u), matrix_rep(g)) == matrix_rep(v)


def verify_twisted_conjugator(u: BsElement, v: BsElement, f: Automorphism, g: BsElement) -> bool:
    return _twisted_ok(u, v, f, g)


def verify_orbit_aut(u: BsElement, v: BsElement, f: Automorphism) -> bool:
    return matrix_apply(f, u) == v


def conjugator_bounds(ctx: NContext, max_k: int, max_p: int, max_c: int) -> SearchBounds:
    """A box guaranteed to contain a conjugator for every conjugate pair
    ``a^(k1/n^p1) t^c``, ``a^(k2/n^p2) t^c`` with ``|k_i| <= max_k``,
    ``0 <= p_i <= max_p``, ``0 <= c <= max_c``.

    For ``c >= 1`` a conjugator ``a^(l / n^(p1+p2)) t^r`` exists with
    ``0 <= p2 + r <= c - 1`` and
    ``|l| <= (max_k |n|^(c-1) + max_k |n|^max_p) / |n^c - 1|``.
    For ``c = 0`` one may take ``t^r`` with ``|n|^|r| <= max_k |n|^max_p``.
    """
    N = abs(ctx.n)
    ell = 0
    for c in range(1, max_c + 1):
        ell = max(ell, (max_k * N ** (c - 1) + max_k * N ** max_p) // abs(ctx.n ** c - 1) + 1)
    r0 = 0
    while N ** (r0 + 1) <= max_k * N ** max_p:
        r0 += 1
    max_exp = max(2 * max_p, max_p + max_c - 1, max_c - 1, r0, 1)
    return SearchBounds(max(ell, max_k, 1), max_exp)
