"""Decision procedures on BS(n,1), each returning a :class:`Decision`.

* word problem     -- :func:`word_problem`
* conjugacy        -- :func:`conjugacy`, ``v = g u g^-1``
* twisted conjugacy-- :func:`twisted_conjugacy`, ``v = (g phi)^-1 u g``
* orbits of Aut    -- :func:`orbit`, ``u phi = v``

Yes answers carry a witness that is re-checked by direct computation before
it is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .automorphisms import Automorphism, apply, compose, identity_aut, inner_of, invert, make_aut
from .errors import ContextMismatch, WitnessSearchCapExceeded
from .group import BsElement, conjugate, gen_t, identity, inverse, multiply
from .ring import (
    LocalNumber,
    NContext,
    bezout,
    divides,
    exact_log,
    from_power_form,
    gcd,
    is_unit,
    to_power_form,
    unit_decompose,
)
from .words import Word, is_trivial

__all__ = [
    "DEFAULT_WITNESS_CAP",
    "Decision",
    "ConjugacyWitness",
    "TwistedWitness",
    "OrbitWitness",
    "TwistedEquationData",
    "ExponentialSolution",
    "TwistedReduction",
    "ResiduePowers",
    "OrbitDerivation",
    "word_problem",
    "conjugacy",
    "reduce_twisted",
    "twisted_equation_data",
    "solve_exponential",
    "twisted_conjugacy",
    "coset_contains_unit",
    "orbit",
]

DEFAULT_WITNESS_CAP = 10_000


@dataclass(frozen=True)
class Decision:
    """``answer`` is always exact; ``witness_omitted`` flags a yes whose
    certificate search hit its cap."""

    answer: bool
    witness: object = None
    witness_omitted: bool = False
    trace: object = None

    def __bool__(self) -> bool:
        return self.answer


@dataclass(frozen=True)
class ConjugacyWitness:
    g: BsElement
    r_prime: int


@dataclass(frozen=True)
class TwistedWitness:
    g: BsElement


@dataclass(frozen=True)
class OrbitWitness:
    f: Automorphism


@dataclass(frozen=True)
class TwistedEquationData:
    A: int
    B: int
    C: int
    C_prime: int
    s: int


@dataclass(frozen=True)
class ExponentialSolution:
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class OrbitDerivation:
    mu: LocalNumber
    nu1_red: LocalNumber
    nu2_red: LocalNumber
    mu_red: LocalNumber
    alpha0: LocalNumber
    beta0: LocalNumber
    lam: Optional[LocalNumber] = None


class ResiduePowers:
    """The residues ``base**i mod modulus`` for ``i >= 0``.

    ``attain`` maps each residue to the least exponent reaching it and keeps
    insertion order by exponent.  The powers are generated until the first
    repetition, so the sequence (preperiod plus one period) is complete.
    """

    __slots__ = ("base", "modulus", "attain")

    def __init__(self, base: int, modulus: int):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.base = base
        self.modulus = modulus
        attain: dict[int, int] = {}
        x, i = 1 % modulus, 0
        while x not in attain:
            attain[x] = i
            x = x * base % modulus
            i += 1
        self.attain = attain

    def __contains__(self, residue: int) -> bool:
        return residue % self.modulus in self.attain

    def __len__(self) -> int:
        return len(self.attain)

    def scaled(self, factor: int) -> dict[int, int]:
        """``factor * N`` as residue -> least exponent."""
        out: dict[int, int] = {}
        for res, i in self.attain.items():
            out.setdefault(factor * res % self.modulus, i)
        return out


def _same(*elements) -> NContext:
    ctx = elements[0].ctx
    for e in elements[1:]:
        if e.ctx.n != ctx.n:
            raise ContextMismatch("inputs belong to different groups BS(n,1)")
    return ctx


def _require(cond: bool, what: str) -> None:
    # post-condition on a witness; failing it is a bug, never a user error
    if not cond:
        raise AssertionError(f"witness verification failed: {what}")


# -- word problem -------------------------------------------------------------


def word_problem(w: Word, ctx: NContext) -> Decision:
    return Decision(is_trivial(w, ctx))


# -- conjugacy ----------------------------------------------------------------


def conjugacy(u: BsElement, v: BsElement) -> Decision:
    """Decide whether ``v = g u g^-1`` for some ``g``."""
    ctx = _same(u, v)
    if u.c != v.c:
        return Decision(False)
    if u.c < 0:
        # g u^-1 g^-1 = v^-1  iff  g u g^-1 = v
        d = conjugacy(inverse(u), inverse(v))
        if d.answer:
            _require(conjugate(u, d.witness.g) == v, "conjugacy after inversion")
        return d
    c = u.c
    n = ctx.n
    if c == 0:
        if not u.nu or not v.nu:
            if u.nu or v.nu:
                return Decision(False)
            return Decision(True, ConjugacyWitness(identity(ctx), 0))
        r = exact_log(v.nu.as_fraction() / u.nu.as_fraction(), n)
        if r is None:
            return Decision(False)
        g = gen_t(ctx, r)
        _require(conjugate(u, g) == v, "c = 0 conjugator")
        return Decision(True, ConjugacyWitness(g, r))

    k1, p1 = to_power_form(u.nu)
    k2, p2 = to_power_form(v.nu)
    modulus = n ** c - 1
    m = abs(modulus)
    r_prime = None
    x = k1 % m
    for i in range(c):
        if (k2 - x) % m == 0:
            r_prime = i
            break
        x = x * n % m
    if r_prime is None:
        return Decision(False)
    # conjugator a^(l / n^(p1+p2)) t^r with r = r' + p1 - p2 (mod c), p2 + r >= 0
    r = (r_prime + p1) % c - p2
    num = k1 * n ** (p2 + r) - k2 * n ** p1
    ell, rem = divmod(num, modulus)
    _require(rem == 0, "divisibility by n^c - 1")
    g = BsElement(from_power_form(ell, p1 + p2, ctx), r)
    _require(conjugate(u, g) == v, "residue conjugator")
    return Decision(True, ConjugacyWitness(g, r_prime))


# -- twisted conjugacy --------------------------------------------------------


@dataclass(frozen=True)
class TwistedReduction:
    """A twisted-conjugacy instance moved to ``u = a^m1``, ``v = t^-r2 a^m2 t^r2``.

    Right-multiplying by ``w = t^-c`` replaces ``phi`` by ``inner_of(w)`` then
    ``phi``; transporting by ``psi = inner_of(t^r1)`` replaces it further by
    ``psi^-1 phi psi``.  ``unreduce`` maps a twisted conjugator of the
    reduced instance back to one of the original instance.
    """

    m1: int
    m2: int
    r2: int
    f_red: Automorphism
    shift: int
    r1: int
    u: BsElement
    v: BsElement
    f: Automorphism

    def instance(self) -> tuple[BsElement, BsElement, Automorphism]:
        ctx = self.f.ctx
        u = BsElement(ctx.coerce(self.m1), 0)
        v = BsElement(from_power_form(self.m2, self.r2, ctx), 0)
        return u, v, self.f_red

    def unreduce(self, g: BsElement) -> BsElement:
        ctx = self.f.ctx
        w = gen_t(ctx, -self.shift)
        psi = inner_of(gen_t(ctx, self.r1))
        f1 = compose(inner_of(w), self.f)
        u1, v1 = multiply(self.u, w), multiply(self.v, w)
        g1 = apply(invert(psi), g)
        _require(_is_twisted_conjugator(u1, v1, f1, g1), "undo transport by psi")
        g0 = multiply(multiply(w, g1), inverse(w))
        _require(_is_twisted_conjugator(self.u, self.v, self.f, g0), "undo right shift by w")
        return g0


def _is_twisted_conjugator(u, v, f, g) -> bool:
    return multiply(multiply(inverse(apply(f, g)), u), g) == v


def reduce_twisted(u: BsElement, v: BsElement, f: Automorphism) -> Optional[TwistedReduction]:
    """Reduce to zero t-exponent and integral ``u``; None when ``c(u) != c(v)``."""
    ctx = _same(u, v, f)
    if u.c != v.c:
        return None
    c = u.c
    w = gen_t(ctx, -c)
    u1, v1 = multiply(u, w), multiply(v, w)
    f1 = compose(inner_of(w), f)
    m1, r1 = to_power_form(u1.nu)
    psi = inner_of(gen_t(ctx, r1))
    u2, v2 = apply(psi, u1), apply(psi, v1)
    f2 = compose(compose(invert(psi), f1), psi)
    _require(u2.nu == m1 and u2.c == 0 and v2.c == 0, "reduced shape")
    m2, r2 = to_power_form(v2.nu)
    return TwistedReduction(m1, m2, r2, f2, c, r1, u, v, f)


def _split_n(C: int, n: int) -> tuple[int, int]:
    """``C = n**s * C'`` with ``n`` not dividing ``C'``; ``(0, 0)`` for ``C = 0``."""
    if C == 0:
        return 0, 0
    s = 0
    while C % n == 0:
        C //= n
        s += 1
    return C, s


def twisted_equation_data(m1: int, m2: int, r2: int, f_red: Automorphism) -> TwistedEquationData:
    """The integers A, B, C of ``A n^x + B y = C n^z``."""
    n = f_red.ctx.n
    k, p = to_power_form(f_red.alpha)
    ell, q = to_power_form(f_red.beta)
    A = ell * n ** (r2 + p) + (n - 1) * m1 * n ** (r2 + p + q)
    B = (n - 1) * (n ** p - k) * n ** (r2 + q)
    C = (n - 1) * m2 * n ** (p + q) + ell * n ** (r2 + p)
    C_prime, s = _split_n(C, n)
    return TwistedEquationData(A, B, C, C_prime, s)


def _satisfies(d: TwistedEquationData, n: int, x: int, y: int, z: int) -> bool:
    return d.A * n ** x + d.B * y == d.C * Fraction(n) ** z


def solve_exponential(d: TwistedEquationData, ctx: NContext) -> Decision:
    """Decide ``A n^x + B y = C n^z`` over integers with ``x >= 0``.

    Solved in the shifted form ``A n^x + B y = C' n^z'`` with ``z' = z + s >= 0``.
    """
    n = ctx.n
    A, B, Cp = d.A, d.B, d.C_prime
    if abs(B) == 1:
        x, zp = 0, 0
        y = (Cp - A) * B
    elif B == 0:
        y = 0
        if A == 0 and Cp == 0:
            x, zp = 0, 0
        elif A == 0 or Cp == 0:
            return Decision(False, trace=d)
        else:
            e = exact_log(Fraction(A, Cp), n)
            if e is None:
                return Decision(False, trace=d)
            x, zp = (0, e) if e >= 0 else (-e, 0)
    else:
        m = abs(B)
        powers = ResiduePowers(n, m)
        targets = powers.scaled(Cp)
        for res, i in powers.attain.items():
            j = targets.get(A * res % m)
            if j is not None:
                x, zp = i, j
                break
        else:
            return Decision(False, trace=d)
        y, rem = divmod(Cp * n ** zp - A * n ** x, B)
        _require(rem == 0, "residue match gives integral y")
    sol = ExponentialSolution(x, y, zp - d.s)
    _require(_satisfies(d, n, sol.x, sol.y, sol.z), "exponential equation")
    return Decision(True, sol, trace=d)


def twisted_conjugacy(u: BsElement, v: BsElement, f: Automorphism) -> Decision:
    """Decide whether ``v = (g f)^-1 u g`` for some ``g``."""
    ctx = _same(u, v, f)
    red = reduce_twisted(u, v, f)
    if red is None:
        return Decision(False)
    data = twisted_equation_data(red.m1, red.m2, red.r2, red.f_red)
    sol = solve_exponential(data, ctx)
    if not sol.answer:
        return Decision(False, trace=data)
    x, y, z = sol.witness.x, sol.witness.y, sol.witness.z
    g_red = BsElement(from_power_form(y, x, ctx), z - x)
    ur, vr, fr = red.instance()
    _require(_is_twisted_conjugator(ur, vr, fr, g_red), "reduced twisted conjugator")
    g = red.unreduce(g_red)
    return Decision(True, TwistedWitness(g), trace=data)


# -- orbit decidability -------------------------------------------------------


def _height_vectors(m: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of length m, by increasing sum."""
    if m == 0:
        yield ()
        return
    for h in itertools.count():
        for cut in itertools.combinations(range(h + m - 1), m - 1):
            bounds = (-1,) + cut + (h + m - 1,)
            yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(m))


def _unit_residue_group(ctx: NContext, modulus: int) -> set[int]:
    """``P`` union ``-P`` where ``P`` is the product set of the powers of each prime of n."""
    prod = {1 % modulus}
    for p in ctx.prime_list:
        powers = ResiduePowers(p, modulus).attain
        prod = {x * y % modulus for x in prod for y in powers}
    return prod | {-x % modulus for x in prod}


def coset_contains_unit(
    alpha: LocalNumber,
    delta: Union[LocalNumber, int],
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> Decision:
    """Decide whether ``alpha + delta * Z[1/n]`` contains a unit.

    On yes the witness is a ``lam`` with ``alpha + delta*lam`` a unit, found by
    trying units ``+-prod p_i^a_i`` in order of increasing ``sum a_i`` until
    one lands in the right residue class; at most ``witness_cap`` candidates.
    """
    ctx = alpha.ctx
    delta = ctx.coerce(delta)
    if not delta:
        ok = is_unit(alpha)
        return Decision(ok, ctx.zero if ok else None)
    d_unit, dd = unit_decompose(delta)
    if dd == 1:
        lam = (ctx.one - alpha) / delta
        return Decision(True, lam)

    n = ctx.n
    k, r = to_power_form(alpha)
    units = _unit_residue_group(ctx, dd)
    k_powers = ResiduePowers(n, dd).scaled(k)
    above = any(res in units for res in k_powers)  # exponents z >= r
    below = k % dd in units  # exponents z <= r
    if not (above or below):
        return Decision(False)

    primes = ctx.prime_list
    tried = 0
    try:
        for exps in _height_vectors(len(primes)):
            base = 1
            for p, a in zip(primes, exps):
                base *= p ** a
            for U in (base, -base):
                tried += 1
                if tried > witness_cap:
                    raise WitnessSearchCapExceeded(f"no unit found among {witness_cap} candidates")
                zp = k_powers.get(U % dd)
                if zp is None:
                    continue
                x, rem = divmod(U - k * n ** zp, dd)
                _require(rem == 0, "coset residue match")
                lam = from_power_form(x, zp + r, ctx) / d_unit
                _require(is_unit(alpha + delta * lam), "coset unit")
                return Decision(True, lam)
    except WitnessSearchCapExceeded:
        return Decision(True, None, witness_omitted=True)
    raise AssertionError("unreachable")


def orbit(u: BsElement, v: BsElement, witness_cap: int = DEFAULT_WITNESS_CAP) -> Decision:
    """Decide whether ``u phi = v`` for some automorphism ``phi``."""
    ctx = _same(u, v)
    if u.c != v.c:
        return Decision(False)
    mu = ctx.geometric(u.c)
    nu1, nu2 = u.nu, v.nu
    if not nu1 and not mu:
        if nu2:
            return Decision(False)
        return Decision(True, OrbitWitness(identity_aut(ctx)))
    g = gcd(nu1, mu)
    if not divides(g, nu2):
        return Decision(False)
    nu1r, mur, nu2r = nu1 / g, mu / g, nu2 / g
    bz = bezout(nu1r, mur)
    _require(bz.d == 1, "reduced Bezout gcd")
    alpha0, beta0 = bz.sigma * nu2r, bz.tau * nu2r
    coset = coset_contains_unit(alpha0, mur, witness_cap)
    trace = OrbitDerivation(mu, nu1r, nu2r, mur, alpha0, beta0)
    if not coset.answer:
        return Decision(False, trace=trace)
    if coset.witness_omitted:
        return Decision(True, None, witness_omitted=True, trace=trace)
    lam = coset.witness
    f = make_aut(ctx, alpha0 + lam * mur, beta0 - lam * nu1r)
    _require(apply(f, u) == v, "orbit automorphism")
    trace = OrbitDerivation(mu, nu1r, nu2r, mur, alpha0, beta0, lam)
    return Decision(True, OrbitWitness(f), trace=trace)
