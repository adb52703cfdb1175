"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` or directly as a script.
"""

import io
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from bsgroup import cli
from bsgroup.automorphisms import (
    aut_matrix,
    compose,
    identity_aut,
    inner_of,
    invert,
)
from bsgroup.decision import (
    conjugacy,
    coset_contains_unit,
    orbit,
    twisted_conjugacy,
    twisted_equation_data,
    reduce_twisted,
)
from bsgroup.group import (
    BsElement,
    RationalMatrix2,
    conjugate,
    element,
    from_matrix,
    gen_a,
    gen_t,
    identity,
    inverse,
    matrix_rep,
    multiply,
    power,
)
from bsgroup.oracles import (
    SearchBounds,
    brute_conjugacy_class,
    conjugator_bounds,
    coset_unit_oracle,
    matrix_apply,
    power_by_repetition,
    random_aut,
    random_element,
    random_number,
    verify_conjugator,
    verify_orbit_aut,
    verify_twisted_conjugator,
)
from bsgroup.ring import is_unit, make_context

MODULI = (2, 3, -2, 6, 10)
GOLDEN = Path(__file__).parent / "golden" / "cli_cases.json"


def check(cond, what):
    if not cond:
        raise AssertionError(what)


def within(start, limit):
    elapsed = time.perf_counter() - start
    check(elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s")
    return elapsed


# -- 1 ------------------------------------------------------------------------


def criterion_group_laws():
    start = time.perf_counter()
    b = SearchBounds(10 ** 6, 8)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(1000 + n)
        e = identity(ctx)
        for _ in range(10 ** 4):
            g, h, k = (random_element(ctx, b, rng) for _ in range(3))
            check(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)), "associativity")
            check(multiply(g, e) == g == multiply(e, g), "identity")
            gi = inverse(g)
            check(multiply(g, gi) == e == multiply(gi, g), "inverse")
            check(matrix_rep(multiply(g, h)) == matrix_rep(g) @ matrix_rep(h), "homomorphism")
            check(from_matrix(matrix_rep(g), ctx) == g, "injectivity")
            check((matrix_rep(g) == RationalMatrix2.eye()) == g.is_identity(), "kernel")
    return within(start, 30)


# -- 2 ------------------------------------------------------------------------


def criterion_calculation_rules():
    start = time.perf_counter()
    b = SearchBounds(10 ** 6, 8)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(2000 + n)
        for _ in range(10 ** 4):
            alpha, beta = random_number(ctx, b, rng), random_number(ctx, b, rng)
            c, r = rng.randint(-8, 8), rng.randint(-6, 6)
            A, B, T = gen_a(ctx, alpha), gen_a(ctx, beta), gen_t(ctx, c)
            check(T * A == gen_a(ctx, alpha * ctx.power(c)) * T, "(i)")
            check(A * T == T * gen_a(ctx, alpha / ctx.power(c)), "(i) equivalent form")
            check(A * B == gen_a(ctx, alpha + beta), "(ii)")
            check(power(A, r) == gen_a(ctx, alpha * r), "(iii)")
            check(gen_t(ctx, -c) * A * T == gen_a(ctx, alpha / ctx.power(c)), "(iv)")
            g = BsElement(alpha, c)
            if c:
                coeff = (Fraction(n) ** (r * c) - 1) / (Fraction(n) ** c - 1)
            else:
                coeff = Fraction(r)
            closed = BsElement(ctx.from_fraction(coeff) * alpha, r * c)
            check(power(g, r) == closed, "(v) closed form")
            check(closed == power_by_repetition(g, r), "(v) repeated multiplication")
    return within(start, 30)


# -- 3 ------------------------------------------------------------------------


def criterion_automorphisms():
    start = time.perf_counter()
    b = SearchBounds(10 ** 6, 8)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(3000 + n)
        ident = identity_aut(ctx)
        for _ in range(10 ** 3):
            f, g = random_aut(ctx, b, rng, unit_exp=4), random_aut(ctx, b, rng, unit_exp=4)
            x, y = random_element(ctx, b, rng), random_element(ctx, b, rng)
            fg = compose(f, g)
            check(fg.alpha == f.alpha * g.alpha and fg.beta == f.beta * g.alpha + g.beta, "composition law")
            check(fg(x) == g(f(x)), "composition is f then g")
            check(compose(f, invert(f)) == ident == compose(invert(f), f), "inverse law")
            check(f(x * y) == f(x) * f(y), "homomorphism")
            check(f(x) == matrix_apply(f, x), "action formula")
            check(inner_of(y)(x) == conjugate(x, y), "inner_of")
            check(aut_matrix(fg) == aut_matrix(f) @ aut_matrix(g), "matrix model")
    return within(start, 10)


# -- 4 ------------------------------------------------------------------------


def grid(ctx, max_k=6, max_p=2, cs=(0, 1, 2, 3)):
    values = sorted({Fraction(k, abs(ctx.n) ** p) for k in range(-max_k, max_k + 1) for p in range(max_p + 1)})
    return [element(ctx, v, c) for c in cs for v in values]


def criterion_conjugacy():
    start = time.perf_counter()
    b = SearchBounds(10 ** 6, 8)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(4000 + n)
        for _ in range(10 ** 3):
            u, h = random_element(ctx, b, rng), random_element(ctx, b, rng)
            v = conjugate(u, h)
            d = conjugacy(u, v)
            check(d.answer and verify_conjugator(u, v, d.witness.g), "planted pair")
    for n in (2, 3, -2):
        ctx = make_context(n)
        bounds = conjugator_bounds(ctx, 6, 2, 3)
        pool = grid(ctx)
        for u in pool:
            klass = brute_conjugacy_class(u, bounds)
            for v in pool:
                if v.c != u.c:
                    continue
                d = conjugacy(u, v)
                check(d.answer == (v in klass), f"grid disagreement n={n} u={u} v={v}")
                if d.answer:
                    check(verify_conjugator(u, v, d.witness.g), "grid witness")
    c2 = make_context(2)
    d = conjugacy(element(c2, 1, 2), element(c2, 2, 2))
    check(d.answer and d.witness.g == gen_t(c2), "worked instance")
    return within(start, 120)


# -- 5 ------------------------------------------------------------------------


def same_c_pair(ctx, b, rng):
    u, v = random_element(ctx, b, rng), random_element(ctx, b, rng)
    if rng.random() < 0.8:
        v = BsElement(v.nu, u.c)
    return u, v


def criterion_twisted():
    start = time.perf_counter()
    b = SearchBounds(1000, 3)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(5000 + n)
        ident = identity_aut(ctx)
        for i in range(10 ** 3):
            u, v = same_c_pair(ctx, b, rng)
            if i % 2:
                v = conjugate(u, random_element(ctx, b, rng))
            check(bool(twisted_conjugacy(u, v, ident)) == bool(conjugacy(u, v)), "identity twist")
        for _ in range(10 ** 3):
            u, w = random_element(ctx, b, rng), random_element(ctx, b, rng)
            f = random_aut(ctx, b, rng, unit_exp=1)
            v = inverse(f(w)) * u * w
            d = twisted_conjugacy(u, v, f)
            check(d.answer and verify_twisted_conjugator(u, v, f, d.witness.g), "planted twisted pair")
        for i in range(100):
            f = random_aut(ctx, b, rng, unit_exp=1)
            u, v = same_c_pair(ctx, b, rng)
            if i % 2:
                w = random_element(ctx, b, rng)
                v = inverse(f(w)) * u * w
            d1, d2 = twisted_conjugacy(u, v, f), twisted_conjugacy(v, u, f)
            check(d1.answer == d2.answer, "symmetry")
            if d2.answer:
                check(verify_twisted_conjugator(v, u, f, d2.witness.g), "symmetric witness")
    c2 = make_context(2)
    red = reduce_twisted(gen_a(c2), gen_a(c2, 2), identity_aut(c2))
    data = twisted_equation_data(red.m1, red.m2, red.r2, red.f_red)
    check((data.A, data.B, data.C) == (1, 0, 2), "worked A, B, C")
    d = twisted_conjugacy(gen_a(c2), gen_a(c2, 2), identity_aut(c2))
    check(d.answer and verify_twisted_conjugator(gen_a(c2), gen_a(c2, 2), identity_aut(c2), d.witness.g),
          "worked twisted instance")
    return within(start, 120)


# -- 6 ------------------------------------------------------------------------


def criterion_orbit():
    start = time.perf_counter()
    b = SearchBounds(1000, 3)
    for n in MODULI:
        ctx = make_context(n)
        rng = random.Random(6000 + n)
        for _ in range(10 ** 3):
            u, f = random_element(ctx, b, rng), random_aut(ctx, b, rng, unit_exp=2)
            v = f(u)
            d = orbit(u, v)
            check(d.answer and not d.witness_omitted and verify_orbit_aut(u, v, d.witness.f), "planted orbit pair")
        for i in range(100):
            u, v = same_c_pair(ctx, b, rng)
            if i % 2:
                v = random_aut(ctx, b, rng, unit_exp=2)(u)
            g = random_aut(ctx, b, rng, unit_exp=2)
            check(bool(orbit(u, v)) == bool(orbit(g(u), g(v))), "invariance")
    c2 = make_context(2)
    check(bool(orbit(gen_a(c2), gen_a(c2, 4))), "(a, a^4)")
    check(not orbit(gen_a(c2), gen_a(c2, 3)), "(a, a^3)")
    return within(start, 60)


# -- 7 ------------------------------------------------------------------------


def criterion_coset():
    start = time.perf_counter()
    for n in MODULI:
        ctx = make_context(n)
        for k in range(-50, 51):
            alpha = ctx.coerce(k)
            for delta in range(-50, 51):
                d = coset_contains_unit(alpha, delta)
                check(d.answer == coset_unit_oracle(alpha, delta, ctx), f"n={n} k={k} delta={delta}")
                if d.answer:
                    check(is_unit(alpha + d.witness * delta), "coset witness")
    c2, c3 = make_context(2), make_context(3)
    d = coset_contains_unit(c2.coerce(3), 7)
    check(d.answer and is_unit(c2.coerce(3) + 7 * d.witness), "(3, 7, n=2)")
    check(not coset_contains_unit(c3.coerce(2), 8), "(2, 8, n=3)")
    return within(start, 60)


# -- 8 ------------------------------------------------------------------------


def criterion_cli():
    start = time.perf_counter()
    cases = json.loads(GOLDEN.read_text())
    check(len(cases) == 30, "corpus size")
    commands = set(cli.build_parser()._subparsers._group_actions[0].choices)
    check(commands <= {a for c in cases for a in c["argv"]}, "every subcommand covered")
    for case in cases:
        out, err = io.StringIO(), io.StringIO()
        code = cli.run(case["argv"], out, err)
        check(out.getvalue() == case["stdout"], f"stdout of {case['argv']}")
        check(code == case["exit"], f"exit code of {case['argv']}")
    return within(start, 10)


CRITERIA = [
    ("1", "group laws", criterion_group_laws),
    ("2", "calculation rules (i)-(v)", criterion_calculation_rules),
    ("3", "automorphisms", criterion_automorphisms),
    ("4", "conjugacy", criterion_conjugacy),
    ("5", "twisted conjugacy", criterion_twisted),
    ("6", "orbit decidability", criterion_orbit),
    ("7", "coset unit test", criterion_coset),
    ("8", "CLI golden corpus", criterion_cli),
]


def run_criterion(fn, label, name):
    try:
        elapsed = fn()
    except AssertionError as exc:
        return False, f"FAIL criterion {label} ({name}): {exc}"
    return True, f"PASS criterion {label} ({name}) in {elapsed:.1f}s"


@pytest.mark.parametrize("label, name, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(label, name, fn, capsys):
    ok, line = run_criterion(fn, label, name)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(fn, label, name) for label, name, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
