"""Command-line interface.

    bsgroup --n N [--output text|json] [--check] [--seed S] COMMAND ...

Exit status: 0 success or yes, 1 no, 2 parse/usage error, 3 unsupported n,
4 internal cap exceeded (witness omitted or exponent out of range),
70 a witness failed ``--check`` verification.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Optional, Sequence

from . import oracles
from .automorphisms import apply, compose, format_aut, parse_aut
from .decision import conjugacy, orbit, twisted_conjugacy
from .errors import BSError, ExponentOverflow, UnsupportedModulus
from .group import BsElement, RationalMatrix2, inverse, matrix_rep, multiply, power
from .ring import NContext, make_context, to_power_form
from .words import Word, evaluate, format_element, parse

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_MODULUS, EXIT_CAP = 0, 1, 2, 3, 4
EXIT_CHECK_FAILED = 70


class _Result:
    def __init__(self, answer: str, witness: Optional[str] = None, code: int = EXIT_YES,
                 checked: Optional[bool] = None, note: Optional[str] = None):
        self.answer = answer
        self.witness = witness
        self.code = code
        self.checked = checked
        self.note = note


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bsgroup", description="Exact computation in BS(n,1).")
    p.add_argument("--n", type=int, required=True, help="the parameter n of BS(n,1), |n| >= 2")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--check", action="store_true", help="verify results independently")
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, *args, help=None):
        sp = sub.add_parser(name, help=help)
        for a in args:
            sp.add_argument(a)
        return sp

    cmd("normalize", "word", help="print the normal form of a word")
    cmd("mul", "w1", "w2", help="product of two words")
    cmd("inv", "word", help="inverse")
    sp = cmd("pow", "word", help="integer power")
    sp.add_argument("r", type=int)
    cmd("wp", "word", help="word problem: is the word trivial?")
    cmd("cp", "u", "v", help="conjugacy: v = g u g^-1 ?")
    sp = cmd("tcp", "u", "v", help="twisted conjugacy: v = (g phi)^-1 u g ?")
    sp.add_argument("--aut", required=True, help='automorphism literal "phi(alpha; beta)"')
    cmd("od", "u", "v", help="orbit: u phi = v for some automorphism phi ?")
    cmd("aut-compose", "f", "g", help="f first, then g")
    cmd("aut-apply", "f", "word", help="image of a word under an automorphism")
    sp = sub.add_parser("rand", help="random element")
    sp.add_argument("--size", type=int, default=4)
    return p


def _word_matrix(w: Word, ctx: NContext) -> RationalMatrix2:
    # independent evaluation: multiply generator matrices letter by letter
    A = RationalMatrix2.of(1, 1, 0, 1)
    T = RationalMatrix2.of(ctx.n, 0, 0, 1)
    m = RationalMatrix2.eye()
    for gen, e in w:
        if gen == "a":
            k, p = (e, 0) if isinstance(e, int) else to_power_form(e)
            m = m @ (T ** -p) @ (A ** k) @ (T ** p)
        else:
            m = m @ (T ** e)
    return m


def _element_result(g: BsElement, check: bool, expected: Optional[RationalMatrix2]) -> _Result:
    checked = None
    if check:
        checked = expected == matrix_rep(g)
    return _Result(format_element(g), checked=checked)


def _decision_result(dec, witness_text, verify, check: bool) -> _Result:
    if not dec.answer:
        return _Result("no", code=EXIT_NO)
    if dec.witness_omitted:
        return _Result("yes", None, EXIT_CAP, checked=False if check else None,
                       note="omitted (search cap exceeded)")
    checked = verify() if check else None
    return _Result("yes", witness_text, EXIT_YES, checked=checked)


def _execute(args, ctx: NContext) -> _Result:
    E = lambda text: evaluate(parse(text, ctx), ctx)  # noqa: E731
    F = lambda text: parse_aut(text, ctx)  # noqa: E731
    check = args.check
    c = args.command

    if c == "normalize":
        w = parse(args.word, ctx)
        return _element_result(evaluate(w, ctx), check, _word_matrix(w, ctx) if check else None)
    if c == "mul":
        w1, w2 = parse(args.w1, ctx), parse(args.w2, ctx)
        g = multiply(evaluate(w1, ctx), evaluate(w2, ctx))
        exp = _word_matrix(w1, ctx) @ _word_matrix(w2, ctx) if check else None
        return _element_result(g, check, exp)
    if c == "inv":
        w = parse(args.word, ctx)
        return _element_result(inverse(evaluate(w, ctx)), check, _word_matrix(w, ctx).inv() if check else None)
    if c == "pow":
        w = parse(args.word, ctx)
        return _element_result(power(evaluate(w, ctx), args.r), check,
                               _word_matrix(w, ctx) ** args.r if check else None)
    if c == "wp":
        w = parse(args.word, ctx)
        trivial = evaluate(w, ctx).is_identity()
        checked = (_word_matrix(w, ctx) == RationalMatrix2.eye()) == trivial if check else None
        return _Result("yes" if trivial else "no", code=EXIT_YES if trivial else EXIT_NO, checked=checked)
    if c == "cp":
        u, v = E(args.u), E(args.v)
        dec = conjugacy(u, v)
        g = dec.witness.g if dec.witness else None
        return _decision_result(dec, g and format_element(g),
                                lambda: oracles.verify_conjugator(u, v, _reparse(g, ctx)), check)
    if c == "tcp":
        u, v, f = E(args.u), E(args.v), F(args.aut)
        dec = twisted_conjugacy(u, v, f)
        g = dec.witness.g if dec.witness else None
        return _decision_result(dec, g and format_element(g),
                                lambda: oracles.verify_twisted_conjugator(u, v, f, _reparse(g, ctx)), check)
    if c == "od":
        u, v = E(args.u), E(args.v)
        dec = orbit(u, v)
        f = dec.witness.f if dec.witness else None
        return _decision_result(dec, f and format_aut(f),
                                lambda: oracles.verify_orbit_aut(u, v, parse_aut(format_aut(f), ctx)), check)
    if c == "aut-compose":
        f, g = F(args.f), F(args.g)
        h = compose(f, g)
        checked = None
        if check:
            gens = (BsElement(ctx.one, 0), BsElement(ctx.zero, 1))
            checked = all(oracles.matrix_apply(h, x) == oracles.matrix_apply(g, oracles.matrix_apply(f, x))
                          for x in gens)
        return _Result(format_aut(h), checked=checked)
    if c == "aut-apply":
        f, x = F(args.f), E(args.word)
        y = apply(f, x)
        return _Result(format_element(y), checked=(oracles.matrix_apply(f, x) == y) if check else None)
    if c == "rand":
        if args.size < 1:
            raise ValueError("--size must be positive")
        seed = 0 if args.seed is None else args.seed
        g = oracles.random_element(ctx, oracles.SearchBounds(args.size, args.size), seed)
        return _Result(format_element(g))
    raise AssertionError(c)


def _reparse(g: BsElement, ctx: NContext) -> BsElement:
    # witnesses are verified from their printed form
    return evaluate(parse(format_element(g), ctx), ctx)


def _emit(res: _Result, output: str, out) -> None:
    if output == "json":
        payload = {"answer": res.answer, "witness": res.witness, "checked": res.checked}
        out.write(json.dumps(payload) + "\n")
        return
    out.write(res.answer + "\n")
    if res.witness is not None:
        out.write(f"witness: {res.witness}\n")
    elif res.note is not None:
        out.write(f"witness: {res.note}\n")
    if res.checked is not None:
        out.write(f"checked: {'true' if res.checked else 'false'}\n")


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        ctx = make_context(args.n)
    except UnsupportedModulus as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MODULUS
    try:
        res = _execute(args, ctx)
    except ExponentOverflow as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (BSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    _emit(res, args.output, out)
    if args.check and res.checked is False and res.code != EXIT_CAP:
        err.write("error: result failed independent verification\n")
        return EXIT_CHECK_FAILED
    return res.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
