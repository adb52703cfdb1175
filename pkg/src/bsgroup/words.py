"""Words over the generators ``a`` and ``t``.

Grammar (whitespace or ``*`` may separate terms)::

    word := term*            # the single token "1" denotes the empty word
    term := ('a' | 't') ('^' exp)?
    exp  := int | '(' int '/' int ')'
    int  := ['+' | '-'] digit+

Rational exponents are only allowed on ``a`` and must lie in Z[1/n].
The canonical element text produced by :func:`format_element` is itself a
word in this grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ParseError
from .group import BsElement, identity, multiply
from .ring import LocalNumber, NContext, check_exponent

__all__ = ["Word", "parse", "evaluate", "is_trivial", "format_element", "format_word"]

Exponent = Union[int, LocalNumber]


@dataclass(frozen=True)
class Word:
    """A sequence of ``(generator, exponent)`` pairs with nonzero exponents."""

    terms: tuple[tuple[str, Exponent], ...] = ()

    def __iter__(self) -> Iterator[tuple[str, Exponent]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: Word) -> Word:
        return Word(self.terms + other.terms)

    @property
    def t_exponent(self) -> int:
        return sum(e for g, e in self.terms if g == "t")

    def __str__(self) -> str:
        return format_word(self)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_blank(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, message: str, expected: str):
        raise ParseError(message, self.pos, expected, self.text)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end", repr(ch))
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        if self.peek() and self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == digits:
            self.fail("missing digits", "integer")
        return int(self.text[start:self.pos])


def parse(text: str, ctx: NContext) -> Word:
    if text.strip() == "1":
        return Word()
    sc = _Scanner(text)
    terms: list[tuple[str, Exponent]] = []
    while True:
        while sc.peek() and (sc.peek().isspace() or sc.peek() == "*"):
            sc.pos += 1
        if not sc.peek():
            break
        gen = sc.peek()
        if gen not in ("a", "t"):
            sc.fail(f"unexpected {gen!r}", "generator 'a' or 't'")
        sc.pos += 1
        exp: Exponent = 1
        sc.skip_blank()
        if sc.peek() == "^":
            sc.pos += 1
            sc.skip_blank()
            if sc.peek() == "(":
                open_at = sc.pos
                sc.pos += 1
                sc.skip_blank()
                num = sc.integer()
                sc.skip_blank()
                sc.expect("/")
                sc.skip_blank()
                den_at = sc.pos
                den = sc.integer()
                sc.skip_blank()
                sc.expect(")")
                if den == 0:
                    raise ParseError("zero denominator", den_at, "nonzero integer", text)
                if gen == "t":
                    raise ParseError("rational exponent on t", open_at, "integer exponent", text)
                value = ctx.number(num, den)
                exp = value.num if value.is_integer() else value
            elif sc.peek() and (sc.peek() in "+-" or sc.peek().isdigit()):
                exp = sc.integer()
            else:
                sc.fail("bad exponent", "integer or '(' int '/' int ')'")
        if gen == "t":
            check_exponent(exp)
        if exp != 0:
            terms.append((gen, exp))
    return Word(tuple(terms))


def evaluate(w: Word, ctx: NContext) -> BsElement:
    """Normal form of the product of the terms of ``w``."""
    g = identity(ctx)
    for gen, e in w:
        if gen == "a":
            g = multiply(g, BsElement(ctx.coerce(e), 0))
        else:
            g = multiply(g, BsElement(ctx.zero, e))
    return g


def is_trivial(w: Word, ctx: NContext) -> bool:
    return evaluate(w, ctx).is_identity()


def _exp_text(e: Exponent) -> str:
    if isinstance(e, LocalNumber) and not e.is_integer():
        return f"({e.num}/{e.den})"
    return str(e)


def format_word(w: Word) -> str:
    if not w.terms:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{_exp_text(e)}" for g, e in w)


def format_element(g: BsElement) -> str:
    """Canonical text ``a^(k/d) t^c``; unit exponents and trivial factors omitted."""
    terms = []
    if g.nu:
        terms.append(("a", g.nu))
    if g.c:
        terms.append(("t", g.c))
    return format_word(Word(tuple(terms)))
