"""
Element expression grammar.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-')* power
    power  := atom ('^' integer)?
    atom   := rational | integer | symbol | '(' expr ')'

Symbols are the ring's own (x for polynomial rings, g for skew instances,
i, j, k for quaternion coefficients). Rational literals a/b exist only
where the coefficients contain Q. Products keep the written factor order.
The Unicode minus sign is accepted as '-'.
"""
from functools import lru_cache, reduce
from typing import Optional, Tuple

from pyparsing import (Forward, Opt, ParseBaseException, ParseFatalException,
                       ParserElement, Regex, Suppress, Word, ZeroOrMore, nums, one_of)

from ed_config import get_config
from ed_errors import ElemDivError, ElementParseError, ExponentTooLarge
from ring_core import Element, Ring


class _ExponentFatal(ParseFatalException):
    pass


class _LiteralFatal(ParseFatalException):
    pass


@lru_cache(maxsize=64)
def _grammar(ring: Ring, max_exponent: int) -> ParserElement:
    expr = Forward()

    def to_int(s, loc, toks):
        return ring.from_int(int(toks[0]))

    def to_fraction(s, loc, toks):
        numerator, denominator = toks[0].split("/")
        try:
            return ring.from_fraction(int(numerator), int(denominator))
        except ElemDivError as e:
            raise _LiteralFatal(s, loc, str(e))

    def to_symbol(s, loc, toks):
        return ring.symbols[toks[0]]

    def to_power(s, loc, toks):
        if len(toks) == 1:
            return toks[0]
        exponent = int(toks[1])
        if exponent > max_exponent:
            raise _ExponentFatal(s, loc, f"exponent {exponent} exceeds {max_exponent}")
        return ring.power(toks[0], exponent)

    def to_unary(s, loc, toks):
        value = toks[-1]
        return -value if (len(toks) - 1) % 2 else value

    def to_product(s, loc, toks):
        return reduce(lambda acc, f: acc * f, toks[1:], toks[0])

    def to_sum(s, loc, toks):
        total = toks[0]
        for op, value in zip(toks[1::2], toks[2::2]):
            total = total + value if op == "+" else total - value
        return total

    integer = Word(nums).set_parse_action(to_int)
    atom_choices = []
    if _has_rationals(ring):
        atom_choices.append(Regex(r"\d+/\d+").set_parse_action(to_fraction))
    atom_choices.append(integer)
    if ring.symbols:
        atom_choices.append(one_of(sorted(ring.symbols)).set_parse_action(to_symbol))
    atom_choices.append(Suppress("(") + expr + Suppress(")"))

    atom = atom_choices[0]
    for choice in atom_choices[1:]:
        atom = atom | choice

    minus = one_of("- −").set_parse_action(lambda: "-")
    power = (atom + Opt(Suppress("^") + Word(nums))).set_parse_action(to_power)
    unary = (ZeroOrMore(minus) + power).set_parse_action(to_unary)
    term = (unary + ZeroOrMore(Suppress("*") + unary)).set_parse_action(to_product)
    expr <<= (term + ZeroOrMore((one_of("+ -") | minus) + term)).set_parse_action(to_sum)
    return expr


def _has_rationals(ring: Ring) -> bool:
    return ring.descriptor.kind in ("PolyRat", "QuatPoly")


def parse_element(ring: Ring, text: str, max_exponent: Optional[int] = None) -> Element:
    if max_exponent is None:
        max_exponent = get_config().max_exponent()
    try:
        return _grammar(ring, max_exponent).parse_string(text, parse_all=True)[0]
    except _ExponentFatal as e:
        raise ExponentTooLarge(e.msg, e.loc) from None
    except ParseBaseException as e:
        raise ElementParseError(f"cannot parse {text!r}: {e.msg}", e.loc) from None


def print_element(a: Element) -> str:
    return str(a)


def parse_element_list(ring: Ring, text: str, max_exponent: Optional[int] = None) -> Tuple[Element, ...]:
    """Comma-separated elements, e.g. "2, 3, x+1"."""
    if max_exponent is None:
        max_exponent = get_config().max_exponent()
    expr = _grammar(ring, max_exponent)
    items = expr + ZeroOrMore(Suppress(",") + expr)
    try:
        return tuple(items.parse_string(text, parse_all=True))
    except _ExponentFatal as e:
        raise ExponentTooLarge(e.msg, e.loc) from None
    except ParseBaseException as e:
        raise ElementParseError(f"cannot parse {text!r}: {e.msg}", e.loc) from None
