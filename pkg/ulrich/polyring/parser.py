"""
Recursive-descent parser for the polynomial input grammar.

    poly   := [sign] term (('+' | '-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' uint)?
    coeff  := int | int '/' uint        (fractions over Q only)

Whitespace is insignificant. Errors report the character position of the
offending token.
"""
import logging
import re
from collections import defaultdict
from fractions import Fraction

from ulrich.exceptions import CoefficientDomainError, ParseError, UnknownVariableError
from .domains import RATIONALS

logger = logging.getLogger(__name__)

TOKEN = re.compile(r'\s*(?:(?P<int>[0-9]+)|(?P<name>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*^/]))')

END = 'end'


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = TOKEN.match(text, pos)
        if match is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f'Unexpected character {text[bad]!r}', position=bad, text=text)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append((END, '', len(text)))
    return tokens


class PolynomialParser:
    """Parses one polynomial string against a ring context."""

    def __init__(self, text, context):
        self.text = text
        self.context = context
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message, token, error_class=ParseError):
        return error_class(message, position=token[2], text=self.text)

    def parse(self):
        terms = defaultdict(Fraction)
        sign = 1
        kind, value, _ = self.peek()
        if kind == 'op' and value in '+-':
            self.advance()
            sign = -1 if value == '-' else 1
        self.parse_term(sign, terms)
        while True:
            token = self.peek()
            if token[0] == END:
                break
            if token[0] == 'op' and token[1] in '+-':
                self.advance()
                self.parse_term(-1 if token[1] == '-' else 1, terms)
                continue
            raise self.error(f'Unexpected {token[1]!r}', token)
        return self.context.from_terms(dict(terms))

    def parse_term(self, sign, terms):
        token = self.peek()
        exps = [0] * self.context.nvars
        if token[0] == 'int':
            coefficient = self.parse_coefficient()
        elif token[0] == 'name':
            coefficient = Fraction(1)
            self.parse_factor(exps)
        else:
            raise self.error('Expected a coefficient or a variable', token)
        while self.peek()[0] == 'op' and self.peek()[1] == '*':
            self.advance()
            self.parse_factor(exps)
        terms[tuple(exps)] += sign * coefficient

    def parse_coefficient(self):
        _, digits, _ = self.advance()
        token = self.peek()
        if token[0] == 'op' and token[1] == '/':
            if self.context.domain.tag != RATIONALS:
                raise self.error(
                    f'Fractions are not allowed over {self.context.domain}',
                    token,
                    CoefficientDomainError,
                )
            self.advance()
            denominator = self.peek()
            if denominator[0] != 'int':
                raise self.error('Expected an unsigned denominator', denominator)
            self.advance()
            if int(denominator[1]) == 0:
                raise self.error('Zero denominator', denominator)
            return Fraction(int(digits), int(denominator[1]))
        return Fraction(int(digits))

    def parse_factor(self, exps):
        token = self.peek()
        if token[0] != 'name':
            raise self.error('Expected a variable', token)
        self.advance()
        index = self.context.index.get(token[1])
        if index is None:
            raise self.error(f'Unknown variable {token[1]!r}', token, UnknownVariableError)
        exponent = 1
        caret = self.peek()
        if caret[0] == 'op' and caret[1] == '^':
            self.advance()
            power = self.peek()
            if power[0] != 'int':
                raise self.error('Expected a non-negative integer exponent', power)
            self.advance()
            exponent = int(power[1])
        exps[index] += exponent


def parse_poly(text, context):
    """
    Parse ``text`` into a polynomial of ``context``.

    Raises:
        ParseError: syntax error, with the character position
        UnknownVariableError: a name outside the context's variables
        CoefficientDomainError: a fraction outside Q
    """
    if not text or not text.strip():
        raise ParseError('Empty polynomial', position=0, text=text)
    return PolynomialParser(text, context).parse()
