"""Tokenizer and polynomial-expression parser.

Expression grammar (``^`` power, explicit ``*``, ``/`` only by constants)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*'|'/') power)*
    power  := atom ['^' INT]
    atom   := INT | VARIABLE | '(' expr ')' | '-' atom
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FreesplitError

__all__ = ["Token", "ParseError", "tokenize", "TokenStream"]


class ParseError(FreesplitError, ValueError):
    """Syntax error with a 1-based line and column."""

    def __init__(self, message, line=0, col=0):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, OP, EOF
    text: str
    line: int
    col: int
    end: int  # absolute offset just past the token
    start: int


_SINGLE = set("+-*/^()[],;=:")


def tokenize(text):
    tokens = []
    i, line, line_start = 0, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        col = i - line_start + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUM", text[i:j], line, col, j, i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, col, j, i))
            i = j
        elif text.startswith("->", i):
            tokens.append(Token("OP", "->", line, col, i + 2, i))
            i += 2
        elif text.startswith("++", i):
            tokens.append(Token("OP", "++", line, col, i + 2, i))
            i += 2
        elif ch in _SINGLE:
            tokens.append(Token("OP", ch, line, col, i + 1, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, i - line_start + 1, i, i))
    return tokens


class TokenStream:
    """Cursor over a token list with polynomial-expression parsing."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def peek(self):
        return self.tokens[self.pos]

    def peek_at(self, k):
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek
        return ParseError(message, tok.line, tok.col)

    def at(self, text, kind=None):
        tok = self.peek
        return tok.text == text and (kind is None or tok.kind == kind) and tok.kind != "EOF"

    def accept(self, text):
        if self.at(text):
            return self.next()
        return None

    def expect(self, text):
        tok = self.peek
        if tok.text != text or tok.kind == "EOF":
            found = "end of input" if tok.kind == "EOF" else repr(tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.next()

    def expect_kind(self, kind, what=None):
        tok = self.peek
        if tok.kind != kind:
            found = "end of input" if tok.kind == "EOF" else repr(tok.text)
            raise self.error(f"expected {what or kind.lower()}, found {found}")
        return self.next()

    # -- polynomial expressions -------------------------------------------

    def parse_expr(self, ring):
        sign = None
        if self.at("-") or self.at("+"):
            sign = self.next().text
        value = self._term(ring)
        if sign == "-":
            value = -value
        while self.at("+") or self.at("-"):
            op = self.next().text
            rhs = self._term(ring)
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self, ring):
        value = self._power(ring)
        while self.at("*") or self.at("/"):
            op_tok = self.next()
            rhs = self._power(ring)
            if op_tok.text == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants", op_tok.line, op_tok.col)
                value = value * ring.field.inv(rhs.constant_coefficient_raw())
        return value

    def _power(self, ring):
        base = self._atom(ring)
        if self.at("^"):
            self.next()
            tok = self.expect_kind("NUM", "integer exponent")
            base = base ** int(tok.text)
        return base

    def _atom(self, ring):
        tok = self.peek
        if tok.kind == "NUM":
            self.next()
            return ring.constant(int(tok.text))
        if tok.kind == "IDENT":
            idx = ring.index_of(tok.text)
            if idx is None:
                raise self.error(f"unknown variable {tok.text!r}")
            self.next()
            return ring.gen(idx)
        if self.at("("):
            self.next()
            value = self.parse_expr(ring)
            self.expect(")")
            return value
        if self.at("-"):
            self.next()
            return -self._atom(ring)
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise self.error(f"expected a polynomial term, found {found}")
