"""Tokenizer for the calculator's expression language.

Token kinds: ``num`` (integer, rational p/q, or fixed-point float
literals), ``basis`` (e1, e12 shorthand, or the braced form e{10,3};
the value is the raw index sequence, canonicalized by the parser),
``ident``, single-character ``op``, and a closing ``end``.  ``#``
starts a comment running to the end of the statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LexError

_FLOAT = re.compile(r"\d+\.\d+")
_RATIONAL = re.compile(r"(\d+)/(\d+)(?![\d.])")
_INT = re.compile(r"\d+")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_SHORTHAND = re.compile(r"e[0-9]+\Z")

OPERATOR_CHARS = "+-*/|^~(),="


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: tuple[int, int]
    value: object = field(default=None, compare=False)


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    size = len(source)
    while pos < size:
        ch = source[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            break
        if ch.isdigit():
            m = _FLOAT.match(source, pos)
            if m:
                tokens.append(Token("num", m.group(), (pos, m.end()), float(m.group())))
                pos = m.end()
                continue
            m = _RATIONAL.match(source, pos)
            if m:
                value = Fraction(int(m.group(1)), int(m.group(2)))
                tokens.append(Token("num", m.group(), (pos, m.end()), value))
                pos = m.end()
                continue
            m = _INT.match(source, pos)
            tokens.append(Token("num", m.group(), (pos, m.end()), Fraction(m.group())))
            pos = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _WORD.match(source, pos)
            word = m.group()
            if word == "e" and m.end() < size and source[m.end()] == "{":
                token, pos = _braced_basis(source, pos, m.end())
                tokens.append(token)
                continue
            if _SHORTHAND.fullmatch(word):
                indices = []
                for offset, digit in enumerate(word[1:]):
                    if digit == "0":
                        raise LexError(
                            "generator indices start at 1; use e{10} style "
                            "for indices above 9",
                            (pos + 1 + offset, pos + 2 + offset), source)
                    indices.append(int(digit))
                tokens.append(Token("basis", word, (pos, m.end()), tuple(indices)))
            else:
                tokens.append(Token("ident", word, (pos, m.end()), word))
            pos = m.end()
            continue
        if ch in OPERATOR_CHARS:
            tokens.append(Token("op", ch, (pos, pos + 1)))
            pos += 1
            continue
        if ch == ":":
            raise LexError("directives like :sig must start the statement",
                           (pos, pos + 1), source)
        raise LexError(f"unexpected character {ch!r}", (pos, pos + 1), source)
    tokens.append(Token("end", "", (size, size)))
    return tokens


def _braced_basis(source: str, start: int, brace: int) -> tuple[Token, int]:
    end = source.find("}", brace)
    if end < 0:
        raise LexError("unterminated basis symbol; expected '}'",
                       (start, len(source)), source)
    body = source[brace + 1:end]
    indices = []
    for part in body.split(","):
        part = part.strip()
        if not part.isdigit():
            raise LexError("basis indices must be positive integers",
                           (start, end + 1), source)
        index = int(part)
        if index < 1:
            raise LexError("generator indices start at 1", (start, end + 1), source)
        indices.append(index)
    if not indices:
        raise LexError("empty basis symbol", (start, end + 1), source)
    return Token("basis", source[start:end + 1], (start, end + 1), tuple(indices)), end + 1
