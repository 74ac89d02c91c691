"""Tokenizer for the expression language.

Longest-match lexing over character offsets; unknown characters become
ERROR tokens rather than exceptions, so tokenizing is total.
"""

from __future__ import annotations

from dataclasses import dataclass

IDENT = "IDENT"
NUMBER = "NUMBER"
LBRACE = "LBRACE"
RBRACE = "RBRACE"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
COMMA = "COMMA"
PLUS = "PLUS"
STAR = "STAR"
MINUS = "MINUS"
PIPE = "PIPE"
AMP = "AMP"
BACKSLASH = "BACKSLASH"
CARET_C = "CARET_C"
SLASH = "SLASH"
EQUALS = "EQUALS"
SEMI = "SEMI"
KEYWORD = "KEYWORD"
EOF = "EOF"
ERROR = "ERROR"

KEYWORDS = frozenset({"Z", "P", "Q", "B", "fin", "cofin", "let", "in", "check"})

_PUNCT = {
    "{": LBRACE,
    "}": RBRACE,
    "(": LPAREN,
    ")": RPAREN,
    ",": COMMA,
    "+": PLUS,
    "*": STAR,
    "-": MINUS,
    "|": PIPE,
    "&": AMP,
    "\\": BACKSLASH,
    "/": SLASH,
    "=": EQUALS,
    ";": SEMI,
}


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    start: int
    end: int

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        return f"{self.lexeme!r}"


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident_rest(c: str) -> bool:
    return c.isalnum() or c == "_"


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        start = i
        if c in _PUNCT:
            tokens.append(Token(_PUNCT[c], c, start, start + 1))
            i += 1
        elif c == "^":
            # only the complement marker ^c is legal
            j = i + 1
            while j < n and _is_ident_rest(text[j]):
                j += 1
            lexeme = text[i:j]
            kind = CARET_C if lexeme == "^c" else ERROR
            tokens.append(Token(kind, lexeme, start, j))
            i = j
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(NUMBER, text[i:j], start, j))
            i = j
        elif _is_ident_start(c):
            j = i
            while j < n and _is_ident_rest(text[j]):
                j += 1
            lexeme = text[i:j]
            kind = KEYWORD if lexeme in KEYWORDS else IDENT
            tokens.append(Token(kind, lexeme, start, j))
            i = j
        else:
            tokens.append(Token(ERROR, c, start, start + 1))
            i += 1
    tokens.append(Token(EOF, "", n, n))
    return tokens
