"""Lexer and generic statement parser for the model/catalog block language.

Every input file is a sequence of statements::

    statement := WORD value* ( ";" | "{" statement* "}" )
    value     := WORD | STRING | "*"

A ``;`` directly before a closing ``}`` (or at end of file) may be omitted.
The parser only builds statement trees; interpretation of keywords lives in
the model and catalog loaders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from coop_safety.diagnostics import InputError, SourceSpan, error

WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.@\-]*")


@dataclass(frozen=True)
class Token:
    kind: str  # WORD, STRING, STAR, LBRACE, RBRACE, SEMI, EOF
    value: str
    span: SourceSpan


@dataclass(frozen=True)
class Statement:
    keyword: Token
    args: tuple[Token, ...]
    body: tuple["Statement", ...] | None
    file: str

    @property
    def name(self) -> str:
        return self.keyword.value

    @property
    def span(self) -> SourceSpan:
        return self.keyword.span

    def entries(self, keyword: str) -> list["Statement"]:
        return [s for s in self.body or () if s.name == keyword]


class SyntaxProblem(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(message)
        self.span = span


def normalize(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def tokenize(text: str, file: str) -> list[Token]:
    text = normalize(text)
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\f\v":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start = SourceSpan(file, line, col, 1)
        if ch in "{};*":
            kind = {"{": "LBRACE", "}": "RBRACE", ";": "SEMI", "*": "STAR"}[ch]
            tokens.append(Token(kind, ch, start))
            i += 1
            col += 1
            continue
        if ch == '"':
            j = i + 1
            buf = []
            while True:
                if j >= n or text[j] == "\n":
                    raise SyntaxProblem("unterminated string literal", start)
                c = text[j]
                if c == "\\" and j + 1 < n:
                    buf.append({"n": "\n", "t": "\t"}.get(text[j + 1], text[j + 1]))
                    j += 2
                    continue
                if c == '"':
                    break
                buf.append(c)
                j += 1
            length = j + 1 - i
            tokens.append(Token("STRING", "".join(buf), SourceSpan(file, line, col, length)))
            col += length
            i = j + 1
            continue
        m = WORD_RE.match(text, i)
        if m is None:
            raise SyntaxProblem(f"unexpected character {ch!r}", start)
        word = m.group(0)
        tokens.append(Token("WORD", word, SourceSpan(file, line, col, len(word))))
        i = m.end()
        col += len(word)
    tokens.append(Token("EOF", "", SourceSpan(file, line, col, 0)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], file: str):
        self.tokens = tokens
        self.pos = 0
        self.file = file

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def statements(self, closing: str) -> list[Statement]:
        out = []
        while self.peek().kind != closing:
            tok = self.peek()
            if tok.kind == "SEMI":
                self.take()
                continue
            if tok.kind != "WORD":
                what = "end of file" if tok.kind == "EOF" else repr(tok.value)
                raise SyntaxProblem(f"expected a keyword, found {what}", tok.span)
            out.append(self.statement())
        return out

    def statement(self) -> Statement:
        keyword = self.take()
        args = []
        while self.peek().kind in ("WORD", "STRING", "STAR"):
            args.append(self.take())
        tok = self.peek()
        if tok.kind == "SEMI":
            self.take()
            return Statement(keyword, tuple(args), None, self.file)
        if tok.kind in ("RBRACE", "EOF"):
            return Statement(keyword, tuple(args), None, self.file)
        if tok.kind == "LBRACE":
            self.take()
            body = self.statements("RBRACE")
            self.take()
            return Statement(keyword, tuple(args), tuple(body), self.file)
        raise SyntaxProblem(f"unexpected {tok.value!r} in statement {keyword.value!r}", tok.span)


def parse_text(text: str, file: str = "<string>") -> list[Statement]:
    """Parse a whole file; raises :class:`SyntaxProblem` on the first error."""
    parser = _Parser(tokenize(text, file), file)
    stmts = parser.statements("EOF")
    return stmts


def parse_source(text: str, file: str) -> tuple[list[Statement], list]:
    """Like :func:`parse_text` but reports problems as diagnostics."""
    try:
        return parse_text(text, file), []
    except SyntaxProblem as exc:
        return [], [error("SYNTAX", str(exc), exc.span)]


def read_source(path: str | Path) -> str:
    try:
        return Path(path).read_bytes().decode("utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
