"""Text format for braid words and slice words.

A file starts with a header ``strands <n>`` followed by whitespace separated
tokens, in one of two modes that cannot be mixed:

* braid mode: ``s<i>`` for sigma_i and ``s<i>'`` for its inverse;
* slice mode: ``X+<p>``, ``X-<p>`` (crossings), ``U<p>`` (cup), ``A<p>`` (cap).

``#`` starts a comment running to the end of the line.  Blank and comment
lines may precede the header.  A header with no tokens parses as an empty
slice word.
"""

from __future__ import annotations

import re
from typing import Union

from .braid import BraidLetter, BraidWord, to_slice_word
from .diagram import Cap, Cross, Cup, SliceWord, StringLinkDiagram, validate
from .errors import DSLSyntaxError, MixedMode

_HEADER = re.compile(r"strands\s+(\d+)\s*$")
_BRAID = re.compile(r"s(\d+)(')?$")
_SLICE = re.compile(r"(X[+-]|U|A)(\d+)$")
_TOKEN = re.compile(r"\S+")

Parsed = Union[BraidWord, SliceWord]


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_dsl(text: str) -> Parsed:
    """Parse DSL text into a :class:`BraidWord` or an unvalidated :class:`SliceWord`."""
    lines = text.splitlines()
    header_line = None
    strands = 0
    for number, raw in enumerate(lines, start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        m = _HEADER.match(body.strip())
        if not m:
            column = len(body) - len(body.lstrip()) + 1
            raise DSLSyntaxError("expected header 'strands <n>'", number, column)
        header_line, strands = number, int(m.group(1))
        break
    if header_line is None:
        raise DSLSyntaxError("missing header 'strands <n>'", max(len(lines), 1), 1)

    mode = None
    first_token = None
    letters: list[BraidLetter] = []
    events = []
    for number in range(header_line + 1, len(lines) + 1):
        body = _strip_comment(lines[number - 1])
        for m in _TOKEN.finditer(body):
            tok, column = m.group(), m.start() + 1
            if b := _BRAID.match(tok):
                kind = "braid"
            elif s := _SLICE.match(tok):
                kind = "slice"
            else:
                raise DSLSyntaxError(f"unrecognized token {tok!r}", number, column)
            if mode is None:
                mode, first_token = kind, (tok, number, column)
            elif kind != mode:
                t0, l0, c0 = first_token
                raise MixedMode(f"{kind} token {tok!r} at line {number}, column {column} "
                                f"after {mode} token {t0!r} at line {l0}, column {c0}")
            try:
                if kind == "braid":
                    letters.append(BraidLetter(int(b.group(1)), -1 if b.group(2) else 1))
                else:
                    head, pos = s.group(1), int(s.group(2))
                    if head == "U":
                        events.append(Cup(pos))
                    elif head == "A":
                        events.append(Cap(pos))
                    else:
                        events.append(Cross(pos, 1 if head == "X+" else -1))
            except ValueError as exc:
                raise DSLSyntaxError(str(exc), number, column) from None

    if mode == "braid":
        try:
            return BraidWord(strands, tuple(letters))
        except (ValueError, IndexError) as exc:
            raise DSLSyntaxError(str(exc), header_line, 1) from None
    return SliceWord(strands, tuple(events))


def _event_token(ev) -> str:
    if isinstance(ev, Cross):
        return f"X{'+' if ev.sign > 0 else '-'}{ev.pos}"
    if isinstance(ev, Cup):
        return f"U{ev.pos}"
    if isinstance(ev, Cap):
        return f"A{ev.pos}"
    raise TypeError(f"not a slice event: {ev!r}")


def format_dsl(obj: Parsed | StringLinkDiagram) -> str:
    """Canonical text: the header line, then all tokens on one line."""
    if isinstance(obj, StringLinkDiagram):
        obj = obj.word
    if isinstance(obj, BraidWord):
        tokens = [str(letter) for letter in obj.letters]
        n = obj.strands
    else:
        tokens = [_event_token(ev) for ev in obj.events]
        n = obj.boundary_strands
    body = f"strands {n}\n"
    return body + (" ".join(tokens) + "\n" if tokens else "")


def load_diagram(text: str) -> StringLinkDiagram:
    """Parse and validate; braid words are read as slice words of crossings."""
    parsed = parse_dsl(text)
    if isinstance(parsed, BraidWord):
        parsed = to_slice_word(parsed)
    return validate(parsed)
