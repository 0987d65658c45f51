"""Plain-text formats read and written by the CLI.

Matrix::

    <rows> <cols>
    <cols tokens>        # repeated rows times

Tokens are ``[+-]<int>``, ``[+-]<p>/<q>``, ``-inf`` (EPS) or ``+inf`` (TAU).

System::

    system
    A
    <matrix A>

    B
    <matrix B>

State vector: a matrix with one column and ``m + n`` rows (u over w). On a
single line (CLI arguments, traces, bench CSV) a state is written
``(u1,...,um;w1,...,wn)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

from .errors import ParseError
from .latin import LatinSquare
from .system import BipartiteSystem, StateVector
from .tropical import EPS, TAU, TropicalMatrix, canon, fmt

_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_token(tok: str, line: Optional[int] = None, column: Optional[int] = None):
    if tok == "-inf":
        return EPS
    if tok == "+inf":
        return TAU
    if not _TOKEN.match(tok):
        raise ParseError(f"bad token {tok!r}", line, column)
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {tok!r}", line, column)
    return canon(Fraction(int(num), int(den) if den else 1))


def _tokens(text: str):
    """Yield ``(token, column)`` pairs with 1-based columns."""
    for m in re.finditer(r"\S+", text):
        yield m.group(0), m.start() + 1


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, what: str) -> Tuple[str, int]:
        if self.pos >= len(self.lines):
            raise ParseError(f"unexpected end of input, expected {what}", self.pos + 1)
        self.pos += 1
        return self.lines[self.pos - 1], self.pos

    def skip_blank(self):
        while self.pos < len(self.lines) and not self.lines[self.pos].strip():
            self.pos += 1

    def at_end(self) -> bool:
        return all(not ln.strip() for ln in self.lines[self.pos:])


def _read_matrix(lines: _Lines) -> TropicalMatrix:
    header, ln = lines.next("matrix header '<rows> <cols>'")
    toks = list(_tokens(header))
    if len(toks) != 2 or not all(t.isdigit() for t, _ in toks):
        raise ParseError("matrix header must be '<rows> <cols>'", ln, 1)
    rows, cols = (int(t) for t, _ in toks)
    if rows < 1 or cols < 1:
        raise ParseError("matrix dimensions must be positive", ln, 1)
    entries = []
    for _ in range(rows):
        text, ln = lines.next(f"a row of {cols} entries")
        toks = list(_tokens(text))
        if len(toks) != cols:
            col = toks[cols][1] if len(toks) > cols else len(text) + 1
            raise ParseError(f"expected {cols} entries, found {len(toks)}", ln, col)
        entries.extend(parse_token(t, ln, c) for t, c in toks)
    return TropicalMatrix(rows, cols, tuple(entries))


def parse_matrix(text: str) -> TropicalMatrix:
    lines = _Lines(text)
    lines.skip_blank()
    M = _read_matrix(lines)
    if not lines.at_end():
        raise ParseError("trailing content after matrix", lines.pos + 1)
    return M


def format_matrix(M: TropicalMatrix) -> str:
    out = [f"{M.rows} {M.cols}"]
    out += [" ".join(fmt(x) for x in M.row(i)) for i in range(M.rows)]
    return "\n".join(out) + "\n"


def _expect_label(lines: _Lines, label: str):
    text, ln = lines.next(f"'{label}'")
    if text.strip() != label:
        raise ParseError(f"expected '{label}', found {text.strip()!r}", ln, 1)


def parse_system(text: str) -> BipartiteSystem:
    lines = _Lines(text)
    lines.skip_blank()
    _expect_label(lines, "system")
    _expect_label(lines, "A")
    A = _read_matrix(lines)
    lines.skip_blank()
    _expect_label(lines, "B")
    B = _read_matrix(lines)
    if not lines.at_end():
        raise ParseError("trailing content after system", lines.pos + 1)
    try:
        return BipartiteSystem(A, B)
    except ValueError as exc:
        raise ParseError(f"invalid system: {exc}") from exc


def format_system(sys: BipartiteSystem) -> str:
    return f"system\nA\n{format_matrix(sys.A)}\nB\n{format_matrix(sys.B)}"


def parse_state_file(text: str, m: int) -> StateVector:
    M = parse_matrix(text)
    if M.cols != 1:
        raise ParseError(f"state vector file must have one column, got {M.cols}", 1)
    if not 0 < m < M.rows:
        raise ParseError(f"state has {M.rows} entries, cannot split at m={m}", 1)
    return StateVector.from_entries(M.entries, m)


def format_state_file(x: StateVector) -> str:
    return format_matrix(TropicalMatrix(x.m + x.n, 1, x.entries))


def format_state(x: StateVector) -> str:
    """One-line form ``(u1,...;w1,...)``."""
    return "(" + ",".join(map(fmt, x.u)) + ";" + ",".join(map(fmt, x.w)) + ")"


def parse_state(text: str) -> StateVector:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if s.count(";") != 1:
        raise ParseError(f"state literal needs exactly one ';' between u and w: {text!r}")
    halves = []
    for half in s.split(";"):
        toks = [t.strip() for t in half.split(",")]
        if not all(toks):
            raise ParseError(f"empty entry in state literal {text!r}")
        halves.append([parse_token(t) for t in toks])
    return StateVector.of(*halves)


def parse_latin(text: str) -> LatinSquare:
    lines = _Lines(text)
    lines.skip_blank()
    head, ln = lines.next("order")
    if not head.strip().isdigit():
        raise ParseError("first line must be the order n", ln, 1)
    n = int(head)
    rows = []
    for _ in range(n):
        text_row, ln = lines.next("a Latin square row")
        toks = list(_tokens(text_row))
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", ln, 1)
        for t, c in toks:
            if not t.isdigit():
                raise ParseError(f"bad symbol {t!r}", ln, c)
        rows.append([int(t) for t, _ in toks])
    try:
        return LatinSquare(tuple(map(tuple, rows)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_latin(L: LatinSquare) -> str:
    return f"{L.n}\n" + "".join(" ".join(map(str, r)) + "\n" for r in L.rows)


def format_trace(trace) -> str:
    c = "none" if trace.c is None else fmt(trace.c)
    out = [f"trace s={trace.s} r={trace.r} c={c} "
           f"cont={trace.continuation_steps} apps={trace.map_applications}"]
    out += [format_state(x) for x in trace.iterates]
    if trace.continuation:
        out.append("continuation")
        out += [format_state(x) for x in trace.continuation]
    return "\n".join(out) + "\n"


_TRACE_HEAD = re.compile(
    r"trace s=(\d+) r=(\d+) c=(\S+) cont=(\d+) apps=(\d+)\Z"
)


def parse_trace(text: str) -> dict:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty trace", 1)
    m = _TRACE_HEAD.match(lines[0].strip())
    if not m:
        raise ParseError("bad trace header", 1, 1)
    s, r, c, cont, apps = m.groups()
    out = {
        "s": int(s), "r": int(r),
        "c": None if c == "none" else parse_token(c, 1),
        "continuation_steps": int(cont), "map_applications": int(apps),
        "iterates": [], "continuation": [],
    }
    target = out["iterates"]
    for ln, text_line in enumerate(lines[1:], start=2):
        if text_line.strip() == "continuation":
            target = out["continuation"]
            continue
        try:
            target.append(parse_state(text_line))
        except ParseError as exc:
            raise ParseError(str(exc), ln) from exc
    return out


REPORT_FIELDS = ("algorithm", "lambda", "m", "n", "s", "r", "c",
                 "continuation_steps", "map_applications", "wall_time_ns")


def format_report(report: dict) -> str:
    """``key: value`` lines, then ``v:`` and one eigenvector entry per line."""
    out = []
    for key in REPORT_FIELDS:
        val = report.get(key)
        out.append(f"{key}: {'none' if val is None else fmt(val)}")
    out.append("v:")
    out += [fmt(x) for x in report["v"].entries]
    return "\n".join(out) + "\n"


def parse_report(text: str) -> dict:
    lines = text.splitlines()
    out = {}
    for ln, line in enumerate(lines, start=1):
        key, sep, val = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", ln, 1)
        key, val = key.strip(), val.strip()
        if key == "v":
            entries = [parse_token(t.strip(), i) for i, t in enumerate(lines[ln:], start=ln + 1)]
            out["v"] = StateVector.from_entries(entries, out["m"])
            return out
        if key == "algorithm":
            out[key] = val
        elif key == "lambda" or key == "c":
            out[key] = None if val == "none" else parse_token(val, ln)
        else:
            out[key] = int(val)
    raise ParseError("report has no 'v:' section", len(lines))


def read_text(path) -> str:
    return Path(path).read_text(encoding="ascii")
