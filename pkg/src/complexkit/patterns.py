"""Pattern codecs: run-length-encoded (RLE) and plaintext formats.

Both codecs are square-lattice only and byte-exact: encoding a canonical
grid always produces the same bytes, and decode(encode(g)) recovers the
canonicalized grid. RLE carries an optional rule in its header; colors
1..24 use the letters A..X (color 1 is written as ``o``).
"""

from __future__ import annotations

import re

from .automaton import CONWAY_LIFE, RuleSet
from .grid import Coordinate, Grid, Topology


class PatternFormatError(ValueError):
    """Malformed pattern text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnsupportedFormatError(ValueError):
    """Grid cannot be represented in the requested format."""


_HEADER_RE = re.compile(
    r"^x\s*=\s*(\d+)\s*,\s*y\s*=\s*(\d+)(?:\s*,\s*rule\s*=\s*(\S+))?\s*$"
)


def _decode_rle(text: str) -> tuple[Grid, RuleSet | None]:
    lines = text.split("\n")
    rule: RuleSet | None = None
    body_start = 0
    for i, line in enumerate(lines):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _HEADER_RE.match(stripped)
        if m:
            if m.group(3):
                try:
                    rule = RuleSet.parse(m.group(3))
                except ValueError as exc:
                    raise PatternFormatError(str(exc), i + 1, 1) from None
            body_start = i + 1
        else:
            body_start = i  # headerless body
        break
    else:
        raise PatternFormatError("missing '!' terminator", len(lines), 1)

    cells: dict[Coordinate, int] = {}
    x = y = 0
    count = 0
    have_count = False
    for li in range(body_start, len(lines)):
        for ci, ch in enumerate(lines[li]):
            col = ci + 1
            if ch.isspace():
                if have_count:
                    raise PatternFormatError("run count split by whitespace", li + 1, col)
                continue
            if ch.isdigit():
                count = count * 10 + int(ch)
                have_count = True
                continue
            n = count if have_count else 1
            if have_count and count == 0:
                raise PatternFormatError("run count must be positive", li + 1, col)
            count = 0
            have_count = False
            if ch == "b":
                x += n
            elif ch == "o":
                for _ in range(n):
                    cells[(x, y)] = 1
                    x += 1
            elif "A" <= ch <= "X":
                state = ord(ch) - ord("A") + 1
                for _ in range(n):
                    cells[(x, y)] = state
                    x += 1
            elif ch == "$":
                y += n
                x = 0
            elif ch == "!":
                return Grid(cells), rule
            else:
                raise PatternFormatError(f"unknown symbol {ch!r}", li + 1, col)
    raise PatternFormatError("missing '!' terminator", len(lines), 1)


def _rle_symbol(state: int) -> str:
    if state == 0:
        return "b"
    if state == 1:
        return "o"
    if state <= 24:
        return chr(ord("A") + state - 1)
    raise UnsupportedFormatError(f"RLE supports at most 24 colors, got state {state}")


def _encode_rle(grid: Grid, rule: RuleSet | None) -> str:
    g = grid.canonicalize()
    rule_str = str(rule) if rule is not None else str(CONWAY_LIFE)
    box = g.bounding_box()
    if box is None:
        return f"x = 0, y = 0, rule = {rule_str}\n!"
    (_, _), (max_x, max_y) = box
    width, height = max_x + 1, max_y + 1

    def encode_row(y: int) -> str:
        row = [g.state((x, y)) for x in range(width)]
        while row and row[-1] == 0:
            row.pop()
        out: list[str] = []
        run_state, run_len = None, 0
        for state in row:
            if state == run_state:
                run_len += 1
            else:
                if run_state is not None:
                    out.append(_rle_symbol(run_state) if run_len == 1 else f"{run_len}{_rle_symbol(run_state)}")
                run_state, run_len = state, 1
        if run_state is not None:
            out.append(_rle_symbol(run_state) if run_len == 1 else f"{run_len}{_rle_symbol(run_state)}")
        return "".join(out)

    tokens: list[str] = []
    separators = 0  # '$' count owed before the next non-blank row
    for y in range(height):
        if y > 0:
            separators += 1
        row_str = encode_row(y)
        if row_str:
            if separators:
                tokens.append("$" if separators == 1 else f"{separators}$")
                separators = 0
            tokens.append(row_str)
    return f"x = {width}, y = {height}, rule = {rule_str}\n" + "".join(tokens) + "!"


def _decode_plaintext(text: str) -> tuple[Grid, RuleSet | None]:
    cells: dict[Coordinate, int] = {}
    y = 0
    for li, line in enumerate(text.split("\n")):
        if line.startswith("!"):
            continue
        if line.strip() == "" and y == 0:
            continue
        for ci, ch in enumerate(line.rstrip("\r")):
            if ch == ".":
                continue
            if ch == "O":
                cells[(ci, y)] = 1
            else:
                raise PatternFormatError(f"unknown symbol {ch!r}", li + 1, ci + 1)
        y += 1
    return Grid(cells), None


def _encode_plaintext(grid: Grid) -> str:
    g = grid.canonicalize()
    box = g.bounding_box()
    if box is None:
        return ""
    (_, _), (max_x, max_y) = box
    rows = []
    for y in range(max_y + 1):
        chars = []
        for x in range(max_x + 1):
            state = g.state((x, y))
            if state > 1:
                raise UnsupportedFormatError("plaintext cannot represent multi-state cells")
            chars.append("O" if state else ".")
        rows.append("".join(chars))
    return "\n".join(rows) + "\n"


def decode_pattern(text: str, format: str = "rle") -> tuple[Grid, RuleSet | None]:
    """Decode pattern text; the grid is anchored with its top-left at the origin."""
    if format == "rle":
        return _decode_rle(text)
    if format == "plaintext":
        return _decode_plaintext(text)
    raise ValueError(f"unknown pattern format: {format!r}")


def encode_pattern(grid: Grid, format: str = "rle", rule: RuleSet | None = None) -> str:
    """Encode ``canonicalize(grid)`` deterministically in the given format."""
    if grid.topology is not Topology.SQUARE:
        raise UnsupportedFormatError("pattern codecs support square grids only")
    if format == "rle":
        return _encode_rle(grid, rule)
    if format == "plaintext":
        if rule is not None:
            raise ValueError("plaintext format carries no rule")
        return _encode_plaintext(grid)
    raise ValueError(f"unknown pattern format: {format!r}")
