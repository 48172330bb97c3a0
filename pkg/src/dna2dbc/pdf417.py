"""PDF417 high-level encoding: text and byte compaction, row indicators, symbol assembly.

Only the codeword level is covered; bar patterns are not rendered.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .ecc import EccConfig, Ring, correction_codewords


class Pdf417Error(ValueError):
    pass


class SubMode(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    MIXED = "mixed"
    PUNCT = "punct"


TEXT_SWITCH = 900
BYTE_SWITCH = 901
BYTE_SWITCH_6 = 924
PAD_CW = 900
MAX_CWS = 928

# Character tables, value -> glyph. Value 21 of PUNCT is illegible in the
# source table and left out; '/' is listed twice in MIXED and PUNCT.
_UPPER = [chr(ord("A") + i) for i in range(26)] + [" "]
_LOWER = [chr(ord("a") + i) for i in range(26)] + [" "]
_MIXED = list("0123456789&\r\t/:#-.$/+%*=^") + [None, " "]
_PUNCT = list(";<>@[\\]_`~!\r\t/:\n-.$/^") + [None] + list("*()?{}'")

_TABLES = {
    SubMode.UPPER: _UPPER,
    SubMode.LOWER: _LOWER,
    SubMode.MIXED: _MIXED,
    SubMode.PUNCT: _PUNCT,
}


def _index(table) -> Dict[str, int]:
    # later duplicates win: '/' -> 19
    return {ch: v for v, ch in enumerate(table) if ch is not None}


CHAR_VALUES = {mode: _index(table) for mode, table in _TABLES.items()}

# persistent switches: (from, to) -> value
LATCHES = {
    (SubMode.UPPER, SubMode.LOWER): 27,
    (SubMode.UPPER, SubMode.MIXED): 28,
    (SubMode.LOWER, SubMode.MIXED): 28,
    (SubMode.MIXED, SubMode.PUNCT): 25,
    (SubMode.MIXED, SubMode.LOWER): 27,
    (SubMode.MIXED, SubMode.UPPER): 28,
    (SubMode.PUNCT, SubMode.UPPER): 29,
}
T_UPP = 27  # lower only
T_PUN = 29  # upper, lower, mixed


def _latch_path(src: SubMode, dst: SubMode) -> List[Tuple[int, SubMode]]:
    """Shortest chain of persistent switches from ``src`` to ``dst``."""
    prev = {src: None}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur is dst:
            break
        for (a, b), value in LATCHES.items():
            if a is cur and b not in prev:
                prev[b] = (cur, value)
                queue.append(b)
    path = []
    node = dst
    while prev[node] is not None:
        parent, value = prev[node]
        path.append((value, node))
        node = parent
    return path[::-1]


def _run_length(text: str, start: int, mode: SubMode) -> int:
    n = 0
    values = CHAR_VALUES[mode]
    while start + n < len(text) and text[start + n] in values:
        n += 1
    return n


def text_values(text: str) -> List[int]:
    """Map characters to sub-mode values with switches inserted.

    Policy: stay in the current sub-mode while possible. A single character
    that needs another sub-mode uses a one-shot switch when one exists
    (T_PUN from any sub-mode but PUNCT, T_UPP from LOWER); longer runs, or
    characters with no one-shot route, latch persistently along the
    shortest switch path.
    """
    mode = SubMode.UPPER
    values: List[int] = []
    i = 0
    while i < len(text):
        ch = text[i]
        here = CHAR_VALUES[mode]
        if ch in here:
            values.append(here[ch])
            i += 1
            continue
        targets = [m for m in SubMode if ch in CHAR_VALUES[m]]
        if not targets:
            raise Pdf417Error(f"character {ch!r} at position {i} is not encodable in text mode")
        single = i + 1 == len(text) or text[i + 1] in here
        if single:
            if SubMode.PUNCT in targets and mode is not SubMode.PUNCT:
                values += [T_PUN, CHAR_VALUES[SubMode.PUNCT][ch]]
                i += 1
                continue
            if SubMode.UPPER in targets and mode is SubMode.LOWER:
                values += [T_UPP, CHAR_VALUES[SubMode.UPPER][ch]]
                i += 1
                continue
        best = min(
            targets,
            key=lambda m: (len(_latch_path(mode, m)), -_run_length(text, i, m)),
        )
        for value, mode in _latch_path(mode, best):
            values.append(value)
    return values


def text_high_level(text: str) -> List[int]:
    """Text compaction: two sub-mode values per codeword, ``hi * 30 + lo``."""
    values = text_values(text)
    if len(values) % 2:
        values.append(T_PUN)
    return [values[i] * 30 + values[i + 1] for i in range(0, len(values), 2)]


def group_value(group: bytes) -> int:
    """Six bytes read as a base-256 number, first byte most significant."""
    if len(group) != 6:
        raise ValueError("byte groups are 6 bytes long")
    return int.from_bytes(group, "big")


def base900_digits(value: int, count: int = 5) -> List[int]:
    digits = []
    for _ in range(count):
        value, digit = divmod(value, 900)
        digits.append(digit)
    return digits[::-1]


def byte_high_level(data: bytes) -> List[int]:
    """Byte compaction: 6 bytes -> 5 base-900 codewords, leftovers one per codeword."""
    if not data:
        return []
    cws = [BYTE_SWITCH_6 if len(data) % 6 == 0 else BYTE_SWITCH]
    full = len(data) - len(data) % 6
    for i in range(0, full, 6):
        cws.extend(base900_digits(group_value(data[i:i + 6])))
    cws.extend(data[full:])
    return cws


def row_indicator(row: int, total_rows: int, data_columns: int, level: int, side: str) -> int:
    """Left or right row-indicator codeword for 0-based ``row``."""
    if not 3 <= total_rows <= 90:
        raise Pdf417Error(f"total_rows must be 3..90, got {total_rows}")
    if not 1 <= data_columns <= 30:
        raise Pdf417Error(f"data_columns must be 1..30, got {data_columns}")
    if not 0 <= row < total_rows:
        raise Pdf417Error(f"row {row} outside 0..{total_rows - 1}")
    if not 0 <= level <= 8:
        raise Pdf417Error(f"level must be 0..8, got {level}")
    if side not in ("left", "right"):
        raise Pdf417Error("side must be 'left' or 'right'")

    rows_part = (total_rows - 1) // 3
    level_part = level * 3 + (total_rows - 1) % 3
    cols_part = data_columns - 1
    table = row % 3 + 1
    left, right = {
        1: (rows_part, cols_part),
        2: (level_part, rows_part),
        3: (cols_part, level_part),
    }[table]
    x = left if side == "left" else right
    return (row // 3) * 30 + x


@dataclass
class Pdf417Symbol:
    rows: List[List[int]]
    level: int
    data_columns: int
    pad_count: int
    left_indicators: List[int] = field(default_factory=list)
    right_indicators: List[int] = field(default_factory=list)

    @property
    def codewords(self) -> List[int]:
        return [cw for row in self.rows for cw in row]


def assemble(data: Sequence[int], data_columns: int, level: int) -> Pdf417Symbol:
    """Lay out descriptor, data, 900-padding and parity into rows.

    The descriptor counts itself, the data and the padding, but not the
    parity. Parity is computed over descriptor + data + padding.
    """
    if not 1 <= data_columns <= 30:
        raise Pdf417Error(f"data_columns must be 1..30, got {data_columns}")
    for i, cw in enumerate(data):
        if not 0 <= cw <= MAX_CWS:
            raise Pdf417Error(f"codeword {i} = {cw!r} outside 0..928")
    config = EccConfig(level, Ring.MOD929)
    k = config.parity_count
    used = 1 + len(data) + k
    if used > MAX_CWS:
        raise Pdf417Error(f"capacity exceeded: {used} codewords > {MAX_CWS}")
    n_rows = max(3, -(-used // data_columns))
    if n_rows > 90:
        raise Pdf417Error(f"capacity exceeded: {n_rows} rows > 90")
    pad = n_rows * data_columns - used
    if used + pad > MAX_CWS:
        raise Pdf417Error(f"capacity exceeded: {used + pad} codewords > {MAX_CWS}")

    body = [1 + len(data) + pad] + list(data) + [PAD_CW] * pad
    cws = body + correction_codewords(body, config)
    rows = [cws[r * data_columns:(r + 1) * data_columns] for r in range(n_rows)]
    return Pdf417Symbol(
        rows=rows,
        level=level,
        data_columns=data_columns,
        pad_count=pad,
        left_indicators=[row_indicator(r, n_rows, data_columns, level, "left") for r in range(n_rows)],
        right_indicators=[row_indicator(r, n_rows, data_columns, level, "right") for r in range(n_rows)],
    )
