"""DNA2DBC payload assembly and the bordered module grid.

Wire order of codewords: 4 descriptor CWs, data, parity, then zero padding
up to ``ncol * ncol``. The descriptor holds ``4 + len(data) + len(parity)``
as four base-8 digits, most significant first. Parity is computed over
descriptor + data.

Grid frame, for height ``H = ncol + 2`` and width ``W = 3 * ncol + 2``:

* top row: 1 on even columns, 0 on odd columns
* bottom row: all 1
* left column (between top and bottom rows): all 1
* right column (between top and bottom rows): 1 on even rows, 0 on odd rows

The interior holds ``ncol`` codewords per row, 3 bits each, MSB first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from .ecc import DESCRIPTOR_CWS, DESCRIPTOR_LIMIT, EccConfig, Ring, correction_codewords

BITS_PER_CW = 3


class LayoutError(ValueError):
    pass


class CapacityError(LayoutError):
    pass


class DimensionError(LayoutError):
    pass


class FrameError(LayoutError):
    """A positioning border bit has the wrong value."""

    def __init__(self, row: int, col: int, expected: int):
        self.row, self.col, self.expected = row, col, expected
        super().__init__(
            f"positioning pattern violation at ({row},{col}): expected {expected}"
        )


class TrailingGarbageError(LayoutError):
    pass


@dataclass
class Payload:
    descriptor: List[int]
    data: List[int]
    parity: List[int]
    pad_count: int = 0

    @property
    def length(self) -> int:
        """Descriptor value: meaningful codewords, descriptor included."""
        return len(self.descriptor) + len(self.data) + len(self.parity)

    @property
    def ncol(self) -> int:
        return compute_ncol(self.length)

    @property
    def codewords(self) -> List[int]:
        return self.descriptor + self.data + self.parity + [0] * self.pad_count


@dataclass(frozen=True)
class ModuleGrid:
    height: int
    width: int
    bits: Tuple[Tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.bits) != self.height or any(len(r) != self.width for r in self.bits):
            raise ValueError("bit rows do not match the declared dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ModuleGrid":
        rows = tuple(tuple(int(b) for b in r) for r in rows)
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def __getitem__(self, rc: Tuple[int, int]) -> int:
        r, c = rc
        return self.bits[r][c]


def compute_ncol(total_cws: int) -> int:
    """Smallest ``n`` with ``n * n >= total_cws``."""
    if total_cws < 1:
        raise ValueError("total_cws must be at least 1")
    n = math.isqrt(total_cws)
    return n if n * n == total_cws else n + 1


def descriptor_digits(value: int) -> List[int]:
    if not 0 <= value <= DESCRIPTOR_LIMIT:
        raise CapacityError(f"descriptor value {value} exceeds {DESCRIPTOR_LIMIT}")
    return [(value >> shift) & 7 for shift in (9, 6, 3, 0)]


def descriptor_value(digits: Sequence[int]) -> int:
    value = 0
    for d in digits:
        value = value * 8 + d
    return value


def build_payload(data: Sequence[int], config: EccConfig) -> Payload:
    if config.ring is not Ring.MOD8:
        raise LayoutError("DNA2DBC payloads use the mod-8 ring")
    length = DESCRIPTOR_CWS + len(data) + config.parity_count
    if length > DESCRIPTOR_LIMIT:
        raise CapacityError(
            f"capacity exceeded: {length} codewords > descriptor limit {DESCRIPTOR_LIMIT}"
        )
    descriptor = descriptor_digits(length)
    data = list(data)
    parity = correction_codewords(descriptor + data, config)
    ncol = compute_ncol(length)
    return Payload(descriptor, data, parity, ncol * ncol - length)


def grid_shape(ncol: int) -> Tuple[int, int]:
    return ncol + 2, BITS_PER_CW * ncol + 2


def frame_cells(height: int, width: int) -> Iterator[Tuple[int, int, int]]:
    """Border cells as ``(row, col, expected_bit)`` in row-major order."""
    for r in range(height):
        if r == 0:
            for c in range(width):
                yield r, c, 1 if c % 2 == 0 else 0
        elif r == height - 1:
            for c in range(width):
                yield r, c, 1
        else:
            yield r, 0, 1
            yield r, width - 1, 1 if r % 2 == 0 else 0


def data_cell_index(row: int, col: int, ncol: int) -> int:
    """Codeword index that owns interior module ``(row, col)``."""
    return (row - 1) * ncol + (col - 1) // BITS_PER_CW


def to_grid(payload: Payload) -> ModuleGrid:
    cws = payload.codewords
    ncol = compute_ncol(len(cws))
    if ncol * ncol != len(cws):
        raise LayoutError("payload does not fill a square codeword matrix")
    height, width = grid_shape(ncol)
    rows = [[0] * width for _ in range(height)]
    for r, c, bit in frame_cells(height, width):
        rows[r][c] = bit
    for idx, cw in enumerate(cws):
        r, col0 = divmod(idx, ncol)
        for b in range(BITS_PER_CW):
            rows[r + 1][1 + col0 * BITS_PER_CW + b] = (cw >> (2 - b)) & 1
    return ModuleGrid.from_rows(rows)


def grid_ncol(grid: ModuleGrid) -> int:
    n = grid.height - 2
    if n < 1 or grid.width != BITS_PER_CW * n + 2:
        raise DimensionError(
            f"not a DNA2DBC grid: {grid.height}x{grid.width} is not (n+2)x(3n+2)"
        )
    return n


def check_frame(grid: ModuleGrid) -> None:
    grid_ncol(grid)
    for r, c, bit in frame_cells(grid.height, grid.width):
        if grid.bits[r][c] != bit:
            raise FrameError(r, c, bit)


def grid_codewords(grid: ModuleGrid) -> List[int]:
    """Validate the frame and read every interior codeword row-major."""
    check_frame(grid)
    ncol = grid_ncol(grid)
    cws = []
    for r in range(1, ncol + 1):
        row = grid.bits[r]
        for c in range(ncol):
            start = 1 + c * BITS_PER_CW
            a, b, d = row[start:start + BITS_PER_CW]
            cws.append((a << 2) | (b << 1) | d)
    return cws


def split_codewords(cws: Sequence[int], parity_count: int) -> Payload:
    """Cut a full ``ncol * ncol`` codeword list into a :class:`Payload`."""
    ncol = compute_ncol(len(cws))
    length = descriptor_value(cws[:DESCRIPTOR_CWS])
    if not DESCRIPTOR_CWS + parity_count <= length <= len(cws) or compute_ncol(length) != ncol:
        raise LayoutError(
            f"descriptor value {length} is inconsistent with a {ncol}x{ncol} matrix"
        )
    for i in range(length, len(cws)):
        if cws[i]:
            raise TrailingGarbageError(f"trailing garbage: pad codeword {i} = {cws[i]}")
    split = length - parity_count
    return Payload(
        list(cws[:DESCRIPTOR_CWS]),
        list(cws[DESCRIPTOR_CWS:split]),
        list(cws[split:length]),
        len(cws) - length,
    )


def from_grid(grid: ModuleGrid, config: EccConfig) -> Payload:
    """Inverse of :func:`to_grid`. Parity is not checked here."""
    return split_codewords(grid_codewords(grid), config.parity_count)
