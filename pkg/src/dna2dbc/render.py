"""Plain (P1) portable bitmap and ASCII renderings of module grids."""
from __future__ import annotations

from typing import List

from .layout import ModuleGrid


class PbmError(ValueError):
    pass


def grid_to_pbm(grid: ModuleGrid) -> str:
    lines = ["P1", f"{grid.width} {grid.height}"]
    lines.extend(" ".join(str(b) for b in row) for row in grid.bits)
    return "\n".join(lines) + "\n"


def _tokens(text: str):
    """Yield ``(line, token)`` pairs, skipping ``#`` comments."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            yield lineno, tok


def pbm_to_grid(text: str) -> ModuleGrid:
    stream = _tokens(text)
    try:
        _, magic = next(stream)
    except StopIteration:
        raise PbmError("empty bitmap") from None
    if magic != "P1":
        if magic[:1] == "P" and magic[1:].isdigit():
            raise PbmError(f"unsupported variant {magic!r}: only plain P1 bitmaps are read")
        raise PbmError(f"bad magic {magic!r}, expected 'P1'")

    dims = []
    for lineno, tok in stream:
        if not tok.isdigit():
            raise PbmError(f"line {lineno}: bad dimension {tok!r}")
        dims.append(int(tok))
        if len(dims) == 2:
            break
    if len(dims) != 2:
        raise PbmError("missing width/height")
    width, height = dims

    bits: List[int] = []
    for lineno, tok in stream:
        # P1 allows digits with or without separating whitespace
        for ch in tok:
            if ch not in "01":
                raise PbmError(f"line {lineno}: non-binary token {tok!r}")
            bits.append(int(ch))
    if len(bits) != width * height:
        raise PbmError(f"expected {width * height} pixels for {width}x{height}, got {len(bits)}")
    rows = [tuple(bits[r * width:(r + 1) * width]) for r in range(height)]
    return ModuleGrid(height, width, tuple(rows))


def grid_to_ascii(grid: ModuleGrid) -> str:
    return "".join("".join("#" if b else "." for b in row) + "\n" for row in grid.bits)
