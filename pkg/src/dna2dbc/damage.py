"""Seeded symbol damage and recovery trials.

Module selection uses a 64-bit linear congruential generator so trials are
reproducible independently of Python's ``random``:

    state = (6364136223846793005 * state + 1442695040888963407) mod 2**64

seeded with ``seed mod 2**64``; each draw advances once and uses the high 32
bits, reduced modulo the range. Selection is a partial Fisher-Yates shuffle
of the candidate list in row-major order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import ecc
from .codec import AmbiguousDecode, VerificationError, decode_grid, encode_records
from .ecc import EccConfig
from .fasta import DnaRecord
from .layout import BITS_PER_CW, ModuleGrid, data_cell_index, grid_ncol

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

RECOVERED = "recovered"
AMBIGUOUS = "ambiguous"
UNRECOVERABLE = "unrecoverable"

Cell = Tuple[int, int]
Rect = Tuple[int, int, int, int]  # top, left, bottom, right (exclusive)


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, n: int) -> int:
        return self.next() % n

    def sample(self, items: Sequence, count: int) -> list:
        pool = list(items)
        if count > len(pool):
            raise ValueError(f"cannot choose {count} of {len(pool)} items")
        for i in range(count):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]


@dataclass
class ErasureMask:
    modules: List[Cell] = field(default_factory=list)
    codewords: List[int] = field(default_factory=list)


def _data_cells(grid: ModuleGrid) -> List[Cell]:
    ncol = grid_ncol(grid)
    return [(r, c) for r in range(1, ncol + 1) for c in range(1, BITS_PER_CW * ncol + 1)]


def erase_modules(
    grid: ModuleGrid,
    count: int,
    seed: int = 0,
    region: Union[None, Rect, Iterable[Cell]] = None,
) -> Tuple[ModuleGrid, ErasureMask]:
    """Blank ``count`` seeded-random modules of the data region.

    ``region`` narrows the candidates to a rectangle ``(top, left, bottom,
    right)`` with exclusive bottom/right, or to an explicit list of cells.
    Erased modules are written as 0 in the returned grid; the mask says
    which modules and codewords are unknown.
    """
    ncol = grid_ncol(grid)
    interior = set(_data_cells(grid))
    if region is None:
        candidates = sorted(interior)
    elif isinstance(region, tuple) and len(region) == 4 and all(isinstance(v, int) for v in region):
        top, left, bottom, right = region
        candidates = [(r, c) for r in range(top, bottom) for c in range(left, right)]
    else:
        candidates = sorted(set(region))
    outside = [cell for cell in candidates if cell not in interior]
    if outside:
        raise ValueError(f"cells outside the data region: {outside[:5]}")
    if count > len(candidates):
        raise ValueError(f"cannot erase {count} modules from a region of {len(candidates)}")

    chosen = sorted(Lcg(seed).sample(candidates, count))
    rows = [list(r) for r in grid.bits]
    for r, c in chosen:
        rows[r][c] = 0
    cws = sorted({data_cell_index(r, c, ncol) for r, c in chosen})
    return ModuleGrid.from_rows(rows), ErasureMask(chosen, cws)


def codeword_cells(index: int, ncol: int) -> List[Cell]:
    r, c = divmod(index, ncol)
    return [(r + 1, 1 + c * BITS_PER_CW + b) for b in range(BITS_PER_CW)]


@dataclass
class DamageReport:
    erased_cw_count: int
    outcome: str
    decoded_equals_original: bool
    level: int
    seed: int
    erased_codewords: List[int] = field(default_factory=list)
    detail: str = ""

    def __post_init__(self) -> None:
        if self.decoded_equals_original and self.outcome != RECOVERED:
            raise ValueError("decoded_equals_original requires a recovered outcome")

    @property
    def silently_wrong(self) -> bool:
        return self.outcome == RECOVERED and not self.decoded_equals_original

    def as_text(self) -> str:
        lines = [
            f"erased {self.erased_cw_count} codeword(s) at level {self.level} (seed {self.seed})",
            f"outcome: {self.outcome}",
            f"decoded matches original: {'yes' if self.decoded_equals_original else 'no'}",
        ]
        if self.detail:
            lines.append(f"detail: {self.detail}")
        return "\n".join(lines) + "\n"

    def as_keyvalue(self) -> str:
        pairs = [
            ("erased_cw_count", self.erased_cw_count),
            ("erased_codewords", ",".join(map(str, self.erased_codewords))),
            ("outcome", self.outcome),
            ("decoded_equals_original", str(self.decoded_equals_original).lower()),
            ("level", self.level),
            ("seed", self.seed),
        ]
        return "".join(f"{k}={v}\n" for k, v in pairs)


def damage_codewords(grid: ModuleGrid, seed: int, erase_count: int) -> Tuple[ModuleGrid, ErasureMask]:
    """Erase all modules of ``erase_count`` seeded-random codewords."""
    ncol = grid_ncol(grid)
    picks = Lcg(seed).sample(range(ncol * ncol), erase_count)
    cells = [cell for i in picks for cell in codeword_cells(i, ncol)]
    return erase_modules(grid, len(cells), seed, cells)


def trial_on_grid(
    grid: ModuleGrid,
    original: Sequence[DnaRecord],
    config: EccConfig,
    seed: int,
    erase_count: int,
) -> Tuple[DamageReport, ModuleGrid, ErasureMask]:
    damaged, mask = damage_codewords(grid, seed, erase_count)
    decoded: Optional[List[DnaRecord]] = None
    detail = ""
    try:
        result = decode_grid(
            damaged,
            level=config.level,
            erasures=mask.codewords,
            max_erasures=len(mask.codewords),
        )
    except AmbiguousDecode as exc:
        outcome, detail = AMBIGUOUS, str(exc)
    except (VerificationError, ecc.EccError) as exc:
        outcome, detail = UNRECOVERABLE, str(exc)
    else:
        outcome, decoded = RECOVERED, result.records
    report = DamageReport(
        erased_cw_count=len(mask.codewords),
        outcome=outcome,
        decoded_equals_original=decoded is not None and list(decoded) == list(original),
        level=config.level,
        seed=seed,
        erased_codewords=mask.codewords,
        detail=detail,
    )
    return report, damaged, mask


def run_trial(record: DnaRecord, config: EccConfig, seed: int, erase_count: int) -> DamageReport:
    """Encode ``record``, erase codewords, decode with recovery and compare."""
    symbol = encode_records([record], level=config.level)
    report, _, _ = trial_on_grid(symbol.grid, [record], config, seed, erase_count)
    return report


def recovery_rate(reports: Iterable[DamageReport]) -> float:
    reports = list(reports)
    if not reports:
        return 0.0
    return sum(r.outcome == RECOVERED for r in reports) / len(reports)
