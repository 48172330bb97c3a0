"""FASTA records <-> DNA2DBC symbols, end to end.

The correction level is not stored in the symbol. A decoder that is not told
the level tries every level. A reading is accepted only when every (level,
fill) combination that verifies and decodes to well-formed records yields the
same records; disagreeing readings are reported as ambiguous.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

from . import ecc
from .ecc import DESCRIPTOR_CWS, DESCRIPTOR_LIMIT, EccConfig, Ring
from .fasta import DnaRecord
from .layout import (
    ModuleGrid,
    Payload,
    build_payload,
    descriptor_digits,
    grid_codewords,
    grid_ncol,
    to_grid,
)
from .symbology import (
    Mode,
    SymbologyError,
    decode_tokens,
    detokenize,
    encode_tokens,
    tokenize_records,
)

LEVELS = tuple(sorted(ecc.COEFFICIENTS_929))
MAX_LEVEL = LEVELS[-1]


class DecodeError(ValueError):
    pass


class VerificationError(DecodeError):
    """No reading of the symbol passes the parity check."""


class AmbiguousDecode(DecodeError):
    """More than one reading of the symbol passes the parity check."""


@dataclass
class EncodedSymbol:
    payload: Payload
    grid: ModuleGrid
    config: EccConfig

    @property
    def ncol(self) -> int:
        return self.payload.ncol


@dataclass
class DecodedSymbol:
    records: List[DnaRecord]
    level: int
    payload: Payload
    filled: dict = field(default_factory=dict)


def default_level(n_data: int) -> int:
    """Recommended level, capped at the highest level with coefficients."""
    return min(ecc.recommended_level(max(n_data, 1)), MAX_LEVEL)


def encode_records(
    records: Sequence[DnaRecord],
    level: Optional[int] = None,
    start_mode: Mode = Mode.DNA,
) -> EncodedSymbol:
    data = encode_tokens(tokenize_records(records), start_mode)
    if level is None:
        level = default_level(len(data))
    config = EccConfig(level, Ring.MOD8)
    payload = build_payload(data, config)
    return EncodedSymbol(payload, to_grid(payload), config)


def _descriptor_candidates(cws, erased, ncol, parity_count):
    """Descriptor values consistent with the readable codewords."""
    known = {i: cws[i] for i in range(DESCRIPTOR_CWS) if i not in erased}
    lo = max((ncol - 1) ** 2 + 1, DESCRIPTOR_CWS + parity_count)
    hi = min(ncol * ncol, DESCRIPTOR_LIMIT)
    for length in range(lo, hi + 1):
        digits = descriptor_digits(length)
        if any(digits[i] != v for i, v in known.items()):
            continue
        if any(cws[i] for i in range(length, ncol * ncol) if i not in erased):
            continue
        yield length


def _readings(cws, erased, ncol, config, start_mode):
    k = config.parity_count
    for length in _descriptor_candidates(cws, erased, ncol, k):
        body: List[Optional[int]] = descriptor_digits(length) + [
            None if i in erased else cws[i] for i in range(DESCRIPTOR_CWS, length)
        ]
        for fill in ecc.verifying_fills(body, config):
            split = length - k
            try:
                records = detokenize(decode_tokens(fill[DESCRIPTOR_CWS:split], start_mode))
            except SymbologyError:
                continue
            payload = Payload(fill[:DESCRIPTOR_CWS], fill[DESCRIPTOR_CWS:split], fill[split:],
                              ncol * ncol - length)
            filled = {i: fill[i] for i in erased if i < length}
            yield DecodedSymbol(records, config.level, payload, filled)


def decode_grid(
    grid: ModuleGrid,
    level: Optional[int] = None,
    erasures: Iterable[int] = (),
    max_erasures: int = 3,
    start_mode: Mode = Mode.DNA,
) -> DecodedSymbol:
    """Decode a symbol, repairing codewords listed in ``erasures``.

    Raises:
        LayoutError: bad dimensions or positioning pattern.
        SearchBudgetExceeded: more erasures than ``max_erasures``.
        VerificationError: no consistent reading.
        AmbiguousDecode: several consistent readings.
    """
    cws = grid_codewords(grid)
    ncol = grid_ncol(grid)
    erased = set(erasures)
    bad = [i for i in erased if not 0 <= i < ncol * ncol]
    if bad:
        raise DecodeError(f"erasure indices outside the {ncol * ncol} codewords: {sorted(bad)}")
    if len(erased) > max_erasures:
        raise ecc.SearchBudgetExceeded(
            f"search budget exceeded: {len(erased)} erased codewords > {max_erasures}"
        )

    levels = LEVELS if level is None else (level,)
    found: List[DecodedSymbol] = []
    for lv in levels:
        config = EccConfig(lv, Ring.MOD8)
        for reading in _readings(cws, erased, ncol, config, start_mode):
            # readings that differ only in discarded pad bytes agree on content
            if any(f.records == reading.records for f in found):
                continue
            found.append(reading)
            if len(found) > 1:
                raise AmbiguousDecode(
                    "several readings pass the parity check"
                    + ("" if level is not None else "; pass the correction level explicitly")
                )
    if not found:
        raise VerificationError("no reading of the symbol passes the parity check")
    return found[0]
