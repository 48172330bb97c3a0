"""Reading and writing FASTA nucleotide files.

Documents are treated as 8-bit text: ``bytes`` input is decoded as Latin-1 so
every header byte maps to exactly one character. Non-ASCII bytes are only
legal inside header lines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Union

ALPHABET = frozenset("ACGTU")
_SEQUENCE_CHARS = ALPHABET | frozenset("acgtu")


class FastaError(ValueError):
    """Raised for malformed FASTA input."""


@dataclass(frozen=True)
class DnaRecord:
    """One FASTA entry.

    ``header`` is everything after the ``>`` on the header line, verbatim.
    ``sequence`` is an uppercase string over A, C, G, T and U.
    """

    header: str
    sequence: str = ""

    def __post_init__(self) -> None:
        if "\n" in self.header or "\r" in self.header:
            raise ValueError("header must not contain line breaks")
        bad = set(self.sequence) - ALPHABET
        if bad:
            raise ValueError(f"sequence contains non-nucleotide letters: {sorted(bad)!r}")


def parse_fasta(document: Union[str, bytes]) -> List[DnaRecord]:
    """Parse a FASTA document into records.

    Multi-line sequences are concatenated, whitespace inside sequence lines is
    dropped and bases are uppercased. Blank lines are ignored anywhere.

    Raises:
        FastaError: sequence data before the first header, or a sequence line
            holding a character outside A/C/G/T/U and whitespace. The message
            names the 1-based line number and the offending byte.
    """
    if isinstance(document, bytes):
        document = document.decode("latin-1")

    records: List[DnaRecord] = []
    header = None
    parts: List[str] = []

    for lineno, line in enumerate(document.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if line.startswith(">"):
            if header is not None:
                records.append(DnaRecord(header, "".join(parts)))
            header, parts = line[1:], []
            continue
        if not line.strip():
            continue
        if header is None:
            raise FastaError(f"line {lineno}: sequence data before the first '>' header")
        for ch in line:
            if ch in _SEQUENCE_CHARS:
                parts.append(ch.upper())
            elif not ch.isspace():
                raise FastaError(
                    f"line {lineno}: invalid sequence byte {ch!r} (0x{ord(ch):02x})"
                )

    if header is not None:
        records.append(DnaRecord(header, "".join(parts)))
    return records


def serialize_fasta(records: Iterable[DnaRecord], line_width: int = 60) -> str:
    """Format records as FASTA, wrapping sequences at ``line_width`` bases."""
    if line_width < 1:
        raise ValueError("line_width must be a positive integer")
    out = []
    for rec in records:
        out.append(f">{rec.header}\n")
        seq = rec.sequence
        for i in range(0, len(seq), line_width):
            out.append(seq[i:i + line_width] + "\n")
    return "".join(out)
