"""Token streams <-> 3-bit codeword streams.

DNA mode spends one codeword per base. Text mode packs three 8-bit
characters into 24 bits and emits them as eight 3-bit codewords. Codeword 6
switches DNA -> text; the byte 0xFF inside a text group switches back.
"""
from __future__ import annotations

import enum
from typing import Iterable, List, Sequence, Union

from .fasta import DnaRecord


class SymbologyError(ValueError):
    """Raised when a codeword or token stream cannot be translated."""


class Nucleotide(str, enum.Enum):
    A = "A"
    C = "C"
    G = "G"
    T = "T"
    U = "U"


class Mode(enum.Enum):
    DNA = "dna"
    TEXT = "text"


#: A token is either a base or a text byte (0..254).
Token = Union[Nucleotide, int]

BASE_CODES = {
    Nucleotide.A: 1,
    Nucleotide.C: 2,
    Nucleotide.G: 3,
    Nucleotide.T: 4,
    Nucleotide.U: 5,
}
CODE_BASES = {v: k for k, v in BASE_CODES.items()}
SWITCH_TO_TEXT = 6
RESERVED_CODES = frozenset({0, 7})
SWITCH_TO_DNA = 0xFF
PAD_BYTE = 0x20
CWS_PER_GROUP = 8


def is_text(token: Token) -> bool:
    return not isinstance(token, Nucleotide)


def tokenize(record: DnaRecord) -> List[Token]:
    """``'>' + header + LF`` as text bytes, then one token per base."""
    raw = (">" + record.header + "\n").encode("latin-1")
    if SWITCH_TO_DNA in raw:
        raise SymbologyError("header byte 0xff collides with the switch-to-DNA symbol")
    tokens: List[Token] = list(raw)
    tokens.extend(Nucleotide(b) for b in record.sequence)
    return tokens


def tokenize_records(records: Iterable[DnaRecord]) -> List[Token]:
    tokens: List[Token] = []
    for rec in records:
        tokens.extend(tokenize(rec))
    return tokens


def detokenize(tokens: Sequence[Token]) -> List[DnaRecord]:
    """Rebuild records from a token stream produced by :func:`tokenize_records`.

    Spaces between a header's line feed and the next record or base are text
    padding and are dropped.
    """
    records: List[DnaRecord] = []
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        if tok == PAD_BYTE:
            i += 1
            continue
        if tok != ord(">"):
            raise SymbologyError(f"token {i}: expected record start '>', got {tok!r}")
        i += 1
        header = bytearray()
        while True:
            if i >= n:
                raise SymbologyError("stream ended inside a header")
            tok = tokens[i]
            i += 1
            if not is_text(tok):
                raise SymbologyError(f"token {i - 1}: base inside a header")
            if tok == 0x0A:
                break
            header.append(tok)
        while i < n and tokens[i] == PAD_BYTE:
            i += 1
        seq = []
        while i < n and not is_text(tokens[i]):
            seq.append(tokens[i].value)
            i += 1
        records.append(DnaRecord(header.decode("latin-1"), "".join(seq)))
    return records


def pack_text(data: bytes) -> List[int]:
    """Pack bytes (length a multiple of 3) into 3-bit codewords, MSB first."""
    if len(data) % 3:
        raise ValueError("text groups must be a multiple of 3 bytes")
    cws: List[int] = []
    for i in range(0, len(data), 3):
        word = int.from_bytes(data[i:i + 3], "big")
        cws.extend((word >> shift) & 7 for shift in range(21, -1, -3))
    return cws


def unpack_text(cws: Sequence[int]) -> bytes:
    if len(cws) % CWS_PER_GROUP:
        raise SymbologyError("truncated text group")
    out = bytearray()
    for i in range(0, len(cws), CWS_PER_GROUP):
        word = 0
        for cw in cws[i:i + CWS_PER_GROUP]:
            word = (word << 3) | cw
        out.extend(word.to_bytes(3, "big"))
    return bytes(out)


def _text_run(run: List[int], switch_follows: bool) -> List[int]:
    # pad spaces go before the switch byte so it closes its group
    tail = 1 if switch_follows else 0
    pad = -(len(run) + tail) % 3
    payload = bytes(run) + bytes([PAD_BYTE]) * pad
    if switch_follows:
        payload += bytes([SWITCH_TO_DNA])
    return pack_text(payload)


def encode_tokens(tokens: Sequence[Token], start_mode: Mode = Mode.DNA) -> List[int]:
    """Translate tokens into 3-bit codewords."""
    cws: List[int] = []
    mode = start_mode
    i, n = 0, len(tokens)
    while i < n:
        if mode is Mode.DNA:
            tok = tokens[i]
            if is_text(tok):
                cws.append(SWITCH_TO_TEXT)
                mode = Mode.TEXT
                continue
            cws.append(BASE_CODES[tok])
            i += 1
        else:
            run: List[int] = []
            while i < n and is_text(tokens[i]):
                byte = tokens[i]
                if not 0 <= byte < SWITCH_TO_DNA:
                    raise SymbologyError(f"text byte {byte!r} out of range 0..254")
                run.append(byte)
                i += 1
            switch = i < n
            cws.extend(_text_run(run, switch))
            mode = Mode.DNA
    return cws


def decode_tokens(cws: Sequence[int], start_mode: Mode = Mode.DNA) -> List[Token]:
    """Inverse of :func:`encode_tokens`, up to text padding.

    Text runs come back with their pad spaces; bytes following a 0xFF switch
    inside the same group are discarded.
    """
    tokens: List[Token] = []
    mode = start_mode
    i, n = 0, len(cws)
    while i < n:
        if mode is Mode.DNA:
            cw = cws[i]
            i += 1
            if cw == SWITCH_TO_TEXT:
                mode = Mode.TEXT
            elif cw in CODE_BASES:
                tokens.append(CODE_BASES[cw])
            elif cw in RESERVED_CODES:
                raise SymbologyError(f"codeword {i - 1}: reserved codeword {cw}")
            else:
                raise SymbologyError(f"codeword {i - 1}: value {cw!r} is not a 3-bit codeword")
        else:
            if n - i < CWS_PER_GROUP:
                raise SymbologyError(f"codeword {i}: truncated text group")
            group = unpack_text(cws[i:i + CWS_PER_GROUP])
            i += CWS_PER_GROUP
            for byte in group:
                if byte == SWITCH_TO_DNA:
                    mode = Mode.DNA
                    break
                tokens.append(byte)
    return tokens
