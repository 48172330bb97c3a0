"""Published reference vectors, runnable without the test-suite."""
from __future__ import annotations

from typing import Callable, List, Tuple

from . import ecc, pdf417, symbology
from .codec import decode_grid, encode_records
from .fasta import parse_fasta
from .samples import CORTISTATIN_FASTA, INSULIN_FASTA
from .symbology import Mode, Nucleotide, SymbologyError


def _expect(got, want) -> Tuple[bool, str]:
    return got == want, f"got {got!r}, want {want!r}"


def _text_super():
    return _expect(pdf417.text_high_level("Super !"), [567, 615, 137, 809, 329])


def _byte_super():
    s = pdf417.group_value(b"Super!")
    if s != 91763861975585:
        return False, f"accumulator {s}"
    return _expect(pdf417.byte_high_level(b"Super!"), [924, 139, 776, 318, 439, 485])


def _super_symbol():
    sym = pdf417.assemble([924, 139, 776, 318, 439, 485], data_columns=2, level=2)
    want = [[8, 924], [139, 776], [318, 439], [485, 900],
            [65, 482], [393, 214], [364, 620], [420, 729]]
    return _expect(sym.rows, want)


def _dna_codes():
    cws = symbology.encode_tokens(list(Nucleotide), Mode.DNA)
    if cws != [1, 2, 3, 4, 5]:
        return False, f"encode gave {cws}"
    back = symbology.decode_tokens([1, 2, 3, 4, 5], Mode.DNA)
    if back != list(Nucleotide):
        return False, f"decode gave {back}"
    for reserved in (0, 7):
        try:
            symbology.decode_tokens([reserved], Mode.DNA)
        except SymbologyError:
            continue
        return False, f"codeword {reserved} accepted"
    return True, ""


def _capacity_table():
    got = [ecc.max_data_cws(s, ecc.Ring.MOD929) for s in range(9)]
    return _expect(got, [925, 923, 919, 911, 895, 863, 799, 671, 415])


def _recommended_levels():
    got = [ecc.recommended_level(n) for n in (1, 40, 41, 160, 161, 320, 321, 863)]
    return _expect(got, [2, 2, 3, 3, 4, 4, 5, 5])


def _coefficients():
    for level in range(5):
        a = ecc.coefficients(ecc.Ring.MOD929, level)
        if len(a) != 2 ** (level + 1):
            return False, f"level {level} has {len(a)} coefficients"
    ok, msg = _expect(ecc.coefficients(ecc.Ring.MOD929, 1), (522, 568, 723, 809))
    return ok, msg


def _dna_density():
    cws = symbology.encode_tokens([Nucleotide.A] * 400, Mode.DNA)
    return _expect((len(cws), 3 * len(cws)), (400, 1200))


def _cortistatin_parse():
    (rec,) = parse_fasta(CORTISTATIN_FASTA)
    ok = rec.header.startswith("AB000263") and rec.sequence.startswith("ACAAGATGCC")
    return ok and "len=368" in rec.header, f"header {rec.header[:20]!r}, sequence {rec.sequence[:10]!r}"


def _roundtrip(doc: str):
    def check():
        records = parse_fasta(doc)
        sym = encode_records(records)
        return _expect(decode_grid(sym.grid, level=sym.config.level).records, records)
    return check


VECTORS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("pdf417 text mode 'Super !'", _text_super),
    ("pdf417 byte mode 'Super!'", _byte_super),
    ("pdf417 2-column 'Super!' symbol codewords", _super_symbol),
    ("dna2dbc base codes and reserved codewords", _dna_codes),
    ("correction capacity table", _capacity_table),
    ("recommended correction levels", _recommended_levels),
    ("generator coefficient tables", _coefficients),
    ("400 bases -> 400 codewords / 1200 bits", _dna_density),
    ("AB000263 sample parses", _cortistatin_parse),
    ("AB000263 sample round trip", _roundtrip(CORTISTATIN_FASTA)),
    ("insulin sample round trip", _roundtrip(INSULIN_FASTA)),
]


def run(out) -> bool:
    """Run every vector, writing one PASS/FAIL line each to ``out``."""
    all_ok = True
    for name, check in VECTORS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failed vector, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        all_ok &= ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name}" + ("" if ok else f": {detail}") + "\n")
    return all_ok
