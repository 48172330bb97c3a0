"""Command-line interface.

Exit codes: 0 success, 1 input/parse error, 2 usage or capacity error,
3 verification failure, 4 ambiguous decode.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import ecc, selftest
from .codec import AmbiguousDecode, DecodeError, decode_grid, encode_records
from .damage import trial_on_grid
from .fasta import FastaError, parse_fasta, serialize_fasta
from .layout import CapacityError, LayoutError
from .pdf417 import Pdf417Error, byte_high_level, text_high_level
from .render import PbmError, grid_to_pbm, pbm_to_grid
from .symbology import Mode, SymbologyError

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_AMBIGUOUS = 4

LEVEL_CHOICES = range(5)


def _fail(code: int, message: str) -> int:
    print(f"dna2dbc: {message}", file=sys.stderr)
    return code


def _mode(name: str) -> Mode:
    return Mode(name)


def read_erasure_file(path: Path) -> List[int]:
    indices = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            indices.append(int(line))
    return indices


def write_erasure_file(path: Path, indices) -> None:
    body = "".join(f"{i}\n" for i in indices)
    path.write_text("# erased codeword indices, row-major\n" + body)


def cmd_encode(args) -> int:
    try:
        records = parse_fasta(Path(args.input).read_bytes())
    except OSError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except FastaError as exc:
        return _fail(EXIT_PARSE, f"{args.input}: {exc}")
    if not records:
        return _fail(EXIT_PARSE, f"{args.input}: no FASTA records")
    try:
        symbol = encode_records(records, level=args.level, start_mode=_mode(args.start_mode))
    except CapacityError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except SymbologyError as exc:
        return _fail(EXIT_PARSE, str(exc))
    Path(args.output).write_text(grid_to_pbm(symbol.grid))
    p = symbol.payload
    print(
        f"ncol={symbol.ncol} level={symbol.config.level} data_cws={len(p.data)} "
        f"parity_cws={len(p.parity)} pad_cws={p.pad_count} "
        f"modules={symbol.grid.width}x{symbol.grid.height}"
    )
    return EXIT_OK


def _load_grid(path: str):
    return pbm_to_grid(Path(path).read_text(encoding="latin-1"))


def cmd_decode(args) -> int:
    try:
        grid = _load_grid(args.input)
        erasures = read_erasure_file(Path(args.erasures)) if args.erasures else []
    except (OSError, PbmError, ValueError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        result = decode_grid(
            grid,
            level=args.level,
            erasures=erasures,
            max_erasures=args.max_erasures,
            start_mode=_mode(args.start_mode),
        )
    except LayoutError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except AmbiguousDecode as exc:
        return _fail(EXIT_AMBIGUOUS, str(exc))
    except (DecodeError, ecc.EccError) as exc:
        return _fail(EXIT_VERIFY, str(exc))
    Path(args.output).write_text(
        serialize_fasta(result.records, args.line_width), encoding="latin-1"
    )
    if result.filled:
        print(f"recovered {len(result.filled)} erased codeword(s)", file=sys.stderr)
    return EXIT_OK


def cmd_pdf417(args) -> int:
    try:
        if args.text is not None:
            cws = text_high_level(args.text)
        else:
            cws = byte_high_level(args.byte.encode("latin-1"))
    except (Pdf417Error, UnicodeEncodeError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    print(",".join(map(str, cws)))
    return EXIT_OK


def cmd_damage(args) -> int:
    config = ecc.EccConfig(args.level)
    try:
        grid = _load_grid(args.input)
    except (OSError, PbmError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        original = decode_grid(grid, level=args.level).records
    except LayoutError as exc:
        return _fail(EXIT_PARSE, f"undamaged symbol: {exc}")
    except AmbiguousDecode as exc:
        return _fail(EXIT_AMBIGUOUS, f"undamaged symbol: {exc}")
    except DecodeError as exc:
        return _fail(EXIT_VERIFY, f"undamaged symbol: {exc}")
    try:
        report, damaged, mask = trial_on_grid(grid, original, config, args.seed, args.erase)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))

    out = Path(args.output) if args.output else Path(args.input).with_suffix(".damaged.pbm")
    out.write_text(grid_to_pbm(damaged))
    write_erasure_file(Path(str(out) + ".erasures"), mask.codewords)
    text = report.as_text() + "\n" + report.as_keyvalue()
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    return EXIT_OK if selftest.run(sys.stdout) else EXIT_PARSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dna2dbc", description="Encode FASTA files as DNA2DBC 2D barcodes and back."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="FASTA -> P1 bitmap symbol")
    enc.add_argument("--in", dest="input", required=True, help="FASTA file")
    enc.add_argument("--out", dest="output", required=True, help="PBM file to write")
    enc.add_argument("--level", type=int, choices=LEVEL_CHOICES,
                     help="correction level (default: recommended for the data size)")
    enc.add_argument("--start-mode", choices=["dna", "text"], default="dna")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="P1 bitmap symbol -> FASTA")
    dec.add_argument("--in", dest="input", required=True, help="PBM file")
    dec.add_argument("--out", dest="output", required=True, help="FASTA file to write")
    dec.add_argument("--max-erasures", type=int, default=3,
                     help="largest number of erased codewords to search (default: 3)")
    dec.add_argument("--erasures", help="file listing erased codeword indices")
    dec.add_argument("--level", type=int, choices=LEVEL_CHOICES,
                     help="correction level used at encode time (default: try all)")
    dec.add_argument("--start-mode", choices=["dna", "text"], default="dna")
    dec.add_argument("--line-width", type=int, default=60)
    dec.set_defaults(func=cmd_decode)

    pdf = sub.add_parser("pdf417", help="print PDF417 high-level codewords")
    group = pdf.add_mutually_exclusive_group(required=True)
    group.add_argument("--text", help="encode in text mode")
    group.add_argument("--byte", help="encode in byte mode (Latin-1 bytes)")
    pdf.set_defaults(func=cmd_pdf417)

    dmg = sub.add_parser("damage", help="erase codewords of a symbol and try to recover")
    dmg.add_argument("--in", dest="input", required=True, help="PBM symbol")
    dmg.add_argument("--seed", type=int, required=True)
    dmg.add_argument("--erase", type=int, required=True, help="number of codewords to erase")
    dmg.add_argument("--level", type=int, choices=LEVEL_CHOICES, required=True)
    dmg.add_argument("--out", dest="output", help="damaged PBM to write")
    dmg.add_argument("--report", help="also write the report to this file")
    dmg.set_defaults(func=cmd_damage)

    st = sub.add_parser("selftest", help="check the published reference vectors")
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "line_width", 1) < 1:
        return _fail(EXIT_USAGE, "--line-width must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
