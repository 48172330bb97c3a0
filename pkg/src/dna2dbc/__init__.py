"""DNA2DBC: FASTA records as 3-bit-codeword 2D barcodes, plus a PDF417 high-level encoder."""
from .codec import decode_grid, encode_records
from .ecc import EccConfig, Ring, correction_codewords
from .fasta import DnaRecord, parse_fasta, serialize_fasta
from .layout import ModuleGrid, Payload
from .render import grid_to_ascii, grid_to_pbm, pbm_to_grid

__all__ = [
    "DnaRecord",
    "EccConfig",
    "ModuleGrid",
    "Payload",
    "Ring",
    "correction_codewords",
    "decode_grid",
    "encode_records",
    "grid_to_ascii",
    "grid_to_pbm",
    "parse_fasta",
    "pbm_to_grid",
    "serialize_fasta",
]
