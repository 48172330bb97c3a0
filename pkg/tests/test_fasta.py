import pytest
from hypothesis import given
from hypothesis import strategies as st

from dna2dbc.fasta import DnaRecord, FastaError, parse_fasta, serialize_fasta
from dna2dbc.samples import CORTISTATIN_FASTA, INSULIN_FASTA
from oracles import rewrap

headers = st.text(
    alphabet=st.characters(min_codepoint=0, max_codepoint=255, blacklist_characters="\r\n"),
    max_size=40,
)
sequences = st.text(alphabet="ACGTU", max_size=200)
records = st.builds(DnaRecord, headers, sequences)


def test_cortistatin_sample():
    (rec,) = parse_fasta(CORTISTATIN_FASTA)
    assert rec.header.startswith("AB000263")
    assert rec.header.endswith("|len=368")
    assert rec.sequence.startswith("ACAAGATGCC")
    # the printed sample carries 359 of the 368 declared bases
    assert len(rec.sequence) == 359


def test_insulin_sample():
    (rec,) = parse_fasta(INSULIN_FASTA)
    assert rec.header == " insulin |homo sapiens"
    assert len(rec.sequence) == 93


def test_empty_document():
    assert parse_fasta("") == []


def test_case_normalized_and_lines_joined():
    assert parse_fasta(">x\nACGT\nacgt\n") == [DnaRecord("x", "ACGTACGT")]


def test_header_only_and_blank_lines():
    doc = ">a\n\n>b c|d\nAC GT\n\n  u\n"
    assert parse_fasta(doc) == [DnaRecord("a", ""), DnaRecord("b c|d", "ACGTU")]


def test_crlf():
    assert parse_fasta(">x\r\nAC\r\nGT\r\n") == [DnaRecord("x", "ACGT")]


def test_bytes_input_keeps_high_bytes_in_header():
    (rec,) = parse_fasta(b">caf\xe9\nA\n")
    assert rec.header == "caf\xe9"


def test_invalid_base_names_line_and_byte():
    with pytest.raises(FastaError, match=r"line 3: invalid sequence byte 'N' \(0x4e\)"):
        parse_fasta(">x\nACGT\nACNT\n")


def test_sequence_before_header():
    with pytest.raises(FastaError, match="line 1"):
        parse_fasta("ACGT\n>x\n")


def test_serialize_examples():
    assert serialize_fasta([DnaRecord("x", "ACGT")], 2) == ">x\nAC\nGT\n"
    assert serialize_fasta([], 7) == ""
    with pytest.raises(ValueError):
        serialize_fasta([DnaRecord("x")], 0)


def test_serialize_insulin_width_29():
    (rec,) = parse_fasta(INSULIN_FASTA)
    text = serialize_fasta([rec], 29)
    lines = text.splitlines()
    assert lines[0] == "> insulin |homo sapiens"
    assert lines[1:] == rewrap(rec.sequence, 29)
    # the first printed line is already 29 bases wide
    assert lines[1] == INSULIN_FASTA.splitlines()[1]


def test_record_invariants():
    with pytest.raises(ValueError):
        DnaRecord("a\nb")
    with pytest.raises(ValueError):
        DnaRecord("a", "ACGN")


@given(st.lists(records, max_size=5), st.integers(1, 80))
def test_round_trip(recs, width):
    assert parse_fasta(serialize_fasta(recs, width)) == recs


@given(sequences, st.lists(st.sampled_from([" ", "\n", "\t", "  \n "]), max_size=20), st.randoms())
def test_whitespace_insensitive(seq, noise, rnd):
    chars = list(seq)
    for ws in noise:
        chars.insert(rnd.randint(0, len(chars)), ws)
    body = "".join(chars)
    assert parse_fasta(">h\n" + body + "\n") == [DnaRecord("h", seq)]
