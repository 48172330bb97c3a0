import pytest

from dna2dbc.codec import encode_records
from dna2dbc.damage import (
    AMBIGUOUS,
    RECOVERED,
    UNRECOVERABLE,
    DamageReport,
    Lcg,
    erase_modules,
    recovery_rate,
    run_trial,
)
from dna2dbc.ecc import EccConfig
from dna2dbc.fasta import parse_fasta
from dna2dbc.samples import INSULIN_FASTA

RECORD = parse_fasta(INSULIN_FASTA)[0]
GRID = encode_records([RECORD], level=2).grid


def test_lcg_reference_values():
    rng = Lcg(0)
    # state_1 = c, state_2 = a*c + c (mod 2^64)
    assert rng.next() == 1442695040888963407 >> 32
    s2 = (6364136223846793005 * 1442695040888963407 + 1442695040888963407) % 2 ** 64
    assert rng.next() == s2 >> 32


def test_lcg_sample_is_reproducible():
    assert Lcg(7).sample(range(100), 10) == Lcg(7).sample(range(100), 10)
    assert len(set(Lcg(7).sample(range(100), 100))) == 100


def test_erase_nothing():
    grid, mask = erase_modules(GRID, 0, seed=3)
    assert grid == GRID
    assert mask.codewords == [] and mask.modules == []


def test_erase_one_whole_codeword():
    cells = [(1, 1), (1, 2), (1, 3)]
    _, mask = erase_modules(GRID, 3, seed=1, region=cells)
    assert mask.codewords == [0]


def test_erase_one_module_in_three_codewords():
    cells = [(1, 1), (1, 5), (2, 9)]
    _, mask = erase_modules(GRID, 3, seed=1, region=cells)
    ncol = GRID.height - 2
    assert mask.codewords == [0, 1, ncol + 2]


def test_erase_rectangle_and_errors():
    _, mask = erase_modules(GRID, 6, seed=2, region=(1, 1, 2, 7))
    assert mask.codewords == [0, 1]
    with pytest.raises(ValueError):
        erase_modules(GRID, 1, region=[(0, 0)])
    with pytest.raises(ValueError):
        erase_modules(GRID, 7, region=(1, 1, 2, 7))


def test_erased_modules_are_blank():
    grid, mask = erase_modules(GRID, 25, seed=9)
    assert all(grid[r, c] == 0 for r, c in mask.modules)
    assert erase_modules(GRID, 25, seed=9) == (grid, mask)


def test_trial_no_damage():
    report = run_trial(RECORD, EccConfig(2), seed=1, erase_count=0)
    assert report.outcome == RECOVERED
    assert report.decoded_equals_original


def test_trial_is_deterministic():
    a = run_trial(RECORD, EccConfig(2), seed=5, erase_count=3)
    b = run_trial(RECORD, EccConfig(2), seed=5, erase_count=3)
    assert a == b
    assert a.as_keyvalue() == b.as_keyvalue()


@pytest.mark.parametrize("seed", range(15))
def test_too_many_erasures_never_silently_wrong(seed):
    cfg = EccConfig(0)
    report = run_trial(RECORD, cfg, seed=seed, erase_count=cfg.parity_count + 1)
    assert not report.silently_wrong
    assert report.outcome in (RECOVERED, AMBIGUOUS, UNRECOVERABLE)


def test_report_invariant_and_formats():
    with pytest.raises(ValueError):
        DamageReport(1, AMBIGUOUS, True, 2, 0)
    r = DamageReport(2, RECOVERED, True, 2, 4, [3, 9])
    assert "outcome=recovered\n" in r.as_keyvalue()
    assert "erased_codewords=3,9\n" in r.as_keyvalue()
    assert r.as_text().splitlines()[1] == "outcome: recovered"
    assert recovery_rate([r]) == 1.0
