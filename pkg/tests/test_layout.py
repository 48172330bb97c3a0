import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dna2dbc.ecc import EccConfig, Ring, correction_codewords, verify
from dna2dbc.layout import (
    CapacityError,
    DimensionError,
    FrameError,
    LayoutError,
    ModuleGrid,
    Payload,
    TrailingGarbageError,
    build_payload,
    compute_ncol,
    descriptor_digits,
    frame_cells,
    from_grid,
    grid_codewords,
    split_codewords,
    to_grid,
)
from oracles import octal_digits


def test_descriptor_digits():
    assert octal_digits(11) == [0, 0, 1, 3]
    assert descriptor_digits(11) == [0, 0, 1, 3]
    assert descriptor_digits(4095) == [7, 7, 7, 7]
    with pytest.raises(CapacityError):
        descriptor_digits(4096)


def test_build_payload_small():
    p = build_payload([1, 2, 3, 4, 5], EccConfig(0))
    assert p.descriptor == [0, 0, 1, 3]
    assert p.parity == correction_codewords([0, 0, 1, 3, 1, 2, 3, 4, 5], EccConfig(0))
    assert p.length == 11 and p.ncol == 4 and p.pad_count == 5


def test_build_payload_empty():
    p = build_payload([], EccConfig(0))
    assert p.length == 6
    assert p.ncol == 3
    assert p.pad_count == 3
    assert len(p.codewords) == 9


def test_build_payload_capacity():
    cfg = EccConfig(0)
    build_payload([1] * (4095 - 6), cfg)
    with pytest.raises(CapacityError, match="4095"):
        build_payload([1] * (4095 - 5), cfg)
    with pytest.raises(LayoutError):
        build_payload([1], EccConfig(0, Ring.MOD929))


@pytest.mark.parametrize("n, ncol", [(16, 4), (17, 5), (1, 1), (4095, 64)])
def test_compute_ncol(n, ncol):
    assert compute_ncol(n) == ncol


@given(st.integers(1, 10 ** 6))
def test_compute_ncol_bounds(n):
    k = compute_ncol(n)
    assert (k - 1) ** 2 < n <= k * k
    assert compute_ncol(n + 1) >= k


def test_single_codeword_grid():
    grid = to_grid(Payload([], [5], [], 0))
    assert grid.bits == ((1, 0, 1, 0, 1), (1, 1, 0, 1, 0), (1, 1, 1, 1, 1))


def test_zero_payload_grid():
    grid = to_grid(Payload([0, 0, 0, 0], [], [], 0))
    assert (grid.height, grid.width) == (4, 8)
    assert grid.bits == (
        (1, 0, 1, 0, 1, 0, 1, 0),
        (1, 0, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0, 0, 1),
        (1, 1, 1, 1, 1, 1, 1, 1),
    )


@st.composite
def payloads(draw):
    level = draw(st.integers(0, 3))
    data = draw(st.lists(st.integers(0, 7), max_size=120))
    return build_payload(data, EccConfig(level)), EccConfig(level)


@given(payloads())
def test_grid_round_trip(pc):
    p, cfg = pc
    grid = to_grid(p)
    ncol = p.ncol
    assert (grid.height, grid.width) == (ncol + 2, 3 * ncol + 2)
    assert grid.height * grid.width == (ncol + 2) * (3 * ncol + 2)
    assert from_grid(grid, cfg) == p
    assert verify(p.descriptor + p.data, p.parity, cfg)


@pytest.mark.parametrize("ncol", [1, 2, 3])
def test_grid_round_trip_exhaustive_small(ncol):
    # every codeword vector fitting an ncol x ncol matrix (sampled for ncol 3)
    size = ncol * ncol
    vectors = itertools.product(range(8), repeat=size) if size <= 4 else (
        tuple(random.Random(i).randrange(8) for _ in range(size)) for i in range(3000))
    for vec in vectors:
        grid = to_grid(Payload([], list(vec), [], 0))
        assert grid_codewords(grid) == list(vec)


def test_descriptor_protected():
    cfg = EccConfig(2)
    p = build_payload([1, 2, 3, 6, 0, 5], cfg)
    for i in range(4):
        for delta in range(1, 8):
            desc = list(p.descriptor)
            desc[i] = (desc[i] + delta) % 8
            assert not verify(desc + p.data, p.parity, cfg)


def test_top_left_bit_error():
    grid = to_grid(Payload([], [5], [], 0))
    rows = [list(r) for r in grid.bits]
    rows[0][0] = 0
    with pytest.raises(FrameError) as exc:
        grid_codewords(ModuleGrid.from_rows(rows))
    assert (exc.value.row, exc.value.col) == (0, 0)
    assert "(0,0)" in str(exc.value)


def test_dimension_error():
    with pytest.raises(DimensionError, match="not a DNA2DBC grid"):
        grid_codewords(ModuleGrid.from_rows([[1] * 5] * 4))


def test_trailing_garbage():
    p = build_payload([], EccConfig(0))
    cws = p.codewords
    cws[-1] = 3
    with pytest.raises(TrailingGarbageError):
        split_codewords(cws, 2)


def test_inconsistent_descriptor():
    cws = [0] * 9
    with pytest.raises(LayoutError):
        split_codewords(cws, 2)


def test_frame_cells_cover_border():
    h, w = 5, 11
    cells = {(r, c) for r, c, _ in frame_cells(h, w)}
    border = {(r, c) for r in range(h) for c in range(w) if r in (0, h - 1) or c in (0, w - 1)}
    assert cells == border
