import pytest
from hypothesis import given
from hypothesis import strategies as st

from dna2dbc.layout import ModuleGrid, Payload, to_grid
from dna2dbc.render import PbmError, grid_to_ascii, grid_to_pbm, pbm_to_grid

SMALL = to_grid(Payload([], [5], [], 0))


def test_pbm_small_symbol():
    assert grid_to_pbm(SMALL) == "P1\n5 3\n1 0 1 0 1\n1 1 0 1 0\n1 1 1 1 1\n"


def test_pbm_one_module():
    assert grid_to_pbm(ModuleGrid.from_rows([[1]])) == "P1\n1 1\n1\n"


def test_ascii():
    assert grid_to_ascii(ModuleGrid.from_rows([[1]])) == "#\n"
    assert grid_to_ascii(ModuleGrid.from_rows([[1, 0]])) == "#.\n"
    assert grid_to_ascii(SMALL) == "#.#.#\n##.#.\n#####\n"


def test_pbm_with_comments_and_packed_digits():
    text = "P1\n# made by hand\n5 3\n10101\n1 1 0 1 0  # row two\n11111"
    assert pbm_to_grid(text) == SMALL


@pytest.mark.parametrize("text, match", [
    ("P1\n2 1\n1 0 1\n", "expected 2"),
    ("P4\n2 1\n", "unsupported variant"),
    ("P1\n2 1\n1 2\n", "non-binary"),
    ("X1\n1 1\n1\n", "bad magic"),
    ("", "empty"),
    ("P1\n2\n", "missing"),
])
def test_pbm_errors(text, match):
    with pytest.raises(PbmError, match=match):
        pbm_to_grid(text)


grids = st.integers(1, 12).flatmap(
    lambda w: st.lists(st.lists(st.integers(0, 1), min_size=w, max_size=w), min_size=1, max_size=12)
).map(ModuleGrid.from_rows)


@given(grids)
def test_pbm_round_trip(grid):
    text = grid_to_pbm(grid)
    assert pbm_to_grid(text) == grid
    assert grid_to_pbm(grid) == text
