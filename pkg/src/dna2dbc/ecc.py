"""Reed-Solomon style correction codewords over Z/929 and Z/8.

The encoder is the shift-register accumulator used by PDF417: for each data
codeword the feedback term ``t`` is folded into every register cell,
highest cell first. Z/8 has zero divisors, so there is no algebraic decoder;
erasures are repaired by exhaustive search over the erased positions, and
the search reports ambiguity instead of guessing.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence


class EccError(ValueError):
    pass


class SearchBudgetExceeded(EccError):
    pass


class UnrecoverableErasures(EccError):
    """No fill of the erased positions satisfies the parity."""


class AmbiguousErasures(EccError):
    """Two or more fills of the erased positions satisfy the parity."""


class Ring(enum.Enum):
    MOD929 = 929
    MOD8 = 8


COEFFICIENTS_929 = {
    0: (27, 917),
    1: (522, 568, 723, 809),
    2: (237, 308, 436, 284, 646, 653, 428, 379),
    3: (274, 562, 232, 755, 599, 524, 801, 132, 295, 116, 442, 428, 295, 42, 176, 65),
    4: (361, 575, 922, 525, 176, 586, 640, 321, 536, 742, 677, 742, 687, 284, 193, 517,
        273, 494, 263, 147, 593, 800, 571, 320, 803, 133, 231, 390, 685, 330, 63, 410),
}

# maximum data codewords per level 0..8, PDF417 geometry
MAX_DATA_929 = (925, 923, 919, 911, 895, 863, 799, 671, 415)

DESCRIPTOR_LIMIT = 4095
DESCRIPTOR_CWS = 4


def coefficients(ring: Ring, level: int) -> tuple:
    """Generator coefficients ``a[0..k-1]``; the Z/8 table is the Z/929 table reduced mod 8."""
    try:
        base = COEFFICIENTS_929[level]
    except KeyError:
        raise EccError(f"no coefficient table for level {level} (available: 0..4)") from None
    if ring is Ring.MOD929:
        return base
    return tuple(a % ring.value for a in base)


@dataclass(frozen=True)
class EccConfig:
    level: int
    ring: Ring = Ring.MOD8

    def __post_init__(self) -> None:
        if self.level not in COEFFICIENTS_929:
            raise EccError(f"correction level must be 0..4, got {self.level!r}")

    @property
    def parity_count(self) -> int:
        return 2 ** (self.level + 1)

    @property
    def modulus(self) -> int:
        return self.ring.value

    @property
    def coefficients(self) -> tuple:
        return coefficients(self.ring, self.level)


def correction_codewords(data: Sequence[int], config: EccConfig) -> List[int]:
    """Parity codewords for ``data``, in transmission order (highest register first)."""
    m = config.modulus
    a = config.coefficients
    k = len(a)
    c = [0] * k
    for i, d in enumerate(data):
        if not 0 <= d < m:
            raise EccError(f"data codeword {i} = {d!r} outside 0..{m - 1}")
        t = (d + c[k - 1]) % m
        for j in range(k - 1, 0, -1):
            c[j] = (c[j - 1] + m - (t * a[j]) % m) % m
        c[0] = (m - (t * a[0]) % m) % m
    c = [m - v if v else 0 for v in c]
    return c[::-1]


def verify(data: Sequence[int], parity: Sequence[int], config: EccConfig) -> bool:
    if len(parity) != config.parity_count:
        raise EccError(
            f"expected {config.parity_count} parity codewords, got {len(parity)}"
        )
    return correction_codewords(data, config) == list(parity)


def verifying_fills(
    payload: Sequence[Optional[int]], config: EccConfig
) -> Iterator[List[int]]:
    """Yield every completion of ``payload`` (``None`` = erased) whose parity checks.

    ``payload`` is data followed by ``parity_count`` parity codewords. The
    check is linear over the ring, so each candidate is scored by adding the
    precomputed response of every erased position to a base residual; each
    hit is confirmed with :func:`verify` before it is yielded.
    """
    k = config.parity_count
    mod = config.modulus
    if len(payload) < k:
        raise EccError(f"payload shorter than the {k} parity codewords")
    m = len(payload) - k
    erased = [i for i, v in enumerate(payload) if v is None]
    known = [0 if v is None else v for v in payload]

    calc = correction_codewords(known[:m], config)
    base = [(x - y) % mod for x, y in zip(calc, known[m:])]
    if not erased:
        if not any(base):
            yield list(known)
        return

    columns = []
    for pos in erased:
        if pos < m:
            columns.append(correction_codewords([1] + [0] * (m - 1 - pos), config))
        else:
            col = [0] * k
            col[pos - m] = mod - 1
            columns.append(col)

    for fill in itertools.product(range(mod), repeat=len(erased)):
        residual = base
        for v, col in zip(fill, columns):
            if v:
                residual = [(r + v * x) % mod for r, x in zip(residual, col)]
        if any(residual):
            continue
        candidate = list(known)
        for pos, v in zip(erased, fill):
            candidate[pos] = v
        assert verify(candidate[:m], candidate[m:], config)
        yield candidate


def recover_erasures(
    payload: Sequence[Optional[int]], config: EccConfig, max_search: int
) -> List[int]:
    """Fill erased (``None``) codewords of a data+parity payload.

    Raises:
        SearchBudgetExceeded: ``modulus ** erasures`` exceeds ``max_search``.
        UnrecoverableErasures: no fill verifies.
        AmbiguousErasures: more than one fill verifies.
    """
    e = sum(1 for v in payload if v is None)
    if config.modulus ** e > max_search:
        raise SearchBudgetExceeded(
            f"search budget exceeded: {config.modulus}^{e} fills > {max_search}"
        )
    found = list(itertools.islice(verifying_fills(payload, config), 2))
    if not found:
        raise UnrecoverableErasures(f"no fill of {e} erased codewords verifies")
    if len(found) > 1:
        raise AmbiguousErasures(f"several fills of {e} erased codewords verify")
    return found[0]


def recommended_level(n_data: int) -> int:
    """Recommended correction level for ``n_data`` data codewords (PDF417 table)."""
    if n_data < 1:
        raise EccError("n_data must be at least 1")
    if n_data <= 40:
        return 2
    if n_data <= 160:
        return 3
    if n_data <= 320:
        return 4
    return 5


def max_data_cws(level: int, ring: Ring) -> int:
    if not 0 <= level <= 8:
        raise EccError(f"level must be 0..8, got {level!r}")
    cap = MAX_DATA_929[level]
    if ring is Ring.MOD8:
        cap = min(cap, DESCRIPTOR_LIMIT - DESCRIPTOR_CWS - 2 ** (level + 1))
    return cap
