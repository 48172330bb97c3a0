"""Reference computations kept independent of the package code paths they check."""
import textwrap


def poly_parity(data, coeffs, modulus):
    """Parity by polynomial long division.

    data(x) * x^k is divided by the monic g(x) = x^k + a[k-1] x^(k-1) + ... + a[0];
    the negated remainder is returned highest degree first.
    """
    k = len(coeffs)
    # coefficient lists, highest degree first
    dividend = list(data) + [0] * k
    divisor = [1] + [coeffs[j] for j in range(k - 1, -1, -1)]
    rem = [x % modulus for x in dividend]
    for i in range(len(data)):
        lead = rem[i]
        if lead:
            for j, g in enumerate(divisor):
                rem[i + j] = (rem[i + j] - lead * g) % modulus
    tail = rem[len(data):] if data else [0] * k
    return [(-r) % modulus for r in tail]


def pack_bits(data: bytes):
    """3-bit groups of the big-endian bit string of ``data``."""
    bits = "".join(format(b, "08b") for b in data)
    return [int(bits[i:i + 3], 2) for i in range(0, len(bits), 3)]


def base900(value, digits=5):
    out = []
    for _ in range(digits):
        out.insert(0, value % 900)
        value //= 900
    return out


def octal_digits(value):
    return [int(ch) for ch in format(value, "04o")]


def rewrap(sequence, width):
    return textwrap.wrap(sequence, width)
