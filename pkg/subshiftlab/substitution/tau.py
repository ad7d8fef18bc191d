"""
The substitution tau: a -> axa, x -> y, y -> z, z -> x, its iterates on the
letter a and the prefixes of its fixed point eta = a r1 a r2 a ...
"""

from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..config import check_capacity
from ..errors import DomainError
from .alphabet import Alphabet, Letter, Word
from .substitution import Substitution

TAU_ALPHABET = Alphabet("tau", ("a", "x", "y", "z"))

_A = TAU_ALPHABET.code("a")
# tau^n(x) cycles through x, y, z with period 3
_SEPARATORS = tuple(TAU_ALPHABET.code(s) for s in ("x", "y", "z"))


def tau() -> Substitution:
    """
    :returns [Substitution]: The substitution a -> axa, x -> y, y -> z, z -> x.
    """
    return Substitution.from_images(
        "tau", TAU_ALPHABET, {"a": "axa", "x": "y", "y": "z", "z": "x"}
    )


def tau_n_x(n: int) -> Letter:
    """
    :param n [int]: Exponent, non-negative.

    :returns [Letter]: tau^n(x), which is x, y or z for n = 0, 1, 2 (mod 3).
    """
    if n < 0:
        raise DomainError(f"exponent must be non-negative, got {n}")
    return Letter(TAU_ALPHABET, _SEPARATORS[n % 3])


def tau_n_a_length(n: int) -> int:
    return 2 ** (n + 1) - 1


@lru_cache(maxsize=None)
def _tau_n_a_codes(n: int) -> bytes:
    if n == 0:
        return bytes((_A,))
    previous = _tau_n_a_codes(n - 1)
    return previous + bytes((_SEPARATORS[(n - 1) % 3],)) + previous


def tau_n_a(n: int) -> Word:
    """
    Computes tau^n(a) with the doubling recursion
    tau^(n+1)(a) = tau^n(a) tau^n(x) tau^n(a).

    :param n [int]: Exponent, non-negative.

    :returns [Word]: tau^n(a), of length 2^(n+1) - 1.
    """
    if n < 0:
        raise DomainError(f"exponent must be non-negative, got {n}")
    check_capacity(tau_n_a_length(n), f"tau^{n}(a)")
    return Word(TAU_ALPHABET, _tau_n_a_codes(n))


@dataclass(frozen=True)
class FixedPointPrefix:
    """
    Prefix of the fixed point eta. Odd positions (1-indexed) hold a, even
    positions hold the separators r_j in {x, y, z}.
    """

    word: Word
    guaranteed_length: int

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return str(self.word)

    def separators(self) -> Word:
        """
        :returns [Word]: r_1 r_2 ... read off the even positions.
        """
        return Word(TAU_ALPHABET, self.word.codes[1::2])


def minimal_power(length: int) -> int:
    """
    :returns [int]: Least n with |tau^n(a)| = 2^(n+1) - 1 >= length.
    """
    if length < 1:
        raise DomainError(f"length must be positive, got {length}")
    return length.bit_length() - 1


def eta_prefix(length: int) -> FixedPointPrefix:
    """
    Prefix of the fixed point eta of the given length, built letter by letter
    from eta = a r1 a r2 a ... without expanding tau^n(a).

    :param length [int]: Prefix length, positive.

    :returns [FixedPointPrefix]: Length-`length` prefix of eta.
    """
    if length < 1:
        raise DomainError(f"length must be positive, got {length}")
    check_capacity(length, "prefix of eta")
    codes = np.full(length, _A, dtype=np.uint8)
    j = np.arange(1, length // 2 + 1, dtype=np.int64)
    # frexp of a power of two 2^v has exponent v + 1
    valuations = np.frexp((j & -j).astype(np.float64))[1] - 1
    codes[1::2] = np.asarray(_SEPARATORS, dtype=np.uint8)[valuations % 3]
    return FixedPointPrefix(
        Word(TAU_ALPHABET, codes.tobytes()), guaranteed_length=length
    )


def two_adic_valuation(j: int) -> int:
    return (j & -j).bit_length() - 1


def r_letter(j: int) -> Letter:
    """
    The j-th separator of eta = a r1 a r2 a ..., equal to tau^v(x) where v is
    the 2-adic valuation of j.

    :param j [int]: Index of the separator, starting at 1.

    :returns [Letter]: r_j.
    """
    if j < 1:
        raise DomainError(f"separator index must be positive, got {j}")
    return tau_n_x(two_adic_valuation(j))


def r_letters(count: int) -> Word:
    """
    :param count [int]: Number of separators, positive.

    :returns [Word]: r_1 ... r_count, read off a prefix of eta.
    """
    return eta_prefix(2 * count + 1).separators()
