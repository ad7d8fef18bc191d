"""
Explicit right-special (and, by reflection, left-special) words.

For n >= 2 and L = 2^n + k with 0 <= k < 2^n, the suffix of length L of
tau^n(a) is right-special with extensions x, y, z. If k < 2^(n-1) there is
exactly one more: the suffix of length L of
tau^(n-2)(a) tau^(n-2)(x) tau^(n-1)(a), extended by tau^(n-2)(x) and
tau^(n-1)(x).
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum

from ..errors import DomainError
from ..substitution import TAU_ALPHABET, Letter, Word, reverse, tau_n_a, tau_n_x
from .complexity import REGIME_START, decompose

XYZ = frozenset(TAU_ALPHABET.letter(s) for s in "xyz")


class Construction(str, Enum):
    TAU_N_SUFFIX = "tau_n_suffix"
    JUNCTION_SUFFIX = "junction_suffix"
    SMALL_LENGTH_TABLE = "small_length_table"


@dataclass(frozen=True)
class SpecialEntry:
    word: Word
    extensions: frozenset[Letter]
    construction: Construction


@dataclass(frozen=True)
class SpecialWordReport:
    """
    Special words of one length, each tagged with the construction producing it.
    """

    length: int
    entries: tuple[SpecialEntry, ...]

    def __post_init__(self):
        assert all(len(e.word) == self.length for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def pairs(self) -> frozenset[tuple[Word, frozenset[Letter]]]:
        """
        :returns [frozenset]: Set of (word, extensions), ignoring order and construction tags.
        """
        return frozenset((e.word, e.extensions) for e in self.entries)

    def words(self) -> frozenset[Word]:
        return frozenset(e.word for e in self.entries)


# right-special words below the general regime, confirmed by the oracle
SMALL_RIGHT_SPECIAL = {1: "a", 2: "xa", 3: "axa"}


def junction_word(n: int) -> Word:
    """
    :returns [Word]: tau^(n-2)(a) tau^(n-2)(x) tau^(n-1)(a), for n >= 2.
    """
    if n < 2:
        raise DomainError(f"junction word needs n >= 2, got {n}")
    return tau_n_a(n - 2) + tau_n_x(n - 2) + tau_n_a(n - 1)


def right_special_formula(L: int) -> SpecialWordReport:
    """
    Right-special words of length L with their right extensions.

    :param L [int]: Length, positive.

    :returns [SpecialWordReport]: One or two entries for L >= 4.
    """
    if L < 1:
        raise DomainError(f"length must be positive, got {L}")
    if L < REGIME_START:
        entry = SpecialEntry(
            TAU_ALPHABET.word(SMALL_RIGHT_SPECIAL[L]), XYZ, Construction.SMALL_LENGTH_TABLE
        )
        return SpecialWordReport(L, (entry,))
    n, k = decompose(L)
    entries = [SpecialEntry(tau_n_a(n).suffix(L), XYZ, Construction.TAU_N_SUFFIX)]
    if k < 2 ** (n - 1):
        entries.append(
            SpecialEntry(
                junction_word(n).suffix(L),
                frozenset((tau_n_x(n - 2), tau_n_x(n - 1))),
                Construction.JUNCTION_SUFFIX,
            )
        )
    return SpecialWordReport(L, tuple(entries))


def left_special_formula(L: int) -> SpecialWordReport:
    """
    Left-special words of length L with their left extensions, obtained by
    reflecting the right-special words.
    """
    report = right_special_formula(L)
    return SpecialWordReport(
        L,
        tuple(
            SpecialEntry(reverse(e.word), e.extensions, e.construction)
            for e in report.entries
        ),
    )
