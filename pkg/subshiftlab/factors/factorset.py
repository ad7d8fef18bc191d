"""
Brute-force oracle for the factor language of tau.

Every factor of length L <= |tau^n(a)| = 2^(n+1) - 1 appears in tau^(n+3)(a),
so sliding a window over that single word yields the complete set of length-L
factors of the fixed point.
"""

from __future__ import annotations
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from ..errors import DomainError, NotAFactorError
from ..substitution import TAU_ALPHABET, Letter, Word, tau_n_a

"""
How many powers beyond the covering one are needed to see every factor.
"""
APPEARANCE_MARGIN = 3


def sufficient_power(L: int) -> int:
    """
    :param L [int]: Factor length, positive.

    :returns [int]: Least n with 2^(n+1) - 1 >= L.
    """
    if L < 1:
        raise DomainError(f"factor length must be positive, got {L}")
    return L.bit_length() - 1


def harvest_power(L: int) -> int:
    """
    :returns [int]: Exponent m such that tau^m(a) contains every factor of length L.
    """
    return sufficient_power(L) + APPEARANCE_MARGIN


@dataclass(frozen=True)
class FactorSet:
    """
    All factors of length `length`, harvested from tau^source_power(a).
    source_power is None when the factors come from some other text.
    """

    length: int
    words: frozenset[Word]
    source_power: Optional[int]

    def __post_init__(self):
        assert all(len(w) == self.length for w in self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def sorted(self) -> list[Word]:
        """
        :returns [list[Word]]: Factors in lexicographic alphabet order.
        """
        return sorted(self.words, key=lambda w: w.codes)


@dataclass(frozen=True)
class ExtensionRecord:
    """
    A factor together with the letters that extend it to the right and left.
    """

    word: Word
    right_extensions: frozenset[Letter]
    left_extensions: frozenset[Letter]

    @property
    def is_right_special(self) -> bool:
        return len(self.right_extensions) >= 2

    @property
    def is_left_special(self) -> bool:
        return len(self.left_extensions) >= 2

    def right_pair(self) -> tuple[Word, frozenset[Letter]]:
        return self.word, self.right_extensions

    def left_pair(self) -> tuple[Word, frozenset[Letter]]:
        return self.word, self.left_extensions


def _windows(text: Word, L: int) -> frozenset[Word]:
    codes = text.codes
    return frozenset(
        Word(text.alphabet, codes[i : i + L]) for i in range(len(codes) - L + 1)
    )


def factor_set(L: int) -> FactorSet:
    """
    Enumerates all factors of length L of the fixed point.

    :param L [int]: Factor length, positive.

    :returns [FactorSet]: The complete set of length-L factors.
    """
    power = harvest_power(L)
    text = tau_n_a(power)
    logging.debug(f"Harvesting factors of length {L} from tau^{power}(a)")
    return FactorSet(L, _windows(text, L), power)


def complexity_oracle(L: int) -> int:
    """
    :returns [int]: Number of distinct factors of length L, counted by brute force.
    """
    return len(factor_set(L))


def is_factor(w: Word) -> bool:
    """
    :returns [bool]: Whether w is a factor of the fixed point. The empty word is.
    """
    if w.alphabet != TAU_ALPHABET:
        return False
    if len(w) == 0:
        return True
    return w.codes in tau_n_a(harvest_power(len(w))).codes


def _extension_table(
    L: int,
) -> tuple[dict[bytes, set[int]], dict[bytes, set[int]]]:
    """
    Groups the factors of length L+1 by their length-L prefix and suffix.
    """
    right: dict[bytes, set[int]] = defaultdict(set)
    left: dict[bytes, set[int]] = defaultdict(set)
    for u in factor_set(L + 1).words:
        right[u.codes[:-1]].add(u.codes[-1])
        left[u.codes[1:]].add(u.codes[0])
    return right, left


def _record(codes: bytes, right: set[int], left: set[int]) -> ExtensionRecord:
    return ExtensionRecord(
        Word(TAU_ALPHABET, codes),
        frozenset(Letter(TAU_ALPHABET, c) for c in right),
        frozenset(Letter(TAU_ALPHABET, c) for c in left),
    )


def extensions(w: Word) -> ExtensionRecord:
    """
    Determines the one-letter extensions of a factor on both sides.

    :param w [Word]: Factor of the fixed point.

    :returns [ExtensionRecord]: Right and left extension letters of w.
    """
    if w.alphabet != TAU_ALPHABET:
        raise NotAFactorError(f"'{w}' is not a word over {TAU_ALPHABET}", word=w)
    right, left = _extension_table(len(w))
    if w.codes not in right:
        raise NotAFactorError(f"'{w}' is not a factor", word=w)
    return _record(w.codes, right[w.codes], left.get(w.codes, set()))


def extension_records(L: int) -> frozenset[ExtensionRecord]:
    """
    :returns [frozenset[ExtensionRecord]]: Extension data of every factor of length L.
    """
    right, left = _extension_table(L)
    return frozenset(
        _record(codes, right[codes], left.get(codes, set())) for codes in right
    )


def right_special_oracle(L: int) -> frozenset[ExtensionRecord]:
    """
    :returns [frozenset[ExtensionRecord]]: Factors of length L with at least two right extensions.
    """
    return frozenset(r for r in extension_records(L) if r.is_right_special)


def left_special_oracle(L: int) -> frozenset[ExtensionRecord]:
    """
    :returns [frozenset[ExtensionRecord]]: Factors of length L with at least two left extensions.
    """
    return frozenset(r for r in extension_records(L) if r.is_left_special)


def bispecial_oracle(L: int) -> frozenset[ExtensionRecord]:
    """
    :returns [frozenset[ExtensionRecord]]: Factors of length L that are right- and left-special.
    """
    return frozenset(
        r for r in extension_records(L) if r.is_right_special and r.is_left_special
    )
