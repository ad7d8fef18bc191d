from __future__ import annotations
import logging
from typing import Optional

import numpy as np

from ..errors import DomainError
from ..substitution import Letter, Word, tau_n_a
from .factorset import ExtensionRecord, FactorSet, harvest_power


class FactorIndex:
    """
    Streams the factor language of a fixed text one length at a time.

    The start positions of the text are partitioned into classes of equal
    windows of the current length L. Moving to L+1 ranks the pairs
    (class, next letter); since class ranks follow lexicographic word order,
    so do the refined ranks. Each step costs one sort of the position array,
    independent of L.
    """

    def __init__(self, text: Word, source_power: Optional[int] = None):
        """
        Constructor.

        :param text [Word]: Text to index, non-empty. Must contain every factor of interest.
        :param source_power [Optional[int]]: Exponent m if text is tau^m(a). Defaults to None.
        """
        assert len(text) >= 1
        self.text = text
        self.source_power = source_power
        self._k = len(text.alphabet)
        self._codes = np.frombuffer(text.codes, dtype=np.uint8).astype(np.int64)
        _, classes = np.unique(self._codes, return_inverse=True)
        self._classes = classes.reshape(-1)
        self._length = 1
        self._right_cache: Optional[tuple[np.ndarray, np.ndarray]] = None
        self._left_cache: Optional[np.ndarray] = None

    @staticmethod
    def covering(max_length: int) -> FactorIndex:
        """
        Index over tau^m(a) with m large enough that every factor of length up
        to max_length + 1 is present, so extensions are exact up to max_length.

        :param max_length [int]: Largest length that will be queried.
        """
        power = harvest_power(max_length + 1)
        logging.info(f"Indexing tau^{power}(a) for factor lengths up to {max_length}")
        return FactorIndex(tau_n_a(power), source_power=power)

    @property
    def length(self) -> int:
        return self._length

    def complexity(self) -> int:
        """
        :returns [int]: Number of distinct windows of the current length.
        """
        return int(self._classes.max()) + 1

    def next_complexity(self) -> int:
        """
        :returns [int]: Number of distinct windows of length L+1.
        """
        pairs, _ = self._right_pairs()
        return len(pairs)

    def _word_at(self, position: int) -> Word:
        codes = self.text.codes[position : position + self._length]
        return Word(self.text.alphabet, codes)

    def words(self) -> list[Word]:
        """
        :returns [list[Word]]: Distinct windows of the current length, sorted.
        """
        _, first = np.unique(self._classes, return_index=True)
        return [self._word_at(int(p)) for p in first]

    def factor_set(self) -> FactorSet:
        return FactorSet(self._length, frozenset(self.words()), self.source_power)

    def _right_keys(self) -> np.ndarray:
        n = len(self._codes) - self._length
        return self._classes[:n] * self._k + self._codes[self._length :]

    def _left_keys(self) -> np.ndarray:
        n = len(self._codes) - self._length
        return self._classes[1 : n + 1] * self._k + self._codes[:n]

    def _right_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        # distinct (class, next letter) keys and the rank of every position
        if self._right_cache is None:
            pairs, inverse = np.unique(self._right_keys(), return_inverse=True)
            self._right_cache = (pairs, inverse.reshape(-1))
        return self._right_cache

    def _left_pairs(self) -> np.ndarray:
        if self._left_cache is None:
            self._left_cache = np.unique(self._left_keys())
        return self._left_cache

    def _special_classes(self, pairs: np.ndarray) -> np.ndarray:
        counts = np.bincount(pairs // self._k)
        return np.flatnonzero(counts >= 2)

    def _letters(self, pairs: np.ndarray, classes: np.ndarray) -> dict[int, frozenset[Letter]]:
        owner, codes = np.divmod(pairs, self._k)
        keep = np.isin(owner, classes)
        table: dict[int, set[int]] = {}
        for c, s in zip(owner[keep].tolist(), codes[keep].tolist()):
            table.setdefault(c, set()).add(s)
        alphabet = self.text.alphabet
        return {c: frozenset(Letter(alphabet, s) for s in ss) for c, ss in table.items()}

    def _records(self, classes: np.ndarray) -> frozenset[ExtensionRecord]:
        if len(classes) == 0:
            return frozenset()
        right = self._letters(self._right_pairs()[0], classes)
        if self._left_cache is not None:
            left = self._letters(self._left_cache, classes)
        else:
            # only the requested classes, to avoid sorting every left key
            keys = self._left_keys()
            keys = keys[np.isin(keys // self._k, classes)]
            left = self._letters(np.unique(keys), classes)
        first = {c: int(np.argmax(self._classes == c)) for c in classes.tolist()}
        return frozenset(
            ExtensionRecord(
                self._word_at(first[c]),
                right.get(c, frozenset()),
                left.get(c, frozenset()),
            )
            for c in classes.tolist()
        )

    def right_special(self) -> frozenset[ExtensionRecord]:
        """
        :returns [frozenset[ExtensionRecord]]: Right-special factors of the current length.
        """
        return self._records(self._special_classes(self._right_pairs()[0]))

    def left_special(self) -> frozenset[ExtensionRecord]:
        """
        :returns [frozenset[ExtensionRecord]]: Left-special factors of the current length.
        """
        return self._records(self._special_classes(self._left_pairs()))

    def bispecial(self) -> frozenset[ExtensionRecord]:
        both = np.intersect1d(
            self._special_classes(self._right_pairs()[0]),
            self._special_classes(self._left_pairs()),
        )
        return self._records(both)

    def extension_deficit(self) -> tuple[int, int]:
        """
        :returns [tuple[int, int]]: Number of factors without a right, and without a left, extension.
        """
        c = self.complexity()
        right = len(np.unique(self._right_pairs()[0] // self._k))
        left = len(np.unique(self._left_pairs() // self._k))
        return c - right, c - left

    def advance(self):
        """
        Refines the index from length L to L+1.
        """
        if self._length >= len(self._codes):
            raise DomainError("cannot extend windows beyond the length of the text")
        _, inverse = self._right_pairs()
        self._classes = inverse
        self._length += 1
        self._right_cache = None
        self._left_cache = None

    def __repr__(self) -> str:
        return f"FactorIndex(length={self._length}, text_length={len(self.text)})"
