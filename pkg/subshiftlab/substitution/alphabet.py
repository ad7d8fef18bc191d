"""
Alphabets, letters and finite words.

Letters are stored as small integer codes, one byte per letter, together with
the alphabet that gives them their symbols. Words compare and sort by their
codes, which is the declared alphabet order.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Iterator, overload

from ..errors import DomainError


@dataclass(frozen=True)
class Alphabet:
    """
    Finite ordered set of single-character symbols.
    """

    name: str
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise DomainError(f"alphabet '{self.name}' is empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError(f"alphabet '{self.name}' has repeated symbols")
        if any(len(s) != 1 for s in self.symbols):
            raise DomainError(f"alphabet '{self.name}' needs single-character symbols")
        if len(self.symbols) > 256:
            raise DomainError(f"alphabet '{self.name}' has more than 256 symbols")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(self, code) for code in range(len(self.symbols)))

    def __contains__(self, symbol: object) -> bool:
        if isinstance(symbol, Letter):
            return symbol.alphabet == self
        return symbol in self.symbols

    def code(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise DomainError(
                f"symbol '{symbol}' does not belong to alphabet '{self.name}'"
            ) from None

    def letter(self, symbol: str) -> Letter:
        return Letter(self, self.code(symbol))

    def word(self, text: str | Iterable[str]) -> Word:
        """
        Parses a word from its symbols.

        :param text [str | Iterable[str]]: Symbols of the word, e.g. "axa".

        :returns [Word]: Parsed word.
        """
        return Word(self, bytes(self.code(s) for s in text))

    def empty(self) -> Word:
        return Word(self, b"")

    def __str__(self) -> str:
        return "{" + ",".join(self.symbols) + "}"


@dataclass(frozen=True, order=True)
class Letter:
    alphabet: Alphabet
    code: int

    def __post_init__(self):
        if not 0 <= self.code < len(self.alphabet):
            raise DomainError(
                f"code {self.code} is not a letter of alphabet '{self.alphabet.name}'"
            )

    @property
    def symbol(self) -> str:
        return self.alphabet.symbols[self.code]

    def word(self) -> Word:
        return Word(self.alphabet, bytes((self.code,)))

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"Letter({self.symbol!r})"


@dataclass(frozen=True)
class Word:
    """
    Immutable finite word over an alphabet. The empty word is permitted.
    """

    alphabet: Alphabet
    codes: bytes

    def __post_init__(self):
        if self.codes and max(self.codes) >= len(self.alphabet):
            raise DomainError(
                f"word contains codes outside alphabet '{self.alphabet.name}'"
            )

    def __len__(self) -> int:
        return len(self.codes)

    def __str__(self) -> str:
        symbols = self.alphabet.symbols
        return "".join(symbols[c] for c in self.codes)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(self.alphabet, c) for c in self.codes)

    @overload
    def __getitem__(self, index: int) -> Letter: ...

    @overload
    def __getitem__(self, index: slice) -> Word: ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.alphabet, self.codes[index])
        return Letter(self.alphabet, self.codes[index])

    def _check_same_alphabet(self, other: Word):
        if other.alphabet != self.alphabet:
            raise DomainError(
                f"cannot combine words over '{self.alphabet.name}' and '{other.alphabet.name}'"
            )

    def __add__(self, other: Word | Letter) -> Word:
        if isinstance(other, Letter):
            other = other.word()
        self._check_same_alphabet(other)
        return Word(self.alphabet, self.codes + other.codes)

    def __lt__(self, other: Word) -> bool:
        self._check_same_alphabet(other)
        return self.codes < other.codes

    def __le__(self, other: Word) -> bool:
        self._check_same_alphabet(other)
        return self.codes <= other.codes

    def count(self, letter: Letter) -> int:
        return self.codes.count(letter.code)

    def prefix(self, length: int) -> Word:
        return Word(self.alphabet, self.codes[:length])

    def suffix(self, length: int) -> Word:
        if length == 0:
            return self.alphabet.empty()
        return Word(self.alphabet, self.codes[-length:])

    def is_prefix_of(self, other: Word) -> bool:
        return self.alphabet == other.alphabet and other.codes.startswith(self.codes)

    def is_subword_of(self, other: Word) -> bool:
        return self.alphabet == other.alphabet and self.codes in other.codes


def letters_of(w: Word) -> frozenset[Letter]:
    """
    :returns [frozenset[Letter]]: Letters occurring in w.
    """
    return frozenset(Letter(w.alphabet, c) for c in set(w.codes))


def format_letters(letters: Iterable[Letter]) -> str:
    """
    Renders a set of letters in alphabet order, e.g. "xyz".
    """
    return "".join(str(s) for s in sorted(letters))
