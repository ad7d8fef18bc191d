from __future__ import annotations
from dataclasses import dataclass
from typing import Mapping

from ..config import check_capacity
from ..errors import DomainError
from .alphabet import Alphabet, Letter, Word


@dataclass(frozen=True)
class Substitution:
    """
    Non-erasing substitution (morphism) on the words of an alphabet.

    images[c] is the image of the letter with code c.
    """

    name: str
    alphabet: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.alphabet):
            raise DomainError(
                f"substitution '{self.name}' needs one image per letter of {self.alphabet}"
            )
        for letter, image in zip(self.alphabet, self.images):
            if image.alphabet != self.alphabet:
                raise DomainError(
                    f"image of '{letter}' under '{self.name}' leaves alphabet {self.alphabet}"
                )
            if len(image) == 0:
                raise DomainError(
                    f"substitution '{self.name}' erases letter '{letter}'"
                )

    @staticmethod
    def from_images(name: str, alphabet: Alphabet, images: Mapping[str, str]) -> Substitution:
        """
        Builds a substitution from symbol images, e.g. {"a": "axa", "x": "y"}.

        :param name [str]: Name of the substitution.
        :param alphabet [Alphabet]: Alphabet the substitution acts on.
        :param images [Mapping[str, str]]: Image word of every symbol.

        :returns [Substitution]: Substitution object.
        """
        missing = [s for s in alphabet.symbols if s not in images]
        if missing:
            raise DomainError(f"substitution '{name}' has no image for {missing}")
        return Substitution(
            name, alphabet, tuple(alphabet.word(images[s]) for s in alphabet.symbols)
        )

    def image(self, letter: Letter) -> Word:
        if letter.alphabet != self.alphabet:
            raise DomainError(
                f"letter '{letter}' does not belong to the alphabet of '{self.name}'"
            )
        return self.images[letter.code]

    def cycle_of(self, letter: Letter) -> tuple[Letter, ...] | None:
        """
        Returns the orbit of a letter if the substitution permutes it cyclically
        through one-letter images, e.g. x -> y -> z -> x under tau.

        :returns [tuple[Letter, ...] | None]: The cycle starting at letter, or None.
        """
        orbit = [letter]
        current = letter
        while True:
            image = self.image(current)
            if len(image) != 1:
                return None
            current = image[0]
            if current == letter:
                return tuple(orbit)
            if current in orbit:
                return None
            orbit.append(current)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return ", ".join(
            f"{letter} -> {image}" for letter, image in zip(self.alphabet, self.images)
        )


def apply(sub: Substitution, w: Word) -> Word:
    """
    Applies a substitution letter by letter.

    :param sub [Substitution]: Substitution to apply.
    :param w [Word]: Word over the alphabet of sub.

    :returns [Word]: Concatenation of the images of the letters of w.
    """
    if w.alphabet != sub.alphabet:
        raise DomainError(
            f"word over {w.alphabet} is outside the alphabet of '{sub.name}'"
        )
    images = [image.codes for image in sub.images]
    check_capacity(sum(len(images[c]) for c in w.codes), f"{sub.name}(w)")
    return Word(sub.alphabet, b"".join(images[c] for c in w.codes))


def image_length(sub: Substitution, s: Letter, n: int) -> int:
    """
    Length of sub^n(s), computed without generating the word.

    :param sub [Substitution]: Substitution.
    :param s [Letter]: Start letter.
    :param n [int]: Number of iterations, non-negative.

    :returns [int]: Length of the n-th iterate.
    """
    if n < 0:
        raise DomainError(f"number of iterations must be non-negative, got {n}")
    sub.image(s)
    lengths = [1] * len(sub.alphabet)
    for _ in range(n):
        lengths = [sum(lengths[c] for c in image.codes) for image in sub.images]
    return lengths[s.code]


def iterate(sub: Substitution, s: Letter, n: int) -> Word:
    """
    Computes sub^n(s). Letters permuted cyclically by one-letter images are
    resolved through their cycle instead of n applications.

    :param sub [Substitution]: Substitution.
    :param s [Letter]: Start letter.
    :param n [int]: Number of iterations, non-negative.

    :returns [Word]: The n-th iterate of s.
    """
    if n < 0:
        raise DomainError(f"number of iterations must be non-negative, got {n}")
    cycle = sub.cycle_of(s)
    if cycle is not None:
        return cycle[n % len(cycle)].word()
    check_capacity(image_length(sub, s, n), f"{sub.name}^{n}({s})")
    w = s.word()
    for _ in range(n):
        w = apply(sub, w)
    return w


def reverse(w: Word) -> Word:
    """
    :returns [Word]: Letters of w in reversed order.
    """
    return Word(w.alphabet, w.codes[::-1])


@dataclass(frozen=True)
class Relabeling:
    """
    Bijection between the letters of two alphabets of equal size.

    images[c] is the target code of the source letter with code c.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.source) != len(self.target) or len(self.images) != len(self.source):
            raise DomainError("relabeling must map every source letter")
        if sorted(self.images) != list(range(len(self.target))):
            raise DomainError("relabeling is not a bijection")

    @staticmethod
    def from_mapping(
        source: Alphabet, target: Alphabet, mapping: Mapping[str, str]
    ) -> Relabeling:
        """
        Builds a relabeling from symbols, e.g. {"a": "a", "x": "c", ...}.
        """
        missing = [s for s in source.symbols if s not in mapping]
        if missing:
            raise DomainError(f"relabeling has no image for {missing}")
        return Relabeling(
            source, target, tuple(target.code(mapping[s]) for s in source.symbols)
        )

    def __call__(self, letter: Letter) -> Letter:
        if letter.alphabet != self.source:
            raise DomainError(f"letter '{letter}' is not mapped by this relabeling")
        return Letter(self.target, self.images[letter.code])

    def inverse(self) -> Relabeling:
        inverse = [0] * len(self.images)
        for code, image in enumerate(self.images):
            inverse[image] = code
        return Relabeling(self.target, self.source, tuple(inverse))

    def as_dict(self) -> dict[str, str]:
        return {str(letter): str(self(letter)) for letter in self.source}


def relabel(w: Word, mapping: Relabeling) -> Word:
    """
    Applies a letter bijection letter-wise.

    :param w [Word]: Word over the source alphabet of the relabeling.
    :param mapping [Relabeling]: Letter bijection.

    :returns [Word]: Relabeled word over the target alphabet.
    """
    if w.alphabet != mapping.source:
        raise DomainError(f"word over {w.alphabet} has letters the relabeling does not map")
    table = bytes(mapping.images) + bytes(256 - len(mapping.images))
    return Word(mapping.target, w.codes.translate(table))
