"""
Words of the Lysenok presentation of the Grigorchuk group

    < a, b, c, d | a^2, b^2, c^2, d^2, bcd, kappa^k((ad)^4), kappa^k((adacac)^4), k >= 0 >

where kappa is the substitution a -> aca, b -> d, c -> b, d -> c. Under the
letter bijection a -> a, x -> c, y -> b, z -> d, kappa is conjugate to tau.
"""

from __future__ import annotations
from dataclasses import dataclass

from ..config import check_capacity
from ..errors import DomainError
from ..substitution import (
    TAU_ALPHABET,
    Alphabet,
    Relabeling,
    Substitution,
    Word,
    apply,
    image_length,
)

KAPPA_ALPHABET = Alphabet("kappa", ("a", "b", "c", "d"))

STATIC_RELATORS = ("aa", "bb", "cc", "dd", "bcd")

"""
Tag of the static relators in annotated dumps.
"""
STATIC_TAG = "static"


def kappa() -> Substitution:
    """
    :returns [Substitution]: The substitution a -> aca, b -> d, c -> b, d -> c.
    """
    return Substitution.from_images(
        "kappa", KAPPA_ALPHABET, {"a": "aca", "b": "d", "c": "b", "d": "c"}
    )


def tau_kappa_bridge() -> Relabeling:
    """
    Letter bijection from the tau alphabet to the kappa alphabet with
    relabel(tau(w)) == kappa(relabel(w)) for every word w.

    :returns [Relabeling]: a -> a, x -> c, y -> b, z -> d. Use inverse() for the way back.
    """
    return Relabeling.from_mapping(
        TAU_ALPHABET, KAPPA_ALPHABET, {"a": "a", "x": "c", "y": "b", "z": "d"}
    )


@dataclass(frozen=True)
class RelatorFamily:
    """
    Family of relators kappa^k(base), k = 0, 1, 2, ...
    """

    name: str
    base: str

    def base_word(self) -> Word:
        return KAPPA_ALPHABET.word(self.base)

    def member_length(self, k: int) -> int:
        """
        :returns [int]: Length of kappa^k(base), without generating it.
        """
        sub = kappa()
        return sum(image_length(sub, letter, k) for letter in self.base_word())

    def member(self, k: int) -> Word:
        """
        :param k [int]: Number of kappa applications, non-negative.

        :returns [Word]: kappa^k(base).
        """
        if k < 0:
            raise DomainError(f"k must be non-negative, got {k}")
        check_capacity(self.member_length(k), f"kappa^{k}({self.base})")
        sub = kappa()
        w = self.base_word()
        for _ in range(k):
            w = apply(sub, w)
        return w

    def members(self, k_max: int) -> list[Word]:
        """
        :returns [list[Word]]: kappa^k(base) for k = 0..k_max.
        """
        if k_max < 0:
            raise DomainError(f"k_max must be non-negative, got {k_max}")
        check_capacity(self.member_length(k_max), f"kappa^{k_max}({self.base})")
        sub = kappa()
        words = [self.base_word()]
        for _ in range(k_max):
            words.append(apply(sub, words[-1]))
        return words


AD4 = RelatorFamily("ad4", "ad" * 4)
ADACAC4 = RelatorFamily("adacac4", "adacac" * 4)

FAMILIES = {family.name: family for family in (AD4, ADACAC4)}


def _family(family: RelatorFamily | str) -> RelatorFamily:
    if isinstance(family, RelatorFamily):
        return family
    if family not in FAMILIES:
        raise DomainError(f"unknown relator family {family!r}, expected one of {list(FAMILIES)}")
    return FAMILIES[family]


def relator(family: RelatorFamily | str, k: int) -> Word:
    """
    :param family [RelatorFamily | str]: AD4, ADACAC4 or their names "ad4", "adacac4".
    :param k [int]: Number of kappa applications, non-negative.

    :returns [Word]: kappa^k applied to the base word of the family.
    """
    return _family(family).member(k)


def annotated_relators(k_max: int, family: str = "all") -> list[tuple[str, Word]]:
    """
    Relators in emission order, each paired with a tag: "static" for the
    involution and bcd relators, "<family>:<k>" for family members.
    Families are interleaved by k: ad4 before adacac4 for every k.

    :param k_max [int]: Largest k, non-negative.
    :param family [str]: "ad4", "adacac4" or "all". Only "all" includes static relators. Defaults to "all".

    :returns [list[tuple[str, Word]]]: (tag, relator) pairs.
    """
    if family == "all":
        selected = list(FAMILIES.values())
        tagged = [(STATIC_TAG, KAPPA_ALPHABET.word(r)) for r in STATIC_RELATORS]
    else:
        selected = [_family(family)]
        tagged = []
    members = [f.members(k_max) for f in selected]
    for k in range(k_max + 1):
        for f, words in zip(selected, members):
            tagged.append((f"{f.name}:{k}", words[k]))
    return tagged


def lysenok_relators(k_max: int) -> list[Word]:
    """
    Static relators followed by kappa^k((ad)^4) and kappa^k((adacac)^4) for
    k = 0..k_max.

    :param k_max [int]: Largest k, non-negative.

    :returns [list[Word]]: 5 + 2 (k_max + 1) relators.
    """
    return [w for _, w in annotated_relators(k_max, "all")]
