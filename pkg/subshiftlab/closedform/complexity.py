"""
Closed-form complexity function of the tau subshift and its first
differences, and complexity profiles built from the formula or the oracle.

For n >= 2 and L = 2^n + k with 0 <= k < 2^n:

    C(L) = 2^(n+1) + 2^(n-1) + 3k    if k < 2^(n-1)
    C(L) = 2^(n+1) + 2^n + 2k        otherwise

with C(1) = 4, C(2) = 6, C(3) = 8.
"""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from enum import Enum

import pandas as pd

from tqdm import tqdm  # type: ignore[import-untyped]

from ..errors import DomainError, OutOfRegimeError
from ..factors import FactorIndex

SMALL_COMPLEXITY = {0: 1, 1: 4, 2: 6, 3: 8}
SMALL_DELTA = {1: 2, 2: 2, 3: 2}

"""
First length covered by the general formulas.
"""
REGIME_START = 4


def decompose(L: int) -> tuple[int, int]:
    """
    Writes L = 2^n + k with 0 <= k < 2^n.

    :param L [int]: Length, positive.

    :returns [tuple[int, int]]: The pair (n, k).
    """
    if L < 1:
        raise DomainError(f"length must be positive, got {L}")
    n = L.bit_length() - 1
    return n, L - 2**n


def complexity_formula(L: int) -> int:
    """
    Number of factors of length L. C(0) = 1 counts the empty word.

    :param L [int]: Length, non-negative.

    :returns [int]: C(L).
    """
    if L < 0:
        raise DomainError(f"length must be non-negative, got {L}")
    if L < REGIME_START:
        return SMALL_COMPLEXITY[L]
    n, k = decompose(L)
    if k < 2 ** (n - 1):
        return 2 ** (n + 1) + 2 ** (n - 1) + 3 * k
    return 2 ** (n + 1) + 2**n + 2 * k


def complexity_delta_formula(L: int) -> int:
    """
    C(L+1) - C(L) for L >= 4: 3 on the first half of [2^n, 2^(n+1)), 2 on the second.

    :param L [int]: Length, at least 4.

    :returns [int]: 2 or 3.
    """
    if L < REGIME_START:
        raise OutOfRegimeError(
            f"the growth formula covers lengths from {REGIME_START} on, got {L}"
        )
    n, k = decompose(L)
    return 3 if k < 2 ** (n - 1) else 2


def complexity_delta(L: int) -> int:
    """
    C(L+1) - C(L) for every positive L, small lengths included.
    """
    if L < 1:
        raise DomainError(f"length must be positive, got {L}")
    if L < REGIME_START:
        return SMALL_DELTA[L]
    return complexity_delta_formula(L)


def entropy_estimate(L: int) -> float:
    """
    :returns [float]: ln C(L) / L, which tends to the topological entropy 0.
    """
    if L < 1:
        raise DomainError(f"length must be positive, got {L}")
    return math.log(complexity_formula(L)) / L


class ProfileSource(str, Enum):
    ORACLE = "oracle"
    FORMULA = "formula"


@dataclass(frozen=True)
class ComplexityProfile:
    """
    Table L -> C(L) for 1 <= L <= max_length. values[i] holds C(i+1) and one
    extra entry C(max_length+1) so that every delta is defined.
    """

    max_length: int
    values: tuple[int, ...]
    source: ProfileSource

    def __post_init__(self):
        assert len(self.values) == self.max_length + 1

    def value(self, L: int) -> int:
        if not 1 <= L <= self.max_length + 1:
            raise DomainError(f"length {L} is outside the profile")
        return self.values[L - 1]

    def delta(self, L: int) -> int:
        if not 1 <= L <= self.max_length:
            raise DomainError(f"length {L} is outside the profile")
        return self.values[L] - self.values[L - 1]

    @property
    def deltas(self) -> dict[int, int]:
        return {L: self.delta(L) for L in range(1, self.max_length + 1)}

    def to_dict(self) -> dict[str, list[int]]:
        lengths = list(range(1, self.max_length + 1))
        regimes = [decompose(L) for L in lengths]
        return dict(
            L=lengths,
            C=[self.value(L) for L in lengths],
            delta=[self.delta(L) for L in lengths],
            regime_n=[n for n, _ in regimes],
            regime_k=[k for _, k in regimes],
        )

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.to_dict())


def formula_profile(max_length: int) -> ComplexityProfile:
    if max_length < 1:
        raise DomainError(f"max_length must be positive, got {max_length}")
    values = tuple(complexity_formula(L) for L in range(1, max_length + 2))
    return ComplexityProfile(max_length, values, ProfileSource.FORMULA)


def oracle_profile(max_length: int, progress: bool = False) -> ComplexityProfile:
    """
    Counts factors by brute force for all lengths up to max_length + 1.

    :param max_length [int]: Largest length in the profile.
    :param progress [bool]: Whether to show a progress bar. Defaults to False.
    """
    if max_length < 1:
        raise DomainError(f"max_length must be positive, got {max_length}")
    index = FactorIndex.covering(max_length)
    values = [index.complexity()]
    for _ in tqdm(range(max_length), desc="Lengths", disable=not progress):
        values.append(index.next_complexity())
        index.advance()
    logging.info(f"Counted factors for lengths 1..{max_length + 1}")
    return ComplexityProfile(max_length, tuple(values), ProfileSource.ORACLE)


def complexity_profile(
    max_length: int, source: ProfileSource | str = ProfileSource.FORMULA
) -> ComplexityProfile:
    """
    Builds a complexity profile from the closed form or the brute-force oracle.

    :param max_length [int]: Largest length in the profile.
    :param source [ProfileSource | str]: "formula" or "oracle". Defaults to "formula".
    """
    if ProfileSource(source) is ProfileSource.ORACLE:
        return oracle_profile(max_length)
    return formula_profile(max_length)


def profile_table(formula: ComplexityProfile, oracle: ComplexityProfile) -> pd.DataFrame:
    """
    Joins a formula profile and an oracle profile into one table with columns
    L, C_formula, C_oracle, delta, regime_n, regime_k. The delta column is
    the first difference of the oracle counts.

    :param formula [ComplexityProfile]: Profile from the closed form.
    :param oracle [ComplexityProfile]: Profile from the oracle, same max_length.

    :returns [pd.DataFrame]: Complexity table.
    """
    assert oracle.max_length == formula.max_length
    d = formula.to_dict()
    lengths = d["L"]
    return pd.DataFrame(
        dict(
            L=lengths,
            C_formula=d["C"],
            C_oracle=[oracle.value(L) for L in lengths],
            delta=[oracle.delta(L) for L in lengths],
            regime_n=d["regime_n"],
            regime_k=d["regime_k"],
        )
    )
