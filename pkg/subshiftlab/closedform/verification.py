from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Optional

from tqdm import tqdm  # type: ignore[import-untyped]

from ..errors import DomainError
from ..factors import FactorIndex
from ..substitution import format_letters
from .complexity import (
    ComplexityProfile,
    ProfileSource,
    complexity_delta,
    complexity_formula,
)
from .special import right_special_formula


def _format_pairs(pairs) -> str:
    return "{" + ", ".join(
        f"{w}:{format_letters(ext)}" for w, ext in sorted(pairs, key=lambda p: p[0].codes)
    ) + "}"


@dataclass(frozen=True)
class Counterexample:
    """
    First length at which formula and oracle disagree.
    """

    length: int
    check: str
    expected: str
    observed: str

    def describe(self) -> str:
        return (
            f"mismatch at L={self.length} ({self.check}): "
            f"formula={self.expected} oracle={self.observed}"
        )


@dataclass(frozen=True)
class VerificationReport:
    l_max: int
    passed: bool
    counterexample: Optional[Counterexample]
    mismatches: int
    oracle: ComplexityProfile

    def summary_line(self) -> str:
        """
        :returns [str]: Machine-readable line "VERIFY pass|fail L_max=<n>".
        """
        return f"VERIFY {'pass' if self.passed else 'fail'} L_max={self.l_max}"

    def info(self) -> str:
        s = "Verification Report\n"
        s += "-------------------\n"
        s += f"**Lengths checked:** 1..{self.l_max}\n"
        s += "**Checks:** complexity, first difference, right-special words\n"
        s += f"**Mismatches:** {self.mismatches}\n"
        if self.counterexample is not None:
            s += f"**First counterexample:** {self.counterexample.describe()}\n"
        s += self.summary_line() + "\n"
        return s


def verify_range(l_max: int, progress: bool = False) -> VerificationReport:
    """
    Compares the closed forms with the brute-force oracle for every length
    1 <= L <= l_max: the complexity C(L), the first difference C(L+1) - C(L)
    and the set of right-special words with their extensions.

    The oracle streams all lengths over one harvested word, so factor sets of
    adjacent lengths are refined rather than rebuilt.

    :param l_max [int]: Largest length to check, positive.
    :param progress [bool]: Whether to show a progress bar. Defaults to False.

    :returns [VerificationReport]: Pass/fail with the first counterexample, if any.
    """
    if l_max < 1:
        raise DomainError(f"l_max must be positive, got {l_max}")
    index = FactorIndex.covering(l_max)
    values = [index.complexity()]
    first: Optional[Counterexample] = None
    mismatches = 0

    for L in tqdm(range(1, l_max + 1), desc="Verifying", disable=not progress):
        c_oracle = values[-1]
        c_next = index.next_complexity()
        values.append(c_next)

        found: list[Counterexample] = []
        c_formula = complexity_formula(L)
        if c_formula != c_oracle:
            found.append(Counterexample(L, "complexity", str(c_formula), str(c_oracle)))
        delta = complexity_delta(L)
        if delta != c_next - c_oracle:
            found.append(
                Counterexample(L, "first difference", str(delta), str(c_next - c_oracle))
            )
        expected = right_special_formula(L).pairs()
        observed = frozenset(r.right_pair() for r in index.right_special())
        if expected != observed:
            found.append(
                Counterexample(
                    L, "right-special words", _format_pairs(expected), _format_pairs(observed)
                )
            )

        if found:
            mismatches += len(found)
            if first is None:
                first = found[0]
                logging.info(first.describe())
        if L < l_max:
            index.advance()

    oracle = ComplexityProfile(l_max, tuple(values), ProfileSource.ORACLE)
    report = VerificationReport(l_max, first is None, first, mismatches, oracle)
    logging.info(report.summary_line())
    return report

