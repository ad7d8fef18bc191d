import logging

from ..substitution import tau_n_a
from .factorset import harvest_power

"""
Extra powers of tau harvested beyond the covering one, so that every factor
is seen returning several times.
"""
RETURN_MARGIN = 2


def repetition_window(L: int) -> int:
    """
    Smallest window length R such that every window of length R of the fixed
    point contains every factor of length L, as observed on a long prefix.

    R is determined by the first occurrence of each factor and by the largest
    gap between consecutive occurrences of the same factor. Linear
    repetitivity means R / L stays bounded.

    :param L [int]: Factor length, positive.

    :returns [int]: Observed repetition window R(L).
    """
    power = harvest_power(L) + RETURN_MARGIN
    codes = tau_n_a(power).codes
    last: dict[bytes, int] = {}
    widest_gap = 0
    for i in range(len(codes) - L + 1):
        window = codes[i : i + L]
        widest_gap = max(widest_gap, i - last.get(window, -1))
        last[window] = i
    logging.debug(f"Repetition window for length {L}: {widest_gap + L - 1}")
    return widest_gap + L - 1


def repetitivity_ratio(L: int) -> float:
    """
    :returns [float]: R(L) / L.
    """
    return repetition_window(L) / L
