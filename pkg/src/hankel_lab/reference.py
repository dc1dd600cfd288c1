"""Printed reference values used as oracles, and the per-sequence Hankel products."""

from __future__ import annotations

from fractions import Fraction

from .exact_core import pochhammer

F = Fraction

U_VALUES = (1, 2, 11, 170, 7429, 920460, 323801820)
V_VALUES = (1, 3, 26, 646, 45885, 9304650, 5382618660)
W_VALUES = (1, 1, 2, 6, 33, 286, 4420)

SEQUENCE_TABLE = {
    "a": (1, 1, 3, 12, 55, 273, 1428, 7752),
    "b": (1, 2, 7, 30, 143, 728, 3876, 21318),
    "c": (2, 3, 10, 42, 198, 1001, 5304, 29070),
    "d": (2, 1, 2, 6, 22, 91, 408, 1938),
    "e": (5, 7, 23, 96, 451, 2275, 12036, 65892),
}

# (letter, window) -> H_n for n = 1..7
HANKEL_TABLE = {
    ("a", "H"): (1, 2, 11, 170, 7429, 920460, 323801820),
    ("a", "H1"): (1, 3, 26, 646, 45885, 9304650, 5382618660),
    ("b", "H"): (1, 3, 26, 646, 45885, 9304650, 5382618660),
    ("b", "H1"): (2, 11, 170, 7429, 920460, 323801820, 323674802088),
    ("c", "H"): (2, 11, 170, 7429, 920460, 323801820, 323674802088),
    ("c", "H1"): (3, 26, 646, 45885, 9304650, 5382618660, 8878734657276),
    ("d", "H"): (2, 3, 10, 85, 1932, 120060, 20648232),
    ("d", "H1"): (1, 2, 10, 133, 4830, 485460, 136112196),
    ("e", "H"): (5, 66, 2431, 252586, 74327145, 62062015500, 147198472495020),
    ("e", "H1"): (7, 143, 8398, 1411510, 677688675, 928501718850, 3628173844041420),
}

ASM_VALUES = (1, 2, 7, 42, 429, 7436)

# printed slide-count table N(i, j), i, j = 0..4; None marks entries left blank
SLIDE_TABLE = (
    (1, 2, 1, 0, 0),
    (2, 5, 9, 5, 1),
    (1, 9, None, None, None),
    (0, 5, None, None, None),
    (0, 1, None, None, None),
)

# (letter, window) -> (sign_alternates, constant, top params, bottom params).
# H: prod_{i=0}^{n-1}; H1: prod_{i=1}^{n}; each factor is
# constant * prod (top)_i / prod (bottom)_{2i} * (27/4)^(2i).
HANKEL_PRODUCTS = {
    ("a", "H"): (False, F(1), (F(2, 3), F(1, 6), F(4, 3), F(5, 6)), (F(1, 2), F(3, 2))),
    ("a", "H1"): (False, F(2, 3), (F(2, 3), F(1, 6), F(1, 3), F(-1, 6)), (F(1, 2), F(-1, 2))),
    ("b", "H"): (False, F(1), (F(4, 3), F(5, 6), F(5, 3), F(7, 6)), (F(3, 2), F(5, 2))),
    ("b", "H1"): (False, F(1), (F(4, 3), F(5, 6), F(2, 3), F(1, 6)), (F(3, 2), F(1, 2))),
    ("c", "H"): (False, F(2), (F(5, 3), F(7, 6), F(7, 3), F(11, 6)), (F(5, 2), F(7, 2))),
    ("c", "H1"): (False, F(1), (F(5, 3), F(7, 6), F(4, 3), F(5, 6)), (F(5, 2), F(3, 2))),
    ("d", "H"): (False, F(2), (F(5, 3), F(1, 6), F(7, 3), F(5, 6)), (F(5, 2), F(3, 2))),
    ("d", "H1"): (True, F(1), (F(5, 3), F(1, 6), F(4, 3), F(-1, 6)), (F(3, 2), F(1, 2))),
    ("e", "H"): (False, F(5), (F(2, 3), F(7, 6), F(4, 3), F(11, 6)), (F(3, 2), F(5, 2))),
    ("e", "H1"): (False, F(2), (F(2, 3), F(7, 6), F(1, 3), F(5, 6)), (F(3, 2), F(1, 2))),
}


def hankel_product(letter: str, window: str, n: int) -> Fraction:
    """Product formula for H_n or H^1_n of one of the sequences a..e."""
    alternating, const, top, bottom = HANKEL_PRODUCTS[(letter, window)]
    rho = F(27, 4)
    idx = range(n) if window == "H" else range(1, n + 1)
    out = F(-1) ** n if alternating else F(1)
    for i in idx:
        num = const
        for t in top:
            num *= pochhammer(t, i)
        for b in bottom:
            num /= pochhammer(b, 2 * i)
        out *= num * rho ** (2 * i)
    return out
