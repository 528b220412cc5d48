"""Totally real fields with generators delta (totally negative, generating the
different) and u*delta (hyperbolic trace form), as printed coefficient data.

Coefficient lists are lowest degree first; ``den`` is a global denominator.
"""
from __future__ import annotations

FIELD_DATA: dict[str, dict] = {
    # Q(zeta_7)^+, alpha = zeta + 1/zeta
    "cubic7": {
        "f": [-1, -2, 1, 1],
        "delta": ([-4, -3, -1], 1),
        "udelta": ([-6, -1, 2], 1),
        "l": 7,
    },
    "f4": {
        "f": [1, -1, -6, 1, 1],
        "delta": ([46, 76, -19, -14], 1),
        "udelta": ([-5, -26, -2, 3], 2),
        "l": 5,
    },
    "g4": {
        "f": [4, 0, -6, 0, 1],
        "delta": ([16, -14, -2, 3], 1),
        "udelta": ([16, -8, -2, 1], 1),
        "l": 5,
    },
    "f6": {
        "f": [-1, 3, 6, -4, -5, 1, 1],
        "delta": ([-21, 72, -7, -55, 4, 10], 1),
        "udelta": ([-1, -4, -22, 11, 7, -2], 1),
        "l": 3,
    },
    "g7": {
        "f": [-49, 7, 104, 38, -35, -18, 1, 1],
        "delta": ([-1553433, 1241898, 2481943, -425142, -830561, -25217, 48274], 7),
        "udelta": ([7749, -15145, 1455, 6270, -1418, -582, 138], 7),
        "l": 3,
    },
    "f7": {
        "f": [1, -2, -10, 7, 9, -5, -2, 1],
        "delta": ([-6, -3, 15, 7, -13, -3, 2], 1),
        "udelta": ([-6, -20, -11, 33, -2, -13, 4], 1),
        "l": 3,
    },
}

TABLE_ROWS = ("f4", "g4", "f6", "g7", "f7")
