"""Bundled reference tables: a fixed 9-step pure walk in P_4 with its known
normal forms, and the known images of x_4 under the first walk prefixes.
These anchor the calibrated conventions; `verify-paper` replays them."""

from __future__ import annotations

from .braids import PureLetter

# the fixed 9-step walk: s31^-1, s41, s43^-1, s32^-1, s42, s21, s32, s41^-1, s42^-1
REFERENCE_WALK: list[PureLetter] = [
    ((3, 1), -1), ((4, 1), 1), ((4, 3), -1), ((3, 2), -1), ((4, 2), 1),
    ((2, 1), 1), ((3, 2), 1), ((4, 1), -1), ((4, 2), -1),
]

# normal forms of the first 8 prefixes (exact), in MIForm text format
REFERENCE_FORMS = [
    "e | e | e ; e",
    "e | s3.1^-1 | e ; e",
    "s4.3 s4.1 s4.3^-1 | s3.1^-1 | e ; e",
    "s4.3 s4.1 s4.1 s4.3^-1 s4.1^-1 s4.3^-1 | s3.1^-1 | e ; e",
    "s4.3 s4.1 s4.1 s4.3^-1 s4.1^-1 s4.3^-1 | s3.1^-1 s3.2^-1 | e ; e",
    "s4.3 s4.1 s4.1 s4.3^-1 s4.1^-1 s4.2 s4.3^-1 | s3.1^-1 s3.2^-1 | e ; e",
    "s4.3 s4.1 s4.1 s4.3^-1 s4.1^-1 s4.2 s4.3^-1 | s3.1^-1 s3.2^-1 | s2.1 ; e",
    "s4.3 s4.1 s4.1 s4.3^-1 s4.1^-1 s4.2 s4.3^-1"
    " | s3.1^-1 s3.2^-1 s3.1^-1 s3.2 s3.1 | s2.1 ; e",
]

# known 14-token prefixes of the forms after 8 and 9 steps
REFERENCE_PREFIX_8 = [
    "s4.3", "s4.1", "s4.1", "s4.3^-1", "s4.1^-1", "s4.2", "s4.1^-1",
    "s4.2^-1", "s4.1^-1", "s4.2", "s4.1", "s4.3^-1", "s3.1^-1", "s3.2^-1",
]
REFERENCE_PREFIX_9 = [
    "s4.3", "s4.1", "s4.1", "s4.3^-1", "s4.1^-1", "s4.2", "s4.3^-1",
    "s4.1^-1", "s4.2^-1", "s4.1^-1", "s4.2^-1", "s4.1", "s4.2", "s4.1",
]

# images of x_4 under the walk prefixes (x-alphabet letters, signed)
ARTIN_G2_X4 = (-4, -2, -1, 2, 4, -2, 1, 2, 4)
_A3 = (-2, 1, 2, 3, -2, -1, 2, -4, -2, -1, 2)
ARTIN_G3_X4 = _A3 + (4,) + tuple(-l for l in reversed(_A3))
ARTIN_A3 = _A3  # A_4(gamma_3): the conjugator of the row above
