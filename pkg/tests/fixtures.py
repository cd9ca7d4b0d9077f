"""Shared worked-example fixtures used across the test modules."""

from coswitch.core import SkewTableau
from coswitch.switching import TableauPair


def grid(text: str) -> SkewTableau:
    return SkewTableau.from_grid(text)


# the running example pair: blue inner X, red outer T (values written plainly)
SWITCH_X = grid(". . 1 2\n. 2 2\n1")
SWITCH_T = grid(". . . . 1\n. . . 3\n. 2 3")

SWITCH_OUT_T = grid(". . 1 3\n. 2 3")
SWITCH_OUT_X = grid(". . . . 2\n. . . 1\n1 2 2")

COSWITCH_OUT_T = grid(". . 3 3\n. 1\n2")
COSWITCH_OUT_X = grid(". . . . 2\n. . 1 2\n. 1 2")

PESH_OUT_T = COSWITCH_OUT_T
PESH_OUT_X = grid(". . . . 2\n. . 1 1\n. 1 2")

EPAIR_OUT_T = grid(". . 1 2\n. 1\n3")
EPAIR_OUT_X = grid(". . . . 2\n. . 1 1\n. 1 2")

# evacuation of a straight tableau
EVAC_IN = grid("1 1 3\n2 2\n3 4")
EVAC_OUT = grid("1 2 3\n2 3\n4 4")

# hopping example: combined grid, marks for the inner tableau
HOP_IN = grid(". x1 x3 1\nx2 1 1\n1 2 2")
HOP_OUT = grid(". 1 1 1\n1 2 x2\n2 x1 x3")
HOP_A = [3, 2, 3]

# the same pair, run with an initial evacuation (computes the coplactic switch)
HOP_COSWITCH_OUT = grid(". 1 1 1\n1 2 x1\n2 x2 x3")
HOP_COSWITCH_A = [2, 3, 3]

# label tracking: state at the end of phase 1
TRACKED_MID = grid(". 1 1 1\n1 2 2\n2_2 3_3 3_1")

# array algorithm
ARRAY_B = [2, 3, 3]
ARRAY_OUT = HOP_COSWITCH_OUT

# chain instance: four links, the middle two are switched
CHAIN_X2 = grid(". . 1 1\n. 1 2\n1")
CHAIN_X3 = grid(". . . . 1\n. . . 2\n. 1 1")
CHAIN_OUT_X3 = grid(". . 1 1\n. 1\n2")
CHAIN_OUT_X2 = grid(". . . . 1\n. . 1 1\n. 1 2")

# monodromy fixed point
MONO_X = grid(". . 1\n. 2\n3")
MONO_T = grid(". . . 1 1\n. . 1 2\n. 1")
MONO_RECT = "x1 1 1 1 1\nx2 2\nx3"
MONO_COSWITCH = grid(". . 1 1 x1\n. 1 2 x2\n1 x3")


def mono_pair() -> TableauPair:
    return TableauPair(MONO_X, MONO_T)
