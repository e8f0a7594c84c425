"""Checked-in transcription of the published unit/genus tables.

Rows are (dtilde_class mod 16, eps-class label, tuple of d0 residues mod 8)
in publication order.  regenerate_table must reproduce these byte for byte.
"""

TABLE_ROWS = [
    # dtilde = 2 mod 16
    (2, "-1", (7,)),
    (2, "(1+sqrt(d))^2", (1,)),
    (2, "-(1+sqrt(d))^4", (7,)),
    (2, "(1+sqrt(d))^6", (1,)),
    # dtilde = 3 mod 16
    (3, "(1,1,0)", (5, 7)),
    (3, "(1,1,1)", (1, 3)),
    (3, "(1,3,0)", (5, 7)),
    (3, "(1,3,1)", (1, 3)),
    (3, "(3,1,0)", (5, 7)),
    (3, "(3,1,1)", (1, 3)),
    (3, "(3,3,0)", (5, 7)),
    (3, "(3,3,1)", (1, 3)),
    # dtilde = 6 mod 16
    (6, "-1", (5,)),
    (6, "5(1+sqrt(d))^2", (7,)),
    (6, "-(1+sqrt(d))^4", (5,)),
    (6, "5(1+sqrt(d))^6", (7,)),
    # dtilde = 7 mod 16
    (7, "(1,0,0)", (5,)),
    (7, "(1,0,1)", (1,)),
    (7, "(1,2,0)", (5,)),
    (7, "(1,2,1)", (1,)),
    (7, "(3,0,0)", (5,)),
    (7, "(3,0,1)", (1,)),
    (7, "(3,2,0)", (5,)),
    (7, "(3,2,1)", (1,)),
    # dtilde = 10 mod 16
    (10, "-1", (3,)),
    (10, "(1+sqrt(d))^2", (5,)),
    (10, "-(1+sqrt(d))^4", (3,)),
    (10, "(1+sqrt(d))^6", (5,)),
    # dtilde = 11 mod 16
    (11, "(1,1,0)", (1, 3)),
    (11, "(1,1,1)", (5, 7)),
    (11, "(1,3,0)", (1, 3)),
    (11, "(1,3,1)", (5, 7)),
    (11, "(3,1,0)", (1, 3)),
    (11, "(3,1,1)", (5, 7)),
    (11, "(3,3,0)", (1, 3)),
    (11, "(3,3,1)", (5, 7)),
    # dtilde = 14 mod 16: no table published; the norm constraint alone
    # already forces d0 = 1, 3 mod 8 and the two-adic character is trivial
    (14, "norm-constraint-only", (1, 3)),
    # dtilde = 15 mod 16
    (15, "(1,0,0)", (1,)),
    (15, "(1,0,1)", (5,)),
    (15, "(1,2,0)", (1,)),
    (15, "(1,2,1)", (5,)),
    (15, "(3,0,0)", (1,)),
    (15, "(3,0,1)", (5,)),
    (15, "(3,2,0)", (1,)),
    (15, "(3,2,1)", (5,)),
]

SUPPORTED_CLASSES = (2, 3, 6, 7, 10, 11, 14, 15)
