# -*- coding: utf-8 -*-

""" worked example over F_17 with l = 2 (e = 8, k = 2), gamma' = 11, gamma'' = 3, r0 = 7
"""


def _bits(*rows):
    return tuple(tuple(int(c) for c in row) for row in rows)


def _ints(*rows):
    return tuple(tuple(int(c) for c in row.split()) for row in rows)


def _pairs(*rows):
    return tuple(tuple(tuple(int(x) for x in cell.split(",")) for cell in row.strip("()").split(")("))
            for row in rows)


P = 17
L = 2
GAMMA_PRIME = 11
GAMMA_DOUBLE_PRIME = 3
R0 = 7

GENERATORS = (3, 5, 6, 7, 10, 11, 12, 14)

# cyclotomic matrix of 3
B0 = _bits(
    "00000010",
    "00001010",
    "00110000",
    "00100001",
    "01000100",
    "00001001",
    "11000000",
    "00010100",
)

# cyclotomic matrix of 11, the public matrix
B3 = _bits(
    "00100000",
    "00010100",
    "10000001",
    "01001000",
    "00010001",
    "01000010",
    "00000110",
    "00101000",
)

# plaintext block
A = _ints(
    "2 3 5 9 8 0 2 1",
    "1 5 9 2 9 3 0 5",
    "2 1 3 2 5 6 8 7",
    "5 3 0 7 8 7 3 1",
    "4 2 3 1 9 8 7 3",
    "0 9 2 3 5 6 8 9",
    "1 0 2 9 6 7 9 8",
    "9 1 3 2 4 4 5 6",
)

# B3 x A
C = _ints(
    "2 1 3 2 5 6 8 7",
    "5 12 2 10 13 13 11 10",
    "11 4 8 11 12 4 7 7",
    "5 7 12 3 18 11 7 8",
    "14 4 3 9 12 11 8 7",
    "2 5 11 11 15 10 9 13",
    "1 9 4 12 11 13 17 17",
    "6 3 6 3 14 14 15 10",
)

# representative table relabelled by r0 = 7
D = _pairs(
    "(0,0)(0,7)(0,6)(0,5)(0,4)(0,3)(0,2)(0,1)",
    "(0,7)(0,1)(1,2)(1,6)(1,5)(1,4)(1,3)(1,2)",
    "(0,6)(1,2)(0,2)(1,3)(2,4)(2,5)(2,4)(1,6)",
    "(0,5)(1,6)(1,3)(0,3)(1,4)(2,5)(2,5)(1,5)",
    "(0,4)(1,5)(2,4)(1,4)(0,4)(1,5)(2,4)(1,4)",
    "(0,3)(1,4)(2,5)(2,5)(1,5)(0,5)(1,6)(1,3)",
    "(0,2)(1,3)(2,4)(2,5)(2,4)(1,6)(0,6)(1,2)",
    "(0,1)(1,2)(1,6)(1,5)(1,4)(1,3)(1,2)(0,7)",
)

# inverse of B3
D_STAR = _ints(
    "-1 1 1 -1 -1 1 -1 1",
    "1 0 0 1 0 0 0 -1",
    "1 0 0 0 0 0 0 0",
    "-1 1 0 -1 0 1 -1 1",
    "-1 0 0 0 0 0 0 1",
    "1 0 0 1 0 -1 1 -1",
    "-1 0 0 -1 0 1 0 1",
    "1 -1 0 1 1 -1 1 -1",
)

# representatives, l = 2, k even
TABLE_EVEN = _pairs(
    "(0,0)(0,1)(0,2)(0,3)(0,4)(0,5)(0,6)(0,7)",
    "(0,1)(0,7)(1,2)(1,3)(1,4)(1,5)(1,6)(1,2)",
    "(0,2)(1,2)(0,6)(1,6)(2,4)(2,5)(2,4)(1,3)",
    "(0,3)(1,3)(1,6)(0,5)(1,5)(2,5)(2,5)(1,4)",
    "(0,4)(1,4)(2,4)(1,5)(0,4)(1,4)(2,4)(1,5)",
    "(0,5)(1,5)(2,5)(2,5)(1,4)(0,3)(1,3)(1,6)",
    "(0,6)(1,6)(2,4)(2,5)(2,4)(1,3)(0,2)(1,2)",
    "(0,7)(1,2)(1,3)(1,4)(1,5)(1,6)(1,2)(0,1)",
)

# representatives, l = 2, k odd
TABLE_ODD = _pairs(
    "(0,0)(0,1)(0,2)(0,3)(0,4)(0,5)(0,6)(0,7)",
    "(1,0)(1,1)(1,2)(1,3)(0,5)(0,3)(1,3)(1,7)",
    "(2,0)(2,1)(2,0)(1,7)(0,6)(1,3)(0,2)(1,2)",
    "(1,1)(2,1)(2,1)(1,0)(0,7)(1,7)(1,2)(0,1)",
    "(0,0)(1,0)(2,0)(1,1)(0,0)(1,0)(2,0)(1,1)",
    "(1,0)(0,7)(1,7)(1,2)(0,1)(1,1)(2,1)(2,1)",
    "(2,0)(1,7)(0,6)(1,3)(0,2)(1,2)(2,0)(2,1)",
    "(1,1)(1,2)(1,3)(0,5)(0,3)(1,3)(1,7)(1,0)",
)
