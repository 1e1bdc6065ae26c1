"""Hand transcriptions of published tables, kept independent of the library.

Tokens use the plain CLI notation: ``(sym)`` followed by ``*sel`` (overlined),
``!max`` (natural sign) and ``~cut`` (struck out); blocks are separated by
`` | ``.
"""

O8_SP10_ROWS = {
    4: [
        ("3,2,1,0;-", "(3;3,2,1,0)*sel!max"),
    ],
    0: [
        ("3,2,1,0;4,3,2,1", "(5,4,3,2,1;3,2,1,0)*sel!max, (5,3,2,1;2,1,0)"),
        ("2,1,0;4,2,1", "(5,3,2,1;2,1,0)*sel!max, (4,3,1;1,0), (5,2,1;1,0)"),
        ("1,0;3,2", "(4,3,1;1,0)*sel!max, (4,2;0)"),
        ("1,0;4,1", "(5,2,1;1,0)*sel!max, (4,2;0), (5,1;0)"),
        ("0;4", "(5,1;0)*sel!max, (5;-)"),
        ("3,1,0;3,2,1", "(4,3,2,1;3,1,0)*sel!max, (4,2,1;2,0) | (5,3,2,1;2,1,0)~cut, (5,2,1;1,0)~cut"),
        ("2,0;3,1", "(4,2,1;2,0)*sel!max, (3,2;1), (4,1;1) | (4,3,1;1,0)~cut, (5,2,1;1,0)~cut, (4,2;0), (5,1;0)~cut"),
        ("1;3", "(4,1;1)*sel!max, (5,0;1) | (4,2;0), (5,1;0)~cut, (5;-)"),
        ("2,1;2,1", "(3,2,1;2,1)*sel!max, (4,2,0;2,1) | (4,2,1;2,0)~cut, (4,1;1)~cut"),
        ("2,1;3,0", "(4,2,0;2,1)*sel!max, (5,1,0;2,1) | (3,2;1), (4,1;1)~cut, (5,0;1)"),
        ("3,0;2,1", "(3,2,1;3,0)*sel!max, (3,1;2) | (4,2,1;2,0)~cut, (4,1;1)~cut | (5,2,1;1,0)~cut, (5,1;0)~cut"),
        ("2;2", "(3,1;2)*sel!max, (4,0;2) | (3,2;1)!max, (4,1;1)~cut, (5,0;1) | (4,2;0), (5,1;0)~cut, (5;-)"),
        ("3,2,1;3,1,0", "(4,3,1,0;3,2,1)*sel!max, (5,2,1,0;3,2,1) | (4,2,0;2,1)~cut, (5,1,0;2,1)"),
        ("3,1;2,0", "(3,2,0;3,1)*sel!max, (4,1,0;3,1) | (4,2,0;2,1)~cut, (5,1,0;2,1), (3,1;2)~cut, (4,0;2) | (4,1;1)~cut, (5,0;1)"),
        ("3;1", "(2,1;3)*sel!max | (3,1;2)!max~cut, (4,0;2) | (4,1;1)~cut, (5,0;1) | (5,1;0)~cut, (5;-)"),
        ("4,3,2,1;3,2,1,0", "(5,3,2,1,0;4,3,2,1)*sel!max | (5,2,1,0;3,2,1)"),
        ("4,2,1;2,1,0", "(4,2,1,0;4,2,1)*sel!max | (5,2,1,0;3,2,1), (4,1,0;3,1) | (5,1,0;2,1)"),
        ("3,2;1,0", "(3,1,0;3,2)*sel!max | (4,1,0;3,1) | (4,0;2)"),
        ("4,1;1,0", "(3,1,0;4,1)*sel!max | (4,1,0;3,1)!max, (3,0;3) | (5,1,0;2,1) | (5,0;1)"),
        ("4;0", "(2,0;4) | (3,0;3)*sel!max | (4,0;2) | (5,0;1) | (5;-)"),
    ],
    -4: [
        ("-;3,2,1,0", ""),
    ],
}

# S_{4,0} in the + order, as printed
S40_CHAIN = [
    "3,2,1,0;4,3,2,1", "2,1,0;4,2,1", "1,0;3,2", "1,0;4,1", "0;4", "3,1,0;3,2,1",
    "2,0;3,1", "1;3", "2,1;2,1", "2,1;3,0", "3,0;2,1", "2;2", "3,2,1;3,1,0",
    "3,1;2,0", "3;1", "4,3,2,1;3,2,1,0", "4,2,1;2,1,0", "3,2;1,0", "4,1;1,0", "4;0",
]

# (O+20, Sp22): theta_k rows and the printed overline values
O20_SP22_THETA = {
    "4,3;3,2": ["4,3,1;4,3", "4,3,2;4,2", "5,3,2;4,1", "6,3,2;4,0"],
    "5,2;3,2": ["4,3,1;5,2", "4,3,2;4,2", "5,3,2;3,2", "6,3,2;3,1", "7,3,2;3,0"],
}
O20_SP22_OVERLINE = {"4,3;3,2": "4,3,2;4,2", "5,2;3,2": "5,3,2;3,2"}

# (O+30, Sp30) peak diagnostics
O30_SOURCE = "9,4,2,1;5,4,2,0"
O30_ALPHA = (1, 3, 6, 7, 8, 9, 10)
O30_BETA = (9, 8, 7, 6, 4, 1, 0)
O30_K0 = 2

# (O+14, Sp8) and (O+14, Sp10) for (4,1;3,1)
O14_SOURCE = "4,1;3,1"
O14_SP8 = {"3,1;1"}
O14_SP10 = {"4,1;1", "3,2;1", "4,2,1;2,0", "4,2,0;2,1"}
