"""Published reference values used only for comparison, never for computation."""

# Z_8 (p=2, m=3), odd n <= 99: n -> (gamma, delta, N_t, N_n, N_c)
Z8_TABLE: dict[int, tuple[int, int, int, int, int]] = {
    1: (1, 0, 2, 0, 1),
    3: (2, 0, 4, 0, 1),
    5: (2, 0, 4, 0, 1),
    7: (1, 1, 8, 12, 4),
    9: (3, 0, 8, 0, 1),
    11: (2, 0, 4, 0, 1),
    13: (2, 0, 4, 0, 1),
    15: (3, 1, 32, 48, 4),
    17: (3, 0, 8, 0, 1),
    19: (2, 0, 4, 0, 1),
    21: (2, 2, 64, 336, 16),
    23: (1, 1, 8, 12, 4),
    25: (3, 0, 8, 0, 1),
    27: (2, 0, 16, 0, 1),
    29: (2, 0, 4, 0, 1),
    31: (1, 3, 128, 1872, 64),
    33: (5, 0, 32, 0, 1),
    35: (2, 2, 64, 336, 16),
    37: (2, 0, 4, 0, 1),
    39: (3, 1, 32, 48, 4),
    41: (3, 0, 8, 0, 1),
    43: (4, 0, 16, 0, 1),
    45: (4, 2, 256, 1344, 16),
    47: (1, 1, 8, 12, 4),
    49: (1, 2, 32, 168, 16),
    51: (4, 2, 256, 1344, 16),
    53: (2, 0, 4, 0, 1),
    55: (3, 1, 32, 48, 4),
    57: (5, 0, 32, 0, 1),
    59: (2, 0, 4, 0, 1),
    61: (2, 0, 4, 0, 1),
    63: (3, 5, 8192, 791808, 1024),
    65: (7, 0, 128, 0, 1),
    67: (2, 0, 4, 0, 1),
    69: (2, 2, 64, 336, 16),
    71: (1, 1, 8, 12, 4),
    73: (1, 4, 512, 19488, 256),
    75: (4, 2, 256, 1344, 16),
    77: (2, 2, 64, 336, 16),
    79: (1, 1, 8, 12, 4),
    81: (5, 0, 32, 0, 1),
    83: (2, 0, 4, 0, 1),
    85: (4, 4, 4096, 155904, 256),
    87: (3, 1, 32, 48, 4),
    89: (1, 4, 512, 19488, 256),
    91: (2, 4, 1024, 38976, 256),
    93: (2, 6, 16384, 170240, 729),
    95: (3, 1, 32, 48, 4),
    97: (3, 0, 8, 0, 1),
    99: (8, 0, 256, 0, 1),
}

Z8_COLUMNS = ("gamma", "delta", "N_t", "N_n", "N_c")

# Z_8, n=7 worked example: item number -> (exponents of f1, f2, f3, printed generator)
Z8_N7_EXAMPLE: dict[int, tuple[tuple[int, int, int], str]] = {
    1: ((3, 3, 3), "0"),
    2: ((3, 3, 2), "4x^4+4x^2+4x+4"),
    3: ((3, 3, 1), "2x^8+4x^6+4x^5+6x^4+4x^3+2"),
    4: ((3, 3, 0), "x^12+2x^11+x^10+5x^9+6x^8+2x^6+7x^5+7x^4+3x^3+x+1"),
    5: ((3, 2, 3), "4x^4+4x^3+4x^2+4"),
    6: ((3, 1, 3), "2x^8+4x^7+6x^6+4x^5+6x^4+4x^3+4x^2+2"),
    7: ((3, 0, 3), "x^12+x^11+3x^9+3x^8+5x^7+4x^6+4x^5+6x^4+5x^3+5x^2+2x+1"),
    8: ((3, 2, 2), "4x+4"),
    9: ((3, 2, 1), "2x^5+6x^4+2x^3+4x^2+2"),
    10: ((3, 1, 2), "2x^5+4x^3+2x^2+6x+2"),
    11: ((2, 3, 3), "4x^6+4x^5+4x^4+4x^3+4x^2+4x+4"),
    12: ((2, 3, 2), "4x^3+4x^2+4"),
    13: ((2, 3, 1), "2x^7+6x^6+6x^5+6x^4+2x+2"),
    14: ((2, 3, 0), "x^11+x^10+5x^8+x^7+7x^6+3x^5+4x^4+3x^3+1"),
    15: ((2, 2, 3), "4x^3+4x+4"),
    16: ((2, 1, 3), "2x^7+2x^6+4x^5+6x^3+6x^2+6x+2"),
    17: ((2, 0, 3), "x^11+3x^8+5x^6+7x^5+5x^4+x^3+4x^2+x+1"),
    18: ((2, 2, 2), "4"),
    19: ((2, 1, 2), "2x^4+6x^3+6x^2+4x+2"),
    20: ((2, 2, 1), "2x^4+6x^2+2"),
}
