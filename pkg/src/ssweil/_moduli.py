"""Fixed primitive moduli, generated by scripts/gen_moduli.py."""

MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 17): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 18): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 19): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 20): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 21): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 22): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 23): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 24): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (3, 2, 1, 0, 0, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (5, 1, 3, 0, 0, 0, 1),
    (7, 7): (2, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 1, 0, 0, 0, 0, 0, 0, 1),
    (11, 1): (3, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (11, 5): (4, 1, 1, 0, 0, 1),
    (11, 6): (8, 2, 1, 0, 0, 0, 1),
    (11, 7): (4, 1, 0, 0, 0, 0, 0, 1),
    (11, 8): (6, 2, 1, 0, 0, 0, 0, 0, 1),
    (13, 1): (2, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (13, 4): (2, 1, 1, 0, 1),
    (13, 5): (2, 4, 0, 0, 0, 1),
    (13, 6): (2, 2, 1, 0, 0, 0, 1),
    (13, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (13, 8): (6, 1, 4, 0, 0, 0, 0, 0, 1),
    (17, 1): (3, 1),
    (17, 2): (3, 1, 1),
    (19, 1): (4, 1),
    (19, 2): (2, 1, 1),
    (23, 1): (2, 1),
    (23, 2): (7, 1, 1),
    (29, 1): (2, 1),
    (29, 2): (3, 1, 1),
    (31, 1): (7, 1),
    (31, 2): (12, 1, 1),
    (37, 1): (2, 1),
    (37, 2): (5, 1, 1),
    (41, 1): (6, 1),
    (41, 2): (12, 1, 1),
    (43, 1): (9, 1),
    (43, 2): (3, 1, 1),
    (47, 1): (2, 1),
    (47, 2): (13, 1, 1),
}
