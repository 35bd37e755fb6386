"""Reference boundary-slope data for all 2-bridge links through ten
crossings.

Each row is ``(crossing_number, name, p, q, families)``.  Links through
nine crossings carry their classical Rolfsen-style name; ten-crossing
links have ``None``.  A family string is a pair of slopes in the rational
parameter t (valid for 1 < t < oo) or s (valid for -1 <= s <= 1), written
exactly as the verifier's canonical text notation renders them.

The data here is golden input for ``tables.verify_corpus``: every row is
recomputed from scratch by the slope pipeline and diffed against this
transcription, so a typo on either side surfaces as a reported mismatch.
"""

CORPUS = (
    (2, "2^2_1", 1, 2, (
        "(-t^-1,-t)", "(t^-1,t)",
    )),
    (4, "4^2_1", 1, 4, (
        "(-2,-2)", "(-2t^-1,-2t)", "(2t^-1,2t)",
    )),
    (5, "5^2_1", 3, 8, (
        "(-4,-2)", "(0,0)", "(-2t^-1,-2-2t)", "(2t^-1,2t)", "(-3+s,-3-s)",
    )),
    (6, "6^2_1", 1, 6, (
        "(-3,-3)", "(-3t^-1,-3t)", "(3t^-1,3t)",
    )),
    (6, "6^2_2", 3, 10, (
        "(-2-t^-1,-2-t)", "(2-t^-1,-t)", "(-2+t^-1,t)", "(2+t^-1,2+t)",
        "(-3t^-1,-3t)", "(3t^-1,3t)", "(s,-s)",
    )),
    (6, "6^2_3", 5, 12, (
        "(-6,-2)", "(0,0)", "(-2t^-1,-4-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(-4+2s,-4-2s)",
    )),
    (7, "7^2_1", 3, 14, (
        "(-5,-3)", "(-2-t^-1,-4-t)", "(-2+t^-1,-2+t)", "(-3t^-1,-2-3t)",
        "(-t^-1,-t)", "(t^-1,t)", "(3t^-1,3t)", "(-4+s,-4-s)",
    )),
    (7, "7^2_3", 7, 16, (
        "(-8,-2)", "(0,0)", "(-2t^-1,-6-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(-5+3s,-5-3s)",
    )),
    (7, "7^2_2", 5, 18, (
        "(-2-t^-1,-2-t)", "(4-t^-1,-t)", "(-2+t^-1,-2+t)", "(-2+t^-1,2+t)",
        "(4+t^-1,2+t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,2+3t)", "(4+s,4-s)", "(1+2s,1-2s)",
    )),
    (8, "8^2_1", 1, 8, (
        "(-4,-4)", "(-4t^-1,-4t)", "(4t^-1,4t)",
    )),
    (8, "8^2_2", 3, 16, (
        "(0,-2)", "(2-2t^-1,-2t)", "(-3-t^-1,-3-t)", "(-3+t^-1,-1+t)",
        "(2+2t^-1,2+2t)", "(-4t^-1,-4t)", "(4t^-1,4t)", "(-1+s,-1-s)",
    )),
    (8, "8^2_6", 9, 20, (
        "(-10,-2)", "(0,0)", "(-2t^-1,-8-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(-6+4s,-6-4s)",
    )),
    (8, "8^2_3", 5, 22, (
        "(-7,-3)", "(-2-t^-1,-6-t)", "(-2-t^-1,-2-t)", "(-2+t^-1,-2+t)",
        "(-3t^-1,-4-3t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(-5+2s,-5-2s)",
    )),
    (8, "8^2_4", 7, 24, (
        "(-4,-4)", "(-4,0)", "(2,0)", "(-2-2t^-1,-2-2t)", "(2-2t^-1,-2-2t)",
        "(-2+2t^-1,2t)", "(2+2t^-1,2+2t)", "(-4t^-1,-4t)", "(4t^-1,4t)",
        "(1+s,1-s)", "(-2+2s,-2-2s)",
    )),
    (8, "8^2_5", 7, 26, (
        "(-2-t^-1,-2-t)", "(6-t^-1,-t)", "(-2+t^-1,-2+t)", "(-2+t^-1,4+t)",
        "(6+t^-1,2+t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(3t^-1,4+3t)", "(5+2s,5-2s)", "(2+3s,2-3s)",
    )),
    (8, "8^2_7", 11, 30, (
        "(-7,-3)", "(-4-t^-1,-4-t)", "(-4+t^-1,-2+t)", "(-3t^-1,-4-3t)",
        "(-t^-1,-2-t)", "(-t^-1,-t)", "(t^-1,t)", "(3t^-1,3t)",
        "(-2+s,-2-s)", "(-5+2s,-5-2s)",
    )),
    (8, "8^2_8", 13, 34, (
        "(-4-t^-1,-2-t)", "(4-t^-1,-2-t)", "(4-t^-1,2-t)", "(-4+t^-1,-2+t)",
        "(-4+t^-1,2+t)", "(4+t^-1,2+t)", "(-3t^-1,-2-3t)", "(-t^-1,-2-t)",
        "(-t^-1,-t)", "(t^-1,t)", "(t^-1,2+t)", "(3t^-1,2+3t)",
        "(-4+s,-4-s)", "(-2+s,-2-s)", "(3s,-3s)", "(2+s,2-s)", "(4+s,4-s)",
    )),
    (9, "9^2_1", 3, 20, (
        "(-6,-4)", "(-3-t^-1,-5-t)", "(-3+t^-1,-3+t)", "(-4t^-1,-2-4t)",
        "(-2t^-1,-2t)", "(2t^-1,2t)", "(4t^-1,4t)", "(-5+s,-5-s)",
    )),
    (9, "9^2_4", 5, 24, (
        "(-6,-4)", "(-4,-6)", "(0,0)", "(-2-2t^-1,-4-2t)",
        "(-2+2t^-1,-2+2t)", "(-4t^-1,-2-4t)", "(4t^-1,4t)", "(-5+s,-5-s)",
    )),
    (9, "9^2_10", 11, 24, (
        "(-12,-2)", "(0,0)", "(-2t^-1,-10-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(-7+5s,-7-5s)",
    )),
    (9, "9^2_2", 5, 28, (
        "(2,-2)", "(4-2t^-1,-2t)", "(-3-t^-1,-3-t)", "(-3+t^-1,-3+t)",
        "(-3+t^-1,1+t)", "(4+2t^-1,2+2t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)",
        "(2t^-1,2t)", "(4t^-1,2+4t)", "(2s,-2s)", "(5+s,5-s)",
    )),
    (9, "9^2_3", 7, 30, (
        "(-9,-3)", "(-2-t^-1,-8-t)", "(-2-t^-1,-2-t)", "(-2+t^-1,-2+t)",
        "(-3t^-1,-6-3t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(-6+3s,-6-3s)",
    )),
    (9, "9^2_5", 7, 32, (
        "(0,-4)", "(0,0)", "(-2-2t^-1,-4-2t)", "(2-2t^-1,-2-2t)",
        "(2-2t^-1,2-2t)", "(-5-t^-1,-3-t)", "(-5+t^-1,-1+t)",
        "(-2+2t^-1,-2+2t)", "(2+2t^-1,2+2t)", "(-4t^-1,-2-4t)", "(4t^-1,4t)",
        "(-5+s,-5-s)", "(-2+2s,-2-2s)",
    )),
    (9, "9^2_8", 9, 34, (
        "(-2-t^-1,-2-t)", "(8-t^-1,-t)", "(-2+t^-1,-2+t)", "(-2+t^-1,6+t)",
        "(8+t^-1,2+t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(3t^-1,6+3t)", "(6+3s,6-3s)", "(3+4s,3-4s)",
    )),
    (9, "9^2_6", 11, 36, (
        "(-2,-2)", "(-2,0)", "(2,2)", "(-2-2t^-1,-2-2t)", "(2-2t^-1,-2t)",
        "(5-t^-1,1-t)", "(5+t^-1,3+t)", "(-2+2t^-1,2+2t)", "(2+2t^-1,4+2t)",
        "(-4t^-1,-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)", "(4t^-1,2+4t)",
        "(-1+s,-1-s)", "(5+s,5-s)", "(2+2s,2-2s)",
    )),
    (9, "9^2_9", 11, 40, (
        "(-4,-4)", "(-4,2)", "(0,0)", "(4,0)", "(-2-2t^-1,-2-2t)",
        "(4-2t^-1,-2-2t)", "(-2+2t^-1,-2+2t)", "(-2+2t^-1,2+2t)",
        "(4+2t^-1,2+2t)", "(-4t^-1,-4t)", "(4t^-1,2+4t)", "(5+s,5-s)",
        "(2+2s,2-2s)", "(-1+3s,-1-3s)",
    )),
    (9, "9^2_7", 13, 44, (
        "(-6,-4)", "(-6,0)", "(-2,-2)", "(-2,0)", "(2,-2)", "(2,0)", "(2,2)",
        "(-4-2t^-1,-2-2t)", "(-2-2t^-1,-4-2t)", "(2-2t^-1,-4-2t)",
        "(2-2t^-1,-2t)", "(-4+2t^-1,2t)", "(-2+2t^-1,2t)", "(2+2t^-1,2+2t)",
        "(-4t^-1,-2-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)", "(4t^-1,4t)",
        "(-5+s,-5-s)", "(-1+s,-1-s)", "(2s,-2s)", "(1+s,1-s)",
        "(-3+3s,-3-3s)",
    )),
    (9, "9^2_11", 17, 46, (
        "(-9,-3)", "(-6-t^-1,-4-t)", "(-4-t^-1,-6-t)", "(-4-t^-1,-2-t)",
        "(-6+t^-1,-2+t)", "(-4+t^-1,-2+t)", "(-3t^-1,-6-3t)",
        "(-3t^-1,-2-3t)", "(-t^-1,-4-t)", "(-t^-1,-2-t)", "(-t^-1,-t)",
        "(t^-1,t)", "(3t^-1,3t)", "(-4+s,-4-s)", "(-2+s,-2-s)",
        "(-3+2s,-3-2s)", "(-6+3s,-6-3s)",
    )),
    (9, "9^2_12", 19, 50, (
        "(-4-t^-1,-2-t)", "(6-t^-1,-2-t)", "(6-t^-1,2-t)", "(-4+t^-1,-2+t)",
        "(-4+t^-1,4+t)", "(6+t^-1,2+t)", "(-3t^-1,-2-3t)", "(-t^-1,-2-t)",
        "(-t^-1,-t)", "(t^-1,t)", "(t^-1,4+t)", "(3t^-1,3t)",
        "(3t^-1,4+3t)", "(-4+s,-4-s)", "(-2+s,-2-s)", "(3+2s,3-2s)",
        "(5+2s,5-2s)", "(1+4s,1-4s)",
    )),
    (10, None, 1, 10, (
        "(-5,-5)", "(-5t^-1,-5t)", "(5t^-1,5t)",
    )),
    (10, None, 3, 22, (
        "(-1,-3)", "(2-3t^-1,-3t)", "(-4-t^-1,-4-t)", "(-4+t^-1,-2+t)",
        "(2+3t^-1,2+3t)", "(-5t^-1,-5t)", "(5t^-1,5t)", "(-2+s,-2-s)",
    )),
    (10, None, 5, 26, (
        "(-1,1)", "(1,-1)", "(-3-2t^-1,-3-2t)", "(3-2t^-1,1-2t)",
        "(-3+2t^-1,-1+2t)", "(3+2t^-1,3+2t)", "(-5t^-1,-5t)", "(5t^-1,5t)",
        "(s,-s)",
    )),
    (10, None, 13, 28, (
        "(-14,-2)", "(0,0)", "(-2t^-1,-12-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(-8+6s,-8-6s)",
    )),
    (10, None, 5, 32, (
        "(-8,-4)", "(-3-t^-1,-7-t)", "(-3-t^-1,-3-t)", "(-3+t^-1,-3+t)",
        "(-4t^-1,-4-4t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(4t^-1,4t)", "(-6+2s,-6-2s)",
    )),
    (10, None, 7, 38, (
        "(-5,-5)", "(-5,-1)", "(-2-3t^-1,-2-3t)", "(2-3t^-1,-2-3t)",
        "(-3-2t^-1,-3-2t)", "(2-t^-1,-t)", "(2+t^-1,t)", "(-3+2t^-1,-1+2t)",
        "(-2+3t^-1,3t)", "(2+3t^-1,2+3t)", "(-5t^-1,-5t)", "(-t^-1,-4-t)",
        "(t^-1,-2+t)", "(5t^-1,5t)", "(s,-s)", "(2+s,2-s)", "(-3+2s,-3-2s)",
    )),
    (10, None, 9, 38, (
        "(-11,-3)", "(-2-t^-1,-10-t)", "(-2-t^-1,-2-t)", "(-2+t^-1,-2+t)",
        "(-3t^-1,-8-3t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(-7+4s,-7-4s)",
    )),
    (10, None, 7, 40, (
        "(4,-2)", "(6-2t^-1,-2t)", "(-3-t^-1,-3-t)", "(-3+t^-1,-3+t)",
        "(-3+t^-1,3+t)", "(6+2t^-1,2+2t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)",
        "(2t^-1,2t)", "(4t^-1,4t)", "(4t^-1,4+4t)", "(6+2s,6-2s)",
        "(1+3s,1-3s)",
    )),
    (10, None, 9, 40, (
        "(-8,-4)", "(-4,-8)", "(-4,-4)", "(0,0)", "(-2-2t^-1,-6-2t)",
        "(-2-2t^-1,-2-2t)", "(-2+2t^-1,-2+2t)", "(-4t^-1,-4-4t)",
        "(-4t^-1,-4t)", "(4t^-1,4t)", "(-6+2s,-6-2s)",
    )),
    (10, None, 11, 42, (
        "(-2-t^-1,-2-t)", "(10-t^-1,-t)", "(-2+t^-1,-2+t)", "(-2+t^-1,8+t)",
        "(10+t^-1,2+t)", "(-3t^-1,-3t)", "(-t^-1,-t)", "(t^-1,t)",
        "(3t^-1,3t)", "(3t^-1,8+3t)", "(7+4s,7-4s)", "(4+5s,4-5s)",
    )),
    (10, None, 13, 42, (
        "(3,1)", "(-2-3t^-1,-2-3t)", "(3-2t^-1,-1-2t)", "(-4-t^-1,-4-t)",
        "(-4+t^-1,t)", "(3+2t^-1,3+2t)", "(-2+3t^-1,3t)", "(-5t^-1,-5t)",
        "(-t^-1,-t)", "(t^-1,2+t)", "(5t^-1,5t)", "(2+s,2-s)",
        "(-1+2s,-1-2s)",
    )),
    (10, None, 11, 48, (
        "(0,-6)", "(0,0)", "(-2-2t^-1,-6-2t)", "(-2-2t^-1,-2-2t)",
        "(2-2t^-1,-4-2t)", "(2-2t^-1,2-2t)", "(-7-t^-1,-3-t)",
        "(-7+t^-1,-1+t)", "(-2+2t^-1,-2+2t)", "(2+2t^-1,2+2t)",
        "(-4t^-1,-4-4t)", "(-4t^-1,-4t)", "(4t^-1,4t)", "(-6+2s,-6-2s)",
        "(-3+3s,-3-3s)",
    )),
    (10, None, 17, 48, (
        "(-8,-4)", "(-2,-4)", "(0,0)", "(-2-2t^-1,-6-2t)", "(-5-t^-1,-5-t)",
        "(-5+t^-1,-3+t)", "(-2+2t^-1,-2+2t)", "(-4t^-1,-4-4t)",
        "(-2t^-1,-2-2t)", "(2t^-1,2t)", "(4t^-1,4t)", "(-3+s,-3-s)",
        "(-6+2s,-6-2s)",
    )),
    (10, None, 11, 52, (
        "(-8,-4)", "(-6,-6)", "(-2,-4)", "(-2,-2)", "(0,-2)", "(0,0)",
        "(-4-2t^-1,-4-2t)", "(-2-2t^-1,-6-2t)", "(-5-t^-1,-5-t)",
        "(-5+t^-1,-3+t)", "(-4+2t^-1,-2+2t)", "(-2+2t^-1,-2+2t)",
        "(-4t^-1,-4-4t)", "(-2t^-1,-2-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(4t^-1,4t)", "(-3+s,-3-s)", "(-1+s,-1-s)", "(-6+2s,-6-2s)",
    )),
    (10, None, 15, 56, (
        "(-4,-4)", "(-4,4)", "(0,0)", "(6,0)", "(-2-2t^-1,-2-2t)",
        "(6-2t^-1,-2-2t)", "(-2+2t^-1,-2+2t)", "(-2+2t^-1,4+2t)",
        "(6+2t^-1,2+2t)", "(-4t^-1,-4t)", "(4t^-1,4t)", "(4t^-1,4+4t)",
        "(4s,-4s)", "(6+2s,6-2s)", "(3+3s,3-3s)",
    )),
    (10, None, 17, 56, (
        "(-2,-2)", "(-2,0)", "(2,0)", "(2,2)", "(2,4)", "(4,2)",
        "(-2-2t^-1,-2-2t)", "(2-2t^-1,-2t)", "(7-t^-1,1-t)", "(7+t^-1,3+t)",
        "(-2+2t^-1,2t)", "(-2+2t^-1,4+2t)", "(2+2t^-1,2+2t)",
        "(2+2t^-1,6+2t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(4t^-1,4t)", "(4t^-1,4+4t)", "(-1+s,-1-s)", "(1+s,1-s)",
        "(6+2s,6-2s)", "(3+3s,3-3s)",
    )),
    (10, None, 17, 58, (
        "(-2-3t^-1,-2-3t)", "(2-3t^-1,-2-3t)", "(2-3t^-1,-3t)",
        "(-4-t^-1,-4-t)", "(-4-t^-1,-t)", "(-2-t^-1,-t)", "(2-t^-1,-t)",
        "(4-t^-1,-2-t)", "(4-t^-1,2-t)", "(-4+t^-1,-2+t)", "(-4+t^-1,2+t)",
        "(-2+t^-1,t)", "(2+t^-1,t)", "(4+t^-1,t)", "(4+t^-1,4+t)",
        "(-2+3t^-1,3t)", "(-2+3t^-1,2+3t)", "(2+3t^-1,2+3t)", "(-5t^-1,-5t)",
        "(-t^-1,-2-t)", "(t^-1,2+t)", "(5t^-1,5t)", "(-2+s,-2-s)", "(s,-s)",
        "(3s,-3s)", "(2+s,2-s)", "(-3+2s,-3-2s)", "(3+2s,3-2s)",
    )),
    (10, None, 13, 60, (
        "(-2,-4)", "(-2,-2)", "(0,0)", "(0,2)", "(2,-4)", "(2,0)",
        "(-2-2t^-1,-4-2t)", "(4-2t^-1,-2-2t)", "(4-2t^-1,2-2t)",
        "(-5-t^-1,-3-t)", "(-5+t^-1,-3+t)", "(-5+t^-1,1+t)", "(-2+2t^-1,2t)",
        "(4+2t^-1,2+2t)", "(-4t^-1,-2-4t)", "(-2t^-1,-2-2t)", "(-2t^-1,-2t)",
        "(2t^-1,2t)", "(4t^-1,2+4t)", "(-5+s,-5-s)", "(-3+s,-3-s)",
        "(1+s,1-s)", "(5+s,5-s)", "(-1+3s,-1-3s)",
    )),
    (10, None, 23, 62, (
        "(-11,-3)", "(-8-t^-1,-4-t)", "(-4-t^-1,-8-t)", "(-4-t^-1,-2-t)",
        "(-8+t^-1,-2+t)", "(-4+t^-1,-2+t)", "(-3t^-1,-8-3t)",
        "(-3t^-1,-2-3t)", "(-t^-1,-6-t)", "(-t^-1,-2-t)", "(-t^-1,-t)",
        "(t^-1,t)", "(3t^-1,3t)", "(-4+s,-4-s)", "(-2+s,-2-s)",
        "(-4+3s,-4-3s)", "(-7+4s,-7-4s)",
    )),
    (10, None, 19, 64, (
        "(-8,-4)", "(-8,0)", "(-2,-2)", "(-2,0)", "(2,-4)", "(2,0)", "(2,2)",
        "(-6-2t^-1,-2-2t)", "(-2-2t^-1,-6-2t)", "(-2-2t^-1,-2-2t)",
        "(2-2t^-1,-6-2t)", "(2-2t^-1,-2t)", "(-6+2t^-1,2t)", "(-2+2t^-1,2t)",
        "(2+2t^-1,2+2t)", "(-4t^-1,-4-4t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)",
        "(2t^-1,2t)", "(4t^-1,4t)", "(-1+s,-1-s)", "(1+s,1-s)",
        "(-6+2s,-6-2s)", "(-1+3s,-1-3s)", "(-4+4s,-4-4s)",
    )),
    (10, None, 23, 64, (
        "(-2,-4)", "(-2,-2)", "(-2,0)", "(0,-2)", "(0,0)", "(4,0)", "(4,2)",
        "(-2-2t^-1,-4-2t)", "(4-2t^-1,-2-2t)", "(-5-t^-1,-3-t)",
        "(-5+t^-1,-3+t)", "(-5+t^-1,1+t)", "(-2+2t^-1,-2+2t)",
        "(-2+2t^-1,2+2t)", "(4+2t^-1,2+2t)", "(-4t^-1,-2-4t)",
        "(-2t^-1,-2-2t)", "(-2t^-1,-2t)", "(2t^-1,2t)", "(2t^-1,2+2t)",
        "(4t^-1,2+4t)", "(-5+s,-5-s)", "(-3+s,-3-s)", "(3+s,3-s)",
        "(5+s,5-s)", "(2+2s,2-2s)", "(-1+3s,-1-3s)",
    )),
    (10, None, 25, 66, (
        "(-4-t^-1,-2-t)", "(8-t^-1,-2-t)", "(8-t^-1,2-t)", "(-4+t^-1,-2+t)",
        "(-4+t^-1,6+t)", "(8+t^-1,2+t)", "(-3t^-1,-2-3t)", "(-t^-1,-2-t)",
        "(-t^-1,-t)", "(t^-1,t)", "(t^-1,6+t)", "(3t^-1,3t)",
        "(3t^-1,6+3t)", "(-4+s,-4-s)", "(-2+s,-2-s)", "(4+3s,4-3s)",
        "(6+3s,6-3s)", "(2+5s,2-5s)",
    )),
    (10, None, 19, 68, (
        "(-2,-2)", "(-2,2)", "(0,0)", "(0,2)", "(2,0)", "(2,4)", "(4,2)",
        "(-2-2t^-1,-2-2t)", "(4-2t^-1,2-2t)", "(4-2t^-1,-2t)",
        "(7-t^-1,1-t)", "(7+t^-1,3+t)", "(-2+2t^-1,2t)", "(-2+2t^-1,4+2t)",
        "(4+2t^-1,4+2t)", "(-4t^-1,-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(2t^-1,2+2t)", "(4t^-1,4+4t)", "(2s,-2s)", "(1+s,1-s)",
        "(3+s,3-s)", "(6+2s,6-2s)", "(3+3s,3-3s)",
    )),
    (10, None, 29, 70, (
        "(-11,-3)", "(-6-t^-1,-6-t)", "(-6-t^-1,-2-t)", "(-6+t^-1,-2+t)",
        "(-3t^-1,-8-3t)", "(-3t^-1,-4-3t)", "(-3t^-1,-3t)", "(-t^-1,-4-t)",
        "(-t^-1,-t)", "(t^-1,t)", "(3t^-1,3t)", "(-5+2s,-5-2s)",
        "(-3+2s,-3-2s)", "(-7+4s,-7-4s)",
    )),
    (10, None, 31, 74, (
        "(-6-t^-1,-2-t)", "(6-t^-1,-4-t)", "(6-t^-1,2-t)", "(-6+t^-1,-2+t)",
        "(-6+t^-1,4+t)", "(6+t^-1,2+t)", "(-3t^-1,-4-3t)", "(-3t^-1,-3t)",
        "(-t^-1,-4-t)", "(-t^-1,-t)", "(t^-1,t)", "(t^-1,4+t)",
        "(3t^-1,3t)", "(3t^-1,4+3t)", "(5s,-5s)", "(-5+2s,-5-2s)",
        "(-3+2s,-3-2s)", "(3+2s,3-2s)", "(5+2s,5-2s)",
    )),
    (10, None, 21, 76, (
        "(-6,-4)", "(-6,2)", "(-2,-2)", "(-2,2)", "(0,-2)", "(0,0)",
        "(4,-2)", "(4,0)", "(4,2)", "(-4-2t^-1,-2-2t)", "(-2-2t^-1,-4-2t)",
        "(4-2t^-1,-4-2t)", "(4-2t^-1,-2t)", "(-4+2t^-1,-2+2t)",
        "(-4+2t^-1,2+2t)", "(-2+2t^-1,-2+2t)", "(-2+2t^-1,2+2t)",
        "(4+2t^-1,2+2t)", "(-4t^-1,-2-4t)", "(-2t^-1,-2t)", "(2t^-1,2t)",
        "(2t^-1,2+2t)", "(4t^-1,2+4t)", "(-5+s,-5-s)", "(-1+s,-1-s)",
        "(2s,-2s)", "(3+s,3-s)", "(5+s,5-s)", "(2+2s,2-2s)", "(1+3s,1-3s)",
        "(-2+4s,-2-4s)",
    )),
    (10, None, 31, 80, (
        "(-8,-4)", "(-8,0)", "(-4,-2)", "(-4,0)", "(0,0)", "(2,-2)",
        "(2,2)", "(-4-2t^-1,-4-2t)", "(2-2t^-1,-6-2t)", "(2-2t^-1,-2-2t)",
        "(2-2t^-1,2-2t)", "(-4+2t^-1,2t)", "(2+2t^-1,2+2t)",
        "(-4t^-1,-4-4t)", "(-2t^-1,-2-2t)", "(2t^-1,2t)", "(4t^-1,4t)",
        "(-3+s,-3-s)", "(2s,-2s)", "(-6+2s,-6-2s)", "(-2+2s,-2-2s)",
        "(-4+4s,-4-4s)",
    )),
)

ROLFSEN_NAMES = {
    (p, q): name for _, name, p, q, _ in CORPUS if name is not None
}
