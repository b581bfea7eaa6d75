#!/usr/bin/env python3
"""Regenerate the simple-group fixture tables in fixtures/.

The tables (A5, A6, A7, PSL(2,7), M11) are encoded from the standard atlas
data.  Every table is validated (exact row and column orthogonality) before
it is written; the script refuses to emit a broken fixture.
"""

from __future__ import annotations

import sys
from pathlib import Path

from charzero.chartable import (
    Character,
    CharacterTable,
    ConjClass,
    TableMetadata,
    save_table,
    validate,
)
from charzero.cyclotomic import Cyclotomic, root_of_unity


def cyc(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)


def zsum(n: int, exponents) -> Cyclotomic:
    acc = Cyclotomic.zero()
    for e in exponents:
        acc = acc + root_of_unity(n, e)
    return acc


# quadratic irrationalities as cyclotomic integers
PHI_PLUS = -zsum(5, [2, 3])        # (1+sqrt5)/2
PHI_MINUS = -zsum(5, [1, 4])       # (1-sqrt5)/2
B7 = zsum(7, [1, 2, 4])            # (-1+i*sqrt7)/2
B7C = zsum(7, [3, 5, 6])
B11 = zsum(11, [1, 3, 4, 5, 9])    # (-1+i*sqrt11)/2
B11C = zsum(11, [2, 6, 7, 8, 10])
I_SQRT2 = root_of_unity(8, 1) + root_of_unity(8, 3)   # i*sqrt2
NEG_I_SQRT2 = root_of_unity(8, 5) + root_of_unity(8, 7)

SIMPLE_META = TableMetadata(solvable=False, simple=True)


def table(name, order, classes, char_rows) -> CharacterTable:
    cls = tuple(ConjClass(n, s, o) for n, s, o in classes)
    chars = tuple(
        Character(cname, tuple(cyc(v) for v in vals)) for cname, vals in char_rows
    )
    return CharacterTable(name, order, cls, chars, SIMPLE_META)


def a5():
    return table(
        "A5",
        60,
        [("1a", 1, 1), ("2a", 15, 2), ("3a", 20, 3), ("5a", 12, 5), ("5b", 12, 5)],
        [
            ("chi1", [1, 1, 1, 1, 1]),
            ("chi3a", [3, -1, 0, PHI_PLUS, PHI_MINUS]),
            ("chi3b", [3, -1, 0, PHI_MINUS, PHI_PLUS]),
            ("chi4", [4, 0, 1, -1, -1]),
            ("chi5", [5, 1, -1, 0, 0]),
        ],
    )


def a6():
    return table(
        "A6",
        360,
        [
            ("1a", 1, 1),
            ("2a", 45, 2),
            ("3a", 40, 3),
            ("3b", 40, 3),
            ("4a", 90, 4),
            ("5a", 72, 5),
            ("5b", 72, 5),
        ],
        [
            ("chi1", [1, 1, 1, 1, 1, 1, 1]),
            ("chi5a", [5, 1, 2, -1, -1, 0, 0]),
            ("chi5b", [5, 1, -1, 2, -1, 0, 0]),
            ("chi8a", [8, 0, -1, -1, 0, PHI_PLUS, PHI_MINUS]),
            ("chi8b", [8, 0, -1, -1, 0, PHI_MINUS, PHI_PLUS]),
            ("chi9", [9, 1, 0, 0, 1, -1, -1]),
            ("chi10", [10, -2, 1, 1, 0, 0, 0]),
        ],
    )


def a7():
    return table(
        "A7",
        2520,
        [
            ("1a", 1, 1),
            ("2a", 105, 2),
            ("3a", 70, 3),
            ("3b", 280, 3),
            ("4a", 630, 4),
            ("5a", 504, 5),
            ("6a", 210, 6),
            ("7a", 360, 7),
            ("7b", 360, 7),
        ],
        [
            ("chi1", [1, 1, 1, 1, 1, 1, 1, 1, 1]),
            ("chi6", [6, 2, 3, 0, 0, 1, -1, -1, -1]),
            ("chi10a", [10, -2, 1, 1, 0, 0, 1, B7, B7C]),
            ("chi10b", [10, -2, 1, 1, 0, 0, 1, B7C, B7]),
            ("chi14a", [14, 2, 2, -1, 0, -1, 2, 0, 0]),
            ("chi14b", [14, 2, -1, 2, 0, -1, -1, 0, 0]),
            ("chi15", [15, -1, 3, 0, -1, 0, -1, 1, 1]),
            ("chi21", [21, 1, -3, 0, -1, 1, 1, 0, 0]),
            ("chi35", [35, -1, -1, -1, 1, 0, -1, 0, 0]),
        ],
    )


def psl27():
    return table(
        "PSL(2,7)",
        168,
        [
            ("1a", 1, 1),
            ("2a", 21, 2),
            ("3a", 56, 3),
            ("4a", 42, 4),
            ("7a", 24, 7),
            ("7b", 24, 7),
        ],
        [
            ("chi1", [1, 1, 1, 1, 1, 1]),
            ("chi3a", [3, -1, 0, 1, B7, B7C]),
            ("chi3b", [3, -1, 0, 1, B7C, B7]),
            ("chi6", [6, 2, 0, 0, -1, -1]),
            ("chi7", [7, -1, 1, -1, 0, 0]),
            ("chi8", [8, 0, -1, 0, 1, 1]),
        ],
    )


def m11():
    return table(
        "M11",
        7920,
        [
            ("1a", 1, 1),
            ("2a", 165, 2),
            ("3a", 440, 3),
            ("4a", 990, 4),
            ("5a", 1584, 5),
            ("6a", 1320, 6),
            ("8a", 990, 8),
            ("8b", 990, 8),
            ("11a", 720, 11),
            ("11b", 720, 11),
        ],
        [
            ("chi1", [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
            ("chi10a", [10, 2, 1, 2, 0, -1, 0, 0, -1, -1]),
            ("chi10b", [10, -2, 1, 0, 0, 1, I_SQRT2, NEG_I_SQRT2, -1, -1]),
            ("chi10c", [10, -2, 1, 0, 0, 1, NEG_I_SQRT2, I_SQRT2, -1, -1]),
            ("chi11", [11, 3, 2, -1, 1, 0, -1, -1, 0, 0]),
            ("chi16a", [16, 0, -2, 0, 1, 0, 0, 0, B11, B11C]),
            ("chi16b", [16, 0, -2, 0, 1, 0, 0, 0, B11C, B11]),
            ("chi44", [44, 4, -1, 0, -1, 1, 0, 0, 0, 0]),
            ("chi45", [45, -3, 0, 1, 0, 0, -1, -1, 1, 1]),
            ("chi55", [55, -1, 1, -1, 0, -1, 1, 1, 0, 0]),
        ],
    )


def main() -> int:
    outdir = Path(__file__).resolve().parent.parent / "fixtures"
    outdir.mkdir(exist_ok=True)
    builders = {
        "a5": a5,
        "a6": a6,
        "a7": a7,
        "psl2_7": psl27,
        "m11": m11,
    }
    bad = False
    for stem, build in builders.items():
        t = build()
        fails = validate(t)
        if fails:
            print(f"{t.group_name}: VALIDATION FAILED: {fails}")
            bad = True
            continue
        save_table(t, outdir / f"{stem}.json")
        print(f"{t.group_name}: ok -> {stem}.json")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
