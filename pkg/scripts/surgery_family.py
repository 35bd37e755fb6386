#!/usr/bin/env python3
"""Print the boundary-slope families of the surgery family (4k-1)/(8k),
the links obtained by 1/k surgery on one component of the Borromean
rings, for a range of k.

Usage: python scripts/surgery_family.py [KMAX]
"""

import sys

from twobridge.tables import family_table_for_surgery_family, render_family


def describe(k: int) -> None:
    result = family_table_for_surgery_family(k)
    link = result.link
    print(f"k = {k}: link {link}, linking number {result.linking_number}")
    for fam in result.families:
        lo, hi = fam.domain
        if fam.branch == "T":
            dom = f"{lo} <= t <= {hi}"
        elif fam.branch == "S":
            dom = f"{lo} <= s <= {hi}"
        else:
            dom = "t -> inf" if fam.phi == "second" else "t -> 0"
        pair = "(%s, %s)" % render_family(fam)
        print(f"  {pair:<28} {dom}")
    print()


def main() -> int:
    kmax = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for k in range(1, kmax + 1):
        describe(k)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
