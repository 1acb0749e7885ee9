"""Check every theorem for a range of n and print a compact summary.

Run: python demos/03_verify_range.py [hi]
"""

from __future__ import annotations

import sys
from collections import Counter

from coprime_lab.verify import range_verify, reproduce_table1, summarize


def main(hi: int = 40) -> None:
    reports = range_verify(1, hi)
    print(summarize(reports))

    tally = Counter()
    for r in reports:
        for c in r.checks:
            if c.tightness in ("tight", "slack"):
                tally[c.name, c.tightness] += 1
    for (name, how), k in sorted(tally.items()):
        print(f"  {name:24s} {how:5s} {k}")

    cmp = reproduce_table1()
    print(f"table of spectra 3..15: {'ok' if cmp.ok else 'mismatch'}, worst {max(cmp.max_deviation.values()):.4f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 40)
