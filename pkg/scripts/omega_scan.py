#!/usr/bin/env python3
"""Omega membership against brute-force invariant dimensions.

    python scripts/omega_scan.py --boxes 2:5,3:3,4:2
"""

import sys

from bfun.config import ScanConfig, from_args
from bfun.oracle import omega_scan


def main(argv=None) -> int:
    cfg = from_args(ScanConfig, argv)
    ok = True
    for n, bound in cfg.boxes:
        report = omega_scan(n, bound)
        ok &= report.ok
        print(f"n={n} bound={bound}: {report.checked} triples, {len(report.disagreements)} disagreements")
        for d in report.disagreements[:10]:
            print(f"  {d}")
        bad = {g: v for g, v in report.generator_invariants.items() if v != 1}
        if bad:
            print(f"  generators without a unique invariant: {bad}")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
