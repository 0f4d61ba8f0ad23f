#!/usr/bin/env python3
"""Cocycle and hyperplane-corollary suites over every family and rank.

    python scripts/run_suites.py --ranks 2,3,4 --trials 50 --seed 0
"""

import sys
import time

from bfun.config import SuiteConfig, from_args
from bfun.verify import check_k_corollaries, cocycle_suite


def main(argv=None) -> int:
    cfg = from_args(SuiteConfig, argv)
    ok = True
    for name in cfg.families:
        for n in cfg.ranks:
            t0 = time.perf_counter()
            suite = cocycle_suite(name, n, trials=cfg.trials, seed=cfg.seed, top=cfg.top)
            k = check_k_corollaries(name, n)
            ok &= suite.ok and k.ok
            print(f"{suite.family:<10} n={n}  cocycle {suite.checked:4d} pairs {len(suite.failures)} failures  "
                  f"K {k.slopes:3d} slopes {len(k.violations)} violations  [{time.perf_counter() - t0:.2f}s]")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
