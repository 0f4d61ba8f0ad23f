#!/usr/bin/env python3
"""Cross-formula consistency table for every admissible (generator, subcone) pair.

    python scripts/consistency_table.py --ranks 2,3 --output table.json
"""

import sys
from collections import Counter

from bfun import treeformat
from bfun.config import ConsistencyConfig, from_args
from bfun.verify import consistency_table


def main(argv=None) -> int:
    cfg = from_args(ConsistencyConfig, argv)
    reports = [r for n in cfg.ranks for r in consistency_table(n)]
    tally = Counter((r.n, r.pair, r.verdict) for r in reports)
    for r in reports:
        if cfg.show_matches or r.verdict == "RatioNonConstant":
            print(r.render())
    print()
    for (n, pair, verdict), count in sorted(tally.items()):
        print(f"n={n} {pair[0]:>9} / {pair[1]:<14} {verdict:<18} {count}")
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(treeformat.dump("consistency_table", {"type": "consistency_table",
                                                           "reports": [r.to_tree() for r in reports]}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
