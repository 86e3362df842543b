"""Print class counts for every type up to a weight, by all available methods.

    python3 scripts/count_table.py --max-weight 6 --oracle-up-to 5
"""

import argparse
import time
from dataclasses import dataclass

from cyclefact.enumeration import all_types, brute_force_classes, count_trees
from cyclefact.genfunc import xi_series


@dataclass
class TableConfig:
    max_weight: int = 6
    oracle_up_to: int = 4


def main(cfg: TableConfig) -> int:
    t0 = time.perf_counter()
    xi = xi_series(cfg.max_weight)
    bad = 0
    print(f"{'type':<22}{'genfunc':>10}{'trees':>10}{'oracle':>10}")
    for w in range(1, cfg.max_weight + 1):
        for a in all_types(w):
            g = xi.coefficient(x=a.as_dict())
            t = count_trees(a)
            o = len(brute_force_classes(a, w + 1)) if w <= cfg.oracle_up_to else None
            bad += g != t or (o is not None and o != t)
            print(f"{str(a):<22}{g:>10}{t:>10}{'-' if o is None else o:>10}")
    print(f"{'mismatches':<22}{bad:>10}   ({time.perf_counter() - t0:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-weight", type=int, default=TableConfig.max_weight)
    p.add_argument("--oracle-up-to", type=int, default=TableConfig.oracle_up_to)
    args = p.parse_args()
    raise SystemExit(main(TableConfig(args.max_weight, args.oracle_up_to)))
