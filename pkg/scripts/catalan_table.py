"""Signed sums of class counts against Catalan numbers.

    python3 scripts/catalan_table.py --max-n 10
"""

import argparse
from dataclasses import dataclass

from cyclefact.genfunc import catalan_check


@dataclass
class CatalanConfig:
    max_n: int = 8


def main(cfg: CatalanConfig) -> int:
    ok = True
    print(f"{'n':>3}{'signed sum':>14}{'Catalan':>14}")
    for n in range(1, cfg.max_n + 1):
        total, cat = catalan_check(n, cfg.max_n)
        ok &= total == cat
        print(f"{n:>3}{total:>14}{cat:>14}{'' if total == cat else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=CatalanConfig.max_n)
    raise SystemExit(main(CatalanConfig(p.parse_args().max_n)))
