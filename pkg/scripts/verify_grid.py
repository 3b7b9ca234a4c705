"""Run the brute-force cross-checks for several values of d and print a summary.

    python scripts/verify_grid.py --d 2 3 4 --m-max 4 --len-max 20 --p-max 100
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from gapseq.oracle import all_pass, verify_all


@dataclass
class GridConfig:
    d: List[int] = field(default_factory=lambda: [2, 3, 4, 5])
    m_max: int = 4
    len_max: int = 20
    p_max: int = 100
    out: Optional[str] = None


def parse_args() -> GridConfig:
    cfg = GridConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, nargs="+", default=cfg.d)
    ap.add_argument("--m-max", type=int, default=cfg.m_max)
    ap.add_argument("--len-max", type=int, default=cfg.len_max)
    ap.add_argument("--p-max", type=int, default=cfg.p_max)
    ap.add_argument("--out", help="write the full report as JSON")
    return GridConfig(**vars(ap.parse_args()))


def main():
    cfg = parse_args()
    reports = {}
    ok = True
    for d in cfg.d:
        start = time.perf_counter()
        report = verify_all(d, cfg.m_max, cfg.len_max, cfg.p_max)
        elapsed = time.perf_counter() - start
        reports[d] = report
        ok &= all_pass(report)
        print(f"d={d}  {'PASS' if all_pass(report) else 'FAIL'}  ({elapsed:.1f}s)")
        for r in report:
            mark = "ok " if r["pass"] else "BAD"
            print(f"   {mark} {r['check']:<40} cases={r['cases']}")
            if not r["pass"]:
                print(f"       first counterexample: {r['counterexample']}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": reports}, fh, indent=1, sort_keys=True)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
