"""Classify all prime-order types up to 11 and compare with the bundled reference table.

    python scripts/reproduce_table.py [--seed 0] [--out table.json]
"""
import argparse
import json
import time

from symcubic.cli import check_golden
from symcubic.moduli import classify_all

PRIMES = (2, 3, 5, 7, 11)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = classify_all(PRIMES, seed=args.seed)
    dt = time.perf_counter() - t0
    for r in rows:
        flag = f"  [{r.bb_flag}]" if r.bb_flag else ""
        print(f"{r.label or '?':7} {str(r.sym):34} n={r.n:<3} zeta={r.zeta:7} {str(r.domain):11} bb={r.bb}{flag}")
    golden = check_golden(rows, PRIMES)
    print(f"{len(rows)} types in {dt:.1f}s; reference check {'ok' if golden['ok'] else golden['problems']}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"seed": args.seed, "rows": [r.to_json() for r in rows], "golden": golden}, fh, indent=2)


if __name__ == "__main__":
    main()
