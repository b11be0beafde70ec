"""Compare LR coefficients from tableau counting against the Schur
polynomial product, for every pair of partitions up to a total size."""

import argparse
import time
from dataclasses import dataclass

from ytl.combinatorics import enumerate_partitions
from ytl.lr_rule import lr_product
from ytl.schur import schur_product_coefficients


@dataclass
class OracleConfig:
    max_size: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=8)
    cfg = OracleConfig(ap.parse_args().max_size)
    mismatches = 0
    for total in range(cfg.max_size + 1):
        t0 = time.perf_counter()
        pairs = 0
        for a in range(total + 1):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(total - a):
                    pairs += 1
                    if lr_product(lam, mu) != schur_product_coefficients(lam, mu):
                        mismatches += 1
                        print(f"mismatch: {lam} x {mu}")
        print(f"|nu|={total}: {pairs} pairs checked in {time.perf_counter() - t0:.2f}s")
    print("all agree" if not mismatches else f"{mismatches} mismatches")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
