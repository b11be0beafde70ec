"""Print dim YTL_{d,n}(u) three ways: closed formula, sum of squares over
R(d,n), and the size of the explicit basis S_{d,n}."""

import argparse
import time
from dataclasses import dataclass

from ytl.basis import basis_size
from ytl.rep_theory import ytl_dimension_formula, ytl_dimension_sum_squares


@dataclass
class TableConfig:
    max_d: int = 4
    max_n: int = 8
    with_basis: bool = True


def rows(cfg: TableConfig):
    for d in range(1, cfg.max_d + 1):
        for n in range(3, cfg.max_n + 1):
            t0 = time.perf_counter()
            f = ytl_dimension_formula(d, n)
            s = ytl_dimension_sum_squares(d, n)
            b = basis_size(d, n) if cfg.with_basis else None
            yield d, n, f, s, b, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--no-basis", action="store_true")
    a = ap.parse_args()
    cfg = TableConfig(a.max_d, a.max_n, not a.no_basis)
    print(f"{'d':>2} {'n':>2} {'formula':>10} {'sum sq':>10} {'|S|':>10}  ok   secs")
    for d, n, f, s, b, dt in rows(cfg):
        ok = f == s and (b is None or b == f)
        print(f"{d:>2} {n:>2} {f:>10} {s:>10} {'-' if b is None else b:>10}  {'yes' if ok else 'NO ':3}  {dt:.2f}")


if __name__ == "__main__":
    main()
