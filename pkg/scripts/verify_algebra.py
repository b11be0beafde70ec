"""Brute-force the YTL quotient of Y_{d,n}(u) at a few random rational u
and print a one-line summary per (d, n, u0)."""

import argparse
import logging
import random
import time
from dataclasses import dataclass, field

from ytl.verify import QuotientChecker, defining_relations, draw_u0

DEFAULT_CASES = [(1, 3), (1, 4), (2, 3), (3, 3), (2, 4)]


@dataclass
class VerifyConfig:
    cases: list = field(default_factory=lambda: list(DEFAULT_CASES))
    draws: int = 2
    seed: int = 0
    symbolic: bool = True


def run(cfg: VerifyConfig) -> bool:
    rng = random.Random(cfg.seed)
    ok = True
    for d, n in cfg.cases:
        if cfg.symbolic:
            rel = defining_relations(d, n)
            bad = [k for k, v in rel.items() if not v]
            print(f"d={d} n={n} symbolic relations: {'all hold' if not bad else 'FAILED ' + ', '.join(bad)}")
            ok &= not bad
        for _ in range(cfg.draws):
            u0 = draw_u0(rng)
            t0 = time.perf_counter()
            chk = QuotientChecker(d, n, u0)
            q = chk.quotient_report()
            ind = chk.independence_report()
            led = chk.ledger_report()
            good = q.passed and ind.passed and led.passed
            ok &= good
            print(f"d={d} n={n} u0={u0}: rank(I)={q.ideal_rank} quotient={q.quotient_dimension} "
                  f"formula={q.formula} residues={ind.residue_rank}/{ind.basis_size} "
                  f"ledger={len(led.items) - len(led.failures)}/{len(led.items)} "
                  f"[{'ok' if good else 'FAIL'}] {time.perf_counter() - t0:.1f}s")
    return ok


def parse_case(text):
    d, n = text.split(",")
    return int(d), int(n)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", type=parse_case, action="append", help="d,n (repeatable)")
    ap.add_argument("--draws", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-symbolic", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING)
    cfg = VerifyConfig(a.case or list(DEFAULT_CASES), a.draws, a.seed, not a.no_symbolic)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
