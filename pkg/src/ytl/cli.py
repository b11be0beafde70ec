"""Command-line entry point: ``ytl <command> ...``.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails and 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import basis as B
from .combinatorics import make_partition
from .lr_rule import lr_coefficient, pieri_summands, restriction_multiplicities
from .rep_theory import catalan, r_set, ytl_dimension_formula, ytl_dimension_sum_squares

COMMANDS = ("dims", "irreps", "lr", "restrict", "pieri", "basis", "zcount", "verify")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    d: int | None = None
    n: int | None = None
    format: str = "json"
    seed: int = 0
    u_eval: Fraction | None = None
    symbolic: bool = False
    lam: str | None = None
    mu: str | None = None
    nu: str | None = None
    l: int | None = None

    def require(self, *names):
        missing = [f"--{x}" for x in names if getattr(self, x) is None]
        if missing:
            raise UsageError(f"{self.command}: missing {', '.join(missing)}")


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return make_partition([int(x) for x in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def parse_d_partition(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_partition(c) for c in text.split(";"))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ytl", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def dn(p, need_d=True):
        if need_d:
            p.add_argument("--d", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    dn(sub.add_parser("dims", help="dimension formula vs. sum of squares"))
    dn(sub.add_parser("irreps", help="list R(d,n)"))
    p = sub.add_parser("lr", help="one Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p = sub.add_parser("restrict", help="restriction of E^lambda to S_n")
    p.add_argument("--lambda", dest="lam", required=True, help="d-partition, e.g. '2,1;1'")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p = sub.add_parser("pieri", help="Pieri summands for a d-partition")
    p.add_argument("--mu", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    dn(sub.add_parser("basis", help="stream the basis S_{d,n}"))
    dn(sub.add_parser("zcount", help="Z_n(m) row and counting identities"), need_d=False)
    p = sub.add_parser("verify", help="brute-force checks in Y_{d,n}(u)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u-eval", dest="u_eval", type=parse_fraction)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--symbolic", action="store_true",
                   help="also check the defining relations with u symbolic")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def emit(obj, out):
    json.dump(obj, out, indent=None, separators=(",", ":"))
    out.write("\n")


def _dims(cfg, out):
    cfg.require("d", "n")
    f = ytl_dimension_formula(cfg.d, cfg.n)
    s = ytl_dimension_sum_squares(cfg.d, cfg.n)
    verdict = "MATCH" if f == s else "MISMATCH"
    if cfg.format == "json":
        emit({"d": cfg.d, "n": cfg.n, "formula": f, "sum_of_squares": s, "verdict": verdict}, out)
    else:
        out.write(f"formula {f}\nsum_of_squares {s}\n{verdict}\n")
    return 0 if f == s else 1


def _irreps(cfg, out):
    cfg.require("d", "n")
    rs = r_set(cfg.d, cfg.n)
    rows = [{"lambda": [list(c) for c in lam], "family": tag}
            for lam, tag in zip(rs.members, rs.tags)]
    if cfg.format == "json":
        emit({"d": cfg.d, "n": cfg.n, "count": len(rows), "members": rows}, out)
    else:
        for r in rows:
            out.write(";".join(",".join(map(str, c)) for c in r["lambda"]) + f"\t{r['family']}\n")
    return 0


def _lr(cfg, out):
    lam, mu, nu = (parse_partition(x) for x in (cfg.lam, cfg.mu, cfg.nu))
    c = lr_coefficient(lam, mu, nu)
    if cfg.format == "json":
        emit({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coefficient": c}, out)
    else:
        out.write(f"{c}\n")
    return 0


def _restrict(cfg, out):
    lam = parse_d_partition(cfg.lam)
    mult = restriction_multiplicities(lam)
    rows = [[list(nu), m] for nu, m in sorted(mult.items(), reverse=True)]
    if cfg.format == "json":
        emit({"lambda": [list(c) for c in lam], "restriction": rows}, out)
    else:
        for nu, m in rows:
            out.write(f"{','.join(map(str, nu))}\t{m}\n")
    return 0


def _pieri(cfg, out):
    if cfg.l < 1:
        raise UsageError("--l must be positive")
    mu = parse_d_partition(cfg.mu)
    res = pieri_summands(mu, cfg.l)
    rows = [[list(c) for c in lam] for lam in res]
    if cfg.format == "json":
        emit({"mu": [list(c) for c in mu], "l": cfg.l, "summands": rows}, out)
    else:
        for lam in rows:
            out.write(";".join(",".join(map(str, c)) for c in lam) + "\n")
    return 0


def _basis(cfg, out):
    cfg.require("d", "n")
    if cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["framing", "pattern", "word"])
        for r, pat in B.enumerate_basis(cfg.d, cfg.n):
            w.writerow([" ".join(map(str, r)),
                        " ".join(f"{i}:{k}" for i, k in pat.pairs), str(pat)])
        return 0
    if cfg.format == "text":
        for r, pat in B.enumerate_basis(cfg.d, cfg.n):
            t = "".join(f"t{j + 1}^{x}" for j, x in enumerate(r) if x)
            out.write(f"{t}{'' if t and not pat.pairs else pat}\n")
        return 0
    # one JSON object per line keeps the stream bounded in memory
    for r, pat in B.enumerate_basis(cfg.d, cfg.n):
        emit({"framing": list(r), "pattern": [list(p) for p in pat.pairs]}, out)
    return 0


def _zcount(cfg, out):
    n = cfg.n
    if n < 1:
        raise UsageError("--n must be positive")
    direct = B.z_row_direct(n)
    recursive = [B.z_count_recursive(n, m) for m in range(n)]
    cn = catalan(n)
    checks = {
        "recursion_matches_enumeration": direct == recursive,
        "top_weight_is_catalan": direct[n - 1] == catalan(n - 1),
        "sum_is_catalan": sum(direct) == cn,
        "weighted_sum": sum(2 ** (n - m) * z for m, z in enumerate(direct)) == (n + 1) * cn,
    }
    ok = all(checks.values())
    if cfg.format == "json":
        emit({"n": n, "Z": direct, "catalan": cn,
              "checks": {k: "pass" if v else "fail" for k, v in checks.items()}}, out)
    else:
        out.write(" ".join(map(str, direct)) + "\n")
        for k, v in checks.items():
            out.write(f"{k} {'pass' if v else 'fail'}\n")
    return 0 if ok else 1


def _verify(cfg, out):
    from .verify import check_u0, draw_u0, verify_all

    cfg.require("d", "n")
    if cfg.n < 3:
        raise UsageError("YTL defined for n >= 3")
    rng = random.Random(cfg.seed)
    u0s = []
    if cfg.u_eval is not None:
        try:
            u0s.append(check_u0(cfg.u_eval))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    while len(u0s) < 2:
        u = draw_u0(rng)
        if u not in u0s:
            u0s.append(u)
    report = verify_all(cfg.d, cfg.n, u0s, symbolic=cfg.symbolic)
    report["seed"] = cfg.seed
    emit(report, out)
    return 0 if report["passed"] else 1


HANDLERS = {"dims": _dims, "irreps": _irreps, "lr": _lr, "restrict": _restrict,
            "pieri": _pieri, "basis": _basis, "zcount": _zcount, "verify": _verify}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (UsageError, ValueError) as exc:
        print(f"ytl {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
