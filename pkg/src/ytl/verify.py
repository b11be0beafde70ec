"""Brute-force checks of the YTL quotient inside Y_{d,n}(u) at a specialised u.

The ideal I = <G_{1,2}> is computed as a subspace: start from G_{1,2} and
close under left and right multiplication by every generator g_i, t_j.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Iterator

from .algebra import AlgebraElement, YokonumaHecke, pattern_to_permutation
from .basis import CyclePattern, enumerate_basis, enumerate_Tn
from .linalg import Echelon
from .rep_theory import ytl_dimension_formula

log = logging.getLogger(__name__)

DENYLIST = {Fraction(0), Fraction(1), Fraction(-1)}


def check_u0(u0) -> Fraction:
    u0 = Fraction(u0)
    if u0 == 0:
        raise ValueError("u0 must be nonzero")
    # the only rational roots of unity are +-1
    if u0 in DENYLIST:
        raise ValueError(f"u0={u0} is excluded (0, 1 and -1 are not allowed)")
    return u0


def draw_u0(rng: random.Random, bound: int = 9) -> Fraction:
    while True:
        u0 = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if u0 not in DENYLIST:
            return u0


# --- the ideal ------------------------------------------------------------


def ideal_echelon(alg: YokonumaHecke) -> Echelon:
    """Row-reduced basis of the two-sided ideal generated by G_{1,2}."""
    if alg.n < 3:
        raise ValueError("YTL defined for n >= 3")
    keys = alg.basis_keys()
    ech = Echelon()
    queue = []
    first = ech.add(alg.G(1).coordinates())
    if first:
        queue.append(first)
    ops = ([lambda x, i=i: x.times_g(i) for i in range(1, alg.n)]
           + [lambda x, i=i: x.g_times(i) for i in range(1, alg.n)]
           + [lambda x, j=j: x.times_t(j) for j in range(1, alg.n + 1)]
           + [lambda x, j=j: x.t_times(j) for j in range(1, alg.n + 1)])
    while queue:
        vec = queue.pop()
        x = AlgebraElement(alg, {keys[k]: c for k, c in vec.items()})
        for op in ops:
            new = ech.add(op(x).coordinates())
            if new is not None:
                queue.append(new)
    return ech


def ttl_ideal_matrix(d: int, n: int, u0) -> Iterator[dict[int, Fraction]]:
    """Rows b1 * G_{1,2} * b2 over all pairs of Juyumaya basis words.

    There are (d^n n!)^2 rows; this is a generator so callers can stream it.
    """
    if n < 3:
        raise ValueError("YTL defined for n >= 3")
    alg = YokonumaHecke(d, n, check_u0(u0))
    G = alg.G(1)
    words = [alg.element({k: alg.unit}) for k in alg.basis_keys()]
    for b1 in words:
        left = b1 * G
        for b2 in words:
            yield (left * b2).coordinates()


# --- reports ----------------------------------------------------------------


@dataclass
class QuotientReport:
    d: int
    n: int
    u0: str
    algebra_dimension: int
    ideal_rank: int
    quotient_dimension: int
    formula: int
    passed: bool


@dataclass
class IndependenceReport:
    d: int
    n: int
    u0: str
    basis_size: int
    residue_rank: int
    passed: bool
    dependent: list = field(default_factory=list)


@dataclass
class LedgerReport:
    d: int
    n: int
    u0: str
    items: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class QuotientChecker:
    """Holds Y_{d,n}(u0) and the ideal, shared across the checks."""

    def __init__(self, d: int, n: int, u0):
        self.alg = YokonumaHecke(d, n, check_u0(u0))
        self.d, self.n, self.u0 = d, n, Fraction(u0)
        self.ideal = ideal_echelon(self.alg)
        self._lower: dict[int, Echelon] = {}

    def quotient_report(self) -> QuotientReport:
        dim = self.d ** self.n * factorial(self.n)
        quotient = dim - self.ideal.rank
        formula = ytl_dimension_formula(self.d, self.n)
        return QuotientReport(self.d, self.n, str(self.u0), dim, self.ideal.rank,
                              quotient, formula, quotient == formula)

    def independence_report(self) -> IndependenceReport:
        ech = self.ideal.copy()
        alg = self.alg
        dependent = []
        count = 0
        for r, pattern in enumerate_basis(self.d, self.n):
            count += 1
            key = (r, pattern_to_permutation(pattern))
            if ech.add({alg.index(key): Fraction(1)}) is None:
                dependent.append({"framing": list(r), "pattern": [list(p) for p in pattern.pairs]})
        rank = ech.rank - self.ideal.rank
        return IndependenceReport(self.d, self.n, str(self.u0), count, rank,
                                  not dependent and rank == count, dependent)

    def lower_span(self, degree: int) -> Echelon:
        """I + span{t^r g : g in T_n, deg g < degree}."""
        if degree not in self._lower:
            ech = self.ideal.copy()
            for pattern in enumerate_Tn(self.n):
                if pattern.degree >= degree:
                    continue
                w = pattern_to_permutation(pattern)
                for r in product(range(self.d), repeat=self.n):
                    ech.add({self.alg.index((r, w)): Fraction(1)})
            self._lower[degree] = ech
        return self._lower[degree]

    def vanishes(self, x: AlgebraElement) -> bool:
        return self.ideal.contains(x.coordinates())

    def in_R(self, poly: AlgebraElement, letters: tuple[int, ...]) -> bool:
        """Whether P(t) * g_{letters} lies in the span of lower-degree spanning words."""
        w = self.alg.g_word(letters)
        return self.lower_span(len(letters)).contains((poly * w).coordinates())

    def ledger_report(self) -> LedgerReport:
        rep = LedgerReport(self.d, self.n, str(self.u0))
        for name, ok in relation_ledger(self):
            rep.items[name] = "pass" if ok else "fail"
            if not ok:
                rep.failures.append(name)
        return rep


def relation_ledger(chk: QuotientChecker) -> Iterator[tuple[str, bool]]:
    """Yield (name, holds) for every relation and ideal-membership statement."""
    A, n = chk.alg, chk.n
    t, g, one = A.t, A.g, A.one()

    def diff(a, b):
        return t(a) - t(b)

    for i in range(1, n - 1):
        yield f"G_{i} vanishes", chk.vanishes(A.G(i))
        yield f"left framing difference i={i}", chk.vanishes(
            diff(i, i + 2) * (one + g(i)) + diff(i, i + 1) * (g(i + 1) + g(i + 1) * g(i)))
        yield f"right framing difference i={i}", chk.vanishes(
            diff(i + 2, i) * (one + g(i + 1)) + diff(i + 2, i + 1) * (g(i) + g(i) * g(i + 1)))
        yield f"(t{i+2}-t{i+1})(t{i+2}-t{i})(g{i}+1)", chk.vanishes(diff(i + 2, i + 1) * diff(i + 2, i) * (g(i) + one))
        yield f"adjacent triple difference i={i}", chk.vanishes(diff(i, i + 1) * diff(i + 1, i + 2) * diff(i, i + 2))
    for i in range(2, n):
        yield f"(t{i-1}-t{i+1})(t{i-1}-t{i})(g{i}+1)", chk.vanishes(diff(i - 1, i + 1) * diff(i - 1, i) * (g(i) + one))
    for a, b, c in combinations(range(1, n + 1), 3):
        yield f"triple difference ({a},{b},{c})", chk.vanishes(diff(a, b) * diff(a, c) * diff(b, c))
    for i in range(1, n):
        for j in range(1, n + 1):
            yield f"(t{j}-t{i})(t{j}-t{i+1})(g{i}+1)", chk.vanishes(diff(j, i) * diff(j, i + 1) * (g(i) + one))

    # ideal memberships P in R(w)
    for i in range(1, n - 1):
        yield f"1 in R(g{i}g{i+1}g{i})", chk.in_R(one, (i, i + 1, i))
        yield f"x{i}-x{i+1} in R(g{i+1}g{i})", chk.in_R(diff(i, i + 1), (i + 1, i))
        yield f"x{i+2}-x{i+1} in R(g{i}g{i+1})", chk.in_R(diff(i + 2, i + 1), (i, i + 1))
    for i in range(1, n):
        for j in range(1, n + 1):
            yield f"(x{j}-x{i})(x{j}-x{i+1}) in R(g{i})", chk.in_R(diff(j, i) * diff(j, i + 1), (i,))
    for a, b, c in combinations(range(1, n + 1), 3):
        yield f"triple difference ({a},{b},{c}) in R(1)", chk.in_R(diff(a, b) * diff(a, c) * diff(b, c), ())
    for i in range(1, n):
        for j in range(i + 2, n):
            yield f"x{i}+x{i+1}-x{j}-x{j+1} in R(g{i}g{j})", chk.in_R(t(i) + t(i + 1) - t(j) - t(j + 1), (i, j))
    for pattern in enumerate_Tn(n):
        if not pattern.pairs:
            continue
        for label, poly in cycle_relations(A, pattern):
            yield f"{label} in R({pattern})", chk.in_R(poly, pattern.word())


def cycle_relations(A: YokonumaHecke, pattern: CyclePattern) -> list[tuple[str, AlgebraElement]]:
    """Generators of the ideal R'(g) beyond R'(1), listed cycle by cycle."""
    t = A.t
    pairs = pattern.pairs
    out = []
    i1, k1 = pairs[0]
    for j in range(i1 - k1, i1 + 1):
        if j != i1:
            out.append((f"x{j}-x{i1}", t(j) - t(i1)))
    for j in range(1, A.n + 1):
        if j in (i1, i1 + 1):
            continue
        out.append((f"(x{j}-x{i1})(x{j}-x{i1 + 1})", (t(j) - t(i1)) * (t(j) - t(i1 + 1))))
    for l in range(2, len(pairs) + 1):
        il, kl = pairs[l - 1]
        prev = pairs[l - 2][0]
        for j in range(max(il - kl, prev + 2), il + 1):
            if j != il:
                out.append((f"x{j}-x{il}", t(j) - t(il)))
        if il > prev + 1:
            out.append((f"x{il}+x{il + 1}-x{i1}-x{i1 + 1}", t(il) + t(il + 1) - t(i1) - t(i1 + 1)))
        if il - kl <= prev + 1:
            out.append((f"x{il + 1}-x{prev + 1}", t(il + 1) - t(prev + 1)))
    return out


def verify_quotient_dimension(d: int, n: int, u0) -> QuotientReport:
    return QuotientChecker(d, n, u0).quotient_report()


def verify_basis_independence(d: int, n: int, u0) -> IndependenceReport:
    return QuotientChecker(d, n, u0).independence_report()


def verify_relation_ledger(d: int, n: int, u0) -> LedgerReport:
    return QuotientChecker(d, n, u0).ledger_report()


def defining_relations(d: int, n: int) -> dict[str, bool]:
    """Symbolic checks of the presentation of Y_{d,n}(u) on generators."""
    A = YokonumaHecke(d, n)
    g, t, one = A.g, A.t, A.one()
    out = {}
    out["b1"] = all(g(i) * g(j) == g(j) * g(i)
                    for i in range(1, n) for j in range(1, n) if abs(i - j) > 1)
    out["b2"] = all(g(i) * g(i + 1) * g(i) == g(i + 1) * g(i) * g(i + 1) for i in range(1, n - 1))
    out["f1"] = all(t(i) * t(j) == t(j) * t(i) for i in range(1, n + 1) for j in range(1, n + 1))

    def s(i, j):
        return i + 1 if j == i else i if j == i + 1 else j

    out["f2"] = all(t(j) * g(i) == g(i) * t(s(i, j)) for i in range(1, n) for j in range(1, n + 1))
    out["f3"] = all(_power(t(j), d) == one for j in range(1, n + 1))
    out["quadratic"] = all(g(i) * g(i) == one + A.e(i) * A.q + A.e(i) * g(i) * A.q
                           for i in range(1, n))
    out["idempotent"] = all(A.e(i) * A.e(i) == A.e(i) for i in range(1, n))
    out["inverse"] = all(g(i) * A.g_inverse(i) == one and A.g_inverse(i) * g(i) == one
                         for i in range(1, n))
    if n >= 3:
        out["G conjugation"] = _conjugation_holds(A)
    return out


def _power(x: AlgebraElement, k: int) -> AlgebraElement:
    out = x.alg.one()
    for _ in range(k):
        out = out * x
    return out


def _conjugation_holds(A: YokonumaHecke) -> bool:
    # G_{i,i+1} = c^{i-1} G_{1,2} c^{-(i-1)} with c = g_1 g_2 ... g_{n-1}
    n = A.n
    c = A.g_word(range(1, n))
    c_inv = A.one()
    for i in range(n - 1, 0, -1):
        c_inv = c_inv * A.g_inverse(i)
    for i in range(1, n - 1):
        lhs = A.G(i)
        rhs = A.G(1)
        for _ in range(i - 1):
            rhs = c * rhs * c_inv
        if lhs != rhs:
            return False
    return True


def verify_all(d: int, n: int, u0s, symbolic: bool = True) -> dict:
    """Run every check at each u0 and aggregate into one JSON-ready report."""
    report = {"d": d, "n": n, "u_eval": [str(Fraction(u)) for u in u0s]}
    if symbolic:
        rel = defining_relations(d, n)
        report["defining_relations"] = {k: "pass" if v else "fail" for k, v in rel.items()}
    ranks, dims, indep, ledger = [], [], [], []
    for u0 in u0s:
        log.info("building ideal for d=%d n=%d at u=%s", d, n, u0)
        chk = QuotientChecker(d, n, u0)
        q = chk.quotient_report()
        ranks.append(asdict(q))
        indep.append(asdict(chk.independence_report()))
        led = chk.ledger_report()
        ledger.append({"u0": led.u0, "items": led.items, "failures": led.failures})
    report["ranks"] = ranks
    report["dimensions"] = {"formula": ytl_dimension_formula(d, n),
                            "quotient": [r["quotient_dimension"] for r in ranks]}
    report["basis_independence"] = indep
    report["relation_ledger"] = ledger
    ok = (all(r["passed"] for r in ranks)
          and all(r["passed"] for r in indep)
          and all(not l["failures"] for l in ledger)
          and len({r["ideal_rank"] for r in ranks}) == 1
          and all(v == "pass" for v in report.get("defining_relations", {}).values()))
    report["passed"] = ok
    return report
