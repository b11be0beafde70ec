"""Exact arithmetic in the Yokonuma-Hecke algebra Y_{d,n}(u).

Elements are expanded in the basis {t_1^{r_1} ... t_n^{r_n} g_w}, where g_w
is the Hecke element of the permutation w (any reduced word gives the same
element).  Coefficients are :class:`~ytl.laurent.LaurentPolynomial` when u is
left symbolic, or :class:`fractions.Fraction` when u is specialised to a
rational number.

Conventions: a permutation is a tuple ``w`` with ``w[j-1] = w(j)``, and
``s_{i_1} ... s_{i_m}`` denotes the composite map, rightmost factor applied
first.  With this convention g_w t_j = t_{w(j)} g_w, which is relation
t_j g_i = g_i t_{s_i(j)} read from right to left.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable

from .basis import CyclePattern, enumerate_Hn
from .laurent import LaurentPolynomial

Perm = tuple[int, ...]
Framing = tuple[int, ...]
Key = tuple[Framing, Perm]


# --- permutations -----------------------------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(w: Perm, v: Perm) -> Perm:
    """The map j -> w(v(j))."""
    return tuple(w[x - 1] for x in v)


def inverse_perm(w: Perm) -> Perm:
    inv = [0] * len(w)
    for j, x in enumerate(w, start=1):
        inv[x - 1] = j
    return tuple(inv)


def transposition(n: int, i: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def times_s(w: Perm, i: int) -> Perm:
    """w s_i: swap the values in positions i, i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def s_times(i: int, w: Perm) -> Perm:
    """s_i w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def length(w: Perm) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def pattern_to_permutation(pattern: CyclePattern) -> Perm:
    w = identity_perm(pattern.n)
    for i in pattern.word():
        w = times_s(w, i)
    return w


def permutation_to_pattern(w: Perm) -> CyclePattern:
    """Inverse of :func:`pattern_to_permutation` on H_n.

    The last cycle g_i g_{i-1} ... g_{i-k} of the pattern sends i-k to i+1,
    and i+1 is the largest point the permutation moves; peel it off and
    repeat on what is left.
    """
    n = len(w)
    pairs = []
    w = tuple(w)
    while True:
        moved = [j for j in range(1, n + 1) if w[j - 1] != j]
        if not moved:
            break
        top = moved[-1]
        i = top - 1
        bottom = inverse_perm(w)[top - 1]
        k = i - bottom
        pairs.append((i, k))
        # w = w' c with c = s_i ... s_{i-k}; strip c from the right
        for j in range(i - k, i + 1):
            w = times_s(w, j)
    return CyclePattern(n, tuple(reversed(pairs)))


# --- the algebra ------------------------------------------------------------


class YokonumaHecke:
    """Y_{d,n}(u), optionally with u specialised to a nonzero rational ``u0``."""

    def __init__(self, d: int, n: int, u0=None):
        if d < 1 or n < 1:
            raise ValueError("need d >= 1 and n >= 1")
        self.d, self.n = d, n
        if u0 is None:
            self.u = LaurentPolynomial.u()
            self.u_inv = LaurentPolynomial.u(-1)
            self.zero = LaurentPolynomial()
            self.unit = LaurentPolynomial(1)
        else:
            u0 = Fraction(u0)
            if u0 == 0:
                raise ValueError("u0 must be nonzero")
            self.u = u0
            self.u_inv = 1 / u0
            self.zero = Fraction(0)
            self.unit = Fraction(1)
        self.u0 = u0
        self.q = self.u - 1
        self.q_inv = self.u_inv - 1
        self._basis: list[Key] | None = None
        self._index: dict[Key, int] | None = None

    @property
    def symbolic(self) -> bool:
        return self.u0 is None

    @property
    def params(self):
        return (self.d, self.n, self.u0)

    def dimension(self) -> int:
        return len(self.basis_keys())

    # -- basis ---------------------------------------------------------------

    def basis_keys(self) -> list[Key]:
        """Juyumaya basis, ordered pattern-major (H_n order) then by framing."""
        if self._basis is None:
            perms = [pattern_to_permutation(p) for p in enumerate_Hn(self.n)]
            self._basis = [(r, w) for w in perms
                           for r in product(range(self.d), repeat=self.n)]
            self._index = {k: i for i, k in enumerate(self._basis)}
        return self._basis

    def index(self, key: Key) -> int:
        self.basis_keys()
        return self._index[key]

    # -- constructors ----------------------------------------------------------

    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def scalar(self, c) -> "AlgebraElement":
        return self.element({(self._zero_framing(), identity_perm(self.n)): self.unit * c})

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def _zero_framing(self) -> Framing:
        return (0,) * self.n

    def t(self, j: int, power: int = 1) -> "AlgebraElement":
        if not 1 <= j <= self.n:
            raise ValueError(f"t_{j} does not exist for n={self.n}")
        r = [0] * self.n
        r[j - 1] = power % self.d
        return self.element({(tuple(r), identity_perm(self.n)): self.unit})

    def g(self, i: int) -> "AlgebraElement":
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"g_{i} does not exist for n={self.n}")
        return self.element({(self._zero_framing(), transposition(self.n, i)): self.unit})

    def word(self, framing: Iterable[int], pattern: CyclePattern | None = None) -> "AlgebraElement":
        """The basis word t^framing g_pattern."""
        r = tuple(int(x) % self.d for x in framing)
        w = identity_perm(self.n) if pattern is None else pattern_to_permutation(pattern)
        return self.element({(r, w): self.unit})

    def g_word(self, letters: Iterable[int]) -> "AlgebraElement":
        """g_{i_1} g_{i_2} ... for an arbitrary (not necessarily reduced) word."""
        x = self.one()
        for i in letters:
            x = x.times_g(i)
        return x

    def e_pair(self, a: int, b: int) -> "AlgebraElement":
        """(1/d) sum_s t_a^s t_b^{-s}."""
        terms: dict[Key, object] = {}
        ident = identity_perm(self.n)
        for s in range(self.d):
            r = [0] * self.n
            r[a - 1] = (r[a - 1] + s) % self.d
            r[b - 1] = (r[b - 1] - s) % self.d
            key = (tuple(r), ident)
            terms[key] = terms.get(key, self.zero) + self.unit / self.d
        return self.element(terms)

    def e(self, i: int) -> "AlgebraElement":
        return self.e_pair(i, i + 1)

    def g_inverse(self, i: int) -> "AlgebraElement":
        """g_i + (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i."""
        e = self.e(i)
        return self.g(i) + e * self.q_inv + (e * self.g(i)) * self.q_inv

    def G(self, i: int) -> "AlgebraElement":
        """g_i g_{i+1} g_i + g_i g_{i+1} + g_{i+1} g_i + g_i + g_{i+1} + 1."""
        a, b = self.g(i), self.g(i + 1)
        return a * b * a + a * b + b * a + a + b + self.one()

    def framing_polynomial(self, poly: dict[Framing, object]) -> "AlgebraElement":
        """P(t_1, ..., t_n) for P given as {exponent vector: coefficient}."""
        ident = identity_perm(self.n)
        terms: dict[Key, object] = {}
        for r, c in poly.items():
            key = (tuple(x % self.d for x in r), ident)
            terms[key] = terms.get(key, self.zero) + self.unit * c
        return self.element(terms)

    # -- reduction rules, memoised on the combinatorial data ---------------

    def right_g_rule(self, w: Perm, i: int):
        """g_w g_i as [(framing shift, perm, coefficient)]."""
        return _right_g_rule(w, i, self.d, self.q, self.unit)

    def left_g_rule(self, w: Perm, i: int):
        """g_i g_w as [(framing shift, perm, coefficient)]."""
        return _left_g_rule(w, i, self.d, self.q, self.unit)


def _shift(n: int, d: int, a: int, b: int, s: int) -> Framing:
    r = [0] * n
    r[a - 1] = (r[a - 1] + s) % d
    r[b - 1] = (r[b - 1] - s) % d
    return tuple(r)


@lru_cache(maxsize=None)
def _right_g_rule(w: Perm, i: int, d: int, q, unit):
    n = len(w)
    zero = (0,) * n
    ws = times_s(w, i)
    if w[i - 1] < w[i]:
        return ((zero, ws, unit),)
    # w = w' s_i with w' = ws shorter:
    # g_w g_i = g_{w'} g_i^2 = g_{w'} + q E g_{w'} + q E g_w,  E = e_{w'(i), w'(i+1)}
    a, b = ws[i - 1], ws[i]
    out = [(zero, ws, unit)]
    coef = q * unit / d
    for s in range(d):
        sh = _shift(n, d, a, b, s)
        out.append((sh, ws, coef))
        out.append((sh, w, coef))
    return tuple(out)


@lru_cache(maxsize=None)
def _left_g_rule(w: Perm, i: int, d: int, q, unit):
    n = len(w)
    zero = (0,) * n
    sw = s_times(i, w)
    winv = inverse_perm(w)
    if winv[i - 1] < winv[i]:
        return ((zero, sw, unit),)
    # w = s_i w'': g_i g_w = g_{w''} + q e_i g_{w''} + q e_i g_w
    out = [(zero, sw, unit)]
    coef = q * unit / d
    for s in range(d):
        sh = _shift(n, d, i, i + 1, s)
        out.append((sh, sw, coef))
        out.append((sh, w, coef))
    return tuple(out)


class AlgebraElement:
    """A finite linear combination of Juyumaya basis words."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: YokonumaHecke, terms: dict[Key, object]):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if c}

    # -- vector space structure --------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.alg.params != other.alg.params:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + self.alg.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, self.alg.zero) + c
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg.params == other.alg.params and self.terms == other.terms
        return self == self.alg.scalar(other)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (r, w), c in sorted(self.terms.items()):
            t = "".join(f"t{j + 1}^{x}" for j, x in enumerate(r) if x)
            g = str(permutation_to_pattern(w))
            parts.append(f"({c})*{t or ''}{'' if g == '1' and t else g}")
        return " + ".join(parts)

    # -- products ------------------------------------------------------------

    def _accumulate(self, out: dict, key: Key, c):
        v = out.get(key)
        out[key] = c if v is None else v + c

    def times_t(self, j: int, power: int = 1) -> "AlgebraElement":
        """self * t_j^power, using g_w t_j = t_{w(j)} g_w."""
        d = self.alg.d
        out: dict[Key, object] = {}
        for (r, w), c in self.terms.items():
            r2 = list(r)
            r2[w[j - 1] - 1] = (r2[w[j - 1] - 1] + power) % d
            self._accumulate(out, (tuple(r2), w), c)
        return AlgebraElement(self.alg, out)

    def t_times(self, j: int, power: int = 1) -> "AlgebraElement":
        """t_j^power * self."""
        d = self.alg.d
        out: dict[Key, object] = {}
        for (r, w), c in self.terms.items():
            r2 = list(r)
            r2[j - 1] = (r2[j - 1] + power) % d
            self._accumulate(out, (tuple(r2), w), c)
        return AlgebraElement(self.alg, out)

    def times_framing(self, s: Framing) -> "AlgebraElement":
        """self * t^s, moving the framing left past each g_w."""
        d = self.alg.d
        out: dict[Key, object] = {}
        for (r, w), c in self.terms.items():
            r2 = list(r)
            for j, x in enumerate(s, start=1):
                if x:
                    r2[w[j - 1] - 1] = (r2[w[j - 1] - 1] + x) % d
            self._accumulate(out, (tuple(r2), w), c)
        return AlgebraElement(self.alg, out)

    def times_g(self, i: int) -> "AlgebraElement":
        """self * g_i."""
        d = self.alg.d
        out: dict[Key, object] = {}
        for (r, w), c in self.terms.items():
            for sh, w2, k in self.alg.right_g_rule(w, i):
                r2 = tuple((a + b) % d for a, b in zip(r, sh))
                self._accumulate(out, (r2, w2), c * k)
        return AlgebraElement(self.alg, out)

    def g_times(self, i: int) -> "AlgebraElement":
        """g_i * self, using g_i t^r = t^{s_i r} g_i."""
        d = self.alg.d
        out: dict[Key, object] = {}
        for (r, w), c in self.terms.items():
            rs = list(r)
            rs[i - 1], rs[i] = rs[i], rs[i - 1]
            for sh, w2, k in self.alg.left_g_rule(w, i):
                r2 = tuple((a + b) % d for a, b in zip(rs, sh))
                self._accumulate(out, (r2, w2), c * k)
        return AlgebraElement(self.alg, out)

    def multiply(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        total: dict[Key, object] = {}
        for (s, v), c in other.terms.items():
            x = self.times_framing(s)
            for i in _reduced_word(v):
                x = x.times_g(i)
            for k, val in x.terms.items():
                self._accumulate(total, k, val * c)
        return AlgebraElement(self.alg, total)

    # -- coordinates -----------------------------------------------------------

    def coordinates(self) -> dict[int, object]:
        """Sparse coordinate vector {basis index: coefficient}."""
        return {self.alg.index(k): c for k, c in self.terms.items()}

    def specialize(self, u0) -> "AlgebraElement":
        """Evaluate a symbolic element at u = u0."""
        target = YokonumaHecke(self.alg.d, self.alg.n, u0)
        if not self.alg.symbolic:
            raise ValueError("element is already specialised")
        return AlgebraElement(target, {k: c.evaluate(u0) for k, c in self.terms.items()})

    def degree(self) -> int:
        """Largest braiding length among the terms."""
        return max((length(w) for _, w in self.terms), default=0)


@lru_cache(maxsize=None)
def _reduced_word(w: Perm) -> tuple[int, ...]:
    return permutation_to_pattern(w).word()


def all_permutations(n: int) -> list[Perm]:
    return list(permutations(range(1, n + 1)))
