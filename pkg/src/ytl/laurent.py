"""Laurent polynomials in one variable u with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class LaurentPolynomial:
    """Sparse element of Q[u, u^-1], stored as {exponent: Fraction}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, (int, Fraction)):
            coeffs = {0: coeffs}
        self.coeffs = {int(e): Fraction(c) for e, c in dict(coeffs).items() if c}

    @classmethod
    def u(cls, power: int = 1) -> "LaurentPolynomial":
        return cls({power: 1})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPolynomial({0: Fraction(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return LaurentPolynomial({e: c / other for e, c in self.coeffs.items()})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def evaluate(self, u0) -> Fraction:
        u0 = Fraction(u0)
        if u0 == 0 and any(e < 0 for e in self.coeffs):
            raise ZeroDivisionError("negative power of u at u = 0")
        return sum((c * u0 ** e for e, c in self.coeffs.items()), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "" if e == 0 else ("u" if e == 1 else f"u^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")
