"""Incremental reduced row echelon form over the rationals, for sparse rows."""

from __future__ import annotations

from fractions import Fraction

Row = dict[int, Fraction]


class Echelon:
    """Rows kept fully reduced: each stored row has a pivot column in which
    it is 1 and every other stored row is 0.  Reducing a vector is then a
    single pass over its pivot entries."""

    def __init__(self):
        self.rows: dict[int, Row] = {}

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Row) -> Row:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for k, x in self.rows[p].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def contains(self, vec: Row) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Row) -> Row | None:
        """Insert ``vec``; return its normalised residual, or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = 1 / v[p]
        v = {k: c * inv for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return v


def rank_of(rows) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank
