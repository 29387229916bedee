"""Brute-force membership by exact linear algebra.

Enumerates every canonical multiple of the generators up to a degree bound
and decides whether a target is an integer (or rational) combination of them.
Shares nothing with the completion engine except canonical forms of the ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .coeff import Scalar, bezout
from .freering import Poly, Word
from .presentation import Presentation

Row = dict  # column key -> Scalar


class OracleBoundError(ValueError):
    """The bound does not contain the target's leading term."""


@dataclass
class Lattice:
    """Echelon basis of an integer (or rational) row lattice.

    Rows are sparse dicts keyed by sortable column keys; the smallest key leads.
    Each pivot column has exactly one row, with a positive pivot entry.
    """

    exact_division: bool = False
    pivots: dict = field(default_factory=dict)

    @staticmethod
    def _lead(row: Row) -> int:
        return min(row)

    @staticmethod
    def _axpy(a: Scalar, x: Row, b: Scalar, y: Row) -> Row:
        """a*x + b*y with zeros dropped."""
        out: Row = {}
        for k in x.keys() | y.keys():
            v = a * x.get(k, 0) + b * y.get(k, 0)
            if v:
                out[k] = v
        return out

    def insert(self, row: Row) -> None:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = self._lead(row)
            piv = self.pivots.get(col)
            if piv is None:
                if self.exact_division:
                    inv = Fraction(1) / row[col]
                    row = {k: v * inv for k, v in row.items()}
                elif row[col] < 0:
                    row = {k: -v for k, v in row.items()}
                self.pivots[col] = row
                return
            a, b = piv[col], row[col]
            if self.exact_division:
                row = self._axpy(1, row, -Fraction(b) / a, piv)
                continue
            if b % a == 0:
                row = self._axpy(1, row, -(b // a), piv)
                continue
            # unimodular 2x2 step: (piv, row) -> (s*piv + t*row, (a/g)*row - (b/g)*piv)
            g, s, t = bezout(a, b)
            new_piv = self._axpy(s, piv, t, row)
            row = self._axpy(a // g, row, -(b // g), piv)
            self.pivots[col] = new_piv

    def contains(self, row: Row) -> bool:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = self._lead(row)
            piv = self.pivots.get(col)
            if piv is None:
                return False
            a, b = piv[col], row[col]
            if self.exact_division:
                q = Fraction(b) / a
            elif b % a:
                return False
            else:
                q = b // a
            row = self._axpy(1, row, -q, piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _words(letters: Sequence[int], max_len: int) -> Iterable[Word]:
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


@dataclass
class SpanMatrix:
    """Canonical multiples of the generators within a degree bound, as lattice rows."""

    presentation: Presentation
    gens: list[Poly]
    side: str
    bound: int
    rows: list[Poly] = field(default_factory=list)
    lattice: Lattice | None = None

    def __post_init__(self) -> None:
        if self.side not in ("restricted", "bilateral"):
            raise ValueError(f"unknown side {self.side!r}")
        p = self.presentation
        A = p.alphabet
        every = list(range(A.size))
        for f in self.gens:
            f = p.canonical(f)
            if not f:
                continue
            room = self.bound - len(f.lt()[0])
            if room < 0:
                continue
            if self.side == "restricted":
                lefts = list(_words(list(A.v_letters()), room))
                # right multipliers: irreducible words that are empty or start uppercase
                rights = [
                    w for w in _words(every, room)
                    if (not w or A.is_upper(w[0])) and p.is_canonical(p.ring.monomial(1, w))
                ]
            else:
                lefts = list(_words(every, room))
                rights = lefts
            for lw in lefts:
                for rw in rights:
                    if len(lw) + len(rw) > room:
                        continue
                    m = p.canonical(f.lmul(lw).rmul(rw))
                    if m:
                        self.rows.append(m)
        self.lattice = Lattice(p.domain.field)
        for m in self.rows:
            self.lattice.insert(self._row(m))

    def _row(self, f: Poly) -> Row:
        # columns sort largest term first so elimination follows the term order
        tk = self.presentation.order.term_key
        return {_neg_key(tk(t)): c for t, c in f.terms.items()}  # type: ignore[misc]

    def contains(self, g: Poly) -> bool:
        return self.lattice.contains(self._row(g))  # type: ignore[union-attr]


class _neg_key:
    """Sort key wrapper: larger term keys come first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other: "_neg_key") -> bool:
        return self.k > other.k

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _neg_key) and self.k == other.k

    def __hash__(self) -> int:
        return hash(self.k)


def oracle_member(g: Poly, F: Sequence[Poly], p: Presentation, side: str = "restricted", bound: int | None = None) -> str:
    """``"Yes"`` when g is a combination of the enumerated multiples, else ``"NoWithinBound"``."""
    g = p.canonical(g)
    if not g:
        return "Yes"
    if bound is None:
        bound = g.degree()
    if g.degree() > bound:
        raise OracleBoundError(f"bound {bound} is below the degree {g.degree()} of the target")
    span = SpanMatrix(p, list(F), side, bound)
    return "Yes" if span.contains(g) else "NoWithinBound"
