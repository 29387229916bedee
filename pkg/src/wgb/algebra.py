"""Products on canonical representatives of a presented ring and its free modules.

``star_mul`` is the ring product, ``diamond_mul`` the twisted product that
multiplies coefficient blocks in order but composes the uppercase parts in
swapped order, and ``graded_mul``/``tail`` split a product of monomials into
its leading form and the strictly smaller remainder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import Scalar
from .freering import Poly, Term, Word, mul
from .presentation import Presentation


def star_mul(p: Presentation, f: Poly, g: Poly) -> Poly:
    return p.canonical(mul(f, g))


def multiple(p: Presentation, g: Poly, left: Word = (), right: Word = (), c: Scalar = 1) -> Poly:
    """Canonical form of ``c * left * g * right``."""
    return p.canonical(g.lmul(left).rmul(right).scale(c))


def diamond_mul(p: Presentation, f: Poly, g: Poly) -> Poly:
    """Twisted product: ``(a1 t1) <> (a2 t2) = (a1 a2)(t2 t1)``.

    Each term is read as lowercase prefix (coefficient block) times the rest.
    ``f`` must not carry a module position.
    """
    if f.positions() - {0}:
        raise ValueError("left operand of the twisted product must be a ring element")
    A = p.alphabet
    d: dict[Term, Scalar] = {}
    for (w1, _), c1 in f.terms.items():
        a1, t1 = A.split(w1)
        for (w2, pos), c2 in g.terms.items():
            a2, t2 = A.split(w2)
            t = (a1 + a2 + t2 + t1, pos)
            d[t] = d.get(t, 0) + c1 * c2
    return p.canonical(Poly(g.ring, d))


def graded_mul(p: Presentation, left: Poly, m: Poly, right: Poly) -> Poly:
    """Leading-form product of three monomials (zero when the term drops).

    The product is kept exactly when the concatenated term is still the
    leading term of the canonical product, in which case the result is the
    leading monomial of that product.
    """
    for x in (left, m, right):
        if len(x) != 1:
            raise ValueError("graded product takes monomials")
    (wl, _), cl = left.items()[0]
    (wm, pos), cm = m.items()[0]
    (wr, pr), cr = right.items()[0]
    term = (wl + wm + wr, pos or pr)
    star = p.canonical(Poly(m.ring, {term: cl * cm * cr}))
    if star and star.lt() == term:
        return star.lm()
    return Poly(m.ring, {})


def tail(p: Presentation, left: Poly, m: Poly, right: Poly) -> Poly:
    """Star product of the three monomials minus their graded product."""
    star = p.canonical(mul(mul(left, m), right))
    return star - graded_mul(p, left, m, right)


@dataclass(frozen=True)
class Leading:
    """Leading data of a nonzero element.

    ``term``/``lc``/``monomial`` are the usual leading term, coefficient and
    monomial. The term splits as ``upsilon * omega`` (lowercase prefix, rest);
    ``r_coeff`` collects every monomial sharing ``omega`` and the position,
    as a lowercase polynomial.
    """

    term: Term
    lc: Scalar
    monomial: Poly
    gamma: Scalar
    upsilon: Word
    omega: Word
    pos: int
    r_coeff: Poly


def leading(p: Presentation, f: Poly) -> Leading:
    if not f:
        raise ValueError("zero has no leading data")
    (w, pos), c = f.items()[0]
    ups, om = p.alphabet.split(w)
    rc: dict[Term, Scalar] = {}
    for (w2, p2), c2 in f.terms.items():
        u2, o2 = p.alphabet.split(w2)
        if o2 == om and p2 == pos:
            rc[(u2, 0)] = c2
    return Leading((w, pos), c, f.lm(), c, ups, om, pos, Poly(p.ring, rc))
