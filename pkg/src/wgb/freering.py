"""Words, terms and polynomials of a free monoid ring with a two-block alphabet.

Letters are stored as integer indices: the lowercase (coefficient) block
first, then the uppercase block, so plain tuple comparison of equal-length
words is the left-to-right lexicographic order with every lowercase letter
below every uppercase one.

A term is a pair ``(word, pos)``. Position 0 means "no module marker" and is
used for ring elements and for rank-1 modules; ranks >= 2 use 1..m.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .coeff import Domain, Scalar

Word = tuple[int, ...]
Term = tuple[Word, int]


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class ParseError(ValueError):
    """Polynomial or presentation text could not be parsed.

    ``kind`` is one of UndeclaredSymbol, MalformedSyntax, PositionOutOfRange,
    CoefficientRing.
    """

    def __init__(self, kind: str, message: str, line: int, col: int):
        super().__init__(f"{kind} at line {line}, column {col}: {message}")
        self.kind = kind
        self.line = line
        self.col = col


_SYMBOL = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_MARKER = re.compile(r"e[0-9]+$")


@dataclass(frozen=True)
class Alphabet:
    v: tuple[str, ...]
    V: tuple[str, ...]

    def __post_init__(self) -> None:
        names = self.v + self.V
        if not names:
            raise ValueError("alphabet must not be empty")
        if len(set(names)) != len(names):
            raise ValueError("letters must be distinct")
        for s in names:
            if not _SYMBOL.match(s) or _MARKER.match(s):
                raise ValueError(f"invalid letter name {s!r}")

    @property
    def nv(self) -> int:
        return len(self.v)

    @property
    def size(self) -> int:
        return len(self.v) + len(self.V)

    @property
    def names(self) -> tuple[str, ...]:
        return self.v + self.V

    def index(self, name: str) -> int:
        return self.names.index(name)

    def is_upper(self, letter: int) -> bool:
        return letter >= len(self.v)

    def v_letters(self) -> range:
        return range(len(self.v))

    def V_letters(self) -> range:
        return range(len(self.v), self.size)

    def split(self, word: Word) -> tuple[Word, Word]:
        """Split a word into its maximal lowercase prefix and the remainder."""
        nv = len(self.v)
        k = 0
        while k < len(word) and word[k] < nv:
            k += 1
        return word[:k], word[k:]

    def is_v_word(self, word: Word) -> bool:
        nv = len(self.v)
        return all(a < nv for a in word)

    def is_V_word(self, word: Word) -> bool:
        nv = len(self.v)
        return all(a >= nv for a in word)

    def starts_upper(self, word: Word) -> bool:
        """Words usable as right multipliers: empty or beginning with an uppercase letter."""
        return not word or word[0] >= len(self.v)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        names = self.names
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            n = j - i
            parts.append(names[word[i]] if n == 1 else f"{names[word[i]]}^{n}")
            i = j
        return "*".join(parts)


class TermOrder:
    """Uppercase degree, then optional weight vectors, then total degree, then lex.

    Module terms compare by word first and by ascending position on ties.
    Weight vectors are nonnegative integers indexed like the alphabet.
    """

    def __init__(self, alphabet: Alphabet, weights: Sequence[Sequence[int]] = ()):
        self.alphabet = alphabet
        ws = []
        for w in weights:
            w = tuple(int(x) for x in w)
            if len(w) != alphabet.size or any(x < 0 for x in w):
                raise ValueError("weight vectors need one nonnegative entry per letter")
            ws.append(w)
        self.weights = tuple(ws)
        self._cache: dict[Word, tuple] = {}

    @property
    def kind(self) -> str:
        return "weights" if self.weights else "default"

    def key(self, word: Word) -> tuple:
        k = self._cache.get(word)
        if k is None:
            nv = self.alphabet.nv
            vdeg = sum(1 for a in word if a >= nv)
            ws = tuple(sum(w[a] for a in word) for w in self.weights)
            k = (vdeg,) + ws + (len(word), word)
            self._cache[word] = k
        return k

    def term_key(self, term: Term) -> tuple:
        return (self.key(term[0]), term[1])

    def compare(self, t1: Term | Word, t2: Term | Word) -> Cmp:
        t1 = _as_term(t1)
        t2 = _as_term(t2)
        k1, k2 = self.term_key(t1), self.term_key(t2)
        return Cmp.LT if k1 < k2 else Cmp.GT if k1 > k2 else Cmp.EQ

    def describe(self) -> str:
        if not self.weights:
            return "default"
        return "weights " + " ; ".join(" ".join(map(str, w)) for w in self.weights)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TermOrder) and (self.alphabet, self.weights) == (other.alphabet, other.weights)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.weights))


def _as_term(t: Term | Word) -> Term:
    if len(t) == 2 and isinstance(t[0], tuple) and isinstance(t[1], int):
        return t  # type: ignore[return-value]
    return (tuple(t), 0)  # type: ignore[arg-type]


@dataclass(frozen=True)
class FreeRing:
    """Context shared by polynomials: alphabet, order, coefficient domain, module rank."""

    alphabet: Alphabet
    order: TermOrder
    domain: Domain = field(default_factory=Domain)
    rank: int = 1

    def poly(self, terms: Mapping[Term, Scalar] | Iterable[tuple[Term, Scalar]] = ()) -> "Poly":
        return Poly(self, terms)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {((), 0): 1})

    def monomial(self, c: Scalar, word: Word, pos: int = 0) -> "Poly":
        return Poly(self, {(tuple(word), pos): c})

    def word(self, text: str) -> Word:
        """Parse a bare word such as ``"X1*x1"`` or ``"1"``."""
        p = parse(text, self)
        if len(p.terms) != 1:
            raise ParseError("MalformedSyntax", "expected a single word", 1, 1)
        (w, pos), c = next(iter(p.terms.items()))
        if c != 1 or pos != 0:
            raise ParseError("MalformedSyntax", "expected a bare word", 1, 1)
        return w

    def parse(self, text: str, line: int = 1, col: int = 1) -> "Poly":
        return parse(text, self, line, col)

    def with_rank(self, rank: int) -> "FreeRing":
        return FreeRing(self.alphabet, self.order, self.domain, rank)


class Poly:
    """Finite sum of monomials; zero coefficients are never stored."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: FreeRing, terms: Mapping[Term, Scalar] | Iterable[tuple[Term, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Term, Scalar] = {}
        for t, c in items:
            if c:
                d[t] = c
        self.ring = ring
        self.terms = d
        self._sorted: list[tuple[Term, Scalar]] | None = None

    # ----- structure -------------------------------------------------------
    def items(self) -> list[tuple[Term, Scalar]]:
        """Monomials in strictly descending term order."""
        if self._sorted is None:
            tk = self.ring.order.term_key
            self._sorted = sorted(self.terms.items(), key=lambda it: tk(it[0]), reverse=True)
        return self._sorted

    def __iter__(self) -> Iterator[tuple[Term, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def lt(self) -> Term:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.items()[0][0]

    def lc(self) -> Scalar:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.items()[0][1]

    def lm(self) -> "Poly":
        t, c = self.items()[0]
        return Poly(self.ring, {t: c})

    def degree(self) -> int:
        return max((len(w) for (w, _) in self.terms), default=-1)

    def positions(self) -> set[int]:
        return {p for (_, p) in self.terms}

    def coeff(self, term: Term) -> Scalar:
        return self.terms.get(term, 0)

    # ----- arithmetic ------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        d = dict(self.terms)
        for t, c in other.terms.items():
            d[t] = d.get(t, 0) + c
        return Poly(self.ring, d)

    def __sub__(self, other: "Poly") -> "Poly":
        d = dict(self.terms)
        for t, c in other.terms.items():
            d[t] = d.get(t, 0) - c
        return Poly(self.ring, d)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {t: -c for t, c in self.terms.items()})

    def scale(self, c: Scalar) -> "Poly":
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {t: c * a for t, a in self.terms.items()})

    def __rmul__(self, c: Scalar) -> "Poly":
        return self.scale(c)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        return mul(self, other)

    def lmul(self, word: Word) -> "Poly":
        """Left concatenation by a word (no rewriting)."""
        if not word:
            return self
        return Poly(self.ring, {(word + w, p): c for (w, p), c in self.terms.items()})

    def rmul(self, word: Word) -> "Poly":
        """Right concatenation by a word (no rewriting)."""
        if not word:
            return self
        return Poly(self.ring, {(w + word, p): c for (w, p), c in self.terms.items()})

    def at_position(self, pos: int) -> "Poly":
        return Poly(self.ring, {(w, pos): c for (w, _), c in self.terms.items()})

    # ----- comparison and printing -----------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def mul(f: Poly, g: Poly) -> Poly:
    """Product in the free ring: bilinear extension of word concatenation."""
    if f.positions() - {0} and g.positions() - {0}:
        raise ValueError("cannot multiply two module elements")
    d: dict[Term, Scalar] = {}
    for (w1, p1), c1 in f.terms.items():
        for (w2, p2), c2 in g.terms.items():
            t = (w1 + w2, p1 or p2)
            d[t] = d.get(t, 0) + c1 * c2
    return Poly(f.ring, d)


# ----------------------------------------------------------------------------
# printing


def _coeff_str(c: Scalar) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def format_term(ring: FreeRing, term: Term) -> str:
    w, pos = term
    s = ring.alphabet.word_str(w)
    if pos:
        s = f"e{pos}" if not w else f"{s}*e{pos}"
    return s


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    out = []
    for k, ((w, pos), c) in enumerate(f.items()):
        neg = c < 0
        a = -c if neg else c
        body = f.ring.alphabet.word_str(w) if w else ""
        if pos:
            body = f"{body}*e{pos}" if body else f"e{pos}"
        if a == 1 and body:
            mono = body
        else:
            mono = _coeff_str(a) + ("*" + body if body else "")
        if k == 0:
            out.append("-" + mono if neg else mono)
        else:
            out.append(("- " if neg else "+ ") + mono)
    return " ".join(out)


# ----------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^/]))"
)


def _tokens(text: str, line: int, col: int):
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("MalformedSyntax", f"unexpected character {text[pos]!r}", line, col + pos)
        kind = m.lastgroup
        start = m.start(kind)
        yield kind, m.group(kind), col + start
        pos = m.end()


def parse(text: str, ring: FreeRing, line: int = 1, col: int = 1) -> Poly:
    """Parse the polynomial grammar (``2*x1*X1 - x2*X1``, ``X1^2*x1``, ``3/2*x1*e2``).

    ``line``/``col`` locate ``text`` inside a larger document for error messages.
    """
    toks = list(_tokens(text, line, col))
    endcol = col + len(text)
    alpha = ring.alphabet
    domain = ring.domain
    terms: dict[Term, Scalar] = {}
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None, endcol)

    if not toks:
        raise ParseError("MalformedSyntax", "empty polynomial", line, col)
    first = True
    while i < len(toks):
        sign = 1
        kind, val, c0 = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("MalformedSyntax", "expected '+' or '-'", line, c0)
        first = False
        coef: Scalar = Fraction(sign)
        word: list[int] = []
        pos = 0
        need = True
        while need:
            kind, val, c0 = peek()
            if kind == "num":
                i += 1
                num = Fraction(int(val))
                k2, v2, c2 = peek()
                if k2 == "op" and v2 == "/":
                    i += 1
                    k3, v3, c3 = peek()
                    if k3 != "num" or int(v3) == 0:
                        raise ParseError("MalformedSyntax", "expected nonzero denominator", line, c3)
                    i += 1
                    num = num / int(v3)
                coef *= num
            elif kind == "name":
                i += 1
                if _MARKER.match(val) and val not in alpha.names:
                    p = int(val[1:])
                    if ring.rank < 2 or not 1 <= p <= ring.rank:
                        raise ParseError("PositionOutOfRange", f"module marker {val} outside rank {ring.rank}", line, c0)
                    if pos:
                        raise ParseError("MalformedSyntax", "repeated module marker", line, c0)
                    pos = p
                elif val in alpha.names:
                    if pos:
                        raise ParseError("MalformedSyntax", "module marker must come last", line, c0)
                    letter = alpha.index(val)
                    k2, v2, c2 = peek()
                    rep = 1
                    if k2 == "op" and v2 == "^":
                        i += 1
                        k3, v3, c3 = peek()
                        if k3 != "num":
                            raise ParseError("MalformedSyntax", "expected exponent", line, c3)
                        i += 1
                        rep = int(v3)
                    word.extend([letter] * rep)
                else:
                    raise ParseError("UndeclaredSymbol", f"symbol {val!r} is not declared", line, c0)
            else:
                raise ParseError("MalformedSyntax", "expected coefficient or letter", line, c0)
            kind, val, c0 = peek()
            if kind == "op" and val == "*":
                i += 1
            else:
                need = False
        kind, val, c0 = peek()
        if kind is not None and not (kind == "op" and val in "+-"):
            raise ParseError("MalformedSyntax", f"unexpected {val!r}", line, c0)
        if ring.rank >= 2 and pos == 0:
            raise ParseError("PositionOutOfRange", "module element needs a marker *e<i>", line, c0)
        if not domain.field and coef.denominator != 1:
            raise ParseError("CoefficientRing", f"rational coefficient {coef} in integer mode", line, col)
        cval: Scalar = coef if domain.field else coef.numerator
        t = (tuple(word), pos)
        terms[t] = terms.get(t, 0) + cval
    return Poly(ring, terms)


# ----------------------------------------------------------------------------
# order validation


@dataclass(frozen=True)
class OrderViolation:
    relation: str
    expected: str
    found: str

    def __str__(self) -> str:
        return f"relation {self.relation}: leading term is {self.found}, expected {self.expected}"


def commutation_term(alphabet: Alphabet, word: Word) -> bool:
    """True for words ``X_i x_j`` (an uppercase letter followed by a lowercase one)."""
    return len(word) == 2 and alphabet.is_upper(word[0]) and not alphabet.is_upper(word[1])


def validate_order(order: TermOrder, relations: Iterable[Poly]) -> list[OrderViolation]:
    """Check that every relation containing a term ``X_i x_j`` is led by it.

    Relations without such a term always pass. An empty list means OK.
    """
    out = []
    for f in relations:
        if not f:
            continue
        comm = [t for t in f.terms if commutation_term(order.alphabet, t[0])]
        if not comm:
            continue
        lead = f.lt()
        if lead not in comm:
            expected = max(comm, key=order.term_key)
            out.append(
                OrderViolation(str(f), format_term(f.ring, expected), format_term(f.ring, lead))
            )
    return out
