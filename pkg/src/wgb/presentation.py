"""Effectively given rings: a free ring modulo relations G0 (lowercase only),
C (commutation rules ``X_i x_j -> ...``) and H (everything else).

Canonical representatives are computed by strong two-sided reduction over the
saturated relation set; coefficients end up as least non-negative residues
modulo the gcd of the applicable leading coefficients.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .coeff import Domain, Scalar
from .freering import (
    Alphabet,
    FreeRing,
    ParseError,
    Poly,
    Term,
    TermOrder,
    Word,
    commutation_term,
    format_term,
    parse,
    validate_order,
)


class SaturationInsufficient(RuntimeError):
    """A term beyond the saturation bound was needed."""


@dataclass(frozen=True)
class Violation:
    kind: str
    relation: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.relation}: {self.detail}"


@dataclass(frozen=True)
class TermClass:
    """N (no relation leads the term), L (unit Szekeres generator) or R (proper)."""

    kind: str
    c: Scalar


class _Desc:
    """Heap entry ordering terms from largest to smallest."""

    __slots__ = ("key", "term")

    def __init__(self, key, term):
        self.key = key
        self.term = term

    def __lt__(self, other: "_Desc") -> bool:
        return self.key > other.key


@dataclass
class Presentation:
    alphabet: Alphabet
    order: TermOrder
    domain: Domain = field(default_factory=Domain)
    G0: tuple[Poly, ...] = ()
    C: tuple[Poly, ...] = ()
    H: tuple[Poly, ...] = ()
    rank: int = 1
    ideal: tuple[Poly, ...] = ()
    basis: tuple[Poly, ...] | None = None
    saturated_degree: int | None = None

    def __post_init__(self) -> None:
        self.ring = FreeRing(self.alphabet, self.order, self.domain, 1)
        self.module_ring = FreeRing(self.alphabet, self.order, self.domain, self.rank)
        if self.basis is None:
            self.basis = tuple(self.relations())
            # an unsaturated non-empty relation set supports no canonical forms
            self.saturated_degree = None if not self.basis else -1
        self._index: dict[int, list[tuple[Word, Poly]]] = {}
        for g in self.basis:
            lw = g.lt()[0]
            self._index.setdefault(lw[0] if lw else -1, []).append((lw, g))
        self._szekeres: dict[Word, Scalar] = {}
        self._divisors_cache: dict[Word, list] = {}

    # ----- construction helpers -------------------------------------------
    @classmethod
    def free(cls, alphabet: Alphabet, order: TermOrder | None = None, domain: Domain | None = None, rank: int = 1) -> "Presentation":
        return cls(alphabet, order or TermOrder(alphabet), domain or Domain(), rank=rank)

    def relations(self) -> list[Poly]:
        return list(self.G0) + list(self.C) + list(self.H)

    @property
    def is_free(self) -> bool:
        return not self.basis

    @property
    def complete(self) -> bool:
        return self.saturated_degree is None

    def parse(self, text: str) -> Poly:
        """Parse a module element (positions per rank) and canonicalize it."""
        return self.canonical(parse(text, self.module_ring))

    def with_ideal(self, ideal: Iterable[Poly]) -> "Presentation":
        return replace(self, ideal=tuple(ideal))

    # ----- validation -------------------------------------------------------
    def validate(self) -> list[Violation]:
        A = self.alphabet
        out: list[Violation] = []
        for g in self.G0:
            if any(not A.is_v_word(w) for (w, _) in g.terms):
                out.append(Violation("CoefficientRing", str(g), "G0 relations may only use lowercase letters"))
        seen: set[Word] = set()
        for f in self.C:
            if not f:
                continue
            lead = f.lt()[0]
            if not commutation_term(A, lead):
                out.append(Violation("CLeadingTerm", str(f), f"leading term {format_term(f.ring, f.lt())} is not of shape X_i x_j"))
                continue
            if lead in seen:
                out.append(Violation("DuplicateCommutation", str(f), "second rule for the same pair"))
            seen.add(lead)
            i = lead[0]
            for (w, _), _c in f.items()[1:]:
                ups, rest = A.split(w)
                if len(rest) > 1 or (rest and (not A.is_upper(rest[0]) or rest[0] > i)):
                    out.append(Violation("OreShape", str(f), f"tail term {format_term(f.ring, (w, 0))} breaks the Ore shape"))
        for h in self.H:
            if not h:
                continue
            ups, rest = A.split(h.lt()[0])
            if not rest or not A.is_V_word(rest):
                out.append(Violation("HShape", str(h), "leading term must be a lowercase block followed by a nonempty uppercase block"))
        for v in validate_order(self.order, self.relations()):
            out.append(Violation("OrderViolation", v.relation, str(v)))
        return out

    # ----- canonical forms --------------------------------------------------
    def _check_degree(self, word: Word) -> None:
        d = self.saturated_degree
        if d is not None and len(word) > d:
            raise SaturationInsufficient(
                f"term of degree {len(word)} exceeds saturation bound {d}"
            )

    def divisors(self, word: Word) -> list[tuple[Poly, Word, Word]]:
        """All ``(g, left, right)`` with ``left * T(g) * right == word``."""
        hit = self._divisors_cache.get(word)
        if hit is not None:
            return hit
        out = []
        n = len(word)
        for i in range(n):
            for lw, g in self._index.get(word[i], ()):
                k = len(lw)
                if word[i:i + k] == lw:
                    out.append((g, word[:i], word[i + k:]))
        for lw, g in self._index.get(-1, ()):
            out.append((g, (), word))
        self._divisors_cache[word] = out
        return out

    def szekeres(self, word: Word) -> Scalar:
        """Generator of the ideal of leading coefficients at ``word`` (0 when none)."""
        c = self._szekeres.get(word)
        if c is None:
            self._check_degree(word)
            c = 0
            for g, _, _ in self.divisors(word):
                c = self.domain.gcd(c, g.lc())
            self._szekeres[word] = c
        return c

    def classify_term(self, word: Word | Term) -> TermClass:
        if word and isinstance(word[0], tuple):
            word = word[0]  # type: ignore[assignment]
        c = self.szekeres(tuple(word))  # type: ignore[arg-type]
        if c == 0:
            return TermClass("N", 0)
        if self.domain.is_unit(c):
            return TermClass("L", 1)
        return TermClass("R", c)

    def in_order_module(self, word: Word) -> bool:
        """Right multipliers: words that are empty or start uppercase and survive the quotient."""
        return self.alphabet.starts_upper(word) and self.classify_term(word).kind != "L"

    def canonical(self, f: Poly) -> Poly:
        """Canonical representative of ``f`` modulo the relations (per position)."""
        if not self.basis:
            return f
        dom = self.domain
        tk = self.order.term_key
        work: dict[Term, Scalar] = {}
        heap: list[_Desc] = []
        for t, c in f.terms.items():
            self._check_degree(t[0])
            work[t] = c
            heapq.heappush(heap, _Desc(tk(t), t))
        out: dict[Term, Scalar] = {}
        while heap:
            t = heapq.heappop(heap).term
            c = work.pop(t, 0)
            if not c:
                continue
            word, pos = t
            divs = self.divisors(word)
            if not divs:
                out[t] = c
                continue
            g0, comb = dom.strong_ideal_basis([g.lc() for g, _, _ in divs])
            r = dom.canon_rem(c, g0)
            q = dom.quo(c - r, g0)
            if q:
                for s, (g, left, right) in zip(comb, divs):
                    if not s:
                        continue
                    m = -q * s
                    for (w, _), a in g.items()[1:]:
                        nt = (left + w + right, pos)
                        self._check_degree(nt[0])
                        if nt in work:
                            work[nt] += m * a
                        else:
                            work[nt] = m * a
                            heapq.heappush(heap, _Desc(tk(nt), nt))
            if r:
                out[t] = r
        return Poly(f.ring, out)

    def is_canonical(self, f: Poly) -> bool:
        return self.canonical(f) == f

    # ----- structure ---------------------------------------------------------
    def relation_kinds(self) -> tuple[list[Poly], list[Poly], list[Poly]]:
        """Split the saturated basis into lowercase-only, commutation and other relations."""
        A = self.alphabet
        g0, c, h = [], [], []
        for g in self.basis:
            lw = g.lt()[0]
            if A.is_v_word(lw):
                g0.append(g)
            elif commutation_term(A, lw):
                c.append(g)
            else:
                h.append(g)
        return g0, c, h

    def structure_constants(self, rho: Word, j: int) -> list[tuple[Poly, Word]]:
        """Decompose ``rho * x_j`` as a sum of (lowercase polynomial) * (remaining word)."""
        if self.alphabet.is_upper(j):
            raise ValueError("structure constants take a lowercase letter")
        f = self.canonical(self.ring.monomial(1, tuple(rho) + (j,)))
        groups: dict[Word, dict[Term, Scalar]] = {}
        for (w, _), c in f.terms.items():
            ups, rest = self.alphabet.split(w)
            groups.setdefault(rest, {})[(ups, 0)] = c
        keys = sorted(groups, key=self.order.key, reverse=True)
        return [(Poly(self.ring, groups[k]), k) for k in keys]

    # ----- saturation --------------------------------------------------------
    def saturate(self, bound: int) -> "Presentation":
        """Complete the relation set up to degree ``bound``.

        Returns a new presentation; an already complete one is returned as is.
        A presentation whose completion is certified finite is marked complete
        (no degree limit for canonical forms).
        """
        if not isinstance(bound, int) or bound < 0:
            raise ValueError("saturation bound must be a nonnegative degree")
        if self.complete:
            return self
        if self.saturated_degree is not None and self.saturated_degree >= bound:
            return self
        from .engine import GeneratorSet, bilateral_completion

        free = Presentation.free(self.alphabet, self.order, self.domain)
        gens = [g for g in self.relations() if g]
        res = bilateral_completion(GeneratorSet(free, gens), bound)
        sat = replace(self, basis=tuple(res.basis), saturated_degree=bound)
        if sat._certify():
            sat = replace(self, basis=tuple(res.basis), saturated_degree=None)
        return sat

    def _certify(self) -> bool:
        """Check every overlap of leading words of the basis resolves to zero."""
        dom = self.domain
        basis = list(self.basis)
        try:
            for a, g1 in enumerate(basis):
                for b, g2 in enumerate(basis):
                    w1, w2 = g1.lt()[0], g2.lt()[0]
                    c1, c2 = g1.lc(), g2.lc()
                    checks = []
                    # suffix of w1 equals prefix of w2
                    for k in range(1, min(len(w1), len(w2))):
                        if w1[-k:] == w2[:k]:
                            checks.append((g1, (), w2[k:], g2, w1[:-k], ()))
                    if b != a:
                        for i in range(len(w1) - len(w2) + 1):
                            if w1[i:i + len(w2)] == w2:
                                checks.append((g1, (), (), g2, w1[:i], w1[i + len(w2):]))
                    if not checks and b > a and not dom.field:
                        if not (dom.is_unit(c1) or dom.is_unit(c2)):
                            return False
                    for f1, l1, r1, f2, l2, r2 in checks:
                        L = dom.lcm(c1, c2)
                        m1 = f1.lmul(l1).rmul(r1)
                        m2 = f2.lmul(l2).rmul(r2)
                        s = m1.scale(dom.quo(L, c1)) - m2.scale(dom.quo(L, c2))
                        # gcd combinations need no separate check: canonical()
                        # already reduces by the gcd of all applicable leaders
                        if self.canonical(s):
                            return False
        except SaturationInsufficient:
            return False
        return True


# ----------------------------------------------------------------------------
# presentation files

_SECTION = re.compile(r"^\s*\[(\w+)\]\s*$")
_ASSIGN = re.compile(r"^\s*(\w+)\s*=\s*(.*)$")
_LIST = re.compile(r"^\s*(G0|C|H|F)\s*:(.*)$")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def load_presentation(text: str) -> Presentation:
    """Parse the section-based presentation format.

    Errors carry the line and column of the offending token.
    """
    settings: dict[str, tuple[str, int]] = {}
    lists: dict[str, list[tuple[str, int, int]]] = {"G0": [], "C": [], "H": [], "F": []}
    section = None
    current: str | None = None
    allowed = {
        "presentation": {"v", "V", "order", "mode", "G0", "C", "H"},
        "module": {"rank"},
        "ideal": {"F"},
    }
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _SECTION.match(line)
        if m:
            section = m.group(1)
            if section not in allowed:
                raise ParseError("MalformedSyntax", f"unknown section [{section}]", lineno, line.index("[") + 1)
            current = None
            continue
        if section is None:
            raise ParseError("MalformedSyntax", "content before the first section", lineno, 1)
        m = _LIST.match(line)
        if m:
            key = m.group(1)
            if key not in allowed[section]:
                raise ParseError("MalformedSyntax", f"{key}: not allowed in [{section}]", lineno, line.index(key) + 1)
            current = key
            lists[key].append((m.group(2), lineno, m.start(2) + 1))
            continue
        m = _ASSIGN.match(line)
        if m:
            key = m.group(1)
            if key not in allowed[section]:
                raise ParseError("MalformedSyntax", f"unknown key {key!r} in [{section}]", lineno, m.start(1) + 1)
            settings[key] = (m.group(2).strip(), lineno)
            current = None
            continue
        if current is None:
            raise ParseError("MalformedSyntax", "unrecognized line", lineno, 1)
        lists[current].append((line, lineno, 1))

    if "v" not in settings and "V" not in settings:
        raise ParseError("MalformedSyntax", "alphabet missing (v = ..., V = ...)", 1, 1)
    v = tuple(settings.get("v", ("", 0))[0].split())
    V = tuple(settings.get("V", ("", 0))[0].split())
    for name in v:
        if not name[0].islower():
            raise ParseError("MalformedSyntax", f"lowercase letter expected, got {name!r}", settings["v"][1], 1)
    for name in V:
        if not name[0].isupper():
            raise ParseError("MalformedSyntax", f"uppercase letter expected, got {name!r}", settings["V"][1], 1)
    try:
        alphabet = Alphabet(v, V)
    except ValueError as exc:
        raise ParseError("MalformedSyntax", str(exc), settings.get("v", ("", 1))[1], 1) from None
    mode_text, mode_line = settings.get("mode", ("int", 0))
    if mode_text not in ("int", "rat"):
        raise ParseError("MalformedSyntax", f"mode must be int or rat, got {mode_text!r}", mode_line, 1)
    order = _parse_order(settings.get("order", ("default", 0)), alphabet)
    rank_text, rank_line = settings.get("rank", ("1", 0))
    if not rank_text.isdigit() or int(rank_text) < 1:
        raise ParseError("MalformedSyntax", f"rank must be a positive integer, got {rank_text!r}", rank_line, 1)
    domain = Domain(mode_text)
    rank = int(rank_text)
    ring = FreeRing(alphabet, order, domain, 1)
    mring = FreeRing(alphabet, order, domain, rank)

    def polys(key: str, r: FreeRing) -> tuple[Poly, ...]:
        out = []
        for chunk, ln, col in lists[key]:
            offset = 0
            for piece in chunk.split(";"):
                if piece.strip():
                    out.append(parse(piece, r, ln, col + offset))
                offset += len(piece) + 1
        return tuple(out)

    return Presentation(
        alphabet,
        order,
        domain,
        G0=polys("G0", ring),
        C=polys("C", ring),
        H=polys("H", ring),
        rank=rank,
        ideal=polys("F", mring),
    )


def _parse_order(setting: tuple[str, int], alphabet: Alphabet) -> TermOrder:
    text, line = setting
    if text == "default":
        return TermOrder(alphabet)
    if text.startswith("weights"):
        vectors = []
        for part in text[len("weights"):].split(";"):
            nums = part.split()
            if not nums or not all(x.isdigit() for x in nums):
                raise ParseError("MalformedSyntax", "weights need nonnegative integers", line, 1)
            vectors.append([int(x) for x in nums])
        try:
            return TermOrder(alphabet, vectors)
        except ValueError as exc:
            raise ParseError("MalformedSyntax", str(exc), line, 1) from None
    raise ParseError("MalformedSyntax", f"unknown order {text!r}", line, 1)


def format_presentation(p: Presentation) -> str:
    lines = [
        "[presentation]",
        "v = " + " ".join(p.alphabet.v),
        "V = " + " ".join(p.alphabet.V),
        "order = " + p.order.describe(),
        "mode = " + p.domain.mode,
        "G0: " + "; ".join(map(str, p.G0)),
        "C: " + "; ".join(map(str, p.C)),
        "H: " + "; ".join(map(str, p.H)),
    ]
    if p.rank != 1:
        lines += ["[module]", f"rank = {p.rank}"]
    if p.ideal:
        lines += ["[ideal]", "F: " + "; ".join(map(str, p.ideal))]
    return "\n".join(lines) + "\n"


def make_presentation(
    v: Sequence[str],
    V: Sequence[str],
    G0: Sequence[str] = (),
    C: Sequence[str] = (),
    H: Sequence[str] = (),
    mode: str = "int",
    rank: int = 1,
    weights: Sequence[Sequence[int]] = (),
) -> Presentation:
    """Convenience constructor from polynomial strings."""
    alphabet = Alphabet(tuple(v), tuple(V))
    order = TermOrder(alphabet, weights)
    domain = Domain(mode)
    ring = FreeRing(alphabet, order, domain, 1)
    return Presentation(
        alphabet,
        order,
        domain,
        G0=tuple(parse(s, ring) for s in G0),
        C=tuple(parse(s, ring) for s in C),
        H=tuple(parse(s, ring) for s in H),
        rank=rank,
    )
