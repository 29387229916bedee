"""Normal forms, restricted S-pairs, and restricted/bilateral completion.

Elements live in a free module over a presented ring and are always kept in
canonical form. A *restricted multiple* of ``g`` is ``c * lam * g * rho`` with
``lam`` a lowercase word and ``rho`` an empty or uppercase-initial word; the
restricted module of a set is the span of those multiples. Bilateral
completion closes a restricted basis under left multiplication by uppercase
letters and right multiplication by the structure constants of the ring.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .algebra import multiple
from .coeff import Scalar
from .freering import Poly, Term, Word, format_poly, format_term
from .presentation import Presentation, SaturationInsufficient, _Desc

Bound = Union[int, Term]

CASES = ("A.1", "A.2", "A.3", "A.4", "B.1", "B.3")


class BoundError(ValueError):
    """Invalid bound or non-monotone bound stream."""


class NonSequentialOrder(RuntimeError):
    """The order admits infinitely many uppercase words below a term."""


class IncompleteResult(RuntimeError):
    """An operation that needs a complete basis got a truncated one."""


@dataclass(frozen=True)
class LeadInfo:
    gamma: Scalar
    upsilon: Word
    omega: Word
    pos: int

    @property
    def word(self) -> Word:
        return self.upsilon + self.omega

    @property
    def term(self) -> Term:
        return (self.upsilon + self.omega, self.pos)


def lead_info(p: Presentation, g: Poly) -> LeadInfo:
    (w, pos), c = g.items()[0]
    ups, om = p.alphabet.split(w)
    return LeadInfo(c, ups, om, pos)


class GeneratorSet:
    """Canonical nonzero module elements plus the ring relations lifted to each position."""

    def __init__(self, presentation: Presentation, elems: Iterable[Poly] = ()):
        self.p = presentation
        self.elems: list[Poly] = []
        self.leads: list[LeadInfo] = []
        for e in elems:
            e = presentation.canonical(e)
            if e:
                self.elems.append(e)
                self.leads.append(lead_info(presentation, e))
        _, _, hrel = presentation.relation_kinds() if presentation.basis else ([], [], [])
        positions = [0] if presentation.rank == 1 else list(range(1, presentation.rank + 1))
        self.hpos: list[Poly] = [h.at_position(i) for h in hrel for i in positions]
        self.hleads: list[LeadInfo] = [lead_info(presentation, h) for h in self.hpos]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)


# ----------------------------------------------------------------------------
# syzygy generators


@dataclass(frozen=True)
class Leg:
    """``coeff * lam * e(ref) * rho`` where ref is ('F', i) or ('H', k)."""

    kind: str
    index: int
    coeff: Scalar
    lam: Word
    rho: Word

    def term(self, leads: Sequence[LeadInfo], hleads: Sequence[LeadInfo]) -> Term:
        li = (leads if self.kind == "F" else hleads)[self.index]
        return (self.lam + li.word + self.rho, li.pos)


@dataclass(frozen=True)
class SyzGen:
    left: Leg
    right: Leg
    w: Term
    case: str

    def sort_key(self, order) -> tuple:
        refs = ((self.left.kind, self.left.index), (self.right.kind, self.right.index))
        return (order.term_key(self.w), CASES.index(self.case), refs)


def _suffix(short: Word, long: Word) -> Word | None:
    """``lam`` with ``lam + short == long`` or None."""
    if len(short) <= len(long) and long[len(long) - len(short):] == short:
        return long[: len(long) - len(short)]
    return None


def _prefix(short: Word, long: Word) -> Word | None:
    """``rho`` with ``short + rho == long`` or None."""
    if len(short) <= len(long) and long[: len(short)] == short:
        return long[len(short):]
    return None


def _pairs_ff(p: Presentation, leads: Sequence[LeadInfo], i: int, j: int) -> SyzGen | None:
    """Syzygy between F-elements i and j (requires omega_i | omega_j on the left)."""
    a, b = leads[i], leads[j]
    if a.pos != b.pos:
        return None
    rho = _prefix(a.omega, b.omega)
    if rho is None or not p.in_order_module(rho):
        return None
    if not rho and i > j:
        return None  # equal omegas: take each unordered pair once
    dom = p.domain
    L = dom.lcm(a.gamma, b.gamma)
    c1, c2 = dom.quo(L, a.gamma), dom.quo(L, b.gamma)
    lam = _suffix(a.upsilon, b.upsilon)
    if lam is not None:
        if lam and p.classify_term(lam).kind == "L":
            return None
        return SyzGen(Leg("F", j, c2, (), ()), Leg("F", i, c1, lam, rho), (b.upsilon + b.omega, a.pos), "B.3")
    lam = _suffix(b.upsilon, a.upsilon)
    if lam is not None:
        if lam and p.classify_term(lam).kind == "L":
            return None
        return SyzGen(Leg("F", j, c2, lam, ()), Leg("F", i, c1, (), rho), (a.upsilon + b.omega, a.pos), "B.1")
    return None


def _pairs_fh(p: Presentation, leads, hleads, i: int, k: int) -> list[SyzGen]:
    g, h = leads[i], hleads[k]
    if g.pos != h.pos:
        return []
    dom = p.domain
    L = dom.lcm(g.gamma, h.gamma)
    c_h = dom.quo(L, h.gamma)
    c_g = dom.quo(L, g.gamma)
    out: list[SyzGen] = []

    def dead(lam: Word) -> bool:
        return bool(lam) and p.classify_term(lam).kind == "L"

    rho13 = _prefix(g.omega, h.omega)
    rho31 = _prefix(h.omega, g.omega)
    if rho13 is not None and p.in_order_module(rho13):
        lam = _suffix(h.upsilon, g.upsilon)
        if lam is not None and not dead(lam):
            out.append(SyzGen(Leg("H", k, c_h, lam, ()), Leg("F", i, c_g, (), rho13), (g.upsilon + h.omega, g.pos), "A.1"))
        lam = _suffix(g.upsilon, h.upsilon)
        if lam is not None and not dead(lam):
            out.append(SyzGen(Leg("H", k, c_h, (), ()), Leg("F", i, c_g, lam, rho13), (h.upsilon + h.omega, g.pos), "A.3"))
    if rho31 is not None and p.in_order_module(rho31):
        lam = _suffix(g.upsilon, h.upsilon)
        if lam is not None and not dead(lam):
            out.append(SyzGen(Leg("H", k, c_h, (), rho31), Leg("F", i, c_g, lam, ()), (h.upsilon + g.omega, g.pos), "A.2"))
        lam = _suffix(h.upsilon, g.upsilon)
        if lam is not None and not dead(lam):
            out.append(SyzGen(Leg("H", k, c_h, lam, rho31), Leg("F", i, c_g, (), ()), (g.upsilon + g.omega, g.pos), "A.4"))
    # several cases coincide when the words are equal; keep the first
    seen = set()
    uniq = []
    for s in out:
        sig = (s.w, s.left, s.right)
        if sig not in seen:
            seen.add(sig)
            uniq.append(s)
    return uniq


def spairs_restricted(F: GeneratorSet) -> list[SyzGen]:
    """Syzygy generators: F-F pairs with left-dividing omegas, plus F-relation pairs."""
    p = F.p
    out: list[SyzGen] = []
    n = len(F.elems)
    for i in range(n):
        for j in range(n):
            if i != j:
                s = _pairs_ff(p, F.leads, i, j)
                if s is not None:
                    out.append(s)
        for k in range(len(F.hpos)):
            out.extend(_pairs_fh(p, F.leads, F.hleads, i, k))
    out.sort(key=lambda s: s.sort_key(p.order))
    return out


def naive_pair_count(F: GeneratorSet) -> int:
    """Every same-position pair a plain Buchberger loop would consider."""
    n = 0
    leads = F.leads
    for i in range(len(leads)):
        for j in range(i + 1, len(leads)):
            if leads[i].pos == leads[j].pos:
                n += 1
        n += sum(1 for h in F.hleads if h.pos == leads[i].pos)
    return n


def pair_stats(F: GeneratorSet) -> dict[str, int]:
    return {"naive_pairs": naive_pair_count(F), "gm_size": len(spairs_restricted(F))}


def eval_leg(p: Presentation, leg: Leg, elems: Sequence[Poly], zero: Poly) -> Poly:
    if leg.kind == "H":
        return zero  # relations vanish in the quotient
    return multiple(p, elems[leg.index], leg.lam, leg.rho, leg.coeff)


def spoly(sigma: SyzGen, F: GeneratorSet | Sequence[Poly], p: Presentation | None = None) -> Poly:
    """Evaluate the syzygy generator on actual elements (left leg minus right leg)."""
    if isinstance(F, GeneratorSet):
        p, elems = F.p, F.elems
    else:
        elems = list(F)
        if p is None:
            raise ValueError("presentation required")
    zero = p.module_ring.zero()
    for leg in (sigma.left, sigma.right):
        if leg.kind == "F" and not 0 <= leg.index < len(elems):
            raise ValueError("syzygy leg refers to a missing generator")
    return eval_leg(p, sigma.left, elems, zero) - eval_leg(p, sigma.right, elems, zero)


# ----------------------------------------------------------------------------
# reduction

Quotient = tuple[Scalar, int, Word, Word]


class Reducer:
    """Indexed basis supporting restricted, left and bilateral division."""

    def __init__(self, p: Presentation, elems: Sequence[Poly] = ()):
        self.p = p
        self.elems: list[Poly] = []
        self.leads: list[LeadInfo] = []
        self._by_omega: dict[tuple[Word, int], list[int]] = {}
        for e in elems:
            self.add(e)

    def add(self, g: Poly) -> int:
        li = lead_info(self.p, g)
        k = len(self.elems)
        self.elems.append(g)
        self.leads.append(li)
        self._by_omega.setdefault((li.omega, li.pos), []).append(k)
        return k

    def divisors(self, term: Term, side: str) -> list[tuple[int, Word, Word]]:
        word, pos = term
        out = []
        if side == "restricted":
            A = self.p.alphabet
            ups, om = A.split(word)
            for k in range(len(om) + 1):
                rho = om[k:]
                if rho and not A.is_upper(rho[0]):
                    continue
                for idx in self._by_omega.get((om[:k], pos), ()):
                    lam = _suffix(self.leads[idx].upsilon, ups)
                    if lam is not None:
                        out.append((idx, lam, rho))
        elif side == "left":
            for idx, li in enumerate(self.leads):
                if li.pos == pos:
                    lam = _suffix(li.word, word)
                    if lam is not None:
                        out.append((idx, lam, ()))
        elif side == "bilateral":
            for idx, li in enumerate(self.leads):
                if li.pos != pos:
                    continue
                lw = li.word
                for i in range(len(word) - len(lw) + 1):
                    if word[i:i + len(lw)] == lw:
                        out.append((idx, word[:i], word[i + len(lw):]))
        else:
            raise ValueError(f"unknown side {side!r}")
        return out

    def reduce(self, f: Poly, mode: str = "strong", side: str = "restricted") -> tuple[Poly, list[Quotient], int]:
        """Full reduction of ``f``; returns (normal form, quotients, step count).

        ``f == sum(c * lam * elems[i] * rho) + nf`` over the quotients.
        In strong mode each remaining coefficient is the least non-negative
        residue modulo the gcd of the applicable leading coefficients; in weak
        mode a monomial is eliminated only when that gcd divides it.
        """
        if mode not in ("strong", "weak"):
            raise ValueError(f"unknown mode {mode!r}")
        p = self.p
        dom = p.domain
        tk = p.order.term_key
        work: dict[Term, Scalar] = dict(f.terms)
        heap = [_Desc(tk(t), t) for t in work]
        heapq.heapify(heap)
        out: dict[Term, Scalar] = {}
        quotients: list[Quotient] = []
        steps = 0

        def add(poly: Poly, coef: Scalar) -> None:
            for t, a in poly.terms.items():
                if t in work:
                    work[t] += coef * a
                else:
                    work[t] = coef * a
                    heapq.heappush(heap, _Desc(tk(t), t))

        while heap:
            t = heapq.heappop(heap).term
            c = work.pop(t, 0)
            if not c:
                continue
            ct = p.szekeres(t[0]) if p.basis else 0
            divs = []
            for idx, lam, rho in self.divisors(t, side):
                e = dom.canon_rem(self.leads[idx].gamma, ct)
                if e:
                    divs.append((idx, lam, rho, e))
            if not divs:
                out[t] = c
                continue
            g0, comb = dom.strong_ideal_basis([d[3] for d in divs])
            if mode == "weak" and not dom.divides(g0, c):
                out[t] = c
                continue
            r = dom.canon_rem(c, g0)
            q = dom.quo(c - r, g0)
            if not q:
                out[t] = c
                continue
            steps += 1
            work[t] = c
            for s, (idx, lam, rho, e) in zip(comb, divs):
                if not s:
                    continue
                m = multiple(p, self.elems[idx], lam, rho)
                if m.lt() != t:
                    raise AssertionError("reducer does not lead at the reduced term")
                add(m, -q * s)
                quotients.append((q * s, idx, lam, rho))
            left = work.pop(t, 0)
            if ct:
                r2 = dom.canon_rem(left, ct)
                extra = left - r2
                if extra:
                    add(p.canonical(Poly(f.ring, {t: extra})), 1)
                left = r2
            if left:
                out[t] = left
        return Poly(f.ring, out), quotients, steps


def normal_form(
    f: Poly,
    F: GeneratorSet | Sequence[Poly],
    mode: str = "strong",
    side: str = "restricted",
    p: Presentation | None = None,
) -> tuple[Poly, list[Quotient]]:
    """Normal form of ``f`` with respect to ``F`` by the requested division."""
    if isinstance(F, GeneratorSet):
        p, elems = F.p, F.elems
    else:
        elems = list(F)
        if p is None:
            raise ValueError("presentation required")
    f = p.canonical(f)
    nf, quotients, _ = Reducer(p, elems).reduce(f, mode, side)
    return nf, quotients


# ----------------------------------------------------------------------------
# completion


@dataclass
class LiftRecord:
    sigma: SyzGen
    quotients: list[Quotient]
    residual: Poly


@dataclass
class GBResult:
    basis: list[Poly]
    generators: list[Poly]
    status: str
    bound: Bound
    side: str
    stats: dict[str, int]
    lifts: list[LiftRecord]
    presentation: Presentation = field(repr=False)

    @property
    def complete(self) -> bool:
        return self.status == "Complete"

    def to_dict(self) -> dict:
        p = self.presentation
        ring = p.module_ring

        def leg(l: Leg) -> dict:
            return {
                "ref": f"{'g' if l.kind == 'F' else 'h'}{l.index}",
                "coeff": str(l.coeff),
                "lam": p.alphabet.word_str(l.lam),
                "rho": p.alphabet.word_str(l.rho),
            }

        bound = self.bound if isinstance(self.bound, int) else format_term(ring, self.bound)
        return {
            "status": self.status,
            "side": self.side,
            "bound": bound,
            "basis": [format_poly(g) for g in self.basis],
            "generators": [format_poly(g) for g in self.generators],
            "stats": dict(sorted(self.stats.items())),
            "lifts": [
                {
                    "case": r.sigma.case,
                    "w": format_term(ring, r.sigma.w),
                    "left": leg(r.sigma.left),
                    "right": leg(r.sigma.right),
                    "quotients": [
                        {"coeff": str(c), "ref": f"g{i}", "lam": p.alphabet.word_str(l), "rho": p.alphabet.word_str(r_)}
                        for c, i, l, r_ in r.quotients
                    ],
                }
                for r in self.lifts
            ],
        }


def _admits(p: Presentation, bound: Bound, term: Term) -> bool:
    if isinstance(bound, int):
        return len(term[0]) <= bound
    return p.order.term_key(term) <= p.order.term_key(bound)


def _check_bound(bound: Bound) -> None:
    if isinstance(bound, bool):
        raise BoundError("bound must be a degree or a term")
    if isinstance(bound, int):
        if bound < 0:
            raise BoundError("degree bound must be nonnegative")
        return
    if not (isinstance(bound, tuple) and len(bound) == 2 and isinstance(bound[0], tuple)):
        raise BoundError("bound must be a degree or a term")


class Completion:
    """Restartable completion state; ``run`` processes everything admitted by a bound."""

    def __init__(self, F: GeneratorSet, side: str = "restricted"):
        if side not in ("restricted", "bilateral"):
            raise ValueError(f"unknown side {side!r}")
        self.F = F
        self.p = F.p
        self.side = side
        self.red = Reducer(self.p)
        self.hpos = F.hpos
        self.hleads = F.hleads
        self.queue: list[tuple[tuple, int, SyzGen]] = []
        self.deferred: list[SyzGen] = []
        self.lifts: list[LiftRecord] = []
        self.tests_done: set = set()
        self.tests_skipped = False
        self._seq = itertools.count()
        self.stats = {"pairs_processed": 0, "reductions": 0, "gm_size": 0, "naive_pairs": 0, "tests": 0}
        self.bound: Bound = 0
        for g in F.elems:
            self._add(self._normalize(g))

    # ----- bookkeeping ------------------------------------------------------
    def _normalize(self, g: Poly) -> Poly:
        u = self.p.domain.normalize_sign(g.lc())
        return g if u == 1 else self.p.canonical(g.scale(u))

    def _push(self, s: SyzGen) -> None:
        heapq.heappush(self.queue, (s.sort_key(self.p.order), next(self._seq), s))

    def _add(self, g: Poly) -> int:
        k = self.red.add(g)
        leads = self.red.leads
        for i in range(k):
            if leads[i].pos == leads[k].pos:
                self.stats["naive_pairs"] += 1
            for a, b in ((i, k), (k, i)):
                s = _pairs_ff(self.p, leads, a, b)
                if s is not None:
                    self._push(s)
                    self.stats["gm_size"] += 1
        for h in range(len(self.hpos)):
            if self.hleads[h].pos == leads[k].pos:
                self.stats["naive_pairs"] += 1
            for s in _pairs_fh(self.p, leads, self.hleads, k, h):
                self._push(s)
                self.stats["gm_size"] += 1
        return k

    def _absorb(self, f: Poly) -> tuple[list[Quotient], Poly]:
        """Reduce ``f``; adjoin a nonzero remainder. Returns quotients covering f exactly."""
        nf, quotients, steps = self.red.reduce(f)
        self.stats["reductions"] += steps
        if nf:
            u = self.p.domain.normalize_sign(nf.lc())
            g = self._normalize(nf)
            k = self._add(g)
            # nf = (1/u) * g
            inv = 1 / u if self.p.domain.field else u
            quotients = quotients + [(inv, k, (), ())]
        return quotients, nf

    # ----- main loop ---------------------------------------------------------
    def run(self, bound: Bound) -> "GBResult":
        _check_bound(bound)
        self.bound = bound
        for s in self.deferred:
            self._push(s)
        self.deferred = []
        self.tests_skipped = False
        while True:
            self._process_pairs(bound)
            if self.side != "bilateral" or not self._bilateral_tests(bound):
                break
        return self.snapshot()

    def _process_pairs(self, bound: Bound) -> None:
        zero = self.p.module_ring.zero()
        while self.queue:
            _, _, s = heapq.heappop(self.queue)
            if not _admits(self.p, bound, s.w):
                self.deferred.append(s)
                continue
            sp = eval_leg(self.p, s.left, self.red.elems, zero) - eval_leg(self.p, s.right, self.red.elems, zero)
            self.stats["pairs_processed"] += 1
            quotients, _ = self._absorb(sp)
            self.lifts.append(LiftRecord(s, quotients, zero))

    def _uppercase_words_below(self, omega: Term) -> list[Word]:
        A = self.p.alphabet
        order = self.p.order
        top = sum(1 for a in omega[0] if A.is_upper(a))
        limit = order.key(omega[0])
        out = []
        for n in range(top + 1):
            for w in itertools.product(A.V_letters(), repeat=n):
                if order.key(w) < limit:
                    out.append(w)
        if len(out) > 100000:
            raise NonSequentialOrder("too many uppercase words below the largest leading term")
        return out

    def _bilateral_tests(self, bound: Bound) -> bool:
        """Run the closure tests once over the current basis; True if something was adjoined."""
        p = self.p
        A = p.alphabet
        added = False
        n = len(self.red.elems)
        if n == 0:
            return False
        omega = max((li.term for li in self.red.leads), key=p.order.term_key)
        rhos = [r for r in self._uppercase_words_below(omega) if p.in_order_module(r)]
        consts = {}
        for k in range(n):
            g = self.red.elems[k]
            li = self.red.leads[k]
            for X in A.V_letters():
                key = ("V", k, X)
                if key in self.tests_done:
                    continue
                if not _admits(p, bound, ((X,) + li.word, li.pos)):
                    self.tests_skipped = True
                    continue
                self.tests_done.add(key)
                self.stats["tests"] += 1
                _, nf = self._absorb(multiple(p, g, (X,), ()))
                added = added or bool(nf)
            for rho in rhos:
                for j in A.v_letters():
                    if (rho, j) not in consts:
                        consts[(rho, j)] = [a for a, _ in p.structure_constants(rho, j)]
                    for a in consts[(rho, j)]:
                        if a == p.ring.one():
                            continue
                        key = ("v", k, a)
                        if key in self.tests_done:
                            continue
                        if not _admits(p, bound, (li.word + a.lt()[0], li.pos)):
                            self.tests_skipped = True
                            continue
                        self.tests_done.add(key)
                        self.stats["tests"] += 1
                        prod = p.canonical(_times_ring(g, a))
                        _, nf = self._absorb(prod)
                        added = added or bool(nf)
        return added

    # ----- results -------------------------------------------------------------
    def status(self) -> str:
        if self.deferred or self.queue or self.tests_skipped:
            return "BoundExhausted"
        return "Complete"

    def snapshot(self) -> GBResult:
        gens = list(self.red.elems)
        basis = self.minimal_bilateral() if self.side == "bilateral" else gens
        return GBResult(
            basis=basis,
            generators=gens,
            status=self.status(),
            bound=self.bound,
            side=self.side,
            stats=dict(self.stats),
            lifts=list(self.lifts),
            presentation=self.p,
        )

    def minimal_bilateral(self) -> list[Poly]:
        """Drop elements whose leading monomial is a two-sided multiple of another's; reduce tails."""
        p = self.p
        dom = p.domain
        leads = self.red.leads
        order = sorted(range(len(leads)), key=lambda i: (p.order.term_key(leads[i].term), abs(leads[i].gamma), i))
        kept: list[int] = []
        for i in order:
            wi = leads[i].word
            redundant = False
            for k in kept:
                if leads[k].pos != leads[i].pos or not dom.divides(leads[k].gamma, leads[i].gamma):
                    continue
                wk = leads[k].word
                if any(wi[s:s + len(wk)] == wk for s in range(len(wi) - len(wk) + 1)):
                    redundant = True
                    break
            if not redundant:
                kept.append(i)
        out = []
        for i in sorted(kept, key=lambda i: p.order.term_key(leads[i].term), reverse=True):
            g = self.red.elems[i]
            head = g.lm()
            t_nf, _, _ = self.red.reduce(g - head)
            out.append(head + t_nf)
        return out


def _times_ring(g: Poly, a: Poly) -> Poly:
    """Free product ``g * a`` for a ring element ``a`` (keeps g's positions)."""
    d: dict[Term, Scalar] = {}
    for (w1, pos), c1 in g.terms.items():
        for (w2, _), c2 in a.terms.items():
            t = (w1 + w2, pos)
            d[t] = d.get(t, 0) + c1 * c2
    return Poly(g.ring, d)


def restricted_completion(F: GeneratorSet, bound: Bound) -> GBResult:
    return Completion(F, "restricted").run(bound)


def bilateral_completion(F: GeneratorSet, bound: Bound) -> GBResult:
    return Completion(F, "bilateral").run(bound)


def enumerate_bases(F: GeneratorSet, term_stream: Iterable[Bound], side: str = "restricted") -> Iterator[GBResult]:
    """Run the completion along an increasing bound stream, yielding a snapshot per bound.

    Stops after the first Complete snapshot.
    """
    comp = Completion(F, side)
    prev: Bound | None = None
    for b in term_stream:
        _check_bound(b)
        if prev is not None:
            if isinstance(b, int) != isinstance(prev, int):
                raise BoundError("bound stream mixes degrees and terms")
            if isinstance(b, int):
                if b <= prev:
                    raise BoundError("bound stream must be strictly increasing")
            elif F.p.order.term_key(b) <= F.p.order.term_key(prev):
                raise BoundError("bound stream must be strictly increasing")
        prev = b
        snap = comp.run(b)
        yield snap
        if snap.complete:
            return


@dataclass
class Membership:
    verdict: str
    quotients: list[Quotient]
    normal_form: Poly
    result: GBResult


def member(g: Poly, F: GeneratorSet, budget: int | None = None, side: str = "restricted") -> Membership:
    """Semi-decision of ``g`` in the module spanned by F within a degree budget.

    Yes comes with quotients over ``result.generators``; No needs a complete basis.
    """
    p = F.p
    g = p.canonical(g)
    if budget is None:
        budget = max([g.degree()] + [e.degree() for e in F.elems]) + 2
    res = Completion(F, side).run(budget)
    nf, quotients, _ = Reducer(p, res.generators).reduce(g)
    if not nf:
        return Membership("Yes", quotients, nf, res)
    if res.complete:
        return Membership("No", quotients, nf, res)
    return Membership("Unknown", quotients, nf, res)


def syzygy_liftings(result: GBResult) -> list[LiftRecord]:
    if not result.complete:
        raise IncompleteResult("liftings need a complete basis")
    return list(result.lifts)


def lift_value(rec: LiftRecord, result: GBResult) -> Poly:
    """Evaluate the lifted syzygy: S-polynomial minus its recorded representation."""
    p = result.presentation
    zero = p.module_ring.zero()
    elems = result.generators
    v = eval_leg(p, rec.sigma.left, elems, zero) - eval_leg(p, rec.sigma.right, elems, zero)
    for c, i, lam, rho in rec.quotients:
        v = v - multiple(p, elems[i], lam, rho, c)
    return p.canonical(v)


def lift_leading_ok(rec: LiftRecord, result: GBResult) -> bool:
    """The correction terms sit strictly below the syzygy's valuation, and the legs meet at it."""
    p = result.presentation
    tk = p.order.term_key
    leads = [lead_info(p, g) for g in result.generators]
    hleads = GeneratorSet(p).hleads
    if rec.sigma.left.term(leads, hleads) != rec.sigma.w or rec.sigma.right.term(leads, hleads) != rec.sigma.w:
        return False
    wk = tk(rec.sigma.w)
    for _, i, lam, rho in rec.quotients:
        if tk((lam + leads[i].word + rho, leads[i].pos)) >= wk:
            return False
    return True


__all__ = [
    "BoundError",
    "Completion",
    "GBResult",
    "GeneratorSet",
    "IncompleteResult",
    "LeadInfo",
    "Leg",
    "LiftRecord",
    "Membership",
    "NonSequentialOrder",
    "Reducer",
    "SaturationInsufficient",
    "SyzGen",
    "bilateral_completion",
    "enumerate_bases",
    "lift_leading_ok",
    "lift_value",
    "member",
    "normal_form",
    "pair_stats",
    "restricted_completion",
    "spairs_restricted",
    "spoly",
    "syzygy_liftings",
]
