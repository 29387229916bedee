"""Strong restricted bases over the integers from a restricted Gröbner basis.

For each element ``g`` collect the elements ``h`` whose uppercase part is a
left prefix of ``g``'s (``omega_h * t = omega_g``). A Bezout combination of
their leading coefficients, applied to the multiples ``h * t``, gives an
element at the same term whose leading coefficient generates the ideal of all
those coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import multiple
from .coeff import Scalar
from .engine import GBResult, GeneratorSet, _suffix, lead_info
from .freering import Poly, Word


class NonScalarLeadingCoefficient(ValueError):
    """A leading coefficient involves lowercase letters; only scalar ones are supported."""


@dataclass(frozen=True)
class Divisor:
    kind: str  # "F" for a basis element, "H" for a ring relation
    index: int
    cofactor: Word
    lc: Scalar


@dataclass
class StrongEntry:
    g: int
    divisors: list[Divisor]
    gcd: Scalar
    combination: list[Scalar]
    element: Poly


@dataclass
class StrongExtraction:
    entries: list[StrongEntry]
    basis: list[Poly]


def _prefix(short: Word, long: Word) -> Word | None:
    if len(short) <= len(long) and long[: len(short)] == short:
        return long[len(short):]
    return None


def strong_extraction(F: GeneratorSet | GBResult) -> StrongExtraction:
    if isinstance(F, GBResult):
        if not F.complete:
            raise ValueError("strong extraction needs a complete restricted basis")
        F = GeneratorSet(F.presentation, F.generators)
    p = F.p
    dom = p.domain
    A = p.alphabet
    leads = F.leads
    for g, li in zip(F.elems, leads):
        if li.upsilon:
            raise NonScalarLeadingCoefficient(
                f"leading coefficient of {g} carries the lowercase word {A.word_str(li.upsilon)}"
            )
    entries: list[StrongEntry] = []
    seen: dict[Poly, None] = {}
    for gi, lg in enumerate(leads):
        divs: list[Divisor] = []
        for hi, lh in enumerate(leads):
            if lh.pos != lg.pos:
                continue
            t = _prefix(lh.omega, lg.omega)
            if t is not None and A.starts_upper(t):
                divs.append(Divisor("F", hi, t, lh.gamma))
        # relations take part in discovery only; their images vanish
        for ki, lh in enumerate(F.hleads):
            if lh.pos != lg.pos:
                continue
            t = _prefix(lh.omega, lg.omega)
            if t is not None and A.starts_upper(t):
                divs.append(Divisor("H", ki, t, lh.gamma))
        members = [d for d in divs if d.kind == "F"]
        g0, comb = dom.strong_ideal_basis([d.lc for d in members])
        elem = p.module_ring.zero()
        for s, d in zip(comb, members):
            if s:
                elem = elem + multiple(p, F.elems[d.index], (), d.cofactor, s)
        entries.append(StrongEntry(gi, divs, g0, comb, elem))
        if elem:
            seen.setdefault(elem, None)
    tk = p.order.term_key
    basis = sorted(seen, key=lambda f: (tk(f.lt()), f.lc()), reverse=True)
    return StrongExtraction(entries, basis)


def strong_restricted_basis(F: GeneratorSet | GBResult) -> GeneratorSet:
    ex = strong_extraction(F)
    p = F.presentation if isinstance(F, GBResult) else F.p
    return GeneratorSet(p, ex.basis)


def strongly_divides(p, g: Poly, m: Poly) -> bool:
    """True when some restricted multiple of ``g`` has the leading monomial of ``m``."""
    lg, lm = lead_info(p, g), lead_info(p, m)
    if lg.pos != lm.pos:
        return False
    rho = _prefix(lg.omega, lm.omega)
    if rho is None or not p.alphabet.starts_upper(rho):
        return False
    if _suffix(lg.upsilon, lm.upsilon) is None:
        return False
    return p.domain.divides(lg.gamma, lm.gamma)
