"""Coefficient arithmetic over the integers (default) or the rationals.

Canonical remainders use the least non-negative residue, so every
normal form produced downstream is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


class CoefficientError(ValueError):
    """Raised on inputs outside an operation's domain (e.g. gcd of zeros)."""


def canon_rem(c: Scalar, m: Scalar, field: bool = False) -> Scalar:
    """Representative of ``c`` modulo the ideal ``(m)``.

    Over the integers this is the residue in ``0 <= r < |m|``; a zero
    modulus leaves ``c`` unchanged. Over a field every nonzero ideal is the
    whole ring, so the representative is 0.
    """
    if m == 0:
        return c
    if field:
        return 0
    return c % abs(m)


def bezout(a: Scalar, b: Scalar, field: bool = False) -> tuple[Scalar, Scalar, Scalar]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` the normalized gcd."""
    if a == 0 and b == 0:
        raise CoefficientError("bezout of two zeros is undefined")
    if field:
        if a != 0:
            return 1, Fraction(1) / a, 0
        return 1, 0, Fraction(1) / b
    a, b = int(a), int(b)
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def strong_ideal_basis(gens: Sequence[Scalar], field: bool = False) -> tuple[Scalar, list[Scalar]]:
    """Single generator of the ideal spanned by ``gens`` and the combination producing it.

    A generator that is already the gcd (up to sign) is used directly, so
    ``[2, 1]`` gives ``(1, [0, 1])`` rather than some longer combination.
    """
    gens = list(gens)
    if not gens:
        raise CoefficientError("empty generator list")
    if all(g == 0 for g in gens):
        raise CoefficientError("ideal generated by zeros has no strong basis")
    if field:
        i = next(k for k, g in enumerate(gens) if g != 0)
        comb: list[Scalar] = [0] * len(gens)
        comb[i] = Fraction(1) / gens[i]
        return 1, comb
    g = 0
    comb = [0] * len(gens)
    for i, a in enumerate(gens):
        if a == 0:
            continue
        if g == 0:
            g, s, t = bezout(a, 0)
            comb[i] = s
            continue
        g2, s, t = bezout(g, a)
        if s != 1 or t != 0:
            comb = [s * x for x in comb]
            comb[i] = t
        g = g2
    # prefer a single generator when one already equals the gcd
    for i, a in enumerate(gens):
        if a != 0 and abs(a) == g:
            comb = [0] * len(gens)
            comb[i] = 1 if a > 0 else -1
            break
    return g, comb


def gcd(a: Scalar, b: Scalar, field: bool = False) -> Scalar:
    if a == 0 and b == 0:
        return 0
    return bezout(a, b, field)[0]


def lcm(a: Scalar, b: Scalar, field: bool = False) -> Scalar:
    if a == 0 or b == 0:
        return 0
    if field:
        return 1
    return abs(a * b) // gcd(a, b)


def divides(a: Scalar, b: Scalar, field: bool = False) -> bool:
    """True when ``a | b`` in the coefficient domain."""
    if a == 0:
        return b == 0
    if field:
        return True
    return b % a == 0


def is_unit(a: Scalar, field: bool = False) -> bool:
    if field:
        return a != 0
    return a in (1, -1)


@dataclass(frozen=True)
class Domain:
    """Coefficient domain selector: ``int`` (the integers) or ``rat`` (the rationals)."""

    mode: str = "int"

    def __post_init__(self) -> None:
        if self.mode not in ("int", "rat"):
            raise CoefficientError(f"unknown coefficient mode {self.mode!r}")

    @property
    def field(self) -> bool:
        return self.mode == "rat"

    def coerce(self, c: Scalar) -> Scalar:
        if self.field:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise CoefficientError(f"rational coefficient {c} in integer mode")
            return c.numerator
        return int(c)

    def canon_rem(self, c: Scalar, m: Scalar) -> Scalar:
        return canon_rem(c, m, self.field)

    def bezout(self, a: Scalar, b: Scalar):
        return bezout(a, b, self.field)

    def strong_ideal_basis(self, gens: Sequence[Scalar]):
        return strong_ideal_basis(gens, self.field)

    def gcd(self, a: Scalar, b: Scalar) -> Scalar:
        return gcd(a, b, self.field)

    def lcm(self, a: Scalar, b: Scalar) -> Scalar:
        return lcm(a, b, self.field)

    def divides(self, a: Scalar, b: Scalar) -> bool:
        return divides(a, b, self.field)

    def quo(self, a: Scalar, b: Scalar) -> Scalar:
        """Exact quotient ``a / b`` (caller guarantees divisibility)."""
        if self.field:
            return Fraction(a) / b
        q, r = divmod(a, b)
        if r:
            raise CoefficientError(f"{b} does not divide {a}")
        return q

    def is_unit(self, a: Scalar) -> bool:
        return is_unit(a, self.field)

    def normalize_sign(self, c: Scalar) -> Scalar:
        """Unit making ``c`` canonical: 1/c over a field, the sign of c over the integers."""
        if self.field:
            return Fraction(1) / c
        return -1 if c < 0 else 1
