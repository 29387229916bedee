"""Random small instances shared by the acceptance and property tests.

The membership pool only uses rings whose relations are commutation rules
(or none): on those the restricted pair set is complete. The syzygy pool adds
the commutator ring, judged in the framework whose legs include the lifted
relations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from wgb.algebra import diamond_mul
from wgb.coeff import bezout
from wgb.engine import GeneratorSet, member, restricted_completion, spairs_restricted
from wgb.freering import Alphabet, Poly
from wgb.oracle import Lattice, oracle_member
from wgb.presentation import Presentation, make_presentation


def membership_pool() -> list[tuple[str, Presentation]]:
    pool = [
        ("free-XY", Presentation.free(Alphabet((), ("X", "Y")))),
        ("free-x-X", Presentation.free(Alphabet(("x1",), ("X1",)))),
        ("free-xx-X", Presentation.free(Alphabet(("x1", "x2"), ("X1",)))),
        ("free-x-XX", Presentation.free(Alphabet(("x1",), ("X1", "X2")))),
        ("ore", make_presentation(["x1"], ["X1"], C=["X1*x1 - x1*X1"])),
        ("weyl", make_presentation(["x1"], ["X1"], C=["X1*x1 - x1*X1 - 1"])),
        ("skew", make_presentation(["x1", "x2"], ["X1"], C=["X1*x1 - x2*X1", "X1*x2 - x1*X1"])),
    ]
    out = []
    for name, p in pool:
        p = p.saturate(6)
        assert p.complete, name
        out.append((name, p))
    return out


def syzygy_pool() -> list[tuple[str, Presentation]]:
    comm = make_presentation([], ["X", "Y"], H=["Y*X - X*Y"]).saturate(4)
    assert comm.complete
    return membership_pool() + [("commutator", comm)]


def canonical_words(p: Presentation, degree: int) -> list[tuple[int, ...]]:
    out = []
    for w in itertools.product(range(p.alphabet.size), repeat=degree):
        if p.is_canonical(p.ring.monomial(1, w)):
            out.append(w)
    return out


def random_homogeneous(p: Presentation, rng: random.Random, degree: int, nterms: int = 2) -> Poly:
    """Nonzero canonical element whose terms all have the given total degree."""
    words = canonical_words(p, degree)
    while True:
        d = {}
        for _ in range(rng.randint(1, nterms)):
            c = rng.randint(-5, 5)
            if c:
                d[(rng.choice(words), 0)] = c
        f = p.canonical(p.ring.poly(d))
        if f:
            return f


def random_restricted_combination(p: Presentation, gens, rng: random.Random, max_degree: int) -> Poly:
    """Sum of (c * lam * rho) <> g over random generators, kept within a degree."""
    A = p.alphabet
    f = p.ring.zero()
    for _ in range(rng.randint(1, 3)):
        g = rng.choice(gens)
        room = max_degree - g.degree()
        if room < 0:
            continue
        lam = tuple(rng.choice(list(A.v_letters())) for _ in range(rng.randint(0, room))) if A.nv else ()
        room -= len(lam)
        rho = ()
        if A.V and room > 0:
            rho = tuple(rng.choice(list(A.V_letters())) for _ in range(rng.randint(0, room)))
        a = p.ring.monomial(rng.randint(-5, 5) or 1, lam + rho)
        f = f + diamond_mul(p, a, g)
    return f


@dataclass
class MembershipCase:
    name: str
    p: Presentation
    gens: list
    bound: int
    target: Poly
    engine: str
    oracle: str
    result: object


def membership_cases(seed: int, wanted: int = 50, bound: int = 4) -> list[MembershipCase]:
    """Random instances with a decided engine verdict (Yes or No), each checked by the oracle."""
    rng = random.Random(seed)
    pool = membership_pool()
    cases: list[MembershipCase] = []
    attempts = 0
    while len(cases) < wanted:
        attempts += 1
        assert attempts < 40 * wanted, "too few decided instances"
        name, p = pool[attempts % len(pool)]
        gens = [random_homogeneous(p, rng, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        if rng.random() < 0.5:
            target = random_restricted_combination(p, gens, rng, bound)
        else:
            target = random_homogeneous(p, rng, rng.randint(1, bound), 3)
        target = p.canonical(target)
        if not target or target.degree() > bound:
            continue
        m = member(target, GeneratorSet(p, gens), bound)
        if m.verdict == "Unknown":
            continue
        verdict = oracle_member(target, gens, p, "restricted", bound)
        cases.append(MembershipCase(name, p, gens, bound, target, m.verdict, verdict, m.result))
    return cases


# ----------------------------------------------------------------------------
# syzygies of leading monomials


def _legs_at(p: Presentation, F: GeneratorSet, w, max_degree: int):
    """Every (kind, index, lam, rho) whose leading word times the cofactors spells w."""
    A = p.alphabet
    word, pos = w
    legs = []
    refs = [("F", i, li) for i, li in enumerate(F.leads)] + [("H", k, li) for k, li in enumerate(F.hleads)]
    for kind, idx, li in refs:
        if li.pos != pos:
            continue
        t = li.word
        for s in range(len(word) - len(t) + 1):
            if word[s:s + len(t)] != t:
                continue
            lam, rho = word[:s], word[s + len(t):]
            if not A.is_v_word(lam):
                continue
            if rho and not (A.is_upper(rho[0]) and p.is_canonical(p.ring.monomial(1, rho))):
                continue
            if lam and p.classify_term(lam).kind == "L":
                continue
            legs.append((kind, idx, lam, rho, li.gamma))
    return legs


def _kernel_basis(values: list[int]) -> list[list[int]]:
    """Integer basis of {c : sum c_i v_i = 0} by unimodular column operations."""
    n = len(values)
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns are U[.][j]
    v = list(values)
    for i in range(1, n):
        a, b = v[0], v[i]
        if b == 0:
            continue
        if a == 0:
            for row in U:
                row[0], row[i] = row[i], row[0]
            v[0], v[i] = b, 0
            continue
        g, s, t = bezout(a, b)
        for row in U:
            c0, ci = row[0], row[i]
            row[0], row[i] = s * c0 + t * ci, (a // g) * ci - (b // g) * c0
        v[0], v[i] = g, 0
    start = 1 if v[0] != 0 else 0
    return [[U[r][j] for r in range(n)] for j in range(start, n)]


def gm_kernel_check(p: Presentation, F: GeneratorSet, max_degree: int, gm=None) -> tuple[int, int]:
    """Check the leading-monomial syzygy kernel at every valuation up to a degree.

    ``gm`` defaults to the restricted pair set of F. Returns (valuations checked, failures).
    """
    A = p.alphabet
    if gm is None:
        gm = spairs_restricted(F)
    positions = sorted({li.pos for li in F.leads})
    checked = failures = 0
    for pos in positions:
        for n in range(1, max_degree + 1):
            for word in itertools.product(range(A.size), repeat=n):
                w = (word, pos)
                legs = _legs_at(p, F, w, max_degree)
                if len(legs) < 2:
                    continue
                checked += 1
                index = {leg[:4]: k for k, leg in enumerate(legs)}
                kernel = _kernel_basis([leg[4] for leg in legs])
                span = Lattice()
                for s in gm:
                    sw = s.w[0]
                    for cut in range(len(word) - len(sw) + 1):
                        if word[cut:cut + len(sw)] != sw:
                            continue
                        lam2, rho2 = word[:cut], word[cut + len(sw):]
                        if not A.is_v_word(lam2):
                            continue
                        vec = {}
                        ok = True
                        for leg, sign in ((s.left, 1), (s.right, -1)):
                            key = (leg.kind, leg.index, lam2 + leg.lam, leg.rho + rho2)
                            if key not in index:
                                ok = False  # the translated leg leaves the order module
                                break
                            vec[index[key]] = vec.get(index[key], 0) + sign * leg.coeff
                        if ok and sum(c * legs[k][4] for k, c in vec.items()) == 0:
                            span.insert(vec)
                for kv in kernel:
                    if not span.contains({k: c for k, c in enumerate(kv) if c}):
                        failures += 1
                        break
    return checked, failures


def random_syzygy_instance(rng: random.Random, pool):
    name, p = rng.choice(pool)
    gens = []
    for _ in range(rng.randint(2, 3)):
        d = rng.randint(1, 3)
        words = canonical_words(p, d)
        gens.append(p.ring.monomial(rng.choice([1, 2, 3, 4, 6, -2]), rng.choice(words)))
    return name, p, GeneratorSet(p, gens)


__all__ = [
    "MembershipCase",
    "gm_kernel_check",
    "membership_cases",
    "membership_pool",
    "random_homogeneous",
    "random_restricted_combination",
    "random_syzygy_instance",
    "restricted_completion",
    "syzygy_pool",
]
