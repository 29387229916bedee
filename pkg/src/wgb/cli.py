"""``wgb`` command-line front end.

Exit codes: 0 success or verdict, 2 bound exhausted (or Unknown), 1 error,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import engine, oracle, strongbasis
from .algebra import multiple
from .coeff import CoefficientError
from .freering import ParseError, Poly, format_poly, format_term, parse
from .presentation import Presentation, SaturationInsufficient, load_presentation

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BOUND = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="wgb", description="Restricted and bilateral Gröbner bases over effectively given rings.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, bound_required=False, poly=False):
        sp.add_argument("file", help="presentation file")
        sp.add_argument("--bound", type=int, required=bound_required, help="degree bound: all terms of total degree <= BOUND")
        sp.add_argument("--sat-bound", type=int, help="saturation degree for the ring relations (default: the bound)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if poly:
            sp.add_argument("--poly", required=True, help="polynomial in the presentation's grammar")

    sp = sub.add_parser("validate", help="check a presentation and its order")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("saturate", help="complete the ring relations up to a degree")
    common(sp, bound_required=True)

    sp = sub.add_parser("nf", help="normal form of a polynomial")
    common(sp, poly=True)
    sp.add_argument("--side", choices=("restricted", "left", "bilateral"), default="restricted")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--strong", dest="mode", action="store_const", const="strong", help="strong reduction (default)")
    mode.add_argument("--weak", dest="mode", action="store_const", const="weak", help="weak reduction")
    sp.set_defaults(mode="strong")

    sp = sub.add_parser("gb", help="restricted or bilateral completion of the [ideal] generators")
    common(sp, bound_required=True)
    sp.add_argument("--side", choices=("restricted", "bilateral"), default="restricted")
    sp.add_argument("--strong", action="store_true", help="extract a strong restricted basis afterwards")

    for name, helptext in (("member", "membership by completion"), ("oracle-member", "membership by brute-force linear algebra")):
        sp = sub.add_parser(name, help=helptext)
        common(sp, poly=True)
        sp.add_argument("--side", choices=("restricted", "bilateral"), default="restricted")

    sp = sub.add_parser("syz", help="lifted syzygies of a complete restricted basis")
    common(sp, bound_required=True)

    sp = sub.add_parser("stats", help="pair statistics and a random round-trip check")
    common(sp, bound_required=True)
    sp.add_argument("--samples", type=int, default=0, help="random restricted combinations to reduce")
    sp.add_argument("--seed", type=int, default=0, help="random seed for --samples")
    return ap


# ----------------------------------------------------------------------------


def _load(path: str) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return load_presentation(fh.read())


def _prepare(args) -> Presentation:
    p = _load(args.file)
    bad = p.validate()
    if bad:
        raise ValueError("invalid presentation: " + "; ".join(str(v) for v in bad))
    sat = args.sat_bound if args.sat_bound is not None else args.bound
    if p.basis and not p.complete:
        if sat is None:
            sat = max([g.degree() for g in p.relations()] + [f.degree() for f in p.ideal] + [0]) + 2
        p = p.saturate(sat)
    return p


def _poly(p: Presentation, text: str) -> Poly:
    return p.canonical(parse(text, p.module_ring))


def _budget(args, p: Presentation, g: Poly | None = None) -> int:
    if args.bound is not None:
        return args.bound
    degs = [f.degree() for f in p.ideal] + ([g.degree()] if g is not None else [])
    return max(degs + [0]) + 2


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _quotient_lines(p: Presentation, gens: Sequence[Poly], quotients) -> list[str]:
    A = p.alphabet
    out = []
    for c, i, lam, rho in quotients:
        out.append(f"  {c} * {A.word_str(lam)} * [{format_poly(gens[i])}] * {A.word_str(rho)}")
    return out


def cmd_validate(args) -> int:
    p = _load(args.file)
    bad = p.validate()
    payload = {"ok": not bad, "violations": [{"kind": v.kind, "relation": v.relation, "detail": v.detail} for v in bad]}
    _emit(args, payload, ["OK"] if not bad else [f"{v.kind}: {v.relation}: {v.detail}" for v in bad])
    return EXIT_OK if not bad else EXIT_ERROR


def cmd_saturate(args) -> int:
    p = _load(args.file)
    bad = p.validate()
    if bad:
        raise ValueError("invalid presentation: " + "; ".join(str(v) for v in bad))
    s = p.saturate(args.bound)
    status = "Complete" if s.complete else "BoundExhausted"
    payload = {"status": status, "bound": args.bound, "basis": [format_poly(g) for g in s.basis]}
    _emit(args, payload, [f"status: {status}"] + [format_poly(g) for g in s.basis])
    return EXIT_OK if s.complete else EXIT_BOUND


def cmd_nf(args) -> int:
    p = _prepare(args)
    f = _poly(p, args.poly)
    if args.bound is None or args.side == "left":
        gens = list(engine.GeneratorSet(p, p.ideal).elems)
        nf, quotients = engine.normal_form(f, gens, args.mode, args.side, p=p)
        status = None
    else:
        # two-sided queries reduce against a bilaterally completed basis
        side = "bilateral" if args.side == "bilateral" else "restricted"
        res = engine.Completion(engine.GeneratorSet(p, p.ideal), side).run(args.bound)
        gens = res.generators
        nf, quotients = engine.normal_form(f, gens, args.mode, "restricted", p=p)
        status = res.status
    payload = {"nf": format_poly(nf), "status": status, "quotients": [
        {"coeff": str(c), "ref": format_poly(gens[i]), "lam": p.alphabet.word_str(l), "rho": p.alphabet.word_str(r)}
        for c, i, l, r in quotients
    ]}
    _emit(args, payload, [format_poly(nf)])
    return EXIT_OK


def cmd_gb(args) -> int:
    p = _prepare(args)
    F = engine.GeneratorSet(p, p.ideal)
    res = engine.Completion(F, args.side).run(args.bound)
    payload = res.to_dict()
    basis = res.basis
    if args.strong:
        if args.side != "restricted":
            raise ValueError("--strong applies to restricted completion")
        if not res.complete:
            raise engine.IncompleteResult("strong extraction needs a complete restricted basis")
        basis = strongbasis.strong_extraction(res).basis
        payload["strong_basis"] = [format_poly(g) for g in basis]
    _emit(args, payload, [f"status: {res.status}"] + [format_poly(g) for g in basis])
    return EXIT_OK if res.complete else EXIT_BOUND


def cmd_member(args) -> int:
    p = _prepare(args)
    g = _poly(p, args.poly)
    m = engine.member(g, engine.GeneratorSet(p, p.ideal), _budget(args, p, g), args.side)
    payload = {
        "verdict": m.verdict,
        "nf": format_poly(m.normal_form),
        "representation": [
            {"coeff": str(c), "ref": format_poly(m.result.generators[i]), "lam": p.alphabet.word_str(l), "rho": p.alphabet.word_str(r)}
            for c, i, l, r in m.quotients
        ] if m.verdict == "Yes" else [],
    }
    lines = [m.verdict]
    if m.verdict == "Yes":
        lines += _quotient_lines(p, m.result.generators, m.quotients)
    _emit(args, payload, lines)
    return EXIT_BOUND if m.verdict == "Unknown" else EXIT_OK


def cmd_oracle_member(args) -> int:
    p = _prepare(args)
    g = _poly(p, args.poly)
    verdict = oracle.oracle_member(g, list(p.ideal), p, args.side, _budget(args, p, g))
    _emit(args, {"verdict": verdict}, [verdict])
    return EXIT_OK


def cmd_syz(args) -> int:
    p = _prepare(args)
    res = engine.restricted_completion(engine.GeneratorSet(p, p.ideal), args.bound)
    if not res.complete:
        print(f"status: {res.status}; liftings need a complete basis", file=sys.stderr)
        return EXIT_BOUND
    lifts = engine.syzygy_liftings(res)
    payload = {"generators": [format_poly(g) for g in res.generators], "lifts": res.to_dict()["lifts"]}
    lines = []
    ring = p.module_ring
    for r in lifts:
        s = r.sigma
        lines.append(f"{s.case} at {format_term(ring, s.w)}: {s.left.kind}{s.left.index} / {s.right.kind}{s.right.index}")
        lines += _quotient_lines(p, res.generators, r.quotients)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_stats(args) -> int:
    p = _prepare(args)
    F = engine.GeneratorSet(p, p.ideal)
    before = engine.pair_stats(F)
    res = engine.restricted_completion(F, args.bound)
    after = engine.pair_stats(engine.GeneratorSet(p, res.generators))
    payload = {"input": before, "completed": after, "status": res.status, "run": res.stats}
    lines = [
        f"input: naive_pairs={before['naive_pairs']} gm_size={before['gm_size']}",
        f"completed ({res.status}): naive_pairs={after['naive_pairs']} gm_size={after['gm_size']}",
    ]
    if args.samples:
        failures = roundtrip(p, res.generators, args.samples, args.seed, args.bound)
        payload["roundtrip"] = {"samples": args.samples, "seed": args.seed, "failures": failures}
        lines.append(f"roundtrip: {args.samples - failures}/{args.samples} reduced to zero")
    _emit(args, payload, lines)
    return EXIT_OK if res.complete else EXIT_BOUND


def roundtrip(p: Presentation, gens: Sequence[Poly], samples: int, seed: int, bound: int) -> int:
    """Reduce random restricted combinations of ``gens``; return how many fail to vanish."""
    rng = random.Random(seed)
    A = p.alphabet
    failures = 0
    mode = "strong" if p.domain.field else "weak"
    for _ in range(samples):
        f = p.module_ring.zero()
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(list(gens))
            room = max(0, bound - g.degree())
            lam = tuple(rng.choice(list(A.v_letters())) for _ in range(rng.randint(0, room))) if A.nv else ()
            room -= len(lam)
            rho: tuple[int, ...] = ()
            if A.V and room > 0 and rng.random() < 0.7:
                rho = (rng.choice(list(A.V_letters())),) + tuple(rng.randrange(A.size) for _ in range(rng.randint(0, room - 1)))
                if not p.is_canonical(p.ring.monomial(1, rho)):
                    rho = ()
            f = f + multiple(p, g, lam, rho, rng.randint(-5, 5))
        nf, _ = engine.normal_form(f, gens, mode, "restricted", p=p)
        failures += bool(nf)
    return failures


COMMANDS = {
    "validate": cmd_validate,
    "saturate": cmd_saturate,
    "nf": cmd_nf,
    "gb": cmd_gb,
    "member": cmd_member,
    "oracle-member": cmd_oracle_member,
    "syz": cmd_syz,
    "stats": cmd_stats,
}


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ValueError, CoefficientError, SaturationInsufficient, RuntimeError, OSError) as exc:
        print(f"wgb: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
