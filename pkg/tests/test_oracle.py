from fractions import Fraction

import pytest

from conftest import P
from wgb.oracle import Lattice, OracleBoundError, oracle_member


def test_examples(comm):
    F = [P(comm, "2*X"), P(comm, "3*Y")]
    assert oracle_member(P(comm, "X*Y"), F, comm, "restricted", 2) == "Yes"
    for b in (1, 2, 3, 4):
        assert oracle_member(P(comm, "X"), F, comm, "restricted", b) == "NoWithinBound"
    assert oracle_member(comm.module_ring.zero(), F, comm) == "Yes"


def test_bound_too_small(comm):
    with pytest.raises(OracleBoundError):
        oracle_member(P(comm, "X*Y"), [P(comm, "X")], comm, "restricted", 1)


def test_monotone(comm):
    F = [P(comm, "2*X"), P(comm, "3*Y")]
    assert oracle_member(P(comm, "X*Y"), F[:1], comm, "restricted", 2) == "NoWithinBound"
    for b in (3, 4, 5):
        assert oracle_member(P(comm, "X*Y*Y"), F, comm, "restricted", b) == "Yes"


def test_large_coefficient_cancellation():
    # rows (10^20+1, 1) and (10^20, 1): their difference is (1, 0); floats lose it
    big = 10**20
    lat = Lattice()
    lat.insert({0: big + 1, 1: 1})
    lat.insert({0: big, 1: 1})
    assert lat.contains({0: 1})
    assert float(big + 1) - float(big) == 0.0
    assert lat.contains({1: 1})


def test_integer_vs_rational():
    lat = Lattice()
    lat.insert({0: 2, 1: 4})
    assert not lat.contains({0: 1, 1: 2})
    assert lat.contains({0: -6, 1: -12})
    q = Lattice(exact_division=True)
    q.insert({0: 2, 1: 4})
    assert q.contains({0: Fraction(1), 1: Fraction(2)})


def test_bilateral_side(wex_free):
    free, rels = wex_free
    t = free.ring.parse("x1*x2*X1")
    assert oracle_member(t, rels, free, "bilateral", 4) == "Yes"
    # X1 (x2 x1) - (X1 x2 - x1 X1) x1 - x1 (X1 x1 - x2 X1) = x1 x2 X1
    assert oracle_member(t, rels, free, "bilateral", 3) == "Yes"
    assert oracle_member(free.ring.parse("x1*X1"), rels, free, "bilateral", 4) == "NoWithinBound"
