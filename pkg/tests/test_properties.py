import random

from hypothesis import given, settings, strategies as st

from instances import gm_kernel_check, membership_pool, random_homogeneous, random_syzygy_instance, syzygy_pool
from wgb.engine import GeneratorSet, restricted_completion, spairs_restricted
from wgb.oracle import oracle_member

POOL = membership_pool()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_completion_adds_only_members(seed):
    rng = random.Random(seed)
    name, p = rng.choice(POOL)
    gens = [random_homogeneous(p, rng, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
    res = restricted_completion(GeneratorSet(p, gens), 4)
    for g in res.generators:
        if g.degree() <= 4:
            assert oracle_member(g, gens, p, "restricted", 4) == "Yes", (name, gens, g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_completion_is_deterministic(seed):
    rng = random.Random(seed)
    name, p = rng.choice(POOL)
    gens = [random_homogeneous(p, rng, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
    a = restricted_completion(GeneratorSet(p, gens), 4).to_dict()
    b = restricted_completion(GeneratorSet(p, list(gens)), 4).to_dict()
    assert a == b


def test_kernel_check_detects_missing_pairs():
    rng = random.Random(3)
    pool = syzygy_pool()
    detected = 0
    for _ in range(40):
        _, p, F = random_syzygy_instance(rng, pool)
        gm = spairs_restricted(F)
        if not gm:
            continue
        checked, bad = gm_kernel_check(p, F, 4, gm=gm[1:])
        detected += bad > 0
    assert detected > 0
