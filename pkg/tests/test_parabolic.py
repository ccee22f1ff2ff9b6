from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superorbits.characters import odd_quotient_weights
from superorbits.errors import NotBorelCompatible
from superorbits.families import AlgebraSpec, Family, OrbitLabel
from superorbits.invariants import ell, k_formula
from superorbits.parabolic import (
    enumerate_borel_compatible,
    find_good_parabolic,
    goodness_checks,
    induced_numerics,
    is_good,
    levi_blocks,
    parabolic_from_degrees,
    richardson_orbit,
)
from superorbits.partitions import Partition, enumerate_partitions

P = Partition.of
GL43 = AlgebraSpec.gl(4, 3)


def test_not_good_example():
    p = parabolic_from_degrees(GL43, (1, 1, 2, 3, 1, 2, 2))
    assert p.levels == ((1, 2, 5), (3, 6, 7), (4,))
    assert (p.r, p.s) == ((2, 1, 1), (1, 2, 0))
    assert p.levi_text() == "gl(2,1) + gl(1,2) + gl(1,0)"
    assert richardson_orbit(p) == OrbitLabel.pair("gl", "3,1", "2,1")
    assert not is_good(p)
    num = induced_numerics(p)
    assert (num.c1, num.k, num.ell, num.e, num.lower_bound) == (8, 14, 7, 256, 128)
    assert num.strict


def test_good_example():
    p = parabolic_from_degrees(GL43, (1, 1, 2, 3, 1, 1, 2))
    assert p.levels == ((1, 2, 5, 6), (3, 7), (4,))
    # level one holds two even and two odd indices
    assert p.levi_text() == "gl(2,2) + gl(1,1) + gl(1,0)"
    assert is_good(p)
    num = induced_numerics(p)
    assert (num.c1, num.e, num.lower_bound, num.strict) == (7, 128, 128, False)


def test_borel_compatibility_errors():
    with pytest.raises(NotBorelCompatible):
        parabolic_from_degrees(GL43, (2, 1, 1, 1, 1, 1, 1))
    with pytest.raises(NotBorelCompatible):
        parabolic_from_degrees(GL43, (1, 1, 1, 1, 2, 1, 1))
    with pytest.raises(NotBorelCompatible):
        parabolic_from_degrees(GL43, (1, 1, 1))
    with pytest.raises(NotBorelCompatible):
        parabolic_from_degrees(GL43, (0, 1, 1, 1, 1, 1, 1))
    with pytest.raises(NotBorelCompatible):
        parabolic_from_degrees(AlgebraSpec.osp(1, 2), (1, 1, 1))


@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 5) for n in range(1, 5) if m + n <= 6])
def test_goodness_criteria_agree_exhaustively(m, n):
    spec = AlgebraSpec.gl(m, n)
    maps = enumerate_borel_compatible(spec)
    assert maps
    for p in maps:
        checks = goodness_checks(p)
        assert len(set(checks.values())) == 1, (p.degrees, checks)
        assert len(odd_quotient_weights(p)) == p.c1
        assert p.c1 >= ell(k_formula(richardson_orbit(p)))


def test_borel_map_count():
    # surjective weakly increasing maps on two blocks, counted by brute force
    from itertools import product

    def brute(m, n):
        total = 0
        for t in range(1, m + n + 1):
            for d in product(range(1, t + 1), repeat=m + n):
                a, b = d[:m], d[m:]
                if list(a) == sorted(a) and list(b) == sorted(b) and set(d) == set(range(1, t + 1)):
                    total += 1
        return total

    for m, n in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        assert len(enumerate_borel_compatible(AlgebraSpec.gl(m, n))) == brute(m, n)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_find_good_parabolic(m, n):
    for mu in enumerate_partitions(m):
        for nu in enumerate_partitions(n):
            p = find_good_parabolic(mu, nu)
            assert richardson_orbit(p) == OrbitLabel(Family.GL, mu, nu)
            assert is_good(p)


@pytest.mark.parametrize("n", range(3, 7))
def test_q_family(n):
    for mu in enumerate_partitions(n):
        p = find_good_parabolic(mu, family="q")
        assert richardson_orbit(p).mu == mu
        assert 2 * p.c1 == n * n - sum(x * x for x in mu.dual())
        assert is_good(p)
        sp = find_good_parabolic(mu, family="sq")
        assert is_good(sp) == any(x % 2 for x in mu)


def test_q_odd_quotient_count():
    # odd part of q(n) is [[0, b], [b, 0]]; count b_ij with deg(i) > deg(j)
    p = find_good_parabolic(P(3, 2, 2), family="q")
    count = sum(1 for i in p.degrees for j in p.degrees if i > j)
    assert count == p.c1 == p.c0


def test_levi_blocks():
    p = parabolic_from_degrees(GL43, (1, 1, 2, 3, 1, 1, 2))
    assert levi_blocks(p) == ((0, 1), (4, 5), (2,), (6,), (3,))
    with pytest.raises(NotBorelCompatible):
        levi_blocks(find_good_parabolic(P(2, 1), family="q"))


def test_induced_numerics_scale():
    p = parabolic_from_degrees(GL43, (1, 1, 2, 3, 1, 1, 2))
    num = induced_numerics(p, dim_lt=3)
    assert (num.e, num.lower_bound, num.goldie, num.d) == (384, 384, 384, p.c0)
    with pytest.raises(ValueError):
        induced_numerics(p, dim_lt=0)


@given(
    st.integers(1, 4).flatmap(
        lambda m: st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                st.just(m),
                st.lists(st.integers(1, 4), min_size=m, max_size=m).map(sorted),
                st.lists(st.integers(1, 4), min_size=n, max_size=n).map(sorted),
            )
        )
    )
)
@settings(max_examples=100, deadline=None)
def test_multiplicity_bound(data):
    m, a, b = data
    # relabel levels so the map is surjective
    used = sorted(set(a) | set(b))
    relabel = {d: i + 1 for i, d in enumerate(used)}
    p = parabolic_from_degrees(AlgebraSpec.gl(m, len(b)), [relabel[d] for d in a + b])
    num = induced_numerics(p)
    assert num.e >= num.lower_bound
    assert num.good == (num.e == num.lower_bound)
