import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.algebra_cs import AlgebraElement
from src.exact_arith import Cyclotomic
from src.mu_dynamics import (
    MuOrbit,
    chain_generator,
    chain_values,
    cyclic_witness,
    doubling_orbit,
    enumerate_mu_orbits,
    fold,
    in_chain_Vp,
    is_certified_positive,
    is_minimal,
    is_square_closed,
    max_circular_gap,
    square_closed_set,
    sub_orbits,
)
from src.utils.errors import CapacityError, ConstraintError
from src.wiener_fourier import CoeffSeq, right_act, wiener_product
from tests.strategies import coeff_seqs

delta = CoeffSeq.delta
z3 = Cyclotomic.root_of_unity(3, 1)

SMALL_ORBITS = [orbit for k in range(1, 7) for orbit in enumerate_mu_orbits(k)]


@pytest.mark.parametrize("N, e, cycle", [
    (3, 1, (1, 2)),
    (7, 3, (3, 6, 5)),
    (1, 0, (0,)),
    (7, 0, (0,)),
    (15, 5, (5, 10)),
])
def test_doubling_orbit(N, e, cycle):
    orbit = doubling_orbit(N, e)
    assert orbit.cycle == cycle
    assert orbit.k == len(cycle)
    assert is_square_closed(orbit.exps, N)
    assert is_minimal(orbit)


def test_orbit_text_and_angles():
    orbit = doubling_orbit(7, 3)
    assert str(orbit) == "N=7 k=3 exps=[3,5,6]"
    assert doubling_orbit(3, 1).angles() == [Fraction(1, 3), Fraction(2, 3)]


def test_orbit_errors():
    with pytest.raises(ConstraintError):
        doubling_orbit(4, 1)
    with pytest.raises(ConstraintError):
        MuOrbit(7, (1, 2, 3))


def test_enumerate_mu_orbits_examples():
    assert [o.cycle for o in enumerate_mu_orbits(1)] == [(0,)]
    assert [o.cycle for o in enumerate_mu_orbits(2)] == [(1, 2)]
    assert [o.exps for o in enumerate_mu_orbits(3)] == [(1, 2, 4), (3, 5, 6)]
    assert len(enumerate_mu_orbits(4)) == 3
    assert len(enumerate_mu_orbits(5)) == 6


def test_enumerate_mu_orbits_guards():
    with pytest.raises(ConstraintError):
        enumerate_mu_orbits(0)
    with pytest.raises(CapacityError):
        enumerate_mu_orbits(25)


@pytest.mark.parametrize("k", range(1, 11))
def test_orbits_partition_the_points_of_exact_period(k):
    N = (1 << k) - 1
    orbits = enumerate_mu_orbits(k)
    covered = [e for orbit in orbits for e in orbit.cycle]
    assert len(covered) == len(set(covered))

    def period(e):
        n, current = 1, (2 * e) % N
        while current != e:
            n, current = n + 1, (2 * current) % N
        return n

    assert set(covered) == {e for e in range(N) if period(e) == k}
    assert all(is_square_closed(o.exps, N) and is_minimal(o) for o in orbits)
    assert [o.cycle[0] for o in orbits] == sorted(min(o.cycle) for o in orbits)


def test_square_closed_predicates():
    assert is_square_closed([1, 2, 4], 7)
    assert is_minimal(square_closed_set(7, [1, 2, 4]))
    both = square_closed_set(7, [1, 2, 4, 3, 6, 5])
    assert both.exps == (1, 2, 3, 4, 5, 6)
    assert not is_minimal(both)
    assert not is_square_closed([1], 3)
    assert not is_minimal(square_closed_set(7, []))
    with pytest.raises(ConstraintError):
        square_closed_set(3, [1])


def test_sub_orbits():
    both = square_closed_set(7, [1, 2, 4, 3, 6, 5])
    assert [o.cycle for o in sub_orbits(both)] == [(1, 2, 4), (3, 6, 5)]
    assert [o.cycle for o in sub_orbits(doubling_orbit(7, 6))] == [(3, 6, 5)]


def test_chain_membership_examples():
    f = delta(2) - delta(0)
    assert in_chain_Vp(f, 1)
    assert not in_chain_Vp(f, 2)
    assert chain_values(f, 2)[1] == -2
    assert all(in_chain_Vp(CoeffSeq.zero(), p) for p in range(1, 6))
    for p in range(1, 6):
        assert in_chain_Vp(chain_generator(p), p)
        assert not in_chain_Vp(chain_generator(p), p + 1)


def test_chain_values_match_membership():
    f = wiener_product(chain_generator(2), delta(-3, 5) + delta(1, Fraction(1, 2)))
    assert all(v.is_zero() for v in chain_values(f, 2))
    assert in_chain_Vp(f, 2)
    assert fold(f, 4).is_zero()


def test_chain_depth_guards():
    with pytest.raises(ConstraintError):
        in_chain_Vp(delta(0), 0)
    with pytest.raises(CapacityError):
        in_chain_Vp(delta(0), 13)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=6), coeff_seqs(max_support=6, max_index=40))
def test_chain_is_nested(p, g):
    f = wiener_product(chain_generator(p + 1), g)
    assert in_chain_Vp(f, p + 1)
    assert in_chain_Vp(f, p)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=6), coeff_seqs(max_support=6, max_index=60))
def test_chain_is_invariant_under_x_and_y(p, g):
    f = wiener_product(chain_generator(p), g)
    assert in_chain_Vp(right_act(f, AlgebraElement.x()), p)
    assert in_chain_Vp(right_act(f, AlgebraElement.y()), p)
    assert in_chain_Vp(right_act(f, AlgebraElement.y(-1)), p)


def test_cyclic_witness_examples():
    K = doubling_orbit(3, 1)
    assert cyclic_witness(delta(0), K) == (2, 2)
    assert cyclic_witness(delta(1) - delta(0, z3), K) == (2, 4)


def test_cyclic_witness_detects_reducible_sets():
    K = square_closed_set(7, [1, 2, 3, 4, 5, 6])
    f = delta(0)
    for e in (1, 2, 4):
        f = wiener_product(f, delta(1) - delta(0, Cyclotomic.root_of_unity(7, e)))
    values = dict(zip(K.points, cyclic_witness(f, K)))
    assert all(values[e].is_zero() for e in (1, 2, 4))
    assert all(is_certified_positive(values[e]) for e in (3, 5, 6))


def test_cyclic_witness_rejects_vanishing_f():
    with pytest.raises(ConstraintError):
        cyclic_witness(delta(1) - delta(0), doubling_orbit(1, 0))


def test_is_certified_positive():
    z5 = Cyclotomic.root_of_unity(5, 1)
    assert is_certified_positive(Cyclotomic.rational(2))
    assert not is_certified_positive(Cyclotomic.zero())
    assert not is_certified_positive(Cyclotomic.rational(-1))
    assert not is_certified_positive(z3)
    assert is_certified_positive(z5 + z5 ** 4)
    assert not is_certified_positive(z5 ** 2 + z5 ** 3)


@pytest.mark.parametrize("K", SMALL_ORBITS, ids=str)
@settings(max_examples=20, deadline=None)
@given(coeff_seqs(max_support=4, max_index=16))
def test_witness_is_positive_on_minimal_orbits(K, f):
    assume(any(not f.evaluate(K.N, e).is_zero() for e in K.points))
    values = cyclic_witness(f, K)
    assert len(values) == K.k
    assert all(is_certified_positive(v) for v in values)


def test_orbit_angles_are_dense():
    orbits = [orbit for k in range(1, 11) for orbit in enumerate_mu_orbits(k)]
    gap = max_circular_gap(orbits)
    assert gap <= 0.02
    assert gap == pytest.approx(2 * math.pi / 1023)
