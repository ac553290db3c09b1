from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra_cs import AlgebraElement, parse_element
from src.exact_arith import Cyclotomic
from src.mu_dynamics import enumerate_mu_orbits
from src.representations import (
    AvgSequence,
    Character,
    Matrix,
    MatrixRep,
    Mode,
    act_on_vector,
    averaging_sequence,
    avg_act_x,
    avg_act_y,
    evaluate_character,
    evaluate_rep,
    format_matrix,
    gamma_candidates,
    is_irreducible,
    make_character,
    make_rep,
    separate,
    span_dimension,
    x_power_is_scalar,
)
from src.utils.errors import CapacityError, ConstraintError
from tests.strategies import algebra_elements, rational_elements, unit_pairs

z3 = Cyclotomic.root_of_unity(3, 1)
i = Cyclotomic.root_of_unity(4, 1)
x = AlgebraElement.x()
y = AlgebraElement.y()

MINIMAL_ORBITS = [(orbit.k, orbit.cycle[0]) for k in range(1, 5) for orbit in enumerate_mu_orbits(k)]


def test_make_character():
    assert make_character(Fraction(1, 2), 1, Mode.BANACH).x_val == Fraction(1, 2)
    assert make_character(0, z3, Mode.BANACH).y_val == z3
    with pytest.raises(ConstraintError):
        make_character(2, 1, Mode.BANACH)
    assert make_character(2, 1, Mode.ALGEBRAIC).x_val == 2
    assert make_character(0, 5, Mode.ALGEBRAIC).y_val == 5
    with pytest.raises(ConstraintError):
        make_character(0, 5, Mode.BANACH)
    with pytest.raises(ConstraintError):
        make_character(1, z3, Mode.ALGEBRAIC)


def test_evaluate_character():
    chi = make_character(Fraction(1, 2), 1)
    assert evaluate_character(chi, parse_element("x^2 - 3y^5 + 1")) == Fraction(-7, 4)
    chi = make_character(0, z3)
    assert evaluate_character(chi, parse_element("x + y^2 + 1")) == z3 ** 2 + 1


def test_one_dimensional_rep_is_a_character():
    rep = make_rep(1, 0, Fraction(1, 2))
    assert rep.X == Matrix.from_rows([[1]])
    assert rep.Y == Matrix.from_rows([[1]])
    chi = make_character(Fraction(1, 2), 1)
    a = parse_element("x^3*y^-2 - 2x + 5")
    assert evaluate_rep(rep, a)[0, 0] == evaluate_character(chi, a)


def test_make_rep_k2():
    rep = make_rep(2, 1, 1)
    assert rep.X == Matrix.from_rows([[0, 1], [1, 0]])
    assert rep.Y == Matrix.diag([z3, z3 ** 2])
    assert rep.descriptor() == "pi(k=2,e=1,gamma=1)"
    assert make_rep(2, 1, Fraction(1, 2)).descriptor() == "pi(k=2,e=1,gamma=1/2)"


def test_cyclic_shift_shape():
    X = make_rep(3, 1, 1).X
    assert X == Matrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


@pytest.mark.parametrize("k, e, gamma, mode", [
    (2, 0, 1, Mode.ALGEBRAIC),
    (3, 7, 1, Mode.ALGEBRAIC),
    (2, 1, 0, Mode.ALGEBRAIC),
    (2, 1, 2, Mode.BANACH),
    (2, 1, z3, Mode.ALGEBRAIC),
    (0, 0, 1, Mode.ALGEBRAIC),
])
def test_make_rep_errors(k, e, gamma, mode):
    with pytest.raises(ConstraintError):
        make_rep(k, e, gamma, mode)


def test_make_rep_accepts_large_gamma_algebraically():
    assert make_rep(2, 1, 2, Mode.ALGEBRAIC).gamma == 2
    assert make_rep(2, 2, i, Mode.BANACH).gamma == i
    assert make_rep(2, 1, Cyclotomic.root_of_unity(12, 3)).gamma == i
    assert make_rep(2, 1, Cyclotomic.root_of_unity(8, 2), Mode.BANACH).gamma == i


def test_make_rep_capacity():
    with pytest.raises(CapacityError):
        make_rep(40, 1, 1)


def test_evaluate_rep_examples():
    rep = make_rep(2, 1, 1)
    assert evaluate_rep(rep, parse_element("yx - xy^2")).is_zero()
    assert evaluate_rep(rep, AlgebraElement.one()) == Matrix.identity(2)
    assert evaluate_rep(rep, parse_element("x(1-y)")) == Matrix.from_rows([[0, 1 - z3 ** 2], [1 - z3, 0]])
    assert evaluate_rep(rep, parse_element("y^-1")) == Matrix.diag([z3 ** 2, z3])


@pytest.mark.parametrize("k, e", MINIMAL_ORBITS)
def test_generators_satisfy_the_relation(k, e):
    rep = make_rep(k, e, Fraction(1, 2))
    gx = rep.x_matrix()
    assert rep.Y @ gx == gx @ rep.y_power(2)
    assert x_power_is_scalar(rep)


@pytest.mark.parametrize("k", range(1, 7))
def test_minimal_orbits_give_distinct_eigenvalues(k):
    for orbit in enumerate_mu_orbits(k):
        diagonal = make_rep(k, orbit.cycle[0], 1).Y.diagonal()
        for a in range(k):
            for b in range(a + 1, k):
                assert diagonal[a] != diagonal[b]


@pytest.mark.parametrize("k, e", MINIMAL_ORBITS)
@pytest.mark.parametrize("gamma", [1, Fraction(1, 2)])
def test_minimal_reps_are_irreducible(k, e, gamma):
    assert is_irreducible(list(make_rep(k, e, gamma).generators()))


def test_burnside_rejects_diagonal_algebra():
    assert not is_irreducible([Matrix.identity(2), Matrix.diag([1, 2])])
    assert span_dimension([Matrix.identity(2), Matrix.diag([1, 2])]) == 2
    assert is_irreducible([Matrix.from_rows([[3]])])


def test_span_dimension_errors():
    with pytest.raises(ConstraintError):
        span_dimension([])
    with pytest.raises(ConstraintError):
        span_dimension([Matrix.identity(2), Matrix.identity(3)])


def test_separate_examples():
    chi, witness = separate(AlgebraElement.one())
    assert isinstance(chi, Character)
    assert (chi.x_val, chi.y_val) == (1, 1)
    assert witness == Matrix.from_rows([[1]])

    rep, witness = separate(parse_element("y - 1"))
    assert isinstance(rep, MatrixRep)
    assert rep.descriptor() == "pi(k=2,e=1,gamma=1)"
    assert format_matrix(witness) == "diag(z3-1, z3^2-1)"

    rep, witness = separate(parse_element("x(1-y)"))
    assert rep.descriptor() == "pi(k=2,e=1,gamma=1)"
    assert witness == Matrix.from_rows([[0, 1 - z3 ** 2], [1 - z3, 0]])


def test_separate_needs_a_second_gamma():
    # x - x^2 vanishes on the character with chi(x) = 1 but not at chi(x) = 1/2
    rep, witness = separate(parse_element("x - x^2"))
    assert isinstance(rep, Character)
    assert rep.x_val == Fraction(1, 2)
    assert witness == Matrix.from_rows([[Fraction(1, 4)]])


def test_separate_errors():
    with pytest.raises(ConstraintError):
        separate(AlgebraElement.zero())
    with pytest.raises(CapacityError):
        separate(parse_element("y - 1"), max_k=1)


def test_gamma_candidates():
    assert gamma_candidates(parse_element("x^2 + 1")) == [1, Fraction(1, 2), Fraction(1, 3)]
    assert gamma_candidates(parse_element("y")) == [1]


def test_averaging_actions():
    alpha = Cyclotomic.one()
    g = AvgSequence(tuple(Cyclotomic.rational(v) for v in (3, 1, 4)), alpha)
    assert avg_act_y(g) == g
    assert avg_act_x(g).values == g.values[1:]
    with pytest.raises(ConstraintError):
        avg_act_x(AvgSequence((), alpha))
    with pytest.raises(ConstraintError, match="length 1"):
        avg_act_x(AvgSequence((Cyclotomic.rational(3),), alpha))


def test_y_eigenvector_vanishes_off_multiples_of_k():
    ones = AvgSequence((Cyclotomic.one(),) * 6, z3)
    weights = avg_act_y(ones).values
    assert [w == z3 for w in weights] == [True, False] * 3


def test_averaging_sequence_is_equivariant():
    rep = make_rep(2, 1, Fraction(1, 2))
    a = parse_element("1 + x*y - 2x^2*y^-1")
    g = averaging_sequence(rep, a, 6)
    assert len(g) == 7
    assert averaging_sequence(rep, a * y, 6) == avg_act_y(g)
    assert averaging_sequence(rep, a * x, 5) == avg_act_x(g)
    assert g.values[0] == evaluate_rep(rep, a)[0, 0]


def test_act_on_vector():
    rep = make_rep(2, 1, 1)
    assert act_on_vector(rep, x, (1, 0), "right") == (0, 1)
    assert act_on_vector(rep, x, (1, 0), "left") == (0, 1)
    assert act_on_vector(rep, y, (1, 0)) == (z3, 0)
    with pytest.raises(ConstraintError):
        act_on_vector(rep, x, (1, 0, 0))
    with pytest.raises(ConstraintError):
        act_on_vector(rep, x, (1, 0), "up")


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(MINIMAL_ORBITS),
    st.sampled_from([1, Fraction(1, 2)]),
    rational_elements(max_terms=3, max_m=3, max_n=4),
    rational_elements(max_terms=3, max_m=3, max_n=4),
)
def test_evaluation_is_a_homomorphism(ke, gamma, a, b):
    rep = make_rep(ke[0], ke[1], gamma)
    assert evaluate_rep(rep, a * b) == evaluate_rep(rep, a) @ evaluate_rep(rep, b)
    assert evaluate_rep(rep, a + b) == evaluate_rep(rep, a) + evaluate_rep(rep, b)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(MINIMAL_ORBITS), rational_elements(max_terms=2), rational_elements(max_terms=2), st.sampled_from(["left", "right"]))
def test_vector_actions_are_module_actions(ke, a, b, side):
    rep = make_rep(ke[0], ke[1], 1)
    v = tuple(range(1, ke[0] + 1))
    if side == "right":
        assert act_on_vector(rep, a * b, v, side) == act_on_vector(rep, b, act_on_vector(rep, a, v, side), side)
    else:
        assert act_on_vector(rep, a * b, v, side) == act_on_vector(rep, a, act_on_vector(rep, b, v, side), side)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(MINIMAL_ORBITS), unit_pairs())
def test_one_sided_inverses_are_two_sided(ke, pair):
    a, b = pair
    rep = make_rep(ke[0], ke[1], 1)
    identity = Matrix.identity(ke[0])
    assert evaluate_rep(rep, b) @ evaluate_rep(rep, a) == identity
    assert evaluate_rep(rep, a) @ evaluate_rep(rep, b) == identity


@settings(max_examples=100, deadline=None)
@given(algebra_elements(max_terms=4, max_m=4, max_n=6, nonzero=True))
def test_separate_always_succeeds(a):
    separator, witness = separate(a)
    assert not witness.is_zero()
    if isinstance(separator, Character):
        assert witness == Matrix.from_rows([[evaluate_character(separator, a)]])
    else:
        assert witness == evaluate_rep(separator, a)
