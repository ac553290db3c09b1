"""
Characters and the finite-dimensional irreducible representations pi_(alpha, gamma).

For a minimal doubling orbit of length k on Z/N, N = 2^k - 1, and
alpha = zeta_N^e, the representation sends

    x -> gamma X,   X = cyclic permutation with ones on the subdiagonal
                        and in the top-right corner,
    y -> Y = diag(alpha, alpha^2, alpha^4, ..., alpha^(2^(k-1))).

Y X = X Y^2 holds because alpha^(2^k) = alpha, so pi extends to a ring
homomorphism of CS. Row vectors carry the right module (v -> v pi(a)) and
column vectors the left module (v -> pi(a) v).
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from src.algebra_cs import AlgebraElement
from src.algebra_cs.algebra import Scalar
from src.exact_arith import Cyclotomic, as_cyclotomic, format_cyclotomic
from src.mu_dynamics import doubling_orbit
from src.utils.errors import CapacityError, ConstraintError
from .config import config
from .matrices import Matrix


class Mode(str, Enum):
    BANACH = "banach"
    ALGEBRAIC = "algebraic"


def _exact_modulus_squared(value: Cyclotomic, what: str) -> Fraction:
    modulus = value.abs_squared()
    if not modulus.is_rational():
        raise ConstraintError(f"|{what}|^2 = {format_cyclotomic(modulus)} is not an exact rational")
    return modulus.as_rational()


@dataclass(frozen=True, eq=False)
class Character:
    """A one-dimensional representation: x -> x_val, y -> y_val."""

    x_val: Cyclotomic
    y_val: Cyclotomic
    mode: Mode = Mode.BANACH

    def __str__(self) -> str:
        return f"chi(x={format_cyclotomic(self.x_val)},y={format_cyclotomic(self.y_val)})"


def make_character(x_val: Scalar, y_val: Scalar, mode: Mode = Mode.BANACH) -> Character:
    """
    Validate a character of A or B (banach) or of CS (algebraic).

    banach:    y = 1 and 0 < |x| <= 1, or x = 0 and |y| = 1
    algebraic: y = 1, or x = 0 and y != 0

    Raises:
        ConstraintError: the values do not define a character in this mode
    """
    x_val, y_val = as_cyclotomic(x_val), as_cyclotomic(y_val)
    mode = Mode(mode)
    if mode is Mode.BANACH:
        if y_val == 1 and not x_val.is_zero():
            if _exact_modulus_squared(x_val, "chi(x)") <= 1:
                return Character(x_val, y_val, mode)
        elif x_val.is_zero() and y_val.abs_squared() == 1:
            return Character(x_val, y_val, mode)
    elif y_val == 1 or (x_val.is_zero() and not y_val.is_zero()):
        return Character(x_val, y_val, mode)
    raise ConstraintError(
        f"({format_cyclotomic(x_val)}, {format_cyclotomic(y_val)}) is not a {mode.value} character"
    )


def evaluate_character(chi: Character, a: AlgebraElement) -> Cyclotomic:
    """Multiplicative extension: sum c * chi(x)^m * chi(y)^n."""
    total = Cyclotomic.zero()
    for s, c in a.terms:
        total = total + c * chi.x_val ** s.m * chi.y_val ** s.n
    return total


def cyclic_shift(k: int) -> Matrix:
    """X: X[i+1][i] = 1 and X[0][k-1] = 1."""
    return Matrix.from_rows([[1 if i == (j + 1) % k else 0 for j in range(k)] for i in range(k)])


@dataclass(frozen=True, eq=False)
class MatrixRep:
    k: int
    alpha_exp: int
    gamma: Cyclotomic
    mode: Mode
    X: Matrix = field(repr=False)
    Y: Matrix = field(repr=False)

    @property
    def N(self) -> int:
        return (1 << self.k) - 1

    @property
    def alpha(self) -> Cyclotomic:
        return Cyclotomic.root_of_unity(self.N, self.alpha_exp)

    @property
    def conductor(self) -> int:
        return math.lcm(self.N, self.gamma.conductor)

    def x_matrix(self) -> Matrix:
        return self.X.scale(self.gamma)

    def y_power(self, n: int) -> Matrix:
        """Y^n for any integer n; entries are roots of unity, so negative n is exact."""
        return Matrix.diag([
            Cyclotomic.root_of_unity(self.N, self.alpha_exp * pow(2, j, self.N) * n)
            for j in range(self.k)
        ])

    def generators(self) -> Tuple[Matrix, Matrix]:
        return self.x_matrix(), self.Y

    def descriptor(self) -> str:
        return f"pi(k={self.k},e={self.alpha_exp},gamma={format_cyclotomic(self.gamma)})"

    def __str__(self) -> str:
        return self.descriptor()


def make_rep(k: int, alpha_exp: int, gamma: Scalar, mode: Mode = Mode.ALGEBRAIC) -> MatrixRep:
    """
    Build pi_(alpha, gamma) for alpha = zeta_(2^k - 1)^alpha_exp.

    Raises:
        ConstraintError: orbit of alpha_exp not of size k, gamma zero or not
            Gaussian-rational, or |gamma| > 1 in banach mode
        CapacityError: k above the configured representation cap
    """
    if k < 1:
        raise ConstraintError(f"k must be positive, got {k}")
    if k > config.max_rep_k:
        raise CapacityError(f"k={k} exceeds representation cap {config.max_rep_k}")
    mode = Mode(mode)
    N = (1 << k) - 1
    alpha_exp %= N
    orbit = doubling_orbit(N, alpha_exp)
    if orbit.k != k:
        raise ConstraintError(
            f"orbit {{{','.join(str(e) for e in orbit.exps)}}} mod {N} has size {orbit.k}, not {k}"
        )
    gamma = as_cyclotomic(gamma)
    if gamma.is_zero():
        raise ConstraintError("gamma must be nonzero")
    if gamma.as_gaussian_rational() is None:
        raise ConstraintError(f"gamma={format_cyclotomic(gamma)} is not a Gaussian rational")
    if mode is Mode.BANACH and _exact_modulus_squared(gamma, "gamma") > 1:
        raise ConstraintError(f"|gamma| > 1 is not allowed in banach mode (gamma={format_cyclotomic(gamma)})")
    Y = Matrix.diag([Cyclotomic.root_of_unity(N, e) for e in orbit.cycle])
    return MatrixRep(k, alpha_exp, gamma, mode, cyclic_shift(k), Y)


def evaluate_rep(rep: MatrixRep, a: AlgebraElement) -> Matrix:
    """pi(a) = sum c * (gamma X)^m Y^n."""
    x_powers = {}
    total = Matrix.zeros(rep.k)
    for s, c in a.terms:
        r = s.m % rep.k
        if r not in x_powers:
            x_powers[r] = rep.X ** r
        term = (x_powers[r] @ rep.y_power(s.n)).scale(c * rep.gamma ** s.m)
        total = total + term
    return total


def act_on_vector(rep: MatrixRep, a: AlgebraElement, v: Sequence[Scalar], side: str = "right") -> Tuple[Cyclotomic, ...]:
    """The right module v . a = v pi(a) on row vectors, or the left module a . v = pi(a) v on columns."""
    if len(v) != rep.k:
        raise ConstraintError(f"vector of length {len(v)} for a {rep.k}-dimensional representation")
    matrix = evaluate_rep(rep, a)
    if side == "right":
        return matrix.apply_row(v)
    if side == "left":
        return matrix.apply_column(v)
    raise ConstraintError(f"side must be 'left' or 'right', got {side!r}")
