"""
Sequence model G of an irreducible right representation.

For an eigenvector v of y with eigenvalue alpha and a functional rho, the
sequences g_a(m) = f(a x^m) carry the representation through
g_a . b = g_(ab). On pi_(alpha, gamma) with v = e_0 and rho the first
coordinate the averaging functional is exact, f(a) = pi(a)[0][0], so no
Banach limit is needed.
"""
from dataclasses import dataclass
from typing import Tuple

from src.algebra_cs import AlgebraElement
from src.exact_arith import Cyclotomic
from src.utils.errors import ConstraintError
from .matrices import Matrix
from .reps import MatrixRep, evaluate_rep


@dataclass(frozen=True, eq=False)
class AvgSequence:
    """Values g(0), ..., g(M) and the eigenvalue alpha of y they were built for."""

    values: Tuple[Cyclotomic, ...]
    alpha: Cyclotomic

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AvgSequence):
            return NotImplemented
        return (
            len(self.values) == len(other.values)
            and self.alpha == other.alpha
            and all(a == b for a, b in zip(self.values, other.values))
        )

    __hash__ = None


def avg_act_x(g: AvgSequence) -> AvgSequence:
    """(g . x)(m) = g(m + 1); the truncation loses its last value, so at least two are needed."""
    if len(g.values) < 2:
        raise ConstraintError(f"cannot shift a sequence of length {len(g.values)}")
    return AvgSequence(g.values[1:], g.alpha)


def avg_act_y(g: AvgSequence) -> AvgSequence:
    """(g . y)(m) = alpha^(2^m) g(m)."""
    weights = []
    weight = g.alpha
    for _ in g.values:
        weights.append(weight)
        weight = weight * weight
    return AvgSequence(tuple(w * v for w, v in zip(weights, g.values)), g.alpha)


def averaging_sequence(rep: MatrixRep, a: AlgebraElement, M: int) -> AvgSequence:
    """g_a(m) = pi(a x^m)[0][0] for m = 0 .. M."""
    if M < 0:
        raise ConstraintError(f"M must be nonnegative, got {M}")
    current = evaluate_rep(rep, a)
    step = rep.x_matrix()
    values = []
    for _ in range(M + 1):
        values.append(current[0, 0])
        current = current @ step
    return AvgSequence(tuple(values), rep.alpha)


def x_power_is_scalar(rep: MatrixRep) -> bool:
    """x^k acts on pi_(alpha, gamma) as gamma^k times the identity."""
    return evaluate_rep(rep, AlgebraElement.monomial(rep.k, 0)) == Matrix.identity(rep.k).scale(rep.gamma ** rep.k)
