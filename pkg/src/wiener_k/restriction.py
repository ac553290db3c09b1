"""
The quotient W(K) for a finite square-closed K, identified with functions on K.

B acts on the right by (F . x)(zeta) = F(zeta^2) and (F . y)(zeta) = zeta F(zeta);
for finite K every element of W(K) is the restriction of a polynomial, and
f is invertible in W(K) exactly when it has no zero on K.
"""
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.algebra_cs import AlgebraElement, LaurentPoly
from src.algebra_cs.algebra import Scalar
from src.exact_arith import Cyclotomic, as_cyclotomic, format_cyclotomic
from src.mu_dynamics import FiniteSet, MuOrbit, cyclic_witness, is_minimal
from src.utils.errors import ConstraintError, NotInvertibleError
from src.utils.logging_utils import setup_logging, log_operation
from src.wiener_fourier import CoeffSeq

logger = setup_logging("wiener_k")


@dataclass(frozen=True, eq=False)
class FnOnK:
    """One exact value per point of K, in K.points order."""

    K: FiniteSet
    values: Tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.K.points):
            raise ConstraintError(f"{len(self.values)} values for {len(self.K.points)} points")

    @classmethod
    def constant(cls, K: FiniteSet, c: Scalar) -> "FnOnK":
        return cls(K, tuple(as_cyclotomic(c) for _ in K.points))

    def as_dict(self) -> Dict[int, Cyclotomic]:
        return dict(zip(self.K.points, self.values))

    def at(self, e: int) -> Cyclotomic:
        try:
            return self.as_dict()[e % self.K.N]
        except KeyError:
            raise ConstraintError(f"{e}/{self.K.N} is not a point of K") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FnOnK):
            return NotImplemented
        return self.K == other.K and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def __str__(self) -> str:
        return format_fn_on_k(self)


def _same_set(F: FnOnK, G: FnOnK) -> None:
    if F.K != G.K:
        raise ConstraintError("functions live on different sets")


def point(K: FiniteSet, e: int) -> Cyclotomic:
    return Cyclotomic.root_of_unity(K.N, e)


def restrict(f: CoeffSeq, K: FiniteSet) -> FnOnK:
    """f|_K by exact evaluation at each zeta_N^e of K."""
    return FnOnK(K, tuple(f.evaluate(K.N, e) for e in K.points))


def invert_on_K(F: FnOnK) -> FnOnK:
    """
    Pointwise reciprocal in W(K).

    Raises:
        NotInvertibleError: F vanishes at some point, named as e/N
    """
    start_time = time.time()
    for e, value in zip(F.K.points, F.values):
        if value.is_zero():
            log_operation(logger, "invert_on_K", "failed", {"point": f"{e}/{F.K.N}"}, level="DEBUG")
            raise NotInvertibleError(f"not invertible in W(K): vanishes at {e}/{F.K.N}")
    inverse = FnOnK(F.K, tuple(value.inverse() for value in F.values))
    log_operation(logger, "invert_on_K", "completed", {
        "points": len(F.values),
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return inverse


def spectrum_on_K(F: FnOnK) -> Tuple[Cyclotomic, ...]:
    """The distinct values of F, in order of first appearance."""
    distinct: List[Cyclotomic] = []
    for value in F.values:
        if not any(value == seen for seen in distinct):
            distinct.append(value)
    return tuple(distinct)


def multiply_on_K(F: FnOnK, G: FnOnK) -> FnOnK:
    _same_set(F, G)
    return FnOnK(F.K, tuple(a * b for a, b in zip(F.values, G.values)))


def act_on_K(F: FnOnK, a: AlgebraElement) -> FnOnK:
    """(F . x^m y^n)(zeta) = zeta^n F(zeta^(2^m)), extended linearly."""
    K = F.K
    lookup = F.as_dict()
    values = []
    for e in K.points:
        total = Cyclotomic.zero()
        for s, c in a.terms:
            image = (e * pow(2, s.m, K.N)) % K.N
            total = total + c * point(K, e * s.n) * lookup[image]
        values.append(total)
    return FnOnK(K, tuple(values))


def interpolate_on_K(F: FnOnK) -> LaurentPoly:
    """The polynomial of degree < |K| agreeing with F on K (Lagrange form, exact)."""
    nodes = [point(F.K, e) for e in F.K.points]
    result = LaurentPoly()
    for i, (node, value) in enumerate(zip(nodes, F.values)):
        if value.is_zero():
            continue
        basis = LaurentPoly.constant(value)
        for j, other in enumerate(nodes):
            if j != i:
                factor = (node - other).inverse()
                basis = basis * LaurentPoly.from_dict({1: factor, 0: -other * factor})
        result = result + basis
    return result


def cyclic_inverse_element(f: CoeffSeq, K: MuOrbit) -> AlgebraElement:
    """
    An element b of CS with f|_K . b = 1, showing f generates W(K) as a module.

    b = c * sum_(n<k) 2^-n conj(f)(y) x^n psi(y) where c = 1 / (1 - 2^-k),
    conj(f) is the conjugate-reflected polynomial and psi interpolates 1/h
    on K for the cyclic witness h.

    Raises:
        ConstraintError: K is not minimal, or f vanishes on K
    """
    if not is_minimal(K):
        raise ConstraintError(f"K must be minimal ({K})")
    h = FnOnK(K, cyclic_witness(f, K))
    psi = interpolate_on_K(invert_on_K(h)).as_element()
    f_bar = f.as_laurent().conjugate_reflected().as_element()
    k = len(K.points)
    c = Fraction(1 << k, (1 << k) - 1)
    total = AlgebraElement.zero()
    for n in range(k):
        total = total + f_bar * AlgebraElement.monomial(n, 0, Fraction(1, 1 << n)) * psi
    return total * c


def format_fn_on_k(F: FnOnK) -> str:
    return "\n".join(f"{e}/{F.K.N}: {format_cyclotomic(v)}" for e, v in zip(F.K.points, F.values))


def encode_fn_on_k(F: FnOnK) -> List[dict]:
    return [{"point": f"{e}/{F.K.N}", "value": format_cyclotomic(v)} for e, v in zip(F.K.points, F.values)]


def function_from_values(K: FiniteSet, values: Sequence[Scalar]) -> FnOnK:
    return FnOnK(K, tuple(as_cyclotomic(v) for v in values))
