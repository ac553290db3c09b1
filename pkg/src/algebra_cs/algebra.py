"""
The semigroup algebra CS and its finitely supported A/B completions.

An element is stored graded by x-degree, a = sum_m x^m phi_m(y), as a
canonically ordered tuple of (monomial, coefficient) pairs.
"""
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import numpy as np

from src.exact_arith import (
    Cyclotomic,
    as_cyclotomic,
    common_conductor,
    decode_cyclotomic,
    encode_cyclotomic,
    format_cyclotomic,
)
from src.semigroup_core import SemigroupElement, format_monomial, multiply
from src.utils.errors import ConstraintError, NotInvertibleError

Scalar = Union[int, Fraction, Cyclotomic]


def _collect(pairs: Iterable[Tuple[object, Cyclotomic]]) -> Tuple[Tuple[object, Cyclotomic], ...]:
    """Merge equal keys, drop zero coefficients, promote to one conductor, sort."""
    acc: Dict[object, Cyclotomic] = {}
    for key, c in pairs:
        c = as_cyclotomic(c)
        acc[key] = acc[key] + c if key in acc else c
    kept = [(k, c) for k, c in acc.items() if not c.is_zero()]
    if not kept:
        return ()
    n = common_conductor([c for _, c in kept])
    return tuple(sorted(((k, c.promote(n)) for k, c in kept), key=lambda kc: kc[0]))


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """A Laurent polynomial in y with cyclotomic coefficients."""

    coeffs: Tuple[Tuple[int, Cyclotomic], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[int, Scalar]) -> "LaurentPoly":
        return cls(_collect(mapping.items()))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(_collect([(n, c)]))

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls.monomial(0, c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_dict(self) -> Dict[int, Cyclotomic]:
        return dict(self.coeffs)

    def coefficient(self, n: int) -> Cyclotomic:
        return self.as_dict().get(n, Cyclotomic.zero())

    def degree(self) -> int:
        if not self.coeffs:
            raise ConstraintError("the zero polynomial has no degree")
        return self.coeffs[-1][0]

    def valuation(self) -> int:
        if not self.coeffs:
            raise ConstraintError("the zero polynomial has no valuation")
        return self.coeffs[0][0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            n == p and c == d for (n, c), (p, d) in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(_collect(list(self.coeffs) + list(other.coeffs)))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((n, -c) for n, c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            c = as_cyclotomic(other)
            return LaurentPoly(_collect((n, a * c) for n, a in self.coeffs))
        return LaurentPoly(_collect(
            (n + p, a * b) for n, a in self.coeffs for p, b in other.coeffs
        ))

    __rmul__ = __mul__

    def evaluate_root(self, n: int, e: int) -> Cyclotomic:
        """phi(zeta_n ** e), exactly."""
        total = Cyclotomic.zero(n)
        for k, c in self.coeffs:
            total = total + c * Cyclotomic.root_of_unity(n, e * k)
        return total

    def evaluate(self, point: Cyclotomic) -> Cyclotomic:
        """phi(point) for a nonzero cyclotomic point."""
        total = Cyclotomic.zero(point.conductor)
        for k, c in self.coeffs:
            total = total + c * point ** k
        return total

    def substitute_power(self, factor: int) -> "LaurentPoly":
        """phi(y ** factor)."""
        return LaurentPoly(_collect((n * factor, c) for n, c in self.coeffs))

    def conjugate_reflected(self) -> "LaurentPoly":
        """sum conj(c_n) y^-n, which agrees with the complex conjugate on the circle."""
        return LaurentPoly(_collect((-n, c.conjugate()) for n, c in self.coeffs))

    def as_element(self) -> "AlgebraElement":
        return AlgebraElement.from_pairs((SemigroupElement(0, n), c) for n, c in self.coeffs)

    def sup_on_grid(self, grid_size: int) -> float:
        """max |phi| over grid_size equispaced points of the circle."""
        if not self.coeffs:
            return 0.0
        if len(self.coeffs) == 1:
            return abs(self.coeffs[0][1].complex_embedding())
        angles = 2 * np.pi * np.arange(grid_size) / grid_size
        values = np.zeros(grid_size, dtype=complex)
        for n, c in self.coeffs:
            values += c.complex_embedding() * np.exp(1j * n * angles)
        return float(np.max(np.abs(values)))

    def __str__(self) -> str:
        return format_element(self.as_element())


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A finite sum of c * x^m y^n, terms ascending in m then n, no zero coefficients."""

    terms: Tuple[Tuple[SemigroupElement, Cyclotomic], ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[SemigroupElement, Scalar]]) -> "AlgebraElement":
        return cls(_collect(pairs))

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls(())

    @classmethod
    def scalar(cls, c: Scalar) -> "AlgebraElement":
        return cls.from_pairs([(SemigroupElement.identity(), c)])

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls.scalar(1)

    @classmethod
    def monomial(cls, m: int, n: int, c: Scalar = 1) -> "AlgebraElement":
        return cls.from_pairs([(SemigroupElement(m, n), c)])

    @classmethod
    def x(cls) -> "AlgebraElement":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls, n: int = 1) -> "AlgebraElement":
        return cls.monomial(0, n)

    @property
    def conductor(self) -> int:
        return self.terms[0][1].conductor if self.terms else 1

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(s.is_identity() for s, _ in self.terms)

    def scalar_value(self) -> Cyclotomic:
        if not self.is_scalar():
            raise ConstraintError(f"{self} is not a scalar")
        return self.terms[0][1] if self.terms else Cyclotomic.zero()

    def max_x_degree(self) -> int:
        return max((s.m for s, _ in self.terms), default=0)

    def max_abs_y_degree(self) -> int:
        return max((abs(s.n) for s, _ in self.terms), default=0)

    def x_degrees(self) -> List[int]:
        return sorted({s.m for s, _ in self.terms})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return len(self.terms) == len(other.terms) and all(
            s == t and c == d for (s, c), (t, d) in zip(self.terms, other.terms)
        )

    __hash__ = None

    def __add__(self, other) -> "AlgebraElement":
        other = _as_element(other)
        return AlgebraElement(_collect(list(self.terms) + list(other.terms)))

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple((s, -c) for s, c in self.terms))

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-_as_element(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return _as_element(other) - self

    def __mul__(self, other) -> "AlgebraElement":
        return product(self, _as_element(other))

    def __rmul__(self, other) -> "AlgebraElement":
        return product(_as_element(other), self)

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = AlgebraElement.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "AlgebraElement":
        """Units of CS are exactly the c * y^n with c != 0."""
        if len(self.terms) != 1 or self.terms[0][0].m:
            raise NotInvertibleError(f"{self} is not a unit")
        s, c = self.terms[0]
        return AlgebraElement.monomial(0, -s.n, c.inverse())

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)!r})"


def _as_element(value) -> AlgebraElement:
    if isinstance(value, AlgebraElement):
        return value
    if isinstance(value, LaurentPoly):
        return value.as_element()
    return AlgebraElement.scalar(value)


def product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    Bilinear extension of the semigroup product:
    x^m phi(y) . x^n psi(y) = x^(m+n) phi(y^(2^n)) psi(y).
    """
    if a.is_zero() or b.is_zero():
        return AlgebraElement.zero()
    n = math.lcm(a.conductor, b.conductor)
    left = [(s, c.promote(n)) for s, c in a.terms]
    right = [(t, d.promote(n)) for t, d in b.terms]
    acc: Dict[SemigroupElement, Cyclotomic] = {}
    for s, c in left:
        for t, d in right:
            key = multiply(s, t)
            value = c * d
            acc[key] = acc[key] + value if key in acc else value
    return AlgebraElement(_collect(acc.items()))


def extract_phi(a: AlgebraElement, m: int) -> LaurentPoly:
    """phi_m in a = sum_m x^m phi_m(y)."""
    return LaurentPoly(_collect((s.n, c) for s, c in a.terms if s.m == m))


def graded_parts(a: AlgebraElement) -> Dict[int, LaurentPoly]:
    parts: Dict[int, list] = defaultdict(list)
    for s, c in a.terms:
        parts[s.m].append((s.n, c))
    return {m: LaurentPoly(_collect(pairs)) for m, pairs in sorted(parts.items())}


def norm_A(a: AlgebraElement) -> float:
    """l1 norm: sum over all terms of |coefficient|."""
    return float(sum(abs(c.complex_embedding()) for _, c in a.terms))


def min_grid_size(a: AlgebraElement) -> int:
    return 4 * a.max_abs_y_degree() + 4


def norm_B(a: AlgebraElement, grid_size: int) -> float:
    """
    sum_m sup |phi_m| with each sup approximated on grid_size equispaced points.

    The grid maximum under-approximates the true supremum by a relative
    amount of order (deg / grid_size)^2 per coefficient polynomial.

    Raises:
        ConstraintError: grid_size below 4 * max|n| + 4
    """
    needed = min_grid_size(a)
    if grid_size < needed:
        raise ConstraintError(f"grid too coarse: {grid_size} < {needed}")
    return float(sum(phi.sup_on_grid(grid_size) for phi in graded_parts(a).values()))


def format_element(a: AlgebraElement) -> str:
    """Plain-text form accepted back by parse_element."""
    pieces = []
    for s, c in a.terms:
        mono = format_monomial(s)
        if s.is_identity():
            pieces.append(format_cyclotomic(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append(f"-{mono}")
        elif c.is_rational():
            pieces.append(f"{c.as_rational()}*{mono}")
        else:
            pieces.append(f"({format_cyclotomic(c)})*{mono}")
    if not pieces:
        return "0"
    text = pieces[0]
    for piece in pieces[1:]:
        text += piece if piece.startswith("-") else f"+{piece}"
    return text


def encode_element(a: AlgebraElement) -> List[dict]:
    """One record per term: m (int), n (decimal string), coefficient."""
    return [
        {"m": s.m, "n": str(s.n), "coefficient": encode_cyclotomic(c)}
        for s, c in a.terms
    ]


def decode_element(records: List[dict]) -> AlgebraElement:
    return AlgebraElement.from_pairs(
        (SemigroupElement(int(r["m"]), int(r["n"])), decode_cyclotomic(r["coefficient"]))
        for r in records
    )
