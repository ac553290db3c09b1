"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

Elements are stored as coefficient tuples of a polynomial in zeta_N reduced
modulo the N-th cyclotomic polynomial, which makes equality (and in
particular zero-testing) exact. Conductor 1 encodes the rationals.
"""
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

from sympy import QQ, ZZ, Poly, Rational, divisors, symbols, totient
from sympy.polys.polyerrors import NotInvertible

from src.utils.errors import CapacityError, ConstraintError, NotInvertibleError
from .config import config

BigRational = Fraction

_z = symbols("z")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    Coefficients of Phi_n, lowest degree first.

    Phi_n is (z^n - 1) divided by the product of Phi_d over the proper
    divisors d of n.

    Args:
        n: Positive integer

    Returns:
        tuple: Integer coefficients; the last one is 1 (monic)
    """
    if n < 1:
        raise ConstraintError(f"cyclotomic polynomial needs n >= 1, got {n}")
    numerator = Poly(_z**n - 1, _z, domain=ZZ)
    denominator = Poly(1, _z, domain=ZZ)
    for d in divisors(n)[:-1]:
        denominator *= Poly(list(reversed(cyclotomic_polynomial(d))), _z, domain=ZZ)
    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero or quotient.degree() != totient(n):
        raise ArithmeticError(f"divisor recursion failed for n={n}")
    return tuple(int(c) for c in reversed(quotient.all_coeffs()))


def field_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _modulus(n: int) -> Poly:
    return Poly(list(reversed(cyclotomic_polynomial(n))), _z, domain=QQ)


def _to_poly(coeffs: Sequence[Union[int, Fraction]]) -> Poly:
    """Coefficients lowest degree first -> Poly over QQ."""
    terms = [Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(coeffs)]
    return Poly(terms or [0], _z, domain=QQ)


def _from_poly(p: Poly, d: int) -> Tuple[Fraction, ...]:
    """Poly of degree < d -> exactly d coefficients, lowest degree first."""
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    return tuple(coeffs + [Fraction(0)] * (d - len(coeffs)))


def _reduce(coeffs: Sequence[Union[int, Fraction]], n: int) -> Tuple[Fraction, ...]:
    """Remainder of a polynomial in zeta_n modulo Phi_n."""
    return _from_poly(_to_poly(coeffs).rem(_modulus(n)), field_degree(n))


def _inverse_mod(coeffs: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    """s with s * a = 1 modulo Phi_n."""
    try:
        inverse = _to_poly(coeffs).invert(_modulus(n))
    except NotInvertible:
        raise NotInvertibleError("element shares a factor with the cyclotomic modulus") from None
    return _from_poly(inverse.rem(_modulus(n)), field_degree(n))


@dataclass(frozen=True, eq=False)
class Cyclotomic:
    """An element of Q(zeta_N) in canonical reduced form."""

    conductor: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.conductor < 1:
            raise ConstraintError(f"conductor must be positive, got {self.conductor}")
        if self.conductor > config.max_conductor:
            raise CapacityError(f"conductor {self.conductor} exceeds cap {config.max_conductor}")
        if len(self.coeffs) != field_degree(self.conductor):
            raise ConstraintError(
                f"Q(zeta_{self.conductor}) needs {field_degree(self.conductor)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # Constructors

    @classmethod
    def from_poly(cls, n: int, coeffs: Sequence[Union[int, Fraction]]) -> "Cyclotomic":
        """Reduce an arbitrary polynomial in zeta_n (lowest degree first)."""
        return cls(n, _reduce(coeffs, n))

    @classmethod
    def rational(cls, value: Union[int, Fraction], n: int = 1) -> "Cyclotomic":
        d = field_degree(n)
        return cls(n, (Fraction(value),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zero(cls, n: int = 1) -> "Cyclotomic":
        return cls.rational(0, n)

    @classmethod
    def one(cls, n: int = 1) -> "Cyclotomic":
        return cls.rational(1, n)

    @classmethod
    def root_of_unity(cls, n: int, e: int = 1) -> "Cyclotomic":
        """zeta_n ** e for any integer e."""
        e %= n
        d = field_degree(n)
        if e < d:
            coeffs = [Fraction(0)] * d
            coeffs[e] = Fraction(1)
            return cls(n, tuple(coeffs))
        coeffs = [Fraction(0)] * (e + 1)
        coeffs[e] = Fraction(1)
        return cls.from_poly(n, coeffs)

    # Predicates and views

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ConstraintError(f"{self} is not rational")
        return self.coeffs[0]

    def as_gaussian_rational(self) -> Optional[Tuple[Fraction, Fraction]]:
        """(re, im) when the element lies in Q(i), at whatever conductor it is stored; otherwise None."""
        if self.is_rational():
            return self.coeffs[0], Fraction(0)
        lifted = self.promote(math.lcm(self.conductor, 4))
        mirror = lifted.conjugate()
        re = (lifted + mirror) * Fraction(1, 2)
        im = (lifted - mirror) * Cyclotomic.root_of_unity(4, -1) * Fraction(1, 2)
        if re.is_rational() and im.is_rational():
            return re.as_rational(), im.as_rational()
        return None

    def is_real(self) -> bool:
        return self == self.conjugate()

    # Field structure

    def promote(self, m: int) -> "Cyclotomic":
        """Re-express in Q(zeta_m) via zeta_N -> zeta_m ** (m / N)."""
        n = self.conductor
        if m % n:
            raise ConstraintError(f"conductor {n} does not divide {m}")
        if m == n:
            return self
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0], m)
        step = m // n
        lifted = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            lifted[i * step] = c
        return Cyclotomic.from_poly(m, lifted)

    def _aligned(self, other: "Cyclotomic") -> Tuple["Cyclotomic", "Cyclotomic"]:
        if other.conductor == self.conductor:
            return self, other
        n = math.lcm(self.conductor, other.conductor)
        if n > config.max_conductor:
            raise CapacityError(f"common conductor {n} exceeds cap {config.max_conductor}")
        return self.promote(n), other.promote(n)

    def conjugate(self) -> "Cyclotomic":
        """Galois automorphism zeta_N -> zeta_N ** (N - 1), i.e. complex conjugation."""
        n = self.conductor
        if self.is_rational():
            return self
        image = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                image[(n - i) % n] += c
        return Cyclotomic.from_poly(n, image)

    def abs_squared(self) -> "Cyclotomic":
        return self * self.conjugate()

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise NotInvertibleError("division by zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0], self.conductor)
        return Cyclotomic(self.conductor, _inverse_mod(self.coeffs, self.conductor))

    def complex_embedding(self) -> complex:
        """Evaluate at zeta_N = exp(2 pi i / N) in double precision."""
        n = self.conductor
        if self.is_rational():
            return complex(float(self.coeffs[0]), 0.0)
        total = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.rect(1.0, 2 * math.pi * i / n)
        return total

    # Operators

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses conductors

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Cyclotomic":
        other = as_cyclotomic(other)
        a, b = self._aligned(other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-as_cyclotomic(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return as_cyclotomic(other) - self

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, tuple(c * other for c in self.coeffs))
        other = as_cyclotomic(other)
        if other.is_rational():
            return self * other.coeffs[0]
        if self.is_rational():
            return other * self.coeffs[0]
        a, b = self._aligned(other)
        product = (_to_poly(a.coeffs) * _to_poly(b.coeffs)).rem(_modulus(a.conductor))
        return Cyclotomic(a.conductor, _from_poly(product, field_degree(a.conductor)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        return self * as_cyclotomic(other).inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        return as_cyclotomic(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return format_cyclotomic(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {format_cyclotomic(self)!r})"


def as_cyclotomic(value: Union[int, Fraction, Cyclotomic]) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic.rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a cyclotomic number")


def common_conductor(values: Sequence[Cyclotomic]) -> int:
    n = 1
    for v in values:
        n = math.lcm(n, v.conductor)
    if n > config.max_conductor:
        raise CapacityError(f"common conductor {n} exceeds cap {config.max_conductor}")
    return n


def format_cyclotomic(a: Cyclotomic) -> str:
    """Textual form, highest power first: e.g. '1/2*z4+1/2', 'z3-1', '-3'."""
    pieces = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[i]
        if not c:
            continue
        if i == 0:
            pieces.append(str(c))
            continue
        base = f"z{a.conductor}" if i == 1 else f"z{a.conductor}^{i}"
        if c == 1:
            pieces.append(base)
        elif c == -1:
            pieces.append(f"-{base}")
        else:
            pieces.append(f"{c}*{base}")
    if not pieces:
        return "0"
    text = pieces[0]
    for piece in pieces[1:]:
        text += piece if piece.startswith("-") else f"+{piece}"
    return text


def as_root_plus_rational(a: Cyclotomic) -> Optional[Tuple[int, Fraction]]:
    """
    (e, c) with a = zeta_N^e + c and 0 < e < N, smallest e first; None if no such form.

    Any solution satisfies sin(2 pi e / N) = Im(a), so the embedding leaves
    at most a handful of candidates and each is checked exactly.
    """
    n = a.conductor
    if a.is_rational():
        return None
    imag = a.complex_embedding().imag
    if abs(imag) > 1 + 1e-9:
        return None
    theta = math.asin(max(-1.0, min(1.0, imag)))
    candidates = set()
    for angle in (theta, math.pi - theta):
        centre = round(angle * n / (2 * math.pi))
        candidates.update((centre + step) % n for step in (-1, 0, 1))
    for e in sorted(candidates - {0}):
        rest = a - Cyclotomic.root_of_unity(n, e)
        if rest.is_rational():
            return e, rest.as_rational()
    return None


def format_root_form(a: Cyclotomic) -> str:
    """'z3^2-1' when a is a root of unity plus a rational, else the reduced form."""
    found = as_root_plus_rational(a)
    if found is None:
        return format_cyclotomic(a)
    e, c = found
    text = f"z{a.conductor}" if e == 1 else f"z{a.conductor}^{e}"
    if c > 0:
        text += f"+{c}"
    elif c < 0:
        text += f"-{-c}"
    return text


def encode_cyclotomic(a: Cyclotomic) -> dict:
    """Structured form: conductor plus the coefficient list as 'p/q' strings."""
    return {
        "conductor": a.conductor,
        "coeffs": [f"{c.numerator}/{c.denominator}" for c in a.coeffs],
    }


def decode_cyclotomic(record: dict) -> Cyclotomic:
    return Cyclotomic(int(record["conductor"]), tuple(Fraction(c) for c in record["coeffs"]))
