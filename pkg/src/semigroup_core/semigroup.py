"""Normal forms x^m y^n in the semigroup generated by x and an invertible y with yx = xy^2."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Union

from src.utils.errors import CapacityError, ConstraintError, NotInvertibleError
from .config import config

# Letters of the word oracle; 'Y' stands for the inverse of y
LETTERS = ("x", "y", "Y")


@dataclass(frozen=True, order=True)
class SemigroupElement:
    """x^m y^n with m >= 0 and n an arbitrary-precision integer."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0:
            raise ConstraintError(f"x-degree must be nonnegative, got {self.m}")
        if self.m >= config.max_x_degree:
            raise CapacityError(f"x-degree {self.m} reaches cap {config.max_x_degree}")

    @classmethod
    def identity(cls) -> "SemigroupElement":
        return cls(0, 0)

    @classmethod
    def x(cls) -> "SemigroupElement":
        return cls(1, 0)

    @classmethod
    def y(cls, n: int = 1) -> "SemigroupElement":
        return cls(0, n)

    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    def __mul__(self, other: "SemigroupElement") -> "SemigroupElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_monomial(self)


def multiply(s: SemigroupElement, t: SemigroupElement) -> SemigroupElement:
    """x^m y^n . x^p y^q = x^(m+p) y^(n 2^p + q)."""
    return SemigroupElement(s.m + t.m, (s.n << t.m) + t.n)


def invert(s: SemigroupElement) -> SemigroupElement:
    if s.m:
        raise NotInvertibleError(f"{s} is not a unit: x-degree {s.m} > 0")
    return SemigroupElement(0, -s.n)


def word_to_normal_form(word: Union[str, Sequence[str]]) -> SemigroupElement:
    """
    Normal form of a word over x, y and y^-1 by rewriting.

    Blocks of y-powers are kept run-length encoded; a block y^a directly in
    front of an x is rewritten with y^a x -> x y^(2a), which is the rule
    yx -> xy^2 (or y^-1 x -> x y^-2) applied a times. Adjacent y-blocks merge,
    which performs the cancellation y y^-1 -> 1.

    Args:
        word: String or sequence over 'x', 'y', 'Y' (Y = y^-1)

    Returns:
        SemigroupElement: x^m y^n with all x's in front
    """
    items: List[Union[str, int]] = []
    for letter in word:
        if letter not in LETTERS:
            raise ConstraintError(f"unknown letter {letter!r}; expected one of {LETTERS}")
        if letter == "x":
            items.append("x")
        else:
            _push_power(items, 1 if letter == "y" else -1)

    rewritten = True
    while rewritten:
        rewritten = False
        for i in range(len(items) - 1):
            if isinstance(items[i], int) and items[i + 1] == "x":
                power = items[i]
                items[i:i + 2] = ["x"]
                _insert_power(items, i + 1, 2 * power)
                rewritten = True
                break

    m = sum(1 for item in items if item == "x")
    n = sum(item for item in items if isinstance(item, int))
    return SemigroupElement(m, n)


def _push_power(items: List[Union[str, int]], power: int) -> None:
    if items and isinstance(items[-1], int):
        items[-1] += power
        if items[-1] == 0:
            items.pop()
    elif power:
        items.append(power)


def _insert_power(items: List[Union[str, int]], index: int, power: int) -> None:
    if index < len(items) and isinstance(items[index], int):
        items[index] += power
        if items[index] == 0:
            del items[index]
    elif power:
        items.insert(index, power)


def word_of(s: SemigroupElement) -> str:
    """A word whose normal form is s (x's first, then y or Y letters)."""
    return "x" * s.m + ("y" * s.n if s.n >= 0 else "Y" * (-s.n))


def format_monomial(s: SemigroupElement) -> str:
    """'x^m*y^n' omitting exponent 1 and unit factors; the identity is '1'."""
    parts = []
    if s.m:
        parts.append("x" if s.m == 1 else f"x^{s.m}")
    if s.n:
        parts.append("y" if s.n == 1 else f"y^{s.n}")
    return "*".join(parts) if parts else "1"


def product_of(elements: Iterable[SemigroupElement]) -> SemigroupElement:
    result = SemigroupElement.identity()
    for s in elements:
        result = multiply(result, s)
    return result
