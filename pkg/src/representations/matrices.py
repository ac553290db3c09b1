"""Dense exact matrices over cyclotomic fields, with rank and span computations."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.algebra_cs.algebra import Scalar
from src.exact_arith import Cyclotomic, as_cyclotomic, format_cyclotomic, format_root_form
from src.utils.errors import ConstraintError


@dataclass(frozen=True, eq=False)
class Matrix:
    entries: Tuple[Tuple[Cyclotomic, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ConstraintError("matrix must have at least one row and column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ConstraintError("matrix rows differ in length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "Matrix":
        return cls(tuple(tuple(as_cyclotomic(c) for c in row) for row in rows))

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls.from_rows([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, k: int) -> "Matrix":
        return cls.diag([1] * k)

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "Matrix":
        k = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Cyclotomic:
        i, j = index
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.entries for c in row)

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            c.is_zero() for i, row in enumerate(self.entries) for j, c in enumerate(row) if i != j
        )

    def diagonal(self) -> List[Cyclotomic]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    __hash__ = None

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ConstraintError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(tuple(tuple(a * c for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ConstraintError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = list(zip(*other.entries))
        product = []
        for row in self.entries:
            out = []
            for col in columns:
                total = Cyclotomic.zero()
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                out.append(total)
            product.append(tuple(out))
        return Matrix(tuple(product))

    __mul__ = __matmul__

    def __pow__(self, exponent: int) -> "Matrix":
        if not self.is_square():
            raise ConstraintError("only square matrices have powers")
        if exponent < 0:
            raise ConstraintError("negative matrix powers are not supported")
        result = Matrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    def flatten(self) -> List[Cyclotomic]:
        return [c for row in self.entries for c in row]

    def rank(self) -> int:
        basis = EchelonBasis()
        for row in self.entries:
            basis.add(row)
        return basis.dimension

    def apply_row(self, v: Sequence[Scalar]) -> Tuple[Cyclotomic, ...]:
        """Row vector times matrix, v @ M."""
        return (Matrix.from_rows([v]) @ self).entries[0]

    def apply_column(self, v: Sequence[Scalar]) -> Tuple[Cyclotomic, ...]:
        """Matrix times column vector, M @ v."""
        return tuple(row[0] for row in (self @ Matrix.from_rows([[c] for c in v])).entries)

    def __str__(self) -> str:
        return format_matrix(self)


class EchelonBasis:
    """
    Incrementally maintained row-echelon basis of a subspace of K^d.

    Each stored row is normalized to a leading 1 at its pivot column and
    every other stored row is zero in that column, so reducing a candidate
    is one pass over the pivots.
    """

    def __init__(self):
        self.rows: List[List[Cyclotomic]] = []
        self.pivots: List[int] = []

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence[Union[Cyclotomic, int]]) -> List[Cyclotomic]:
        reduced = [as_cyclotomic(c) for c in vector]
        for row, pivot in zip(self.rows, self.pivots):
            factor = reduced[pivot]
            if factor:
                reduced = [a - factor * b if b else a for a, b in zip(reduced, row)]
        return reduced

    def add(self, vector: Sequence[Union[Cyclotomic, int]]) -> bool:
        """Insert vector; False when it already lies in the span."""
        reduced = self.reduce(vector)
        pivot = next((i for i, c in enumerate(reduced) if c), None)
        if pivot is None:
            return False
        inverse = reduced[pivot].inverse()
        reduced = [c * inverse for c in reduced]
        for index, row in enumerate(self.rows):
            factor = row[pivot]
            if factor:
                self.rows[index] = [a - factor * b if b else a for a, b in zip(row, reduced)]
        self.rows.append(reduced)
        self.pivots.append(pivot)
        return True


def span_dimension(generators: Sequence[Matrix], max_length: Optional[int] = None) -> int:
    """
    Dimension of the span of all products of generators of length <= max_length,
    the identity included.

    Only products that enlarge the span are extended by a further generator:
    a dependent product w satisfies w g in span(b g) for the basis words b.
    """
    if not generators:
        raise ConstraintError("at least one generator is required")
    k = generators[0].rows
    if any(not g.is_square() or g.rows != k for g in generators):
        raise ConstraintError(f"generators must all be {k}x{k}")
    max_length = k * k if max_length is None else max_length
    identity = Matrix.identity(k)
    basis = EchelonBasis()
    basis.add(identity.flatten())
    frontier = [identity]
    for _ in range(max_length):
        if basis.dimension == k * k or not frontier:
            break
        next_frontier = []
        for word in frontier:
            for g in generators:
                candidate = word @ g
                if basis.add(candidate.flatten()):
                    next_frontier.append(candidate)
        frontier = next_frontier
    return basis.dimension


def is_irreducible(mats: Sequence[Matrix]) -> bool:
    """
    Burnside's criterion: k x k generators act irreducibly over an
    algebraically closed field iff the algebra they generate is all of M_k.
    """
    k = mats[0].rows if mats else 0
    return span_dimension(mats) == k * k


def format_matrix(m: Matrix) -> str:
    """
    'diag(a, b)' for diagonal matrices of size > 1, else '[[a, b], [c, d]]'.

    An entry that is a root of unity plus a rational prints as 'z3^2-1'.
    """
    if m.is_diagonal() and m.rows > 1:
        return "diag(" + ", ".join(format_root_form(c) for c in m.diagonal()) + ")"
    if m.rows == 1 and m.cols == 1:
        return format_root_form(m.entries[0][0])
    return "[" + ", ".join(
        "[" + ", ".join(format_root_form(c) for c in row) + "]" for row in m.entries
    ) + "]"


def encode_matrix(m: Matrix) -> List[List[str]]:
    return [[format_cyclotomic(c) for c in row] for row in m.entries]
