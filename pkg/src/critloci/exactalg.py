"""Exact arithmetic kernel: Gaussian-rational scalars, dense matrices,
sparse multivariate polynomials, and symmetric quadratic forms.

Everything here is exact; there are no floats and no tolerances anywhere.
Linear algebra uses fraction-free (Bareiss-style) forward elimination with
deterministic pivoting (first nonzero entry in column order), so identical
inputs always produce identical bases.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence


class Scalar:
    """A Gaussian rational a + b*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    @staticmethod
    def _lift(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    def __add__(self, other):
        other = Scalar._lift(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar._lift(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = Scalar._lift(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = Scalar._lift(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return Scalar.coerce(other).__truediv__(self)

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm(self) -> "Scalar":
        """s * conj(s); always has zero imaginary part and re >= 0."""
        return Scalar(self.re * self.re + self.im * self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"Scalar({self})"

    def to_json(self):
        if self.im == 0:
            return str(self.re)
        return {"re": str(self.re), "im": str(self.im)}

    @staticmethod
    def from_json(data) -> "Scalar":
        if isinstance(data, dict):
            return Scalar(Fraction(data.get("re", 0)), Fraction(data.get("im", 0)))
        if isinstance(data, int):
            return Scalar(data)
        if isinstance(data, str):
            return Scalar.parse(data)
        raise ValueError(f"cannot read Scalar from {data!r}")

    _PATTERN = _re.compile(
        r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*"
        r"(?P<im>[+-]\s*\d+(?:/\d+)?|[+-])?\s*(?P<i>i)?\s*$"
    )

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse "p/q", "a+bi", "-i", "2i" and friends."""
        m = Scalar._PATTERN.match(text)
        if not m or (m.group("im") and not m.group("i")):
            raise ValueError(f"cannot parse Scalar from {text!r}")
        re_part, im_part, has_i = m.group("re"), m.group("im"), m.group("i")
        if has_i:
            if im_part is None:
                # forms like "i", "2i", "-1/2i": the 're' capture is the im part
                im_part, re_part = (re_part or "+"), None
            im_part = im_part.replace(" ", "")
            if im_part in ("+", "-"):
                im_part += "1"
            return Scalar(Fraction(re_part) if re_part else 0, Fraction(im_part))
        if re_part is None:
            raise ValueError(f"cannot parse Scalar from {text!r}")
        return Scalar(Fraction(re_part))


ZERO = Scalar(0)
ONE = Scalar(1)


def _to_scalar_row(row) -> tuple:
    return tuple(Scalar.coerce(v) for v in row)


class Matrix:
    """Dense matrix over Scalar. Immutable after construction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        grid = tuple(_to_scalar_row(row) for row in entries)
        if not grid:
            raise ValueError("matrix needs at least one row")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows in matrix")
        self.rows = len(grid)
        self.cols = width
        self.entries = grid

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(n: int, i: int, j: int) -> "Matrix":
        """The elementary matrix with a single 1 in position (i, j)."""
        return Matrix([[ONE if (r, c) == (i, j) else ZERO for c in range(n)] for r in range(n)])

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        vals = _to_scalar_row(values)
        n = len(vals)
        return Matrix([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def block_diagonal(blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        grid = [[ZERO] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    grid[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        return Matrix(grid)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"]) -> "Matrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ValueError("vstack needs equal column counts")
        return Matrix([row for b in blocks for row in b.entries])

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-v for v in row] for row in self.entries])

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def scale(self, s) -> "Matrix":
        s = Scalar.coerce(s)
        return Matrix([[s * v for v in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def conj(self) -> "Matrix":
        return Matrix([[v.conj() for v in row] for row in self.entries])

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, vec: Sequence) -> tuple:
        vec = _to_scalar_row(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(
                (self.entries[i][k] * vec[k] for k in range(self.cols) if vec[k]),
                start=ZERO,
            )
            for i in range(self.rows)
        )

    # -- elimination ---------------------------------------------------

    def _echelon(self):
        """Fraction-free forward elimination.

        Returns (grid, pivots) where grid is an upper-echelon copy of the
        matrix and pivots is the list of (row, col) pivot positions.  Pivot
        choice is the first row with a nonzero entry, scanning columns left
        to right, which makes the result deterministic.
        """
        grid = [list(row) for row in self.entries]
        pivots = []
        prev = ONE
        r = 0
        for c in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if not grid[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
            p = grid[r][c]
            for i in range(r + 1, self.rows):
                if grid[i][c].is_zero():
                    # keep the Bareiss rescale so later exact divisions hold
                    for j in range(c + 1, self.cols):
                        if not grid[i][j].is_zero():
                            grid[i][j] = p * grid[i][j] / prev
                    continue
                q = grid[i][c]
                for j in range(c + 1, self.cols):
                    grid[i][j] = (p * grid[i][j] - q * grid[r][j]) / prev
                grid[i][c] = ZERO
            pivots.append((r, c))
            prev = p
            r += 1
            if r == self.rows:
                break
        return grid, pivots

    def _int_grid(self):
        """Plain-int copy of the entries, or None if any entry is not a rational integer."""
        out = []
        for row in self.entries:
            int_row = []
            for v in row:
                if v.im != 0 or v.re.denominator != 1:
                    return None
                int_row.append(v.re.numerator)
            out.append(int_row)
        return out

    def rank(self) -> int:
        ints = self._int_grid()
        if ints is not None:
            try:
                return _int_rank(ints, self.cols)
            except _InexactDivision:
                pass
        return len(self._echelon()[1])

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        grid = [list(row) for row in self.entries]
        prev = ONE
        sign = 1
        for k in range(self.rows):
            pivot_row = None
            for i in range(k, self.rows):
                if not grid[i][k].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return ZERO
            if pivot_row != k:
                grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
                sign = -sign
            p = grid[k][k]
            for i in range(k + 1, self.rows):
                q = grid[i][k]
                for j in range(k + 1, self.rows):
                    grid[i][j] = (p * grid[i][j] - q * grid[k][j]) / prev
                grid[i][k] = ZERO
            prev = p
        d = grid[self.rows - 1][self.rows - 1]
        return d if sign > 0 else -d

    def kernel_basis(self) -> list:
        """Exact basis of the right null space, one vector per free column."""
        grid, pivots = self._echelon()
        pivot_cols = [c for _, c in pivots]
        pivot_set = set(pivot_cols)
        free_cols = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for r in range(len(pivots) - 1, -1, -1):
                c = pivot_cols[r]
                if c > f:
                    continue
                acc = ZERO
                for j in range(c + 1, self.cols):
                    if not vec[j].is_zero() and not grid[r][j].is_zero():
                        acc = acc + grid[r][j] * vec[j]
                if not acc.is_zero():
                    vec[c] = -acc / grid[r][c]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        grid = [list(row) + list(Matrix.identity(n).entries[i]) for i, row in enumerate(self.entries)]
        r = 0
        for c in range(n):
            pivot_row = None
            for i in range(r, n):
                if not grid[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                raise ValueError("matrix is singular")
            grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
            p = grid[r][c]
            grid[r] = [v / p for v in grid[r]]
            for i in range(n):
                if i != r and not grid[i][c].is_zero():
                    q = grid[i][c]
                    grid[i] = [grid[i][j] - q * grid[r][j] for j in range(2 * n)]
            r += 1
        return Matrix([row[n:] for row in grid])

    def to_json(self):
        return [[v.to_json() for v in row] for row in self.entries]

    @staticmethod
    def from_json(data) -> "Matrix":
        return Matrix([[Scalar.from_json(v) for v in row] for row in data])

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


class _InexactDivision(ArithmeticError):
    pass


def _int_rank(grid: list, cols: int) -> int:
    """Bareiss rank over plain Python ints; grid is consumed.

    Every row below the pivot gets the full one-step update, including rows
    with a zero entry in the pivot column: the rescale by the pivot is what
    keeps each entry a bordered minor, so the division by the previous pivot
    stays exact.  Divisibility is asserted; the caller falls back to the
    field elimination if it ever fails.
    """
    rows = len(grid)
    prev = 1
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if grid[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        p = grid[r][c]
        row_r = grid[r]
        for i in range(r + 1, rows):
            row_i = grid[i]
            q = row_i[c]
            for j in range(c + 1, cols):
                num = p * row_i[j] - q * row_r[j]
                if num % prev:
                    raise _InexactDivision
                row_i[j] = num // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def solve_exact(a: Matrix, b: Sequence):
    """One exact solution of a*x = b, or None when the system is inconsistent.

    Requires a to have full column rank (solutions, when they exist, are
    unique); found by running the kernel computation on the augmented matrix.
    """
    b = _to_scalar_row(b)
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    augmented = Matrix([list(row) + [bv] for row, bv in zip(a.entries, b)])
    for vec in augmented.kernel_basis():
        t = vec[-1]
        if not t.is_zero():
            return tuple(-v / t for v in vec[:-1])
    return None


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """AB - BA for square matrices of equal size."""
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("commutator needs square matrices of equal size")
    return a @ b - b @ a


def matrix_from_columns(columns: Sequence[Sequence], length: int) -> Matrix:
    if not columns:
        raise ValueError("need at least one column")
    return Matrix([[Scalar.coerce(col[i]) for col in columns] for i in range(length)])


# -- quadratic forms ----------------------------------------------------


class QuadraticForm:
    """A symmetric Gram matrix; evaluation at v is v^T * gram * v."""

    __slots__ = ("dim", "gram")

    def __init__(self, gram: Matrix):
        if gram.rows != gram.cols:
            raise ValueError("Gram matrix must be square")
        if gram != gram.transpose():
            raise ValueError("Gram matrix must be symmetric")
        self.dim = gram.rows
        self.gram = gram

    def evaluate(self, vec: Sequence) -> Scalar:
        vec = _to_scalar_row(vec)
        if len(vec) != self.dim:
            raise ValueError("vector length does not match form dimension")
        acc = ZERO
        for i, vi in enumerate(vec):
            if vi.is_zero():
                continue
            row = self.gram.entries[i]
            for j, vj in enumerate(vec):
                if not vj.is_zero() and not row[j].is_zero():
                    acc = acc + vi * row[j] * vj
        return acc

    def pair(self, u: Sequence, v: Sequence) -> Scalar:
        """The symmetric bilinear pairing u^T * gram * v."""
        u = _to_scalar_row(u)
        gv = self.gram.apply(v)
        acc = ZERO
        for ui, wi in zip(u, gv):
            if not ui.is_zero() and not wi.is_zero():
                acc = acc + ui * wi
        return acc

    def in_radical(self, vec: Sequence) -> bool:
        return all(v.is_zero() for v in self.gram.apply(vec))

    def rank(self) -> int:
        return self.gram.rank()

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim


def form_restrict(q: QuadraticForm, subspace: Sequence[Sequence]) -> QuadraticForm:
    """Gram matrix of q restricted to the span of the given basis vectors."""
    vectors = [_to_scalar_row(v) for v in subspace]
    if not vectors:
        raise ValueError("restriction basis is empty")
    for v in vectors:
        if len(v) != q.dim:
            raise ValueError("basis vector length does not match form dimension")
    span = matrix_from_columns(vectors, q.dim)
    if span.rank() != len(vectors):
        raise ValueError("restriction basis is linearly dependent")
    images = [q.gram.apply(v) for v in vectors]
    gram = []
    for u in vectors:
        row = []
        for gv in images:
            acc = ZERO
            for a, b in zip(u, gv):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        gram.append(row)
    return QuadraticForm(Matrix(gram))


# -- sparse multivariate polynomials ------------------------------------


def _drl_cmp(a: tuple, b: tuple) -> int:
    """Degrevlex comparison; returns positive when a is the larger monomial."""
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


class Poly:
    """Sparse multivariate polynomial over Scalar with a fixed variable order."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Scalar.coerce(coeff)
                if len(exps) != len(self.variables):
                    raise ValueError("exponent vector length does not match variables")
                if not coeff.is_zero():
                    key = tuple(exps)
                    if key in clean:
                        total = clean[key] + coeff
                        if total.is_zero():
                            del clean[key]
                        else:
                            clean[key] = total
                    else:
                        clean[key] = coeff
        self.terms = clean

    @staticmethod
    def zero(variables) -> "Poly":
        return Poly(variables)

    @staticmethod
    def const(variables, value) -> "Poly":
        value = Scalar.coerce(value)
        n = len(tuple(variables))
        return Poly(variables, {(0,) * n: value} if not value.is_zero() else None)

    @staticmethod
    def var(variables, name) -> "Poly":
        variables = tuple(variables)
        idx = variables.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return Poly(variables, {exps: ONE})

    def _check_ring(self, other: "Poly"):
        if self.variables != other.variables:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.const(self.variables, other)
        self._check_ring(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            if exps in terms:
                total = terms[exps] + coeff
                if total.is_zero():
                    del terms[exps]
                else:
                    terms[exps] = total
            else:
                terms[exps] = coeff
        out = Poly.__new__(Poly)
        out.variables = self.variables
        out.terms = terms
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.const(self.variables, other)
        return self.__add__(-other)

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.variables = self.variables
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = Scalar.coerce(other)
            if s.is_zero():
                return Poly.zero(self.variables)
            out = Poly.__new__(Poly)
            out.variables = self.variables
            out.terms = {e: c * s for e, c in self.terms.items()}
            return out
        self._check_ring(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if key in terms:
                    total = terms[key] + c
                    if total.is_zero():
                        del terms[key]
                    else:
                        terms[key] = total
                else:
                    terms[key] = c
        out = Poly.__new__(Poly)
        out.variables = self.variables
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def derivative(self, name: str) -> "Poly":
        idx = self.variables.index(name)
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e == 0:
                continue
            key = tuple(v - 1 if i == idx else v for i, v in enumerate(exps))
            add = coeff * e
            if key in terms:
                terms[key] = terms[key] + add
            else:
                terms[key] = add
        return Poly(self.variables, terms)

    def evaluate(self, values: dict) -> Scalar:
        point = [Scalar.coerce(values[name]) for name in self.variables]
        acc = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(point, exps):
                for _ in range(e):
                    term = term * v
            acc = acc + term
        return acc

    def constant_term(self) -> Scalar:
        zero_key = (0,) * len(self.variables)
        return self.terms.get(zero_key, ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        """Terms in descending degrevlex order (the canonical presentation)."""
        return sorted(self.terms.items(), key=cmp_to_key(lambda a, b: _drl_cmp(a[0], b[0])), reverse=True)

    def leading_coefficient(self) -> Scalar:
        if self.is_zero():
            return ZERO
        return self.sorted_terms()[0][1]

    def sign_canonical(self) -> "Poly":
        """Either p or -p, normalized so the leading coefficient is 'positive'.

        Used when comparing generator sets where a global sign is irrelevant.
        """
        lc = self.leading_coefficient()
        if lc.re < 0 or (lc.re == 0 and lc.im < 0):
            return -self
        return self

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(self.variables, exps)
                if e
            )
            if mono and coeff == ONE:
                parts.append(mono)
                continue
            if mono and coeff == Scalar(-1):
                parts.append(f"-{mono}")
                continue
            c = str(coeff)
            if "+" in c[1:] or "-" in c[1:]:
                c = f"({c})"
            parts.append(f"{c}*{mono}" if mono else c)
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


# -- polynomial matrices (plain nested tuples of Poly) -------------------


def pmat(entries) -> tuple:
    return tuple(tuple(row) for row in entries)


def pmat_zero(rows: int, cols: int, variables) -> tuple:
    z = Poly.zero(variables)
    return tuple(tuple(z for _ in range(cols)) for _ in range(rows))


def pmat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def pmat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def pmat_neg(a) -> tuple:
    return tuple(tuple(-x for x in row) for row in a)


def pmat_scale(a, s) -> tuple:
    return tuple(tuple(x * s for x in row) for row in a)


def pmat_mul(a, b) -> tuple:
    rows, inner, cols = len(a), len(b), len(b[0])
    if len(a[0]) != inner:
        raise ValueError("polynomial matrix shapes do not compose")
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def pmat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def pmat_eval(a, values: dict) -> Matrix:
    return Matrix([[x.evaluate(values) for x in row] for row in a])


def pmat_commutator(a, b) -> tuple:
    return pmat_sub(pmat_mul(a, b), pmat_mul(b, a))


def pmat_trace(a) -> Poly:
    acc = None
    for i in range(len(a)):
        acc = a[i][i] if acc is None else acc + a[i][i]
    return acc


def span_rank(polys: Iterable[Poly]) -> int:
    """Rank of the linear span of a family of polynomials."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return 0
    monomials = sorted({e for p in polys for e in p.terms}, key=cmp_to_key(_drl_cmp))
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [ZERO] * len(monomials)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return Matrix(rows).rank()


def spans_equal(first: Sequence[Poly], second: Sequence[Poly]) -> bool:
    """Exact equality of linear spans of two finite polynomial families."""
    r1 = span_rank(first)
    r2 = span_rank(second)
    return r1 == r2 == span_rank(list(first) + list(second))
