"""Dense exact linear algebra over the rationals.

ExactMatrix is an immutable dense matrix of ``fractions.Fraction`` entries.
Rank, kernel, image, solving, characteristic polynomial, generalized
eigenspaces for integer eigenvalues: everything is exact, no floating
point anywhere.  Integer work is routed through the elimination backend
(compiled if available).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import backend

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _row_to_int(row: tuple[Fraction, ...]) -> list[int]:
    d = 1
    for x in row:
        d = lcm(d, x.denominator)
    return [int(x * d) for x in row]


def _primitive(col: list[Fraction]) -> list[Fraction]:
    """Scale a rational vector to primitive integer form, first nonzero > 0."""
    d = 1
    for x in col:
        d = lcm(d, x.denominator)
    ints = [int(x * d) for x in col]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return [Fraction(0)] * len(col)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v // g) for v in ints]


def _int_kernel(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Primitive basis of the right kernel of an integer matrix."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ech, pivots = backend.echelon_int(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = Fraction(0)
            row = ech[r]
            for j in range(pc + 1, ncols):
                if row[j] and vec[j]:
                    s += row[j] * vec[j]
            vec[pc] = -s / row[pc]
        basis.append(_primitive(vec))
    return basis


class ExactMatrix:
    """Immutable dense matrix of arbitrary-precision rationals."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows, ncols: int | None = None):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        self._rows = data
        self.rows = len(data)
        if self.rows:
            self.cols = len(data[0])
            if any(len(r) != self.cols for r in data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if ncols is None else ncols

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns, nrows: int | None = None) -> "ExactMatrix":
        columns = list(columns)
        if not columns:
            if nrows is None:
                raise ValueError("need nrows for an empty column list")
            return cls([[] for _ in range(nrows)], ncols=0)
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)])

    # -- basic access ------------------------------------------------------

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._rows for x in row)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self._rows]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self._rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.cols, self._rows))

    def __repr__(self):
        if self.rows * self.cols > 36:
            return f"ExactMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            ncols=self.cols,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            ncols=self.cols,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-x for x in row] for row in self._rows], ncols=self.cols)

    def scale(self, c) -> "ExactMatrix":
        c = _as_fraction(c)
        return ExactMatrix([[c * x for x in row] for row in self._rows], ncols=self.cols)

    __mul__ = scale
    __rmul__ = scale

    def _shape_check(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        if other.cols == 0 or self.rows == 0:
            return ExactMatrix.zeros(self.rows, other.cols)
        if self.is_integer() and other.is_integer():
            a = [[int(x) for x in row] for row in self._rows]
            b = [[int(x) for x in row] for row in other._rows]
            return ExactMatrix(backend.matmul_int(a, b), ncols=other.cols)
        bt = list(zip(*other._rows)) if other.rows else []
        out = []
        for row in self._rows:
            out.append(
                [sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt]
            )
        return ExactMatrix(out, ncols=other.cols)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.cols, self.rows)
        return ExactMatrix(list(zip(*self._rows)), ncols=self.rows)

    def power(self, e: int) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative power")
        result = ExactMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return ExactMatrix(
            [[self._rows[i][j] for j in col_idx] for i in row_idx], ncols=len(col_idx)
        )

    # -- elimination-based operations -----------------------------------------

    def _int_rows(self) -> list[list[int]]:
        return [_row_to_int(row) for row in self._rows]

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        _, pivots = backend.echelon_int(self._int_rows())
        return len(pivots)

    def kernel(self) -> "ExactMatrix":
        """Basis of the right null space, one column per basis vector."""
        basis = _int_kernel(self._int_rows() if self.rows else [], self.cols)
        return ExactMatrix.from_columns(basis, nrows=self.cols)

    def column_space(self) -> "ExactMatrix":
        """Basis of the column space: the pivot columns of the matrix itself."""
        if self.rows == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.rows, 0)
        _, pivots = backend.echelon_int(self._int_rows())
        return self.submatrix(range(self.rows), pivots)

    image = column_space

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        """Reduced row echelon form over the rationals, with pivot columns."""
        m = [list(row) for row in self._rows]
        nrows, ncols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, nrows) if m[i][c] != 0), -1)
            if pr < 0:
                continue
            m[r], m[pr] = m[pr], m[r]
            piv = m[r][c]
            if piv != 1:
                m[r] = [x / piv for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return ExactMatrix(m, ncols=ncols), pivots

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Exact solution X of self @ X = rhs; raises if inconsistent.

        When the system is underdetermined the free variables are set to
        zero, so the result is deterministic.
        """
        if rhs.rows != self.rows:
            raise ValueError("rhs row count mismatch")
        aug = ExactMatrix(
            [list(r1) + list(r2) for r1, r2 in zip(self._rows, rhs._rows)],
            ncols=self.cols + rhs.cols,
        )
        red, pivots = aug.rref()
        for p in pivots:
            if p >= self.cols:
                raise ValueError("inconsistent linear system")
        sol = [[Fraction(0)] * rhs.cols for _ in range(self.cols)]
        for r, p in enumerate(pivots):
            for j in range(rhs.cols):
                sol[p][j] = red[r, self.cols + j]
        return ExactMatrix(sol, ncols=rhs.cols)

    # -- spectra -----------------------------------------------------------------

    def _hessenberg(self) -> list[list[Fraction]]:
        h = [list(row) for row in self._rows]
        n = self.rows
        for j in range(n - 2):
            pr = next((i for i in range(j + 1, n) if h[i][j] != 0), -1)
            if pr < 0:
                continue
            if pr != j + 1:
                h[j + 1], h[pr] = h[pr], h[j + 1]
                for row in h:
                    row[j + 1], row[pr] = row[pr], row[j + 1]
            piv = h[j + 1][j]
            for i in range(j + 2, n):
                if h[i][j]:
                    f = h[i][j] / piv
                    hi, hj1 = h[i], h[j + 1]
                    for t in range(j, n):
                        hi[t] -= f * hj1[t]
                    for row in h:
                        row[j + 1] += f * row[i]
        return h

    def charpoly(self) -> tuple[Fraction, ...]:
        """Coefficients of det(x I - self), low degree first, monic."""
        if not self.is_square:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.rows
        if n == 0:
            return (Fraction(1),)
        h = self._hessenberg()
        polys: list[list[Fraction]] = [[Fraction(1)]]
        for k in range(1, n + 1):
            prev = polys[k - 1]
            # (x - h[k-1][k-1]) * p_{k-1}
            pk = [Fraction(0)] + prev[:]
            a = h[k - 1][k - 1]
            for t in range(k):
                pk[t] -= a * prev[t]
            prod = Fraction(1)
            for m in range(k - 2, -1, -1):
                prod *= h[m + 1][m]
                if prod == 0:
                    break
                c = h[m][k - 1] * prod
                if c:
                    pm = polys[m]
                    for t in range(len(pm)):
                        pk[t] -= c * pm[t]
            polys.append(pk)
        return tuple(polys[n])

    def generalized_eigenspace(self, k: int) -> "ExactMatrix":
        """Basis of the generalized eigenspace for integer eigenvalue k.

        Computed as the kernel of (self - k I)**n with n the matrix size;
        the exponent is not tuned per eigenvalue.
        """
        if not self.is_square:
            raise ValueError("generalized eigenspace of a non-square matrix")
        n = self.rows
        if n == 0:
            return ExactMatrix.zeros(0, 0)
        shifted = [
            [x - (k if i == j else 0) for j, x in enumerate(row)]
            for i, row in enumerate(self._rows)
        ]
        d = 1
        for row in shifted:
            for x in row:
                d = lcm(d, x.denominator)
        base = [[int(x * d) for x in row] for row in shifted]
        power = _int_power(base, n)
        return ExactMatrix.from_columns(_int_kernel(power, n), nrows=n)

    def integer_eigenvalues(self) -> set[int]:
        """All k in Z with a nonzero kernel of (self - k I).

        Candidates come from the rational-root theorem applied to the exact
        characteristic polynomial; each is then confirmed by a kernel
        computation.
        """
        if not self.is_square:
            raise ValueError("eigenvalues of a non-square matrix")
        n = self.rows
        if n == 0:
            return set()
        coeffs = self.charpoly()
        s = 0
        while coeffs[s] == 0:
            s += 1
        tail = coeffs[s:]
        d = 1
        for c in tail:
            d = lcm(d, c.denominator)
        zcoeffs = [int(c * d) for c in tail]
        candidates = set()
        if s > 0:
            candidates.add(0)
        const = abs(zcoeffs[0])
        for div in _divisors(const):
            for r in (div, -div):
                if _poly_eval_int(zcoeffs, r) == 0:
                    candidates.add(r)
        confirmed = set()
        ident = ExactMatrix.identity(n)
        for r in sorted(candidates):
            shifted = self - ident.scale(r)
            if shifted.kernel().cols > 0:
                confirmed.add(r)
        return confirmed

    def integer_roots_with_multiplicity(self) -> tuple[dict[int, int], int]:
        """Integer roots of the characteristic polynomial with multiplicities.

        Returns (roots, residual_degree); residual_degree == 0 means the
        polynomial splits over Z.
        """
        coeffs = list(self.charpoly())
        roots: dict[int, int] = {}
        for r in sorted(self.integer_eigenvalues()):
            while True:
                quot, rem = _poly_divmod_linear(coeffs, r)
                if rem != 0:
                    break
                coeffs = quot
                roots[r] = roots.get(r, 0) + 1
        return roots, len(coeffs) - 1


def _int_power(base: list[list[int]], e: int) -> list[list[int]]:
    n = len(base)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            result = backend.matmul_int(result, base)
        e >>= 1
        if e:
            base = backend.matmul_int(base, base)
    return result


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _poly_eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_divmod_linear(coeffs: list[Fraction], r: int):
    """Divide a polynomial (low-first coefficients) by (x - r)."""
    n = len(coeffs) - 1
    quot = [Fraction(0)] * n
    carry = Fraction(0)
    for k in range(n - 1, -1, -1):
        carry = coeffs[k + 1] + r * carry
        quot[k] = carry
    rem = coeffs[0] + r * carry
    return quot, rem
