"""Column-sparse exact matrices.

Internal storage for module action matrices, which are large but very
sparse (a few entries per column).  Entries are Python ints or Fractions;
zeros are never stored.  Dense ExactMatrix blocks are extracted for the
actual linear algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import ExactMatrix


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[dict[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def from_dense(cls, m: ExactMatrix) -> "SparseMatrix":
        cols = []
        for j in range(m.cols):
            col = {}
            for i in range(m.rows):
                x = m[i, j]
                if x:
                    col[i] = int(x) if x.denominator == 1 else x
            cols.append(col)
        return cls(m.rows, m.cols, cols)

    def to_dense(self) -> ExactMatrix:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return ExactMatrix(rows, ncols=self.ncols)

    def set(self, i: int, j: int, v) -> None:
        if v:
            self.cols[j][i] = v
        else:
            self.cols[j].pop(i, None)

    def add_to(self, i: int, j: int, v) -> None:
        if not v:
            return
        col = self.cols[j]
        new = col.get(i, 0) + v
        if new:
            col[i] = new
        else:
            del col[i]

    def column(self, j: int) -> dict[int, object]:
        return self.cols[j]

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def matvec(self, x: dict[int, object]) -> dict[int, object]:
        """self @ x for a sparse column vector x (dict index -> value)."""
        out: dict[int, object] = {}
        for j, xj in x.items():
            for i, v in self.cols[j].items():
                new = out.get(i, 0) + v * xj
                if new:
                    out[i] = new
                else:
                    del out[i]
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        return SparseMatrix(
            self.nrows, other.ncols, [self.matvec(c) for c in other.cols]
        )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        cols = []
        for c1, c2 in zip(self.cols, other.cols):
            col = dict(c1)
            for i, v in c2.items():
                new = col.get(i, 0) + v
                if new:
                    col[i] = new
                else:
                    del col[i]
            cols.append(col)
        return SparseMatrix(self.nrows, self.ncols, cols)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseMatrix":
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(
            self.nrows,
            self.ncols,
            [{i: c * v for i, v in col.items()} for col in self.cols],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        for c1, c2 in zip(self.cols, other.cols):
            if len(c1) != len(c2):
                return False
            for i, v in c1.items():
                if Fraction(c2.get(i, 0)) != Fraction(v):
                    return False
        return True

    def __hash__(self):
        raise TypeError("SparseMatrix is unhashable")

    def block(self, row_idx: list[int], col_idx: list[int]) -> ExactMatrix:
        """Dense block on the given row and column index lists."""
        rpos = {i: t for t, i in enumerate(row_idx)}
        rows = [[0] * len(col_idx) for _ in row_idx]
        for t, j in enumerate(col_idx):
            for i, v in self.cols[j].items():
                p = rpos.get(i)
                if p is not None:
                    rows[p][t] = v
        return ExactMatrix(rows, ncols=len(col_idx))
