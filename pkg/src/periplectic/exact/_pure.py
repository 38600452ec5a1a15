"""Pure-Python integer elimination kernels.

Reference implementations of the hot loops.  The compiled module
``_speedups`` mirrors these exactly (same pivot rule, same update), so both
backends produce identical echelon forms; the compiled one merely raises
OverflowError when an intermediate leaves 64 bits, and the caller retries
here with unbounded ints.
"""

from __future__ import annotations


def echelon(mat: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns the echelon matrix and the list of pivot columns.  Row order is
    deterministic: the pivot for each column is the first row, top to
    bottom, with a nonzero entry.
    """
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            if f:
                for j in range(c, ncols):
                    row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            elif prev != 1 or piv != 1:
                for j in range(c, ncols):
                    row_i[j] = piv * row_i[j] // prev
        pivots.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return m, pivots


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Product of two integer matrices."""
    n = len(a)
    k = len(b)
    p = len(b[0]) if k else 0
    bt = [[b[i][j] for i in range(k)] for j in range(p)]
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x and y:
                    s += x * y
            out_row.append(s)
        out.append(out_row)
    return out
