"""Dense row-major matrices of polynomials (small, exact).

A matrix is a tuple of row tuples.  Shapes carry explicit row/column
counts because zero-row or zero-column matrices occur constantly at the
ends of complexes; helpers therefore take the ring and both dimensions
where the entries alone cannot determine them.
"""

from __future__ import annotations

from .errors import ContextError
from .rings import PolyRing, Polynomial


def matrix(ring: PolyRing, rows) -> tuple:
    return tuple(tuple(ring.poly(e) for e in row) for row in rows)


def zero_matrix(ring: PolyRing, nrows: int, ncols: int) -> tuple:
    z = ring.zero()
    return tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))


def identity_matrix(ring: PolyRing, n: int) -> tuple:
    z, one = ring.zero(), ring.one()
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def scalar_matrix(ring: PolyRing, n: int, f: Polynomial) -> tuple:
    z = ring.zero()
    return tuple(tuple(f if i == j else z for j in range(n)) for i in range(n))


def shape(m, nrows=None) -> tuple:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    return rows, cols


def mat_mul(ring: PolyRing, a, b, inner: int | None = None) -> tuple:
    """a . b where a is (m x k) and b is (k x n).

    ``inner`` disambiguates k when one factor has zero rows.
    """
    m = len(a)
    k = len(a[0]) if m else (inner if inner is not None else len(b))
    if len(b) != k:
        raise ContextError(f"shape mismatch: inner {k} vs {len(b)}")
    n = len(b[0]) if b else 0
    zero = ring.zero()
    out = []
    for i in range(m):
        row = []
        for j in range(n):
            acc = zero
            for t in range(k):
                e = a[i][t]
                f = b[t][j]
                if e and f:
                    acc = acc + e * f
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_is_zero(m) -> bool:
    return all(not e for row in m for e in row)


def mat_neg(m) -> tuple:
    return tuple(tuple(-e for e in row) for row in m)


def mat_scale(m, f) -> tuple:
    return tuple(tuple(f * e for e in row) for row in m)


def transpose(ring: PolyRing, m, ncols: int | None = None) -> tuple:
    rows = len(m)
    cols = len(m[0]) if rows else (ncols or 0)
    return tuple(tuple(m[i][j] for i in range(rows)) for j in range(cols))


def block_matrix(ring: PolyRing, blocks, row_sizes, col_sizes) -> tuple:
    """Assemble a 2D grid of blocks; ``None`` means a zero block."""
    out = []
    for bi, rsize in enumerate(row_sizes):
        for r in range(rsize):
            row = []
            for bj, csize in enumerate(col_sizes):
                blk = blocks[bi][bj]
                if blk is None:
                    row.extend([ring.zero()] * csize)
                else:
                    row.extend(blk[r])
            out.append(tuple(row))
    return tuple(out)


def block_diag(ring: PolyRing, mats, row_sizes, col_sizes) -> tuple:
    grid = [[mats[i] if i == j else None for j in range(len(mats))]
            for i in range(len(mats))]
    return block_matrix(ring, grid, row_sizes, col_sizes)


def columns(m, nrows: int) -> list:
    """Matrix columns as free-module vectors (tuples of length nrows)."""
    if not m:
        return []
    return [tuple(m[i][j] for i in range(nrows)) for j in range(len(m[0]))]


def from_columns(ring: PolyRing, cols, nrows: int) -> tuple:
    return tuple(tuple(col[i] for col in cols) for i in range(nrows))


def kronecker_with_identity(ring: PolyRing, m, block: int, nrows: int,
                            ncols: int) -> tuple:
    """m (x) Id_block: entry m[i][j] becomes m[i][j] * Id_block."""
    zero = ring.zero()
    out = []
    for i in range(nrows):
        for r in range(block):
            row = []
            for j in range(ncols):
                e = m[i][j] if m else zero
                for c in range(block):
                    row.append(e if r == c else zero)
            out.append(tuple(row))
    return tuple(out)


def entries_homogeneous(m) -> bool:
    return all(e.is_homogeneous() for row in m for e in row)
