"""Dense exact linear algebra over the integers.

Everything here works on arbitrary-precision Python ints: multiplication,
powering, fraction-free determinants (Bareiss) and Smith normal form via
elimination with smallest-pivot selection.  No floating point, no modular
shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch


class IntMatrix:
    """Dense row-major matrix of Python ints.  Treat instances as immutable."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        rows = [list(r) for r in data]
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix needs at least one row and one column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DimensionMismatch("ragged rows")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"entries must be int, got {type(x).__name__}")
        self._data = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def to_lists(self) -> list[list[int]]:
        """Mutable deep copy of the entries."""
        return [row[:] for row in self._data]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self._data))

    def __repr__(self):
        if self.rows * self.cols <= 36:
            return f"IntMatrix({self._data!r})"
        return f"IntMatrix(<{self.rows}x{self.cols}>)"


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of the Smith normal form: d_1 | d_2 | ..., zeros at the end."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        for d in fs:
            if d < 0:
                raise ValueError("invariant factors must be nonnegative")
        for a, b in zip(fs, fs[1:]):
            if a == 0 and b != 0:
                raise ValueError("zero factors must come last")
            if a != 0 and b != 0 and b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bd = b._data
    ncols = b.cols
    out = []
    for arow in a._data:
        acc = [0] * ncols
        for t, left in enumerate(arow):
            if left:
                brow = bd[t]
                for j in range(ncols):
                    v = brow[j]
                    if v:
                        acc[j] += left * v
        out.append(acc)
    return IntMatrix(out)


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatch("shape mismatch in subtraction")
    return IntMatrix(
        [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a._data, b._data)]
    )


def mat_pow(m: IntMatrix, e: int) -> IntMatrix:
    """m**e by repeated squaring, e >= 0."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices can be powered")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntMatrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def determinant(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant needs a square matrix")
    a = m.to_lists()
    n = m.rows
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[t][t]
        rt = a[t]
        for i in range(t + 1, n):
            ri = a[i]
            lead = ri[t]
            for j in range(t + 1, n):
                # every division here is exact (Bareiss)
                ri[j] = (ri[j] * piv - lead * rt[j]) // prev
            ri[t] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _move_smallest_pivot(a, t, nr, nc) -> bool:
    """Swap the smallest-magnitude nonzero entry of a[t:,t:] into (t,t).

    Returns False when that submatrix is entirely zero.
    """
    best = 0
    bi = bj = -1
    for i in range(t, nr):
        row = a[i]
        for j in range(t, nc):
            v = row[j]
            if v:
                if v < 0:
                    v = -v
                if best == 0 or v < best:
                    best, bi, bj = v, i, j
                    if best == 1:
                        break
        if best == 1:
            break
    if best == 0:
        return False
    if bi != t:
        a[t], a[bi] = a[bi], a[t]
    if bj != t:
        for row in a:
            row[t], row[bj] = row[bj], row[t]
    return True

def _clear_cross(a, t, nr, nc) -> int:
    """Zero out row t and column t beyond the pivot; return the final pivot (> 0)."""
    while True:
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        piv = a[t][t]
        swapped = False
        for i in range(t + 1, nr):
            v = a[i][t]
            if not v:
                continue
            q = v // piv
            if q:
                rt = a[t]
                ri = a[i]
                for j in range(t, nc):
                    ri[j] -= q * rt[j]
            if a[i][t]:
                # remainder is a smaller pivot candidate
                a[t], a[i] = a[i], a[t]
                swapped = True
                break
        if swapped:
            continue
        for j in range(t + 1, nc):
            v = a[t][j]
            if not v:
                continue
            q = v // piv
            if q:
                for i in range(t, nr):
                    a[i][j] -= q * a[i][t]
            if a[t][j]:
                for i in range(t, nr):
                    a[i][t], a[i][j] = a[i][j], a[i][t]
                swapped = True
                break
        if not swapped:
            return piv


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form over Z.

    Elimination always pivots on the smallest-magnitude nonzero entry and
    repairs the divisibility chain by folding offending rows into the pivot
    row, so the returned diagonal satisfies d_1 | d_2 | ... with zeros last.
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    size = min(nr, nc)
    diag = []
    for t in range(size):
        if not _move_smallest_pivot(a, t, nr, nc):
            break
        while True:
            piv = _clear_cross(a, t, nr, nc)
            if piv == 1:
                break
            bad = -1
            for i in range(t + 1, nr):
                row = a[i]
                for j in range(t + 1, nc):
                    if row[j] % piv:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            rt = a[t]
            rb = a[bad]
            for j in range(t + 1, nc):
                rt[j] += rb[j]
        diag.append(piv)
    diag.extend([0] * (size - len(diag)))
    return SmithForm(tuple(diag))
