"""Exact dense linear algebra over the rationals.

Everything here is fraction-free: rows are scaled to integers and
eliminated with cross-multiplication, so there is no floating point
anywhere and all rank / kernel / solve answers are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Matrix:
    """Dense rational matrix, row-major storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [Fraction(x) for x in entries]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n):
        m = cls.zero(n, n)
        for i in range(n):
            m[i, i] = Fraction(1)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = Fraction(value)

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = Fraction(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        assert self.cols == other.rows
        n, k, m = self.rows, self.cols, other.cols
        out = [Fraction(0)] * (n * m)
        a, b = self.entries, other.entries
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for t in range(k):
                c = arow[t]
                if c:
                    brow = b[t * m:(t + 1) * m]
                    base = i * m
                    for j in range(m):
                        if brow[j]:
                            out[base + j] += c * brow[j]
        return Matrix(n, m, out)

    def transpose(self):
        out = Matrix.zero(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j, i] = self[i, j]
        return out

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def apply(self, vec):
        """Matrix-vector product, vec of length cols."""
        assert len(vec) == self.cols
        out = []
        for i in range(self.rows):
            s = Fraction(0)
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    s += self.entries[base + j] * v
            out.append(s)
        return out

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.rows, self.cols)


def _int_rows(M):
    """Rows of M scaled to coprime integers."""
    out = []
    for i in range(M.rows):
        row = M.row(i)
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _eliminate(rows, ncols):
    """Fraction-free forward elimination on integer rows (in place).

    Returns the list of pivot columns; after the call rows[:rank] are in
    echelon form with rows[i] pivoted at the i-th pivot column.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            q = rows[i][c]
            if not q:
                continue
            cur = rows[i]
            new = [p * cur[j] - q * prow[j] for j in range(ncols)]
            g = 0
            for v in new:
                g = gcd(g, v)
            if g > 1:
                new = [v // g for v in new]
            rows[i] = new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(M):
    """Rank of M over the rationals."""
    if M.rows == 0 or M.cols == 0:
        return 0
    rows = _int_rows(M)
    return len(_eliminate(rows, M.cols))


def kernel_basis(M):
    """Basis of the right null space of M, as exact column vectors.

    Each free column yields one vector; the returned vectors have a 1 in
    their free coordinate, so distinct kernel elements stay recognizable.
    """
    n = M.cols
    if n == 0:
        return []
    if M.rows == 0:
        basis = []
        for j in range(n):
            v = [Fraction(0)] * n
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    rows = _int_rows(M)
    pivots = _eliminate(rows, n)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        # back substitution over the echelon rows
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            row = rows[i]
            s = Fraction(0)
            for j in range(pc + 1, n):
                if row[j] and v[j]:
                    s += row[j] * v[j]
            v[pc] = -s / row[pc]
        basis.append(v)
    return basis


def solve(A, b):
    """A particular solution x of A x = b, or None if inconsistent."""
    assert len(b) == A.rows
    n = A.cols
    aug = Matrix.zero(A.rows, n + 1)
    for i in range(A.rows):
        for j in range(n):
            aug[i, j] = A[i, j]
        aug[i, n] = b[i]
    rows = _int_rows(aug)
    pivots = _eliminate(rows, n + 1)
    if n in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Fraction(0)] * n
    for i in range(len(pivots) - 1, -1, -1):
        pc = pivots[i]
        row = rows[i]
        s = Fraction(row[n])
        for j in range(pc + 1, n):
            if row[j] and x[j]:
                s -= row[j] * x[j]
        x[pc] = s / row[pc]
    return x


class LinearSpan:
    """Span of a list of vectors with exact coordinate extraction.

    Keeps a reduced echelon form together with the expression of each
    echelon row in the original generators, so coords() answers "write v
    in terms of the generators" without re-running elimination.
    """

    def __init__(self, vectors):
        self.ambient = len(vectors[0]) if vectors else 0
        self.nvec = len(vectors)
        # each item: (pivot_col, row_dict, coeff_dict)
        self._rows = []
        for idx, vec in enumerate(vectors):
            row = {j: Fraction(x) for j, x in enumerate(vec) if x}
            coeff = {idx: Fraction(1)}
            self._insert(row, coeff)

    @property
    def dim(self):
        return len(self._rows)

    def _reduce(self, row, coeff):
        for pc, prow, pcoeff in self._rows:
            c = row.get(pc)
            if c:
                for j, v in prow.items():
                    nv = row.get(j, Fraction(0)) - c * v
                    if nv:
                        row[j] = nv
                    elif j in row:
                        del row[j]
                for j, v in pcoeff.items():
                    nv = coeff.get(j, Fraction(0)) - c * v
                    if nv:
                        coeff[j] = nv
                    elif j in coeff:
                        del coeff[j]
        return row, coeff

    def _insert(self, row, coeff):
        row, coeff = self._reduce(row, coeff)
        if not row:
            return
        pc = min(row)
        inv = 1 / row[pc]
        row = {j: v * inv for j, v in row.items()}
        coeff = {j: v * inv for j, v in coeff.items()}
        # eliminate the new pivot from existing rows
        for k, (opc, orow, ocoeff) in enumerate(self._rows):
            c = orow.get(pc)
            if c:
                for j, v in row.items():
                    nv = orow.get(j, Fraction(0)) - c * v
                    if nv:
                        orow[j] = nv
                    elif j in orow:
                        del orow[j]
                for j, v in coeff.items():
                    nv = ocoeff.get(j, Fraction(0)) - c * v
                    if nv:
                        ocoeff[j] = nv
                    elif j in ocoeff:
                        del ocoeff[j]
        self._rows.append((pc, row, coeff))
        self._rows.sort(key=lambda t: t[0])

    def coords(self, vec):
        """Coefficients over the generators, or None if vec is outside."""
        row = {j: Fraction(x) for j, x in enumerate(vec) if x}
        coeff = {}
        row, coeff = self._reduce(row, coeff)
        if row:
            return None
        return [-coeff.get(i, Fraction(0)) for i in range(self.nvec)]

    def contains(self, vec):
        return self.coords(vec) is not None
