"""Matrix realizations of gl(m|n) and osp(m|2n).

gl(m|n) is all of End(V0 + V1) with the elementary-matrix basis.  For
osp(m|2n) the even part is the explicit Chevalley basis of so(m) x sp(2n)
and the odd part is computed as the kernel of the membership equations,
so the signs are guaranteed consistent with the chosen form phi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import LinearSpan, Matrix, kernel_basis

EVEN = 0
ODD = 1


class AmbientMismatch(ValueError):
    pass


@dataclass
class AlgebraElement:
    ambient: "Realization"
    matrix: Matrix

    def __post_init__(self):
        s = self.ambient.size
        assert self.matrix.rows == s and self.matrix.cols == s

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.ambient, self.matrix + other.matrix)

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.ambient, self.matrix - other.matrix)

    def __neg__(self):
        return AlgebraElement(self.ambient, -self.matrix)

    def scale(self, c):
        return AlgebraElement(self.ambient, self.matrix.scale(c))

    def _same(self, other):
        if other.ambient is not self.ambient:
            raise AmbientMismatch("elements live in different realizations")

    def parity_part(self, parity):
        """Projection onto the even (0) or odd (1) block part."""
        R = self.ambient
        out = Matrix.zero(R.size, R.size)
        for a in range(R.size):
            for b in range(R.size):
                if (R.index_parity(a) + R.index_parity(b)) % 2 == parity:
                    out[a, b] = self.matrix[a, b]
        return AlgebraElement(R, out)

    def parity(self):
        """0, 1, or None for a mixed (non-homogeneous) element."""
        even = not self.parity_part(ODD).matrix.is_zero()
        odd_zero = self.parity_part(ODD).matrix.is_zero()
        even_zero = self.parity_part(EVEN).matrix.is_zero()
        if odd_zero and even_zero:
            return EVEN
        if odd_zero:
            return EVEN
        if even_zero:
            return ODD
        return None

    def is_zero(self):
        return self.matrix.is_zero()


@dataclass
class Realization:
    kind: str              # "gl" or "osp"
    m: int                 # dim V0
    odd_dim: int           # dim V1: n for gl(m|n), 2n for osp(m|2n)
    labels: list           # V-basis labels in matrix-index order
    phi: Matrix = None     # form on V (osp only)
    basis: list = field(default_factory=list)        # homogeneous basis of g
    basis_parities: list = field(default_factory=list)
    _span: LinearSpan = None
    _index_of_label: dict = None

    @property
    def size(self):
        return self.m + self.odd_dim

    @property
    def dim(self):
        return len(self.basis)

    def index_parity(self, idx):
        return EVEN if idx < self.m else ODD

    def index(self, label):
        return self._index_of_label[label]

    def element(self, matrix):
        return AlgebraElement(self, matrix)

    def zero(self):
        return AlgebraElement(self, Matrix.zero(self.size, self.size))

    def E(self, label_i, label_j):
        """Matrix unit sending the basis vector of label_j to label_i."""
        mat = Matrix.zero(self.size, self.size)
        mat[self.index(label_i), self.index(label_j)] = Fraction(1)
        return AlgebraElement(self, mat)

    def diagonal(self, values_by_label):
        mat = Matrix.zero(self.size, self.size)
        for label, v in values_by_label.items():
            i = self.index(label)
            mat[i, i] = Fraction(v)
        return AlgebraElement(self, mat)

    def span(self):
        if self._span is None:
            self._span = LinearSpan([x.matrix.entries for x in self.basis])
        return self._span

    def coords(self, x):
        """Coordinates of x over the homogeneous basis (None if outside g)."""
        return self.span().coords(x.matrix.entries)

    def contains(self, x):
        return self.coords(x) is not None


def _block_parity(R, a, b):
    return (R.index_parity(a) + R.index_parity(b)) % 2


def supertrace(R, mat):
    s = Fraction(0)
    for i in range(R.size):
        s += mat[i, i] if i < R.m else -mat[i, i]
    return s


def superbracket(x, y):
    """[x, y] = xy - (-1)^{|x||y|} yx, extended bilinearly."""
    x._same(y)
    R = x.ambient
    out = Matrix.zero(R.size, R.size)
    for px in (EVEN, ODD):
        xp = x.parity_part(px)
        if xp.matrix.is_zero():
            continue
        for py in (EVEN, ODD):
            yp = y.parity_part(py)
            if yp.matrix.is_zero():
                continue
            ab = xp.matrix @ yp.matrix
            ba = yp.matrix @ xp.matrix
            term = ab - ba if (px * py) % 2 == 0 else ab + ba
            out = out + term
    return AlgebraElement(R, out)


def invariant_form(x, y):
    """Supertrace form (x, y) = str(xy)."""
    x._same(y)
    return supertrace(x.ambient, x.matrix @ y.matrix)


def build_gl(m, n):
    """gl(m|n) with index order 1..m even, m+1..m+n odd."""
    assert m >= 0 and n >= 0 and m + n >= 1
    labels = list(range(1, m + n + 1))
    R = Realization("gl", m, n, labels)
    R._index_of_label = {lab: i for i, lab in enumerate(labels)}
    for a in range(m + n):
        for b in range(m + n):
            R.basis.append(R.E(labels[a], labels[b]))
            R.basis_parities.append(_block_parity(R, a, b))
    return R


def is_member_osp(R, mat, parity):
    """Does mat satisfy phi(z u, v) = -(-1)^{parity |u|} phi(u, z v)?"""
    assert R.kind == "osp"
    G = R.phi
    s = R.size
    # z^T G + S G z == 0, with S = diag((-1)^{parity * |u|}) on rows
    left = mat.transpose() @ G
    right = G @ mat
    for b in range(s):
        sign = -1 if (parity and R.index_parity(b)) else 1
        for c in range(s):
            if left[b, c] + sign * right[b, c] != 0:
                return False
    return True


def _osp_odd_basis(R):
    """Kernel of the odd membership equations inside gl(m|2n)_1."""
    s = R.size
    positions = [(a, b) for a in range(s) for b in range(s)
                 if _block_parity(R, a, b) == ODD]
    pos_index = {ab: t for t, ab in enumerate(positions)}
    G = R.phi
    rows = []
    for b in range(s):
        sign = Fraction(-1 if R.index_parity(b) else 1)
        for c in range(s):
            row = [Fraction(0)] * len(positions)
            hit = False
            for a in range(s):
                # phi(z v_b, v_c): coefficient of z[a,b]
                if G[a, c] and (a, b) in pos_index:
                    row[pos_index[(a, b)]] += G[a, c]
                    hit = True
                # +(-1)^{|b|} phi(v_b, z v_c): coefficient of z[a,c]
                if G[b, a] and (a, c) in pos_index:
                    row[pos_index[(a, c)]] += sign * G[b, a]
                    hit = True
            if hit:
                rows.append(row)
    kern = kernel_basis(Matrix.from_rows(rows))
    out = []
    for vec in kern:
        mat = Matrix.zero(s, s)
        for t, (a, b) in enumerate(positions):
            mat[a, b] = vec[t]
        out.append(AlgebraElement(R, mat))
    return out


def build_osp(m, n):
    """osp(m|2n) inside gl(m|2n).

    V0 labels: 0 (m odd only), +-1..+-k with k = floor(m/2);
    V1 labels: +-(k+1)..+-(k+n).  phi(v_0,v_0)=2, phi(v_i,v_-j)=delta_ij.
    """
    assert m >= 1 and n >= 1
    k = m // 2
    even_labels = ([0] if m % 2 else []) \
        + list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    odd_labels = list(range(k + 1, k + n + 1)) \
        + [-i for i in range(k + 1, k + n + 1)]
    labels = even_labels + odd_labels
    R = Realization("osp", m, 2 * n, labels)
    R._index_of_label = {lab: i for i, lab in enumerate(labels)}

    G = Matrix.zero(R.size, R.size)
    if m % 2:
        G[R.index(0), R.index(0)] = Fraction(2)
    for i in range(1, k + 1):
        G[R.index(i), R.index(-i)] = Fraction(1)
        G[R.index(-i), R.index(i)] = Fraction(1)
    for i in range(k + 1, k + n + 1):
        G[R.index(i), R.index(-i)] = Fraction(1)
        G[R.index(-i), R.index(i)] = Fraction(-1)
    R.phi = G

    E = R.E
    even = []
    if m % 2:
        for i in range(1, k + 1):
            even.append(E(i, 0).scale(2) - E(0, -i))
            even.append(E(0, i) - E(-i, 0).scale(2))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            even.append(E(i, -j) - E(j, -i))
            even.append(E(-j, i) - E(-i, j))
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            even.append(E(i, j) - E(-j, -i))
    for i in range(k + 1, k + n + 1):
        for j in range(k + 1, k + n + 1):
            even.append(E(i, j) - E(-j, -i))
    for i in range(k + 1, k + n + 1):
        even.append(E(i, -i))
        even.append(E(-i, i))
    for i in range(k + 1, k + n + 1):
        for j in range(i + 1, k + n + 1):
            even.append(E(i, -j) + E(j, -i))
            even.append(E(-i, j) + E(-j, i))

    odd = _osp_odd_basis(R)
    expected_odd = 2 * m * n
    assert len(odd) == expected_odd, (len(odd), expected_odd)

    R.basis = even + odd
    R.basis_parities = [EVEN] * len(even) + [ODD] * len(odd)
    return R


def sigma_coefficient(R, a, b):
    """Coefficient of E_{a,b} in the Chevalley basis element containing it
    (0 when no even basis element involves E_{a,b})."""
    assert R.kind == "osp"
    k = R.m // 2
    in_so = abs(a) <= k and abs(b) <= k
    in_sp = abs(a) > k and abs(b) > k
    if not (in_so or in_sp):
        return Fraction(0)
    if in_so:
        if a == 0 and b == 0:
            return Fraction(0)
        if b == 0:
            return Fraction(2 if a > 0 else -2)
        if a == 0:
            return Fraction(1 if b > 0 else -1)
        if a > 0 and b > 0:
            return Fraction(1)
        if a < 0 and b < 0:
            return Fraction(-1)
        if a > 0 and b < 0:
            if a == -b:
                return Fraction(0)
            return Fraction(1 if a < -b else -1)
        # a < 0 < b
        if b == -a:
            return Fraction(0)
        return Fraction(1 if b < -a else -1)
    # sp block
    if a > 0 and b > 0:
        return Fraction(1)
    if a < 0 and b < 0:
        return Fraction(-1)
    return Fraction(1)


def adjoint_matrix(x):
    """Matrix of ad x on the homogeneous basis of its ambient algebra."""
    R = x.ambient
    cols = []
    for b in R.basis:
        bracket = superbracket(x, b)
        c = R.coords(bracket)
        if c is None:
            raise ValueError("bracket left the algebra; realization broken")
        cols.append(c)
    out = Matrix.zero(R.dim, R.dim)
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            out[i, j] = v
    return out
