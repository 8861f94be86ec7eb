"""Z-gradings from diagonal elements, goodness tests, and centralizers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix, kernel_basis, rank, solve
from .partitions import (NotOrthosymplectic, is_orthosymplectic,
                         multiplicities)
from .superalgebra import EVEN, ODD, adjoint_matrix, superbracket


class NonIntegralGrading(ValueError):
    pass


class OddGrading(ValueError):
    pass


class NoSolution(ValueError):
    pass


@dataclass
class Grading:
    ambient: object
    H: object                      # diagonal AlgebraElement
    degrees: tuple                 # integer ad-H eigenvalue per basis element

    def key(self):
        """Degree map fingerprint used for deduplication."""
        return self.degrees

    def component(self, j):
        """Basis indices of g(j)."""
        return [i for i, d in enumerate(self.degrees) if d == j]

    def is_even(self):
        return all(d % 2 == 0 for d in self.degrees)

    def to_json(self):
        diag = [self.H.matrix[i, i] for i in range(self.ambient.size)]
        return {"H": [_rat_str(x) for x in diag],
                "degrees": {str(i): d for i, d in enumerate(self.degrees)}}


def _rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else \
        "%d/%d" % (x.numerator, x.denominator)


def grading_from(R, H):
    """Grading defined by ad H; every homogeneous basis element must be an
    eigenvector with integer eigenvalue."""
    hmat = H.matrix
    degrees = []
    for b in R.basis:
        lam = None
        bm = b.matrix
        for a in range(R.size):
            for c in range(R.size):
                if bm[a, c]:
                    val = hmat[a, a] - hmat[c, c]
                    if lam is None:
                        lam = val
                    elif lam != val:
                        raise NonIntegralGrading(
                            "basis element is not an ad-H eigenvector")
        if lam is None:
            lam = Fraction(0)
        if lam.denominator != 1:
            raise NonIntegralGrading("non-integer degree %s" % lam)
        degrees.append(int(lam))
    return Grading(R, H, tuple(degrees))


@dataclass
class Sl2Triple:
    e: object
    f: object
    h: object

    def verify(self):
        ok = (superbracket(self.e, self.f) - self.h).is_zero() \
            and (superbracket(self.h, self.e) - self.e.scale(2)).is_zero() \
            and (superbracket(self.h, self.f) + self.f.scale(2)).is_zero()
        return ok


@dataclass
class CentralizerReport:
    evenDim: int
    oddDim: int
    basis: list
    blockTypes: list = field(default_factory=list)


def _parity_kernel(R, adjoints, parity):
    """Kernel vectors of the stacked adjoint maps restricted to one parity."""
    idx = [i for i, p in enumerate(R.basis_parities) if p == parity]
    if not idx:
        return []
    rows = []
    for ad in adjoints:
        for r in range(ad.rows):
            rows.append([ad[r, j] for j in idx])
    kern = kernel_basis(Matrix.from_rows(rows))
    out = []
    for vec in kern:
        full = [Fraction(0)] * R.dim
        for t, j in enumerate(idx):
            full[j] = vec[t]
        out.append(full)
    return out


def _element_from_coords(R, coords):
    mat = Matrix.zero(R.size, R.size)
    for j, c in enumerate(coords):
        if c:
            mat = mat + R.basis[j].matrix.scale(c)
    return R.element(mat)


def centralizer(R, e):
    """ker(ad e), split by parity."""
    ad = adjoint_matrix(e)
    even = _parity_kernel(R, [ad], EVEN)
    odd = _parity_kernel(R, [ad], ODD)
    basis = [_element_from_coords(R, v) for v in even + odd]
    return CentralizerReport(len(even), len(odd), basis)


def dim_formula_gl(sp):
    """Closed-form centralizer dimensions for gl(m|n)."""
    p, q = sp.p, sp.q
    even = sum(min(a, b) for a in p for b in p) \
        + sum(min(a, b) for a in q for b in q)
    odd = 2 * sum(min(a, b) for a in p for b in q)
    return even, odd


def dim_formula_osp(sp):
    """Closed-form centralizer dimensions for osp(m|2n); the symplectic
    part is read with Sum(q) = 2n."""
    if not is_orthosymplectic(sp):
        raise NotOrthosymplectic(f"{sp} is not orthosymplectic")
    p, q = sp.p, sp.q
    so_part = Fraction(sp.m, 2) + sum((i - 1) * v for i, v in enumerate(p, 1)) \
        - Fraction(sum(1 for v in p if v % 2 == 1), 2)
    sp_part = Fraction(sp.n, 2) + sum((j - 1) * v for j, v in enumerate(q, 1)) \
        + Fraction(sum(1 for v in q if v % 2 == 1), 2)
    even = so_part + sp_part
    assert even.denominator == 1
    odd = sum(min(a, b) for a in p for b in q)
    return int(even), odd


def complete_sl2(R, e, h):
    """Find f completing (e, h) to an sl2-triple, by a linear solve in the
    (-2)-eigenspace of ad h."""
    hmat = h.matrix
    candidates = []
    for j, b in enumerate(R.basis):
        if R.basis_parities[j] != EVEN:
            continue
        bm = b.matrix
        lam = None
        ok = True
        for a in range(R.size):
            for c in range(R.size):
                if bm[a, c]:
                    val = hmat[a, a] - hmat[c, c]
                    if lam is None:
                        lam = val
                    elif lam != val:
                        ok = False
        if ok and lam == -2:
            candidates.append(b)
    if not candidates:
        if e.is_zero() and h.is_zero():
            return Sl2Triple(e, R.zero(), h)
        raise NoSolution("no (-2)-eigenspace to search")
    cols = []
    for b in candidates:
        br = superbracket(e, b)
        cols.append([br.matrix[a, c] for a in range(R.size)
                     for c in range(R.size)])
    A = Matrix.from_rows(cols).transpose()
    target = [hmat[a, c] for a in range(R.size) for c in range(R.size)]
    x = solve(A, target)
    if x is None:
        raise NoSolution("(e, h) does not complete to an sl2-triple")
    f = R.zero()
    for c, b in zip(x, candidates):
        if c:
            f = f + b.scale(c)
    triple = Sl2Triple(e, f, h)
    assert triple.verify()
    return triple


def predicted_block_types(R, sp):
    """Factor types of the sl2-centralizer from part multiplicities.

    gl: one gl(m_t|n_t) per distinct part value t.  osp: osp(a|b) per
    distinct value, with (a, b) = (p-mult, q-mult) for odd values and
    (q-mult, p-mult) for even values.
    """
    pm = dict(multiplicities(sp.p))
    qm = dict(multiplicities(sp.q))
    values = sorted(set(pm) | set(qm), reverse=True)
    out = []
    for v in values:
        a, b = pm.get(v, 0), qm.get(v, 0)
        if R.kind == "gl":
            out.append(("gl", a, b))
        else:
            out.append(("osp", a, b) if v % 2 == 1 else ("osp", b, a))
    return out


def block_type_dim(t):
    kind, a, b = t
    if kind == "gl":
        return (a + b) ** 2
    return a * (a - 1) // 2 + b * (b + 1) // 2 + a * b


def s_centralizer(R, triple, sp=None):
    """Simultaneous centralizer of {e, f, h}, with predicted factor types
    when the orbit partition is supplied."""
    ads = [adjoint_matrix(triple.e), adjoint_matrix(triple.f),
           adjoint_matrix(triple.h)]
    even = _parity_kernel(R, ads, EVEN)
    odd = _parity_kernel(R, ads, ODD)
    basis = [_element_from_coords(R, v) for v in even + odd]
    types = predicted_block_types(R, sp) if sp is not None else []
    return CentralizerReport(len(even), len(odd), basis, types)


def _support_degrees(g, coords):
    return [g.degrees[j] for j, c in enumerate(coords) if c]


def is_good(g, e):
    """Kernel criterion: e in g(2) and ker(ad e) supported in degrees >= 0.

    Valid because ad e is degree-homogeneous, so every degree component of
    a kernel vector is again in the kernel.
    """
    R = g.ambient
    ec = R.coords(e)
    if ec is None or any(g.degrees[j] != 2 for j, c in enumerate(ec) if c):
        return False
    if e.is_zero() and any(d != 0 for d in g.degrees):
        return False
    ad = adjoint_matrix(e)
    for parity in (EVEN, ODD):
        for vec in _parity_kernel(R, [ad], parity):
            if any(d < 0 for d in _support_degrees(g, vec)):
                return False
    return True


def is_good_by_ranks(g, e):
    """Definition-level check: ad e injective g(j)->g(j+2) for j <= -1 and
    surjective for j >= -1."""
    R = g.ambient
    ec = R.coords(e)
    if ec is None or any(g.degrees[j] != 2 for j, c in enumerate(ec) if c):
        return False
    if e.is_zero() and any(d != 0 for d in g.degrees):
        return False
    ad = adjoint_matrix(e)
    degs = sorted(set(g.degrees))
    for j in degs:
        src = g.component(j)
        tgt = g.component(j + 2)
        sub = Matrix.from_rows([[ad[r, c] for c in src] for r in tgt]) \
            if src and tgt else Matrix.zero(len(tgt), max(len(src), 1))
        r = rank(sub) if src and tgt else 0
        if j <= -1 and r != len(src):
            return False
        if j >= -1 and r != len(tgt):
            return False
    return True


def is_richardson(g, e):
    """For an even grading: does [g_>=0, e] fill g_+?"""
    if not g.is_even():
        raise OddGrading("grading has odd degrees")
    R = g.ambient
    ad = adjoint_matrix(e)
    src = [i for i, d in enumerate(g.degrees) if d >= 0]
    tgt = [i for i, d in enumerate(g.degrees) if d > 0]
    if not tgt:
        return True
    if not src:
        return False
    sub = Matrix.from_rows([[ad[r, c] for c in src] for r in tgt])
    return rank(sub) == len(tgt)
