"""Root systems in epsilon/delta coordinates, marked bases, and the
reflection (Weyl groupoid) action.

Coordinates are (eps_1..eps_k, delta_1..delta_n) with the pairing
(eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij, mixed = 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from .superalgebra import EVEN, ODD


@dataclass(frozen=True)
class Root:
    coeffs: tuple          # integers over (eps_1..eps_k, delta_1..delta_n)
    parity: int            # EVEN or ODD

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs), self.parity)

    def plus(self, other, parity):
        return Root(tuple(a + b for a, b in
                          zip(self.coeffs, other.coeffs)), parity)


@dataclass
class RootSystem:
    kind: str
    eps_count: int
    delta_count: int
    roots: list

    def __post_init__(self):
        self.by_coeffs = {r.coeffs: r for r in self.roots}

    def form(self, a, b):
        k = self.eps_count
        ca = a.coeffs if isinstance(a, Root) else a
        cb = b.coeffs if isinstance(b, Root) else b
        return sum(ca[i] * cb[i] for i in range(k)) \
            - sum(ca[i] * cb[i] for i in range(k, len(ca)))

    def find(self, coeffs):
        return self.by_coeffs.get(tuple(coeffs))


def is_isotropic(system, alpha):
    return system.form(alpha, alpha) == 0


def _unit(total, i, c=1):
    v = [0] * total
    v[i] = c
    return v


def build_roots(kind, m, n):
    """Root system of gl(m|n) or osp(m|2n) (the latter with k = m // 2
    epsilons and n deltas)."""
    roots = []
    if kind == "gl":
        k, d = m, n
        tot = k + d
        for i in range(k):
            for j in range(k):
                if i != j:
                    v = _unit(tot, i)
                    v[j] -= 1
                    roots.append(Root(tuple(v), EVEN))
        for i in range(d):
            for j in range(d):
                if i != j:
                    v = _unit(tot, k + i)
                    v[k + j] -= 1
                    roots.append(Root(tuple(v), EVEN))
        for i in range(k):
            for j in range(d):
                v = _unit(tot, i)
                v[k + j] = -1
                roots.append(Root(tuple(v), ODD))
                roots.append(Root(tuple(-x for x in v), ODD))
    else:
        k, d = m // 2, n
        tot = k + d
        for i in range(k):
            for j in range(i + 1, k):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = _unit(tot, i, si)
                        v[j] = sj
                        roots.append(Root(tuple(v), EVEN))
        if m % 2 == 1:
            for i in range(k):
                roots.append(Root(tuple(_unit(tot, i, 1)), EVEN))
                roots.append(Root(tuple(_unit(tot, i, -1)), EVEN))
        for i in range(d):
            for j in range(i + 1, d):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = _unit(tot, k + i, si)
                        v[k + j] = sj
                        roots.append(Root(tuple(v), EVEN))
        for i in range(d):
            roots.append(Root(tuple(_unit(tot, k + i, 2)), EVEN))
            roots.append(Root(tuple(_unit(tot, k + i, -2)), EVEN))
        for i in range(k):
            for j in range(d):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = _unit(tot, i, si)
                        v[k + j] = sj
                        roots.append(Root(tuple(v), ODD))
        if m % 2 == 1:
            for j in range(d):
                roots.append(Root(tuple(_unit(tot, k + j, 1)), ODD))
                roots.append(Root(tuple(_unit(tot, k + j, -1)), ODD))
    return RootSystem(kind, k, d, roots)


@dataclass(frozen=True)
class MarkedBase:
    system: RootSystem
    simple: tuple          # of Root
    marks: tuple

    def __eq__(self, other):
        return self.simple == other.simple and self.marks == other.marks

    def __hash__(self):
        return hash((self.simple, self.marks))

    def to_json(self):
        return {"simple": [list(r.coeffs) for r in self.simple],
                "marks": list(self.marks)}


def reflect_marked(b, k):
    """Reflect a marked base at its k-th simple root: the odd-reflection
    rule at isotropic roots, the Weyl reflection otherwise; marks follow
    by linearity."""
    sys = b.system
    alpha = b.simple[k]
    dk = b.marks[k]
    new_simple = []
    new_marks = []
    if is_isotropic(sys, alpha):
        for i, (beta, di) in enumerate(zip(b.simple, b.marks)):
            if i == k:
                new_simple.append(-alpha)
                new_marks.append(-dk)
            elif sys.form(beta, alpha) != 0:
                summed = beta.plus(alpha, None)
                root = sys.find(summed.coeffs)
                assert root is not None, "reflected root left the system"
                new_simple.append(root)
                new_marks.append(di + dk)
            else:
                new_simple.append(beta)
                new_marks.append(di)
    else:
        aa = sys.form(alpha, alpha)
        for beta, di in zip(b.simple, b.marks):
            c = Fraction(2 * sys.form(beta, alpha), aa)
            assert c.denominator == 1
            c = int(c)
            coeffs = tuple(x - c * a for x, a in
                           zip(beta.coeffs, alpha.coeffs))
            root = sys.find(coeffs)
            assert root is not None, "reflected root left the system"
            new_simple.append(root)
            new_marks.append(di - c * dk)
    return MarkedBase(sys, tuple(new_simple), tuple(new_marks))


def _positive_system(sys, functional):
    pos = []
    for r in sys.roots:
        val = sum(f * c for f, c in zip(functional, r.coeffs))
        assert val != 0, "functional vanishes on a root"
        if val > 0:
            pos.append(r)
    return pos


def _base_of(sys, pos):
    """Simple roots: positive roots that are not sums of two positives."""
    coeff_set = {r.coeffs for r in pos}
    simple = []
    for r in pos:
        decomposable = False
        for s in pos:
            diff = tuple(a - b for a, b in zip(r.coeffs, s.coeffs))
            if any(diff) and diff in coeff_set:
                decomposable = True
                break
        if not decomposable:
            simple.append(r)
    simple.sort(key=lambda r: r.coeffs)
    return simple


def degree_functional(grading):
    """Values of the grading on (eps_1..eps_k, delta_1..delta_n), read off
    the diagonal of H."""
    R = grading.ambient
    H = grading.H.matrix
    vals = []
    if R.kind == "gl":
        for i in range(R.m):
            vals.append(H[i, i])
        for j in range(R.odd_dim):
            vals.append(H[R.m + j, R.m + j])
    else:
        k = R.m // 2
        for i in range(1, k + 1):
            idx = R.index(i)
            vals.append(H[idx, idx])
        for j in range(k + 1, k + R.odd_dim // 2 + 1):
            idx = R.index(j)
            vals.append(H[idx, idx])
    return vals


def _deg(vals, root):
    d = sum(v * c for v, c in zip(vals, root.coeffs))
    assert Fraction(d).denominator == 1
    return int(d)


def find_nonnegative_base(grading, seed=3):
    """A base on which the grading's degree map is nonnegative: start from
    a generic positive system and reflect away negative-degree simple
    roots, lowest index first."""
    R = grading.ambient
    if R.kind == "gl":
        sys = build_roots("gl", R.m, R.odd_dim)
    else:
        sys = build_roots("osp", R.m, R.odd_dim // 2)
    vals = degree_functional(grading)
    n = sys.eps_count + sys.delta_count
    functional = [Fraction(seed) ** (n - l) for l in range(n)]
    pos = _positive_system(sys, functional)
    while True:
        simple = _base_of(sys, pos)
        neg = [a for a in simple if _deg(vals, a) < 0]
        if not neg:
            marks = tuple(_deg(vals, a) for a in simple)
            return MarkedBase(sys, tuple(simple), marks)
        alpha = neg[0]
        remove = {alpha.coeffs}
        add = [-alpha]
        double = sys.find(tuple(2 * c for c in alpha.coeffs))
        if alpha.parity == ODD and not is_isotropic(sys, alpha) and double:
            remove.add(double.coeffs)
            add.append(-double)
        pos = [r for r in pos if r.coeffs not in remove] + add


def _diagram_match(b1, b2):
    """Is there a bijection of simple roots preserving parity, marks, and
    all pairwise form values?"""
    n = len(b1.simple)
    if n != len(b2.simple) or sorted(b1.marks) != sorted(b2.marks):
        return False
    sys = b1.system
    g1 = [[sys.form(a, b) for b in b1.simple] for a in b1.simple]
    g2 = [[sys.form(a, b) for b in b2.simple] for a in b2.simple]
    p1 = [r.parity for r in b1.simple]
    p2 = [r.parity for r in b2.simple]

    def extend(assign):
        i = len(assign)
        if i == n:
            return True
        for j in range(n):
            if j in assign:
                continue
            if p1[i] != p2[j] or b1.marks[i] != b2.marks[j]:
                continue
            if g1[i][i] != g2[j][j]:
                continue
            if any(g1[i][k] != g2[j][assign[k]] or
                   g1[k][i] != g2[assign[k]][j]
                   for k in range(i)):
                continue
            assign.append(j)
            if extend(assign):
                return True
            assign.pop()
        return False

    return extend([])


def marked_equivalent(b1, b2):
    """Do two nonnegative marked bases present the same grading?  BFS over
    odd reflections at mark-zero isotropic simple roots, comparing marked
    diagrams; even mark-zero reflections preserve the diagram and are
    therefore not searched."""
    seen = set()
    queue = deque([b1])
    while queue:
        b = queue.popleft()
        key = (b.simple, b.marks)
        if key in seen:
            continue
        seen.add(key)
        if _diagram_match(b, b2):
            return True
        for k, (alpha, mark) in enumerate(zip(b.simple, b.marks)):
            if mark == 0 and is_isotropic(b.system, alpha):
                queue.append(reflect_marked(b, k))
    return False
