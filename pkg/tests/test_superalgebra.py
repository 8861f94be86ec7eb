from fractions import Fraction

import pytest

from goodgradings.linalg import Matrix, rank
from goodgradings.superalgebra import (EVEN, ODD, AmbientMismatch,
                                       adjoint_matrix, build_gl, build_osp,
                                       invariant_form, is_member_osp,
                                       superbracket, supertrace)


def test_build_gl_counts():
    R = build_gl(1, 1)
    assert R.dim == 4
    assert R.basis_parities.count(EVEN) == 2
    assert R.basis_parities.count(ODD) == 2
    assert build_gl(2, 1).dim == 9


def test_gl_parity():
    R = build_gl(2, 1)
    # E_{1,3} mixes the blocks
    assert R.E(1, 3).parity() == ODD
    assert R.E(1, 2).parity() == EVEN


def test_build_osp_dims():
    R = build_osp(1, 1)
    assert R.basis_parities.count(EVEN) == 3     # sp(2)
    assert R.basis_parities.count(ODD) == 2
    R = build_osp(2, 1)
    assert R.basis_parities.count(EVEN) == 4     # so(2) x sp(2)
    assert R.basis_parities.count(ODD) == 4


def test_osp_dim_formula():
    for m, n in [(1, 1), (2, 1), (3, 1), (2, 2), (4, 1), (3, 2)]:
        R = build_osp(m, n)
        assert R.dim == m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n


def test_osp_membership_of_basis():
    R = build_osp(3, 1)
    for b, p in zip(R.basis, R.basis_parities):
        assert is_member_osp(R, b.matrix, p)


def test_is_member_osp_examples():
    R = build_osp(2, 2)
    assert is_member_osp(R, Matrix.zero(R.size, R.size), EVEN)
    assert not is_member_osp(R, Matrix.identity(R.size), EVEN)


def test_superbracket_examples():
    R = build_gl(2, 0)
    b = superbracket(R.E(1, 2), R.E(2, 1))
    assert b.matrix == (R.E(1, 1) - R.E(2, 2)).matrix
    R = build_gl(2, 1)
    # both odd: anticommutator
    b = superbracket(R.E(1, 3), R.E(3, 1))
    assert b.matrix == (R.E(1, 1) + R.E(3, 3)).matrix
    x = R.E(1, 2) + R.E(2, 1)
    assert superbracket(x, x).is_zero()


def test_ambient_mismatch():
    R1, R2 = build_gl(1, 1), build_gl(1, 1)
    with pytest.raises(AmbientMismatch):
        superbracket(R1.E(1, 1), R2.E(1, 1))


def test_invariant_form_examples():
    R = build_gl(2, 0)
    assert invariant_form(R.E(1, 2), R.E(2, 1)) == 1
    R = build_gl(1, 1)
    assert invariant_form(R.E(1, 1), R.E(2, 2)) == 0
    # supersymmetry
    for i, x in enumerate(R.basis):
        for j, y in enumerate(R.basis):
            sign = -1 if (R.basis_parities[i] and R.basis_parities[j]) else 1
            assert invariant_form(x, y) == sign * invariant_form(y, x)


def _jacobi_holds(R):
    for i, x in enumerate(R.basis):
        px = R.basis_parities[i]
        for j, y in enumerate(R.basis):
            py = R.basis_parities[j]
            for z in R.basis:
                lhs = superbracket(x, superbracket(y, z))
                rhs = superbracket(superbracket(x, y), z)
                tail = superbracket(y, superbracket(x, z))
                if px * py % 2:
                    tail = -tail
                if not (lhs - rhs - tail).is_zero():
                    return False
    return True


def test_super_jacobi_gl21():
    assert _jacobi_holds(build_gl(2, 1))


def test_super_jacobi_osp22():
    assert _jacobi_holds(build_osp(2, 2))


def test_form_invariance():
    for R in (build_gl(2, 1), build_osp(2, 1)):
        for x in R.basis:
            for y in R.basis:
                for z in R.basis:
                    assert invariant_form(superbracket(x, y), z) == \
                        invariant_form(x, superbracket(y, z))


def test_osp_closure():
    R = build_osp(3, 1)
    for i, x in enumerate(R.basis):
        for j, y in enumerate(R.basis):
            b = superbracket(x, y)
            par = (R.basis_parities[i] + R.basis_parities[j]) % 2
            assert is_member_osp(R, b.matrix, par)


def test_adjoint_matrix():
    R = build_gl(2, 1)
    assert adjoint_matrix(R.zero()).is_zero()
    h = R.diagonal({1: 1, 2: 2, 3: 5})
    ad = adjoint_matrix(h)
    # diagonal with weights h_i - h_j on the E_{ij} basis
    for k, b in enumerate(R.basis):
        for l in range(R.dim):
            if k != l:
                assert ad[l, k] == 0
    e = R.E(1, 2)
    assert rank(adjoint_matrix(e)) + _centdim(R, e) == R.dim


def _centdim(R, e):
    from goodgradings.linalg import kernel_basis
    return len(kernel_basis(adjoint_matrix(e)))


def test_supertrace():
    R = build_gl(1, 1)
    assert supertrace(R, Matrix.identity(2)) == 0
    assert supertrace(R, R.E(1, 1).matrix) == 1
    assert supertrace(R, R.E(2, 2).matrix) == -1


def test_phi_shape():
    R = build_osp(3, 2)
    G = R.phi
    # symmetric on V0, skew on V1, blocks orthogonal
    for a in range(R.size):
        for b in range(R.size):
            pa, pb = R.index_parity(a), R.index_parity(b)
            if pa != pb:
                assert G[a, b] == 0
            elif pa == EVEN:
                assert G[a, b] == G[b, a]
            else:
                assert G[a, b] == -G[b, a]
    assert rank(G) == R.size
