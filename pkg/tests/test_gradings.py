from fractions import Fraction

import pytest

from goodgradings.gradings import (NonIntegralGrading, OddGrading,
                                   block_type_dim, centralizer, complete_sl2,
                                   dim_formula_gl, dim_formula_osp,
                                   grading_from, is_good, is_good_by_ranks,
                                   is_richardson, s_centralizer)
from goodgradings.linalg import Matrix
from goodgradings.partitions import (SuperPartition, dual_partition,
                                     enumerate_super_partitions,
                                     is_orthosymplectic, psi_merge)
from goodgradings.pyramids import (dynkin_pyramid_gl, dynkin_pyramid_osp,
                                   realize_osp_pyramid, realize_pyramid,
                                   shift_matrix)
from goodgradings.superalgebra import (build_gl, build_osp, invariant_form,
                                       superbracket)


def test_grading_from_zero():
    R = build_gl(1, 1)
    g = grading_from(R, R.zero())
    assert set(g.degrees) == {0}


def test_grading_from_gl2():
    R = build_gl(2, 0)
    g = grading_from(R, R.diagonal({1: -1, 2: 1}))
    degs = {tuple(sorted(b.matrix.entries.index(1) for _ in [0])): d
            for b, d in zip(R.basis, g.degrees)}
    # basis order E11,E12,E21,E22
    assert g.degrees == (0, -2, 2, 0)


def test_grading_non_integral():
    sp = SuperPartition((3, 3), (4,))
    R = build_osp(6, 2)
    P = dynkin_pyramid_osp(sp)
    e, h = realize_osp_pyramid(P, R)
    z = shift_matrix(R, P, [Fraction(1, 2)], [])
    with pytest.raises(NonIntegralGrading):
        grading_from(R, h + z)


def test_centralizer_zero_element():
    R = build_gl(1, 1)
    rep = centralizer(R, R.zero())
    assert (rep.evenDim, rep.oddDim) == (2, 2)


def test_centralizer_gl46():
    sp = SuperPartition((3, 1), (4, 2))
    R = build_gl(4, 6)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    rep = centralizer(R, e)
    assert (rep.evenDim, rep.oddDim) == (16, 14)
    assert dim_formula_gl(sp) == (16, 14)


def test_dim_formula_gl_examples():
    assert dim_formula_gl(SuperPartition((1,), (1,))) == (2, 2)
    even, odd = dim_formula_gl(SuperPartition((3, 1), (4, 2)))
    merged = [r for r, t in psi_merge(SuperPartition((3, 1), (4, 2)))]
    dual = dual_partition(tuple(merged))
    assert even + odd == sum(x * x for x in dual)


def test_dim_formula_osp_examples():
    assert dim_formula_osp(SuperPartition((1,), (2,))) == (1, 1)
    assert dim_formula_osp(SuperPartition((5, 3, 1), (3, 3)))[1] == 14
    sp = SuperPartition((3, 3), (4,))
    R = build_osp(6, 2)
    e, h = realize_osp_pyramid(dynkin_pyramid_osp(sp), R)
    rep = centralizer(R, e)
    assert (rep.evenDim, rep.oddDim) == dim_formula_osp(sp)


def test_complete_sl2_gl2():
    R = build_gl(2, 0)
    e = R.E(1, 2)
    h = R.diagonal({1: 1, 2: -1})
    tr = complete_sl2(R, e, h)
    assert tr.f.matrix == R.E(2, 1).matrix
    assert tr.verify()


def test_complete_sl2_zero():
    R = build_gl(1, 1)
    tr = complete_sl2(R, R.zero(), R.zero())
    assert tr.f.is_zero()


def test_complete_sl2_gl46():
    sp = SuperPartition((3, 1), (4, 2))
    R = build_gl(4, 6)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    tr = complete_sl2(R, e, h)
    assert tr.verify()


def test_s_centralizer_gl46():
    sp = SuperPartition((3, 1), (4, 2))
    R = build_gl(4, 6)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    tr = complete_sl2(R, e, h)
    rep = s_centralizer(R, tr, sp)
    assert rep.evenDim + rep.oddDim == 4
    assert sum(block_type_dim(t) for t in rep.blockTypes) == 4


def test_s_centralizer_single_part():
    sp = SuperPartition((1,), (1,))
    R = build_gl(1, 1)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    tr = complete_sl2(R, e, h)
    rep = s_centralizer(R, tr, sp)
    assert rep.blockTypes == [("gl", 1, 1)]
    assert rep.evenDim + rep.oddDim == 4


def test_s_centralizer_osp():
    sp = SuperPartition((3, 3), (4,))
    R = build_osp(6, 2)
    e, h = realize_osp_pyramid(dynkin_pyramid_osp(sp), R)
    tr = complete_sl2(R, e, h)
    rep = s_centralizer(R, tr, sp)
    assert rep.evenDim + rep.oddDim == \
        sum(block_type_dim(t) for t in rep.blockTypes)


def test_is_good_examples():
    R = build_gl(1, 1)
    g = grading_from(R, R.zero())
    assert is_good(g, R.zero())
    R2 = build_gl(2, 0)
    e = R2.E(1, 2)
    g = grading_from(R2, R2.diagonal({1: 3, 2: 1}))
    assert is_good(g, e)           # central shift of the Dynkin grading
    g = grading_from(R2, R2.diagonal({1: 4, 2: 0}))
    assert not is_good(g, e)       # e sits in degree 4, not 2


def test_is_good_pyramids():
    sp = SuperPartition((3, 1), (4, 2))
    R = build_gl(4, 6)
    from goodgradings.pyramids import enumerate_pyr
    for P in enumerate_pyr(sp)[:6]:
        e, h = realize_pyramid(P, R)
        g = grading_from(R, h)
        assert is_good(g, e)
        assert is_good_by_ranks(g, e)


def test_is_richardson():
    R = build_gl(1, 1)
    g = grading_from(R, R.zero())
    assert is_richardson(g, R.zero())
    R2 = build_gl(2, 0)
    e, h = realize_pyramid(dynkin_pyramid_gl(SuperPartition((2,), ())), R2)
    g = grading_from(R2, h)
    assert is_richardson(g, e)


def test_is_richardson_odd_grading():
    sp = SuperPartition((3, 1), (4, 2))
    R = build_gl(4, 6)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    g = grading_from(R, h)
    assert not g.is_even()
    with pytest.raises(OddGrading):
        is_richardson(g, e)


def test_centralizer_dims_match_formula_small():
    for m in range(0, 5):
        for n in range(0, 5 - m):
            if m + n == 0:
                continue
            for sp in enumerate_super_partitions(m, n):
                R = build_gl(m, n)
                e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
                rep = centralizer(R, e)
                assert (rep.evenDim, rep.oddDim) == dim_formula_gl(sp), sp


def test_gl_m_plus_n_centralizer_identity():
    # dim gl(m|n)^e = dim gl(m+n)^e for the same Jordan data
    for m in range(0, 5):
        for n in range(0, 5 - m):
            if m + n == 0:
                continue
            for sp in enumerate_super_partitions(m, n):
                even, odd = dim_formula_gl(sp)
                merged = tuple(r for r, t in psi_merge(sp))
                dual = dual_partition(merged)
                assert even + odd == sum(x * x for x in dual), sp


def test_graded_pieces_form_orthogonal():
    sp = SuperPartition((2, 1), (2,))
    R = build_gl(3, 2)
    e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
    g = grading_from(R, h)
    for i, x in enumerate(R.basis):
        for j, y in enumerate(R.basis):
            if g.degrees[i] + g.degrees[j] != 0:
                assert invariant_form(x, y) == 0


def test_s_centralizer_in_degree_zero():
    for pq, mn in [(((2, 1), (2,)), None), (((3,), (2, 1)), None)]:
        sp = SuperPartition(*pq)
        R = build_gl(sp.m, sp.n)
        e, h = realize_pyramid(dynkin_pyramid_gl(sp), R)
        g = grading_from(R, h)
        tr = complete_sl2(R, e, h)
        rep = s_centralizer(R, tr, sp)
        for b in rep.basis:
            c = R.coords(b)
            assert all(g.degrees[j] == 0 for j, v in enumerate(c) if v)
