import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bialg.errors import AntisymmetryError, NotALieAlgebraError, ParametricInputError, SingularMatrixError
from bialg.exact import MultiPoly
from bialg.liealg import (
    BIANCHI_CLASSES, BianchiParams, BianchiType, StructureConstants, bracket_vectors, change_basis,
    classify_bianchi, determinant, from_bianchi, identity, is_lie, jacobi_residual, matmul, matrix_inverse,
    na_decompose, recompose, standard_form, unimodular_invariants,
)
from bialg.liealg import _solve_coords

from conftest import random_tensor, tensors

F = Fraction


def nonzero(array):
    return [x for x in _flat(array) if x != 0]


def _flat(array):
    if isinstance(array, (list, tuple)):
        for x in array:
            yield from _flat(x)
    else:
        yield array


def random_invertible(rnd):
    while True:
        A = [[F(rnd.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        if determinant(A) != 0:
            return A


def test_from_bianchi_ix():
    f = from_bianchi(BianchiParams(0, 1, 1, 1))
    assert f == StructureConstants.from_brackets({(1, 2): {3: 1}, (2, 3): {1: 1}, (3, 1): {2: 1}})


def test_from_bianchi_abelian_and_v():
    assert from_bianchi(BianchiParams(0, 0, 0, 0)) == StructureConstants.zero()
    f = from_bianchi(BianchiParams(1, 0, 0, 0))
    assert f.c[0][1][1] == -1 and f.c[2][0][2] == 1
    assert len(f.brackets()) == 2


def test_antisymmetry_enforced():
    c = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2] = F(1)
    with pytest.raises(AntisymmetryError):
        StructureConstants(c)
    with pytest.raises(AntisymmetryError):
        StructureConstants.from_brackets({(1, 2): {3: 1}, (2, 1): {3: 1}})


def test_jacobi_residual_examples():
    assert not nonzero(jacobi_residual(StructureConstants.zero()))
    assert not nonzero(jacobi_residual(standard_form("IX")))
    bad = StructureConstants.from_brackets({(1, 2): {1: 1}, (1, 3): {3: 1}})
    assert nonzero(jacobi_residual(bad))
    assert not is_lie(bad)


def test_na_decompose_examples():
    d = na_decompose(standard_form("IX"))
    assert d.a_vec == (0, 0, 0)
    assert [list(r) for r in d.n_mat] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    d = na_decompose(StructureConstants.zero())
    assert all(x == 0 for x in d.a_vec) and all(x == 0 for r in d.n_mat for x in r)
    d = na_decompose(standard_form("V"))
    assert d.a_vec == (1, 0, 0)
    assert all(x == 0 for r in d.n_mat for x in r)


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_standard_forms_recover_table_parameters(name):
    a = F(2) if name in ("VI_a", "VII_a") else None
    f = standard_form(name, a)
    d = na_decompose(f)
    assert d.a_vec[1:] == (0, 0)
    assert is_lie(f)


def test_parametric_standard_form_is_lie():
    a = MultiPoly.var("a")
    for name in ("VI_a", "VII_a"):
        assert not nonzero(jacobi_residual(standard_form(name, a)))


@pytest.mark.parametrize("name,expected", [
    ("I", "I"), ("II", "II"), ("III", "III"), ("IV", "IV"), ("V", "V"), ("VI_0", "VI_0"),
    ("VII_0", "VII_0"), ("VIII", "VIII"), ("IX", "IX"),
])
def test_classify_standard_forms(name, expected):
    assert classify_bianchi(standard_form(name)) == BianchiType(expected)


def test_classify_examples():
    assert classify_bianchi(from_bianchi(BianchiParams(0, 1, 1, -1))).name == "VIII"
    assert classify_bianchi(StructureConstants.zero()).name == "I"
    t = classify_bianchi(standard_form("VI_a", 2))
    assert t == BianchiType("VI_a", F(4))
    M, tr, det = unimodular_invariants(standard_form("VI_a", 2))
    assert M == [[-2, -1], [-1, -2]]
    assert tr * tr / det == F(16, 3)


@pytest.mark.parametrize("a", [F(2), F(3), F(1, 2), F(5, 3)])
def test_parametric_invariant_is_a_squared(a):
    assert classify_bianchi(standard_form("VI_a", a)) == BianchiType("VI_a", a * a)
    assert classify_bianchi(standard_form("VII_a", a)) == BianchiType("VII_a", a * a)


def test_classify_rejects_bad_input():
    with pytest.raises(NotALieAlgebraError):
        classify_bianchi(StructureConstants.from_brackets({(1, 2): {1: 1}, (1, 3): {3: 1}}))
    with pytest.raises(ParametricInputError):
        classify_bianchi(standard_form("VI_a", MultiPoly.var("a")))


def test_bianchi_type_invariants():
    with pytest.raises(ValueError):
        BianchiType("VI_a", F(1))
    with pytest.raises(ValueError):
        BianchiType("VII_a", F(-1))
    with pytest.raises(ValueError):
        BianchiType("IX", F(4))


def test_matrix_inverse_examples():
    assert matrix_inverse(identity()) == identity()
    assert matrix_inverse([[2, 0, 0], [0, 1, 0], [0, 0, 1]]) == [[F(1, 2), 0, 0], [0, 1, 0], [0, 0, 1]]
    A = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert matrix_inverse(A) == [[1, -1, 0], [0, 1, 0], [0, 0, 1]]
    assert matmul(A, matrix_inverse(A)) == identity()
    with pytest.raises(SingularMatrixError):
        matrix_inverse([[1, 2, 3], [2, 4, 6], [0, 0, 1]])


def test_change_basis_examples():
    ix, viii = standard_form("IX"), standard_form("VIII")
    assert change_basis(ix, identity()) == ix
    assert classify_bianchi(change_basis(ix, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])).name == "IX"
    perm = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert classify_bianchi(change_basis(viii, perm)).name == "VIII"
    with pytest.raises(SingularMatrixError):
        change_basis(ix, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])


def test_change_basis_matches_definition(rnd):
    f = standard_form("VI_a", 3)
    A = random_invertible(rnd)
    Ai = matrix_inverse(A)
    g = change_basis(f, A)
    for i, j, k in itertools.product(range(3), repeat=3):
        want = sum(A[m][i] * A[n][j] * f.c[m][n][p] * Ai[k][p]
                   for m in range(3) for n in range(3) for p in range(3))
        assert g.c[i][j][k] == want


def test_change_basis_composes(rnd):
    f = standard_form("IV")
    A, B = random_invertible(rnd), random_invertible(rnd)
    assert change_basis(change_basis(f, A), B) == change_basis(f, matmul(A, B))


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_classifier_invariance_sampled(name, rnd):
    for a in ((F(2), F(3), F(1, 2)) if name in ("VI_a", "VII_a") else (None,)):
        f = standard_form(name, a)
        want = classify_bianchi(f)
        for _ in range(10):
            assert classify_bianchi(change_basis(f, random_invertible(rnd))) == want


@pytest.mark.parametrize("name", ["III", "IV", "V", "VI_a", "VII_a"])
def test_chi_does_not_depend_on_complement(name, rnd):
    f = change_basis(standard_form(name, F(3) if name in ("VI_a", "VII_a") else None), random_invertible(rnd))
    a = na_decompose(f).a_vec
    p = next(i for i in range(3) if a[i] != 0)
    kernel = []
    for q in (i for i in range(3) if i != p):
        v = [F(0)] * 3
        v[q], v[p] = a[p], -a[q]
        kernel.append(v)
    _, tr0, det0 = unimodular_invariants(f)
    for _ in range(5):
        lam = F(rnd.choice([-2, -1, 1, 2, 3]), rnd.choice([1, 2]))
        s, t = F(rnd.randint(-2, 2)), F(rnd.randint(-2, 2))
        X = [lam * (1 if i == p else 0) + s * kernel[0][i] + t * kernel[1][i] for i in range(3)]
        imgs = [bracket_vectors(f, X, u) for u in kernel]
        # coordinates of the images in the kernel basis
        cols = [_solve_coords(kernel, v) for v in imgs]
        tr = cols[0][0] + cols[1][1]
        det = cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1]
        assert tr == lam * tr0 and det == lam * lam * det0
        if det0:
            assert tr * tr / det == tr0 * tr0 / det0


@settings(max_examples=300)
@given(tensors)
def test_recompose_round_trip(f):
    assert recompose(na_decompose(f)) == f


@settings(max_examples=300)
@given(tensors)
def test_jacobi_iff_n_times_a_vanishes(f):
    d = na_decompose(f)
    na = [sum(d.n_mat[i][j] * d.a_vec[j] for j in range(3)) for i in range(3)]
    assert is_lie(f) == all(x == 0 for x in na)


def test_json_round_trip():
    f = standard_form("VII_a", MultiPoly.var("a"))
    assert StructureConstants.from_json(f.to_json()) == f
    data = f.to_json()
    assert data["basis_dim"] == 3
    assert all(b["i"] < b["j"] for b in data["brackets"])
