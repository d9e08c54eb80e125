import itertools
import random
from fractions import Fraction

import pytest

from bialg.appendix import APPENDIX, appendix_generators, appendix_match
from bialg.errors import JacobiViolation, ParametricPivotError
from bialg.exact import MultiPoly, evaluate, substitute
from bialg.liealg import BIANCHI_CLASSES, classify_bianchi, standard_form
from bialg.manin import Constraint, ManinTriple, mixed_jacobi_residual
from bialg.solver import (
    COLUMN_NAMES, COLUMNS, EXPECTED_DIMS, QuadraticIdeal, bareiss, dual_jacobi_ideal, family_for,
    ideal_equivalent, mixed_jacobi_system, parameters_from_tensor, solve_dual_family, specialize,
    substitute_components,
)

F = Fraction
t1, t2 = MultiPoly.var("t1"), MultiPoly.var("t2")


def flat(array):
    if isinstance(array, (list, tuple)):
        for x in array:
            yield from flat(x)
    else:
        yield array


def test_column_order():
    assert COLUMNS == ((0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 2, 0), (0, 2, 1), (0, 2, 2),
                       (1, 2, 0), (1, 2, 1), (1, 2, 2))
    assert COLUMN_NAMES[0] == "f12_1" and COLUMN_NAMES[-1] == "f23_3"


@pytest.mark.parametrize("name,rank", [("I", 0), ("IX", 6), ("V", 3), ("VIII", 6), ("II", 3)])
def test_system_rank(name, rank):
    system = mixed_jacobi_system(standard_form(name))
    assert system.rank() == rank
    if name == "I":
        assert all(x == 0 for x in flat(system.matrix))


def test_bareiss_pivoting():
    M = [[0, 2, 4], [0, 1, 2], [3, 0, 1]]
    E, piv = bareiss(M)
    assert piv == [0, 1]
    assert E[2] == [0, 0, 0]


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_dimension_table(name):
    fam = family_for(name)
    assert fam.dim == EXPECTED_DIMS[name]
    assert fam.free_params == tuple(f"t{n + 1}" for n in range(fam.dim))
    assert len(fam.relations) == 9 - fam.dim


def test_ix_relations():
    fam = family_for("IX")
    assert fam.relation_strings() == [
        "f12_1 = -f23_3", "f12_2 = f13_3", "f12_3 = 0", "f13_1 = f23_2", "f13_2 = 0", "f23_1 = 0",
    ]
    assert appendix_match(fam, "IX").ok


def test_abelian_has_no_relations():
    fam = family_for("I")
    assert fam.dim == 9 and not fam.relations


def test_vii_a_symbolic():
    fam = family_for("VII_a")
    assert fam.dim == 4
    comps = fam.components()
    a = MultiPoly.var("a")
    assert substitute(comps["f13_2"] - a * comps["f13_3"], {}) == 0


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_general_member_satisfies_mixed_identities(name):
    # symbolic in the free parameters, and in a for the parametric classes
    fam = family_for(name)
    residual = mixed_jacobi_residual(ManinTriple(fam.f, fam.general()))
    assert all(x == 0 for x in flat(residual))


def test_parametric_pivot_error():
    a = MultiPoly.var("a")
    with pytest.raises(ParametricPivotError):
        solve_dual_family(standard_form("VI_a", a), (Constraint(a, ">0"),))
    fam = solve_dual_family(standard_form("VI_a", a), (Constraint(a, ">0"), Constraint(a - 1, "!=0")))
    assert fam.dim == 4


def test_ideals_of_simple_algebras():
    for name in ("IX", "VIII", "V"):
        assert dual_jacobi_ideal(family_for(name)).is_empty()
    assert [str(g) for g in dual_jacobi_ideal(family_for("VII_0")).generators] == ["t1*t3"]
    assert [str(g) for g in dual_jacobi_ideal(family_for("IV")).generators] == ["t4^2"]


@pytest.mark.parametrize("name", ["VII_0", "IV"])
def test_single_generators_match_transcription(name):
    fam = family_for(name)
    ours = dual_jacobi_ideal(fam)
    theirs = substitute_components(appendix_generators(name), fam)
    assert len(ours.generators) == 1
    assert ideal_equivalent(ours, theirs, 200)[0]


def test_ideal_equivalent_examples():
    i = QuadraticIdeal((t1 * t2,), ("t1", "t2"))
    assert ideal_equivalent(i, i) == (True, None)
    j = QuadraticIdeal((t1 * t1 * t2, t1 * t2 * t2), ("t1", "t2"))
    assert ideal_equivalent(i, j)[0]
    ok, cex = ideal_equivalent(QuadraticIdeal((t1,), ("t1", "t2")), QuadraticIdeal((t2,), ("t1", "t2")))
    assert not ok
    assert (evaluate(t1, cex) == 0) != (evaluate(t2, cex) == 0)


def test_specialize_sl2_example():
    fam = family_for("VIII")
    assert fam.dim == 3
    form = parse_form_at(0, 0, 0)
    t = specialize(fam, parameters_from_tensor(fam, form))
    assert classify_bianchi(t.f_dual).name == "I"
    for pt in ((1, 0, 0), (0, 0, 1), (1, 0, 1), (2, 1, 1)):
        t = specialize(fam, parameters_from_tensor(fam, parse_form_at(*pt)))
        assert classify_bianchi(t.f_dual).name == "V"


def parse_form_at(alpha, beta, gamma):
    return APPENDIX["VIII"].forms[0].tensor().subs({"alpha": alpha, "beta": beta, "gamma": gamma})


def test_specialize_rejects_point_off_the_ideal():
    fam = family_for("VII_0")
    with pytest.raises(JacobiViolation):
        specialize(fam, {"t1": 1, "t2": 0, "t3": 1, "t4": 0})
    specialize(fam, {"t1": 1, "t2": 1, "t3": 0, "t4": 2})


def test_parameters_from_tensor_rejects_non_members():
    fam = family_for("IX")
    with pytest.raises(ValueError):
        parameters_from_tensor(fam, standard_form("IX"))


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_specialize_on_ideal_points(name):
    fam = family_for(name, F(2) if name in ("VI_a", "VII_a") else None)
    ideal = dual_jacobi_ideal(fam)
    hits = 0
    for vals in itertools.product((0, 1, -1), repeat=fam.dim):
        pt = dict(zip(fam.free_params, map(F, vals)))
        if ideal.vanishes_at(pt):
            specialize(fam, pt)
            hits += 1
        if hits >= 25:
            break
    assert hits > 0


@pytest.mark.parametrize("name", BIANCHI_CLASSES)
def test_row_shuffle_gives_same_solution_set(name):
    f = standard_form(name, F(3) if name in ("VI_a", "VII_a") else None)
    system = mixed_jacobi_system(f)
    rows = list(system.matrix)
    random.Random(7).shuffle(rows)
    E, piv = bareiss(rows)
    assert len(piv) == system.rank()
    fam = solve_dual_family(f)
    # every basis vector of the original family solves the shuffled system
    for b in fam.basis:
        x = [b.c[c[0]][c[1]][c[2]] for c in COLUMNS]
        for row in rows:
            assert sum(r * v for r, v in zip(row, x)) == 0


@pytest.mark.parametrize("name", ["VI_a", "VII_a"])
@pytest.mark.parametrize("a", [F(2), F(3), F(5), F(1, 2)])
def test_symbolic_family_specializes_to_numeric_solve(name, a):
    symbolic = family_for(name)
    numeric = family_for(name, a)
    assert numeric.dim == symbolic.dim
    for lhs, rhs in symbolic.relations:
        want = dict(numeric.relations)[lhs]
        assert substitute(rhs, {"a": a}) == substitute(want, {})
