"""Linear mixed-Jacobi solve and quadratic dual-Jacobi conditions for a fixed first subalgebra."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import JacobiViolation, ParametricPivotError
from .exact import (
    MultiPoly,
    RatFunc,
    evaluate,
    format_scalar,
    numerator,
    poly_gcd_in,
    scalar_variables,
    substitute,
    to_scalar,
)
from .liealg import ZERO, StructureConstants, canonical_class, jacobi_residual, standard_form
from .manin import ManinTriple, dual_jacobi_residual, mixed_jacobi_residual, new_triple

# f~^{ij}_k unknowns, 0-based (i, j, k) with i < j
COLUMNS = tuple((i, j, k) for i, j in ((0, 1), (0, 2), (1, 2)) for k in range(3))
ROWS = tuple((j, k, m, i) for j, k in ((0, 1), (0, 2), (1, 2)) for m in range(3) for i in range(3))


def column_label(col) -> str:
    i, j, k = col
    return f"f{i + 1}{j + 1}_{k + 1}"


COLUMN_NAMES = tuple(column_label(c) for c in COLUMNS)
DEFAULT_A_SAMPLES = (Fraction(2), Fraction(3), Fraction(5), Fraction(1, 2))
DEFAULT_SEED = 20020101


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple
    columns: tuple = COLUMNS

    @property
    def shape(self):
        return len(self.matrix), len(self.columns)

    def nonzero_rows(self):
        return tuple(r for r in self.matrix if any(x != 0 for x in r))

    def rank(self) -> int:
        _, pivots = bareiss(self.matrix)
        return len(pivots)


def unit_dual(col) -> StructureConstants:
    i, j, k = col
    c = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    c[i][j][k] = Fraction(1)
    c[j][i][k] = Fraction(-1)
    return StructureConstants(c, check=False)


def mixed_jacobi_system(f: StructureConstants) -> LinearSystem:
    """27 x 9 coefficient matrix of the mixed identities, linear in f~.

    Assembled term by term from the mixed residual; f~^pq_r with p > q is
    folded onto column (q, p, r) with a sign, p == q contributes nothing.
    """
    c = f.c
    index = {col: n for n, col in enumerate(COLUMNS)}
    rows = []
    for j, k, m, i in ROWS:
        acc = [ZERO] * 9
        for l in range(3):
            for (p, q, r), coef, sign in (
                ((j, k, l), c[m][i][l], 1), ((k, l, m), c[l][i][j], 1), ((j, l, i), c[l][m][k], 1),
                ((j, l, m), c[i][l][k], 1), ((k, l, i), c[l][m][j], -1),
            ):
                if coef == 0 or p == q:
                    continue
                if p > q:
                    p, q, sign = q, p, -sign
                n = index[(p, q, r)]
                acc[n] = acc[n] + coef if sign > 0 else acc[n] - coef
        rows.append(tuple(to_scalar(x) for x in acc))
    return LinearSystem(tuple(rows))


def _exact_div(x, y):
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x / y
    return to_scalar(MultiPoly.coerce(x).exact_div(MultiPoly.coerce(y)))


def bareiss(matrix):
    """Fraction-free row echelon form.

    Pivot choice: leftmost column with a nonzero entry at or below the current
    row, first such row.  Returns (echelon rows, pivot columns).
    """
    M = [list(r) for r in matrix]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    prev = Fraction(1)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((q for q in range(r, rows) if M[q][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for q in range(r + 1, rows):
            for cc in range(c + 1, cols):
                M[q][cc] = to_scalar(_exact_div(piv * M[q][cc] - M[q][c] * M[r][cc], prev))
            M[q][c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def _rational_roots(p: MultiPoly):
    # candidate rational roots of a univariate polynomial (rational root theorem)
    (var,) = p.vars
    dense = {e[0]: c for e, c in p.terms.items()}
    lo = min(dense)
    scale = 1
    for c in dense.values():
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = {k - lo: int(c * scale) for k, c in dense.items()}
    a0, an = ints.get(0, 0), ints[max(ints)]
    out = {Fraction(0)} if lo > 0 else set()
    if a0 == 0:
        return out

    def divisors(n):
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0]

    for pp in divisors(a0):
        for qq in divisors(an):
            for s in (1, -1):
                x = Fraction(s * pp, qq)
                if p.eval({var: x}) == 0:
                    out.add(x)
    return out


def _check_pivot(piv, constraints):
    # without a declared domain the parameter is generic (transcendental)
    if isinstance(piv, Fraction) or not constraints:
        return
    num = numerator(piv)
    if len(num.vars) != 1:
        return
    for x in _rational_roots(num):
        values = {num.vars[0]: x}
        if all(c.holds(values) for c in constraints):
            raise ParametricPivotError(f"pivot {format_scalar(piv)} vanishes at admissible {num.vars[0]}={x}")


@dataclass(frozen=True)
class DualFamily:
    f: StructureConstants
    basis: tuple
    free_params: tuple
    relations: tuple
    free_columns: tuple
    constraints: tuple = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def general(self) -> StructureConstants:
        """The family's f~ as a tensor in the free parameters."""
        out = StructureConstants.zero(3)
        for t, b in zip(self.free_params, self.basis):
            out = out + b.scaled(MultiPoly.var(t))
        return out

    def component(self, name: str):
        col = COLUMNS[COLUMN_NAMES.index(name)]
        return self.general().c[col[0]][col[1]][col[2]]

    def components(self) -> dict:
        g = self.general()
        return {column_label(col): g.c[col[0]][col[1]][col[2]] for col in COLUMNS}

    def contains(self, fd: StructureConstants) -> bool:
        """Does fd satisfy every linear relation of the family?"""
        vals = {column_label(c): fd.c[c[0]][c[1]][c[2]] for c in COLUMNS}
        for lhs, rhs in self.relations:
            expr = to_scalar(substitute(rhs, vals))
            if to_scalar(vals[lhs] - expr) != 0:
                return False
        return True

    def relation_strings(self):
        return [f"{lhs} = {format_scalar(rhs)}" for lhs, rhs in self.relations]


def solve_dual_family(f: StructureConstants, constraints=()) -> DualFamily:
    """Nullspace of the mixed system; free parameters t1..tk follow column order."""
    system = mixed_jacobi_system(f)
    E, pivots = bareiss(system.matrix)
    for r, c in enumerate(pivots):
        _check_pivot(E[r][c], constraints)
    free = [c for c in range(9) if c not in pivots]
    names = tuple(f"t{n + 1}" for n in range(len(free)))
    basis = []
    for fc in free:
        x = [ZERO] * 9
        x[fc] = Fraction(1)
        for r in reversed(range(len(pivots))):
            pc = pivots[r]
            s = sum((E[r][c] * x[c] for c in range(pc + 1, 9) if E[r][c] != 0 and x[c] != 0), ZERO)
            x[pc] = to_scalar(RatFunc.coerce(-s) / RatFunc.coerce(E[r][pc])) if s != 0 else ZERO
        basis.append(x)
    tensors = []
    for x in basis:
        t = StructureConstants.zero(3)
        for col, v in zip(COLUMNS, x):
            if v != 0:
                t = t + unit_dual(col).scaled(v)
        tensors.append(t)
    # relations: pivot component in terms of free components
    relations = []
    for pc in pivots:
        expr = ZERO
        for n, fc in enumerate(free):
            coeff = basis[n][pc]
            if coeff != 0:
                expr = expr + coeff * MultiPoly.var(COLUMN_NAMES[fc])
        relations.append((COLUMN_NAMES[pc], to_scalar(expr)))
    return DualFamily(f, tuple(tensors), names, tuple(relations),
                      tuple(COLUMN_NAMES[c] for c in free), tuple(constraints))


@dataclass(frozen=True)
class QuadraticIdeal:
    generators: tuple
    variables: tuple = ()

    def is_empty(self) -> bool:
        return not self.generators

    def vanishes_at(self, point) -> bool:
        return all(evaluate(g, point) == 0 for g in self.generators)

    def strings(self):
        return [str(g) for g in self.generators]


def normalize_generator(p: MultiPoly, param: str = "a") -> MultiPoly:
    """Primitive up to rational scalars and up to factors in the algebra parameter alone."""
    p = p.primitive()
    if param in p.vars and len(p.vars) > 1:
        coeffs = {}
        rest = tuple(v for v in p.vars if v != param)
        for e, c in p.terms.items():
            i = p.vars.index(param)
            key = e[:i] + e[i + 1:]
            coeffs.setdefault(key, {})[(e[i],)] = c
        g = poly_gcd_in([MultiPoly(t, (param,)) for t in coeffs.values()], param)
        if g and not g.is_constant():
            p = p.exact_div(g).primitive()
    return p


def _dedupe(polys):
    out = []
    for p in polys:
        if p.is_zero():
            continue
        if any(p == q for q in out):
            continue
        out.append(p)
    return tuple(out)


def dual_jacobi_ideal(fam: DualFamily) -> QuadraticIdeal:
    R = dual_jacobi_residual(fam.general())
    polys = []
    for i, j, k, m in itertools.product(range(3), repeat=4):
        v = R[i][j][k][m]
        if v != 0:
            polys.append(normalize_generator(numerator(v)))
    return QuadraticIdeal(_dedupe(polys), fam.free_params)


def substitute_components(polys, fam: DualFamily) -> QuadraticIdeal:
    """Rewrite generators given in component names (f12_1, ...) in the family's parameters."""
    comps = {name: to_scalar(val) for name, val in fam.components().items()}
    # the family's free parameters are named t*, the free components map to them directly
    out = []
    for p in polys:
        v = substitute(p, comps)
        if v != 0:
            out.append(normalize_generator(numerator(v)))
    return QuadraticIdeal(_dedupe(out), fam.free_params)


# -- sampling-based ideal comparison ---------------------------------------

def _linear_solve_points(gens, variables, rng, fixed, tries):
    # points on the vanishing set: fix all but one variable, solve a generator that is linear in it
    pts = []
    if not gens:
        return pts
    for _ in range(tries):
        pt = {v: Fraction(rng.choice((0, 0, 1, -1, 2, -2, 3))) for v in variables}
        pt.update(fixed)
        ok = True
        for g in gens:
            if evaluate(g, pt) == 0:
                continue
            solved = False
            for v in rng.sample(list(variables), len(variables)):
                if v not in g.vars or g.degree(v) != 1:
                    continue
                co = g.coeffs_in(v)
                rest = {w: x for w, x in pt.items() if w != v}
                c1 = co.get(1, MultiPoly()).subs(rest)
                c0 = co.get(0, MultiPoly()).subs(rest)
                c1, c0 = to_scalar(c1), to_scalar(c0)
                if isinstance(c1, Fraction) and c1 != 0 and isinstance(c0, Fraction):
                    pt[v] = -c0 / c1
                    solved = True
                    break
            if not solved:
                ok = False
                break
        if ok:
            pts.append(dict(pt))
    return pts


def ideal_equivalent(i1: QuadraticIdeal, i2: QuadraticIdeal, samples: int = 200, seed: int = DEFAULT_SEED,
                     params=None):
    """Compare vanishing sets at sample points.

    ``params`` maps algebra parameters (e.g. ``a``) to the admissible values
    they are drawn from.  Returns (True, None) or (False, counterexample).
    """
    params = dict(params or {})
    variables = sorted((set(i1.variables) | set(i2.variables)
                        | {v for g in i1.generators + i2.generators for v in g.vars}) - set(params))
    rng = random.Random(seed)
    points = []
    fixed_choices = list(itertools.product(*[[(k, Fraction(x)) for x in vs] for k, vs in sorted(params.items())]))
    if not fixed_choices:
        fixed_choices = [()]
    # small exhaustive grid first (deterministic, zeros included)
    grid_vals = (0, 1, -1)
    if len(variables) <= 4:
        for combo in itertools.product(grid_vals, repeat=len(variables)):
            for fx in fixed_choices:
                pt = dict(zip(variables, map(Fraction, combo)))
                pt.update(dict(fx))
                points.append(pt)
    while len(points) < samples // 2:
        fx = dict(rng.choice(fixed_choices))
        pt = {v: Fraction(rng.choice((0, 0, 0, 1, -1, 2, -3, 5)), rng.choice((1, 1, 2))) for v in variables}
        pt.update(fx)
        points.append(pt)
    for ideal in (i1, i2):
        n = 0
        while n < samples // 4 and n < 4 * samples:
            fx = dict(rng.choice(fixed_choices))
            got = _linear_solve_points(list(ideal.generators), variables, rng, fx, 8)
            points.extend(got)
            n += max(len(got), 1)
    for pt in points:
        if i1.vanishes_at(pt) != i2.vanishes_at(pt):
            return False, pt
    return True, None


# -- specialization --------------------------------------------------------

def specialize(fam: DualFamily, values, check: bool = True) -> ManinTriple:
    """Numeric triple at the given free-parameter (and algebra-parameter) values."""
    vals = {k: Fraction(v) for k, v in dict(values).items()}
    missing = [t for t in fam.free_params if t not in vals]
    if missing:
        raise KeyError(f"missing values for {missing}")
    fd = fam.general().subs(vals)
    f = fam.f.subs(vals) if not fam.f.is_numeric() else fam.f
    return new_triple(f, fd, (), check=check)


def specialize_components(fam: DualFamily, values) -> dict:
    return {k: substitute(v, values) for k, v in fam.components().items()}


def family_for(name: str, a=None):
    """Family of the standard form of a Bianchi class; ``a`` may be a number or None (symbolic)."""
    from .manin import Constraint

    cls = canonical_class(name)
    cons = ()
    if cls in ("VI_a", "VII_a"):
        if a is None:
            a = MultiPoly.var("a")
            cons = (Constraint(a, ">0"),) + ((Constraint(a - 1, "!=0"),) if cls == "VI_a" else ())
    f = standard_form(cls, a)
    return solve_dual_family(f, cons)


EXPECTED_DIMS = {"I": 9, "II": 6, "III": 4, "IV": 4, "V": 6, "VI_0": 4, "VI_a": 4,
                 "VII_0": 4, "VII_a": 4, "VIII": 3, "IX": 3}


def parameters_from_tensor(fam: DualFamily, fd: StructureConstants) -> dict:
    """Free-parameter values reproducing fd (which must lie in the family)."""
    vals = {t: fd.c[c[0]][c[1]][c[2]]
            for t, c in zip(fam.free_params, (COLUMNS[COLUMN_NAMES.index(n)] for n in fam.free_columns))}
    if not fam.contains(fd):
        raise ValueError("tensor is not in the family")
    return vals


__all__ = [
    "parameters_from_tensor",
    "COLUMNS", "COLUMN_NAMES", "LinearSystem", "DualFamily", "QuadraticIdeal", "mixed_jacobi_system",
    "bareiss", "solve_dual_family", "dual_jacobi_ideal", "ideal_equivalent", "specialize", "family_for",
    "substitute_components", "EXPECTED_DIMS", "JacobiViolation", "scalar_variables", "jacobi_residual",
]

