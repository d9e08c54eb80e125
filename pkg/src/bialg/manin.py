"""Manin triples, Drinfeld doubles and the equivalent Lie bialgebra data.

A triple is stored as two 3-dimensional structure tensors: ``f`` for the
first subalgebra (``f[i][j][k]`` = f_ij^k) and ``f_dual`` for the second
(``f_dual[i][j][k]`` = ft^ij_k), paired canonically <X_i, Xt^j> = delta_i^j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ConstraintViolation, JacobiViolation, SchemaError, SingularMatrixError
from .exact import (
    MultiPoly,
    RatFunc,
    evaluate,
    format_scalar,
    numerator,
    parse_scalar,
    to_scalar,
)
from .liealg import (
    ONE,
    ZERO,
    StructureConstants,
    change_basis,
    classify_bianchi,
    determinant,
    first_nonzero,
    identity,
    jacobi_residual,
    matrix_inverse,
)

RELATIONS = (">0", "!=0", "=0")


@dataclass(frozen=True)
class Constraint:
    poly: object
    rel: str

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")

    def holds(self, values) -> bool:
        v = evaluate(to_scalar(self.poly), values)
        if self.rel == ">0":
            return v > 0
        if self.rel == "!=0":
            return v != 0
        return v == 0

    def to_json(self):
        return {"poly": format_scalar(self.poly), "rel": self.rel}

    @classmethod
    def parse(cls, poly, rel):
        return cls(to_scalar(parse_scalar(poly) if isinstance(poly, str) else poly), rel)

    def __str__(self):
        return f"{format_scalar(self.poly)} {self.rel[:-1]} 0"


@dataclass(frozen=True)
class ManinTriple:
    f: StructureConstants
    f_dual: StructureConstants
    constraints: tuple = field(default=())

    def is_numeric(self) -> bool:
        return self.f.is_numeric() and self.f_dual.is_numeric()

    def variables(self) -> tuple:
        return tuple(sorted(set(self.f.variables()) | set(self.f_dual.variables())))

    def subs(self, values) -> ManinTriple:
        return ManinTriple(self.f.subs(values), self.f_dual.subs(values), self.constraints)

    def __eq__(self, other):
        if not isinstance(other, ManinTriple):
            return NotImplemented
        return self.f == other.f and self.f_dual == other.f_dual

    __hash__ = None

    def to_json(self):
        return {
            "g": self.f.to_json(),
            "g_dual": self.f_dual.to_json(),
            "constraints": [c.to_json() for c in self.constraints],
        }

    @classmethod
    def from_json(cls, data, pointer: str = "", check: bool = True) -> ManinTriple:
        if not isinstance(data, dict):
            raise SchemaError(pointer, "triple must be an object")
        for key in ("g", "g_dual"):
            if key not in data:
                raise SchemaError(pointer, f"missing key {key!r}")
        f = StructureConstants.from_json(data["g"], f"{pointer}/g")
        fd = StructureConstants.from_json(data["g_dual"], f"{pointer}/g_dual")
        cons = parse_constraints(data.get("constraints", []), f"{pointer}/constraints")
        return new_triple(f, fd, cons, check=check)


def parse_constraints(items, pointer=""):
    if not isinstance(items, list):
        raise SchemaError(pointer, "constraints must be a list")
    out = []
    for n, c in enumerate(items):
        p = f"{pointer}/{n}"
        if not isinstance(c, dict) or "poly" not in c or "rel" not in c:
            raise SchemaError(p, "constraint needs 'poly' and 'rel'")
        if c["rel"] not in RELATIONS:
            raise SchemaError(f"{p}/rel", f"relation must be one of {RELATIONS}")
        try:
            out.append(Constraint.parse(c["poly"], c["rel"]))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SchemaError(f"{p}/poly", str(exc)) from None
    return tuple(out)


# -- residual families -------------------------------------------------------

def _zeros(*shape):
    if len(shape) == 1:
        return [ZERO] * shape[0]
    return [_zeros(*shape[1:]) for _ in range(shape[0])]


def dual_jacobi_residual(fd: StructureConstants):
    """Jacobi identities of the second subalgebra in upper-index form.

    R[i][j][k][m] = ft^kl_m ft^ij_l + ft^il_m ft^jk_l + ft^jl_m ft^ki_l,
    which is -jacobi_residual(fd)[i][j][k][m] with the dual constants read as
    ordinary lower-index structure constants.
    """
    J = jacobi_residual(fd)
    return [[[[to_scalar(-x) for x in r] for r in rk] for rk in rj] for rj in J]


def _mixed(f: StructureConstants, fd: StructureConstants):
    # R[j][k][m][i]: coefficient of X_k in the Jacobi identity for (X_m, X_i, Xt^j)
    c, d = f.c, fd.c
    R = _zeros(3, 3, 3, 3)
    rng = range(3)
    for j, k, m, i in itertools.product(rng, repeat=4):
        s = ZERO
        for l in rng:
            s = (s + d[j][k][l] * c[m][i][l] + d[k][l][m] * c[l][i][j] + d[j][l][i] * c[l][m][k]
                 + d[j][l][m] * c[i][l][k] - d[k][l][i] * c[l][m][j])
        R[j][k][m][i] = to_scalar(s)
    return R


def mixed_jacobi_residual(t: ManinTriple):
    """R[j][k][m][i] = ft^jk_l f_mi^l + ft^kl_m f_li^j + ft^jl_i f_lm^k + ft^jl_m f_il^k - ft^kl_i f_lm^j.

    The last term enters with a minus sign; only then is R antisymmetric in
    (m, i) and equal to the X_k-component of the double's Jacobi identity.
    """
    return _mixed(t.f, t.f_dual)


def _residual_vanishes(value, constraints) -> bool:
    if value == 0:
        return True
    eqs = [c for c in constraints if c.rel == "=0"]
    if not eqs:
        return False
    # polynomial reduction by each linear equality constraint solved for one variable
    num = numerator(value)
    for c in eqs:
        p = numerator(c.poly)
        for v in p.vars:
            if p.degree(v) == 1:
                coeffs = p.coeffs_in(v)
                lead = coeffs.get(1)
                rest = coeffs.get(0, MultiPoly())
                if lead is not None and lead.is_constant():
                    num = numerator(to_scalar(num.subs({v: to_scalar(-rest / lead.constant())})))
                    break
    return num.is_zero()


def _check_family(name, residual, constraints):
    hit = None
    stack = [((), residual)]
    while stack:
        idx, v = stack.pop(0)
        if isinstance(v, list):
            stack = [(idx + (k,), x) for k, x in enumerate(v)] + stack
        elif not _residual_vanishes(v, constraints):
            hit = (idx, v)
            break
    if hit is not None:
        idx, v = hit
        raise JacobiViolation(name, tuple(i + 1 for i in idx), format_scalar(v))


def new_triple(f: StructureConstants, f_dual: StructureConstants, constraints=(), check: bool = True) -> ManinTriple:
    """Validated triple: Jacobi in both subalgebras and the mixed identities."""
    if f.dim != 3 or f_dual.dim != 3:
        raise ValueError("Manin triples here are built from 3-dimensional subalgebras")
    cons = tuple(c if isinstance(c, Constraint) else Constraint.parse(*c) for c in constraints)
    t = ManinTriple(f, f_dual, cons)
    if check:
        _check_family("jacobi", jacobi_residual(f), cons)
        _check_family("dual_jacobi", dual_jacobi_residual(f_dual), cons)
        _check_family("mixed", mixed_jacobi_residual(t), cons)
    return t


def triple_failures(t: ManinTriple):
    """Names of violated identity families (empty for a valid triple)."""
    out = []
    for name, res in (("jacobi", jacobi_residual(t.f)), ("dual_jacobi", dual_jacobi_residual(t.f_dual)),
                      ("mixed", mixed_jacobi_residual(t))):
        try:
            _check_family(name, res, t.constraints)
        except JacobiViolation as exc:
            out.append(exc)
    return out


# -- Drinfeld double ---------------------------------------------------------

BASIS_LABELS = ("X1", "X2", "X3", "Xt1", "Xt2", "Xt3")


@dataclass(frozen=True)
class DoubleAlgebra:
    g: StructureConstants
    pairing: tuple

    def nonzero_brackets(self):
        return self.g.brackets()

    def to_json(self):
        return {
            "basis": list(BASIS_LABELS),
            "brackets": [{"i": i, "j": j, "k": k, "c": format_scalar(c)} for i, j, k, c in self.g.brackets()],
        }


def canonical_pairing():
    P = [[ZERO] * 6 for _ in range(6)]
    for i in range(3):
        P[i][3 + i] = ONE
        P[3 + i][i] = ONE
    return tuple(tuple(r) for r in P)


def double_tensor(f: StructureConstants, fd: StructureConstants) -> StructureConstants:
    """[X_i, Xt^j] = f_ki^j Xt^k + ft^jk_i X_k, plus the two subalgebra brackets."""
    g = _zeros(6, 6, 6)
    for i, j, k in itertools.product(range(3), repeat=3):
        g[i][j][k] = f.c[i][j][k]
        g[3 + i][3 + j][3 + k] = fd.c[i][j][k]
    for i, j in itertools.product(range(3), repeat=2):
        for k in range(3):
            g[i][3 + j][3 + k] = f.c[k][i][j]
            g[i][3 + j][k] = fd.c[j][k][i]
            g[3 + j][i][3 + k] = to_scalar(-f.c[k][i][j])
            g[3 + j][i][k] = to_scalar(-fd.c[j][k][i])
    return StructureConstants(g, check=False)


def build_double(t: ManinTriple, check: bool = True) -> DoubleAlgebra:
    g = double_tensor(t.f, t.f_dual)
    if check:
        _check_family("double_jacobi", jacobi_residual(g), t.constraints)
    return DoubleAlgebra(g, canonical_pairing())


def pairing_ad_invariance_residual(d: DoubleAlgebra):
    """T[z][u][v] = <[Z,U],V> + <U,[Z,V]> over all basis triples."""
    g, P = d.g.c, d.pairing
    n = d.g.dim
    T = _zeros(n, n, n)
    for z, u, v in itertools.product(range(n), repeat=3):
        s = ZERO
        for w in range(n):
            s = s + g[z][u][w] * P[w][v] + g[z][v][w] * P[u][w]
        T[z][u][v] = to_scalar(s)
    return T


# -- transformations ---------------------------------------------------------

def _dual_change(fd: StructureConstants, A, A_inv) -> StructureConstants:
    # ft'^ij_k = (A^-1)^i_m (A^-1)^j_n ft^mn_p A^p_k: the dual basis changes with A^-1 acting
    # on upper indices, i.e. change_basis with (A^-1)^T.
    Binv_T = [[A_inv[j][i] for j in range(3)] for i in range(3)]
    A_T = [[A[j][i] for j in range(3)] for i in range(3)]
    return change_basis(fd, Binv_T, A_T)


def transform(t: ManinTriple, A, check: bool = True) -> ManinTriple:
    """Apply X'_i = X_k A^k_i, Xt'^j = (A^-1)^j_k Xt^k."""
    A = [[to_scalar(x) for x in row] for row in A]
    if determinant(A) == 0:
        raise SingularMatrixError("transformation matrix is singular")
    A_inv = matrix_inverse(A)
    f2 = change_basis(t.f, A, A_inv)
    fd2 = _dual_change(t.f_dual, A, A_inv)
    return new_triple(f2, fd2, t.constraints, check=check)


def dual_triple(t: ManinTriple) -> ManinTriple:
    return ManinTriple(t.f_dual, t.f, t.constraints)


# -- bialgebra view ----------------------------------------------------------

@dataclass(frozen=True)
class Cobracket:
    """delta[i][j][k]: coefficient of X_j (x) X_k in delta(X_i)."""

    delta: tuple


def cobracket(t: ManinTriple) -> Cobracket:
    d = t.f_dual.c
    return Cobracket(tuple(tuple(tuple(d[j][k][i] for k in range(3)) for j in range(3)) for i in range(3)))


def cobracket_from_tensor(delta) -> Cobracket:
    return Cobracket(tuple(tuple(tuple(to_scalar(x) for x in r) for r in m) for m in delta))


def co_jacobi_residual(c: Cobracket):
    """(id (x) delta) o delta plus its cyclic permutations of tensor slots.

    Returns R[i][p][q][r], the coefficient of X_p (x) X_q (x) X_r for input X_i.
    """
    d = c.delta
    # C[i][p][q][r] = sum_k d[i][p][k] d[k][q][r]
    C = _zeros(3, 3, 3, 3)
    for i, p, q, r in itertools.product(range(3), repeat=4):
        C[i][p][q][r] = sum((d[i][p][k] * d[k][q][r] for k in range(3)), ZERO)
    R = _zeros(3, 3, 3, 3)
    for i, p, q, r in itertools.product(range(3), repeat=4):
        # cyclic permutations of the three tensor slots
        R[i][p][q][r] = to_scalar(C[i][p][q][r] + C[i][q][r][p] + C[i][r][p][q])
    return R


def cocycle_residual(t: ManinTriple):
    """delta([x,y]) - ad_x delta(y) + ad_y delta(x) on basis pairs.

    Returns C[m][i][j][k], the X_j (x) X_k coefficient for x = X_m, y = X_i.
    """
    f = t.f.c
    d = cobracket(t).delta

    def ad_on_tensor(x, tensor):
        # (ad_x (x) 1 + 1 (x) ad_x) applied to sum T^{pq} X_p (x) X_q
        out = _zeros(3, 3)
        for p, q in itertools.product(range(3), repeat=2):
            w = tensor[p][q]
            if w == 0:
                continue
            for s in range(3):
                out[s][q] = out[s][q] + w * f[x][p][s]
                out[p][s] = out[p][s] + w * f[x][q][s]
        return out

    C = _zeros(3, 3, 3, 3)
    for m, i in itertools.product(range(3), repeat=2):
        lhs = _zeros(3, 3)
        for l in range(3):
            if f[m][i][l] != 0:
                for j, k in itertools.product(range(3), repeat=2):
                    lhs[j][k] = lhs[j][k] + f[m][i][l] * d[l][j][k]
        r1 = ad_on_tensor(m, d[i])
        r2 = ad_on_tensor(i, d[m])
        for j, k in itertools.product(range(3), repeat=2):
            C[m][i][j][k] = to_scalar(lhs[j][k] - r1[j][k] + r2[j][k])
    return C


def co_jacobi_as_dual_jacobi(R):
    """Reindex a co-Jacobi residual: E[i][j][k][m] = R[m][k][i][j].

    E then equals dual_jacobi_residual of the dual constants entry by entry.
    """
    E = _zeros(3, 3, 3, 3)
    for m, k, i, j in itertools.product(range(3), repeat=4):
        E[i][j][k][m] = R[m][k][i][j]
    return E


def cocycle_as_mixed(C):
    """Reindex a cocycle residual: M[j][k][m][i] = C[m][i][j][k], the layout of mixed_jacobi_residual."""
    M = _zeros(3, 3, 3, 3)
    for m, i, j, k in itertools.product(range(3), repeat=4):
        M[j][k][m][i] = C[m][i][j][k]
    return M


# -- equivalence witnesses ---------------------------------------------------

def verify_witness(t1: ManinTriple, t2: ManinTriple, A) -> bool:
    """True iff transform(t1, A) equals t2 entrywise."""
    A = [[to_scalar(x) for x in row] for row in A]
    if determinant(A) == 0:
        raise SingularMatrixError("witness matrix is singular")
    return transform(t1, A, check=False) == t2


def witness_values(bound: int):
    vals = {Fraction(p, q) for p in range(-bound, bound + 1) for q in (1, 2)}
    return sorted(vals)


def _as_float(s: StructureConstants):
    return np.array([[[float(x) for x in r] for r in m] for m in s.c])


_TOL = 1e-9


def _candidate_filter(A, f1, d1, f2, d2):
    """Boolean mask of witness candidates; A has shape (N, 3, 3), float."""
    # first algebra: f1(A e_i, A e_j) = A f2(e_i, e_j)
    lhs = np.einsum("bmi,bnj,mnp->bijp", A, A, f1, optimize=True)
    rhs = np.einsum("ijk,bpk->bijp", f2, A, optimize=True)
    ok = np.all(np.abs(lhs - rhs) < _TOL, axis=(1, 2, 3))
    if not ok.any():
        return ok
    B = A[ok]
    # dual algebra: ft1^mn_p A^p_k = A^m_i A^n_j ft2^ij_k
    lhs = np.einsum("mnp,bpk->bmnk", d1, B, optimize=True)
    rhs = np.einsum("bmi,bnj,ijk->bmnk", B, B, d2, optimize=True)
    ok2 = np.all(np.abs(lhs - rhs) < _TOL, axis=(1, 2, 3))
    ok2 &= np.abs(np.linalg.det(B)) > _TOL
    out = np.zeros_like(ok)
    out[np.flatnonzero(ok)[ok2]] = True
    return out


def search_witness(t1: ManinTriple, t2: ManinTriple, bound: int = 2, use_invariants: bool = True):
    """First A (column-major enumeration) with entries p/q, |p| <= bound, q in {1, 2},
    such that transform(t1, A) == t2; None if no candidate works.

    A float prefilter narrows the candidates and every returned matrix is
    re-checked exactly.  The identity is tried first.
    """
    if not (t1.is_numeric() and t2.is_numeric()):
        raise ValueError("witness search needs numeric triples")
    if t1 == t2:
        return identity(3)
    if use_invariants:
        try:
            if classify_bianchi(t1.f) != classify_bianchi(t2.f) or \
                    classify_bianchi(t1.f_dual) != classify_bianchi(t2.f_dual):
                return None
        except ValueError:
            return None
    vals = witness_values(bound)
    vf = np.array([float(v) for v in vals])
    cols = np.array(list(itertools.product(vf, repeat=3)))  # (C, 3) in lexicographic order
    C = len(cols)
    lookup = {tuple(np.round(c * 2).astype(int)): n for n, c in enumerate(cols)}
    f1, d1, f2, d2 = (_as_float(s) for s in (t1.f, t1.f_dual, t2.f, t2.f_dual))

    def exact_check(idx_triples):
        for n1, n2, n3 in sorted(idx_triples):
            A = [[vals[_digit(nc, r, len(vals))] for nc in (n1, n2, n3)] for r in range(3)]
            if determinant(A) != 0 and verify_witness(t1, t2, A):
                return A
        return None

    # a target bracket [e_i, e_j] with a component along the remaining index k fixes column k
    solvable = None
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
        if abs(f2[i, j, k]) > _TOL:
            solvable = (i, j, k)
            break
    if solvable is not None:
        i, j, k = solvable
        ci = np.repeat(np.arange(C), C)
        cj = np.tile(np.arange(C), C)
        Xi, Xj = cols[ci], cols[cj]
        br = np.einsum("bm,bn,mnp->bp", Xi, Xj, f1)
        Xk = (br - f2[i, j, i] * Xi - f2[i, j, j] * Xj) / f2[i, j, k]
        scaled = Xk * 2
        near = np.all(np.abs(scaled - np.round(scaled)) < 1e-7, axis=1)
        keep = []
        for b in np.flatnonzero(near):
            key = tuple(np.round(scaled[b]).astype(int))
            nk = lookup.get(key)
            if nk is not None:
                idx = [0, 0, 0]
                idx[i], idx[j], idx[k] = ci[b], cj[b], nk
                keep.append(idx)
        if not keep:
            return None
        keep = np.array(keep)
        A = np.stack([cols[keep[:, 0]], cols[keep[:, 1]], cols[keep[:, 2]]], axis=2)
        mask = _candidate_filter(A, f1, d1, f2, d2)
        return exact_check([tuple(x) for x in keep[mask]])
    # no column is determined: [e_1, e_2] has no e_3 component, so it constrains columns 1 and 2 alone
    c1 = np.repeat(np.arange(C), C)
    c2 = np.tile(np.arange(C), C)
    X1, X2 = cols[c1], cols[c2]
    br = np.einsum("bm,bn,mnp->bp", X1, X2, f1)
    near = np.all(np.abs(br - f2[0, 1, 0] * X1 - f2[0, 1, 1] * X2) < _TOL, axis=1)
    pairs = np.flatnonzero(near)
    found = []
    chunk = max(1, 200000 // C)
    for start in range(0, len(pairs), chunk):
        sel = pairs[start:start + chunk]
        p1 = np.repeat(c1[sel], C)
        p2 = np.repeat(c2[sel], C)
        p3 = np.tile(np.arange(C), len(sel))
        A = np.stack([cols[p1], cols[p2], cols[p3]], axis=2)
        mask = _candidate_filter(A, f1, d1, f2, d2)
        found.extend(zip(p1[mask].tolist(), p2[mask].tolist(), p3[mask].tolist()))
    return exact_check(found) if found else None


def _digit(n_col: int, row: int, base: int) -> int:
    # column index -> value index of its row-th entry (lexicographic, first entry most significant)
    return (n_col // base ** (2 - row)) % base


def check_constraints(constraints, values):
    for c in constraints:
        if not c.holds(values):
            raise ConstraintViolation(f"constraint {format_scalar(c.poly)} {c.rel} fails at {values}")


__all__ = [
    "Constraint", "ManinTriple", "DoubleAlgebra", "Cobracket", "new_triple", "mixed_jacobi_residual",
    "dual_jacobi_residual", "build_double", "pairing_ad_invariance_residual", "transform", "dual_triple",
    "cobracket", "co_jacobi_residual", "cocycle_residual", "verify_witness", "search_witness",
    "triple_failures", "canonical_pairing", "double_tensor", "RatFunc", "co_jacobi_as_dual_jacobi",
    "cocycle_as_mixed", "cobracket_from_tensor", "BASIS_LABELS",
]
