"""Structure constants of (mostly 3-dimensional) real Lie algebras.

Indices are 0-based internally: ``f[i][j][k]`` is the coefficient of ``X_k``
in ``[X_i, X_j]``.  Everything user facing (JSON, brackets, printed output)
is 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AntisymmetryError,
    NotALieAlgebraError,
    ParametricInputError,
    SchemaError,
    SingularMatrixError,
)
from .exact import format_scalar, is_numeric, parse_scalar, scalar_variables, substitute, to_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def epsilon(i, j, k) -> int:
    """Levi-Civita symbol on 0-based indices."""
    return (i - j) * (j - k) * (k - i) // 2


class StructureConstants:
    """Antisymmetric rank-(2,1) tensor; antisymmetry is checked on construction."""

    __slots__ = ("c", "dim")

    def __init__(self, entries, check: bool = True):
        n = len(entries)
        self.dim = n
        self.c = tuple(
            tuple(tuple(to_scalar(entries[i][j][k]) for k in range(n)) for j in range(n)) for i in range(n)
        )
        if check:
            for i in range(n):
                for j in range(i, n):
                    for k in range(n):
                        if self.c[i][j][k] != -self.c[j][i][k]:
                            raise AntisymmetryError(
                                f"f_{i + 1}{j + 1}^{k + 1} = {self.c[i][j][k]} but "
                                f"f_{j + 1}{i + 1}^{k + 1} = {self.c[j][i][k]}"
                            )

    @classmethod
    def zero(cls, dim: int = 3) -> StructureConstants:
        return cls([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)], check=False)

    @classmethod
    def from_brackets(cls, brackets, dim: int = 3) -> StructureConstants:
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices, completing antisymmetrically."""
        e = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), comps in brackets.items():
            if i == j:
                if any(to_scalar(v) != 0 for v in comps.values()):
                    raise AntisymmetryError(f"[X_{i}, X_{i}] must vanish")
                continue
            for k, v in comps.items():
                v = to_scalar(v)
                i0, j0, k0 = i - 1, j - 1, k - 1
                for (p, q, s) in ((i0, j0, v), (j0, i0, -v)):
                    old = e[p][q][k0]
                    if old != 0 and old != s:
                        raise AntisymmetryError(f"conflicting values for [X_{i}, X_{j}] component {k}")
                    e[p][q][k0] = s
        return cls(e, check=False)

    def __getitem__(self, i):
        return self.c[i]

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.dim == other.dim and all(
            self.c[i][j][k] == other.c[i][j][k]
            for i in range(self.dim) for j in range(self.dim) for k in range(self.dim)
        )

    __hash__ = None

    def is_numeric(self) -> bool:
        return all(is_numeric(x) for row in self.c for col in row for x in col)

    def variables(self) -> tuple:
        names = set()
        for row in self.c:
            for col in row:
                for x in col:
                    names.update(scalar_variables(x))
        return tuple(sorted(names))

    def map(self, fn) -> StructureConstants:
        n = self.dim
        return StructureConstants(
            [[[fn(self.c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)], check=False
        )

    def subs(self, values) -> StructureConstants:
        return self.map(lambda x: substitute(x, values))

    def scaled(self, s) -> StructureConstants:
        return self.map(lambda x: to_scalar(x * s))

    def __add__(self, other):
        n = self.dim
        return StructureConstants(
            [[[self.c[i][j][k] + other.c[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)],
            check=False,
        )

    def brackets(self):
        """Nonzero ``(i, j, k, coeff)`` with i < j, 1-based."""
        n = self.dim
        return [
            (i + 1, j + 1, k + 1, self.c[i][j][k])
            for i in range(n) for j in range(i + 1, n) for k in range(n)
            if self.c[i][j][k] != 0
        ]

    def to_json(self) -> dict:
        return {
            "basis_dim": self.dim,
            "brackets": [{"i": i, "j": j, "k": k, "c": format_scalar(c)} for i, j, k, c in self.brackets()],
        }

    @classmethod
    def from_json(cls, data, pointer: str = "") -> StructureConstants:
        if not isinstance(data, dict):
            raise SchemaError(pointer, "algebra must be an object")
        dim = data.get("basis_dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise SchemaError(f"{pointer}/basis_dim", "must be a positive integer")
        items = data.get("brackets")
        if not isinstance(items, list):
            raise SchemaError(f"{pointer}/brackets", "must be a list")
        br = {}
        for n, item in enumerate(items):
            p = f"{pointer}/brackets/{n}"
            if not isinstance(item, dict):
                raise SchemaError(p, "bracket entry must be an object")
            try:
                i, j, k = item["i"], item["j"], item["k"]
            except KeyError as exc:
                raise SchemaError(p, f"missing key {exc.args[0]!r}") from None
            for key, v in (("i", i), ("j", j), ("k", k)):
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= dim:
                    raise SchemaError(f"{p}/{key}", f"index must be an integer in 1..{dim}")
            if i >= j:
                raise SchemaError(f"{p}/j", "brackets list only i < j")
            try:
                c = parse_scalar(item["c"])
            except KeyError:
                raise SchemaError(p, "missing key 'c'") from None
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise SchemaError(f"{p}/c", f"bad scalar {item['c']!r}: {exc}") from None
            comps = br.setdefault((i, j), {})
            if k in comps:
                raise SchemaError(p, f"duplicate bracket component ({i},{j},{k})")
            comps[k] = c
        return cls.from_brackets(br, dim)

    def __repr__(self):
        body = ", ".join(f"[{i},{j}]^{k}={format_scalar(c)}" for i, j, k, c in self.brackets())
        return f"StructureConstants({body or '0'})"


# -- Jacobi ------------------------------------------------------------------

def jacobi_residual(f: StructureConstants):
    """R[i][j][m][n] = sum_l f_ij^l f_lm^n + f_jm^l f_li^n + f_mi^l f_lj^n."""
    n = f.dim
    c = f.c
    R = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, m in itertools.product(range(n), repeat=3):
        row = R[i][j][m]
        for l in range(n):
            a, b, d = c[i][j][l], c[j][m][l], c[m][i][l]
            if a == 0 and b == 0 and d == 0:
                continue
            cm, ci, cj = c[l][m], c[l][i], c[l][j]
            for q in range(n):
                row[q] = row[q] + a * cm[q] + b * ci[q] + d * cj[q]
    return [[[[to_scalar(x) for x in r] for r in rm] for rm in rj] for rj in R]


def first_nonzero(array):
    """(index tuple, value) of the first nonzero entry of a nested list, or None."""
    stack = [((), array)]
    while stack:
        idx, v = stack.pop(0)
        if isinstance(v, list):
            stack = [(idx + (k,), x) for k, x in enumerate(v)] + stack
        elif v != 0:
            return idx, v
    return None


def is_lie(f: StructureConstants) -> bool:
    return first_nonzero(jacobi_residual(f)) is None


# -- decomposition -----------------------------------------------------------

@dataclass(frozen=True)
class NADecomposition:
    a_vec: tuple
    n_mat: tuple


def na_decompose(f: StructureConstants) -> NADecomposition:
    """Split f into a trace vector and a symmetric matrix.

    f_ij^k = eps_ijl n^lk + delta^k_i a_j - delta^k_j a_i.
    """
    if f.dim != 3:
        raise ValueError("decomposition is defined for 3-dimensional algebras")
    c = f.c
    half = Fraction(1, 2)
    a = tuple(to_scalar(-half * sum((c[i][j][j] for j in range(3)), ZERO)) for i in range(3))
    n = [[ZERO] * 3 for _ in range(3)]
    for m in range(3):
        for k in range(3):
            s = ZERO
            for i in range(3):
                for j in range(3):
                    e = epsilon(i, j, m)
                    if e:
                        s = s + e * c[i][j][k]
            t = ZERO
            for j in range(3):
                e = epsilon(k, j, m)
                if e:
                    t = t + e * a[j]
            n[m][k] = to_scalar(half * s - t)
    for m in range(3):
        for k in range(m + 1, 3):
            if n[m][k] != n[k][m]:
                raise AssertionError("decomposition produced a non-symmetric n matrix")
    return NADecomposition(a, tuple(tuple(r) for r in n))


def recompose(dec: NADecomposition) -> StructureConstants:
    a, n = dec.a_vec, dec.n_mat
    e = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k in itertools.product(range(3), repeat=3):
        v = ZERO
        for l in range(3):
            s = epsilon(i, j, l)
            if s:
                v = v + s * n[l][k]
        if k == i:
            v = v + a[j]
        if k == j:
            v = v - a[i]
        e[i][j][k] = v
    return StructureConstants(e, check=False)


# -- Bianchi forms -----------------------------------------------------------

# (a, n1, n2, n3); "a" marks the free parameter of the VI_a / VII_a families
BIANCHI_TABLE = {
    "I": (0, 0, 0, 0),
    "II": (0, 1, 0, 0),
    "VII_0": (0, 1, 1, 0),
    "VI_0": (0, 1, -1, 0),
    "IX": (0, 1, 1, 1),
    "VIII": (0, 1, 1, -1),
    "V": (1, 0, 0, 0),
    "IV": (1, 0, 0, 1),
    "VII_a": ("a", 0, 1, 1),
    "III": (1, 0, 1, -1),
    "VI_a": ("a", 0, 1, -1),
}

BIANCHI_CLASSES = ("I", "II", "III", "IV", "V", "VI_0", "VI_a", "VII_0", "VII_a", "VIII", "IX")

_ALIASES = {"VI0": "VI_0", "VIa": "VI_a", "VII0": "VII_0", "VIIa": "VII_a"}


def canonical_class(name: str) -> str:
    name = name.strip()
    name = _ALIASES.get(name, name)
    if name not in BIANCHI_TABLE:
        raise ValueError(f"unknown Bianchi class {name!r}")
    return name


@dataclass(frozen=True)
class BianchiParams:
    a: object
    n1: object
    n2: object
    n3: object


@dataclass(frozen=True)
class BianchiType:
    name: str
    param_a_squared: Fraction | None = None

    def __post_init__(self):
        needs = self.name in ("VI_a", "VII_a")
        if needs != (self.param_a_squared is not None):
            raise ValueError(f"{self.name} {'requires' if needs else 'takes no'} parameter")
        if needs:
            if not self.param_a_squared > 0:
                raise ValueError("a^2 must be positive")
            if self.name == "VI_a" and self.param_a_squared == 1:
                raise ValueError("VI_a with a = 1 is type III")

    def __str__(self):
        if self.param_a_squared is None:
            return self.name
        return f"{self.name}(a^2={self.param_a_squared})"


def from_bianchi(p: BianchiParams) -> StructureConstants:
    """[X1,X2] = -a X2 + n3 X3, [X2,X3] = n1 X1, [X3,X1] = n2 X2 + a X3."""
    return StructureConstants.from_brackets({
        (1, 2): {2: -to_scalar(p.a), 3: p.n3},
        (2, 3): {1: p.n1},
        (3, 1): {2: p.n2, 3: p.a},
    })


def standard_form(name: str, a=None) -> StructureConstants:
    name = canonical_class(name)
    row = BIANCHI_TABLE[name]
    if row[0] == "a":
        if a is None:
            raise ValueError(f"{name} needs the parameter a")
        a_val = to_scalar(parse_scalar(a) if isinstance(a, str) else a)
        return from_bianchi(BianchiParams(a_val, *row[1:]))
    return from_bianchi(BianchiParams(*row))


# -- exact matrix helpers ----------------------------------------------------

def identity(n: int = 3):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(A, B):
    return [[to_scalar(sum((A[i][k] * B[k][j] for k in range(len(B))), ZERO)) for j in range(len(B[0]))]
            for i in range(len(A))]


def determinant(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return to_scalar(A[0][0] * A[1][1] - A[0][1] * A[1][0])
    if n == 3:
        return to_scalar(
            A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
        )
    total = ZERO
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        total = total + (-1) ** j * A[0][j] * determinant(minor)
    return to_scalar(total)


def matrix_inverse(A):
    """Gauss-Jordan inverse over the scalars; pivots must not vanish identically."""
    n = len(A)
    M = [[to_scalar(x) for x in row] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [to_scalar(x / p) for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                fct = M[r][col]
                M[r] = [to_scalar(x - fct * y) for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def change_basis(f: StructureConstants, A, A_inv=None) -> StructureConstants:
    """Structure constants in the basis X'_i = X_k A^k_i (A[k][i] = A^k_i)."""
    n = f.dim
    if A_inv is None:
        A_inv = matrix_inverse(A)
    c = f.c
    # T_ij^p = A^m_i A^n_j f_mn^p
    T = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for m in range(n):
        for q in range(n):
            cmq = c[m][q]
            if all(x == 0 for x in cmq):
                continue
            for i in range(n):
                ami = A[m][i]
                if ami == 0:
                    continue
                for j in range(n):
                    w = ami * A[q][j]
                    if w == 0:
                        continue
                    Tij = T[i][j]
                    for p in range(n):
                        if cmq[p] != 0:
                            Tij[p] = Tij[p] + w * cmq[p]
    out = [[[to_scalar(sum((A_inv[k][p] * T[i][j][p] for p in range(n)), ZERO)) for k in range(n)]
            for j in range(n)] for i in range(n)]
    return StructureConstants(out, check=False)


# -- classification ----------------------------------------------------------

def symmetric_signature(S):
    """(n_positive, n_negative) of a rational symmetric matrix by congruence diagonalization."""
    n = len(S)
    M = [[Fraction(x) for x in row] for row in S]
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # X_i -> X_i + X_j creates a nonzero diagonal entry 2 M_ij
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            piv = i
        d = M[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            fct = M[r][piv] / d
            if fct:
                for k in range(n):
                    M[r][k] -= fct * M[piv][k]
                for k in range(n):
                    M[k][r] -= fct * M[k][piv]
    return pos, neg


def _solve_coords(basis, v):
    """Coordinates of v in the span of two independent 3-vectors (exact)."""
    (u1, u2) = basis
    for p, q in ((0, 1), (0, 2), (1, 2)):
        det = u1[p] * u2[q] - u1[q] * u2[p]
        if det:
            x = (v[p] * u2[q] - v[q] * u2[p]) / det
            y = (u1[p] * v[q] - u1[q] * v[p]) / det
            if all(x * u1[k] + y * u2[k] == v[k] for k in range(3)):
                return x, y
            raise AssertionError("vector is not in the span")
    raise AssertionError("degenerate basis")


def bracket_vectors(f: StructureConstants, x, y):
    n = f.dim
    return [to_scalar(sum((x[i] * y[j] * f.c[i][j][k] for i in range(n) for j in range(n)
                           if x[i] != 0 and y[j] != 0), ZERO)) for k in range(n)]


def unimodular_invariants(f: StructureConstants):
    """For a non-unimodular 3D algebra: (M, tr M, det M) where M = ad_X on ker(tr ad).

    X is any vector with tr ad_X != 0; the kernel of the trace form is an
    abelian ideal, so M is well defined up to a nonzero scale of X and the
    ratio tr(M)^2 / det(M) is an invariant.
    """
    dec = na_decompose(f)
    a = dec.a_vec
    p = next(i for i in range(3) if a[i] != 0)
    # kernel of the functional v -> a.v
    others = [i for i in range(3) if i != p]
    basis = []
    for q in others:
        v = [ZERO] * 3
        v[q] = a[p]
        v[p] = -a[q]
        basis.append(v)
    X = [ONE if i == p else ZERO for i in range(3)]
    cols = [_solve_coords(basis, bracket_vectors(f, X, u)) for u in basis]
    M = [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]
    tr = M[0][0] + M[1][1]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return M, tr, det


def classify_bianchi(f: StructureConstants) -> BianchiType:
    """Bianchi type of a numeric 3-dimensional Lie algebra, invariant under change of basis."""
    if f.dim != 3:
        raise ValueError("only 3-dimensional algebras are classified")
    if not f.is_numeric():
        raise ParametricInputError("classify_bianchi needs numeric structure constants; sample the parameters")
    bad = first_nonzero(jacobi_residual(f))
    if bad is not None:
        idx, v = bad
        raise NotALieAlgebraError(f"Jacobi residual {v} at {tuple(i + 1 for i in idx)}")
    dec = na_decompose(f)
    pos, neg = symmetric_signature(dec.n_mat)
    rank = pos + neg
    definite = pos == 0 or neg == 0
    if all(x == 0 for x in dec.a_vec):
        if rank == 0:
            return BianchiType("I")
        if rank == 1:
            return BianchiType("II")
        if rank == 2:
            return BianchiType("VII_0" if definite else "VI_0")
        return BianchiType("IX" if definite else "VIII")
    M, tr, det = unimodular_invariants(f)
    if det == 0:
        if rank != 2:
            raise AssertionError("type III must have rank(n) = 2")
        return BianchiType("III")
    chi = tr * tr / det
    disc = tr * tr - 4 * det
    if disc == 0:
        scalar = M[0][1] == 0 and M[1][0] == 0 and M[0][0] == M[1][1]
        expected = 0 if scalar else 1
        if rank != expected:
            raise AssertionError("rank of n inconsistent with the ad-restriction")
        return BianchiType("V" if scalar else "IV")
    if rank != 2:
        raise AssertionError("rank of n inconsistent with the ad-restriction")
    if disc < 0:
        return BianchiType("VII_a", chi / (4 - chi))
    return BianchiType("VI_a", chi / (chi - 4))
