"""Exact scalars: rationals, sparse multivariate polynomials and rational functions.

Rationals are :class:`fractions.Fraction`.  Polynomials are over the rationals
in named parameters, stored sparsely with graded-lexicographic term order.
Rational functions are only reduced by monomial content, rational content and
(univariate case) polynomial gcd; equality is always decided exactly by
cross-multiplication, so incomplete reduction never affects zero tests.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import reduce

from .errors import MissingVariableError

Rational = Fraction


def rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def format_rational(x: Fraction) -> str:
    return str(x)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients.

    ``vars`` is the sorted tuple of variables that actually occur; ``terms``
    maps exponent tuples (aligned with ``vars``) to nonzero Fractions.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, terms=None, vars=()):
        vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != len(vars):
                    raise ValueError("exponent vector length does not match variables")
                c = rational(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        # keep only variables that occur, in sorted order
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        order = sorted(used, key=lambda i: vars[i])
        if len(set(vars[i] for i in order)) != len(order):
            raise ValueError("duplicate variable names")
        self.vars = tuple(vars[i] for i in order)
        self.terms = {tuple(e[i] for i in order): c for e, c in clean.items()}

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> MultiPoly:
        return cls({(): rational(c)})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls({(1,): Fraction(1)}, (name,))

    @classmethod
    def coerce(cls, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant(self) -> Fraction:
        if self.vars:
            raise ValueError(f"polynomial {self} is not constant")
        return self.terms.get((), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading(self):
        """Leading (exponents, coefficient) in graded-lex order."""
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def content(self) -> Fraction:
        """Positive rational g such that self/g has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        nums = reduce(math.gcd, (c.numerator for c in self.terms.values()))
        dens = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in self.terms.values()))
        return Fraction(abs(nums), dens)

    def primitive(self) -> MultiPoly:
        """Integer-coprime multiple with positive leading coefficient."""
        if not self.terms:
            return self
        g = self.content()
        if self.leading()[1] < 0:
            g = -g
        return self.scale(1 / g)

    def monomial_gcd(self) -> tuple:
        if not self.terms:
            return tuple(0 for _ in self.vars)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    # -- arithmetic ---------------------------------------------------------
    def _aligned(self, other: MultiPoly):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = tuple(sorted(set(self.vars) | set(other.vars)))
        return vs, self._remap(vs), other._remap(vs)

    def _remap(self, vs):
        idx = [vs.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vs)
            for i, k in zip(idx, e):
                ne[i] = k
            out[tuple(ne)] = c
        return out

    def scale(self, c) -> MultiPoly:
        c = rational(c)
        if not c:
            return _ZERO
        return _raw(self.vars, {e: v * c for e, v in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(out, vs)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        vs, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out, vs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(1 / rational(other))
        if isinstance(other, MultiPoly):
            if other.is_constant():
                return self / other.constant()
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(MultiPoly.const(other), self)
        return NotImplemented

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Quotient of an exact division; ValueError if a remainder is left."""
        other = MultiPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self.scale(1 / other.constant())
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divmod(self, other: MultiPoly):
        """Multivariate division by a single divisor (grlex leading terms)."""
        vs = tuple(sorted(set(self.vars) | set(other.vars)))
        rem = self._remap(vs) if self.vars != vs else dict(self.terms)
        div = other._remap(vs) if other.vars != vs else dict(other.terms)
        lt = max(div, key=_grlex_key)
        lc = div[lt]
        quot, left = {}, {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            if all(x >= y for x, y in zip(e, lt)):
                qe = tuple(x - y for x, y in zip(e, lt))
                qc = c / lc
                quot[qe] = quot.get(qe, 0) + qc
                for de, dc in div.items():
                    te = tuple(x + y for x, y in zip(qe, de))
                    v = rem.get(te, 0) - qc * dc
                    if v:
                        rem[te] = v
                    else:
                        rem.pop(te, None)
            else:
                left[e] = c
                del rem[e]
        return MultiPoly(quot, vs), MultiPoly(left, vs)

    # -- evaluation ---------------------------------------------------------
    def eval(self, assignment) -> Fraction:
        vals = []
        for v in self.vars:
            if v not in assignment:
                raise MissingVariableError(v)
            vals.append(rational(assignment[v]))
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x**k
            total += t
        return total

    def subs(self, assignment):
        """Substitute any subset of variables by scalars (Fraction/MultiPoly/RatFunc)."""
        if not any(v in assignment for v in self.vars):
            return self
        total = _ZERO
        for e, c in self.terms.items():
            keep = {}
            t = Fraction(c)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                if v in assignment:
                    t = t * (to_scalar(assignment[v]) ** k)
                else:
                    keep[v] = k
            mono = MultiPoly({tuple(keep.values()): 1}, tuple(keep))
            total = total + t * mono
        return total

    def coeffs_in(self, var: str) -> dict:
        """Coefficients as polynomials in the remaining variables, keyed by power of var."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly(t, rest) for k, t in buckets.items()}

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def _raw(vars, terms):
    p = MultiPoly.__new__(MultiPoly)
    p.vars = vars
    p.terms = terms
    return p


_ZERO = MultiPoly()
_ONE = MultiPoly.const(1)


# -- univariate helpers -------------------------------------------------------

def _to_dense(p: MultiPoly, var: str) -> list:
    if p.is_zero():
        return []
    if p.is_constant():
        return [p.constant()]
    out = [Fraction(0)] * (p.degree(var) + 1)
    for e, c in p.terms.items():
        out[e[0]] = c
    return out


def _from_dense(coeffs, var: str) -> MultiPoly:
    return MultiPoly({(k,): c for k, c in enumerate(coeffs) if c}, (var,))


def _dense_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def univariate_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Monic gcd of two polynomials in (at most) the same single variable."""
    vs = set(p.vars) | set(q.vars)
    if len(vs) > 1:
        raise ValueError("univariate_gcd needs polynomials in one variable")
    if not vs:
        return _ONE if (p or q) else _ZERO
    var = vs.pop()
    a, b = _to_dense(p, var), _to_dense(q, var)
    while b:
        a, b = b, _dense_rem(a, b)
    if not a:
        return _ZERO
    lead = a[-1]
    return _from_dense([c / lead for c in a], var)


def poly_gcd_in(polys, var: str) -> MultiPoly:
    """gcd of univariate polynomials in ``var`` (constants allowed)."""
    g = _ZERO
    for p in polys:
        g = univariate_gcd(g, p) if g else (p.primitive() if p else g)
        if g.is_constant() and g:
            return _ONE
    if g and not g.is_constant():
        return g.scale(1 / g.leading()[1])
    return g


class RatFunc:
    """Quotient of two polynomials with a nonzero, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = MultiPoly.coerce(num)
        den = MultiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        if not den.is_constant():
            num, den = _cancel(num, den)
        lc = den.leading()[1]
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    @classmethod
    def coerce(cls, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        return cls(MultiPoly.coerce(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def variables(self):
        return tuple(sorted(set(self.num.vars) | set(self.den.vars)))

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    def eval(self, assignment) -> Fraction:
        d = self.den.eval(assignment)
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at {assignment}")
        return self.num.eval(assignment) / d

    def subs(self, assignment):
        return to_scalar(self.num.subs(assignment)) / to_scalar(self.den.subs(assignment))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        d = str(self.den)
        if len(self.den.terms) > 1 or (self.den.terms and next(iter(self.den.terms.values())) != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _cancel(num: MultiPoly, den: MultiPoly):
    # shared monomial factor
    vs = tuple(sorted(set(num.vars) | set(den.vars)))
    nt, dt = num._remap(vs), den._remap(vs)
    g = tuple(min(min(e[i] for e in nt), min(e[i] for e in dt)) for i in range(len(vs)))
    if any(g):
        nt = {tuple(x - y for x, y in zip(e, g)): c for e, c in nt.items()}
        dt = {tuple(x - y for x, y in zip(e, g)): c for e, c in dt.items()}
        num, den = MultiPoly(nt, vs), MultiPoly(dt, vs)
    if den.is_constant():
        return num, den
    if len(set(num.vars) | set(den.vars)) == 1:
        g = univariate_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        return num, den
    q, r = num.divmod(den)
    if r.is_zero():
        return q, _ONE
    return num, den


# -- generic scalar helpers ---------------------------------------------------

def to_scalar(x):
    """Canonical scalar: Fraction when constant, MultiPoly when polynomial, else RatFunc."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, MultiPoly):
        return x.constant() if x.is_constant() else x
    if isinstance(x, RatFunc):
        if x.den.is_constant():
            return to_scalar(x.num.scale(1 / x.den.constant()))
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not a scalar: {x!r}")


def is_numeric(x) -> bool:
    return isinstance(x, (int, Fraction))


def scalar_variables(x) -> tuple:
    if isinstance(x, MultiPoly):
        return x.vars
    if isinstance(x, RatFunc):
        return x.variables()
    return ()


def evaluate(x, assignment) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return x.eval(assignment)


def substitute(x, assignment):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return to_scalar(x.subs(assignment))


def numerator(x) -> MultiPoly:
    if isinstance(x, RatFunc):
        return x.num
    return MultiPoly.coerce(x)


def format_scalar(x) -> str:
    return str(to_scalar(x))


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_scalar(text: str):
    """Parse "3/4", "a^2 - 1", "(a+1)/(a-1)", "-b/a" into a canonical scalar.

    Raises ValueError on syntax errors and ZeroDivisionError on e.g. "1/0".
    """
    if not isinstance(text, str):
        raise TypeError("scalar text must be a string")
    src = text.replace("^", "**").strip()
    if not src:
        raise ValueError("empty scalar")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return MultiPoly.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = walk(node.left)
                exp = walk(node.right)
                if not (isinstance(exp, Fraction) and exp.denominator == 1):
                    raise ValueError(f"non-integer exponent in {text!r}")
                return base ** int(exp)
            op = _BINOPS.get(type(node.op))
            if op is None:
                raise ValueError(f"unsupported operator in {text!r}")
            return op(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported syntax in {text!r}")

    return to_scalar(walk(tree))
