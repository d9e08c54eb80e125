"""Hand-transcribed reference data for the per-algebra dual solutions.

This is the independent oracle the solver is checked against.  Components
are named ``fIJ_K`` for f~^{IJ}_K; general forms use the free parameters
alpha, beta, gamma, delta, epsilon, zeta (and the algebra parameter a).
Where the printed text contains a slip, the printed variant is kept next to
the corrected one and the case is flagged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import MultiPoly, to_scalar
from .liealg import StructureConstants
from .manin import Constraint


@dataclass(frozen=True)
class Case:
    label: str
    when: str
    point: dict
    dual_type: str
    target: str | None = None
    target_values: dict = field(default_factory=dict)
    printed_target: str | None = None


@dataclass(frozen=True)
class GeneralForm:
    label: str
    brackets: dict
    constraints: tuple = ()
    cases: tuple = ()
    printed_brackets: dict | None = None
    allowed_types: tuple = ()

    @property
    def flagged(self) -> bool:
        return self.printed_brackets is not None

    def tensor(self, printed: bool = False) -> StructureConstants:
        src = self.printed_brackets if (printed and self.printed_brackets is not None) else self.brackets
        return StructureConstants.from_brackets(
            {ij: {k: to_scalar(v) for k, v in comps.items()} for ij, comps in src.items()})

    def parameters(self) -> tuple:
        return self.tensor().variables()


@dataclass(frozen=True)
class AppendixAlgebra:
    name: str
    relations: tuple
    generators: tuple
    forms: tuple
    a_constraints: tuple = ()

    def relation_polys(self):
        out = []
        for rel in self.relations:
            lhs, rhs = rel.split("=")
            out.append(to_scalar(lhs) - to_scalar(rhs))
        return out

    def generator_polys(self):
        return [MultiPoly.coerce(to_scalar(g)) for g in self.generators]


def _c(poly, rel):
    return Constraint.parse(poly, rel)


_A_POS = (_c("a", ">0"),)
_A_VI = (_c("a", ">0"), _c("a - 1", "!=0"))

_IX_FORM = {(1, 2): {1: "alpha", 2: "beta"}, (2, 3): {2: "gamma", 3: "-alpha"}, (3, 1): {1: "-gamma", 3: "-beta"}}
_VIII_FORM = {(1, 2): {1: "-alpha", 2: "beta"}, (2, 3): {2: "gamma", 3: "alpha"}, (3, 1): {1: "-gamma", 3: "-beta"}}
_TYPE_V_FORM = {(1, 2): {1: "-alpha", 2: "beta"}, (2, 3): {2: "gamma", 3: "alpha"}, (3, 1): {1: "-gamma", 3: "-beta"}}
_TRIPLE_X3_FORM = {(1, 2): {1: "-alpha", 2: "beta", 3: "gamma"}, (2, 3): {3: "alpha"}, (3, 1): {3: "-beta"}}

APPENDIX = {
    "IX": AppendixAlgebra(
        "IX",
        ("f23_3 = -f12_1", "f23_2 = f13_1", "f13_3 = f12_2", "f23_1 = 0", "f12_3 = 0", "f13_2 = 0"),
        (),
        (GeneralForm("1", _IX_FORM, cases=(
            Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "IX.a"),
            Case("b", "otherwise, b = sqrt(alpha^2 + beta^2 + gamma^2)", {"alpha": 1, "beta": 0, "gamma": 0},
                 "V", "IX.b", {"b": 1}),
            Case("b", "otherwise, b = sqrt(alpha^2 + beta^2 + gamma^2)", {"alpha": 1, "beta": 2, "gamma": 2},
                 "V", "IX.b", {"b": 3}),
        )),),
    ),
    "VIII": AppendixAlgebra(
        "VIII",
        ("f12_1 = -f23_3", "f13_1 = f23_2", "f12_2 = f13_3", "f23_1 = 0", "f13_2 = 0", "f12_3 = 0"),
        (),
        (GeneralForm("1", _VIII_FORM, cases=(
            Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "VIII.a"),
            Case("b.i", "alpha^2 + beta^2 - gamma^2 > 0", {"alpha": 1, "beta": 0, "gamma": 0},
                 "V", "VIII.b.i", {"b": 1}),
            Case("b.i", "alpha^2 + beta^2 - gamma^2 > 0", {"alpha": 0, "beta": 2, "gamma": 0},
                 "V", "VIII.b.i", {"b": 2}),
            Case("b.ii", "alpha^2 + beta^2 - gamma^2 < 0", {"alpha": 0, "beta": 0, "gamma": 1},
                 "V", "VIII.b.ii", {"b": 1}),
            Case("b.iii", "alpha^2 + beta^2 - gamma^2 = 0, not all zero", {"alpha": 1, "beta": 0, "gamma": 1},
                 "V", "VIII.b.iii"),
            Case("b.iii", "alpha^2 + beta^2 - gamma^2 = 0, not all zero", {"alpha": 0, "beta": 1, "gamma": 1},
                 "V", "VIII.b.iii"),
        )),),
    ),
    "VII_a": AppendixAlgebra(
        "VII_a",
        ("f13_2 = a*f13_3", "f12_3 = -a*f13_3",
         "f23_3 = -(a^2*f23_2 + a^2*f13_1 - f23_2 + f13_1)/(2*a)",
         "f12_1 = -(a^2*f23_2 + a^2*f13_1 + f23_2 - f13_1)/(2*a)", "f12_2 = f13_3"),
        ("4*a*f23_1*f13_3 + (a*f23_2)^2 + 2*a^2*f23_2*f13_1 + f23_2^2 - 2*f23_2*f13_1"
         " + (a*f13_1)^2 + f13_1^2",),
        (
            GeneralForm("1", {
                (1, 2): {1: "-(a^2*alpha + beta*a^2 + alpha - beta)/(2*a)", 2: "gamma", 3: "-gamma*a"},
                (2, 3): {1: "-(a^2*alpha^2 + 2*alpha*beta*a^2 + alpha^2 - 2*alpha*beta + beta^2*a^2 + beta^2)"
                            "/(4*gamma*a)",
                         2: "alpha", 3: "-(a^2*alpha + beta*a^2 - alpha + beta)/(2*a)"},
                (3, 1): {1: "-beta", 2: "-gamma*a", 3: "-gamma"},
            }, constraints=(_c("gamma", "!=0"),), cases=(
                Case("c", "b = -a*gamma", {"a": 2, "alpha": 0, "beta": 0, "gamma": 1}, "VII_a", "VII_a.c",
                     {"a": 2, "b": -2}),
                Case("c", "b = -a*gamma", {"a": 3, "alpha": 1, "beta": -1, "gamma": 1}, "VII_a", "VII_a.c",
                     {"a": 3, "b": -3}),
            )),
            GeneralForm("2", {(2, 3): {1: "alpha"}}, cases=(
                Case("a", "alpha = 0", {"a": 2, "alpha": 0}, "I", "VII_a.a", {"a": 2}),
                Case("b.i", "alpha > 0", {"a": 2, "alpha": 1}, "II", "VII_a.b.i", {"a": 2}),
                Case("b.ii", "alpha < 0", {"a": 2, "alpha": -1}, "II", "VII_a.b.ii", {"a": 2}),
            )),
        ),
        _A_POS,
    ),
    "VII_0": AppendixAlgebra(
        "VII_0",
        ("f12_1 = -f23_3", "f12_2 = f13_3", "f23_2 = f13_1", "f13_2 = 0", "f23_1 = 0"),
        ("f12_3*f13_1",),
        (
            GeneralForm("1", _TRIPLE_X3_FORM, cases=(
                Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "VII_0.a"),
                Case("b.i", "gamma > 0, alpha = beta = 0", {"alpha": 0, "beta": 0, "gamma": 1}, "II", "VII_0.b.i"),
                Case("b.ii", "gamma < 0, alpha = beta = 0", {"alpha": 0, "beta": 0, "gamma": -1}, "II",
                     "VII_0.b.ii"),
                Case("c", "gamma != 0, b = -(beta^2 + alpha^2)/gamma", {"alpha": 1, "beta": 0, "gamma": 1}, "IV",
                     "VII_0.c", {"b": -1}),
                Case("d.i", "gamma = 0, alpha or beta nonzero", {"alpha": 1, "beta": 0, "gamma": 0}, "V",
                     "VII_0.d.i"),
            )),
            GeneralForm("2", _TYPE_V_FORM, cases=(
                Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "VII_0.a"),
                Case("d.i", "gamma = 0", {"alpha": 1, "beta": 0, "gamma": 0}, "V", "VII_0.d.i"),
                Case("d.ii", "gamma != 0, b = |gamma|", {"alpha": 0, "beta": 0, "gamma": 1}, "V", "VII_0.d.ii",
                     {"b": 1}),
                Case("d.ii", "gamma != 0, b = |gamma|", {"alpha": 0, "beta": 0, "gamma": -2}, "V", "VII_0.d.ii",
                     {"b": 2}),
            )),
        ),
    ),
    "VI_a": AppendixAlgebra(
        "VI_a",
        ("f13_1 = -(-a^2*f12_1 + a^2*f23_3 - f23_3 - f12_1)/(2*a)", "f12_3 = a*f12_2", "f13_2 = a*f12_2",
         "f13_3 = f12_2", "f23_2 = (-a^2*f12_1 + a^2*f23_3 + f23_3 + f12_1)/(2*a)"),
        ("4*a*f23_1*f12_2 + (a*f12_1)^2 - 2*a^2*f12_1*f23_3 - 2*f12_1*f23_3 - f12_1^2 + (a*f23_3)^2"
         " - f23_3^2",),
        (
            GeneralForm("1", {
                (1, 2): {1: "alpha", 2: "beta", 3: "a*beta"},
                (2, 3): {1: "-(a^2*alpha^2 - 2*alpha*gamma*a^2 - 2*alpha*gamma - alpha^2 + gamma^2*a^2 - gamma^2)"
                            "/(4*a*beta)",
                         2: "(-a^2*alpha + gamma*a^2 + gamma + alpha)/(2*a)", 3: "gamma"},
                (3, 1): {1: "(-a^2*alpha + gamma*a^2 - gamma - alpha)/(2*a)", 2: "-a*beta", 3: "-beta"},
            }, constraints=(_c("beta", "!=0"),), cases=(
                Case("c.i", "b = -a*beta", {"a": 2, "alpha": 0, "beta": 1, "gamma": 0}, "VI_a", "VI_a.c.i",
                     {"a": 2, "b": -2}),
                Case("c.i", "b = -a*beta", {"a": 3, "alpha": 1, "beta": 1, "gamma": 1}, "VI_a", "VI_a.c.i",
                     {"a": 3, "b": -3}),
            )),
            GeneralForm("2", {
                (1, 2): {1: "alpha"},
                (2, 3): {1: "beta", 2: "alpha*(a+1)/(a-1)", 3: "alpha*(a+1)/(a-1)"},
                (3, 1): {1: "alpha"},
            }, printed_brackets={
                (1, 2): {1: "alpha"},
                (2, 3): {1: "beta + alpha*(a+1)/(a-1)", 2: "alpha*(a+1)/(a-1)"},
                (3, 1): {1: "alpha"},
            }, cases=(
                Case("a", "alpha = beta = 0", {"a": 2, "alpha": 0, "beta": 0}, "I", "VI_a.a", {"a": 2}),
                Case("b", "alpha = 0, beta != 0", {"a": 2, "alpha": 0, "beta": 1}, "II", "VI_a.b", {"a": 2}),
                Case("c.ii", "alpha != 0", {"a": 2, "alpha": 1, "beta": 0}, "VI_a", "VI_a.c.ii", {"a": 2}),
            )),
            GeneralForm("3", {
                (1, 2): {1: "alpha"},
                (2, 3): {1: "beta", 2: "-alpha*(a-1)/(a+1)", 3: "alpha*(a-1)/(a+1)"},
                (3, 1): {1: "-alpha"},
            }, cases=(
                Case("a", "alpha = beta = 0", {"a": 2, "alpha": 0, "beta": 0}, "I", "VI_a.a", {"a": 2}),
                Case("b", "alpha = 0, beta != 0", {"a": 2, "alpha": 0, "beta": 1}, "II", "VI_a.b", {"a": 2}),
                Case("c.iii", "alpha != 0", {"a": 2, "alpha": 1, "beta": 0}, "VI_a", "VI_a.c.iii", {"a": 2},
                     printed_target="VI_a.c.ii"),
            )),
        ),
        _A_VI,
    ),
    "VI_0": AppendixAlgebra(
        "VI_0",
        ("f13_3 = f12_2", "f13_1 = f23_2", "f12_1 = -f23_3", "f13_2 = 0", "f23_1 = 0"),
        ("f12_3*f23_2",),
        (
            GeneralForm("1", _TRIPLE_X3_FORM, cases=(
                Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "VI_0.a"),
                Case("b", "gamma != 0, alpha = beta = 0", {"alpha": 0, "beta": 0, "gamma": 1}, "II", "VI_0.b"),
                Case("b", "gamma != 0, alpha = beta = 0", {"alpha": 0, "beta": 0, "gamma": -1}, "II", "VI_0.b"),
                Case("c.i", "gamma != 0, alpha^2 != beta^2, b = (alpha^2 - beta^2)/gamma",
                     {"alpha": 1, "beta": 0, "gamma": 1}, "IV", "VI_0.c.i", {"b": 1}),
                Case("c.ii", "gamma != 0, alpha^2 = beta^2 != 0", {"alpha": 1, "beta": 1, "gamma": 1}, "IV",
                     "VI_0.c.ii"),
                Case("d.i", "gamma = 0, alpha^2 != beta^2", {"alpha": 1, "beta": 0, "gamma": 0}, "V", "VI_0.d.i"),
                Case("d.ii", "gamma = 0, alpha^2 = beta^2 != 0", {"alpha": 1, "beta": 1, "gamma": 0}, "V",
                     "VI_0.d.ii"),
            )),
            GeneralForm("2", _TYPE_V_FORM, cases=(
                Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "VI_0.a"),
                Case("d.i", "gamma = 0, alpha^2 != beta^2", {"alpha": 1, "beta": 0, "gamma": 0}, "V", "VI_0.d.i"),
                Case("d.ii", "gamma = 0, alpha^2 = beta^2", {"alpha": 1, "beta": 1, "gamma": 0}, "V", "VI_0.d.ii"),
                Case("d.iii", "gamma != 0, b = |gamma|", {"alpha": 0, "beta": 0, "gamma": 1}, "V", "VI_0.d.iii",
                     {"b": 1}),
            )),
        ),
    ),
    "V": AppendixAlgebra(
        "V",
        ("f12_1 = f23_3", "f13_3 = -f12_2", "f23_2 = -f13_1"),
        (),
        (GeneralForm("1", {
            (1, 2): {1: "alpha", 2: "beta", 3: "gamma"},
            (2, 3): {1: "delta", 2: "-epsilon", 3: "alpha"},
            (3, 1): {1: "-epsilon", 2: "-zeta", 3: "beta"},
        }, cases=(
            Case("a", "all zero", dict.fromkeys(("alpha", "beta", "gamma", "delta", "epsilon", "zeta"), 0), "I",
                 "V.a"),
            # the printed labels (b) i and (b) ii are interchanged relative to the listed forms
            Case("b.ii", "alpha = x*gamma, beta = y*gamma, ..., gamma != 0",
                 {"alpha": 0, "beta": 0, "gamma": 1, "delta": 0, "epsilon": 0, "zeta": 0}, "II", "V.b.ii",
                 printed_target="V.b.i"),
            Case("b.ii", "alpha = x*gamma, beta = y*gamma, ..., gamma != 0",
                 {"alpha": 1, "beta": 1, "gamma": 1, "delta": 1, "epsilon": -1, "zeta": -1}, "II", "V.b.ii",
                 printed_target="V.b.i"),
            Case("b.ii", "alpha = beta = gamma = 0, epsilon = -x*delta, zeta = -x^2*delta",
                 {"alpha": 0, "beta": 0, "gamma": 0, "delta": 1, "epsilon": -1, "zeta": -1}, "II", "V.b.ii",
                 printed_target="V.b.i"),
            Case("b.ii", "only zeta nonzero",
                 {"alpha": 0, "beta": 0, "gamma": 0, "delta": 0, "epsilon": 0, "zeta": 1}, "II", "V.b.ii",
                 printed_target="V.b.i"),
            Case("b.i", "only delta nonzero",
                 {"alpha": 0, "beta": 0, "gamma": 0, "delta": 1, "epsilon": 0, "zeta": 0}, "II", "V.b.i",
                 printed_target="V.b.ii"),
        )),),
    ),
    "IV": AppendixAlgebra(
        "IV",
        ("f12_3 = 0", "f12_2 = 0", "f23_2 = -f13_1 - 2*f12_1", "f23_3 = f12_1", "f13_3 = 0"),
        ("f12_1^2",),
        (GeneralForm("1", {(2, 3): {1: "alpha", 2: "-beta"}, (3, 1): {1: "-beta", 2: "-gamma"}}, cases=(
            Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "IV.a"),
            Case("b.i", "gamma = beta = 0, alpha > 0", {"alpha": 1, "beta": 0, "gamma": 0}, "II", "IV.b.i"),
            Case("b.ii", "gamma = beta = 0, alpha < 0", {"alpha": -1, "beta": 0, "gamma": 0}, "II", "IV.b.ii"),
            Case("b.iii", "gamma != 0, beta^2 + alpha*gamma = 0, b = -gamma", {"alpha": 0, "beta": 0, "gamma": 1},
                 "II", "IV.b.iii", {"b": -1}),
            Case("b.iii", "gamma != 0, beta^2 + alpha*gamma = 0, b = -gamma", {"alpha": -1, "beta": 1, "gamma": 1},
                 "II", "IV.b.iii", {"b": -1}),
            Case("VI_0", "gamma != 0, beta^2 + alpha*gamma > 0, b = gamma", {"alpha": 1, "beta": 0, "gamma": 1},
                 "VI_0", "dual.VI_0.c.i", {"b": 1}),
            Case("VI_0", "gamma = 0, beta != 0", {"alpha": 0, "beta": 1, "gamma": 0}, "VI_0", "dual.VI_0.c.ii"),
            Case("VII_0", "gamma != 0, beta^2 + alpha*gamma < 0, b = gamma", {"alpha": -1, "beta": 0, "gamma": 1},
                 "VII_0", "dual.VII_0.c", {"b": 1}),
        )),),
    ),
    "III": AppendixAlgebra(
        "III",
        ("f13_3 = f12_2", "f12_1 = f13_1", "f12_3 = f12_2", "f13_2 = f12_2", "f23_3 = f23_2"),
        ("f23_1*f12_2 - f13_1*f23_3",),
        (
            GeneralForm("1", {
                (1, 2): {1: "alpha", 2: "beta", 3: "beta"},
                (2, 3): {1: "alpha*gamma/beta", 2: "gamma", 3: "gamma"},
                (3, 1): {1: "-alpha", 2: "-beta", 3: "-beta"},
            }, constraints=(_c("beta", "!=0"),), cases=(
                Case("c.i", "b = 1/beta", {"alpha": 0, "beta": 1, "gamma": 0}, "III", "III.c.i", {"b": 1}),
                Case("c.i", "b = 1/beta", {"alpha": 1, "beta": 2, "gamma": 1}, "III", "III.c.i", {"b": 1}),
            )),
            GeneralForm("2", {(2, 3): {1: "alpha", 2: "beta", 3: "beta"}}, cases=(
                Case("a", "alpha = beta = 0", {"alpha": 0, "beta": 0}, "I", "III.a"),
                Case("b", "beta = 0, alpha != 0", {"alpha": 1, "beta": 0}, "II", "III.b"),
                Case("c.ii", "beta != 0", {"alpha": 0, "beta": 1}, "III", "III.c.ii"),
            )),
            GeneralForm("3", {(1, 2): {1: "alpha"}, (2, 3): {1: "beta"}, (3, 1): {1: "-alpha"}}, cases=(
                Case("a", "alpha = beta = 0", {"alpha": 0, "beta": 0}, "I", "III.a"),
                Case("b", "alpha = 0, beta != 0", {"alpha": 0, "beta": 1}, "II", "III.b"),
                Case("c.iii", "alpha != 0", {"alpha": 1, "beta": 0}, "III", "III.c.iii"),
            )),
        ),
    ),
    "II": AppendixAlgebra(
        "II",
        ("f13_1 = f23_2", "f23_1 = 0", "f12_1 = -f23_3"),
        ("-f13_3*f23_3 + f23_3*f12_2 - 2*f12_3*f23_2", "-2*f13_2*f23_3 - f12_2*f23_2 + f23_2*f13_3"),
        (
            GeneralForm("1", {
                (1, 2): {1: "-alpha", 2: "-(2*beta*alpha - gamma*delta)/gamma", 3: "-alpha^2*beta/gamma^2"},
                (2, 3): {2: "gamma", 3: "alpha"},
                (3, 1): {1: "-gamma", 2: "-beta", 3: "-delta"},
            }, constraints=(_c("gamma", "!=0"),), allowed_types=("IV", "V"), cases=(
                Case("IV/V", "generic", {"alpha": 0, "beta": 0, "gamma": 1, "delta": 0}, "V"),
                Case("IV/V", "generic", {"alpha": 1, "beta": 1, "gamma": 1, "delta": 2}, "IV"),
            )),
            GeneralForm("2", {(1, 2): {2: "alpha", 3: "beta"}, (3, 1): {2: "-gamma", 3: "-delta"}}, cases=(
                Case("a", "all zero", {"alpha": 0, "beta": 0, "gamma": 0, "delta": 0}, "I", "II.a",
                     printed_target="V.a"),
                Case("b.i", "gamma = -x^2*beta, delta = -x*beta, alpha = x*beta, beta > 0",
                     {"alpha": 1, "beta": 1, "gamma": -1, "delta": -1}, "II", "II.b.i"),
                Case("b.i", "delta = alpha = beta = 0, gamma < 0",
                     {"alpha": 0, "beta": 0, "gamma": -1, "delta": 0}, "II", "II.b.i"),
                Case("b.ii", "gamma = -x^2*beta, delta = -x*beta, alpha = x*beta, beta < 0",
                     {"alpha": 0, "beta": -1, "gamma": 0, "delta": 0}, "II", "II.b.ii"),
                Case("b.ii", "delta = alpha = beta = 0, gamma > 0",
                     {"alpha": 0, "beta": 0, "gamma": 1, "delta": 0}, "II", "II.b.ii"),
            )),
            GeneralForm("3", _TRIPLE_X3_FORM, printed_brackets={
                (1, 2): {1: "-alpha + gamma", 2: "beta"}, (2, 3): {3: "alpha"}, (3, 1): {3: "-beta"},
            }, allowed_types=("IV", "V"), cases=(
                Case("a", "alpha = beta = gamma = 0", {"alpha": 0, "beta": 0, "gamma": 0}, "I", "II.a",
                     printed_target="V.a"),
                Case("b.i", "alpha = beta = 0, gamma > 0", {"alpha": 0, "beta": 0, "gamma": 1}, "II", "II.b.i"),
                Case("b.ii", "alpha = beta = 0, gamma < 0", {"alpha": 0, "beta": 0, "gamma": -1}, "II", "II.b.ii"),
                Case("IV/V", "otherwise", {"alpha": 1, "beta": 0, "gamma": 0}, "V"),
                Case("IV/V", "otherwise", {"alpha": 1, "beta": 0, "gamma": 1}, "IV"),
            )),
        ),
    ),
    "I": AppendixAlgebra("I", (), ("JACOBI",), ()),
}

# printed slips kept as data; each entry: (algebra, location, printed, corrected)
TYPOS = (
    ("VI_a", "solution 2, [Xt2,Xt3]", "alpha*(a+1)/(a-1) Xt^1 as last term", "alpha*(a+1)/(a-1) Xt^3"),
    ("VI_a", "solution 3, third case", "form VI_a (c) ii", "form VI_a (c) iii"),
    ("II", "solution 3, [Xt1,Xt2]", "gamma Xt^1", "gamma Xt^3"),
    ("II", "solutions 2 and 3, abelian case", "standard form V (a)", "standard form II (a)"),
    ("V", "type II cases", "(b) i. / (b) ii.", "labels interchanged relative to the listed forms"),
    ("VIII", "worked example", "[Xt3, Xt2] = -gamma Xt1 - beta Xt3", "[Xt3, Xt1] = -gamma Xt1 - beta Xt3"),
)


def appendix_generators(name: str):
    """Generators in component names; for I the full Jacobi system of a generic tensor."""
    entry = APPENDIX[name]
    if entry.generators == ("JACOBI",):
        from .manin import dual_jacobi_residual
        from .solver import COLUMNS, column_label

        generic = StructureConstants.from_brackets(
            {(i + 1, j + 1): {k + 1: MultiPoly.var(column_label((i, j, k))) for (ii, jj, k) in COLUMNS
                              if (ii, jj) == (i, j)} for (i, j) in ((0, 1), (0, 2), (1, 2))})
        R = dual_jacobi_residual(generic)
        out = []
        for a in R:
            for b in a:
                for c in b:
                    for x in c:
                        if x != 0:
                            out.append(MultiPoly.coerce(x))
        return out
    return entry.generator_polys()


@dataclass(frozen=True)
class AppendixMatch:
    relations_ok: bool
    ideal_ok: bool
    failed_relations: tuple = ()
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.ideal_ok


def appendix_match(fam, name: str, a=None, samples: int = 200, seed=None) -> AppendixMatch:
    """Compare a solved dual family with the transcribed relations and quadratic conditions.

    With ``a`` given the transcription is evaluated there; otherwise ``a`` is
    sampled from {2, 3, 5, 1/2} for the parametric classes.
    """
    from fractions import Fraction

    from .exact import substitute
    from .solver import DEFAULT_A_SAMPLES, DEFAULT_SEED, QuadraticIdeal, dual_jacobi_ideal, ideal_equivalent
    from .solver import substitute_components

    entry = APPENDIX[name]
    fixed = {} if a is None else {"a": Fraction(a)}
    comps = dict(fam.components(), **fixed)
    bad = tuple(r for r, p in zip(entry.relations, entry.relation_polys()) if to_scalar(substitute(p, comps)) != 0)
    gens = [substitute(g, fixed) if fixed else g for g in appendix_generators(name)]
    ours = dual_jacobi_ideal(fam)
    theirs = substitute_components(gens, fam)
    params = {"a": list(DEFAULT_A_SAMPLES)} if a is None and name in ("VI_a", "VII_a") else None
    eq, cex = ideal_equivalent(ours, theirs, samples, DEFAULT_SEED if seed is None else seed, params=params)
    return AppendixMatch(not bad, eq, bad, cex)


__all__ = ["APPENDIX", "TYPOS", "Case", "GeneralForm", "AppendixAlgebra", "AppendixMatch", "appendix_generators",
           "appendix_match"]
