"""The 78 classes of 6-dimensional real Manin triples, with verification tooling."""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import jsonschema

from .errors import ConstraintViolation, JacobiViolation, SchemaError
from .exact import MultiPoly, format_scalar, parse_scalar, to_scalar
from .liealg import (
    BianchiType,
    StructureConstants,
    canonical_class,
    classify_bianchi,
    standard_form,
)
from .manin import (
    Constraint,
    ManinTriple,
    build_double,
    dual_triple,
    new_triple,
    pairing_ad_invariance_residual,
    search_witness,
    triple_failures,
    verify_witness,
)

A = MultiPoly.var("a")
DEFAULT_B = (Fraction(1), Fraction(2))
DEFAULT_B_NONZERO = (Fraction(1), Fraction(2), Fraction(-1))
DEFAULT_A = (Fraction(2), Fraction(3))
PARAMETRIC = ("VI_a", "VII_a")


@dataclass(frozen=True)
class CatalogEntry:
    """One class of Manin triples.

    ``g_param``/``g_dual_param`` give the squared-parameter invariant of a
    VI_a or VII_a component as an expression in ``a`` ("a^2" or "1/a^2").
    """

    id: str
    g_type: str
    g_dual_type: str
    triple: ManinTriple
    dual_of: str | None = None
    self_dual: bool = False
    g_param: str | None = None
    g_dual_param: str | None = None
    source: str = "listed"

    @property
    def param_constraints(self) -> tuple:
        return self.triple.constraints

    @property
    def parameters(self) -> tuple:
        names = set(self.triple.variables())
        for c in self.triple.constraints:
            names.update(getattr(c.poly, "vars", ()))
        return tuple(sorted(names))

    def bianchi_types(self, a=None):
        """Claimed (g, g_dual) BianchiTypes at a numeric value of a."""
        def mk(name, expr):
            if expr is None:
                return BianchiType(name)
            return BianchiType(name, to_scalar(parse_scalar(expr).subs({"a": Fraction(a)})))
        return mk(self.g_type, self.g_param), mk(self.g_dual_type, self.g_dual_param)

    def to_json(self):
        return {
            "id": self.id,
            "g_type": self.g_type,
            "g_dual_type": self.g_dual_type,
            "g_param": self.g_param,
            "g_dual_param": self.g_dual_param,
            "dual_of": self.dual_of,
            "self_dual": self.self_dual,
            "source": self.source,
            "triple": self.triple.to_json(),
        }

    @classmethod
    def from_json(cls, data, pointer=""):
        try:
            triple = ManinTriple.from_json(data["triple"], f"{pointer}/triple", check=False)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"{pointer}/triple", str(exc)) from None
        return cls(data["id"], data["g_type"], data["g_dual_type"], triple, data.get("dual_of"),
                   data.get("self_dual", False), data.get("g_param"), data.get("g_dual_param"),
                   data.get("source", "listed"))


# -- raw data ----------------------------------------------------------------

_B_POS = (("b", ">0"),)
_B_NZ = (("b", "!=0"),)

# (suffix, dual type, dual brackets, constraints, dual param expression)
_LISTED = {
    "IX": [
        ("a", "I", {}, (), None),
        ("b", "V", {(1, 2): {2: "-b"}, (3, 1): {3: "b"}}, _B_POS, None),
    ],
    "VIII": [
        ("a", "I", {}, (), None),
        ("b.i", "V", {(1, 2): {2: "-b"}, (3, 1): {3: "b"}}, _B_POS, None),
        ("b.ii", "V", {(2, 3): {2: "b"}, (3, 1): {1: "-b"}}, _B_POS, None),
        ("b.iii", "V", {(1, 2): {2: 1}, (2, 3): {2: 1}, (3, 1): {1: -1, 3: -1}}, (), None),
    ],
    "VII_a": [
        ("a", "I", {}, (), None),
        ("b.i", "II", {(2, 3): {1: 1}}, (), None),
        ("b.ii", "II", {(2, 3): {1: -1}}, (), None),
        ("c", "VII_a", {(1, 2): {2: "-b/a", 3: "b"}, (3, 1): {2: "b", 3: "b/a"}}, _B_NZ, "1/a^2"),
    ],
    "VII_0": [
        ("a", "I", {}, (), None),
        ("b.i", "II", {(1, 2): {3: 1}}, (), None),
        ("b.ii", "II", {(1, 2): {3: -1}}, (), None),
        ("c", "IV", {(1, 2): {2: "-b", 3: "b"}, (3, 1): {3: "b"}}, _B_NZ, None),
        ("d.i", "V", {(1, 2): {2: -1}, (3, 1): {3: 1}}, (), None),
        ("d.ii", "V", {(2, 3): {2: "b"}, (3, 1): {1: "-b"}}, _B_POS, None),
    ],
    "VI_a": [
        ("a", "I", {}, (), None),
        ("b", "II", {(2, 3): {1: 1}}, (), None),
        ("c.i", "VI_a", {(1, 2): {2: "-b/a", 3: "-b"}, (3, 1): {2: "b", 3: "b/a"}}, _B_NZ, "1/a^2"),
        ("c.ii", "VI_a", {(1, 2): {1: 1}, (2, 3): {2: "(a+1)/(a-1)", 3: "(a+1)/(a-1)"}, (3, 1): {1: 1}}, (),
         "1/a^2"),
        ("c.iii", "VI_a", {(1, 2): {1: 1}, (2, 3): {2: "-(a-1)/(a+1)", 3: "(a-1)/(a+1)"}, (3, 1): {1: -1}}, (),
         "1/a^2"),
    ],
    "VI_0": [
        ("a", "I", {}, (), None),
        ("b", "II", {(1, 2): {3: 1}}, (), None),
        ("c.i", "IV", {(1, 2): {2: "-b", 3: "b"}, (3, 1): {3: "b"}}, _B_NZ, None),
        ("c.ii", "IV", {(1, 2): {1: -1, 2: 1, 3: 1}, (2, 3): {3: 1}, (3, 1): {3: -1}}, (), None),
        ("d.i", "V", {(1, 2): {2: -1}, (3, 1): {3: 1}}, (), None),
        ("d.ii", "V", {(1, 2): {1: -1, 2: 1}, (2, 3): {3: 1}, (3, 1): {3: -1}}, (), None),
        ("d.iii", "V", {(2, 3): {2: -1}, (3, 1): {1: 1}}, (), None),
    ],
    "V": [
        ("a", "I", {}, (), None),
        ("b.i", "II", {(2, 3): {1: 1}}, (), None),
        ("b.ii", "II", {(1, 2): {3: 1}}, (), None),
    ],
    "IV": [
        ("a", "I", {}, (), None),
        ("b.i", "II", {(2, 3): {1: 1}}, (), None),
        ("b.ii", "II", {(2, 3): {1: -1}}, (), None),
        ("b.iii", "II", {(3, 1): {2: "b"}}, _B_NZ, None),
    ],
    "III": [
        ("a", "I", {}, (), None),
        ("b", "II", {(2, 3): {1: 1}}, (), None),
        ("c.i", "III", {(1, 2): {2: "-b", 3: "-b"}, (3, 1): {2: "b", 3: "b"}}, _B_NZ, None),
        ("c.ii", "III", {(2, 3): {2: 1, 3: 1}}, (), None),
        ("c.iii", "III", {(1, 2): {1: 1}, (3, 1): {1: -1}}, (), None),
    ],
    "II": [
        ("a", "I", {}, (), None),
        ("b.i", "II", {(1, 2): {3: 1}}, (), None),
        ("b.ii", "II", {(1, 2): {3: -1}}, (), None),
    ],
}

# first-algebra classes whose dual lists cite the duals of these entries
_CITED_DUALS = {
    "V": ["VI_0.d.i", "VI_0.d.ii", "VI_0.d.iii", "VII_0.d.i", "VII_0.d.ii",
          "VIII.b.i", "VIII.b.ii", "VIII.b.iii", "IX.b"],
    "IV": ["VI_0.c.i", "VI_0.c.ii", "VII_0.c"],
    "II": ["III.b", "IV.b.i", "IV.b.ii", "IV.b.iii", "VI_0.b", "VI_a.b",
           "VII_0.b.i", "VII_0.b.ii", "VII_a.b.i", "VII_a.b.ii"],
}
# duals of the (V, II) entries: not cited in the II list, but required for the total
_UNCITED_DUALS = ["V.b.i", "V.b.ii"]

# classes fixed by the duality involution (each verified by an explicit witness)
SELF_DUAL = ("I.I", "II.b.i", "II.b.ii", "III.c.i", "III.c.ii", "III.c.iii",
             "VI_a.c.i", "VI_a.c.ii", "VI_a.c.iii", "VII_a.c")

ORDER = ("IX", "VIII", "VII_a", "VII_0", "VI_a", "VI_0", "V", "IV", "III", "II", "I")


def _constraints_for(cls, extra):
    out = [Constraint.parse(p, r) for p, r in extra]
    if cls == "VI_a":
        out = [Constraint(A, ">0"), Constraint(A - 1, "!=0")] + out
    elif cls == "VII_a":
        out = [Constraint(A, ">0")] + out
    return tuple(out)


def _tensor(brackets):
    return StructureConstants.from_brackets(
        {ij: {k: to_scalar(v) if not isinstance(v, str) else parse_scalar(v) for k, v in comps.items()}
         for ij, comps in brackets.items()})


def _std(cls):
    return standard_form(cls, A if cls in PARAMETRIC else None)


def _param(cls):
    return "a^2" if cls in PARAMETRIC else None


@functools.lru_cache(maxsize=1)
def _build():
    out = {}
    for cls in ORDER[:-1]:
        for suffix, dtype, br, cons, dparam in _LISTED[cls]:
            eid = f"{cls}.{suffix}"
            t = new_triple(_std(cls), _tensor(br), _constraints_for(cls, cons), check=False)
            out[eid] = CatalogEntry(eid, cls, dtype, t, None, False, _param(cls), dparam)
    for cls in ORDER[:-1]:
        eid = f"I.{cls}"
        t = new_triple(StructureConstants.zero(3), _std(cls), _constraints_for(cls, ()), check=False)
        out[eid] = CatalogEntry(eid, "I", cls, t, f"{cls}.a", False, None, _param(cls))
    out["I.I"] = CatalogEntry("I.I", "I", "I", new_triple(StructureConstants.zero(3), StructureConstants.zero(3)),
                              "I.I", True)
    for cls in ORDER[:-1]:
        e = out[f"{cls}.a"]
        out[e.id] = _replace(e, dual_of=f"I.{cls}")
    sources = [s for lst in _CITED_DUALS.values() for s in lst] + _UNCITED_DUALS
    for src in sources:
        e = out[src]
        did = f"dual.{src}"
        kind = "uncited-dual" if src in _UNCITED_DUALS else "dual"
        out[did] = CatalogEntry(did, e.g_dual_type, e.g_type, dual_triple(e.triple), src, False,
                                e.g_dual_param, e.g_param, kind)
        out[src] = _replace(e, dual_of=did)
    for sid in SELF_DUAL:
        out[sid] = _replace(out[sid], dual_of=sid, self_dual=True)
    return tuple(out.values())


def _replace(e, **kw):
    d = dict(e.__dict__)
    d.update(kw)
    return CatalogEntry(**d)


def entries():
    return list(_build())


def entry(eid: str) -> CatalogEntry:
    for e in _build():
        if e.id == eid:
            return e
    raise KeyError(f"no catalog entry {eid!r}")


def count_classes(catalog=None):
    """(total, classes up to duality, self-dual classes)."""
    cat = list(catalog if catalog is not None else _build())
    ids = {e.id for e in cat}
    fixed = sum(1 for e in cat if e.dual_of == e.id)
    pairs = {frozenset((e.id, e.dual_of)) for e in cat if e.dual_of in ids and e.dual_of != e.id}
    unpaired = sum(1 for e in cat if e.dual_of is None)
    return len(cat), fixed + len(pairs) + unpaired, fixed


# -- instantiation and verification -------------------------------------------

def default_samples(e: CatalogEntry):
    names = e.parameters
    choices = []
    for n in names:
        if n == "a":
            choices.append([("a", x) for x in DEFAULT_A])
        elif n == "b":
            rel = next((c.rel for c in e.param_constraints if getattr(c.poly, "vars", ()) == ("b",)), ">0")
            vals = DEFAULT_B_NONZERO if rel == "!=0" else DEFAULT_B
            choices.append([("b", x) for x in vals])
    return [dict(p) for p in itertools.product(*choices)] if choices else [{}]


def instantiate(e: CatalogEntry, values=None, check: bool = True) -> ManinTriple:
    vals = {k: Fraction(v) for k, v in dict(values or {}).items()}
    missing = [p for p in e.parameters if p not in vals]
    if missing:
        raise KeyError(f"{e.id}: missing values for {missing}")
    for c in e.param_constraints:
        if not c.holds(vals):
            raise ConstraintViolation(f"{e.id}: constraint {c} fails at {vals}")
    return new_triple(e.triple.f.subs(vals), e.triple.f_dual.subs(vals), (), check=check)


@dataclass
class EntryReport:
    id: str
    samples: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, values, what):
        self.failures.append({"values": {k: str(v) for k, v in values.items()}, "check": what})


def _all_zero(nested) -> bool:
    if isinstance(nested, list):
        return all(_all_zero(x) for x in nested)
    return nested == 0


def verify_triple(t: ManinTriple, claimed, values, report: EntryReport):
    for exc in triple_failures(t):
        report.fail(values, f"{exc.identity} identity violated at {exc.index}")
    g_type, gd_type = claimed
    try:
        got = classify_bianchi(t.f)
        if got != g_type:
            report.fail(values, f"first subalgebra classified as {got}, claimed {g_type}")
    except ValueError as exc:
        report.fail(values, f"first subalgebra: {exc}")
    try:
        got = classify_bianchi(t.f_dual)
        if got != gd_type:
            report.fail(values, f"second subalgebra classified as {got}, claimed {gd_type}")
    except ValueError as exc:
        report.fail(values, f"second subalgebra: {exc}")
    try:
        d = build_double(t)
        if not _all_zero(pairing_ad_invariance_residual(d)):
            report.fail(values, "pairing is not ad-invariant")
    except JacobiViolation as exc:
        report.fail(values, f"double: {exc}")


def verify_entry(e: CatalogEntry, sample_values=None) -> EntryReport:
    report = EntryReport(e.id)
    for vals in (sample_values if sample_values is not None else default_samples(e)):
        vals = {k: Fraction(v) for k, v in vals.items()}
        report.samples.append({k: str(v) for k, v in vals.items()})
        try:
            t = instantiate(e, vals, check=False)
        except (ValueError, KeyError) as exc:
            report.fail(vals, f"instantiation: {exc}")
            continue
        verify_triple(t, e.bianchi_types(vals.get("a")), vals, report)
    return report


@dataclass
class CatalogReport:
    entries: list
    flagged: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.entries)

    @property
    def failures(self):
        return [(r.id, f) for r in self.entries for f in r.failures]


def flagged_cases():
    """Printed slips: where the as-printed variant fails and the corrected one passes."""
    from .appendix import APPENDIX, TYPOS
    from .exact import substitute
    from .solver import COLUMN_NAMES, COLUMNS

    out = []
    for name, ap in APPENDIX.items():
        rels = ap.relation_polys()
        for form in ap.forms:
            if not form.flagged:
                continue
            status = {}
            for printed in (True, False):
                t = form.tensor(printed)
                vals = {n: t.c[c[0]][c[1]][c[2]] for n, c in zip(COLUMN_NAMES, COLUMNS)}
                status[printed] = all(substitute(p, vals) == 0 for p in rels)
            out.append({"where": f"{name} solution {form.label}", "printed_passes": status[True],
                        "corrected_passes": status[False]})
        for form in ap.forms:
            for case in form.cases:
                if case.printed_target:
                    item = {"where": f"{name} solution {form.label} case {case.label}",
                            "printed_target": case.printed_target, "resolved_target": case.target}
                    if item not in out:
                        out.append(item)
    out.append({"where": "VIII worked example", "printed": TYPOS[-1][2], "corrected": TYPOS[-1][3]})
    return out


def verify_catalog(samples=None) -> CatalogReport:
    reps = []
    for e in sorted(_build(), key=lambda x: x.id):
        reps.append(verify_entry(e, samples(e) if callable(samples) else None))
    return CatalogReport(reps, flagged_cases())


# -- fingerprints and distinctness ---------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    g: str
    g_dual: str
    killing_signs: tuple
    is_dual: bool

    def key(self):
        return (self.g, self.g_dual, self.killing_signs)


def _killing_sign(f: StructureConstants, d: StructureConstants) -> int:
    # sign of K_f(v, v), v the element paired with the trace form of the other algebra
    f, d = f.c, d.c
    v = [sum((d[i][j][j] for j in range(3)), Fraction(0)) for i in range(3)]
    K = [[sum(f[i][k][l] * f[j][l][k] for k in range(3) for l in range(3)) for j in range(3)] for i in range(3)]
    s = sum(v[i] * K[i][j] * v[j] for i in range(3) for j in range(3))
    return (s > 0) - (s < 0)


def killing_signs(t: ManinTriple) -> tuple:
    """Equivalence invariants: (sign on the first algebra, sign on the second)."""
    return _killing_sign(t.f, t.f_dual), _killing_sign(t.f_dual, t.f)


def _type_label(name, expr):
    return name if expr is None else f"{name}({expr})"


def fingerprint(e: CatalogEntry, samples=None) -> Fingerprint:
    """Component types with symbolic parameter invariants, refined by a Killing-form sign.

    The claimed invariants are confirmed on the samples; a mismatch raises.
    """
    signs = set()
    for vals in (samples or default_samples(e)):
        t = instantiate(e, vals, check=False)
        g_claim, d_claim = e.bianchi_types(vals.get("a"))
        if classify_bianchi(t.f) != g_claim or classify_bianchi(t.f_dual) != d_claim:
            raise ValueError(f"{e.id}: component types differ from the claim at {vals}")
        signs.add(killing_signs(t))
    if len(signs) != 1:
        raise ValueError(f"{e.id}: Killing sign varies over the family")
    return Fingerprint(_type_label(e.g_type, e.g_param), _type_label(e.g_dual_type, e.g_dual_param),
                       signs.pop(), e.source != "listed")


def pairwise_distinctness():
    """Group entries by fingerprint; for groups with several members record the claim."""
    groups = {}
    for e in _build():
        groups.setdefault(fingerprint(e).key(), []).append(e.id)
    return {
        "groups": {" / ".join(map(str, k)): v for k, v in groups.items()},
        "shared": {" / ".join(map(str, k)): v for k, v in groups.items() if len(v) > 1},
        "separated_by_fingerprint": sum(1 for v in groups.values() if len(v) == 1),
    }


def witness_between(e1: CatalogEntry, v1, e2: CatalogEntry, v2, bound: int = 2):
    return search_witness(instantiate(e1, v1), instantiate(e2, v2), bound=bound)


# self-dual witnesses: entry -> (values for e, values for the image, A) with
# transform(dual(e at v), A) == e at v'.  The VI_a.c.ii and VI_a.c.iii matrices need
# quarter entries, outside the bounded search range.
_H, _Q = Fraction(1, 2), Fraction(1, 4)
SELF_DUAL_WITNESSES = {
    "I.I": ({}, {}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    "II.b.i": ({}, {}, [[0, 0, -2], [0, -1, -2], [-2, -2, -2]]),
    "II.b.ii": ({}, {}, [[0, 0, 2], [0, -1, -2], [-2, -2, -2]]),
    "III.c.i": ({"b": 1}, {"b": 1}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    "III.c.ii": ({}, {}, [[-2, -1, 1], [-1, -2, -2], [1, -2, -2]]),
    "III.c.iii": ({}, {}, [[-2, 1, 1], [1, -2, 2], [1, 2, -2]]),
    "VI_a.c.i": ({"a": 2, "b": 1}, {"a": _H, "b": 1}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    "VI_a.c.ii": ({"a": 2}, {"a": _H}, [[0, _H, -_H], [-_Q, 1, 1], [_Q, 1, 1]]),
    "VI_a.c.iii": ({"a": 2}, {"a": _H}, [[0, 3 * _H, 3 * _H], [3 * _Q, -1, 1], [3 * _Q, 1, -1]]),
    "VII_a.c": ({"a": 2, "b": 1}, {"a": _H, "b": 1}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
}


def self_dual_pair(eid: str):
    """(dual of e at v, e at v') for the stored self-duality check."""
    e = entry(eid)
    v1, v2, _ = SELF_DUAL_WITNESSES[eid]
    return dual_triple(instantiate(e, v1)), instantiate(e, v2)


def verify_self_dual(eid: str) -> bool:
    t1, t2 = self_dual_pair(eid)
    return verify_witness(t1, t2, SELF_DUAL_WITNESSES[eid][2])


def self_dual_witness(eid: str, bound: int = 2):
    """Bounded search for a self-duality witness; None when the search range is too small."""
    t1, t2 = self_dual_pair(eid)
    return search_witness(t1, t2, bound=bound)


def fixed_points():
    """Ids whose dual is certified equivalent to the entry itself."""
    out = []
    for e in _build():
        if e.g_type != e.g_dual_type:
            continue
        if e.id in SELF_DUAL_WITNESSES and verify_self_dual(e.id):
            out.append(e.id)
    return out


# -- JSON ----------------------------------------------------------------------

_ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["basis_dim", "brackets"],
    "properties": {
        "basis_dim": {"type": "integer", "minimum": 1},
        "brackets": {"type": "array", "items": {
            "type": "object", "required": ["i", "j", "k", "c"],
            "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, "k": {"type": "integer"},
                           "c": {"type": "string"}},
        }},
    },
}
CATALOG_SCHEMA = {
    "type": "object",
    "required": ["version", "entries"],
    "properties": {
        "version": {"const": 1},
        "entries": {"type": "array", "items": {
            "type": "object",
            "required": ["id", "g_type", "g_dual_type", "triple"],
            "properties": {
                "id": {"type": "string"},
                "g_type": {"type": "string"},
                "g_dual_type": {"type": "string"},
                "g_param": {"type": ["string", "null"]},
                "g_dual_param": {"type": ["string", "null"]},
                "dual_of": {"type": ["string", "null"]},
                "self_dual": {"type": "boolean"},
                "source": {"type": "string"},
                "triple": {
                    "type": "object", "required": ["g", "g_dual"],
                    "properties": {
                        "g": _ALGEBRA_SCHEMA, "g_dual": _ALGEBRA_SCHEMA,
                        "constraints": {"type": "array", "items": {
                            "type": "object", "required": ["poly", "rel"],
                            "properties": {"poly": {"type": "string"},
                                           "rel": {"enum": [">0", "!=0", "=0"]}},
                        }},
                    },
                },
            },
        }},
    },
}


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def catalog_to_json(catalog=None):
    return {"version": 1, "entries": [e.to_json() for e in (catalog or _build())]}


def catalog_from_json(data):
    v = jsonschema.Draft7Validator(CATALOG_SCHEMA)
    errs = sorted(v.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errs:
        raise SchemaError(_pointer(errs[0].absolute_path), errs[0].message)
    out = []
    for n, item in enumerate(data["entries"]):
        p = f"/entries/{n}"
        canonical_class(item["g_type"])
        out.append(CatalogEntry.from_json(item, p))
    return out


def export_json(path, catalog=None):
    Path(path).write_text(json.dumps(catalog_to_json(catalog), indent=2, ensure_ascii=False) + "\n")


def import_json(path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    return catalog_from_json(data)


def catalogs_equal(c1, c2) -> bool:
    if len(c1) != len(c2):
        return False
    for a, b in zip(c1, c2):
        if (a.id, a.g_type, a.g_dual_type, a.dual_of, a.self_dual, a.g_param, a.g_dual_param, a.source) != \
                (b.id, b.g_type, b.g_dual_type, b.dual_of, b.self_dual, b.g_param, b.g_dual_param, b.source):
            return False
        if a.triple != b.triple:
            return False
        if [c.to_json() for c in a.param_constraints] != [c.to_json() for c in b.param_constraints]:
            return False
    return True


__all__ = [
    "CatalogEntry", "Fingerprint", "entries", "entry", "count_classes", "instantiate", "verify_entry",
    "verify_catalog", "fingerprint", "pairwise_distinctness", "export_json", "import_json", "self_dual_witness",
    "SELF_DUAL", "SELF_DUAL_WITNESSES", "default_samples", "flagged_cases", "fixed_points", "verify_self_dual",
]
