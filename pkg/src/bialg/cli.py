"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage, input or schema error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .errors import JacobiViolation, NotALieAlgebraError, SchemaError
from .exact import format_scalar
from .liealg import StructureConstants, canonical_class, classify_bianchi, na_decompose, symmetric_signature

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; route through main so the exit code stays 2
    def error(self, message):
        raise UsageError(message)


def _assignments(items) -> dict:
    out = {}
    for item in items or ():
        for part in item.split(","):
            name, sep, value = part.partition("=")
            if not sep or not name.strip():
                raise UsageError(f"expected name=value, got {part!r}")
            try:
                out[name.strip()] = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"not a rational number: {value!r}") from None
    return out


def _sample_spec(items) -> dict:
    """'b=1,2' style overrides: parameter -> list of values."""
    out = {}
    for item in items or ():
        name, sep, values = item.partition("=")
        if not sep or not name.strip() or not values.strip():
            raise UsageError(f"expected name=v1,v2,..., got {item!r}")
        try:
            out[name.strip()] = [Fraction(v.strip()) for v in values.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"not a list of rationals: {values!r}") from None
    return out


# -- pretty printing -------------------------------------------------------------

_SIMPLE = re.compile(r"^(\d+(/\d+)?)?[A-Za-z_]*\w*(\^\d+)?$")


def _coefficient(c) -> tuple:
    """(sign, text) with text empty for a unit coefficient; compound text is parenthesized."""
    s = format_scalar(c).replace("*", "")
    neg = s.startswith("-") and not any(ch in s[1:] for ch in "+-")
    if neg:
        s = s[1:]
    if not _SIMPLE.match(s):
        s = f"({s})"
    return ("-" if neg else "+"), ("" if s == "1" else s)


def _combination(terms) -> str:
    parts = []
    for sign, text, vec in terms:
        body = f"{text} {vec}" if text else vec
        if not parts:
            parts.append(("−" if sign == "-" else "") + body)
        else:
            parts.append(("− " if sign == "-" else "+ ") + body)
    return " ".join(parts) if parts else "0"


def bracket_lines(f: StructureConstants, dual: bool) -> list:
    """Brackets in X_i / X̃^i notation, one line per nonzero pair."""
    def vec(n):
        return f"X̃{str(n).translate(_SUP)}" if dual else f"X{str(n).translate(_SUB)}"

    grouped = {}
    for i, j, k, c in f.brackets():
        grouped.setdefault((i, j), []).append((*_coefficient(c), vec(k)))
    return [f"[{vec(i)},{vec(j)}] = {_combination(terms)}" for (i, j), terms in sorted(grouped.items())]


def _double_lines(d) -> list:
    from .manin import BASIS_LABELS

    grouped = {}
    for i, j, k, c in d.g.brackets():
        grouped.setdefault((i, j), []).append((*_coefficient(c), BASIS_LABELS[k - 1]))
    return [f"[{BASIS_LABELS[i - 1]},{BASIS_LABELS[j - 1]}] = {_combination(t)}" for (i, j), t in sorted(grouped.items())]


# -- verbs -----------------------------------------------------------------------

def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None


def cmd_classify(args, out) -> int:
    f = StructureConstants.from_json(_load_json(args.path))
    t = classify_bianchi(f)
    dec = na_decompose(f)
    pos, neg = symmetric_signature(dec.n_mat)
    info = {
        "type": t.name,
        "a_squared": None if t.param_a_squared is None else str(t.param_a_squared),
        "unimodular": all(x == 0 for x in dec.a_vec),
        "n_signature": [pos, neg],
        "a_vector": [format_scalar(x) for x in dec.a_vec],
    }
    if args.format == "json":
        print(json.dumps(info, indent=2), file=out)
        return EXIT_OK
    print(str(t), file=out)
    print(f"unimodular: {str(info['unimodular']).lower()}", file=out)
    print(f"n signature: (+{pos}, -{neg})", file=out)
    print(f"trace vector: ({', '.join(info['a_vector'])})", file=out)
    return EXIT_OK


def cmd_solve_duals(args, out) -> int:
    from .appendix import appendix_match
    from .solver import dual_jacobi_ideal, family_for

    name = canonical_class(args.type)
    params = _assignments(args.param)
    unknown = set(params) - {"a"}
    if unknown:
        raise UsageError(f"unknown parameter(s) {sorted(unknown)}")
    a = params.get("a")
    if a is not None and name not in ("VI_a", "VII_a"):
        raise UsageError(f"{name} takes no parameter")
    fam = family_for(name, a)
    ideal = dual_jacobi_ideal(fam)
    match = appendix_match(fam, name, a=a, seed=args.seed)
    data = {
        "algebra": name,
        "nullspace_dim": fam.dim,
        "free_parameters": {t: col for t, col in zip(fam.free_params, fam.free_columns)},
        "relations": fam.relation_strings(),
        "ideal": ideal.strings(),
        "appendix_match": match.ok,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2), file=out)
    else:
        print(f"algebra: {name}" + ("" if a is None else f" (a={a})"), file=out)
        print(f"nullspace_dim: {fam.dim}", file=out)
        print("free parameters: " + ", ".join(f"{t}={c}" for t, c in data["free_parameters"].items()), file=out)
        print("relations:" + ("" if data["relations"] else " none"), file=out)
        for r in data["relations"]:
            print(f"  {r}", file=out)
        if ideal.is_empty():
            print("ideal: empty", file=out)
        else:
            print("ideal:", file=out)
            for g in data["ideal"]:
                print(f"  {g} = 0", file=out)
        print(f"appendix_match: {str(match.ok).lower()}", file=out)
    return EXIT_OK if match.ok else EXIT_FAIL


def _entry_values(e, given) -> dict:
    from .catalog import default_samples

    unknown = set(given) - set(e.parameters)
    if unknown:
        raise UsageError(f"{e.id} has no parameter(s) {sorted(unknown)}")
    base = default_samples(e)[0]
    base.update(given)
    return base


def cmd_double(args, out) -> int:
    from .catalog import entry, instantiate
    from .manin import build_double

    e = entry(args.entry)
    values = _entry_values(e, _assignments(args.values))
    d = build_double(instantiate(e, values))
    if args.format == "json":
        print(json.dumps(dict(d.to_json(), entry=e.id, values={k: str(v) for k, v in values.items()}), indent=2),
              file=out)
        return EXIT_OK
    if values:
        print("values: " + ", ".join(f"{k}={v}" for k, v in sorted(values.items())), file=out)
    for line in _double_lines(d):
        print(line, file=out)
    return EXIT_OK


def cmd_show(args, out) -> int:
    from .catalog import entry

    e = entry(args.entry)
    head = f"{e.id}: ({e.g_type}, {e.g_dual_type})"
    if e.dual_of and e.dual_of != e.id:
        head += f"  dual of {e.dual_of}"
    if e.self_dual:
        head += "  self-dual"
    print(head, file=out)
    if e.param_constraints:
        print("where " + ", ".join(str(c).replace("!= 0", "≠ 0") for c in e.param_constraints), file=out)
    for line in bracket_lines(e.triple.f, dual=False):
        print(f"  {line}", file=out)
    dual = bracket_lines(e.triple.f_dual, dual=True)
    for line in dual or ["[X̃ⁱ,X̃ʲ] = 0"]:
        print(f"  {line}", file=out)
    return EXIT_OK


def cmd_verify_catalog(args, out) -> int:
    from .catalog import count_classes, default_samples, fixed_points, verify_catalog

    override = _sample_spec(args.samples)

    def samples(e):
        # overridden values replace the defaults; values outside a constraint are dropped
        base = default_samples(e)
        if not override:
            return base
        rows = []
        for vals in base:
            choices = [[(k, v)] if k not in override else [(k, x) for x in override[k]] for k, v in vals.items()]
            rows.extend(dict(p) for p in _product(choices))
        return [r for r in _dedupe(rows) if all(c.holds(r) for c in e.param_constraints)]

    report = verify_catalog(samples)
    for rid, failure in report.failures:
        vals = ", ".join(f"{k}={v}" for k, v in failure["values"].items())
        print(f"FAIL {rid}" + (f" [{vals}]" if vals else "") + f": {failure['check']}", file=out)
    if args.verbose:
        for item in report.flagged:
            print("flagged: " + "; ".join(f"{k}={v}" for k, v in item.items()), file=out)
    total, up_to_duality, self_dual = count_classes()
    fixed = len(fixed_points())
    if fixed != self_dual:
        print(f"FAIL self-dual count {self_dual} differs from {fixed} certified fixed points", file=out)
        return EXIT_FAIL
    if not report.ok:
        bad = len({rid for rid, _ in report.failures})
        print(f"{bad} of {total} classes failed verification", file=out)
        return EXIT_FAIL
    print(f"{total} classes verified ({up_to_duality} up to duality, {self_dual} self-dual; "
          f"{len(report.flagged)} flagged transcription cases)", file=out)
    return EXIT_OK


def _product(choices):
    import itertools

    return itertools.product(*choices)


def _dedupe(rows):
    seen, out = set(), []
    for r in rows:
        key = tuple(sorted(r.items()))
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def cmd_export(args, out) -> int:
    from .catalog import catalog_to_json, export_json

    if args.path == "-":
        print(json.dumps(catalog_to_json(), indent=2), file=out)
    else:
        export_json(args.path)
        print(f"wrote {args.path}", file=out)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bialg", description="Exact classification of 6D real Manin triples.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="Bianchi type of a 3D algebra given as JSON")
    c.add_argument("path")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(run=cmd_classify)

    s = sub.add_parser("solve-duals", help="all compatible duals of a Bianchi standard form")
    s.add_argument("type")
    s.add_argument("--param", action="append", metavar="a=VALUE")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--seed", type=int, default=None, help="seed of the ideal sampling")
    s.set_defaults(run=cmd_solve_duals)

    d = sub.add_parser("double", help="nonzero brackets of the 6D double of a catalog entry")
    d.add_argument("entry")
    d.add_argument("--values", action="append", metavar="b=VALUE")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(run=cmd_double)

    v = sub.add_parser("verify-catalog", help="verify every catalog entry exactly")
    v.add_argument("--samples", action="append", metavar="b=1,2", help="override sample values of a parameter")
    v.add_argument("-v", "--verbose", action="store_true", help="also list flagged transcription cases")
    v.set_defaults(run=cmd_verify_catalog)

    w = sub.add_parser("show", help="pretty-print a catalog entry")
    w.add_argument("entry")
    w.set_defaults(run=cmd_show)

    x = sub.add_parser("export", help="dump the catalog")
    x.add_argument("--format", choices=("json",), required=True)
    x.add_argument("path", help="output file, or - for stdout")
    x.set_defaults(run=cmd_export)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
    except FileNotFoundError as exc:
        print(f"file not found: {exc.filename}", file=sys.stderr)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
    except (NotALieAlgebraError, JacobiViolation) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except KeyError as exc:
        print(f"unknown: {exc.args[0]}", file=sys.stderr)
    except ValueError as exc:
        # constraint violated, unknown class, symbolic input where numbers are needed
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
