"""Command-line interface.

Exit codes: 0 ok, 1 check failed, 2 parse error, 3 hypothesis violated,
4 vector is not a zero, 5 orbit search unsaturated.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import acceptance
from .counting import density_report, fit_kappa, kappa
from .errors import HypothesisError, NotAZeroError, SearchError
from .exact_linalg import Form
from .heights import HeightVector, make_height_vector
from .invariants import factor_invariants, genus_characters
from .isotropy import find_zero, is_definite, smith_isotropy_test
from .orbits import genus_orbit_sum, orbit_count
from .reduction import orbit_label, reduce_special, reduce_to_triple

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_NOT_ZERO, EXIT_UNSATURATED = range(6)


class ParseError(ValueError):
    pass


def _ints(text, n):
    try:
        vals = [int(v) for v in text.replace("−", "-").split(",")]
    except ValueError:
        raise ParseError(f"expected {n} comma-separated integers, got {text!r}") from None
    if len(vals) != n:
        raise ParseError(f"expected {n} comma-separated integers, got {text!r}")
    return vals


def _form(text):
    vals = _ints(text, 6)
    try:
        return Form(*vals)
    except ValueError as exc:
        raise HypothesisError(str(exc)) from None


def _emit(payload, command):
    payload = {"schema_version": SCHEMA_VERSION, "command": command, **payload}
    print(json.dumps(payload, indent=2))


def _characters_json(chi):
    return {str(p): v for p, v in chi.items()}


def _isotropy_verdict(S, inv, box):
    """(isotropic or None, method, zero)."""
    zero = find_zero(S, box)
    if inv.special and inv.odd:
        return smith_isotropy_test(S, inv), "legendre-criterion", zero
    if zero is not None:
        return True, "search", zero
    if is_definite(S):
        return False, "definite", None
    return None, "search-inconclusive", None


def cmd_invariants(args):
    S = _form(args.form)
    inv = factor_invariants(S)
    iso, method, zero = _isotropy_verdict(S, inv, args.box)
    out = {
        "form": str(S),
        "invariants": inv.to_json(),
        "isotropic": iso,
        "isotropy_method": method,
        "characters": None,
    }
    if inv.special and inv.odd and iso:
        out["characters"] = _characters_json(genus_characters(S, inv, zero))
    _emit(out, "invariants")
    return EXIT_OK


def cmd_isotropy(args):
    S = _form(args.form)
    inv = factor_invariants(S)
    smith = smith_isotropy_test(S, inv) if inv.special and inv.odd else None
    zero = find_zero(S, args.box)
    _emit({
        "form": str(S),
        "smith": smith,
        "zero": None if zero is None else list(zero),
        "box": args.box,
    }, "isotropy")
    return EXIT_OK


def cmd_reduce(args):
    S = _form(args.form)
    x = _ints(args.zero, 3)
    inv = factor_invariants(S)
    tri = reduce_to_triple(S, x)
    out = {
        "form": str(S),
        "zero": x,
        "triple": tri.to_json(),
        "canonical": None,
        "transform": tri.transform.tolist(),
        "label": orbit_label(S, x, inv).to_json(),
    }
    if inv.special and inv.odd:
        can = reduce_special(S, x, inv)
        out["canonical"] = can.to_json()
        out["transform"] = can.transform.tolist()
    _emit(out, "reduce")
    return EXIT_OK


def _height_vector(S, text):
    if text is None:
        return make_height_vector(S)
    try:
        y = [Fraction(v) for v in text.split(",")]
    except ValueError:
        raise ParseError(f"bad height vector {text!r}") from None
    if len(y) != 3:
        raise ParseError("height vector needs three entries")
    try:
        return HeightVector.for_form(S, y)
    except ValueError as exc:
        raise HypothesisError(str(exc)) from None


def cmd_orbits(args):
    S = _form(args.form)
    inv = factor_invariants(S)
    hv = _height_vector(S, args.y)
    schedule = None
    if args.max_height is not None:
        T = Fraction(args.max_height)
        schedule = [T / 2**k for k in reversed(range(args.schedule))]
    oc = orbit_count(S, schedule, hv, inv=inv)
    out = {
        "form": str(S),
        "count": oc.count,
        "labels": [lab.to_json() for lab in oc.labels],
        "stable": oc.stable,
        "T": str(oc.T),
    }
    if inv.special and inv.odd:
        out.update(genus_orbit_sum(S).to_json())
        out["stable"] = out["stable"] and oc.stable
    _emit(out, "orbits")
    return EXIT_OK if out["stable"] else EXIT_UNSATURATED


def cmd_count(args):
    S = _form(args.form)
    inv = factor_invariants(S)
    hv = _height_vector(S, args.y)
    T = Fraction(args.max_height)
    schedule = [T / 2**k for k in reversed(range(args.schedule))]
    rep = density_report(S, hv, schedule, inv)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["T", "label", "count", "ratio"])
        for t, lab, c, r in rep.rows():
            w.writerow([str(t), str(lab), c, f"{float(r):.6f}"])
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    out = {"form": str(S), "height_vector": hv.to_json(), **rep.to_json(), "kappa": None}
    if len(schedule) >= 4 and rep.labels:
        fit = fit_kappa(rep)
        out["fit"] = {
            "slopes": {str(lab): s for lab, s in fit.slopes.items()},
            "spread": fit.spread,
            "precision": "float64",
        }
        if args.h is not None:
            k = kappa(inv, args.h)
            out["kappa"] = {"value": str(k), "precision": 50}
    _emit(out, "count")
    return EXIT_OK


def cmd_verify_genus(args):
    S = _form(args.form)
    part = genus_orbit_sum(S)
    _emit({"form": str(S), **part.to_json(), "verified": part.verified}, "verify-theorem1")
    if not part.stable:
        return EXIT_UNSATURATED
    return EXIT_OK if part.verified else EXIT_FAIL


def cmd_examples(args):
    ids = None if args.all else {"1", "2", "3", "4"}
    results = acceptance.run(ids)
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="ternary-orbits", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, form=True):
        sp = sub.add_parser(name)
        if form:
            sp.add_argument("--form", required=True, help='six integers "a,b,c,d,e,f"')
        sp.set_defaults(fn=fn)
        return sp

    sp = add("invariants", cmd_invariants)
    sp.add_argument("--box", type=int, default=200)
    sp.add_argument("--json", action="store_true", help="JSON output (the default)")
    sp = add("isotropy", cmd_isotropy)
    sp.add_argument("--box", type=int, default=200)
    sp.add_argument("--json", action="store_true")
    sp = add("reduce", cmd_reduce)
    sp.add_argument("--zero", required=True, help='"x1,x2,x3"')
    sp.add_argument("--json", action="store_true")
    sp = add("orbits", cmd_orbits)
    sp.add_argument("--max-height", type=Fraction)
    sp.add_argument("--schedule", type=int, default=4, help="number of doubling steps")
    sp.add_argument("--y")
    sp.add_argument("--json", action="store_true")
    sp = add("count", cmd_count)
    sp.add_argument("--max-height", type=Fraction, required=True)
    sp.add_argument("--schedule", type=int, default=4, help="number of doubling steps")
    sp.add_argument("--y", help='height vector "y1,y2,y3" with S*(y) = 4D')
    sp.add_argument("--h", type=int, help="class number, enables kappa")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    add("verify-theorem1", cmd_verify_genus)
    sp = add("examples", cmd_examples, form=False)
    sp.add_argument("--all", action="store_true", help="also run the corpus suites")
    return p


def _fail(code, kind, exc):
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc), "exit_code": code}) + "\n")
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, "parse", exc)
    except NotAZeroError as exc:
        return _fail(EXIT_NOT_ZERO, "not-a-zero", exc)
    except HypothesisError as exc:
        return _fail(EXIT_HYPOTHESIS, "hypothesis", exc)
    except SearchError as exc:
        return _fail(EXIT_UNSATURATED, "search", exc)


if __name__ == "__main__":
    sys.exit(main())
