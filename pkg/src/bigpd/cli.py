"""Command-line interface.

Exit status: 0 when every requested check passes, 1 on a check failure,
2 on usage or parse errors.  Progress goes to stderr; results go to stdout
or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import families as fam
from .formats import FormatError, format_betti, format_complex, format_ideal, parse_complex, parse_ideal
from .ideals import Ideal, colon, intersect, saturate
from .poly import ParseError
from .report import Report
from .ring import RingError, make_ring

DEFAULT_FIELD = "gf32003"


class UsageError(Exception):
    pass


class _Progress:
    def __init__(self, quiet):
        self.quiet = quiet
        self.t0 = time.monotonic()

    def __call__(self, msg):
        if not self.quiet:
            print(f"[{time.monotonic() - self.t0:8.1f}s] {msg}", file=sys.stderr, flush=True)


# -- io helpers --------------------------------------------------------------------

def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _override(I: Ideal, args) -> Ideal:
    """Move ``I`` to the ``--field`` / ``--order`` given on the command line."""
    R = I.ring
    field = args.field or R.field.tag
    order = args.order or R.order
    if (make_ring(field, R.variables, order)) == R:
        return I
    S = make_ring(field, R.variables, order)
    # reparse so that rational coefficients are read in the new field
    from .poly import format_poly

    return Ideal(S, [S(format_poly(g)) for g in I.gens])


def _load_ideal(path, args) -> Ideal:
    return _override(parse_ideal(_read(path)), args)


def _dump(data, args):
    if args.format == "structured":
        return json.dumps(data, indent=2, sort_keys=True)
    lines = []
    for k, v in data.items():
        if isinstance(v, str) and "\n" in v:
            lines.append(f"{k}:")
            lines.extend("  " + s for s in v.splitlines())
        else:
            lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")
    return "\n".join(lines)


def _report(args, rep: Report) -> int:
    _emit(args, rep.to_structured() if args.format == "structured" else rep.to_text())
    return 0 if rep.ok else 1


# -- family ------------------------------------------------------------------------

def _spec_from_args(args):
    kv = {}
    if getattr(args, "spec", None):
        text = args.spec if isinstance(args.spec, str) else " ".join(args.spec)
        if "=" not in text:
            text = _read(text)
        try:
            kv.update(fam.FamilySpec.parse(text).__dict__)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        kv = {k: v for k, v in kv.items() if v is not None}
    for k in ("kind", "h", "e", "p", "n", "d"):
        v = getattr(args, k, None)
        if v is not None:
            kv[k] = v
    if getattr(args, "forms", None):
        kv["forms_mode"] = args.forms
    if args.field:
        kv["field"] = args.field
    if args.order:
        kv["order"] = args.order
    kv = {k: str(v) for k, v in kv.items()}
    try:
        return fam.FamilySpec.from_dict(kv)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_family_build(args, progress):
    spec = _spec_from_args(args)
    k = spec.kind
    cx = None
    if k in fam.KINDS:
        F = fam.build_L(k, spec.p, spec.forms_mode, spec.field, spec.order)
        I, cx = F.ideal, F.complex
        note = f"{k} p={spec.p} forms={spec.forms_mode}"
    elif k == "I_MAIN":
        progress(f"building I h={spec.h} e={spec.e} p={spec.p}")
        I = fam.build_I(spec.h, spec.e, spec.p, spec.field, spec.order).ideal
        note = f"I h={spec.h} e={spec.e} p={spec.p}"
    elif k == "BURCH":
        I = fam.burch_ideal(spec.n, spec.field, spec.order)
        note = f"BURCH n={spec.n}"
    elif k == "J_REG":
        I = fam.j_reg(spec.n, spec.field)
        note = f"J n={spec.n}"
    else:
        B = fam.s2_example(spec.field)[0]
        I, cx = B.ideal, B.complex
        note = "L25 with variable forms"
    _emit(args, format_ideal(I, comment=f"{note}; {len(I.gens)} generators"))
    if args.complex_out:
        if cx is None:
            raise UsageError(f"{k} has no explicit complex")
        with open(args.complex_out, "w") as fh:
            fh.write(format_complex(cx))
    return 0


# -- ideal -------------------------------------------------------------------------

def _need_homogeneous(I):
    if not I.is_homogeneous():
        raise UsageError("this command needs a homogeneous ideal")


def cmd_ideal_invariants(args, progress):
    from .invariants import hilbert, is_unmixed
    from .resolution import betti_table

    I = _load_ideal(args.input, args)
    if I.is_unit():
        raise UsageError("the ideal is the unit ideal")
    hd = hilbert(I)
    data = {
        "ring": I.ring.header()[len("ring: "):],
        "generators": len(I.gens),
        "dimension": hd.dim,
        "height": hd.height,
        "multiplicity": hd.multiplicity,
        "h_polynomial": hd.numerator,
    }
    if I.is_homogeneous():
        data["minimal_generators"] = I.num_mingens()
        progress("resolving")
        B = betti_table(I, progress=lambda i, n: progress(f"frame level {i}: {n} elements"))
        data["pd"] = B.pd
        data["regularity"] = B.regularity
        data["betti"] = B.structured() if args.format == "structured" else B.format_dashes()
        if args.unmixed:
            data["unmixed"] = is_unmixed(I)
    _emit(args, _dump(data, args))
    return 0


def cmd_ideal_resolve(args, progress):
    from .oracles import exactness_defects
    from .resolution import minimal_free_resolution

    I = _load_ideal(args.input, args)
    _need_homogeneous(I)
    C, B = minimal_free_resolution(I, progress=lambda i, n: progress(f"frame level {i}: {n} elements"))
    status = 0
    style = args.betti or ("structured" if args.format == "structured" else "paper")
    if args.max_degree is not None:
        bad = exactness_defects(C, I, args.max_degree)
        progress(f"exactness oracle up to degree {args.max_degree}: {'ok' if not bad else bad}")
        if bad:
            status = 1
    if args.complex_out:
        with open(args.complex_out, "w") as fh:
            fh.write(format_complex(C))
    out = format_betti(B, style)
    if args.format == "structured" and style == "structured":
        out = json.dumps({"betti": B.structured(), "pd": B.pd, "regularity": B.regularity, "ranks": B.ranks()}, indent=2, sort_keys=True)
    _emit(args, out)
    return status


def _binary(args, op):
    I = _load_ideal(args.input, args)
    J = _load_ideal(args.other, args)
    if I.ring != J.ring:
        raise UsageError(f"rings differ: {I.ring.header()} vs {J.ring.header()}")
    K = op(I, J)
    if K.is_homogeneous() and K.gens:
        K = K.minimalized()
    _emit(args, format_ideal(K))
    return 0


def cmd_ideal_colon(args, progress):
    return _binary(args, colon)


def cmd_ideal_intersect(args, progress):
    return _binary(args, intersect)


def cmd_ideal_saturate(args, progress):
    I = _load_ideal(args.input, args)
    try:
        f = I.ring(args.by)
    except (ParseError, RingError) as exc:
        raise UsageError(f"--by: {exc}") from None
    K = saturate(I, f)
    if K.is_homogeneous() and K.gens:
        K = K.minimalized()
    _emit(args, format_ideal(K))
    return 0


# -- complex -----------------------------------------------------------------------

def cmd_complex_check(args, progress):
    from .resolution import be_acyclicity_check, is_complex, serre_sk_check

    C = parse_complex(_read(args.input))
    rep = Report(f"complex {args.input}")
    cx = is_complex(C)
    rep.add("is_complex", cx, True, cx)
    if cx:
        be = []
        ok = be_acyclicity_check(C, be)
        rep.add("buchsbaum_eisenbud", ok, True, ok, be)
        if args.sk:
            sk = []
            if not C.is_minimal():
                rep.add(f"serre_S{args.sk}", False, True, False, {"reason": "complex is not minimal"})
            else:
                ok = serre_sk_check(C, args.sk, codim=args.codim, report=sk)
                rep.add(f"serre_S{args.sk}", ok, True, ok, sk)
    return _report(args, rep)


# -- verify ------------------------------------------------------------------------

def cmd_verify_suite(args, progress):
    from .suite import run_suite

    only = None
    if args.only:
        try:
            only = {int(v) for v in args.only.split(",")}
        except ValueError:
            raise UsageError("--only takes comma-separated criterion numbers") from None
    rep = run_suite(args.field or DEFAULT_FIELD, args.order or "grevlex", progress, only)
    return _report(args, rep)


def cmd_verify_family(args, progress):
    spec = _spec_from_args(args)
    rep = fam.verify_family(spec, progress)
    return _report(args, rep)


# -- parser ------------------------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", help="gf<q> or qq (default gf32003, or the input file's field)")
    p.add_argument("--order", choices=["grevlex", "lex"], help="monomial order")
    p.add_argument("--max-degree", type=int, dest="max_degree", help="degree bound for the slice oracle")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    return p


def _family_args(p, positional_spec=False):
    if positional_spec:
        p.add_argument("spec", nargs="*", help="key=value pairs or a spec file")
    else:
        p.add_argument("--spec", help="key=value pairs or a spec file")
    p.add_argument("--kind", help="BURCH, L25, L26, L220, L36, I, J or S2")
    for k in ("h", "e", "p", "n", "d"):
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--forms", choices=["burch", "generic-variables"])


def build_parser():
    common = _common()
    top = argparse.ArgumentParser(prog="bigpd", description=__doc__.splitlines()[0])
    groups = top.add_subparsers(dest="group", required=True)

    g = groups.add_parser("family", help="construct families").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("build", parents=[common], help="emit a family ideal file")
    _family_args(p)
    p.add_argument("--complex-out", dest="complex_out", help="also write the explicit complex")
    p.set_defaults(func=cmd_family_build)

    g = groups.add_parser("ideal", help="ideal computations").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("invariants", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--unmixed", action="store_true", help="also decide unmixedness")
    p.set_defaults(func=cmd_ideal_invariants)
    p = g.add_parser("resolve", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--betti", choices=["paper", "structured"])
    p.add_argument("--complex-out", dest="complex_out")
    p.set_defaults(func=cmd_ideal_resolve)
    for name, flag, fn in (("colon", "--by", cmd_ideal_colon), ("intersect", "--with", cmd_ideal_intersect)):
        p = g.add_parser(name, parents=[common])
        p.add_argument("--in", dest="input", required=True)
        p.add_argument(flag, dest="other", required=True, help="second ideal file")
        p.set_defaults(func=fn)
    p = g.add_parser("saturate", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--by", required=True, help="polynomial f of I : f^oo")
    p.set_defaults(func=cmd_ideal_saturate)

    g = groups.add_parser("complex", help="serialized complexes").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("check", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--sk", type=int, default=0, help="also test Serre's (S_k)")
    p.add_argument("--codim", type=int, help="codimension of the resolved module")
    p.set_defaults(func=cmd_complex_check)

    g = groups.add_parser("verify", help="verification suites").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("paper", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_verify_suite)
    p = g.add_parser("family", parents=[common], help="verify one family spec")
    _family_args(p, positional_spec=True)
    p.set_defaults(func=cmd_verify_family)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    progress = _Progress(args.quiet)
    try:
        if args.field:
            make_ring(args.field, ["x"])
        return args.func(args, progress)
    except (UsageError, FormatError, ParseError, RingError) as exc:
        print(f"bigpd: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # hypotheses of a construction (bad parameters, wrong CI, ...)
        print(f"bigpd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
