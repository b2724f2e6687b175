"""Command line front-end.

Exit codes: 0 pass, 1 a checked property failed, 2 usage or input error.
"""
import argparse
import sys
import time

from . import io
from .errors import FieldMismatch, HopfLabError, ParseError
from .scalars import QQ, field_from_name


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- inputs

def _field(args, default=QQ):
    return field_from_name(args.field) if getattr(args, "field", None) else default


def build_family(spec, field=None):
    """Hopf algebra (or group datum based object) from a textual family descriptor."""
    from . import families as fam
    kind, _, arg = spec.partition(":")
    F = field
    if kind == "sweedler":
        return fam.sweedler(F or QQ)
    if kind == "en":
        return fam.en_algebra(int(arg), F or QQ)
    if kind == "taft":
        return fam.taft(int(arg), field=F)
    if kind == "group":
        return fam.group_algebra(io.parse_definition_file(arg), F or QQ)
    if kind == "dual-group":
        return fam.dual_group_algebra(io.parse_definition_file(arg), F or QQ)
    if kind == "monomial":
        return fam.monomial_hopf(io.parse_definition_file(arg))
    if kind == "double-crossed":
        return fam.double_crossed(io.parse_definition_file(arg))
    if kind == "drinfeld":
        return fam.drinfeld_double(io.parse_definition_file(arg))
    if kind == "bosonization":
        return fam.bosonization(io.parse_definition_file(arg))
    raise UsageError(f"unknown family {spec!r}")


def _algebra(args, which="algebra"):
    src = getattr(args, which, None)
    fam_spec = getattr(args, "family", None)
    if src:
        H = io.parse_definition_file(src)
    elif fam_spec and which == "algebra":
        H = build_family(fam_spec, _field(args, None))
    else:
        raise UsageError(f"--{which} or --family is required")
    from .core import HopfAlgebra
    if not isinstance(H, HopfAlgebra):
        raise UsageError(f"{src} does not define a Hopf algebra")
    if getattr(args, "field", None) and field_from_name(args.field) != H.field:
        raise FieldMismatch(f"--field {args.field} but the algebra is over {H.field!r}")
    return H


def _forms(args, H, count=None):
    paths = args.form or []
    if count is not None and len(paths) != count:
        raise UsageError(f"expected {count} --form argument(s), got {len(paths)}")
    return [io.parse_definition_file(p, H) for p in paths]


# ---------------------------------------------------------------- reports

def _emit(args, verb, ok, summary, data=None, result=None, timing=None):
    print(f"{verb}: {'PASS' if ok else 'FAIL'}  {summary}")
    out = getattr(args, "out", None)
    if out:
        rep = {"kind": "report", "verb": verb, "passed": ok, "summary": summary,
               "data": data or {}}
        if result is not None:
            rep["result"] = io.to_dict(result) if not isinstance(result, dict) else result
        io.write_report(out, rep, timing=timing)
    return 0 if ok else 1


# ------------------------------------------------------------------ verbs

def cmd_verify(args):
    from .core import verify_hopf_axioms
    H = _algebra(args)
    rep = verify_hopf_axioms(H)
    return _emit(args, "verify", rep.ok, f"dim {H.dim} {rep!r}", rep.as_dict(), H)


def cmd_convolve(args):
    from .core import convolve
    H = _algebra(args)
    fs = _forms(args, H)
    if len(fs) < 2:
        raise UsageError("convolve needs at least two --form arguments")
    out = fs[0]
    for f in fs[1:]:
        out = convolve(out, f)
    return _emit(args, "convolve", True, repr(out), None, out)


def cmd_cocycle_check(args):
    from .lazy import cocycle_report
    H = _algebra(args)
    (s,) = _forms(args, H, 1)
    rep = cocycle_report(s)
    ok = rep.is_reg and rep.is_lazy and rep.is_left_cocycle
    return _emit(args, "cocycle-check", ok, repr(rep), rep.as_dict())


def cmd_coboundary(args):
    from .lazy import coboundary, is_lazy1
    H = _algebra(args)
    (mu,) = _forms(args, H, 1)
    d = coboundary(mu)
    return _emit(args, "coboundary", True, f"lazy mu: {is_lazy1(mu)}; {d!r}", None, d)


def cmd_twist(args):
    from .twist import doi_twist
    H = _algebra(args)
    (s,) = _forms(args, H, 1)
    T = doi_twist(H, s)
    same = T.mult == H.mult
    return _emit(args, "twist", True, f"twisted product {'unchanged' if same else 'changed'}",
                 {"unchanged": same}, T)


def cmd_galois(args):
    from .twist import check_galois, galois_object
    H = _algebra(args)
    (s,) = _forms(args, H, 1)
    Z = galois_object(H, s, args.side)
    ok = check_galois(Z) and Z.is_valid()
    return _emit(args, "galois", ok, f"{args.side} Galois object of dim {Z.dim}", None, Z)


def cmd_cotensor(args):
    from .core import convolve
    from .linalg import dense_rows, rank
    from .twist import cotensor, delta_into_cotensor, galois_object, is_bicomodule_algebra_map
    H = _algebra(args)
    s, t = _forms(args, H, 2)
    Zs, Zt = galois_object(H, s, "bi"), galois_object(H, t, "bi")
    C = cotensor(Zs, Zt)
    X = galois_object(H, convolve(s, t), "bi")
    f = delta_into_cotensor(H, C, X, Zt)
    ok = C.dim == H.dim and rank(dense_rows(f.m), H.dim) == H.dim and is_bicomodule_algebra_map(f, X, C)
    return _emit(args, "cotensor", ok, f"cotensor dim {C.dim}; Delta isomorphism: {ok}",
                 {"dim": C.dim}, C)


def cmd_family(args):
    from .core import verify_hopf_axioms
    H = build_family(args.spec, _field(args, None))
    rep = verify_hopf_axioms(H)
    return _emit(args, "family", rep.ok, f"{args.spec}: dim {H.dim} over {H.field!r}",
                 rep.as_dict(), H)


def _pair_setup(args):
    from . import families as fam
    B = _algebra(args)
    A = _algebra(args, "algebra2") if args.algebra2 else B
    if args.matched_pair:
        mp = io.parse_definition_file(args.matched_pair)
        if not isinstance(mp, fam.MatchedPair):
            raise UsageError(f"{args.matched_pair} is not a matched pair")
        B, A = mp.B, mp.A
    else:
        mp = fam.trivial_matched_pair(B, A)
    return B, A, mp


def _read_pairing(path, mp):
    """A pairing file is a bi-form on B when A = B, or a linear form on B (x) A."""
    from .core import BiForm
    from .kac import CentralPairing, _tensor_carrier
    from .core import same_algebra
    if same_algebra(mp.A, mp.B):
        try:
            f = io.parse_definition_file(path, mp.B)
            if isinstance(f, BiForm):
                return CentralPairing(mp, f.m)
        except ParseError:
            pass
    return CentralPairing.from_form(mp, io.parse_definition_file(path, _tensor_carrier(mp)))


def _pairing_data(beta):
    F, B, A = beta.mp.field, beta.mp.B, beta.mp.A
    return {f"{B.basis[i]},{A.basis[j]}": F.fmt(c)
            for i, r in enumerate(beta.m) for j, c in enumerate(r) if c}


def cmd_kac(args):
    from . import kac
    B, A, mp = _pair_setup(args)
    paths = args.form or []
    act = args.action
    if act == "check-pairing":
        if len(paths) != 1:
            raise UsageError("kac check-pairing needs one --form")
        beta = _read_pairing(paths[0], mp)
        fails = kac.central_pairing_failures(beta, mp)
        return _emit(args, "kac check-pairing", not fails, f"failures {fails or 'none'}",
                     {"failures": {k: list(v) for k, v in fails.items()}})
    if act == "sigma":
        if len(paths) != 1:
            raise UsageError("kac sigma needs one --form")
        sigma = kac.sigma_from_pairing(_read_pairing(paths[0], mp), mp)
        return _emit(args, "kac sigma", True, f"lazy cocycle on B bowtie A of dim {sigma.hopf.dim}",
                     None, sigma)
    if act == "lambda":
        if len(paths) != 2:
            raise UsageError("kac lambda needs --form phi_B --form phi_A")
        phi_B = io.parse_definition_file(paths[0], B)
        phi_A = io.parse_definition_file(paths[1], A)
        beta = kac.lambda_map(phi_B, phi_A, mp)
        return _emit(args, "kac lambda", True, repr(beta), {"pairing": _pairing_data(beta)})
    if act == "yamazaki":
        if len(paths) != 2:
            raise UsageError("kac yamazaki needs --form sigma_B --form sigma_A")
        sB = io.parse_definition_file(paths[0], B)
        sA = io.parse_definition_file(paths[1], A)
        J = kac.yamazaki_join(sB, sA, mp)
        ok = kac.restrict(J) == (sB, sA)
        return _emit(args, "kac yamazaki", ok, f"restriction recovers both factors: {ok}", None, J)
    if act == "pairings":
        from .oracle import brute_pairings
        ps = brute_pairings(A, B)
        data = {"count": len(ps), "pairings": [_pairing_data(p) for p in ps]}
        return _emit(args, "kac pairings", True, f"{len(ps)} central pairing(s)", data)
    raise UsageError(f"unknown kac action {act!r}")


def cmd_projrep(args):
    from . import projreps as pr
    H = _algebra(args)
    fs = _forms(args, H)
    if not fs:
        raise UsageError("projrep needs --form")
    X = pr.regular_projrep(H, fs[0])
    if args.action in ("regular", "check"):
        ok = pr.check_projrep(X)
        return _emit(args, f"projrep {args.action}", ok, f"regular rep of dim {X.dim}: {ok}")
    if args.action == "tensor":
        if len(fs) != 2:
            raise UsageError("projrep tensor needs two --form arguments")
        Y = pr.regular_projrep(H, fs[1])
        T = pr.tensor_projrep(X, Y)
        ok = pr.check_projrep(T)
        return _emit(args, "projrep tensor", ok, f"dim {T.dim}, cocycle {T.sigma!r}", None, T.sigma)
    if args.action == "dual":
        D = pr.dual_projrep(X)
        e, d = pr.evaluation_identities(X)
        ok = pr.check_projrep(D) and e and d
        return _emit(args, "projrep dual", ok, f"evaluation {e}, coevaluation {d}", None, D.sigma)
    raise UsageError(f"unknown projrep action {args.action!r}")


def cmd_crossed(args):
    from . import crossed as cr
    cs = io.parse_definition_file(args.crossed)
    if not isinstance(cs, cr.CrossedSystem):
        raise UsageError(f"{args.crossed} is not a crossed system")
    if args.action == "check":
        fails = cr.crossed_system_failures(cs)
        lazy = cr.is_lazy_crossed(cs) if not fails else None
        return _emit(args, "crossed check", not fails, f"failures {fails or 'none'}, lazy {lazy}",
                     {"failures": {k: list(v) for k, v in fails.items()}, "lazy": lazy})
    if args.action == "act":
        (w,) = [io.parse_definition_file(p, cs.hopf) for p in (args.form or [])][:1] or [None]
        if w is None:
            raise UsageError("crossed act needs --form")
        out = cr.act_on_crossed(cs, w)
        return _emit(args, "crossed act", True, "sigma * omega is a crossed system", None, out)
    if args.action == "product":
        Z = cr.crossed_product(cs)
        bad = cr.beta_failure(Z)
        ok = Z.is_valid()
        return _emit(args, "crossed product", ok,
                     f"dim {Z.dim}, beta algebra map: {bad is None}", {"beta_failure": bad}, Z)
    raise UsageError(f"unknown crossed action {args.action!r}")


def cmd_oracle(args):
    from . import oracle
    H = _algebra(args)
    t0 = time.perf_counter()
    if args.action == "z2l":
        r = oracle.enumerate_z2L(H)
        data = r.report()
        summary = f"H2_L = {r.quotient.describe()} (|Z2_L|={len(r.z2l)}, |B2_L|={len(r.b2l)}, residual dim {r.residual_dim})"
    elif args.action == "units":
        u = oracle.enumerate_lazy_units(H)
        data = {"count": len(u), "units": [[H.field.fmt(c) for c in f.v] for f in u]}
        summary = f"{len(u)} lazy unit(s)"
    elif args.action == "alg-maps":
        u = oracle.enumerate_alg_maps(H)
        data = {"count": len(u), "maps": [[H.field.fmt(c) for c in f.v] for f in u]}
        summary = f"{len(u)} algebra map(s)"
    elif args.action == "pairings":
        A = _algebra(args, "algebra2") if args.algebra2 else H
        ps = oracle.brute_pairings(A, H)
        data = {"count": len(ps)}
        summary = f"{len(ps)} central pairing(s)"
    else:
        raise UsageError(f"unknown oracle action {args.action!r}")
    data.pop("seconds", None)
    data["label"] = f"consistency check over F{H.field.p}"
    timing = {"wall_seconds": round(time.perf_counter() - t0, 3)}
    return _emit(args, f"oracle {args.action}", True, summary, data, timing=timing)


def cmd_suite(args):
    from .acceptance import run_suite
    rep = run_suite(args.level)
    for r in rep["results"]:
        print(f"{r['criterion']:>4} {'PASS' if r['passed'] else 'FAIL'} {r['seconds']:8.3f}s  {r['detail']}")
    if args.out:
        results = [{k: v for k, v in r.items() if k != "seconds"} for r in rep["results"]]
        timing = {"runtimes": {r["criterion"]: round(r["seconds"], 3) for r in rep["results"]}}
        io.write_report(args.out, dict(rep, results=results, kind="report", verb="suite"), timing=timing)
    return 0 if rep["passed"] else 1


# ------------------------------------------------------------------ parser

def make_parser():
    p = argparse.ArgumentParser(prog="hopflab", description="Lazy cohomology of finite-dimensional Hopf algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, forms=True):
        sp.add_argument("--algebra", help="Hopf algebra definition file")
        sp.add_argument("--family", help="family descriptor, e.g. sweedler, en:2, taft:3")
        sp.add_argument("--field", help="field: q, f3, f5, cyc3, ...")
        if forms:
            sp.add_argument("--form", action="append", help="form definition file (repeatable)")
        sp.add_argument("--out", "--report", dest="out", help="write a JSON report here")
        return sp

    common(sub.add_parser("verify", help="check the Hopf algebra axioms"), forms=False).set_defaults(fn=cmd_verify)
    common(sub.add_parser("convolve", help="convolution product of forms")).set_defaults(fn=cmd_convolve)
    common(sub.add_parser("cocycle-check", help="normalization, laziness and cocycle predicates")).set_defaults(fn=cmd_cocycle_check)
    common(sub.add_parser("coboundary", help="the coboundary of a linear form")).set_defaults(fn=cmd_coboundary)
    common(sub.add_parser("twist", help="Doi twist by a 2-cocycle")).set_defaults(fn=cmd_twist)
    g = common(sub.add_parser("galois", help="Galois object of a cocycle"))
    g.add_argument("--side", choices=["right", "left", "bi"], default="right")
    g.set_defaults(fn=cmd_galois)
    common(sub.add_parser("cotensor", help="cotensor product of two bi-Galois objects")).set_defaults(fn=cmd_cotensor)
    f = sub.add_parser("family", help="build a Hopf algebra from a family descriptor")
    f.add_argument("spec")
    f.add_argument("--field")
    f.add_argument("--out", "--report", dest="out")
    f.set_defaults(fn=cmd_family)
    k = common(sub.add_parser("kac", help="central pairings and the maps built from them"))
    k.add_argument("action", choices=["check-pairing", "sigma", "lambda", "yamazaki", "pairings"])
    k.add_argument("--algebra2", help="second factor A (default: same as --algebra)")
    k.add_argument("--matched-pair", help="matched pair definition file (default: trivial actions)")
    k.set_defaults(fn=cmd_kac)
    pr = common(sub.add_parser("projrep", help="projective representations"))
    pr.add_argument("action", choices=["regular", "tensor", "dual", "check"])
    pr.set_defaults(fn=cmd_projrep)
    c = sub.add_parser("crossed", help="crossed systems")
    c.add_argument("action", choices=["check", "act", "product"])
    c.add_argument("--crossed", required=True, help="crossed system definition file")
    c.add_argument("--form", action="append")
    c.add_argument("--out", "--report", dest="out")
    c.set_defaults(fn=cmd_crossed)
    o = common(sub.add_parser("oracle", help="exhaustive search over a prime field"), forms=False)
    o.add_argument("action", choices=["z2l", "units", "alg-maps", "pairings"])
    o.add_argument("--algebra2")
    o.set_defaults(fn=cmd_oracle)
    s = sub.add_parser("suite", help="run the acceptance criteria")
    s.add_argument("--level", choices=["quick", "full"], default="quick")
    s.add_argument("--out", "--report", dest="out")
    s.set_defaults(fn=cmd_suite)
    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.fn(args)
    except (UsageError, ParseError, FileNotFoundError, FieldMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HopfLabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
