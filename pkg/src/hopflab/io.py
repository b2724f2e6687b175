"""JSON definition files: Hopf algebras, forms, group tables, matched pairs,
comodule algebras and crossed systems.

Scalars are written as strings in the field's own notation ("3/2",
"2 mod 3", "1+z^2").  Bilinear data is stored sparsely by basis names.
"""
import json
import re
from datetime import datetime, timezone

from .core import BiForm, HopfAlgebra, LinForm, verify_hopf_axioms
from .errors import AxiomFailure, FieldMismatch, ParseError, ShapeError
from .scalars import field_from_spec


# ----------------------------------------------------------------- helpers

class _Ctx:
    """Carries the raw text so scalar errors can point at a line and column."""

    def __init__(self, text=None):
        self.text = text

    def where(self, token):
        if self.text is None:
            return None, None
        m = re.search(re.escape(json.dumps(token)), self.text)
        if not m:
            return None, None
        line = self.text.count("\n", 0, m.start()) + 1
        col = m.start() - (self.text.rfind("\n", 0, m.start()) + 1) + 1
        return line, col

    def scalar(self, F, s):
        if isinstance(s, int) and not isinstance(s, bool):
            return F(s)
        if not isinstance(s, str):
            raise ParseError(f"scalar must be a string or integer, got {s!r}", *self.where(s))
        try:
            return F.parse(s)
        except ParseError as e:
            line, col = self.where(s)
            raise ParseError(f"bad scalar {s!r}: {e}", line, col) from None
        except (ValueError, ZeroDivisionError) as e:
            line, col = self.where(s)
            raise ParseError(f"bad scalar {s!r}: {e}", line, col) from None


def _fmt(F, x):
    return F.fmt(x)


def _index(names, key, what):
    try:
        return names.index(key)
    except ValueError:
        raise ParseError(f"unknown {what} {key!r}") from None


def _dense(F, names, entries, ctx, what):
    v = [F.zero] * len(names)
    for k, c in entries.items():
        i = _index(names, k, what)
        v[i] = v[i] + ctx.scalar(F, c)
    return v


def _sparse(F, names, v):
    return {names[i]: _fmt(F, c) for i, c in enumerate(v) if c}


# ------------------------------------------------------------ Hopf algebras

def hopf_to_dict(H):
    F = H.field
    b = list(H.basis)
    d = {
        "kind": "hopf",
        "name": H.meta.get("name", ""),
        "field": F.spec(),
        "basis": b,
        "mult": [[b[i], b[j], b[k], _fmt(F, c)]
                 for i in range(H.dim) for j in range(H.dim)
                 for k, c in enumerate(H.mult[i][j]) if c],
        "comult": [[b[i], b[j], b[k], _fmt(F, c)] for i in range(H.dim) for j, k, c in H.comult[i]],
        "unit": _sparse(F, b, H.unit),
        "counit": _sparse(F, b, H.counit),
        "antipode": {b[i]: _sparse(F, b, H.antipode[i]) for i in range(H.dim)},
    }
    gens = H.meta.get("gens")
    words = H.meta.get("words")
    gi = H.meta.get("gen_index")
    if gens and words and gi:
        d["generators"] = {
            str(k): dict({"kind": v["kind"]}, **({"order": v["order"]} if "order" in v else {}),
                         basis=b[gi[k]])
            for k, v in gens.items()
        }
        d["words"] = {b[i]: [str(g) for g in w] for i, w in enumerate(words)}
    return d


def hopf_from_dict(d, ctx=None, check=True):
    ctx = ctx or _Ctx()
    if d.get("kind") != "hopf":
        raise ParseError(f"expected kind 'hopf', got {d.get('kind')!r}")
    try:
        F = field_from_spec(d["field"])
        basis = list(d["basis"])
        n = len(basis)
        mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in d["mult"]:
            a, b, e = (_index(basis, x, "basis element") for x in (i, j, k))
            mult[a][b][e] = mult[a][b][e] + ctx.scalar(F, c)
        comult = [[] for _ in range(n)]
        for i, j, k, c in d["comult"]:
            a, b, e = (_index(basis, x, "basis element") for x in (i, j, k))
            comult[a].append((b, e, ctx.scalar(F, c)))
        unit = _dense(F, basis, d["unit"], ctx, "basis element")
        counit = _dense(F, basis, d.get("counit", {}), ctx, "basis element")
        anti = [_dense(F, basis, d["antipode"].get(x, {}), ctx, "basis element") for x in basis]
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None
    except (TypeError, ValueError) as e:
        if isinstance(e, (ParseError, FieldMismatch)):
            raise
        raise ParseError(f"malformed Hopf algebra: {e}") from None
    meta = {"name": d.get("name", "")}
    if "generators" in d and "words" in d:
        meta["gens"] = {k: {kk: vv for kk, vv in v.items() if kk != "basis"}
                        for k, v in d["generators"].items()}
        meta["gen_index"] = {k: _index(basis, v["basis"], "basis element")
                             for k, v in d["generators"].items()}
        meta["words"] = [tuple(d["words"][x]) for x in basis]
    try:
        H = HopfAlgebra(F, basis, mult, comult, unit, counit, anti, meta)
    except ShapeError as e:
        raise ParseError(str(e)) from None
    if check:
        rep = verify_hopf_axioms(H)
        if not rep.ok:
            raise AxiomFailure(f"definition fails the Hopf axioms: {rep}")
    return H


# -------------------------------------------------------------------- forms

def linform_to_dict(f):
    H = f.hopf
    return {"kind": "linform", "algebra": H.meta.get("name", ""),
            "values": _sparse(H.field, list(H.basis), f.v)}


def biform_to_dict(s):
    H = s.hopf
    b = list(H.basis)
    return {"kind": "biform", "algebra": H.meta.get("name", ""),
            "values": [[b[i], b[j], H.field.fmt(c)]
                       for i in range(H.dim) for j, c in enumerate(s.m[i]) if c]}


def form_from_dict(d, H, ctx=None):
    ctx = ctx or _Ctx()
    F = H.field
    b = list(H.basis)
    kind = d.get("kind")
    if kind == "linform":
        return LinForm(H, _dense(F, b, d["values"], ctx, "basis element"))
    if kind == "biform":
        m = [[F.zero] * H.dim for _ in range(H.dim)]
        for x, y, c in d["values"]:
            i, j = _index(b, x, "basis element"), _index(b, y, "basis element")
            m[i][j] = m[i][j] + ctx.scalar(F, c)
        return BiForm(H, m)
    raise ParseError(f"expected a form, got kind {kind!r}")


# ------------------------------------------------------------------- groups

def group_to_dict(G):
    return {"kind": "group", "elements": list(G.names),
            "table": [[G.names[x] for x in row] for row in G.table]}


def group_from_dict(d):
    from .groups import FiniteGroup
    names = list(d["elements"])
    table = [[_index(names, x, "group element") for x in row] for row in d["table"]]
    return FiniteGroup(table, names)


# ------------------------------------------------------------- matched pairs

def _action_entries(F, src_names, tgt_names, out_names, act):
    return [[src_names[a], tgt_names[b], out_names[k], F.fmt(c)]
            for a in range(len(src_names)) for b in range(len(tgt_names))
            for k, c in enumerate(act[a][b]) if c]


def _action_table(F, src, tgt, out, entries, ctx):
    t = [[[F.zero] * len(out) for _ in tgt] for _ in src]
    for a, b, k, c in entries:
        i, j, l = _index(src, a, "basis element"), _index(tgt, b, "basis element"), \
            _index(out, k, "basis element")
        t[i][j][l] = t[i][j][l] + ctx.scalar(F, c)
    return t


def matched_pair_to_dict(mp):
    A, B = mp.A, mp.B
    F = mp.field
    a, b = list(A.basis), list(B.basis)
    return {"kind": "matched_pair", "B": hopf_to_dict(B), "A": hopf_to_dict(A),
            "act_l": _action_entries(F, a, b, b, mp.act_l),
            "act_r": _action_entries(F, a, b, a, mp.act_r)}


def matched_pair_from_dict(d, ctx=None):
    from .families import MatchedPair
    ctx = ctx or _Ctx()
    B = hopf_from_dict(d["B"], ctx)
    A = hopf_from_dict(d["A"], ctx)
    F = A.field
    a, b = list(A.basis), list(B.basis)
    return MatchedPair(B, A, _action_table(F, a, b, b, d["act_l"], ctx),
                       _action_table(F, a, b, a, d["act_r"], ctx))


# ------------------------------------------------------- comodule algebras

def comodule_algebra_to_dict(Z):
    F = Z.field
    z = list(Z.basis)
    d = {"kind": "comodule_algebra", "name": Z.meta.get("name", ""), "field": F.spec(),
         "basis": z,
         "mult": [[z[i], z[j], z[k], F.fmt(c)] for i in range(Z.dim) for j in range(Z.dim)
                  for k, c in enumerate(Z.mult[i][j]) if c],
         "unit": _sparse(F, z, Z.unit)}
    if Z.right is not None:
        h = list(Z.hopf.basis)
        d["right"] = [[z[i], z[y], h[a], F.fmt(c)] for i in range(Z.dim) for y, a, c in Z.right[i]]
    if Z.left is not None:
        h = list(Z.left_hopf.basis)
        d["left"] = [[z[i], h[a], z[y], F.fmt(c)] for i in range(Z.dim) for a, y, c in Z.left[i]]
    return d


def comodule_algebra_from_dict(d, H=None, ctx=None):
    from .twist import ComoduleAlgebra
    ctx = ctx or _Ctx()
    F = field_from_spec(d["field"])
    z = list(d["basis"])
    n = len(z)
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in d["mult"]:
        a, b, e = (_index(z, x, "basis element") for x in (i, j, k))
        mult[a][b][e] = mult[a][b][e] + ctx.scalar(F, c)
    unit = _dense(F, z, d["unit"], ctx, "basis element")
    right = left = None
    if "right" in d or "left" in d:
        if H is None:
            raise ParseError("a coaction needs the Hopf algebra (--algebra)")
        if H.field != F:
            raise FieldMismatch("comodule algebra and Hopf algebra over different fields")
        h = list(H.basis)
    if "right" in d:
        right = [[] for _ in range(n)]
        for i, y, a, c in d["right"]:
            right[_index(z, i, "basis element")].append(
                (_index(z, y, "basis element"), _index(h, a, "basis element"), ctx.scalar(F, c)))
    if "left" in d:
        left = [[] for _ in range(n)]
        for i, a, y, c in d["left"]:
            left[_index(z, i, "basis element")].append(
                (_index(h, a, "basis element"), _index(z, y, "basis element"), ctx.scalar(F, c)))
    Z = ComoduleAlgebra(F, z, mult, unit, hopf=H if right is not None else None, right=right,
                        left=left, left_hopf=H if left is not None else None,
                        meta={"name": d.get("name", "")})
    fails = Z.check()
    if fails:
        raise AxiomFailure(f"comodule algebra axioms fail: {fails}")
    return Z


def group_datum_from_dict(d, ctx=None):
    """{"kind": "group_datum", "field", "group", "g", "chi": {element: scalar}, "mu"}."""
    from .families import GroupDatum
    ctx = ctx or _Ctx()
    F = field_from_spec(d["field"])
    G = group_from_dict(d["group"])
    chi = [ctx.scalar(F, d["chi"][x]) for x in G.names]
    return GroupDatum(G, d["g"], chi, ctx.scalar(F, d.get("mu", "0")), F)


def group_datum_to_dict(D):
    F = D.field
    return {"kind": "group_datum", "field": F.spec(), "group": group_to_dict(D.G),
            "g": D.G.names[D.g], "chi": {x: F.fmt(c) for x, c in zip(D.G.names, D.chi)},
            "mu": F.fmt(D.mu)}


def superspace_from_dict(d, ctx=None):
    """{"kind": "superspace", "field", "group", "n", "g", "rho": {element: matrix}}."""
    from .families import SuperSpace
    ctx = ctx or _Ctx()
    F = field_from_spec(d["field"])
    G = group_from_dict(d["group"])
    rho = [[[ctx.scalar(F, c) for c in row] for row in d["rho"][x]] for x in G.names]
    return SuperSpace(G, int(d["n"]), rho, d["g"], F)


def superspace_to_dict(S):
    F = S.field
    return {"kind": "superspace", "field": F.spec(), "group": group_to_dict(S.G), "n": S.n,
            "g": S.G.names[S.g],
            "rho": {x: [[F.fmt(c) for c in row] for row in S.rho[h]] for h, x in enumerate(S.G.names)}}


# ---------------------------------------------------------- crossed systems

def crossed_to_dict(cs):
    F = cs.field
    a, r = list(cs.hopf.basis), list(cs.R.basis)
    return {"kind": "crossed", "hopf": hopf_to_dict(cs.hopf),
            "R": comodule_algebra_to_dict(cs.R),
            "act": _action_entries(F, a, r, r, cs.act),
            "sigma": _action_entries(F, a, a, r, cs.sigma)}


def crossed_from_dict(d, ctx=None):
    from .crossed import CrossedSystem
    ctx = ctx or _Ctx()
    H = hopf_from_dict(d["hopf"], ctx)
    R = comodule_algebra_from_dict(d["R"], ctx=ctx)
    F = H.field
    a, r = list(H.basis), list(R.basis)
    return CrossedSystem(H, R, _action_table(F, a, r, r, d["act"], ctx),
                         _action_table(F, a, a, r, d["sigma"], ctx))


# ------------------------------------------------------------------ files

def to_dict(obj):
    from .crossed import CrossedSystem
    from .families import GroupDatum, MatchedPair, SuperSpace
    from .groups import FiniteGroup
    from .twist import ComoduleAlgebra
    if isinstance(obj, GroupDatum):
        return group_datum_to_dict(obj)
    if isinstance(obj, SuperSpace):
        return superspace_to_dict(obj)
    if isinstance(obj, HopfAlgebra):
        return hopf_to_dict(obj)
    if isinstance(obj, LinForm):
        return linform_to_dict(obj)
    if isinstance(obj, BiForm):
        return biform_to_dict(obj)
    if isinstance(obj, FiniteGroup):
        return group_to_dict(obj)
    if isinstance(obj, MatchedPair):
        return matched_pair_to_dict(obj)
    if isinstance(obj, CrossedSystem):
        return crossed_to_dict(obj)
    if isinstance(obj, ComoduleAlgebra):
        return comodule_algebra_to_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj):
    """Canonical text: sorted keys, one-space indent, trailing newline."""
    d = obj if isinstance(obj, dict) else to_dict(obj)
    return json.dumps(d, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def canonicalize(text):
    return json.dumps(json.loads(text), indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text, hopf=None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("definition must be an object with a 'kind' field", 1, 1)
    ctx = _Ctx(text)
    kind = d["kind"]
    if kind == "report":
        if not isinstance(d.get("result"), dict):
            raise ParseError("report carries no result object")
        d = d["result"]
        kind = d.get("kind")
    try:
        return _dispatch(kind, d, ctx, hopf)
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None


def _dispatch(kind, d, ctx, hopf):
    if kind == "hopf":
        return hopf_from_dict(d, ctx)
    if kind in ("linform", "biform"):
        if hopf is None:
            raise ParseError("a form needs its Hopf algebra (--algebra)")
        return form_from_dict(d, hopf, ctx)
    if kind == "group":
        return group_from_dict(d)
    if kind == "matched_pair":
        return matched_pair_from_dict(d, ctx)
    if kind == "comodule_algebra":
        return comodule_algebra_from_dict(d, hopf, ctx)
    if kind == "crossed":
        return crossed_from_dict(d, ctx)
    if kind == "group_datum":
        return group_datum_from_dict(d, ctx)
    if kind == "superspace":
        return superspace_from_dict(d, ctx)
    raise ParseError(f"unknown kind {kind!r}")


def parse_definition_file(path, hopf=None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), hopf)


def write_definition(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def data_path(name):
    """Path of a bundled definition file such as 'h4.json'."""
    from importlib.resources import files
    return str(files("hopflab") / "data" / name)


def write_report(path, report, timestamp=True, timing=None):
    """Write a JSON report.

    Everything that changes from run to run (the clock time and any wall-clock
    measurements passed as ``timing``) lives under the single 'timestamp' key.
    """
    d = dict(report)
    if timestamp:
        d["timestamp"] = {"utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                          **(timing or {})}
    text = json.dumps(d, indent=1, sort_keys=True, ensure_ascii=False, default=str) + "\n"
    if path in (None, "-"):
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
