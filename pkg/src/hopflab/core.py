"""Hopf algebras given by structure constants, and the convolution algebra of forms.

Conventions
-----------
* ``mult[i][j]`` is the coefficient vector of b_i b_j.
* ``comult[i]`` is a tuple of (j, k, c) triples: Delta(b_i) = sum c b_j (x) b_k.
* Linear maps are stored with rows as images: ``M[i]`` is the vector f(b_i).
* Tensor elements of A (x) B are dicts {(i, j): c}.
"""
from . import linalg
from .errors import (
    AntipodeNotInvertible,
    FieldMismatch,
    MismatchedAlgebras,
    NotInvertible,
    ShapeError,
)


def _tupvec(field, v, n, what):
    if len(v) != n:
        raise ShapeError(f"{what}: expected length {n}, got {len(v)}")
    out = []
    for x in v:
        if isinstance(x, int) and not isinstance(x, bool):
            x = field(x)
        elif not field.contains(x):
            raise FieldMismatch(f"{what}: {x!r} is not in {field!r}")
        out.append(x)
    return tuple(out)


class HopfAlgebra:
    """A finite-dimensional Hopf algebra over an exact field."""

    def __init__(self, field, basis, mult, comult, unit, counit, antipode, meta=None):
        n = len(basis)
        if n == 0:
            raise ShapeError("empty basis")
        self.field = field
        self.basis = tuple(str(b) for b in basis)
        if len(mult) != n or any(len(r) != n for r in mult):
            raise ShapeError("multiplication tensor has the wrong shape")
        self.mult = tuple(
            tuple(_tupvec(field, mult[i][j], n, f"mult[{i}][{j}]") for j in range(n))
            for i in range(n)
        )
        if len(comult) != n:
            raise ShapeError("comultiplication must have one entry per basis element")
        cm = []
        for i, terms in enumerate(comult):
            acc = {}
            for j, k, c in terms:
                if not (0 <= j < n and 0 <= k < n):
                    raise ShapeError(f"comult[{i}] index out of range")
                c = field(c) if isinstance(c, int) else c
                if not field.contains(c):
                    raise FieldMismatch(f"comult[{i}]: {c!r} is not in {field!r}")
                acc[(j, k)] = acc.get((j, k), field.zero) + c
            cm.append(tuple((j, k, c) for (j, k), c in sorted(acc.items()) if c))
        self.comult = tuple(cm)
        self.unit = _tupvec(field, unit, n, "unit")
        self.counit = _tupvec(field, counit, n, "counit")
        if len(antipode) != n:
            raise ShapeError("antipode must be square")
        self.antipode = tuple(_tupvec(field, antipode[i], n, f"antipode[{i}]") for i in range(n))
        self.meta = dict(meta or {})
        self._msp = tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(n))
            for i in range(n)
        )
        self._d2 = None
        self._hash = None

    # -- basics
    @property
    def dim(self):
        return len(self.basis)

    n = dim

    def __repr__(self):
        name = self.meta.get("name", "HopfAlgebra")
        return f"<{name} dim={self.dim} over {self.field!r}>"

    def _key(self):
        return (self.field, self.mult, self.comult, self.unit, self.counit, self.antipode)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.field, self.unit, self.counit))
        return self._hash

    def __getstate__(self):
        d = dict(self.__dict__)
        d["_d2"] = None
        return d

    def index(self, name):
        if isinstance(name, int):
            return name
        return self.basis.index(name)

    def zero(self):
        return [self.field.zero] * self.dim

    def vec(self, name, coeff=None):
        v = self.zero()
        v[self.index(name)] = self.field.one if coeff is None else self.field(coeff)
        return v

    def element(self, terms):
        """Vector from {name: coeff}."""
        v = self.zero()
        for name, c in terms.items():
            i = self.index(name)
            v[i] = v[i] + self.field(c)
        return v

    def show(self, v):
        parts = []
        for i, c in enumerate(v):
            if c:
                parts.append(f"({self.field.fmt(c)})*{self.basis[i]}")
        return " + ".join(parts) or "0"

    # -- algebra
    def mul_basis(self, i, j):
        return self._msp[i][j]

    def mul(self, u, v):
        out = self.zero()
        msp = self._msp
        for i, a in enumerate(u):
            if not a:
                continue
            row = msp[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return out

    def eps(self, v):
        s = self.field.zero
        for a, e in zip(v, self.counit):
            if a and e:
                s = s + a * e
        return s

    def S(self, v):
        return apply_rows(self.antipode, v, self.field)

    def delta(self, i):
        return self.comult[i]

    def delta_vec(self, v):
        out = {}
        for i, a in enumerate(v):
            if a:
                for j, k, c in self.comult[i]:
                    out[(j, k)] = out.get((j, k), 0) + a * c
        return {key: c for key, c in out.items() if c}

    def delta2(self, i):
        """(Delta (x) id) Delta(b_i) as (j, k, l, c) tuples."""
        if self._d2 is None:
            d2 = []
            for a in range(self.dim):
                acc = {}
                for j, l, c in self.comult[a]:
                    for j1, j2, d in self.comult[j]:
                        key = (j1, j2, l)
                        acc[key] = acc.get(key, 0) + c * d
                d2.append(tuple((x, y, z, c) for (x, y, z), c in sorted(acc.items()) if c))
            self._d2 = tuple(d2)
        return self._d2[i]

    def tensor_mul(self, X, Y, other=None):
        """Product in A (x) B of dict tensors (B defaults to A)."""
        B = other or self
        out = {}
        for (a, b), c in X.items():
            for (a2, b2), d in Y.items():
                cd = c * d
                for k, e in self._msp[a][a2]:
                    ce = cd * e
                    for l, f in B._msp[b][b2]:
                        key = (k, l)
                        out[key] = out.get(key, 0) + ce * f
        return {key: c for key, c in out.items() if c}

    def identity_map(self):
        return LinMap(linalg.identity(self.dim, self.field), self, self)

    def counit_form(self):
        return LinForm(self, self.counit)

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.dim) for j in range(i))

    def is_cocommutative(self):
        for terms in self.comult:
            a = {(j, k): c for j, k, c in terms}
            b = {(k, j): c for j, k, c in terms}
            if a != b:
                return False
        return True

    def grouplikes(self):
        """Basis elements b with Delta(b) = b (x) b and eps(b) = 1."""
        return [i for i, t in enumerate(self.comult)
                if len(t) == 1 and t[0][0] == i and t[0][1] == i and t[0][2] == 1]


def apply_rows(M, v, field):
    """sum_i v_i M[i] for a rows-are-images matrix."""
    m = len(M[0]) if M else 0
    out = [field.zero] * m
    for i, a in enumerate(v):
        if a:
            for j, c in enumerate(M[i]):
                if c:
                    out[j] = out[j] + a * c
    return out


def same_algebra(A, B):
    return A is B or A == B


def _check_same(A, B):
    if not same_algebra(A, B):
        raise MismatchedAlgebras("forms live on different Hopf algebras")


# ---------------------------------------------------------------- forms

class LinForm:
    """A linear form on H, i.e. an element of H*."""

    __slots__ = ("hopf", "v")

    def __init__(self, hopf, values):
        self.hopf = hopf
        self.v = _tupvec(hopf.field, list(values), hopf.dim, "LinForm")

    def __call__(self, x):
        if isinstance(x, (int, str)):
            return self.v[self.hopf.index(x)]
        s = self.hopf.field.zero
        for a, b in zip(x, self.v):
            if a and b:
                s = s + a * b
        return s

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.v == other.v and same_algebra(self.hopf, other.hopf)

    def __hash__(self):
        return hash(self.v)

    def __mul__(self, other):
        return convolve(self, other)

    def inverse(self):
        return conv_inverse(self)

    def compose(self, f):
        """self o f for a linear map f with codomain self.hopf."""
        return LinForm(f.src, [self(row) for row in f.m])

    def __repr__(self):
        H = self.hopf
        return "LinForm(" + ", ".join(f"{b}:{H.field.fmt(c)}" for b, c in zip(H.basis, self.v)) + ")"


class BiForm:
    """A bilinear form on H, stored as a dim x dim matrix."""

    __slots__ = ("hopf", "m")

    def __init__(self, hopf, matrix):
        self.hopf = hopf
        n = hopf.dim
        if len(matrix) != n:
            raise ShapeError("BiForm must be dim x dim")
        self.m = tuple(_tupvec(hopf.field, list(r), n, "BiForm") for r in matrix)

    def __call__(self, a, b):
        H = self.hopf
        if isinstance(a, (int, str)) and isinstance(b, (int, str)):
            return self.m[H.index(a)][H.index(b)]
        u = H.vec(a) if isinstance(a, (int, str)) else a
        w = H.vec(b) if isinstance(b, (int, str)) else b
        s = H.field.zero
        for i, x in enumerate(u):
            if x:
                row = self.m[i]
                for j, y in enumerate(w):
                    if y and row[j]:
                        s = s + x * y * row[j]
        return s

    def __eq__(self, other):
        return isinstance(other, BiForm) and self.m == other.m and same_algebra(self.hopf, other.hopf)

    def __hash__(self):
        return hash(self.m)

    def __mul__(self, other):
        return convolve(self, other)

    def inverse(self):
        return conv_inverse(self)

    def flip(self):
        """sigma o tau."""
        return BiForm(self.hopf, linalg.transpose(self.m))

    def __repr__(self):
        H = self.hopf
        nz = [f"({H.basis[i]},{H.basis[j]}):{H.field.fmt(c)}"
              for i, r in enumerate(self.m) for j, c in enumerate(r) if c]
        return "BiForm(" + ", ".join(nz) + ")"


def unit_biform(H):
    e = H.counit
    return BiForm(H, [[a * b for b in e] for a in e])


def tensor_forms(f, g):
    """(f (x) g)(a, b) = f(a) g(b) as a BiForm (f, g on the same algebra)."""
    _check_same(f.hopf, g.hopf)
    return BiForm(f.hopf, [[a * b for b in g.v] for a in f.v])


def form_after_mult(f):
    """The BiForm (a, b) -> f(ab)."""
    H = f.hopf
    return BiForm(H, [[f(H.mult[i][j]) for j in range(H.dim)] for i in range(H.dim)])


class LinMap:
    """Linear map src -> dst; ``m[i]`` is the image of the i-th basis vector."""

    __slots__ = ("m", "src", "dst")

    def __init__(self, matrix, src=None, dst=None):
        self.m = tuple(tuple(r) for r in matrix)
        self.src = src
        self.dst = dst
        if src is not None and len(self.m) != src.dim:
            raise ShapeError("LinMap rows must match the source dimension")
        if dst is not None and any(len(r) != dst.dim for r in self.m):
            raise ShapeError("LinMap columns must match the target dimension")

    @property
    def field(self):
        return (self.src or self.dst).field

    def __call__(self, v):
        return apply_rows(self.m, v, self.field)

    def compose(self, g):
        """self o g."""
        return LinMap([self(r) for r in g.m], g.src, self.dst)

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __mul__(self, other):
        return convolve(self, other)

    def inverse(self):
        inv = linalg.mat_inverse([list(r) for r in self.m], self.field)
        return LinMap(inv, self.dst, self.src)

    def __repr__(self):
        return f"LinMap({[list(r) for r in self.m]!r})"


# ---------------------------------------------------------- convolution

def convolve(f, g):
    """Convolution product f * g: (f*g)(a) = f(a1) g(a2)."""
    if isinstance(f, LinForm) and isinstance(g, LinForm):
        _check_same(f.hopf, g.hopf)
        H = f.hopf
        out = []
        for i in range(H.dim):
            s = H.field.zero
            for j, k, c in H.comult[i]:
                x, y = f.v[j], g.v[k]
                if x and y:
                    s = s + c * x * y
            out.append(s)
        return LinForm(H, out)
    if isinstance(f, BiForm) and isinstance(g, BiForm):
        _check_same(f.hopf, g.hopf)
        return _conv_bi(f, g)
    if isinstance(f, LinForm) and isinstance(g, LinMap):
        _check_same(f.hopf, g.src)
        H = f.hopf
        rows = []
        for i in range(H.dim):
            r = [H.field.zero] * len(g.m[0])
            for j, k, c in H.comult[i]:
                x = f.v[j]
                if x:
                    cx = c * x
                    for t, y in enumerate(g.m[k]):
                        if y:
                            r[t] = r[t] + cx * y
            rows.append(r)
        return LinMap(rows, g.src, g.dst)
    if isinstance(f, LinMap) and isinstance(g, LinForm):
        _check_same(f.src, g.hopf)
        H = g.hopf
        rows = []
        for i in range(H.dim):
            r = [H.field.zero] * len(f.m[0])
            for j, k, c in H.comult[i]:
                y = g.v[k]
                if y:
                    cy = c * y
                    for t, x in enumerate(f.m[j]):
                        if x:
                            r[t] = r[t] + cy * x
            rows.append(r)
        return LinMap(rows, f.src, f.dst)
    if isinstance(f, LinMap) and isinstance(g, LinMap):
        _check_same(f.src, g.src)
        if f.dst is None or not same_algebra(f.dst, g.dst):
            raise MismatchedAlgebras("convolution of maps needs a common target algebra")
        H, T = f.src, f.dst
        rows = []
        for i in range(H.dim):
            r = T.zero()
            for j, k, c in H.comult[i]:
                p = T.mul(f.m[j], g.m[k])
                for t, y in enumerate(p):
                    if y:
                        r[t] = r[t] + c * y
            rows.append(r)
        return LinMap(rows, H, T)
    raise TypeError(f"cannot convolve {type(f).__name__} with {type(g).__name__}")


def _conv_bi(f, g):
    H = f.hopf
    n = H.dim
    F = H.field
    cm = H.comult
    fm, gm = f.m, g.m
    out = [[F.zero] * n for _ in range(n)]
    for a in range(n):
        da = cm[a]
        for b in range(n):
            db = cm[b]
            s = F.zero
            for a1, a2, c in da:
                fr, gr = fm[a1], gm[a2]
                for b1, b2, d in db:
                    x = fr[b1]
                    if x:
                        y = gr[b2]
                        if y:
                            s = s + c * d * x * y
            out[a][b] = s
    return BiForm(H, out)


def conv_unit(f):
    if isinstance(f, LinForm):
        return f.hopf.counit_form()
    return unit_biform(f.hopf)


def conv_inverse(f):
    """Two-sided convolution inverse; raises NotInvertible."""
    H = f.hopf
    F = H.field
    n = H.dim
    if isinstance(f, LinForm):
        rows, rhs = [], []
        for a in range(n):
            r = {}
            for j, k, c in H.comult[a]:
                x = f.v[j]
                if x:
                    r[k] = r.get(k, 0) + c * x
            rows.append(r)
            rhs.append(H.counit[a])
        sol = linalg.solve(rows, rhs, n, F)
        if sol is None:
            raise NotInvertible("linear form is not convolution invertible")
        g = LinForm(H, sol)
    elif isinstance(f, BiForm):
        rows, rhs = [], []
        for a in range(n):
            for b in range(n):
                r = {}
                for a1, a2, c in H.comult[a]:
                    fr = f.m[a1]
                    for b1, b2, d in H.comult[b]:
                        x = fr[b1]
                        if x:
                            key = a2 * n + b2
                            r[key] = r.get(key, 0) + c * d * x
                rows.append(r)
                rhs.append(H.counit[a] * H.counit[b])
        sol = linalg.solve(rows, rhs, n * n, F)
        if sol is None:
            raise NotInvertible("bilinear form is not convolution invertible")
        g = BiForm(H, [sol[i * n:(i + 1) * n] for i in range(n)])
    else:
        raise TypeError("conv_inverse expects a LinForm or BiForm")
    u = conv_unit(f)
    if convolve(f, g) != u or convolve(g, f) != u:
        raise NotInvertible("only a one-sided inverse exists")
    return g


def is_invertible(f):
    try:
        conv_inverse(f)
        return True
    except NotInvertible:
        return False


# ------------------------------------------------------- axiom checks

class AxiomReport:
    """Pass/fail per axiom with the first failing basis tuple."""

    AXIOMS = ("associativity", "coassociativity", "unit_counit", "bialgebra", "antipode")

    def __init__(self):
        self.results = {a: None for a in self.AXIOMS}

    def fail(self, axiom, where):
        if self.results.get(axiom) is None:
            self.results[axiom] = where

    @property
    def ok(self):
        return all(v is None for v in self.results.values())

    def __bool__(self):
        return self.ok

    def failures(self):
        return {a: w for a, w in self.results.items() if w is not None}

    def as_dict(self):
        return {a: ("pass" if w is None else {"fail": list(w)}) for a, w in self.results.items()}

    def __repr__(self):
        return "AxiomReport(" + ", ".join(
            f"{a}={'ok' if w is None else w}" for a, w in self.results.items()) + ")"


def _tensor_of_triples(triples):
    d = {}
    for j, k, c in triples:
        d[(j, k)] = d.get((j, k), 0) + c
    return {key: c for key, c in d.items() if c}


def verify_hopf_axioms(H):
    """Check all Hopf algebra axioms on basis tuples; returns an AxiomReport."""
    rep = AxiomReport()
    n = H.dim
    names = H.basis
    basis = [H.vec(i) for i in range(n)]
    # associativity
    for i in range(n):
        for j in range(n):
            ij = H.mult[i][j]
            for k in range(n):
                if H.mul(ij, basis[k]) != H.mul(basis[i], list(H.mult[j][k])):
                    rep.fail("associativity", (names[i], names[j], names[k]))
                    break
            if rep.results["associativity"]:
                break
        if rep.results["associativity"]:
            break
    # coassociativity
    for i in range(n):
        left, right = {}, {}
        for j, k, c in H.comult[i]:
            for j1, j2, d in H.comult[j]:
                key = (j1, j2, k)
                left[key] = left.get(key, 0) + c * d
            for k1, k2, d in H.comult[k]:
                key = (j, k1, k2)
                right[key] = right.get(key, 0) + c * d
        left = {a: b for a, b in left.items() if b}
        right = {a: b for a, b in right.items() if b}
        if left != right:
            rep.fail("coassociativity", (names[i],))
            break
    # unit and counit laws
    u = list(H.unit)
    for i in range(n):
        if H.mul(u, basis[i]) != basis[i] or H.mul(basis[i], u) != basis[i]:
            rep.fail("unit_counit", ("unit", names[i]))
            break
    for i in range(n):
        left = H.zero()
        right = H.zero()
        for j, k, c in H.comult[i]:
            left[k] = left[k] + c * H.counit[j]
            right[j] = right[j] + c * H.counit[k]
        if left != basis[i] or right != basis[i]:
            rep.fail("unit_counit", ("counit", names[i]))
            break
    # Delta and eps are algebra maps
    if H.eps(u) != 1 or H.delta_vec(u) != {(a, b): c for (a, b), c in
                                          _unit_tensor(H).items()}:
        rep.fail("bialgebra", ("unit",))
    for i in range(n):
        if rep.results["bialgebra"]:
            break
        Di = _tensor_of_triples(H.comult[i])
        for j in range(n):
            lhs = H.delta_vec(H.mult[i][j])
            rhs = H.tensor_mul(Di, _tensor_of_triples(H.comult[j]))
            if lhs != rhs or H.eps(H.mult[i][j]) != H.counit[i] * H.counit[j]:
                rep.fail("bialgebra", (names[i], names[j]))
                break
    # antipode
    for i in range(n):
        l = H.zero()
        r = H.zero()
        for j, k, c in H.comult[i]:
            p = H.mul(list(H.antipode[j]), basis[k])
            q = H.mul(basis[j], list(H.antipode[k]))
            for t in range(n):
                l[t] = l[t] + c * p[t]
                r[t] = r[t] + c * q[t]
        e = [H.counit[i] * x for x in u]
        if l != e or r != e:
            rep.fail("antipode", (names[i],))
            break
    return rep


def _unit_tensor(H):
    out = {}
    for a, x in enumerate(H.unit):
        if x:
            for b, y in enumerate(H.unit):
                if y:
                    out[(a, b)] = x * y
    return out


def is_hopf_morphism(f, src, dst, report=False):
    """f respects m, Delta, unit and counit (antipode is checked and reported)."""
    n, m = src.dim, dst.dim
    if len(f.m) != n or any(len(r) != m for r in f.m):
        raise ShapeError("map shape does not match the algebras")
    fails = {}
    img = [list(r) for r in f.m]
    for i in range(n):
        for j in range(n):
            if f(src.mult[i][j]) != dst.mul(img[i], img[j]):
                fails.setdefault("mult", (src.basis[i], src.basis[j]))
    if f(list(src.unit)) != list(dst.unit):
        fails["unit"] = ()
    for i in range(n):
        lhs = dst.delta_vec(img[i])
        rhs = {}
        for j, k, c in src.comult[i]:
            for a, x in enumerate(img[j]):
                if x:
                    for b, y in enumerate(img[k]):
                        if y:
                            rhs[(a, b)] = rhs.get((a, b), 0) + c * x * y
        rhs = {key: c for key, c in rhs.items() if c}
        if lhs != rhs:
            fails.setdefault("comult", (src.basis[i],))
        if dst.eps(img[i]) != src.counit[i]:
            fails.setdefault("counit", (src.basis[i],))
    for i in range(n):
        if f(list(src.antipode[i])) != dst.S(img[i]):
            fails.setdefault("antipode", (src.basis[i],))
            break
    ok = not fails
    return (ok, fails) if report else ok


# --------------------------------------------------------- constructions

def dual_hopf(H):
    n = H.dim
    F = H.field
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i, j, c in H.comult[k]:
            mult[i][j][k] = mult[i][j][k] + c
    comult = []
    for k in range(n):
        comult.append([(i, j, H.mult[i][j][k]) for i in range(n) for j in range(n) if H.mult[i][j][k]])
    antipode = [[H.antipode[k][i] for k in range(n)] for i in range(n)]
    names = [b[:-1] if b.endswith("*") else b + "*" for b in H.basis]
    meta = {"name": "dual(" + H.meta.get("name", "H") + ")"}
    return HopfAlgebra(F, names, mult, comult, list(H.counit), list(H.unit), antipode, meta)


def tensor_hopf(A, B):
    if A.field != B.field:
        raise FieldMismatch("tensor product of algebras over different fields")
    F = A.field
    na, nb = A.dim, B.dim
    n = na * nb
    names = [f"{a}⊗{b}" for a in A.basis for b in B.basis]
    mult = [[None] * n for _ in range(n)]
    for a in range(na):
        for b in range(nb):
            for a2 in range(na):
                for b2 in range(nb):
                    v = [F.zero] * n
                    for k, c in A.mul_basis(a, a2):
                        for l, d in B.mul_basis(b, b2):
                            v[k * nb + l] = c * d
                    mult[a * nb + b][a2 * nb + b2] = v
    comult = []
    for a in range(na):
        for b in range(nb):
            t = []
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in B.comult[b]:
                    t.append((a1 * nb + b1, a2 * nb + b2, c * d))
            comult.append(t)
    unit = [x * y for x in A.unit for y in B.unit]
    counit = [x * y for x in A.counit for y in B.counit]
    antipode = [[x * y for x in A.antipode[a] for y in B.antipode[b]] for a in range(na) for b in range(nb)]
    meta = {"name": f"{A.meta.get('name', 'A')}⊗{B.meta.get('name', 'B')}", "factors": (A, B)}
    return HopfAlgebra(F, names, mult, comult, unit, counit, antipode, meta)


def op_cop(H, flip_mult, flip_comult):
    if not flip_mult and not flip_comult:
        return H
    n = H.dim
    mult = [[list(H.mult[j][i]) if flip_mult else list(H.mult[i][j]) for j in range(n)] for i in range(n)]
    comult = [[(k, j, c) if flip_comult else (j, k, c) for j, k, c in t] for t in H.comult]
    S = [list(r) for r in H.antipode]
    if flip_mult != flip_comult:
        try:
            S = linalg.mat_inverse(S, H.field)
        except NotInvertible:
            raise AntipodeNotInvertible("antipode is not invertible") from None
    tag = ("op" if flip_mult else "") + ("cop" if flip_comult else "")
    meta = {"name": f"{H.meta.get('name', 'H')}^{tag}"}
    return HopfAlgebra(H.field, H.basis, mult, comult, list(H.unit), list(H.counit), S, meta)


def hopf_from_words(field, basis, mult, words, gen_delta, gen_eps, gen_S, meta=None):
    """Build a Hopf algebra whose basis elements are products of generators.

    ``words[i]`` lists generator keys whose product (in the algebra given by
    ``mult``) is basis element i.  Delta, eps and S are extended from the
    generator data multiplicatively (S anti-multiplicatively).
    """
    n = len(basis)
    proto = HopfAlgebra(field, basis, mult, [[(0, 0, 1)]] * n, [1] + [0] * (n - 1),
                        [0] * n, [[0] * n] * n)
    unit = None
    for i, w in enumerate(words):
        if not w:
            unit = i
    if unit is None:
        raise ShapeError("one basis word must be empty (the unit)")
    unit_vec = proto.vec(unit)
    unit_t = {(unit, unit): field.one}
    comult, counit, antipode = [], [], []
    for i, w in enumerate(words):
        D = unit_t
        e = field.one
        s = unit_vec
        for g in w:
            D = proto.tensor_mul(D, gen_delta[g])
            e = e * field(gen_eps[g])
            s = proto.mul(list(gen_S[g]), s)
        comult.append([(j, k, c) for (j, k), c in sorted(D.items())])
        counit.append(e)
        antipode.append(s)
    m2 = dict(meta or {})
    m2["words"] = [tuple(w) for w in words]
    return HopfAlgebra(field, basis, mult, comult, unit_vec, counit, antipode, m2)


def hom_from_words(src, dst, images):
    """Algebra map determined by images of generators (src must carry words)."""
    words = src.meta.get("words")
    if words is None:
        raise ShapeError("source algebra has no generator words")
    rows = []
    for w in words:
        v = list(dst.unit)
        for g in w:
            v = dst.mul(v, list(images[g]))
        rows.append(v)
    return LinMap(rows, src, dst)
