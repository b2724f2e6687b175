"""Crossed systems (measuring plus R-valued cocycle), laziness, the action of
lazy cocycles, and crossed products R #_sigma A.

The crossed product uses the usual formula

    (x # a)(y # b) = x (a1 -> y) sigma(a2, b1) # a3 b2

with right coaction id (x) Delta.
"""
from . import linalg
from .core import BiForm
from .errors import AxiomFailure, NotInvertible, NotLazy, ShapeError
from .lazy import is_lazy2, is_left_cocycle
from .twist import ComoduleAlgebra, _tmul


def algebra(field, basis, mult, unit, name=""):
    """A plain finite-dimensional algebra (no coaction)."""
    return ComoduleAlgebra(field, basis, mult, unit, meta={"name": name})


def ground_algebra(field):
    """k itself, as a one-dimensional algebra."""
    return algebra(field, ["1"], [[[field.one]]], [field.one], "k")


def dual_numbers(field):
    """k[y]/(y^2) with basis (1, y)."""
    o, z = field.one, field.zero
    mult = [[[o, z], [z, o]], [[z, o], [z, z]]]
    return algebra(field, ["1", "y"], mult, [o, z], "k[y]/(y^2)")


def _add(out, v, c):
    for k, x in enumerate(v):
        if x:
            out[k] = out[k] + c * x


class CrossedSystem:
    """(->, sigma) for a Hopf algebra A over an algebra R.

    ``act[a][y]`` is the vector a -> y in R, ``sigma[a][b]`` the vector sigma(a, b).
    """

    def __init__(self, A, R, act, sigma, meta=None):
        nA, nR = A.dim, R.dim
        if len(act) != nA or any(len(r) != nR for r in act):
            raise ShapeError("act must be dim A x dim R vectors")
        if len(sigma) != nA or any(len(r) != nA for r in sigma):
            raise ShapeError("sigma must be dim A x dim A vectors")
        self.hopf = A
        self.R = R
        self.act = tuple(tuple(tuple(v) for v in r) for r in act)
        self.sigma = tuple(tuple(tuple(v) for v in r) for r in sigma)
        self.meta = dict(meta or {})

    @property
    def field(self):
        return self.hopf.field

    def act_vec(self, a, v):
        """a -> v for a basis index a and an R-vector v."""
        out = self.R.zero()
        for y, c in enumerate(v):
            if c:
                _add(out, self.act[a][y], c)
        return out

    def __eq__(self, other):
        return (isinstance(other, CrossedSystem) and self.act == other.act
                and self.sigma == other.sigma and self.R.mult == other.R.mult)

    def __hash__(self):
        return hash((self.act, self.sigma))

    def __repr__(self):
        return f"<CrossedSystem over {self.R.meta.get('name', 'R')} dim A={self.hopf.dim}>"


def trivial_action(A, R):
    """a -> y = eps(a) y."""
    F = A.field
    return [[[A.counit[a] if k == y else F.zero for k in range(R.dim)] for y in range(R.dim)]
            for a in range(A.dim)]


def scalar_sigma(sigma, R):
    """sigma(a, b) 1_R for a k-valued bi-form."""
    return [[[c * u for u in R.unit] for c in row] for row in sigma.m]


def from_cocycle(sigma, R=None):
    """The crossed system (trivial action, sigma 1_R)."""
    A = sigma.hopf
    R = R if R is not None else ground_algebra(A.field)
    return CrossedSystem(A, R, trivial_action(A, R), scalar_sigma(sigma, R))


def sweedler_on_dual_numbers(H, sigma=None):
    """H4 acting on k[y]/(y^2) by g -> y = -y, x -> y = 0, with sigma(a,b) = s(a,b) 1."""
    F = H.field
    R = dual_numbers(F)
    g = H.meta["gen_index"]["g"] if "gen_index" in H.meta else H.index("g")
    act = []
    for a in range(H.dim):
        row = []
        for y in range(2):
            v = [F.zero, F.zero]
            if y == 0:
                v[0] = H.counit[a]
            elif a == H.index("1"):
                v[1] = F.one
            elif a == g:
                v[1] = -F.one
            row.append(v)
        act.append(row)
    sig = scalar_sigma(sigma, R) if sigma is not None else scalar_sigma(
        BiForm(H, [[a * b for b in H.counit] for a in H.counit]), R)
    return CrossedSystem(H, R, act, sig, {"name": "H4 on k[y]/(y^2)"})


# ------------------------------------------------------------- R-valued maps

def _sigma_products(cs, left, right):
    """The R-valued bi-map (f * g)(a, b) = f(a1, b1) g(a2, b2) for bi-map tables."""
    A, R = cs.hopf, cs.R
    n = A.dim
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            v = R.zero()
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in A.comult[b]:
                    _add(v, R.mul(list(left[a1][b1]), list(right[a2][b2])), c * d)
            row.append(v)
        out.append(row)
    return out


def _unit_bimap(cs):
    A, R = cs.hopf, cs.R
    return [[[A.counit[a] * A.counit[b] * u for u in R.unit] for b in range(A.dim)]
            for a in range(A.dim)]


def sigma_inverse(cs):
    """Convolution inverse of sigma in Hom(A (x) A, R), via a linear solve."""
    A, R = cs.hopf, cs.R
    F = A.field
    n, r = A.dim, R.dim
    # unknown tau(c, d)_j sits at column (c * n + d) * r + j
    rows, rhs = [], []
    target = _unit_bimap(cs)
    for a in range(n):
        for b in range(n):
            eq = [dict() for _ in range(r)]
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in A.comult[b]:
                    s = cs.sigma[a1][b1]
                    for i, x in enumerate(s):
                        if not x:
                            continue
                        for j in range(r):
                            col = (a2 * n + b2) * r + j
                            for k, m in R.mul_basis(i, j):
                                e = eq[k]
                                e[col] = e.get(col, F.zero) + c * d * x * m
            for k in range(r):
                rows.append({c: v for c, v in eq[k].items() if v})
                rhs.append(target[a][b][k])
    sol = linalg.solve(rows, rhs, n * n * r, F)
    if sol is None:
        raise NotInvertible("sigma is not convolution invertible")
    return [[sol[(a * n + b) * r:(a * n + b + 1) * r] for b in range(n)] for a in range(n)]


def is_sigma_invertible(cs):
    try:
        sigma_inverse(cs)
    except NotInvertible:
        return False
    return True


# ------------------------------------------------------------------ axioms

def crossed_system_failures(cs):
    """{axiom: first failing basis tuple} for measuring, normalization, twisted module, cocycle."""
    A, R = cs.hopf, cs.R
    n, r = A.dim, R.dim
    one = A.index("1") if "1" in A.basis else next(i for i, c in enumerate(A.unit) if c)
    fails = {}
    Rb = [R.vec(i) for i in range(r)]
    unit = list(R.unit)

    # measuring
    for a in range(n):
        if cs.act_vec(a, unit) != [A.counit[a] * u for u in unit]:
            fails["measuring"] = (A.basis[a], "1")
            break
        bad = None
        for x in range(r):
            for y in range(r):
                lhs = cs.act_vec(a, R.mul(Rb[x], Rb[y]))
                rhs = R.zero()
                for a1, a2, c in A.comult[a]:
                    _add(rhs, R.mul(list(cs.act[a1][x]), list(cs.act[a2][y])), c)
                if lhs != rhs:
                    bad = (A.basis[a], R.basis[x], R.basis[y])
                    break
            if bad:
                break
        if bad:
            fails["measuring"] = bad
            break
    if "measuring" not in fails:
        for x in range(r):
            if cs.act_vec(one, Rb[x]) != Rb[x]:
                fails["measuring"] = ("1", R.basis[x])
                break

    # normalization
    for a in range(n):
        e = [A.counit[a] * u for u in unit]
        if list(cs.sigma[a][one]) != e or list(cs.sigma[one][a]) != e:
            fails["normalization"] = (A.basis[a],)
            break

    # twisted module
    for a in range(n):
        bad = None
        for b in range(n):
            for x in range(r):
                lhs, rhs = R.zero(), R.zero()
                for a1, a2, c in A.comult[a]:
                    for b1, b2, d in A.comult[b]:
                        inner = cs.act_vec(a1, list(cs.act[b1][x]))
                        _add(lhs, R.mul(inner, list(cs.sigma[a2][b2])), c * d)
                        ab = R.zero()
                        for k, m in A.mul_basis(a2, b2):
                            _add(ab, cs.act[k][x], m)
                        _add(rhs, R.mul(list(cs.sigma[a1][b1]), ab), c * d)
                if lhs != rhs:
                    bad = (A.basis[a], A.basis[b], R.basis[x])
                    break
            if bad:
                break
        if bad:
            fails["twisted_module"] = bad
            break

    # cocycle
    def sig_vec(a, w):
        v = R.zero()
        for k, m in enumerate(w):
            if m:
                _add(v, cs.sigma[a][k], m)
        return v

    def sig_left(w, c):
        v = R.zero()
        for k, m in enumerate(w):
            if m:
                _add(v, cs.sigma[k][c], m)
        return v

    done = False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs, rhs = R.zero(), R.zero()
                for a1, a2, s in A.comult[a]:
                    for b1, b2, t in A.comult[b]:
                        ab = A.zero()
                        for k, m in A.mul_basis(a2, b2):
                            ab[k] = ab[k] + m
                        _add(lhs, R.mul(list(cs.sigma[a1][b1]), sig_left(ab, c)), s * t)
                        for c1, c2, u in A.comult[c]:
                            bc = A.zero()
                            for k, m in A.mul_basis(b2, c2):
                                bc[k] = bc[k] + m
                            left = cs.act_vec(a1, list(cs.sigma[b1][c1]))
                            _add(rhs, R.mul(left, sig_vec(a2, bc)), s * t * u)
                if lhs != rhs:
                    fails["cocycle"] = (A.basis[a], A.basis[b], A.basis[c])
                    done = True
                    break
            if done:
                break
        if done:
            break

    if not is_sigma_invertible(cs):
        fails["invertible"] = ()
    return fails


def check_crossed_system(cs):
    return not crossed_system_failures(cs)


def lazy_crossed_failure(cs):
    """First (a, b, y) where a1b1 (x) (a2->y)sigma(a3,b2) != a3b2 (x) (a1->y)sigma(a2,b1)."""
    A, R = cs.hopf, cs.R
    n, r = A.dim, R.dim
    for a in range(n):
        d2 = A.delta2(a)
        for b in range(n):
            for y in range(r):
                L, Rt = {}, {}
                for a1, a2, a3, c in d2:
                    for b1, b2, d in A.comult[b]:
                        left = R.mul(list(cs.act[a2][y]), list(cs.sigma[a3][b2]))
                        for k, m in A.mul_basis(a1, b1):
                            for j, v in enumerate(left):
                                if v:
                                    L[(k, j)] = L.get((k, j), 0) + c * d * m * v
                        right = R.mul(list(cs.act[a1][y]), list(cs.sigma[a2][b1]))
                        for k, m in A.mul_basis(a3, b2):
                            for j, v in enumerate(right):
                                if v:
                                    Rt[(k, j)] = Rt.get((k, j), 0) + c * d * m * v
                if {k: v for k, v in L.items() if v} != {k: v for k, v in Rt.items() if v}:
                    return (A.basis[a], A.basis[b], R.basis[y])
    return None


def is_lazy_crossed(cs):
    return lazy_crossed_failure(cs) is None


def act_on_crossed(cs, omega):
    """(->, sigma * omega) for a lazy 2-cocycle omega."""
    if not is_lazy2(omega):
        raise NotLazy("omega must be lazy")
    if not is_left_cocycle(omega):
        raise AxiomFailure("omega is not a 2-cocycle")
    A, R = cs.hopf, cs.R
    n = A.dim
    w = omega.m
    sig = []
    for a in range(n):
        row = []
        for b in range(n):
            v = R.zero()
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in A.comult[b]:
                    x = w[a2][b2]
                    if x:
                        _add(v, cs.sigma[a1][b1], c * d * x)
            row.append(v)
        sig.append(row)
    out = CrossedSystem(A, R, cs.act, sig, cs.meta)
    fails = crossed_system_failures(out)
    if fails:
        raise AxiomFailure(f"sigma * omega is not a crossed system: {fails}")
    return out


# ------------------------------------------------------------ crossed product

def crossed_product(cs, check=True):
    """R #_sigma A on R (x) A, basis index y * dim A + a, right coaction id (x) Delta.

    When cs is lazy the left coaction x#a -> a1 (x) x#a2 is attached as well.
    """
    if check:
        fails = crossed_system_failures(cs)
        if fails:
            raise AxiomFailure(f"not a crossed system: {fails}")
    A, R = cs.hopf, cs.R
    F = A.field
    n, r = A.dim, R.dim
    N = n * r
    basis = [f"{R.basis[y]}#{A.basis[a]}" for y in range(r) for a in range(n)]
    mult = []
    for x in range(r):
        for a in range(n):
            d2 = A.delta2(a)
            row_a = []
            for y in range(r):
                for b in range(n):
                    v = [F.zero] * N
                    for a1, a2, a3, c in d2:
                        ay = list(cs.act[a1][y])
                        if not any(ay):
                            continue
                        xay = R.mul(R.vec(x), ay)
                        for b1, b2, d in A.comult[b]:
                            coef = R.mul(xay, list(cs.sigma[a2][b1]))
                            if not any(coef):
                                continue
                            for k, m in A.mul_basis(a3, b2):
                                for j, w in enumerate(coef):
                                    if w:
                                        idx = j * n + k
                                        v[idx] = v[idx] + c * d * m * w
                    row_a.append(v)
            mult.append(row_a)
    unit = [F.zero] * N
    for y, u in enumerate(R.unit):
        if u:
            for a, e in enumerate(A.unit):
                if e:
                    unit[y * n + a] = u * e
    right = [[(y * n + a1, a2, c) for a1, a2, c in A.comult[a]] for y in range(r) for a in range(n)]
    left = [[(a1, y * n + a2, c) for a1, a2, c in A.comult[a]] for y in range(r) for a in range(n)]
    lazy = is_lazy_crossed(cs)
    Z = ComoduleAlgebra(F, basis, mult, unit, hopf=A, right=right,
                        left=left if lazy else None, left_hopf=A if lazy else None,
                        meta={"name": f"{R.meta.get('name', 'R')}#A", "crossed": cs,
                              "beta": left})
    return Z


def beta_failure(Z):
    """First pair (u, v) with beta(uv) != beta(u) beta(v), beta(x#a) = a1 (x) x#a2."""
    A = Z.hopf
    beta = Z.meta["beta"]
    n = Z.dim

    def b(i):
        return {(a, z): c for a, z, c in beta[i]}

    def bv(v):
        out = {}
        for i, x in enumerate(v):
            if x:
                for a, z, c in beta[i]:
                    out[(a, z)] = out.get((a, z), 0) + x * c
        return {k: c for k, c in out.items() if c}

    for i in range(n):
        for j in range(n):
            lhs = bv(list(Z.mult[i][j]))
            rhs = _tmul(b(i), b(j), A.mul_basis, Z.mul_basis)
            if lhs != rhs:
                return (Z.basis[i], Z.basis[j])
    return None


def beta_is_algebra_map(Z):
    return beta_failure(Z) is None


# --------------------------------------------- extraction from an extension

def extract_crossed_system(Z, R, r_images, psi):
    """The crossed system of Z read through psi: R (x) A -> Z.

    ``r_images[y]`` is the image of the R-basis element y in Z and ``psi[y*dim A + a]``
    the image of y (x) a.  With u = psi^{-1}:  a -> y = (id (x) eps) u(psi(1(x)a) y)
    and sigma(a, b) = (id (x) eps) u(psi(1(x)a) psi(1(x)b)).
    """
    A = Z.hopf
    F = Z.field
    n, r = A.dim, R.dim
    if len(psi) != n * r:
        raise ShapeError("psi needs dim R * dim A images")
    inv = linalg.mat_inverse([list(v) for v in psi], F)
    one = [i for i, c in enumerate(R.unit) if c]
    if one != [0] or R.unit[0] != F.one:
        raise ShapeError("R must have 1 as its first basis vector")

    def read(zv):
        coords = [F.zero] * (n * r)
        for i, c in enumerate(zv):
            if c:
                for j, w in enumerate(inv[i]):
                    if w:
                        coords[j] = coords[j] + c * w
        out = [F.zero] * r
        for y in range(r):
            for a in range(n):
                c = coords[y * n + a]
                if c and A.counit[a]:
                    out[y] = out[y] + c * A.counit[a]
        return out

    gam = [list(psi[a]) for a in range(n)]  # psi(1 (x) a)
    act = [[read(Z.mul(gam[a], list(r_images[y]))) for y in range(r)] for a in range(n)]
    sig = [[read(Z.mul(gam[a], gam[b])) for b in range(n)] for a in range(n)]
    return CrossedSystem(A, R, act, sig)


def beta_psi_failure(Z, psi, r_dim):
    """First failing pair for beta_psi = (id (x) m)(tau (x) id)(psi^{-1} (x) psi|A) rho."""
    A = Z.hopf
    F = Z.field
    n = A.dim
    inv = linalg.mat_inverse([list(v) for v in psi], F)
    N = Z.dim
    beta = []
    for i in range(N):
        acc = {}
        for z, a2, c in Z.right[i]:
            for j, w in enumerate(inv[z]):
                if not w:
                    continue
                y, a1 = divmod(j, n)
                left_part = list(psi[y * n + A.index("1") if "1" in A.basis else y * n])
                prod = Z.mul(left_part, list(psi[a2]))
                for k, v in enumerate(prod):
                    if v:
                        acc[(a1, k)] = acc.get((a1, k), 0) + c * w * v
        beta.append([(a, k, v) for (a, k), v in sorted(acc.items()) if v])
    W = ComoduleAlgebra(F, Z.basis, Z.mult, Z.unit, hopf=A, meta={"beta": beta})
    return beta_failure(W)


def crossed_product_psi(cs, mu):
    """psi(y (x) a) = y mu(a1) # a2 on the crossed product, for an invertible form mu with mu(1)=1."""
    A, R = cs.hopf, cs.R
    F = A.field
    n, r = A.dim, R.dim
    psi = []
    for y in range(r):
        for a in range(n):
            v = [F.zero] * (n * r)
            for a1, a2, c in A.comult[a]:
                x = mu.v[a1]
                if x:
                    v[y * n + a2] = v[y * n + a2] + c * x
            psi.append(v)
    return psi
