"""Constructors for the Hopf algebras used throughout: group algebras, H4, E(n),
monomial algebras A(G), bosonizations, double crossed products and doubles."""
from itertools import combinations

from . import linalg
from .core import (
    BiForm,
    HopfAlgebra,
    LinForm,
    LinMap,
    dual_hopf,
    hom_from_words,
    hopf_from_words,
    is_hopf_morphism,
    op_cop,
    tensor_hopf,
    verify_hopf_axioms,
)
from .errors import CharTwo, InvalidDatum, NotInvariant, NotMatched, NotSymmetric
from .groups import FiniteGroup, cyclic_group, product_group
from .scalars import QQ

# ------------------------------------------------------------ group algebras


def group_algebra(G, field=QQ):
    n = G.order
    mult = [[[field.one if k == G.table[a][b] else field.zero for k in range(n)] for b in range(n)]
            for a in range(n)]
    gens, words = G.generators()
    word_list = [words[x] for x in range(n)]
    gdelta = {g: {(g, g): field.one} for g in gens}
    geps = {g: 1 for g in gens}
    gS = {g: [field.one if k == G.inverse[g] else field.zero for k in range(n)] for g in gens}
    meta = {
        "name": "k[G]",
        "group": G,
        "gens": {g: {"kind": "grouplike", "order": G.element_order(g)} for g in gens},
        "gen_index": {g: g for g in gens},
    }
    H = hopf_from_words(field, G.names, mult, word_list, gdelta, geps, gS, meta)
    return H


def dual_group_algebra(G, field=QQ):
    D = dual_hopf(group_algebra(G, field))
    D.meta["name"] = "k^G"
    return D


def z2(field=QQ):
    return group_algebra(cyclic_group(2, "g"), field)


def z2xz2(field=QQ):
    return group_algebra(product_group(cyclic_group(2, "g"), cyclic_group(2, "h")), field)


# -------------------------------------------------------------------- E(n)

def _subsets(n):
    out = []
    for k in range(n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


def _wedge(P, Q):
    """x_P x_Q = sign * x_{P u Q} (or 0)."""
    if set(P) & set(Q):
        return 0, None
    inv = sum(1 for p in P for q in Q if p > q)
    return (-1) ** inv, tuple(sorted(P + Q))


def en_algebra(n, field=QQ):
    """E(n): c^2 = 1, c x_i = -x_i c, x_i x_j = -x_j x_i, Delta(x_i) = 1(x)x_i + x_i(x)c."""
    if not field.two_invertible():
        raise CharTwo("E(n) needs 2 to be invertible")
    if n < 1:
        raise InvalidDatum("n must be positive")
    subs = _subsets(n)
    basis = []
    index = {}
    for P in subs:
        for a in (0, 1):
            index[(a, P)] = len(basis)
            basis.append(("c" if a else "") + "".join(f"x{p}" for p in P) or "1")
    dim = len(basis)
    mult = [[None] * dim for _ in range(dim)]
    for (a, P), i in index.items():
        for (b, Q), j in index.items():
            v = [field.zero] * dim
            s, R = _wedge(P, Q)
            if R is not None:
                s *= (-1) ** (b * len(P))
                v[index[((a + b) % 2, R)]] = field(s)
            mult[i][j] = v
    words = []
    for (a, P), i in sorted(index.items(), key=lambda t: t[1]):
        words.append(["c"] * a + [f"x{p}" for p in P])
    one, c = index[(0, ())], index[(1, ())]
    gdelta = {"c": {(c, c): field.one}}
    geps = {"c": 1}
    gS = {"c": [field.one if k == c else field.zero for k in range(dim)]}
    gens = {"c": {"kind": "grouplike", "order": 2}}
    for p in range(1, n + 1):
        x = index[(0, (p,))]
        cx = index[(1, (p,))]
        gdelta[f"x{p}"] = {(one, x): field.one, (x, c): field.one}
        geps[f"x{p}"] = 0
        gS[f"x{p}"] = [field.one if k == cx else field.zero for k in range(dim)]
        gens[f"x{p}"] = {"kind": "nilpotent"}
    # generator keys used in words must map to basis indices for hom_from_words
    meta = {"name": f"E({n})", "gens": gens, "n": n,
            "gen_index": {"c": c, **{f"x{p}": index[(0, (p,))] for p in range(1, n + 1)}}}
    return hopf_from_words(field, basis, mult, words, gdelta, geps, gS, meta)


def sweedler(field=QQ):
    H = en_algebra(1, field)
    H2 = HopfAlgebra(field, ["1", "g", "x", "gx"], H.mult, H.comult, H.unit, H.counit, H.antipode,
                     dict(H.meta, name="H4",
                          words=[tuple({"c": "g", "x1": "x"}[w] for w in ws) for ws in H.meta["words"]],
                          gens={"g": {"kind": "grouplike", "order": 2}, "x": {"kind": "nilpotent"}},
                          gen_index={"g": 1, "x": 2}))
    return H2


def sweedler_sigma(t, H=None):
    """The lazy cocycle sigma_t on H4 (basis 1, g, x, gx)."""
    H = H or sweedler()
    F = H.field
    t = F(t)
    half = t / 2
    m = [[F.zero] * 4 for _ in range(4)]
    for a in range(4):
        m[0][a] = H.counit[a]
        m[a][0] = H.counit[a]
    g, x, gx = 1, 2, 3
    m[g][g] = F.one
    m[x][x] = half
    m[gx][x] = half
    m[x][gx] = -half
    m[gx][gx] = -half
    return BiForm(H, m)


def alpha_t(t, H=None):
    """The Hopf automorphism of H4 (or E(1)) fixing g and sending x to t x."""
    H = H or sweedler()
    F = H.field
    t = F(t)
    rows = [[F.zero] * 4 for _ in range(4)]
    rows[0][0] = F.one
    rows[1][1] = F.one
    rows[2][2] = t
    rows[3][3] = t
    return LinMap(rows, H, H)


def en_phi(H):
    """Phi: E(n) -> E(n)*, c -> 1* - c*, x_i -> x_i* + (c x_i)*."""
    D = dual_hopf(H)
    F = H.field
    gi = H.meta["gen_index"]
    images = {}
    one = H.index(H.basis[0])
    for key, idx in gi.items():
        v = [F.zero] * H.dim
        if H.meta["gens"][key]["kind"] == "grouplike":
            v[one] = F.one
            v[idx] = -F.one
        else:
            v[idx] = F.one
            cx = _find(H, gi, key)
            v[cx] = F.one
        images[key] = v
    return hom_from_words(H, D, images)


def _find(H, gi, key):
    # index of c * x_key
    cvec = H.vec(gi[next(k for k, d in H.meta["gens"].items() if d["kind"] == "grouplike")])
    p = H.mul(cvec, H.vec(gi[key]))
    return next(i for i, c in enumerate(p) if c)


def gamma_theta(H, l):
    """gamma = eps + sum_{i<j} l_ij ((x_i x_j)* + (c x_i x_j)*) on E(n)."""
    F = H.field
    v = list(H.counit)
    n = H.meta["n"]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lij = F(l[i - 1][j - 1])
            v[H.index(f"x{i}x{j}")] += lij
            v[H.index(f"cx{i}x{j}")] += lij
    return LinForm(H, v)


def psi_invariant(sigma):
    """Lower-triangular matrix (sigma * d gamma_sigma)(x_i, x_j) on E(n)."""
    from .lazy import coboundary

    H = sigma.hopf
    n = H.meta["n"]
    l = [[sigma(f"x{i}", f"x{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]
    g = gamma_theta(H, l)
    tau = sigma * coboundary(g)
    return [[tau(f"x{i}", f"x{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]


def psi_symmetric(sigma):
    """Symmetric matrix attached to the class of sigma (diagonal kept, off-diagonal halved)."""
    L = psi_invariant(sigma)
    n = len(L)
    return [[L[i][j] if i == j else (L[max(i, j)][min(i, j)] / 2) for j in range(n)] for i in range(n)]


# -------------------------------------------------------- r-forms on E(n)

def en_r_form(H, M, sign=-1):
    """The bimultiplicative extension of r(c,c) = sign, r(x_i, x_j) = M_ij, other generator pairs 0."""
    F = H.field
    gi = H.meta["gen_index"]
    gens = H.meta["gens"]
    nil = [k for k in gi if gens[k]["kind"] == "nilpotent"]
    table = {}
    for a in gi:
        for b in gi:
            if gens[a]["kind"] == "grouplike" and gens[b]["kind"] == "grouplike":
                table[(a, b)] = F(sign)
            elif gens[a]["kind"] == "nilpotent" and gens[b]["kind"] == "nilpotent":
                table[(a, b)] = F(M[nil.index(a)][nil.index(b)])
            else:
                table[(a, b)] = F.zero
    return extend_r_form(H, table)


def extend_r_form(H, table):
    """Extend generator values of r by r(ab,c) = r(a,c1) r(b,c2), r(a,bc) = r(a1,c) r(a2,b)."""
    words = H.meta["words"]
    gi = H.meta.get("gen_index")
    n = H.dim
    F = H.field
    gen_of = {v: k for k, v in gi.items()}
    memo = {}
    unit = next(i for i, w in enumerate(words) if not w)

    def prefix_vec(w):
        v = H.vec(unit)
        for g in w:
            v = H.mul(v, H.vec(gi[g]))
        return v

    def r(a, c):
        key = (a, c)
        if key in memo:
            return memo[key]
        wa, wc = words[a], words[c]
        if not wa:
            val = H.counit[c]
        elif not wc:
            val = H.counit[a]
        elif len(wa) > 1:
            pre = prefix_vec(wa[:-1])
            last = gi[wa[-1]]
            val = F.zero
            for c1, c2, k in H.comult[c]:
                s = F.zero
                for i, x in enumerate(pre):
                    if x:
                        s = s + x * r(i, c1)
                if s:
                    val = val + k * s * r(last, c2)
            # normalise the basis element's sign relative to its word
            coeff = _word_coeff(H, a, wa)
            val = val / coeff
        elif len(wc) > 1:
            pre = prefix_vec(wc[:-1])
            last = gi[wc[-1]]
            val = F.zero
            for a1, a2, k in H.comult[a]:
                x = r(a1, last)
                if x:
                    s = F.zero
                    for i, y in enumerate(pre):
                        if y:
                            s = s + y * r(a2, i)
                    val = val + k * x * s
            coeff = _word_coeff(H, c, wc)
            val = val / coeff
        else:
            val = table[(gen_of[a], gen_of[c])]
        memo[key] = val
        return val

    return BiForm(H, [[r(a, c) for c in range(n)] for a in range(n)])


def _word_coeff(H, i, w):
    gi = H.meta["gen_index"]
    v = H.vec(next(j for j, ww in enumerate(H.meta["words"]) if not ww))
    for g in w:
        v = H.mul(v, H.vec(gi[g]))
    return v[i]


# ------------------------------------------------------ monomial algebras

def qbinom(i, l, q):
    """Gaussian binomial (i choose l)_q by the recurrence (i,l) = (i-1,l-1) + q^l (i-1,l)."""
    if l < 0 or l > i:
        return q * 0
    one = q ** 0
    row = [one]
    for m in range(1, i + 1):
        new = [one] * (m + 1)
        for k in range(1, m):
            new[k] = row[k - 1] + q ** k * row[k]
        row = new
    return row[l]


class GroupDatum:
    """(G, g, chi, mu): g central, chi a character with chi(g) != 1."""

    def __init__(self, G, g, chi, mu=0, field=None):
        self.G = G
        self.g = G.index(g)
        self.field = field or _field_of_values(chi)
        F = self.field
        self.chi = tuple(F(c) for c in chi)
        self.mu = F(mu)
        n = G.order
        if len(self.chi) != n:
            raise InvalidDatum("character needs one value per group element")
        if not G.is_central(self.g):
            raise InvalidDatum("g must be central")
        for a in range(n):
            for b in range(n):
                if self.chi[G.table[a][b]] != self.chi[a] * self.chi[b]:
                    raise InvalidDatum("chi is not multiplicative")
        q = self.chi[self.g]
        if q == F.one:
            raise InvalidDatum("chi(g) must differ from 1")
        self.d = _mult_order(q, F)
        self.og = G.element_order(self.g)
        if self.mu and self.og == self.d:
            raise InvalidDatum("mu must vanish when o(g) = o(chi(g))")
        if self.mu and any(c ** self.d != F.one for c in self.chi):
            raise InvalidDatum("mu != 0 needs chi^d = 1")

    @property
    def q(self):
        return self.chi[self.g]

    @property
    def type_one(self):
        return (not self.mu) and self.d == self.og and all(c ** self.d == self.field.one for c in self.chi)


def _field_of_values(vals):
    from .scalars import field_of
    for v in vals:
        if not isinstance(v, int):
            return field_of(v)
    return QQ


def _mult_order(q, F):
    x, k = q, 1
    while x != F.one:
        x = x * q
        k += 1
        if k > 10000:
            raise InvalidDatum("chi(g) is not a root of unity")
    return k


def monomial_hopf(datum):
    """A(G): xh = chi(h) hx, x^d = mu(1 - g^d); basis h x^i, Delta(x) = 1(x)x + x(x)g."""
    G, F, d = datum.G, datum.field, datum.d
    n = G.order
    dim = n * d
    idx = lambda h, i: h * d + i  # noqa: E731
    gd = G.power(datum.g, d)
    mult = [[None] * dim for _ in range(dim)]
    for h in range(n):
        for i in range(d):
            for h2 in range(n):
                c = datum.chi[h2] ** i
                hh = G.table[h][h2]
                for j in range(d):
                    v = [F.zero] * dim
                    if i + j < d:
                        v[idx(hh, i + j)] = c
                    elif datum.mu:
                        v[idx(hh, i + j - d)] = v[idx(hh, i + j - d)] + c * datum.mu
                        t = G.table[hh][gd]
                        v[idx(t, i + j - d)] = v[idx(t, i + j - d)] - c * datum.mu
                    mult[idx(h, i)][idx(h2, j)] = v
    gens, words = G.generators()
    names, wlist = [], []
    for h in range(n):
        for i in range(d):
            hn = "" if h == G.identity else G.names[h]
            xn = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            names.append(hn + xn or "1")
            wlist.append([f"h{s}" for s in words[h]] + ["x"] * i)
    one = idx(G.identity, 0)
    gdelta, geps, gS, ginfo, gidx = {}, {}, {}, {}, {}
    for s in gens:
        key = f"h{s}"
        gdelta[key] = {(idx(s, 0), idx(s, 0)): F.one}
        geps[key] = 1
        v = [F.zero] * dim
        v[idx(G.inverse[s], 0)] = F.one
        gS[key] = v
        ginfo[key] = {"kind": "grouplike", "order": G.element_order(s), "element": s}
        gidx[key] = idx(s, 0)
    x = idx(G.identity, 1)
    gdelta["x"] = {(one, x): F.one, (x, idx(datum.g, 0)): F.one}
    geps["x"] = 0
    # S(x) = -x g^{-1} = -chi(g^{-1}) g^{-1} x
    ginv = G.inverse[datum.g]
    v = [F.zero] * dim
    v[idx(ginv, 1)] = -datum.chi[ginv]
    gS["x"] = v
    ginfo["x"] = {"kind": "nilpotent"}
    gidx["x"] = x
    meta = {"name": "A(G)", "datum": datum, "gens": ginfo, "gen_index": gidx}
    return hopf_from_words(F, names, mult, wlist, gdelta, geps, gS, meta)


def taft(N, q=None, field=None):
    """The Taft algebra H_{N,q} over Q(zeta_N) (q defaults to zeta_N)."""
    from .scalars import CyclotomicField
    if field is None:
        field = QQ if N == 2 else CyclotomicField(N)
    if q is None:
        q = -1 if N == 2 else field.zeta
    q = field(q)
    G = cyclic_group(N, "g")
    chi = [q ** k for k in range(N)]
    return monomial_hopf(GroupDatum(G, 1, chi, 0, field))


class CyclicDatum:
    """(d, n, N, alpha, q) with d | n | N, alpha | N/n, gcd(alpha, d) = 1, o(q) = Nd/(alpha n)."""

    def __init__(self, d, n, N, alpha, q, field=None):
        from math import gcd
        if min(d, n, N) <= 1 or n % d or N % n:
            raise InvalidDatum("need d | n | N with d, n, N > 1")
        if alpha <= 0 or (N // n) % alpha or gcd(alpha, d) != 1:
            raise InvalidDatum("need alpha | N/n and gcd(alpha, d) = 1")
        self.field = field or _field_of_values([q])
        self.q = self.field(q)
        want = N * d // (alpha * n)
        if (N * d) % (alpha * n) or _mult_order(self.q, self.field) != want:
            raise InvalidDatum(f"q must have order {want}")
        self.d, self.n, self.N, self.alpha = d, n, N, alpha

    def group_datum(self):
        G = cyclic_group(self.N, "z")
        chi = [self.q ** k for k in range(self.N)]
        return GroupDatum(G, self.N // self.n, chi, 0, self.field)

    def hopf(self):
        return monomial_hopf(self.group_datum())

    def expected_h2l(self):
        """Shape of the lazy cohomology group as a string."""
        from math import gcd
        d, n, N = self.d, self.n, self.N
        if d == n == N:
            return "k"
        if d == n < N and gcd(N // n, n) == 1 and self.alpha == N // n:
            return f"k*/(k*)^{N // n} x k"
        return f"k*/(k*)^{N // n}"


# ---------------------------------------- group cocycles and Galois objects

def trivial_group_cocycle(G, field=QQ):
    return [[field.one] * G.order for _ in range(G.order)]


def is_group_cocycle(sigma, G):
    n = G.order
    t = G.table
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if sigma[a][b] * sigma[t[a][b]][c] != sigma[b][c] * sigma[a][t[b][c]]:
                    return False
    return all(sigma[G.identity][a] == 1 and sigma[a][G.identity] == 1 for a in range(n))


def z2Lg_witness(sigma, G, g):
    """mu with mu(1) = mu(g) = 1 and sigma(g, h) = mu(h) / mu(gh), or None."""
    from .errors import NotACocycle
    if not is_group_cocycle(sigma, G):
        raise NotACocycle("sigma is not a normalized group 2-cocycle")
    g = G.index(g)
    n = G.order
    if any(sigma[g][h] != sigma[h][g] for h in range(n)):
        return None
    mu = [None] * n
    reps, _ = G.cosets(g)
    for r in reps:
        mu[r] = sigma[g][g] ** 0
        x = r
        for _ in range(G.element_order(g) - 1):
            gx = G.table[g][x]
            mu[gx] = mu[x] / sigma[g][x]
            x = gx
        if mu[x] / sigma[g][x] != mu[r]:
            return None
    return mu


def z2Lg_membership(sigma, G, g):
    return z2Lg_witness(sigma, G, g) is not None


def theta_map(sigma_quot, G, g):
    """Pull a 2-cochain on G/<g> back along the projection."""
    _, idx = G.quotient(G.index(g))
    n = G.order
    return [[sigma_quot[idx[a]][idx[b]] for b in range(n)] for a in range(n)]


def group_coboundary(mu, G):
    n = G.order
    return [[mu[a] * mu[b] / mu[G.table[a][b]] for b in range(n)] for a in range(n)]


def galois_monomial(datum, sigma=None, u=None, a=0):
    """The bicomodule algebra A^u_{sigma,a}(G) with basis T_h X^i."""
    from .errors import IncompatibleTriplet
    from .twist import ComoduleAlgebra

    G, F, d = datum.G, datum.field, datum.d
    n = G.order
    if sigma is None:
        sigma = trivial_group_cocycle(G, F)
    sigma = [[F(c) for c in r] for r in sigma]
    if u is None:
        u = list(range(n))
    u = list(u)
    a = F(a)
    if datum.mu:
        raise IncompatibleTriplet("Galois objects are built for mu = 0 data")
    if not is_group_cocycle(sigma, G):
        raise IncompatibleTriplet("sigma is not a normalized group 2-cocycle")
    if u[datum.g] != datum.g or sorted(u) != list(range(n)) or any(
            u[G.table[x][y]] != G.table[u[x]][u[y]] for x in range(n) for y in range(n)):
        raise IncompatibleTriplet("u must be an automorphism fixing g")
    g = datum.g
    for h in range(n):
        if datum.chi[u[h]] != datum.chi[h] * sigma[h][g] / sigma[g][h]:
            raise IncompatibleTriplet(f"compatibility fails at h={G.names[h]}")
    if a and not datum.type_one:
        raise IncompatibleTriplet("a must vanish for data not of type I")
    H = monomial_hopf(datum)
    dim = n * d
    idx = lambda h, i: h * d + i  # noqa: E731
    gd = G.power(g, d)
    mult = [[None] * dim for _ in range(dim)]
    for h in range(n):
        for i in range(d):
            for h2 in range(n):
                c = datum.chi[h2] ** i * sigma[h][h2]
                hh = G.table[h][h2]
                for j in range(d):
                    v = [F.zero] * dim
                    if i + j < d:
                        v[idx(hh, i + j)] = c
                    elif a:
                        v[idx(G.table[hh][gd], i + j - d)] = c * a * sigma[hh][gd]
                    mult[idx(h, i)][idx(h2, j)] = v
    names = ["T" + G.names[h] + ("" if i == 0 else "X" if i == 1 else f"X^{i}")
             for h in range(n) for i in range(d)]
    Z = ComoduleAlgebra(F, names, mult, [F.one if k == 0 and G.identity == 0 else
                                         (F.one if k == idx(G.identity, 0) else F.zero)
                                         for k in range(dim)],
                        meta={"name": "A^u_{sigma,a}"})

    def tmul(X, Y, left_alg, right_alg):
        out = {}
        for (p, q_), c in X.items():
            for (p2, q2), e in Y.items():
                for k, x in left_alg(p, p2):
                    for l, y in right_alg(q_, q2):
                        out[(k, l)] = out.get((k, l), 0) + c * e * x * y
        return {k: v for k, v in out.items() if v}

    one = idx(G.identity, 0)
    Xz = idx(G.identity, 1)
    rho_X = {(one, Xz): F.one, (Xz, idx(g, 0)): F.one}
    beta_X = {(one, Xz): F.one, (Xz, idx(g, 0)): F.one}
    # beta(X) = 1 (x) X + x (x) T_g: indices (A, Z)
    beta_X = {(one, Xz): F.one, (idx(G.identity, 1), idx(g, 0)): F.one}
    right, left = [], []
    for h in range(n):
        R = {(idx(h, 0), idx(h, 0)): F.one}
        L = {(idx(u[h], 0), idx(h, 0)): F.one}
        for i in range(d):
            right.append([(z, b, c) for (z, b), c in sorted(R.items())])
            left.append([(b, z, c) for (b, z), c in sorted(L.items())])
            R = tmul(R, rho_X, Z.mul_basis, H.mul_basis)
            L = tmul(L, beta_X, H.mul_basis, Z.mul_basis)
    Z = ComoduleAlgebra(F, names, mult, Z.unit, hopf=H, right=right, left=left, left_hopf=H,
                        meta={"name": "A^u_{sigma,a}", "datum": datum, "sigma": sigma, "u": u, "a": a})
    fails = Z.check()
    if fails:
        from .errors import AxiomFailure
        raise AxiomFailure(f"monomial Galois object fails axioms: {fails}")
    return Z


def monomial_phi(Z):
    """The right colinear bijection A(G) -> A^u_{sigma,a}(G), h x^i -> T_h X^i."""
    H = Z.hopf
    return LinMap([Z.vec(i) for i in range(H.dim)], H, Z)


def is_bicleft_monomial(Z):
    """Bicleftness by the group-cohomological criterion: sigma in Z^2_{L,g} and u = id."""
    datum = Z.meta["datum"]
    u = Z.meta["u"]
    return u == list(range(datum.G.order)) and z2Lg_membership(Z.meta["sigma"], datum.G, datum.g)


def taft_invariant(sigma, datum=None):
    """The scalar c with x^{.d} = c 1 in the twisted algebra _sigma A(G)."""
    from .twist import twisted_mult_left
    from .errors import InvalidDatum as _ID
    H = sigma.hopf
    datum = datum or H.meta["datum"]
    tw = twisted_mult_left(H, sigma)
    x = H.meta["gen_index"]["x"]
    v = H.vec(x)
    for _ in range(datum.d - 1):
        out = H.zero()
        for i, c in enumerate(v):
            if c:
                for k, y in enumerate(tw[i][x]):
                    if y:
                        out[k] = out[k] + c * y
        v = out
    c = H.eps(v)
    if v != [c * e for e in H.unit]:
        raise _ID("twisted power of x is not central-scalar")
    return c


# ------------------------------------------------------------ bosonization

class SuperSpace:
    """A group G acting on an odd space W of dim n through matrices rho(h),
    with w_i h = h sum_j rho(h)_ij w_j, and an involution g acting by -1."""

    def __init__(self, G, n, rho, g, field=QQ):
        self.G, self.n, self.field = G, n, field
        self.g = G.index(g)
        self.rho = [[[field(c) for c in row] for row in rho[h]] for h in range(G.order)]
        t = G.table
        for a in range(G.order):
            for b in range(G.order):
                if self.rho[t[a][b]] != linalg.mat_mul(self.rho[a], self.rho[b], field):
                    raise InvalidDatum("rho is not multiplicative")
        if G.table[self.g][self.g] != G.identity:
            raise InvalidDatum("g must be an involution")
        if self.rho[self.g] != [[-c for c in r] for r in linalg.identity(n, field)]:
            raise InvalidDatum("g must act as -1 on W")

    def is_invariant(self, r):
        for h in range(self.G.order):
            R = self.rho[h]
            if linalg.mat_mul(linalg.mat_mul(linalg.transpose(R), r, self.field), R, self.field) != r:
                return False
        return True


def superspace_en(n, field=QQ):
    """The data (Z2, W = k^n, g -> -1) whose bosonization is E(n)."""
    G = cyclic_group(2, "g")
    minus = [[-c for c in r] for r in linalg.identity(n, field)]
    return SuperSpace(G, n, [linalg.identity(n, field), minus], 1, field)


def _ext_mul(u, v):
    out = {}
    for P, a in u.items():
        for Q, b in v.items():
            s, R = _wedge(P, Q)
            if R is not None:
                out[R] = out.get(R, 0) + s * a * b
    return {k: c for k, c in out.items() if c}


def _ext_transform(P, M):
    """Image of w_P under w_i -> sum_j M_ij w_j."""
    out = {(): 1}
    for p in P:
        out = _ext_mul(out, {(j + 1,): c for j, c in enumerate(M[p - 1]) if c})
    return out


def _boson_basis(S):
    subs = _subsets(S.n)
    basis = [(h, P) for h in range(S.G.order) for P in subs]
    return basis, {b: i for i, b in enumerate(basis)}


def bosonization(S):
    """k[G] semidirect Lambda W as an ordinary Hopf algebra: Delta(w) = w (x) 1 + g (x) w."""
    G, F = S.G, S.field
    basis, index = _boson_basis(S)
    dim = len(basis)
    mult = [[None] * dim for _ in range(dim)]
    for (h, P), i in index.items():
        for (h2, Q), j in index.items():
            v = [F.zero] * dim
            moved = _ext_transform(P, S.rho[h2])
            for R, c in _ext_mul(moved, {Q: 1}).items():
                k = index[(G.table[h][h2], R)]
                v[k] = v[k] + F(c)
            mult[i][j] = v
    gens, words = G.generators()
    names = [("" if h == G.identity else G.names[h]) + "".join(f"w{p}" for p in P) or "1"
             for h, P in basis]
    wlist = [[f"h{s}" for s in words[h]] + [f"w{p}" for p in P] for h, P in basis]
    one = index[(G.identity, ())]
    gi = index[(S.g, ())]
    gdelta, geps, gS, ginfo, gidx = {}, {}, {}, {}, {}
    for s in gens:
        k = index[(s, ())]
        gdelta[f"h{s}"] = {(k, k): F.one}
        geps[f"h{s}"] = 1
        v = [F.zero] * dim
        v[index[(G.inverse[s], ())]] = F.one
        gS[f"h{s}"] = v
        ginfo[f"h{s}"] = {"kind": "grouplike", "order": G.element_order(s), "element": s}
        gidx[f"h{s}"] = k
    for p in range(1, S.n + 1):
        w = index[(G.identity, (p,))]
        gdelta[f"w{p}"] = {(w, one): F.one, (gi, w): F.one}
        geps[f"w{p}"] = 0
        v = [F.zero] * dim
        v[index[(S.g, (p,))]] = -F.one
        gS[f"w{p}"] = v
        ginfo[f"w{p}"] = {"kind": "nilpotent"}
        gidx[f"w{p}"] = w
    meta = {"name": "bosonization", "superspace": S, "gens": ginfo, "gen_index": gidx,
            "parity": [len(P) % 2 for _, P in basis]}
    return hopf_from_words(F, names, mult, wlist, gdelta, geps, gS, meta)


def _super_mul(A, X, Y):
    par = A.meta["parity"]
    out = {}
    for (a, b), c in X.items():
        for (a2, b2), d in Y.items():
            sign = -1 if par[b] and par[a2] else 1
            for k, x in A.mul_basis(a, a2):
                for l, y in A.mul_basis(b, b2):
                    out[(k, l)] = out.get((k, l), 0) + sign * c * d * x * y
    return {k: v for k, v in out.items() if v}


def exp_twist_element(A, r):
    """J = J_0 - (g (x) 1) J_1 for the super exponential e^r of r = sum r_ij w_i (x) w_j."""
    S = A.meta["superspace"]
    F = S.field
    gi = A.meta["gen_index"]
    n = S.n
    r = [[F(c) for c in row] for row in r]
    if any(r[i][j] != r[j][i] for i in range(n) for j in range(n)):
        raise NotSymmetric("r must be symmetric")
    if not S.is_invariant(r):
        raise NotInvariant("r is not G-invariant")
    R = {}
    for i in range(n):
        for j in range(n):
            if r[i][j]:
                R[(gi[f"w{i + 1}"], gi[f"w{j + 1}"])] = r[i][j]
    one = A.index(A.basis[0]) if False else next(i for i, w in enumerate(A.meta["words"]) if not w)
    total = {(one, one): F.one}
    term = {(one, one): F.one}
    k = 1
    while True:
        term = _super_mul(A, term, R)
        if not term:
            break
        term = {key: c / k for key, c in term.items()}
        for key, c in term.items():
            total[key] = total.get(key, 0) + c
        k += 1
    par = A.meta["parity"]
    g = A.index(A.basis[gi[next(key for key, v in A.meta["gens"].items()
                               if v["kind"] == "grouplike" and v["element"] == S.g)]])
    J = {}
    for (a, b), c in total.items():
        if not c:
            continue
        if par[a]:
            for kk, x in A.mul_basis(g, a):
                J[(kk, b)] = J.get((kk, b), 0) - c * x
        else:
            J[(a, b)] = J.get((a, b), 0) + c
    return {key: c for key, c in J.items() if c}


def exp_twist_cocycle(S, r, A=None):
    """The bi-form on A* given by evaluation on J; A is the bosonization of S."""
    A = A or bosonization(S)
    D = dual_hopf(A)
    F = S.field
    J = exp_twist_element(A, r)
    m = [[F.zero] * A.dim for _ in range(A.dim)]
    for (a, b), c in J.items():
        m[a][b] = c
    return BiForm(D, m)


def boson_to_en(A, E):
    """The Hopf isomorphism theta: bosonization of superspace_en(n) -> E(n), w_i -> c x_i."""
    gi = E.meta["gen_index"]
    c = next(k for k, v in E.meta["gens"].items() if v["kind"] == "grouplike")
    nil = [k for k in gi if E.meta["gens"][k]["kind"] == "nilpotent"]
    images = {}
    for key, info in A.meta["gens"].items():
        if info["kind"] == "grouplike":
            images[key] = E.vec(gi[c])
        else:
            p = int(key[1:])
            images[key] = E.mul(E.vec(gi[c]), E.vec(gi[nil[p - 1]]))
    return hom_from_words(A, E, images)


def transpose_map(f, src_dual, dst_dual):
    """f^*: dst^* -> src^* for f: src -> dst, in the dual bases."""
    rows = [[f.m[i][j] for i in range(len(f.m))] for j in range(len(f.m[0]))]
    return LinMap(rows, src_dual, dst_dual)


def en_exp_twist(E, r):
    """exp_twist_cocycle pulled back to E(n) along E(n) -> E(n)* -> A*."""
    n = len(r)
    S = superspace_en(n, E.field)
    A = bosonization(S)
    sigma = exp_twist_cocycle(S, r, A)
    theta = boson_to_en(A, E)
    kappa = transpose_map(theta, dual_hopf(E), sigma.hopf).compose(en_phi(E))
    m = [[sigma(list(kappa.m[a]), list(kappa.m[b])) for b in range(E.dim)] for a in range(E.dim)]
    return BiForm(E, m)


# exp_twist_cocycle(superspace_en(1), [[t]]) pulled back to H4 equals sweedler_sigma(EXP_TWIST_SCALE * t)
EXP_TWIST_SCALE = -2


# ------------------------------------------------- matched pairs and doubles

class MatchedPair:
    """(B, A, act_l, act_r): act_l[a][b] is the vector a -> b in B, act_r[a][b] is a <- b in A."""

    def __init__(self, B, A, act_l, act_r, check=True):
        if A.field != B.field:
            from .errors import FieldMismatch
            raise FieldMismatch("matched pair over different fields")
        self.A, self.B = A, B
        self.act_l = tuple(tuple(tuple(v) for v in r) for r in act_l)
        self.act_r = tuple(tuple(tuple(v) for v in r) for r in act_r)
        if check:
            fails = matched_pair_failures(self)
            if fails:
                raise NotMatched(f"matched pair identities fail: {fails}")

    @property
    def field(self):
        return self.A.field

    def left(self, a, b):
        """a -> b for basis indices."""
        return self.act_l[a][b]

    def right(self, a, b):
        return self.act_r[a][b]

    def is_trivial(self):
        A, B = self.A, self.B
        for a in range(A.dim):
            for b in range(B.dim):
                if list(self.act_l[a][b]) != [A.counit[a] * c for c in B.vec(b)]:
                    return False
                if list(self.act_r[a][b]) != [B.counit[b] * c for c in A.vec(a)]:
                    return False
        return True


def trivial_matched_pair(B, A):
    act_l = [[[A.counit[a] * c for c in B.vec(b)] for b in range(B.dim)] for a in range(A.dim)]
    act_r = [[[B.counit[b] * c for c in A.vec(a)] for b in range(B.dim)] for a in range(A.dim)]
    return MatchedPair(B, A, act_l, act_r, check=False)


def _lin_left(mp, av, bv):
    """Bilinear extension of a -> b to vectors."""
    B = mp.B
    out = B.zero()
    for a, x in enumerate(av):
        if x:
            for b, y in enumerate(bv):
                if y:
                    for k, z in enumerate(mp.act_l[a][b]):
                        if z:
                            out[k] = out[k] + x * y * z
    return out


def _lin_right(mp, av, bv):
    A = mp.A
    out = A.zero()
    for a, x in enumerate(av):
        if x:
            for b, y in enumerate(bv):
                if y:
                    for k, z in enumerate(mp.act_r[a][b]):
                        if z:
                            out[k] = out[k] + x * y * z
    return out


def _delta_vec_dict(H, v):
    out = {}
    for i, c in enumerate(v):
        if c:
            for j, k, d in H.comult[i]:
                out[(j, k)] = out.get((j, k), 0) + c * d
    return {k: x for k, x in out.items() if x}


def matched_pair_failures(mp):
    """First failures of the module-coalgebra and matched-pair identities."""
    A, B = mp.A, mp.B
    na, nb = A.dim, B.dim
    fails = {}

    def note(key, where):
        fails.setdefault(key, where)

    for a in range(na):
        for b in range(nb):
            L = list(mp.act_l[a][b])
            R = list(mp.act_r[a][b])
            # module coalgebra: Delta(a -> b) = (a1 -> b1) (x) (a2 -> b2)
            rhs = {}
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in B.comult[b]:
                    for k, x in enumerate(mp.act_l[a1][b1]):
                        if x:
                            for l, y in enumerate(mp.act_l[a2][b2]):
                                if y:
                                    rhs[(k, l)] = rhs.get((k, l), 0) + c * d * x * y
            if _delta_vec_dict(B, L) != {k: v for k, v in rhs.items() if v}:
                note("left_module_coalgebra", (A.basis[a], B.basis[b]))
            rhs = {}
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in B.comult[b]:
                    for k, x in enumerate(mp.act_r[a1][b1]):
                        if x:
                            for l, y in enumerate(mp.act_r[a2][b2]):
                                if y:
                                    rhs[(k, l)] = rhs.get((k, l), 0) + c * d * x * y
            if _delta_vec_dict(A, R) != {k: v for k, v in rhs.items() if v}:
                note("right_module_coalgebra", (A.basis[a], B.basis[b]))
            if B.eps(L) != A.counit[a] * B.counit[b]:
                note("left_counit", (A.basis[a], B.basis[b]))
            if A.eps(R) != A.counit[a] * B.counit[b]:
                note("right_counit", (A.basis[a], B.basis[b]))
    for b in range(nb):
        if _lin_left(mp, list(A.unit), B.vec(b)) != B.vec(b):
            note("left_unit_acts", (B.basis[b],))
        if _lin_right(mp, list(A.unit), B.vec(b)) != [B.counit[b] * c for c in A.unit]:
            note("one_right", (B.basis[b],))
    for a in range(na):
        if _lin_right(mp, A.vec(a), list(B.unit)) != A.vec(a):
            note("right_unit_acts", (A.basis[a],))
        if _lin_left(mp, A.vec(a), list(B.unit)) != [A.counit[a] * c for c in B.unit]:
            note("left_one", (A.basis[a],))
    for a in range(na):
        for a2 in range(na):
            for b in range(nb):
                # module laws
                if _lin_left(mp, list(A.mult[a][a2]), B.vec(b)) != _lin_left(mp, A.vec(a), list(mp.act_l[a2][b])):
                    note("left_module", (A.basis[a], A.basis[a2], B.basis[b]))
                # (aa') <- b = (a <- (a'1 -> b1)) (a'2 <- b2)
                lhs = _lin_right(mp, list(A.mult[a][a2]), B.vec(b))
                rhs = A.zero()
                for x1, x2, c in A.comult[a2]:
                    for b1, b2, d in B.comult[b]:
                        p = A.mul(_lin_right(mp, A.vec(a), list(mp.act_l[x1][b1])), list(mp.act_r[x2][b2]))
                        for k, v in enumerate(p):
                            rhs[k] = rhs[k] + c * d * v
                if lhs != rhs:
                    note("right_action_of_product", (A.basis[a], A.basis[a2], B.basis[b]))
    for a in range(na):
        for b in range(nb):
            for b2 in range(nb):
                if _lin_right(mp, A.vec(a), list(B.mult[b][b2])) != _lin_right(mp, list(mp.act_r[a][b]), B.vec(b2)):
                    note("right_module", (A.basis[a], B.basis[b], B.basis[b2]))
                # a -> (bb') = (a1 -> b1) ((a2 <- b2) -> b')
                lhs = _lin_left(mp, A.vec(a), list(B.mult[b][b2]))
                rhs = B.zero()
                for a1, a2, c in A.comult[a]:
                    for y1, y2, d in B.comult[b]:
                        p = B.mul(list(mp.act_l[a1][y1]), _lin_left(mp, list(mp.act_r[a2][y2]), B.vec(b2)))
                        for k, v in enumerate(p):
                            rhs[k] = rhs[k] + c * d * v
                if lhs != rhs:
                    note("left_action_of_product", (A.basis[a], B.basis[b], B.basis[b2]))
    for a in range(na):
        for b in range(nb):
            L, R = {}, {}
            for a1, a2, c in A.comult[a]:
                for b1, b2, d in B.comult[b]:
                    for k, x in enumerate(mp.act_r[a1][b1]):
                        if x:
                            for l, y in enumerate(mp.act_l[a2][b2]):
                                if y:
                                    L[(k, l)] = L.get((k, l), 0) + c * d * x * y
                    for k, x in enumerate(mp.act_r[a2][b2]):
                        if x:
                            for l, y in enumerate(mp.act_l[a1][b1]):
                                if y:
                                    R[(k, l)] = R.get((k, l), 0) + c * d * x * y
            if {k: v for k, v in L.items() if v} != {k: v for k, v in R.items() if v}:
                note("compatibility", (A.basis[a], B.basis[b]))
    return fails


def double_crossed(mp):
    """B bowtie A on B (x) A (B-major): (b (x) a)(b' (x) a') = b (a1 -> b'1) (x) (a2 <- b'2) a'."""
    fails = matched_pair_failures(mp)
    if fails:
        raise NotMatched(f"matched pair identities fail: {fails}")
    A, B = mp.A, mp.B
    F = A.field
    na, nb = A.dim, B.dim
    n = na * nb
    if mp.is_trivial():
        T = tensor_hopf(B, A)
        T.meta["matched_pair"] = mp
        return T
    mult = [[None] * n for _ in range(n)]
    for b in range(nb):
        for a in range(na):
            for b2 in range(nb):
                # precompute sum over a1,a2,b'1,b'2 of (a1 -> b'1) (x) (a2 <- b'2)
                mid = {}
                for a1, a2, c in A.comult[a]:
                    for y1, y2, d in B.comult[b2]:
                        for k, x in enumerate(mp.act_l[a1][y1]):
                            if x:
                                for l, y in enumerate(mp.act_r[a2][y2]):
                                    if y:
                                        mid[(k, l)] = mid.get((k, l), 0) + c * d * x * y
                for a2_ in range(na):
                    v = [F.zero] * n
                    for (k, l), c in mid.items():
                        if not c:
                            continue
                        for kk, x in B.mul_basis(b, k):
                            for ll, y in A.mul_basis(l, a2_):
                                v[kk * na + ll] = v[kk * na + ll] + c * x * y
                    mult[b * na + a][b2 * na + a2_] = v
    comult = []
    for b in range(nb):
        for a in range(na):
            comult.append([(b1 * na + a1, b2 * na + a2, c * d)
                           for b1, b2, c in B.comult[b] for a1, a2, d in A.comult[a]])
    unit = [x * y for x in B.unit for y in A.unit]
    counit = [x * y for x in B.counit for y in A.counit]
    proto = HopfAlgebra(F, [f"{x}⊗{y}" for x in B.basis for y in A.basis], mult, comult, unit,
                        counit, [[F.zero] * n for _ in range(n)])
    antipode = []
    for b in range(nb):
        for a in range(na):
            left = [x * y for x in B.unit for y in A.antipode[a]]
            right = [x * y for x in B.antipode[b] for y in A.unit]
            antipode.append(proto.mul(left, right))
    meta = {"name": f"{B.meta.get('name', 'B')}⋈{A.meta.get('name', 'A')}", "factors": (B, A),
            "matched_pair": mp}
    D = HopfAlgebra(F, proto.basis, mult, comult, unit, counit, antipode, meta)
    rep = verify_hopf_axioms(D)
    if not rep.ok:
        from .errors import AxiomFailure
        raise AxiomFailure(f"double crossed product fails axioms: {rep}")
    return D


def _s_inverse(A):
    return linalg.mat_inverse([list(r) for r in A.antipode], A.field)


def drinfeld_matched_pair(A):
    """The matched pair ((A*)^cop, A) with the coadjoint actions."""
    F = A.field
    n = A.dim
    B = op_cop(dual_hopf(A), False, True)
    Sinv = _s_inverse(A)
    # (a -> f)(y) = f(S^{-1}(a2) y a1)
    act_l = []
    for a in range(n):
        row = []
        for f in range(n):
            v = [F.zero] * n
            for a1, a2, c in A.comult[a]:
                for y in range(n):
                    w = A.mul(A.mul(list(Sinv[a2]), A.vec(y)), A.vec(a1))
                    if w[f]:
                        v[y] = v[y] + c * w[f]
            row.append(v)
        act_l.append(row)
    # a <- f = f(S^{-1}(a3) a1) a2
    act_r = []
    for a in range(n):
        row = []
        for f in range(n):
            v = [F.zero] * n
            for a1, a2, a3, c in A.delta2(a):
                w = A.mul(list(Sinv[a3]), A.vec(a1))
                if w[f]:
                    v[a2] = v[a2] + c * w[f]
            row.append(v)
        act_r.append(row)
    return MatchedPair(B, A, act_l, act_r)


def drinfeld_double(A):
    D = double_crossed(drinfeld_matched_pair(A))
    D.meta["name"] = f"D({A.meta.get('name', 'A')})"
    return D


def subalgebra_inclusions(D):
    """Check B -> D, b -> b (x) 1 and A -> D, a -> 1 (x) a are Hopf maps."""
    B, A = D.meta["factors"]
    iB = LinMap([[x * y for x in B.vec(b) for y in A.unit] for b in range(B.dim)], B, D)
    iA = LinMap([[x * y for x in B.unit for y in A.vec(a)] for a in range(A.dim)], A, D)
    return is_hopf_morphism(iB, B, D), is_hopf_morphism(iA, A, D)


def _subgroup(G, elems):
    elems = list(elems)
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[G.table[a][b]] for b in elems] for a in elems]
    return FiniteGroup(table, [G.names[e] for e in elems])


def group_matched_pair(G, B_elems, A_elems, field=QQ):
    """Matched pair of group algebras from an exact factorization G = B A: a b = (a -> b)(a <- b)."""
    B_elems, A_elems = list(B_elems), list(A_elems)
    fact = {}
    for i, b in enumerate(B_elems):
        for j, a in enumerate(A_elems):
            fact[G.table[b][a]] = (i, j)
    if len(fact) != G.order or len(B_elems) * len(A_elems) != G.order:
        raise InvalidDatum("G is not the exact product of the two subsets")
    GB, GA = _subgroup(G, B_elems), _subgroup(G, A_elems)
    kB, kA = group_algebra(GB, field), group_algebra(GA, field)
    nb, na = len(B_elems), len(A_elems)
    act_l = [[None] * nb for _ in range(na)]
    act_r = [[None] * nb for _ in range(na)]
    for j, a in enumerate(A_elems):
        for i, b in enumerate(B_elems):
            bi, aj = fact[G.table[a][b]]
            act_l[j][i] = [field.one if k == bi else field.zero for k in range(nb)]
            act_r[j][i] = [field.one if k == aj else field.zero for k in range(na)]
    return MatchedPair(kB, kA, act_l, act_r)


def s3_matched_pair(field=QQ):
    """S3 = Z3 . Z2 with Z3 = <r> acted on by conjugation."""
    from .groups import group_from_elements
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    names = ["1", "r", "r^2", "s", "sr", "sr^2"]

    def op(p, q):
        return tuple(p[q[i]] for i in range(3))
    G = group_from_elements(perms, op, names)
    r = perms.index((1, 2, 0))
    B = [G.identity, r, G.table[r][r]]
    s = perms.index((1, 0, 2))
    return group_matched_pair(G, B, [G.identity, s], field)
