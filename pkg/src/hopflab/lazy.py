"""Laziness and cocycle predicates, the coboundary operator, ad and the action of
Hopf automorphisms on bilinear forms."""
from enum import Enum

from .core import (
    BiForm,
    LinForm,
    LinMap,
    conv_inverse,
    convolve,
    is_hopf_morphism,
    is_invertible,
    unit_biform,
)
from .errors import IncompleteWitnessSet, NotInvertible
from . import linalg

__all__ = [
    "is_lazy1", "is_lazy2", "is_left_cocycle", "is_right_cocycle", "is_absolutely_central",
    "is_normalized", "is_reg2", "cocycle_report", "coboundary", "ad_map", "is_hopf_morphism",
    "is_almost_lazy", "classify_cointernal", "CoInternal", "pullback_action",
    "verify_coboundary_witness", "same_class_witness", "lazy_forms_basis", "coinner_map",
    "AlgMapSet",
]


def _vec_add(out, v, c):
    for k, x in v:
        out[k] = out[k] + c * x


# ------------------------------------------------------------- laziness

def lazy1_failure(mu):
    H = mu.hopf
    for a in range(H.dim):
        L, R = H.zero(), H.zero()
        for j, k, c in H.comult[a]:
            if mu.v[j]:
                L[k] = L[k] + c * mu.v[j]
            if mu.v[k]:
                R[j] = R[j] + c * mu.v[k]
        if L != R:
            return (H.basis[a],)
    return None


def is_lazy1(mu, H=None):
    """mu(a1) a2 == a1 mu(a2) for every basis element a."""
    return lazy1_failure(mu) is None


def lazy2_failure(sigma):
    H = sigma.hopf
    n = H.dim
    s = sigma.m
    for a in range(n):
        for b in range(n):
            L, R = H.zero(), H.zero()
            for a1, a2, c in H.comult[a]:
                for b1, b2, d in H.comult[b]:
                    x = s[a1][b1]
                    if x:
                        _vec_add(L, H.mul_basis(a2, b2), c * d * x)
                    y = s[a2][b2]
                    if y:
                        _vec_add(R, H.mul_basis(a1, b1), c * d * y)
            if L != R:
                return (H.basis[a], H.basis[b])
    return None


def is_lazy2(sigma, H=None):
    """sigma(a1,b1) a2 b2 == sigma(a2,b2) a1 b1 on all basis pairs."""
    return lazy2_failure(sigma) is None


def absolutely_central_failure(sigma):
    H = sigma.hopf
    n = H.dim
    s = sigma.m
    for a in range(n):
        for b in range(n):
            L, R = {}, {}
            for a1, a2, c in H.comult[a]:
                for b1, b2, d in H.comult[b]:
                    x = s[a1][b1]
                    if x:
                        L[(a2, b2)] = L.get((a2, b2), 0) + c * d * x
                    y = s[a2][b2]
                    if y:
                        R[(a1, b1)] = R.get((a1, b1), 0) + c * d * y
            L = {k: v for k, v in L.items() if v}
            R = {k: v for k, v in R.items() if v}
            if L != R:
                return (H.basis[a], H.basis[b])
    return None


def is_absolutely_central(sigma, H=None):
    return absolutely_central_failure(sigma) is None


# -------------------------------------------------------------- cocycles

def _sigma_after_mult_left(sigma):
    """P[i][j][c] = sigma(b_i b_j, b_c)."""
    H = sigma.hopf
    n = H.dim
    F = H.field
    P = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [F.zero] * n
            for k, x in H.mul_basis(i, j):
                sk = sigma.m[k]
                for c in range(n):
                    if sk[c]:
                        v[c] = v[c] + x * sk[c]
            row.append(v)
        P.append(row)
    return P


def _sigma_after_mult_right(sigma):
    """Q[a][i][j] = sigma(b_a, b_i b_j)."""
    H = sigma.hopf
    n = H.dim
    F = H.field
    Q = []
    for a in range(n):
        sa = sigma.m[a]
        rows = []
        for i in range(n):
            v = [F.zero] * n
            for j in range(n):
                s = F.zero
                for k, x in H.mul_basis(i, j):
                    if sa[k]:
                        s = s + x * sa[k]
                v[j] = s
            rows.append(v)
        Q.append(rows)
    return Q


def left_cocycle_failure(sigma):
    """sigma(a1,b1) sigma(a2 b2, c) == sigma(b1,c1) sigma(a, b2 c2)."""
    H = sigma.hopf
    n = H.dim
    F = H.field
    s = sigma.m
    P = _sigma_after_mult_left(sigma)
    Q = _sigma_after_mult_right(sigma)
    cm = H.comult
    for a in range(n):
        Qa = Q[a]
        for b in range(n):
            L = [F.zero] * n
            for a1, a2, c in cm[a]:
                for b1, b2, d in cm[b]:
                    x = s[a1][b1]
                    if x:
                        w = c * d * x
                        Pv = P[a2][b2]
                        for t in range(n):
                            if Pv[t]:
                                L[t] = L[t] + w * Pv[t]
            for cc in range(n):
                R = F.zero
                for b1, b2, d in cm[b]:
                    sb = s[b1]
                    Qb = Qa[b2]
                    for c1, c2, e in cm[cc]:
                        x = sb[c1]
                        if x:
                            y = Qb[c2]
                            if y:
                                R = R + d * e * x * y
                if L[cc] != R:
                    return (H.basis[a], H.basis[b], H.basis[cc])
    return None


def right_cocycle_failure(sigma):
    """sigma(a1 b1, c) sigma(a2, b2) == sigma(a, b1 c1) sigma(b2, c2)."""
    H = sigma.hopf
    n = H.dim
    F = H.field
    s = sigma.m
    P = _sigma_after_mult_left(sigma)
    Q = _sigma_after_mult_right(sigma)
    cm = H.comult
    for a in range(n):
        Qa = Q[a]
        for b in range(n):
            L = [F.zero] * n
            for a1, a2, c in cm[a]:
                for b1, b2, d in cm[b]:
                    y = s[a2][b2]
                    if y:
                        w = c * d * y
                        Pv = P[a1][b1]
                        for t in range(n):
                            if Pv[t]:
                                L[t] = L[t] + w * Pv[t]
            for cc in range(n):
                R = F.zero
                for b1, b2, d in cm[b]:
                    Qb = Qa[b1]
                    sb = s[b2]
                    for c1, c2, e in cm[cc]:
                        x = Qb[c1]
                        if x:
                            y = sb[c2]
                            if y:
                                R = R + d * e * x * y
                if L[cc] != R:
                    return (H.basis[a], H.basis[b], H.basis[cc])
    return None


def is_left_cocycle(sigma, H=None):
    return left_cocycle_failure(sigma) is None


def is_right_cocycle(sigma, H=None):
    return right_cocycle_failure(sigma) is None


def normalization_failure(sigma):
    H = sigma.hopf
    u = list(H.unit)
    for a in range(H.dim):
        b = H.vec(a)
        if sigma(u, b) != H.counit[a]:
            return ("1", H.basis[a])
        if sigma(b, u) != H.counit[a]:
            return (H.basis[a], "1")
    return None


def is_normalized(sigma):
    return normalization_failure(sigma) is None


def is_reg2(sigma):
    return is_normalized(sigma) and is_invertible(sigma)


class CocyclePredicateReport:
    FIELDS = ("is_reg", "is_lazy", "is_left_cocycle", "is_right_cocycle", "is_absolutely_central")

    def __init__(self, failures):
        self.failures = failures

    def __getattr__(self, name):
        if name in CocyclePredicateReport.FIELDS:
            return self.failures[name] is None
        raise AttributeError(name)

    def as_dict(self):
        return {k: (True if v is None else {"fails_at": list(v)}) for k, v in self.failures.items()}

    def __repr__(self):
        return "CocyclePredicateReport(" + ", ".join(
            f"{k}={'yes' if v is None else v}" for k, v in self.failures.items()) + ")"


def cocycle_report(sigma):
    reg = normalization_failure(sigma)
    if reg is None and not is_invertible(sigma):
        reg = ("not invertible",)
    rep = CocyclePredicateReport({
        "is_reg": reg,
        "is_lazy": lazy2_failure(sigma),
        "is_left_cocycle": left_cocycle_failure(sigma),
        "is_right_cocycle": right_cocycle_failure(sigma),
        "is_absolutely_central": absolutely_central_failure(sigma),
    })
    if rep.is_lazy and rep.is_left_cocycle:
        assert rep.is_right_cocycle, "lazy left cocycle that is not a right cocycle"
    return rep


# ---------------------------------------------------------- coboundaries

def coboundary(mu, H=None):
    """d(mu)(a, b) = mu(a1) mu(b1) mu^{-1}(a2 b2)."""
    H = mu.hopf
    n = H.dim
    F = H.field
    minv = conv_inverse(mu)
    P = [[minv(H.mult[i][j]) for j in range(n)] for i in range(n)]
    out = [[F.zero] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            s = F.zero
            for a1, a2, c in H.comult[a]:
                x = mu.v[a1]
                if not x:
                    continue
                for b1, b2, d in H.comult[b]:
                    y = mu.v[b1]
                    if y:
                        z = P[a2][b2]
                        if z:
                            s = s + c * d * x * y * z
            out[a][b] = s
    return BiForm(H, out)


def ad_map(gamma, H=None):
    """ad(gamma)(a) = gamma^{-1}(a1) a2 gamma(a3)."""
    H = gamma.hopf
    ginv = conv_inverse(gamma)
    rows = []
    for a in range(H.dim):
        r = H.zero()
        for j, k, l, c in H.delta2(a):
            x = ginv.v[j]
            y = gamma.v[l]
            if x and y:
                r[k] = r[k] + c * x * y
        rows.append(r)
    return LinMap(rows, H, H)


def coinner_map(phi):
    """(phi o S) * id * phi: a -> phi(S a1) a2 phi(a3)."""
    H = phi.hopf
    phiS = [phi(list(H.antipode[i])) for i in range(H.dim)]
    rows = []
    for a in range(H.dim):
        r = H.zero()
        for j, k, l, c in H.delta2(a):
            x = phiS[j]
            y = phi.v[l]
            if x and y:
                r[k] = r[k] + c * x * y
        rows.append(r)
    return LinMap(rows, H, H)


def is_almost_lazy(gamma, H=None):
    """gamma is almost lazy iff d(gamma) is lazy iff ad(gamma) is a Hopf automorphism."""
    H = gamma.hopf
    if not is_invertible(gamma):
        return False
    a = is_lazy2(coboundary(gamma))
    b = is_hopf_morphism(ad_map(gamma), H, H)
    assert a == b, "almost-lazy criteria disagree"
    return a


class CoInternal(Enum):
    CoInner = "CoInner"
    CoInternalOnly = "CoInternalOnly"
    NotCoInternal = "NotCoInternal-certificate-absent"


class AlgMapSet(list):
    """List of algebra maps A -> k with a completeness certificate flag."""

    def __init__(self, items=(), certified=False, how=""):
        super().__init__(items)
        self.certified = certified
        self.how = how


def classify_cointernal(f, H, alg_maps, witnesses=()):
    """CoInner if f = (phi o S) * id * phi for some phi in a certified-complete
    list of algebra maps; CoInternalOnly if f = ad(gamma) for a supplied almost
    lazy gamma; otherwise no certificate."""
    if not getattr(alg_maps, "certified", False):
        raise IncompleteWitnessSet("the list of algebra maps is not certified complete")
    for phi in alg_maps:
        if coinner_map(phi) == f:
            return CoInternal.CoInner
    for g in witnesses:
        try:
            if ad_map(g) == f and is_almost_lazy(g):
                return CoInternal.CoInternalOnly
        except NotInvertible:
            continue
    return CoInternal.NotCoInternal


def pullback_action(sigma, alpha):
    """(sigma <- alpha)(a, b) = sigma(alpha(a), alpha(b))."""
    H = sigma.hopf
    A = [list(r) for r in alpha.m]
    tmp = linalg.mat_mul(A, [list(r) for r in sigma.m], H.field)
    out = linalg.mat_mul(tmp, linalg.transpose(A), H.field)
    return BiForm(H, out)


def verify_coboundary_witness(sigma, mu):
    """True iff mu is lazy and sigma == d(mu)."""
    return is_lazy1(mu) and coboundary(mu) == sigma


def same_class_witness(sigma, tau, mu):
    """True iff mu is lazy and tau == sigma * d(mu)."""
    return is_lazy1(mu) and convolve(sigma, coboundary(mu)) == tau


def lazy_forms_basis(H):
    """Basis of the space of lazy linear forms (a linear condition)."""
    n = H.dim
    rows = []
    for a in range(n):
        eq = [dict() for _ in range(n)]
        for j, k, c in H.comult[a]:
            eq[k][j] = eq[k].get(j, 0) + c
            eq[j][k] = eq[j].get(k, 0) - c
        rows.extend(r for r in eq if any(r.values()))
    return linalg.kernel(rows, n, H.field)


def lazy_biforms_affine(H):
    """(particular, kernel) for normalized lazy bilinear forms (entry i*n+j)."""
    n = H.dim
    F = H.field
    rows, rhs = [], []
    u = list(H.unit)
    for a in range(n):
        r1, r2 = {}, {}
        for i, x in enumerate(u):
            if x:
                r1[i * n + a] = r1.get(i * n + a, 0) + x
                r2[a * n + i] = r2.get(a * n + i, 0) + x
        rows += [r1, r2]
        rhs += [H.counit[a], H.counit[a]]
    for a in range(n):
        for b in range(n):
            eq = [dict() for _ in range(n)]
            for a1, a2, c in H.comult[a]:
                for b1, b2, d in H.comult[b]:
                    for k, x in H.mul_basis(a2, b2):
                        key = a1 * n + b1
                        eq[k][key] = eq[k].get(key, 0) + c * d * x
                    for k, x in H.mul_basis(a1, b1):
                        key = a2 * n + b2
                        eq[k][key] = eq[k].get(key, 0) - c * d * x
            for r in eq:
                r = {k: v for k, v in r.items() if v}
                if r:
                    rows.append(r)
                    rhs.append(F.zero)
    return linalg.affine_solutions(rows, rhs, n * n, F)


def alg_map_failure(mu):
    H = mu.hopf
    if mu(list(H.unit)) != 1:
        return ("1",)
    for i in range(H.dim):
        for j in range(H.dim):
            if mu(H.mult[i][j]) != mu.v[i] * mu.v[j]:
                return (H.basis[i], H.basis[j])
    return None


def is_algebra_map(mu):
    return alg_map_failure(mu) is None


def unit_coboundary(H):
    return unit_biform(H)


def lazy_algebra_maps(alg_maps):
    """H^1_L: the lazy members of a list of algebra maps."""
    return [phi for phi in alg_maps if is_lazy1(phi)]


def form_from_vector(H, v):
    return LinForm(H, v)
