"""Projective representations: algebra maps A(sigma) -> End(V), their tensor
products, duals, evaluation maps and basic morphisms."""
from . import linalg
from .core import conv_inverse, convolve, unit_biform
from .errors import AxiomFailure, NotLazy, ShapeError
from .lazy import is_lazy2, is_left_cocycle
from .twist import gen_antipode, twisted_mult_left


class ProjRep:
    """(sigma, V, pi) with pi[a] the matrix of the basis element a acting on column vectors."""

    def __init__(self, sigma, dim, pi):
        H = sigma.hopf
        if len(pi) != H.dim or any(len(M) != dim or any(len(r) != dim for r in M) for M in pi):
            raise ShapeError("pi needs one dim x dim matrix per basis element")
        self.sigma = sigma
        self.dim = dim
        self.pi = tuple(tuple(tuple(r) for r in M) for M in pi)

    @property
    def hopf(self):
        return self.sigma.hopf

    def act(self, v):
        """pi applied to an element of A given as a coefficient vector."""
        F = self.hopf.field
        out = [[F.zero] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(v):
            if c:
                for r in range(self.dim):
                    row = self.pi[i][r]
                    for s in range(self.dim):
                        if row[s]:
                            out[r][s] = out[r][s] + c * row[s]
        return out

    def __repr__(self):
        return f"<ProjRep dim={self.dim} over {self.hopf.meta.get('name', 'H')}>"


def projrep_failures(X):
    """First failing pair of pi(a ._sigma b) = pi(a) pi(b), and pi(1) = Id."""
    H = X.hopf
    F = H.field
    fails = {}
    if X.act(list(H.unit)) != linalg.identity(X.dim, F):
        fails["unit"] = ()
    tw = twisted_mult_left(H, X.sigma)
    for a in range(H.dim):
        for b in range(H.dim):
            lhs = X.act(tw[a][b])
            rhs = linalg.mat_mul([list(r) for r in X.pi[a]], [list(r) for r in X.pi[b]], F)
            if lhs != rhs:
                fails["multiplicative"] = (H.basis[a], H.basis[b])
                return fails
    return fails


def check_projrep(X):
    return not projrep_failures(X)


def _require_lazy(sigma):
    if not is_lazy2(sigma):
        raise NotLazy("projective representations need a lazy cocycle")
    if not is_left_cocycle(sigma):
        raise AxiomFailure("sigma is not a 2-cocycle")


def regular_projrep(H, sigma):
    """Left multiplication of A(sigma) on itself."""
    _require_lazy(sigma)
    tw = twisted_mult_left(H, sigma)
    n = H.dim
    pi = [[[tw[a][b][i] for b in range(n)] for i in range(n)] for a in range(n)]
    return ProjRep(sigma, n, pi)


def tensor_projrep(X, Y):
    """(sigma * omega, V (x) W, (pi_V (x) pi_W) o Delta)."""
    H = X.hopf
    F = H.field
    sigma = convolve(X.sigma, Y.sigma)
    d = X.dim * Y.dim
    pi = []
    for a in range(H.dim):
        M = [[F.zero] * d for _ in range(d)]
        for a1, a2, c in H.comult[a]:
            K = linalg.kron(X.pi[a1], Y.pi[a2], F)
            for i in range(d):
                for j in range(d):
                    if K[i][j]:
                        M[i][j] = M[i][j] + c * K[i][j]
        pi.append(M)
    Z = ProjRep(sigma, d, pi)
    fails = projrep_failures(Z)
    if fails:
        raise AxiomFailure(f"tensor product is not a projective representation: {fails}")
    return Z


def dual_projrep(X):
    """(sigma^-1, V*, transpose of pi_V o phi_{sigma^-1})."""
    H = X.hopf
    sinv = conv_inverse(X.sigma)
    phi = gen_antipode(H, sinv)
    pi = [linalg.transpose(X.act(list(phi.m[a]))) for a in range(H.dim)]
    Y = ProjRep(sinv, X.dim, pi)
    fails = projrep_failures(Y)
    if fails:
        raise AxiomFailure(f"dual is not a projective representation: {fails}")
    return Y


def evaluation(X):
    """e: V* (x) V -> k as a 1 x dim^2 matrix."""
    F = X.hopf.field
    n = X.dim
    return [[F.one if i == j else F.zero for i in range(n) for j in range(n)]]


def coevaluation(X):
    """delta: k -> V (x) V* as a dim^2 x 1 matrix."""
    F = X.hopf.field
    n = X.dim
    return [[F.one if i == j else F.zero] for i in range(n) for j in range(n)]


def unit_rep(H):
    """The trivial projective representation (eps (x) eps, k, eps)."""
    return ProjRep(unit_biform(H), 1, [[[c]] for c in H.counit])


def is_basic_morphism(f, X, Y, mu):
    """f o pi_V(a) = mu(a1) pi_W(a2) o f for every basis element a; f is dim W x dim V."""
    H = X.hopf
    F = H.field
    for a in range(H.dim):
        lhs = linalg.mat_mul(f, [list(r) for r in X.pi[a]], F)
        acc = [F.zero] * H.dim
        for a1, a2, c in H.comult[a]:
            x = mu.v[a1]
            if x:
                acc[a2] = acc[a2] + c * x
        rhs = linalg.mat_mul(Y.act(acc), f, F)
        if lhs != rhs:
            return False
    return True


def evaluation_identities(X):
    """Check e and delta are morphisms X* (x) X -> 1 and 1 -> X (x) X* (with mu = eps)."""
    H = X.hopf
    D = dual_projrep(X)
    L = tensor_projrep(D, X)
    R = tensor_projrep(X, D)
    one = unit_rep(H)
    eps = H.counit_form()
    return (is_basic_morphism(evaluation(X), L, one, eps),
            is_basic_morphism(coevaluation(X), one, R, eps))


def basic_morphism_space(X, Y, mu):
    """Basis of {f : f o pi_V(a) = mu(a1) pi_W(a2) o f}, each f a dim W x dim V matrix."""
    H = X.hopf
    F = H.field
    n, m = X.dim, Y.dim
    rows = []
    for a in range(H.dim):
        acc = [F.zero] * H.dim
        for a1, a2, c in H.comult[a]:
            x = mu.v[a1]
            if x:
                acc[a2] = acc[a2] + c * x
        P = Y.act(acc)
        V = X.pi[a]
        # (f V - P f)[i][j] = sum_k f[i][k] V[k][j] - sum_k P[i][k] f[k][j]
        for i in range(m):
            for j in range(n):
                r = {}
                for k in range(n):
                    if V[k][j]:
                        r[i * n + k] = r.get(i * n + k, F.zero) + V[k][j]
                for k in range(m):
                    if P[i][k]:
                        r[k * n + j] = r.get(k * n + j, F.zero) - P[i][k]
                r = {c: v for c, v in r.items() if v}
                if r:
                    rows.append(r)
    K = linalg.kernel(rows, n * m, F)
    return [[list(v[i * n:(i + 1) * n]) for i in range(m)] for v in K]
