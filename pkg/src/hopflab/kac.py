"""Central pairings, the maps Lambda and Sigma of the Kac-Schauenburg sequence,
class normalization on double crossed products, and special Hopf maps."""
from .core import (
    BiForm,
    LinForm,
    LinMap,
    conv_inverse,
    convolve,
    dual_hopf,
    is_hopf_morphism,
    op_cop,
    tensor_hopf,
)
from .errors import NontrivialActions, NotAHopfMap, NotInvertible, NotLazyAlgebraMap
from .families import double_crossed, trivial_matched_pair
from .lazy import coboundary, is_algebra_map, is_lazy1, is_lazy2, is_left_cocycle


def bowtie(mp):
    """The double crossed product of mp, built once."""
    D = getattr(mp, "_bowtie", None)
    if D is None:
        D = double_crossed(mp)
        mp._bowtie = D
    return D


class CentralPairing:
    """A bi-form beta(b, a) on B (x) A, with m[b][a] its values."""

    def __init__(self, mp, matrix):
        self.mp = mp
        F = mp.field
        self.m = tuple(tuple(F(c) for c in r) for r in matrix)
        if len(self.m) != mp.B.dim or any(len(r) != mp.A.dim for r in self.m):
            from .errors import ShapeError
            raise ShapeError("pairing matrix must be dim B x dim A")

    def __call__(self, b, a):
        B, A = self.mp.B, self.mp.A
        bv = B.vec(b) if isinstance(b, (int, str)) else b
        av = A.vec(a) if isinstance(a, (int, str)) else a
        s = self.mp.field.zero
        for i, x in enumerate(bv):
            if x:
                for j, y in enumerate(av):
                    if y and self.m[i][j]:
                        s = s + x * y * self.m[i][j]
        return s

    def as_form(self):
        """The pairing as a linear form on the tensor coalgebra B (x) A."""
        T = _tensor_carrier(self.mp)
        return LinForm(T, [c for r in self.m for c in r])

    @classmethod
    def from_form(cls, mp, f):
        na = mp.A.dim
        return cls(mp, [list(f.v[b * na:(b + 1) * na]) for b in range(mp.B.dim)])

    def __mul__(self, other):
        return CentralPairing.from_form(self.mp, convolve(self.as_form(), other.as_form()))

    def inverse(self):
        return CentralPairing.from_form(self.mp, conv_inverse(self.as_form()))

    def __eq__(self, other):
        return isinstance(other, CentralPairing) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        B, A = self.mp.B, self.mp.A
        nz = [f"({B.basis[i]},{A.basis[j]}):{self.mp.field.fmt(c)}"
              for i, r in enumerate(self.m) for j, c in enumerate(r) if c]
        return "CentralPairing(" + ", ".join(nz) + ")"


def _tensor_carrier(mp):
    T = getattr(mp, "_tensor", None)
    if T is None:
        T = tensor_hopf(mp.B, mp.A)
        mp._tensor = T
    return T


def trivial_pairing(mp):
    B, A = mp.B, mp.A
    return CentralPairing(mp, [[x * y for y in A.counit] for x in B.counit])


def central_pairing_failures(beta, mp=None):
    """First failing tuple for each condition of a central pairing."""
    mp = mp or beta.mp
    if not isinstance(beta, CentralPairing):
        beta = CentralPairing(mp, beta)
    A, B = mp.A, mp.B
    na, nb = A.dim, B.dim
    m = beta.m
    F = mp.field
    fails = {}
    try:
        conv_inverse(beta.as_form())
    except NotInvertible:
        fails["invertible"] = ()
    for a in range(na):
        if m[_unit_index(B)][a] != A.counit[a]:
            fails["unit_B"] = (A.basis[a],)
            break
    for b in range(nb):
        if m[b][_unit_index(A)] != B.counit[b]:
            fails["unit_A"] = (B.basis[b],)
            break
    # beta(bb', a) = beta(b1, a1) beta(b', a2 <- b2)
    for b in range(nb):
        for b2 in range(nb):
            for a in range(na):
                lhs = beta(list(B.mult[b][b2]), A.vec(a))
                rhs = F.zero
                for x1, x2, c in B.comult[b]:
                    for a1, a2, d in A.comult[a]:
                        v = m[x1][a1]
                        if v:
                            rhs = rhs + c * d * v * beta(B.vec(b2), list(mp.act_r[a2][x2]))
                if lhs != rhs:
                    fails["mult_B"] = (B.basis[b], B.basis[b2], A.basis[a])
                    break
            if "mult_B" in fails:
                break
        if "mult_B" in fails:
            break
    # beta(b, aa') = beta(b1, a'1) beta(a'2 -> b2, a)
    for b in range(nb):
        for a in range(na):
            for a2 in range(na):
                lhs = beta(B.vec(b), list(A.mult[a][a2]))
                rhs = F.zero
                for y1, y2, c in A.comult[a2]:
                    for b1, b2, d in B.comult[b]:
                        v = m[b1][y1]
                        if v:
                            rhs = rhs + c * d * v * beta(list(mp.act_l[y2][b2]), A.vec(a))
                if lhs != rhs:
                    fails["mult_A"] = (B.basis[b], A.basis[a], A.basis[a2])
                    break
            if "mult_A" in fails:
                break
        if "mult_A" in fails:
            break
    # beta(b2, a2) a1 <- b1 = beta(b1, a1) a2 <- b2   and the -> analogue
    for b in range(nb):
        for a in range(na):
            L, R = A.zero(), A.zero()
            Lb, Rb = B.zero(), B.zero()
            for b1, b2, c in B.comult[b]:
                for a1, a2, d in A.comult[a]:
                    v = m[b2][a2]
                    if v:
                        for k, x in enumerate(mp.act_r[a1][b1]):
                            L[k] = L[k] + c * d * v * x
                        for k, x in enumerate(mp.act_l[a1][b1]):
                            Rb[k] = Rb[k] + c * d * v * x
                    w = m[b1][a1]
                    if w:
                        for k, x in enumerate(mp.act_r[a2][b2]):
                            R[k] = R[k] + c * d * w * x
                        for k, x in enumerate(mp.act_l[a2][b2]):
                            Lb[k] = Lb[k] + c * d * w * x
            if L != R and "central_A" not in fails:
                fails["central_A"] = (B.basis[b], A.basis[a])
            if Lb != Rb and "central_B" not in fails:
                fails["central_B"] = (B.basis[b], A.basis[a])
    return fails


def _unit_index(H):
    return next(i for i, c in enumerate(H.unit) if c)


def is_central_pairing(beta, mp=None):
    return not central_pairing_failures(beta, mp)


def _check_lazy_alg(phi):
    if not (is_algebra_map(phi) and is_lazy1(phi)):
        raise NotLazyAlgebraMap("expected a lazy algebra map")


def lambda_map(phi_B, phi_A, mp):
    """Lambda(phi_B, phi_A)(b, a) = phi_A^-1(a1) phi_B^-1(b1) phi_B(a2 -> b2) phi_A(a3 <- b3)."""
    _check_lazy_alg(phi_B)
    _check_lazy_alg(phi_A)
    A, B = mp.A, mp.B
    F = mp.field
    iA, iB = conv_inverse(phi_A), conv_inverse(phi_B)
    m = [[F.zero] * A.dim for _ in range(B.dim)]
    for b in range(B.dim):
        for a in range(A.dim):
            s = F.zero
            for a1, a2, a3, c in A.delta2(a):
                x = iA.v[a1]
                if not x:
                    continue
                for b1, b2, b3, d in B.delta2(b):
                    y = iB.v[b1]
                    if y:
                        s = s + c * d * x * y * phi_B(list(mp.act_l[a2][b2])) * phi_A(list(mp.act_r[a3][b3]))
            m[b][a] = s
    beta = CentralPairing(mp, m)
    fails = central_pairing_failures(beta)
    if fails:
        from .errors import AxiomFailure
        raise AxiomFailure(f"Lambda produced a non-central pairing: {fails}")
    return beta


def sigma_from_pairing(beta, mp=None):
    """sigma(b (x) a, b' (x) a') = beta(b', a) eps(b) eps(a') on B bowtie A."""
    mp = mp or beta.mp
    D = bowtie(mp)
    A, B = mp.A, mp.B
    na, nb = A.dim, B.dim
    F = mp.field
    m = [[F.zero] * D.dim for _ in range(D.dim)]
    for b in range(nb):
        if not B.counit[b]:
            continue
        for a in range(na):
            for b2 in range(nb):
                v = beta.m[b2][a] * B.counit[b]
                if not v:
                    continue
                for a2 in range(na):
                    if A.counit[a2]:
                        m[b * na + a][b2 * na + a2] = v * A.counit[a2]
    sigma = BiForm(D, m)
    if not (is_lazy2(sigma) and is_left_cocycle(sigma)):
        from .errors import AxiomFailure
        raise AxiomFailure("Sigma(beta) is not a lazy cocycle")
    return sigma


def tensor_linform(phi_B, phi_A, D):
    """(phi_B (x) phi_A)(b (x) a) = phi_B(b) phi_A(a) on the double crossed product."""
    return LinForm(D, [x * y for x in phi_B.v for y in phi_A.v])


def _slot_b(D, b):
    B, A = D.meta["factors"]
    return [x * y for x in B.vec(b) for y in A.unit]


def _slot_a(D, a):
    B, A = D.meta["factors"]
    return [x * y for x in B.unit for y in A.vec(a)]


def normalize_class(sigma):
    """sigma * d(mu) with mu(b (x) a) = sigma(b (x) 1, 1 (x) a)."""
    D = sigma.hopf
    B, A = D.meta["factors"]
    mu = LinForm(D, [sigma(_slot_b(D, b), _slot_a(D, a)) for b in range(B.dim) for a in range(A.dim)])
    if not is_lazy1(mu):
        from .errors import AxiomFailure
        raise AxiomFailure("normalizing form is not lazy")
    out = convolve(sigma, coboundary(mu))
    for b in range(B.dim):
        for b2 in range(B.dim):
            for a2 in range(A.dim):
                want = sigma(_slot_b(D, b), _slot_b(D, b2)) * A.counit[a2]
                if out(_slot_b(D, b), D.vec(b2 * A.dim + a2)) != want:
                    from .errors import AxiomFailure
                    raise AxiomFailure("first normalization fails")
    for b in range(B.dim):
        for a in range(A.dim):
            for a2 in range(A.dim):
                want = sigma(_slot_a(D, a), _slot_a(D, a2)) * B.counit[b]
                if out(D.vec(b * A.dim + a), _slot_a(D, a2)) != want:
                    from .errors import AxiomFailure
                    raise AxiomFailure("second normalization fails")
    return out


def restrict(sigma):
    """Restrictions of a bi-form on B bowtie A to B and to A."""
    D = sigma.hopf
    B, A = D.meta["factors"]
    sB = BiForm(B, [[sigma(_slot_b(D, b), _slot_b(D, b2)) for b2 in range(B.dim)] for b in range(B.dim)])
    sA = BiForm(A, [[sigma(_slot_a(D, a), _slot_a(D, a2)) for a2 in range(A.dim)] for a in range(A.dim)])
    return sB, sA


def yamazaki_join(sigma_B, sigma_A, mp=None):
    """sigma(b (x) a, b' (x) a') = sigma_B(b, b') sigma_A(a, a') on B (x) A."""
    B, A = sigma_B.hopf, sigma_A.hopf
    mp = mp or trivial_matched_pair(B, A)
    if not mp.is_trivial():
        raise NontrivialActions("the join needs trivial actions")
    D = bowtie(mp)
    na = A.dim
    m = [[sigma_B.m[b][b2] * sigma_A.m[a][a2] for b2 in range(B.dim) for a2 in range(na)]
         for b in range(B.dim) for a in range(na)]
    return BiForm(D, m)


# ---------------------------------------------------- special Hopf maps

def l_conditions(f, A, B):
    """First failures of f(A) in Z(B) and f(a1) (x) a2 = f(a2) (x) a1."""
    fails = {}
    img = [list(r) for r in f.m]
    for a in range(A.dim):
        for b in range(B.dim):
            if B.mul(img[a], B.vec(b)) != B.mul(B.vec(b), img[a]):
                fails["central_image"] = (A.basis[a], B.basis[b])
                break
        if "central_image" in fails:
            break
    for a in range(A.dim):
        L, R = {}, {}
        for a1, a2, c in A.comult[a]:
            for k, x in enumerate(img[a1]):
                if x:
                    L[(k, a2)] = L.get((k, a2), 0) + c * x
            for k, x in enumerate(img[a2]):
                if x:
                    R[(k, a1)] = R.get((k, a1), 0) + c * x
        if {k: v for k, v in L.items() if v} != {k: v for k, v in R.items() if v}:
            fails["cocentral"] = (A.basis[a],)
            break
    return fails


def is_L_morphism(f, A, B):
    """True iff the Hopf map f: A -> B has central image and f(a1) (x) a2 = f(a2) (x) a1."""
    if not is_hopf_morphism(f, A, B):
        raise NotAHopfMap("f is not a Hopf algebra map")
    return not l_conditions(f, A, B)


def pairing_to_hopf_map(beta, mp=None):
    """f_beta: B -> (A*)^cop, b -> beta(b, .)."""
    mp = mp or beta.mp
    target = op_cop(dual_hopf(mp.A), False, True)
    return LinMap([list(r) for r in beta.m], mp.B, target), target


def hopf_map_to_pairing(f, mp):
    """Inverse of pairing_to_hopf_map."""
    return CentralPairing(mp, [list(r) for r in f.m])


def scalar_map(phi, A, B):
    """a -> phi(a) 1_B."""
    return LinMap([[phi.v[a] * u for u in B.unit] for a in range(A.dim)], A, B)
