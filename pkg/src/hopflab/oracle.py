"""Brute-force ground truth over small prime fields.

Everything here works on plain integers mod p with its own elimination, so
it shares no arithmetic with the exact modules.  Each search is a linear
presolve followed by a backtracking scan of the remaining affine space in
which every polynomial constraint is tested as soon as all of its variables
are fixed.
"""
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .core import BiForm, LinForm
from .errors import FieldMismatch, NoGeneratorData, SearchSpaceTooLarge
from .lazy import AlgMapSet
from .scalars import PrimeField

DEFAULT_LIMIT = 10 ** 8


# ------------------------------------------------------------------ tables

class _Tables:
    """Structure constants of H as ints mod p."""

    def __init__(self, H, p):
        F = H.field
        if not isinstance(F, PrimeField):
            raise FieldMismatch(f"the oracle needs a prime field, got {F!r}")
        if p is not None and F.p != p:
            raise FieldMismatch(f"algebra is over GF({F.p}), not GF({p})")
        self.p = p = F.p
        n = self.n = H.dim
        self.mult = [[[(k, c.v) for k, c in enumerate(H.mult[i][j]) if c.v] for j in range(n)]
                     for i in range(n)]
        self.comult = [[(j, k, c.v % p) for j, k, c in H.comult[i]] for i in range(n)]
        self.unit = [c.v for c in H.unit]
        self.counit = [c.v for c in H.counit]
        self.one = self.unit.index(1) if self.unit.count(1) == 1 and sum(self.unit) == 1 else None
        if self.one is None:
            raise FieldMismatch("the unit must be a basis element")


def _to_fp(F, vals):
    return [F(v) for v in vals]


# ------------------------------------------------------------- elimination

def _rref(rows, ncols, p):
    """Reduce rows (lists of length ncols + 1, last entry the right-hand side).

    Returns (pivots, reduced rows) or None when inconsistent.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] % p:
            return None
    return pivots, rows[:r]


def _affine(rows, ncols, p):
    """Particular solution and kernel basis of a linear system mod p."""
    red = _rref(rows, ncols, p)
    if red is None:
        return None
    pivots, R = red
    free = [c for c in range(ncols) if c not in pivots]
    x0 = [0] * ncols
    for c, row in zip(pivots, R):
        x0[c] = row[ncols]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for c, row in zip(pivots, R):
            v[c] = -row[f] % p
        basis.append(v)
    return x0, basis


def _rank(M, p):
    red = _rref([list(r) + [0] for r in M], len(M[0]), p)
    return len(red[0])


def _solve_square(M, b, p):
    red = _rref([list(r) + [x] for r, x in zip(M, b)], len(M[0]), p)
    if red is None or len(red[0]) < len(M[0]):
        return None
    pivots, R = red
    x = [0] * len(M[0])
    for c, row in zip(pivots, R):
        x[c] = row[-1]
    return x


# --------------------------------------------------------------- the engine

class _Problem:
    """Linear rows plus polynomial equations in the unknowns.

    Each equation is (const, linear [(var, c)], quadratic [(v1, v2, c)]).
    """

    def __init__(self, nvars, p):
        self.nvars = nvars
        self.p = p
        self.linear = []
        self.equations = []

    def add_linear(self, coeffs, rhs=0):
        row = [0] * (self.nvars + 1)
        for v, c in coeffs:
            row[v] = (row[v] + c) % self.p
        row[-1] = rhs % self.p
        if any(row):
            self.linear.append(row)

    def add_equation(self, const, lin, quad):
        p = self.p
        L, Q = Counter(), Counter()
        for v, c in lin:
            L[v] = (L[v] + c) % p
        for a, b, c in quad:
            key = (a, b) if a <= b else (b, a)
            Q[key] = (Q[key] + c) % p
        L = [(v, c) for v, c in L.items() if c]
        Q = [(a, b, c) for (a, b), c in Q.items() if c]
        if L or Q or const % p:
            self.equations.append((const % p, L, Q))


def _search_slice(job):
    """Backtracking over free parameters; the first is fixed when ``first`` is given."""
    p, x0, basis, eqs_by_level, first = job
    d = len(basis)
    nv = len(x0)
    # entry e = x0[e] + sum_f basis[f][e] t_f
    t = [0] * d
    vals = list(x0)
    out = []

    def assign(level, value):
        delta = value - t[level]
        t[level] = value
        if delta:
            b = basis[level]
            for e in range(nv):
                if b[e]:
                    vals[e] = (vals[e] + delta * b[e]) % p

    def ok(level):
        for const, L, Q in eqs_by_level[level]:
            s = const
            for v, c in L:
                s += c * vals[v]
            for a, b, c in Q:
                s += c * vals[a] * vals[b]
            if s % p:
                return False
        return True

    if not ok(0):
        return out
    if d == 0:
        return [list(vals)]

    def rec(level):
        choices = [first] if (level == 0 and first is not None) else range(p)
        for v in choices:
            assign(level, v)
            if ok(level + 1):
                if level + 1 == d:
                    out.append(list(vals))
                else:
                    rec(level + 1)
        assign(level, 0)

    rec(0)
    return out


def _threads():
    try:
        return max(1, int(os.environ.get("HOPFLAB_THREADS", "1")))
    except ValueError:
        return 1


def _run(problem, limit=DEFAULT_LIMIT, threads=None):
    """All solutions of the problem, in lexicographic order of the free parameters."""
    p = problem.p
    aff = _affine(problem.linear, problem.nvars, p) if problem.linear else \
        ([0] * problem.nvars, [[1 if i == j else 0 for i in range(problem.nvars)]
                               for j in range(problem.nvars)])
    if aff is None:
        return [], 0
    x0, basis = aff
    d = len(basis)
    if p ** d > limit:
        raise SearchSpaceTooLarge(f"residual affine space has dimension {d} over GF({p})", d)
    # level of a variable = 1 + the last free parameter it depends on (0 if constant)
    vlevel = [0] * problem.nvars
    for f, b in enumerate(basis):
        for e, c in enumerate(b):
            if c:
                vlevel[e] = f + 1
    eqs_by_level = [[] for _ in range(d + 1)]
    for eq in problem.equations:
        const, L, Q = eq
        lv = max([vlevel[v] for v, _ in L] + [max(vlevel[a], vlevel[b]) for a, b, _ in Q] + [0])
        eqs_by_level[lv].append(eq)
    threads = threads or _threads()
    if threads > 1 and d >= 2:
        jobs = [(p, x0, basis, eqs_by_level, v) for v in range(p)]
        with ProcessPoolExecutor(max_workers=min(threads, p)) as ex:
            parts = list(ex.map(_search_slice, jobs))
        sols = [s for part in parts for s in part]
    else:
        sols = _search_slice((p, x0, basis, eqs_by_level, None))
    return sols, d


# ------------------------------------------------------------- convolution

def _conv1(T, f, g):
    p = T.p
    out = [0] * T.n
    for a in range(T.n):
        s = 0
        for a1, a2, c in T.comult[a]:
            s += c * f[a1] * g[a2]
        out[a] = s % p
    return out


def _conv1_matrix(T, f):
    """Matrix of g -> f * g on H*."""
    M = [[0] * T.n for _ in range(T.n)]
    for a in range(T.n):
        for a1, a2, c in T.comult[a]:
            M[a][a2] = (M[a][a2] + c * f[a1]) % T.p
    return M


def _inverse1(T, f):
    return _solve_square(_conv1_matrix(T, f), T.counit, T.p)


def _conv2(T, s, t):
    """Convolution of bi-forms stored flat (index a * n + b)."""
    n, p = T.n, T.p
    out = [0] * (n * n)
    for a in range(n):
        for b in range(n):
            acc = 0
            for a1, a2, c in T.comult[a]:
                for b1, b2, d in T.comult[b]:
                    x = s[a1 * n + b1]
                    if x:
                        acc += c * d * x * t[a2 * n + b2]
            out[a * n + b] = acc % p
    return out


def _conv_pair_matrix(comL, comR, nL, nR, f, p):
    """Matrix of g -> f * g for forms on a tensor coalgebra C_L (x) C_R."""
    N = nL * nR
    M = [[0] * N for _ in range(N)]
    for a in range(nL):
        for b in range(nR):
            row = M[a * nR + b]
            for a1, a2, c in comL[a]:
                for b1, b2, d in comR[b]:
                    x = f[a1 * nR + b1]
                    if x:
                        k = a2 * nR + b2
                        row[k] = (row[k] + c * d * x) % p
    return M


def _invertible2(T, s):
    N = T.n * T.n
    return _rank(_conv_pair_matrix(T.comult, T.comult, T.n, T.n, s, T.p), T.p) == N


def _coboundary(T, mu):
    n, p = T.n, T.p
    inv = _inverse1(T, mu)
    out = [0] * (n * n)
    for a in range(n):
        for b in range(n):
            acc = 0
            for a1, a2, c in T.comult[a]:
                for b1, b2, d in T.comult[b]:
                    x = mu[a1] * mu[b1]
                    if x:
                        y = sum(m * inv[k] for k, m in T.mult[a2][b2])
                        acc += c * d * x * y
            out[a * n + b] = acc % p
    return out


# ---------------------------------------------------------- group tables

class AbstractGroupTable:
    """A finite group on 0..order-1 given by its table; 0 is the identity."""

    def __init__(self, table):
        self.table = [list(r) for r in table]
        self.order = len(table)
        self.element_orders = tuple(sorted(self._elt_order(i) for i in range(self.order)))

    def _elt_order(self, i):
        k, x = 1, i
        while x != 0:
            x = self.table[x][i]
            k += 1
            if k > self.order:
                return 0
        return k

    def is_group(self):
        n = self.order
        T = self.table
        if any(T[0][i] != i or T[i][0] != i for i in range(n)):
            return False
        if any(sorted(r) != list(range(n)) for r in T):
            return False
        if any(sorted(T[i][j] for i in range(n)) != list(range(n)) for j in range(n)):
            return False
        return all(T[T[a][b]][c] == T[a][T[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(a))

    def is_cyclic(self):
        return self.order in self.element_orders

    def invariant(self):
        return (self.order, self.element_orders)

    def isomorphic_to_cyclic(self, m):
        return self.order == m and self.is_cyclic()

    def describe(self):
        if self.order == 1:
            return "trivial"
        if self.is_cyclic():
            return f"Z{self.order}"
        return f"order {self.order}, element orders {list(self.element_orders)}"

    def to_dict(self):
        return {"order": self.order, "element_orders": list(self.element_orders),
                "table": self.table}


class Z2LResult(tuple):
    """(Z2_L, B2_L, quotient) with the search statistics attached."""

    def __new__(cls, z2l, b2l, quotient, residual_dim, seconds):
        self = super().__new__(cls, (z2l, b2l, quotient))
        self.residual_dim = residual_dim
        self.seconds = seconds
        return self

    @property
    def z2l(self):
        return self[0]

    @property
    def b2l(self):
        return self[1]

    @property
    def quotient(self):
        return self[2]

    def report(self):
        return {"residual_dim": self.residual_dim, "z2l": len(self[0]), "b2l": len(self[1]),
                "quotient": self[2].to_dict(), "quotient_name": self[2].describe(),
                "seconds": round(self.seconds, 3)}


# -------------------------------------------------------------- searches

def _lazy_units_raw(T, limit):
    n, p = T.n, T.p
    P = _Problem(n, p)
    P.add_linear([(T.one, 1)], 1)
    # mu(a1) a2 = a1 mu(a2), coordinatewise in the basis
    for a in range(n):
        rows = {}
        for a1, a2, c in T.comult[a]:
            rows.setdefault(a2, Counter())[a1] += c
            rows.setdefault(a1, Counter())[a2] -= c
        for k, r in sorted(rows.items()):
            P.add_linear(list(r.items()))
    sols, _ = _run(P, limit, threads=1)
    return [s for s in sols if _rank(_conv1_matrix(T, s), p) == n]


def enumerate_lazy_units(H, p=None, limit=DEFAULT_LIMIT):
    """All invertible lazy forms mu with mu(1) = 1."""
    T = _Tables(H, p)
    F = H.field
    units = _lazy_units_raw(T, limit)
    keys = {tuple(u) for u in units}
    for u in units:
        for v in units:
            if tuple(_conv1(T, u, v)) not in keys:
                raise AssertionError("lazy units are not closed under convolution")
    return [LinForm(H, _to_fp(F, u)) for u in units]


def _cocycle_problem(T):
    n, p = T.n, T.p
    N = n * n
    P = _Problem(N, p)
    one = T.one
    # normalization
    for a in range(n):
        P.add_linear([(a * n + one, 1)], T.counit[a])
        P.add_linear([(one * n + a, 1)], T.counit[a])
    # laziness: sigma(a1,b1) a2b2 = a1b1 sigma(a2,b2)
    for a in range(n):
        for b in range(n):
            rows = {}
            for a1, a2, c in T.comult[a]:
                for b1, b2, d in T.comult[b]:
                    for k, m in T.mult[a2][b2]:
                        rows.setdefault(k, Counter())[a1 * n + b1] += c * d * m
                    for k, m in T.mult[a1][b1]:
                        rows.setdefault(k, Counter())[a2 * n + b2] -= c * d * m
            for k, r in sorted(rows.items()):
                P.add_linear(list(r.items()))
    # left cocycle: sigma(a1,b1) sigma(a2b2,c) = sigma(b1,c1) sigma(a,b2c2)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                Q = []
                for a1, a2, s in T.comult[a]:
                    for b1, b2, t in T.comult[b]:
                        for k, m in T.mult[a2][b2]:
                            Q.append((a1 * n + b1, k * n + c, s * t * m))
                for b1, b2, t in T.comult[b]:
                    for c1, c2, u in T.comult[c]:
                        for k, m in T.mult[b2][c2]:
                            Q.append((b1 * n + c1, a * n + k, -t * u * m))
                P.add_equation(0, [], Q)
    return P


def enumerate_z2L(H, p=None, limit=DEFAULT_LIMIT, threads=None):
    """(Z2_L, B2_L, H2_L as an AbstractGroupTable), by exhaustive search."""
    t0 = time.perf_counter()
    T = _Tables(H, p)
    F = H.field
    n = T.n
    P = _cocycle_problem(T)
    sols, d = _run(P, limit, threads)
    Z = [tuple(s) for s in sols if _invertible2(T, s)]
    units = _lazy_units_raw(T, limit)
    B = sorted({tuple(_coboundary(T, mu)) for mu in units})
    zset = set(Z)
    if not set(B) <= zset:
        raise AssertionError("a lazy coboundary escaped the cocycle search")
    # coset partition
    unit = tuple(T.counit[a] * T.counit[b] % T.p for a in range(n) for b in range(n))
    cls = {}
    reps = []
    for s in [unit] + sorted(Z):
        if s in cls:
            continue
        k = len(reps)
        reps.append(s)
        for b in B:
            x = tuple(_conv2(T, list(s), list(b)))
            if x not in zset:
                raise AssertionError("coset leaves Z2_L")
            cls[x] = k
    table = [[cls[tuple(_conv2(T, list(r), list(q)))] for q in reps] for r in reps]
    Qt = AbstractGroupTable(table)
    if not Qt.is_group():
        raise AssertionError("quotient is not a group")
    to_form = lambda s: BiForm(H, [_to_fp(F, s[a * n:(a + 1) * n]) for a in range(n)])
    return Z2LResult([to_form(s) for s in Z], [to_form(s) for s in B], Qt, d,
                     time.perf_counter() - t0)


def quotient_order(H, p=None, limit=DEFAULT_LIMIT):
    return enumerate_z2L(H, p, limit).quotient.order


def _alg_maps_fp(T, limit):
    n, p = T.n, T.p
    P = _Problem(n, p)
    P.add_linear([(T.one, 1)], 1)
    for a in range(n):
        for b in range(n):
            P.add_equation(0, [(k, m) for k, m in T.mult[a][b]], [(a, b, -1)])
    sols, _ = _run(P, limit, threads=1)
    return sols


def _nilpotent(H, v):
    w = list(v)
    for _ in range(H.dim + 1):
        w = H.mul(w, v)
        if not any(w):
            return True
    return False


def _alg_maps_exact(H):
    words = H.meta.get("words")
    gens = H.meta.get("gens")
    gi = H.meta.get("gen_index")
    if not (words and gens and gi):
        raise NoGeneratorData("exact mode needs generator words and kinds")
    F = H.field
    keys = sorted(gens, key=str)
    choices = []
    for k in keys:
        info = gens[k]
        if info["kind"] == "grouplike":
            choices.append(F.roots_of_unity(info["order"]))
        elif _nilpotent(H, H.vec(gi[k])):
            choices.append([F.zero])
        else:
            raise NoGeneratorData(f"generator {k!r} is neither grouplike nor nilpotent")
    out = []

    def rec(i, vals):
        if i == len(keys):
            img = dict(zip(keys, vals))
            v = []
            for w in words:
                x = F.one
                for g in w:
                    x = x * img[g]
                v.append(x)
            mu = LinForm(H, v)
            if _is_alg_map(H, mu):
                out.append(mu)
            return
        for c in choices[i]:
            rec(i + 1, vals + [c])

    rec(0, [])
    return out


def _is_alg_map(H, mu):
    if mu(list(H.unit)) != H.field.one:
        return False
    return all(mu(list(H.mult[a][b])) == mu.v[a] * mu.v[b]
               for a in range(H.dim) for b in range(H.dim))


def enumerate_alg_maps(H, p=None, exact=False, limit=DEFAULT_LIMIT):
    """Alg(H, k): by exhaustive search over GF(p), or exactly from generator data."""
    if exact:
        return AlgMapSet(_alg_maps_exact(H), certified=True, how="generators")
    T = _Tables(H, p)
    return AlgMapSet([LinForm(H, _to_fp(H.field, s)) for s in _alg_maps_fp(T, limit)],
                     certified=True, how=f"exhaustive over F{T.p}")


def brute_pairings(A, B, p=None, trivial_actions=True, limit=DEFAULT_LIMIT, threads=None):
    """All central pairings beta(b, a) on B (x) A for the trivial matched pair."""
    if not trivial_actions:
        raise NotImplementedError("the brute-force pairing search covers trivial actions only")
    from .families import trivial_matched_pair
    from .kac import CentralPairing
    TA, TB = _Tables(A, p), _Tables(B, p)
    if TA.p != TB.p:
        raise FieldMismatch("A and B over different fields")
    p = TA.p
    na, nb = TA.n, TB.n
    N = na * nb
    var = lambda b, a: b * na + a
    P = _Problem(N, p)
    for a in range(na):
        P.add_linear([(var(TB.one, a), 1)], TA.counit[a])
    for b in range(nb):
        P.add_linear([(var(b, TA.one), 1)], TB.counit[b])
    # centrality: beta(b, a2) a1 = beta(b, a1) a2 and beta(b2, a) b1 = beta(b1, a) b2
    for b in range(nb):
        for a in range(na):
            rows = {}
            for a1, a2, c in TA.comult[a]:
                rows.setdefault(a1, Counter())[var(b, a2)] += c
                rows.setdefault(a2, Counter())[var(b, a1)] -= c
            for k, r in sorted(rows.items()):
                P.add_linear(list(r.items()))
            rows = {}
            for b1, b2, c in TB.comult[b]:
                rows.setdefault(b1, Counter())[var(b2, a)] += c
                rows.setdefault(b2, Counter())[var(b1, a)] -= c
            for k, r in sorted(rows.items()):
                P.add_linear(list(r.items()))
    # beta(bb', a) = beta(b, a1) beta(b', a2)
    for b in range(nb):
        for b2 in range(nb):
            for a in range(na):
                L = [(var(k, a), m) for k, m in TB.mult[b][b2]]
                Q = [(var(b, a1), var(b2, a2), -c) for a1, a2, c in TA.comult[a]]
                P.add_equation(0, L, Q)
    # beta(b, aa') = beta(b1, a') beta(b2, a)
    for b in range(nb):
        for a in range(na):
            for a2 in range(na):
                L = [(var(b, k), m) for k, m in TA.mult[a][a2]]
                Q = [(var(b1, a2), var(bb, a), -c) for b1, bb, c in TB.comult[b]]
                P.add_equation(0, L, Q)
    sols, _ = _run(P, limit, threads)
    good = [s for s in sols
            if _rank(_conv_pair_matrix(TB.comult, TA.comult, nb, na, s, p), p) == N]
    mp = trivial_matched_pair(B, A)
    F = A.field
    return [CentralPairing(mp, [_to_fp(F, s[b * na:(b + 1) * na]) for b in range(nb)])
            for s in good]
