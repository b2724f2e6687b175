"""Exact Gauss-Jordan elimination on sparse rows.

Rows are dicts {column: scalar}.  Pivots are chosen as the smallest column
index available, so results are deterministic.
"""
from .errors import NotInvertible


class Eliminator:
    """Incremental reduced row echelon form.

    Columns >= ``ncols`` are treated as right-hand sides and never pivoted on.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # col -> row dict with row[col] == 1

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v}
        for c in [c for c in row if c in self.pivots]:
            v = row.get(c)
            if not v:
                continue
            for k, w in self.pivots[c].items():
                nv = row.get(k, 0) - v * w
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Insert a row; returns True if it raised the rank."""
        row = self.reduce(row)
        cols = [c for c in row if c < self.ncols]
        if not cols:
            if row:
                self.inconsistent = True
            return False
        p = min(cols)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        for c, prow in self.pivots.items():
            f = prow.get(p)
            if f:
                for k, w in row.items():
                    nv = prow.get(k, 0) - f * w
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[p] = row
        return True

    inconsistent = False

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows, ncols):
    e = Eliminator(ncols)
    for r in rows:
        e.add(r)
    return e.rank


def solve(rows, rhs, ncols, field):
    """One solution of rows * x = rhs (free variables set to 0), or None."""
    e = Eliminator(ncols)
    for r, b in zip(rows, rhs):
        r = dict(r)
        if b:
            r[ncols] = b
        e.add(r)
        if e.inconsistent:
            return None
    x = [field.zero] * ncols
    for c, prow in e.pivots.items():
        if prow.get(ncols):
            x[c] = prow[ncols]
    return x


def affine_solutions(rows, rhs, ncols, field):
    """(particular solution, kernel basis) or None when inconsistent."""
    e = Eliminator(ncols)
    for r, b in zip(rows, rhs):
        r = dict(r)
        if b:
            r[ncols] = b
        e.add(r)
        if e.inconsistent:
            return None
    x = [field.zero] * ncols
    for c, prow in e.pivots.items():
        if prow.get(ncols):
            x[c] = prow[ncols]
    return x, _kernel_from(e, ncols, field)


def _kernel_from(e, ncols, field):
    free = [c for c in range(ncols) if c not in e.pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for c, prow in e.pivots.items():
            w = prow.get(f)
            if w:
                v[c] = -w
        basis.append(v)
    return basis


def kernel(rows, ncols, field):
    e = Eliminator(ncols)
    for r in rows:
        e.add(r)
    return _kernel_from(e, ncols, field)


def dense_rows(M):
    return [{j: v for j, v in enumerate(row) if v} for row in M]


def mat_inverse(M, field):
    """Inverse of a square dense matrix (list of rows)."""
    n = len(M)
    e = Eliminator(n)
    for i, row in enumerate(M):
        r = {j: v for j, v in enumerate(row) if v}
        r[n + i] = field.one
        e.add(r)
    if e.rank < n:
        raise NotInvertible("singular matrix")
    out = [[field.zero] * n for _ in range(n)]
    for c, prow in e.pivots.items():
        for k, v in prow.items():
            if k >= n:
                out[c][k - n] = v
    return out


def mat_mul(A, B, field):
    n, m = len(A), len(B[0]) if B else 0
    out = [[field.zero] * m for _ in range(n)]
    for i, row in enumerate(A):
        oi = out[i]
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        oi[j] = oi[j] + a * b
    return out


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(r) for r in zip(*M)] if M else []


def kron(A, B, field):
    out = []
    for ra in A:
        for rb in B:
            out.append([a * b if a and b else field.zero for a in ra for b in rb])
    return out
