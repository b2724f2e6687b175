"""Finite groups given by multiplication tables."""
from itertools import product

from .errors import InvalidDatum


class FiniteGroup:
    def __init__(self, table, names=None):
        n = len(table)
        self.table = tuple(tuple(r) for r in table)
        self.names = tuple(names) if names else tuple(f"h{i}" for i in range(n))
        if len(self.names) != n or any(len(r) != n for r in self.table):
            raise InvalidDatum("group table is not square")
        ident = [e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n))]
        if not ident:
            raise InvalidDatum("group table has no identity")
        self.identity = ident[0]
        inv = []
        for x in range(n):
            ys = [y for y in range(n) if self.table[x][y] == self.identity]
            if len(ys) != 1 or self.table[ys[0]][x] != self.identity:
                raise InvalidDatum(f"element {self.names[x]} has no inverse")
            inv.append(ys[0])
        self.inverse = tuple(inv)
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise InvalidDatum("group table is not associative")
        self._gens = None

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, a, k):
        out = self.identity
        if k < 0:
            a, k = self.inverse[a], -k
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_central(self, a):
        return all(self.table[a][x] == self.table[x][a] for x in range(self.order))

    def index(self, name):
        if isinstance(name, int):
            return name
        return self.names.index(name)

    def generators(self):
        """Greedy generating set and a word (list of generators) for every element."""
        if self._gens is None:
            gens = []
            words = {self.identity: []}
            for cand in range(self.order):
                if cand in words:
                    continue
                gens.append(cand)
                words = self._closure(gens)
            self._gens = (tuple(gens), words)
        return self._gens

    def _closure(self, gens):
        words = {self.identity: []}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in words:
                        words[y] = words[x] + [g]
                        nxt.append(y)
            frontier = nxt
        return words

    def cosets(self, g):
        """Left cosets x<g> in order of first appearance; returns (reps, coset index per element)."""
        sub = [self.power(g, k) for k in range(self.element_order(g))]
        idx = [None] * self.order
        reps = []
        for x in range(self.order):
            if idx[x] is None:
                for s in sub:
                    idx[self.table[x][s]] = len(reps)
                reps.append(x)
        return reps, idx

    def quotient(self, g):
        """G/<g> for central g, with the projection."""
        if not self.is_central(g):
            raise InvalidDatum("quotient by a non-central element")
        reps, idx = self.cosets(g)
        table = [[idx[self.table[a][b]] for b in reps] for a in reps]
        names = [self.names[r] + "<g>" for r in reps]
        return FiniteGroup(table, names), idx

    def automorphism_from_images(self, images):
        """Extend an assignment on generators to an automorphism (checked)."""
        gens, words = self.generators()
        f = [None] * self.order
        for x, w in words.items():
            y = self.identity
            for s in w:
                y = self.table[y][images[s]]
            f[x] = y
        for a in range(self.order):
            for b in range(self.order):
                if f[self.table[a][b]] != self.table[f[a]][f[b]]:
                    raise InvalidDatum("images do not define a homomorphism")
        if len(set(f)) != self.order:
            raise InvalidDatum("images do not define a bijection")
        return tuple(f)


def cyclic_group(n, prefix="z"):
    names = ["1"] + [prefix if k == 1 else f"{prefix}^{k}" for k in range(1, n)]
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], names)


def product_group(G, H):
    n, m = G.order, H.order
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(n * m)] for a in range(n * m)]
    names = [f"({x},{y})" for x in G.names for y in H.names]
    return FiniteGroup(table, names)


def group_from_elements(elements, op, names=None):
    elements = list(elements)
    pos = {e: i for i, e in enumerate(elements)}
    table = [[pos[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, names or [str(e) for e in elements])


def central_extension_16():
    """<a, b, g | a^2 = b^2 = g^4 = 1, g central, ab = ba g^2>, order 16."""
    elems = [(al, be, ga) for al in range(2) for be in range(2) for ga in range(4)]

    def op(x, y):
        # b^be a^al' = a^al' b^be g^(2 be al')
        return ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2, (x[2] + y[2] + 2 * x[1] * y[0]) % 4)

    def name(e):
        parts = []
        if e[0]:
            parts.append("a")
        if e[1]:
            parts.append("b")
        if e[2]:
            parts.append("g" if e[2] == 1 else f"g^{e[2]}")
        return "".join(parts) or "1"

    return group_from_elements(elems, op, [name(e) for e in elems])
