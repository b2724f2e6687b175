"""Exact scalars: rationals, cyclotomic numbers and prime-field residues.

Rationals are plain ``fractions.Fraction`` values.  Cyclotomic numbers and
residues mod p get small wrapper classes so that mixing two different fields
raises instead of silently coercing.  Python ints are accepted everywhere and
are read inside the field of the other operand.
"""
import re
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, ParseError, NotInvertible

_RAT = re.compile(r"-?\d+(/\d+)?\Z")


def _parse_rational(s):
    s = s.strip()
    if not _RAT.match(s):
        raise ParseError(f"malformed rational {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {s!r}") from None


class Field:
    """Base class; concrete fields are hashable value objects."""

    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x):
        raise NotImplementedError

    def fmt(self, x):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def spec(self):
        raise NotImplementedError

    def two_invertible(self):
        return self.characteristic != 2


class Rationals(Field):
    tag = "Q"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot read {x!r} as a rational")

    def contains(self, x):
        return isinstance(x, (Fraction, int))

    def fmt(self, x):
        return str(Fraction(x))

    def parse(self, s):
        return _parse_rational(s)

    def spec(self):
        return "Q"

    def roots_of_unity(self, m):
        return [Fraction(1)] + ([Fraction(-1)] if m % 2 == 0 else [])

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


# ---------------------------------------------------------------- cyclotomics

def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydiv_exact(a, b):
    # integer polynomials, b monic, low degree first
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    assert not any(a), "inexact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, constant term first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _polydiv_exact(p, cyclotomic_polynomial(d))
    return tuple(p)


class CyclotomicField(Field):
    """Q(zeta_N), elements stored as coefficient vectors mod Phi_N."""

    tag = "cyclotomic"

    def __init__(self, N):
        if N < 1:
            raise ValueError("order must be positive")
        self.N = N
        phi = cyclotomic_polynomial(N)
        self.deg = len(phi) - 1
        self._phi = phi
        # x^k reduced, for k < 2*deg
        red = []
        cur = [Fraction(0)] * self.deg
        if self.deg:
            cur[0] = Fraction(1)
        for _ in range(2 * self.deg + 1):
            red.append(tuple(cur))
            cur = self._times_x(cur)
        self._red = red

    def _times_x(self, v):
        d = self.deg
        top = v[-1]
        out = [Fraction(0)] + list(v[:-1])
        if top:
            for j in range(d):
                out[j] -= top * self._phi[j]
        return out

    def _reduce(self, coeffs):
        d = self.deg
        out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                r = self._red[k] if k < len(self._red) else self._power_vec(k)
                for j in range(d):
                    if r[j]:
                        out[j] += c * r[j]
        return tuple(out)

    def _power_vec(self, k):
        k %= self.N
        if k < len(self._red):
            return self._red[k]
        cur = list(self._red[-1])
        for _ in range(k - len(self._red) + 1):
            cur = self._times_x(cur)
        return tuple(cur)

    def _make(self, coeffs):
        return Cyc(self, tuple(Fraction(c) for c in coeffs))

    def __call__(self, x):
        if isinstance(x, Cyc):
            if x.K != self:
                raise FieldMismatch(f"element of {x.K!r} used in {self!r}")
            return x
        if isinstance(x, (int, Fraction)):
            return self._make([x] + [0] * (self.deg - 1))
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot read {x!r} in {self!r}")

    def zeta_power(self, k):
        return Cyc(self, self._power_vec(k % self.N))

    @property
    def zeta(self):
        return self.zeta_power(1)

    def contains(self, x):
        return isinstance(x, int) or (isinstance(x, Cyc) and x.K == self)

    def fmt(self, x):
        x = self(x)
        terms = []
        for k, c in enumerate(x.c):
            if not c:
                continue
            if k == 0:
                t = str(c)
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    t = z
                elif c == -1:
                    t = "-" + z
                else:
                    t = f"{c}*{z}"
            if terms and not t.startswith("-"):
                t = "+" + t
            terms.append(t)
        return "".join(terms) or "0"

    _TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*(z(?:\^\d+)?))?|(z(?:\^\d+)?))")

    def parse(self, s):
        src = s
        s = s.replace(" ", "")
        if not s:
            raise ParseError(f"empty cyclotomic scalar {src!r}")
        pos = 0
        total = list(self._make([0] * self.deg).c)
        first = True
        while pos < len(s):
            m = self._TERM.match(s, pos)
            if not m or m.end() == pos or (not first and not m.group(1)):
                raise ParseError(f"malformed cyclotomic scalar {src!r}", 1, pos + 1)
            sign, num, zp1, zp2 = m.groups()
            coef = _parse_rational(num) if num is not None else Fraction(1)
            if sign == "-":
                coef = -coef
            zp = zp1 or zp2
            k = 0
            if zp:
                k = int(zp[2:]) if "^" in zp else 1
            vec = self._power_vec(k)
            for j in range(self.deg):
                total[j] += coef * vec[j]
            pos = m.end()
            first = False
        return Cyc(self, tuple(total))

    def spec(self):
        return {"cyclotomic": self.N}

    def roots_of_unity(self, m):
        found = []
        for k in range(self.N):
            for s in (1, -1):
                y = self.zeta_power(k) * s
                if y ** m == 1 and y not in found:
                    found.append(y)
        return found

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.N == self.N

    def __hash__(self):
        return hash(("cyc", self.N))

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    def __reduce__(self):
        return (CyclotomicField, (self.N,))


class Cyc:
    __slots__ = ("K", "c")

    def __init__(self, K, c):
        self.K = K
        self.c = c

    def _other(self, o):
        if isinstance(o, Cyc):
            if o.K != self.K:
                raise FieldMismatch(f"{self.K!r} vs {o.K!r}")
            return o.c
        if isinstance(o, int):
            return (Fraction(o),) + (Fraction(0),) * (self.K.deg - 1)
        raise FieldMismatch(f"cannot combine cyclotomic with {type(o).__name__}")

    def __add__(self, o):
        oc = self._other(o)
        return Cyc(self.K, tuple(a + b for a, b in zip(self.c, oc)))

    __radd__ = __add__

    def __sub__(self, o):
        oc = self._other(o)
        return Cyc(self.K, tuple(a - b for a, b in zip(self.c, oc)))

    def __rsub__(self, o):
        oc = self._other(o)
        return Cyc(self.K, tuple(b - a for a, b in zip(self.c, oc)))

    def __neg__(self):
        return Cyc(self.K, tuple(-a for a in self.c))

    def __mul__(self, o):
        if isinstance(o, int):
            return Cyc(self.K, tuple(a * o for a in self.c))
        oc = self._other(o)
        return Cyc(self.K, self.K._reduce(_polymul(self.c, oc)))

    __rmul__ = __mul__

    def inverse(self):
        K = self.K
        d = K.deg
        if not any(self.c):
            raise NotInvertible("division by zero in cyclotomic field")
        # columns: self * x^j
        cols = []
        cur = list(self.c)
        for _ in range(d):
            cols.append(cur)
            cur = K._times_x(cur)
        rows = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(d):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return Cyc(K, tuple(rows[i][d] for i in range(d)))

    def __truediv__(self, o):
        if isinstance(o, int):
            if o == 0:
                raise ZeroDivisionError("division by zero")
            return Cyc(self.K, tuple(a / o for a in self.c))
        self._other(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.K(o) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.K(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, Cyc):
            return o.K == self.K and o.c == self.c
        if isinstance(o, (int, Fraction)):
            return self.c[0] == o and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(("cyc", self.K.N, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return self.K.fmt(self)

    def __reduce__(self):
        return (Cyc, (self.K, self.c))


# --------------------------------------------------------------- prime fields

def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    tag = "Fp"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F{x.p} element used in F{self.p}")
            return x
        if isinstance(x, int):
            return Fp(x % self.p, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NotInvertible(f"{x} has no image in F{self.p}")
            return Fp(x.numerator * pow(x.denominator, -1, self.p) % self.p, self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot read {x!r} in F{self.p}")

    def contains(self, x):
        return isinstance(x, int) or (isinstance(x, Fp) and x.p == self.p)

    def fmt(self, x):
        return f"{self(x).v} mod {self.p}"

    _MOD = re.compile(r"\s*(-?\d+)\s*mod\s*(\d+)\s*\Z")

    def parse(self, s):
        m = self._MOD.match(s)
        if m:
            if int(m.group(2)) != self.p:
                raise FieldMismatch(f"{s!r} is not in F{self.p}")
            return self(int(m.group(1)))
        return self(_parse_rational(s))

    def spec(self):
        return {"Fp": self.p}

    def roots_of_unity(self, m):
        return [Fp(y, self.p) for y in range(1, self.p) if pow(y, m, self.p) == 1]

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (PrimeField, (self.p,))


class Fp:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v
        self.p = p

    def _o(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                raise FieldMismatch(f"F{self.p} vs F{o.p}")
            return o.v
        if isinstance(o, int):
            return o
        raise FieldMismatch(f"cannot combine F{self.p} element with {type(o).__name__}")

    def __add__(self, o):
        return Fp((self.v + self._o(o)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Fp((self.v - self._o(o)) % self.p, self.p)

    def __rsub__(self, o):
        return Fp((self._o(o) - self.v) % self.p, self.p)

    def __neg__(self):
        return Fp((-self.v) % self.p, self.p)

    def __mul__(self, o):
        return Fp((self.v * self._o(o)) % self.p, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.v:
            raise NotInvertible(f"division by zero in F{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        ov = self._o(o) % self.p
        if not ov:
            raise ZeroDivisionError("division by zero")
        return Fp(self.v * pow(ov, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, o):
        return Fp(self._o(o) % self.p, self.p) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        if isinstance(o, Fp):
            return o.p == self.p and o.v == self.v
        if isinstance(o, int):
            return (o - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __reduce__(self):
        return (Fp, (self.v, self.p))


# ------------------------------------------------------------------- helpers

def field_from_spec(spec):
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and len(spec) == 1:
        if "cyclotomic" in spec:
            return CyclotomicField(int(spec["cyclotomic"]))
        if "Fp" in spec:
            return PrimeField(int(spec["Fp"]))
    raise ParseError(f"unknown field spec {spec!r}")


def field_from_name(name):
    """Short names used on the command line: q, f3, gf5, cyc4, q(i)."""
    n = name.strip().lower()
    if n in ("q", "qq", "rational", "rationals"):
        return QQ
    m = re.fullmatch(r"(?:f|gf|fp)(\d+)", n)
    if m:
        return PrimeField(int(m.group(1)))
    m = re.fullmatch(r"(?:cyc|cyclotomic|q\(z)(\d+)\)?", n)
    if m:
        return CyclotomicField(int(m.group(1)))
    if n == "q(i)":
        return CyclotomicField(4)
    raise ParseError(f"unknown field name {name!r}")


def field_of(x):
    if isinstance(x, Cyc):
        return x.K
    if isinstance(x, Fp):
        return PrimeField(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise FieldMismatch(f"{x!r} is not a scalar")
