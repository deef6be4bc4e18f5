"""Exact arithmetic in the cyclotomic field carrying all scalars of the
theory with parameters (N, K).

zeta denotes the primitive m-th root of unity exp(2*pi*i/m) with
m = 2*N*(N+K).  The deformation parameter q = exp(2*pi*i/(N+K)) and the
fractional powers the skein relations need are monomials in zeta:

    q = zeta^(2N),    q^(1/2) = zeta^N,    q^(1/2N) = zeta.

A scalar is a polynomial in zeta with rational coefficients, reduced
modulo the m-th cyclotomic polynomial Phi_m.  It is stored as an integer
coefficient vector of length phi(m) over a single positive denominator,
normalised so the representation is canonical; equality (in particular
deciding whether a quantum integer vanishes) is a coefficient
comparison.  Floating point enters only through ``embed``, which exists
for reporting and numerical positivity checks, never for exact
decisions.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Params",
    "Scalar",
    "qint",
    "qfact",
    "conjugate",
    "invert",
    "embed",
]


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide polynomials with integer coefficients, ascending order.

    The divisor must be monic and the division must be exact; both hold
    for products of cyclotomic polynomials.
    """
    num = list(num)
    dden = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dden)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dden]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ValueError("polynomial division not exact")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending, computed by dividing
    x^m - 1 by the cyclotomic polynomials of the proper divisors."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _polydiv_exact(poly, list(_cyclotomic(d)))
    return tuple(poly)


class _Field:
    """Shared reduction data for Q(zeta_m); one instance per m."""

    __slots__ = ("m", "phi", "phim", "red", "zpow")

    def __init__(self, m: int):
        self.m = m
        phim = _cyclotomic(m)
        self.phim = phim
        self.phi = len(phim) - 1
        phi = self.phi
        # red[j] = coefficient vector of zeta^j reduced mod Phi_m, 0 <= j < m.
        rows: list[tuple[int, ...]] = []
        for j in range(phi):
            row = [0] * phi
            row[j] = 1
            rows.append(tuple(row))
        top = [-c for c in phim[:phi]]  # zeta^phi
        cur = top[:]
        rows.append(tuple(cur))
        for _ in range(phi + 1, m):
            shifted = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                for t in range(phi):
                    shifted[t] += lead * top[t]
            cur = shifted
            rows.append(tuple(cur))
        self.red = tuple(rows)
        self.zpow = tuple(cmath.exp(2j * cmath.pi * j / m) for j in range(m))

    def mul_vec(self, a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
        phi = self.phi
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:phi]
        red = self.red
        for k in range(phi, 2 * phi - 1):
            ck = prod[k]
            if ck:
                row = red[k]
                for t in range(phi):
                    rt = row[t]
                    if rt:
                        out[t] += ck * rt
        return out

    def conj_vec(self, a: tuple[int, ...]) -> list[int]:
        # Complex conjugation sends zeta to zeta^(m-1).
        phi = self.phi
        out = [0] * phi
        m = self.m
        red = self.red
        for i, ai in enumerate(a):
            if ai:
                row = red[(m - i) % m]
                for t in range(phi):
                    rt = row[t]
                    if rt:
                        out[t] += ai * rt
        return out


@lru_cache(maxsize=None)
def _field(m: int) -> _Field:
    return _Field(m)


def _content(nums: list[int], den: int) -> int:
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


class Scalar:
    """Element of Q(zeta_m) in canonical coefficient form.

    ``num`` holds integer coefficients of 1, zeta, ..., zeta^(phi-1) and
    ``den`` a positive common denominator with no factor shared by the
    whole vector.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: _Field, num: tuple[int, ...], den: int):
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def _make(field: _Field, nums: list[int], den: int) -> "Scalar":
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        if not any(nums):
            return Scalar(field, (0,) * field.phi, 1)
        g = _content(nums, den)
        if g > 1:
            nums = [v // g for v in nums]
            den //= g
        return Scalar(field, tuple(nums), den)

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(field: _Field, x: Fraction | int) -> "Scalar":
        fr = Fraction(x)
        nums = [0] * field.phi
        nums[0] = fr.numerator
        return Scalar._make(field, nums, fr.denominator)

    @staticmethod
    def zeta_power(field: _Field, k: int) -> "Scalar":
        return Scalar(field, field.red[k % field.m], 1)

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return Fraction(self.num[0], self.den)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(self.field, other)
        return None

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        if a.den == b.den:
            nums = [x + y for x, y in zip(a.num, b.num)]
            return Scalar._make(a.field, nums, a.den)
        nums = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Scalar._make(a.field, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, tuple(-v for v in self.num), self.den)

    def __sub__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__add__(-self)

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        nums = self.field.mul_vec(self.num, o.num)
        return Scalar._make(self.field, nums, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.from_rational(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.field.m, self.num, self.den))

    def __repr__(self) -> str:
        return f"Scalar(m={self.field.m}, num={list(self.num)}, den={self.den})"

    # -- field operations --------------------------------------------

    def conjugate(self) -> "Scalar":
        nums = self.field.conj_vec(self.num)
        return Scalar._make(self.field, nums, self.den)

    def inverse(self) -> "Scalar":
        """Multiplicative inverse via the extended Euclidean algorithm
        modulo Phi_m (irreducible over Q, so every nonzero scalar is a
        unit)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        phim = [Fraction(c) for c in self.field.phim]
        a = [Fraction(c) for c in self.num]
        # r0 = Phi_m, r1 = a; track s only against a.
        r0, r1 = phim, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        g = r0
        if len(g) != 1:
            raise ArithmeticError("cyclotomic modulus not irreducible?")
        inv = [c / g[0] for c in s0]
        # inv * a = 1 mod Phi_m; inv may exceed degree phi - reduce.
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in inv]
        field = self.field
        vec = [0] * field.phi
        for j, cj in enumerate(ints):
            if cj:
                row = field.red[j % field.m] if j >= field.phi else None
                if row is None:
                    vec[j] += cj
                else:
                    for t in range(field.phi):
                        vec[t] += cj * row[t]
        return Scalar._make(field, [v * self.den for v in vec], den)

    def embed(self) -> complex:
        z = 0j
        zpow = self.field.zpow
        for j, c in enumerate(self.num):
            if c:
                z += c * zpow[j]
        return z / self.den

    # -- serialization -----------------------------------------------

    def to_json(self) -> dict:
        return {"den": self.den, "num": list(self.num)}

    @staticmethod
    def from_json(field: _Field, data: dict) -> "Scalar":
        num = [int(v) for v in data["num"]]
        if len(num) != field.phi:
            raise ValueError("coefficient vector has wrong length")
        return Scalar._make(field, num, int(data["den"]))


def _trim(p: list[Fraction]) -> list[Fraction]:
    k = len(p)
    while k > 1 and p[k - 1] == 0:
        k -= 1
    return p[:k]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], a
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = a[k + db] / lead
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return quot, a


@dataclass(frozen=True)
class Params:
    """Parameters of the theory: rank N >= 2 and level K >= 1.

    Fixes q = exp(2*pi*i/(N+K)) and the ambient cyclotomic field
    Q(zeta_m) with m = 2N(N+K)."""

    N: int
    K: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be at least 2")
        if self.K < 1:
            raise ValueError("K must be at least 1")

    @property
    def m(self) -> int:
        return 2 * self.N * (self.N + self.K)

    @property
    def phi(self) -> int:
        return self.field.phi

    @property
    def field(self) -> _Field:
        return _field(self.m)

    # -- scalar constructors -----------------------------------------

    def scalar(self, x: Fraction | int) -> Scalar:
        return Scalar.from_rational(self.field, x)

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def zeta_pow(self, k: int) -> Scalar:
        """zeta^k = q^(k/2N)."""
        return Scalar.zeta_power(self.field, k)

    def q_pow(self, k: int) -> Scalar:
        return self.zeta_pow(2 * self.N * k)

    def q_half_pow(self, k: int) -> Scalar:
        """q^(k/2)."""
        return self.zeta_pow(self.N * k)

    @property
    def q(self) -> Scalar:
        return self.q_pow(1)

    def scalar_from_json(self, data: dict) -> Scalar:
        return Scalar.from_json(self.field, data)


def qint(p: Params, j: int) -> Scalar:
    """Quantum integer [j] = q^((j-1)/2) + q^((j-3)/2) + ... + q^(-(j-1)/2).

    [j] vanishes exactly when N+K divides j; in particular [N+K] = 0 and
    [j] is invertible for 1 <= j < N+K."""
    if j < 0:
        raise ValueError("quantum integer of negative argument")
    acc = p.zero
    for t in range(j):
        acc = acc + p.q_half_pow(j - 1 - 2 * t)
    return acc


def qfact(p: Params, n: int) -> Scalar:
    """Quantum factorial [n]! = [1][2]...[n]."""
    acc = p.one
    for j in range(1, n + 1):
        acc = acc * qint(p, j)
    return acc


def conjugate(x: Scalar) -> Scalar:
    return x.conjugate()


def invert(x: Scalar) -> Scalar:
    return x.inverse()


def embed(x: Scalar) -> complex:
    return x.embed()
