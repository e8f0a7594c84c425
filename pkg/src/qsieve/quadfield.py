"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Elements live in the full ring of integers O_K over the integral basis
{1, w} with w = (1+sqrt(d))/2 when d = 1 mod 4 and w = sqrt(d) otherwise,
so fields like Q(sqrt(5)) (whose fundamental unit is (1+sqrt(5))/2) stay
exact.  sqrt(d) always means the positive real root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint


class SplittingType:
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def _squarefree_factors(d: int) -> list[int]:
    fac = factorint(d)
    for p, e in fac.items():
        if e > 1:
            raise ValueError(f"d={d} is not squarefree (divisible by {p}^{e})")
    return sorted(fac)


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt(d)) for squarefree d > 1, with the data used downstream:
    fundamental discriminant, splitting of 2, and the partition of the odd
    ramified primes by residue mod 8."""

    d: int
    disc: int
    two_splitting: str
    ramified_odd_primes: frozenset[int]
    Qi: dict  # i in {1,3,5,7} -> frozenset of primes p | d with p = i mod 8

    # -- element constructors -------------------------------------------------

    @property
    def omega_is_half(self) -> bool:
        return self.d % 4 == 1

    def element(self, x: int, y: int) -> "QuadInt":
        return QuadInt(self, int(x), int(y))

    def zero(self) -> "QuadInt":
        return self.element(0, 0)

    def one(self) -> "QuadInt":
        return self.element(1, 0)

    def sqrt_d(self) -> "QuadInt":
        if self.omega_is_half:
            return self.element(-1, 2)  # sqrt(d) = 2w - 1
        return self.element(0, 1)

    def from_sqrt_coords(self, a, b) -> "QuadInt":
        """Element a + b*sqrt(d) with a, b integers or half-integers giving an
        algebraic integer.  Raises if the pair is not in O_K."""
        a = Fraction(a)
        b = Fraction(b)
        if self.omega_is_half:
            y = 2 * b
            x = a - b
        else:
            y = b
            x = a
        if x.denominator != 1 or y.denominator != 1:
            raise ValueError(f"{a} + {b}*sqrt({self.d}) is not an algebraic integer")
        return self.element(int(x), int(y))

    # -- prime behaviour ------------------------------------------------------

    def splitting(self, q: int) -> str:
        """Splitting type of the rational prime q in O_K."""
        if q == 2:
            return self.two_splitting
        if self.d % q == 0:
            return SplittingType.RAMIFIED
        return SplittingType.SPLIT if pow(self.d, (q - 1) // 2, q) == 1 else SplittingType.INERT

    def __repr__(self) -> str:
        return f"QuadField(d={self.d})"


def make_field(d: int) -> QuadField:
    """Build the field data for squarefree d > 1; rejects bad input."""
    d = int(d)
    if d <= 1:
        raise ValueError(f"d must be > 1, got {d}")
    primes = _squarefree_factors(d)
    odd = [p for p in primes if p != 2]
    qi = {i: frozenset(p for p in odd if p % 8 == i) for i in (1, 3, 5, 7)}
    if d % 8 == 1:
        two = SplittingType.SPLIT
    elif d % 8 == 5:
        two = SplittingType.INERT
    else:
        two = SplittingType.RAMIFIED
    disc = d if d % 4 == 1 else 4 * d
    return QuadField(d=d, disc=disc, two_splitting=two,
                     ramified_odd_primes=frozenset(odd), Qi=qi)


class QuadInt:
    """Algebraic integer x + y*w of O_K; immutable, exact."""

    __slots__ = ("field", "x", "y")

    def __init__(self, field: QuadField, x: int, y: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, *a):
        raise AttributeError("QuadInt is immutable")

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            if other.field.d != self.field.d:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return QuadInt(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(self.field, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.field, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        x1, y1, x2, y2 = self.x, self.y, o.x, o.y
        if self.field.omega_is_half:
            # w^2 = (d-1)/4 + w
            c = (self.field.d - 1) // 4
            return QuadInt(self.field, x1 * x2 + c * y1 * y2,
                           x1 * y2 + y1 * x2 + y1 * y2)
        return QuadInt(self.field, x1 * x2 + self.field.d * y1 * y2,
                       x1 * y2 + y1 * x2)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers leave O_K; invert units explicitly")
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.field.d, self.x, self.y))

    def conjugate(self) -> "QuadInt":
        if self.field.omega_is_half:
            # conj(w) = 1 - w
            return QuadInt(self.field, self.x + self.y, -self.y)
        return QuadInt(self.field, self.x, -self.y)

    def norm(self) -> int:
        if self.field.omega_is_half:
            c = (self.field.d - 1) // 4
            return self.x * self.x + self.x * self.y - c * self.y * self.y
        return self.x * self.x - self.field.d * self.y * self.y

    def trace(self) -> int:
        return 2 * self.x + (self.y if self.field.omega_is_half else 0)

    def sqrt_coords(self) -> tuple[Fraction, Fraction]:
        """(a, b) with self = a + b*sqrt(d); half-integers possible."""
        if self.field.omega_is_half:
            return Fraction(2 * self.x + self.y, 2), Fraction(self.y, 2)
        return Fraction(self.x), Fraction(self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def sign_embeddings(self) -> tuple[int, int]:
        """Signs of the element under sqrt(d) -> +sqrt(d) and -> -sqrt(d)."""
        a, b = self.sqrt_coords()
        return (_sign_a_plus_b_sqrt(a, b, self.field.d),
                _sign_a_plus_b_sqrt(a, -b, self.field.d))

    def is_totally_positive(self) -> bool:
        s1, s2 = self.sign_embeddings()
        return s1 > 0 and s2 > 0

    def exact_sqrt(self):
        """Return g in O_K with g*g = self, or None.  Exact in all sizes."""
        if self.is_zero():
            return self
        n = self.norm()
        if n < 0:
            return None
        s = math.isqrt(n)
        if s * s != n:
            return None
        # self = P + Q*sqrt(d); a candidate root g = (g1 + g2*sqrt(d))/2
        # satisfies g1^2 = 2P +- 2s and g1*g2 = 2Q.
        P, Q = self.sqrt_coords()
        for sgn in (1, -1):
            t = 2 * P + 2 * sgn * s
            if t.denominator != 1 or t < 0:
                continue
            t = int(t)
            g1 = math.isqrt(t)
            if g1 * g1 != t:
                continue
            if g1 == 0:
                if Q != 0:
                    continue
                u = 4 * P / self.field.d
                if u.denominator != 1 or u < 0:
                    continue
                g2 = math.isqrt(int(u))
                if g2 * g2 != int(u):
                    continue
            else:
                g2f = 2 * Q / g1
                if g2f.denominator != 1:
                    continue
                g2 = int(g2f)
            cand = _half_coords_to_element(self.field, g1, g2)
            if cand is not None and cand * cand == self:
                return cand
        return None

    def __repr__(self) -> str:
        a, b = self.sqrt_coords()
        d = self.field.d
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}*sqrt({d})"
        return f"{a} + {b}*sqrt({d})" if b > 0 else f"{a} - {-b}*sqrt({d})"


def _sign_a_plus_b_sqrt(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of a + b*sqrt(d)."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with d*b^2
    lhs, rhs = a * a, d * b * b
    if a > 0:  # b < 0
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


def _half_coords_to_element(field: QuadField, g1: int, g2: int):
    """(g1 + g2*sqrt(d))/2 as a QuadInt if it lies in O_K, else None."""
    if field.omega_is_half:
        if (g1 - g2) % 2:
            return None
        return field.element((g1 - g2) // 2, g2)
    if g1 % 2 or g2 % 2:
        return None
    return field.element(g1 // 2, g2 // 2)


@dataclass(frozen=True)
class FundamentalUnit:
    value: QuadInt
    norm: int
    totally_positive: bool


def _pell_via_continued_fraction(d: int) -> tuple[int, int, int]:
    """Smallest (x, y, n) with x^2 - d*y^2 = n = +-1, x, y > 0, via the
    continued fraction of sqrt(d).  Fundamental unit of Z[sqrt(d)]."""
    a0 = math.isqrt(d)
    P, Q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while True:
        P = a * Q - P
        Q = (d - P * P) // Q
        a = (a0 + P) // Q
        if Q == 1:
            # convergent just before the period closes
            n = h * h - d * k * k
            assert n in (1, -1)
            return h, k, n
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev


def _cube_root_unit(field: QuadField, U: int, V: int, n: int):
    """If (U + V*sqrt(d)) = eps^3 for eps = (a + b*sqrt(d))/2 in O_K with
    norm(eps) = n, return eps, else None.  Uses a^3 - 3*n*a = 2*U."""
    target = 2 * U
    approx = round(abs(target) ** (1.0 / 3.0)) if target else 0
    for a in range(max(1, approx - 2), approx + 3):
        if a * a * a - 3 * n * a == target:
            num = a * a - 4 * n
            if num % field.d:
                continue
            b2 = num // field.d
            b = math.isqrt(b2)
            if b * b != b2:
                continue
            eps = _half_coords_to_element(field, a, b)
            if eps is None:
                continue
            if eps * eps * eps == field.from_sqrt_coords(U, V):
                return eps
    return None


@lru_cache(maxsize=None)
def _fundamental_unit_cached(d: int) -> FundamentalUnit:
    field = make_field(d)
    U, V, n = _pell_via_continued_fraction(d)
    value = field.from_sqrt_coords(U, V)
    if field.omega_is_half:
        # the unit index [O_K^* : Z[sqrt(d)]^*] is 1 or 3
        eps = _cube_root_unit(field, U, V, n)
        if eps is not None:
            value = eps
            n = value.norm()
    assert value.norm() == n and n in (1, -1)
    # normalization: the unit > 1 under sqrt(d) > 0; for norm +1 this is
    # automatically totally positive (its conjugate is its inverse)
    if not _sign_a_plus_b_sqrt(*value.sqrt_coords(), d) > 0:
        value = -value
    return FundamentalUnit(value=value, norm=n,
                           totally_positive=value.is_totally_positive())


def fundamental_unit(field: QuadField) -> FundamentalUnit:
    """Smallest unit > 1 of O_K, from the continued fraction of sqrt(d)
    (plus an exact cube-root step for d = 1 mod 4)."""
    return _fundamental_unit_cached(field.d)


def pell_brute_force(d: int, y_bound: int):
    """Independent oracle: minimal unit > 1 of O_K found by scanning the
    sqrt(d)-coefficient.  Writes candidates as (g1 + g2*sqrt(d))/2 with
    g1^2 - d*g2^2 = +-4 and keeps the first element of O_K that appears
    (g2 ascending, then g1), which is the smallest unit > 1.  None if no
    hit within the bound."""
    field = make_field(d)
    for g2 in range(1, 2 * y_bound + 1):
        for n in (-4, 4):
            t = d * g2 * g2 + n
            if t <= 0:
                continue
            g1 = math.isqrt(t)
            if g1 * g1 != t:
                continue
            cand = _half_coords_to_element(field, g1, g2)
            if cand is not None:
                return cand
    return None


@dataclass(frozen=True)
class PrimeSplitting:
    q: int
    splitting: str
    # generator pairs for the primes above q, as (rational, QuadInt) tuples
    ideal_generators: tuple

    @property
    def residue_degree(self) -> int:
        return 2 if self.splitting == SplittingType.INERT else 1


def sqrt_mod_prime(n: int, q: int) -> int:
    """A square root of n modulo an odd prime q (n must be a QR)."""
    n %= q
    if n == 0:
        return 0
    assert pow(n, (q - 1) // 2, q) == 1, f"{n} is not a square mod {q}"
    if q % 4 == 3:
        return pow(n, (q + 1) // 4, q)
    # Tonelli-Shanks
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1
    m, c, t, r = e, pow(z, s, q), pow(n, s, q), pow(n, (s + 1) // 2, q)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        m, c = i, b * b % q
        t = t * c % q
        r = r * b % q
    return r


def splitting_and_trace_data(field: QuadField, q: int) -> PrimeSplitting:
    """Splitting type of q together with generators of the primes above it."""
    typ = field.splitting(q)
    d = field.d
    if q == 2:
        if typ == SplittingType.INERT:
            gens = ((2, None),)
        elif typ == SplittingType.SPLIT:
            # w = (1+sqrt(d))/2 has minimal poly t^2 - t - (d-1)/4, which
            # factors mod 2 as t(t-1) exactly when d = 1 mod 8
            gens = ((2, field.element(0, 1)), (2, field.element(-1, 1)))
        else:
            g = field.element(1, 1) if d % 4 == 3 else field.element(0, 1)
            gens = ((2, g),)
    elif typ == SplittingType.RAMIFIED:
        gens = ((q, field.sqrt_d()),)
    elif typ == SplittingType.INERT:
        gens = ((q, None),)
    else:
        s = sqrt_mod_prime(d, q)
        gens = ((q, field.sqrt_d() - s), (q, field.sqrt_d() + s))
    return PrimeSplitting(q=q, splitting=typ, ideal_generators=gens)


def residue_mod_ramified_odd(z: QuadInt, p: int) -> int:
    """Image of z in O_K / <p, sqrt(d)> = Z/p for an odd ramified p."""
    if z.field.omega_is_half:
        # w = (1 + sqrt(d))/2 -> (1 + 0) / 2 mod p
        return (z.x + z.y * ((p + 1) // 2)) % p
    return z.x % p
