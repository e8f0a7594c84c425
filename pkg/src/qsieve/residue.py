"""Finite quotients of O_K at small moduli: rational 2^k, powers of a prime
above 2, and odd ramified primes.

Everything is enumerated exhaustively (the largest ring used anywhere has
2^8 elements), and generator decompositions are found by searching the full
exponent box after verifying that the proposed generators really do generate
the unit group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadfield import QuadField, QuadInt, SplittingType, residue_mod_ramified_odd, splitting_and_trace_data


@dataclass(frozen=True)
class ExponentVector:
    exponents: tuple

    def __iter__(self):
        return iter(self.exponents)


class NotGeneratedError(ValueError):
    """The proposed generators span a proper subgroup of the units."""


# ---------------------------------------------------------------------------
# ideal lattices (rank-2 Z-modules in O_K coordinates)
# ---------------------------------------------------------------------------

def hnf_from_vectors(vectors):
    """Upper-triangular HNF basis ((a, 0), (b, c)) of the Z-span of the
    given (x, y) vectors; requires full rank."""
    vecs = [(int(x), int(y)) for x, y in vectors if (x, y) != (0, 0)]
    c = 0
    comb = (0, 0)
    for v in vecs:
        if v[1] == 0:
            continue
        if c == 0:
            c, comb = abs(v[1]), (v[0] if v[1] > 0 else -v[0], abs(v[1]))
        else:
            g, s, t = _xgcd(c, v[1])
            comb = (s * comb[0] + t * v[0], g)
            c = g
    xs = []
    for v in vecs:
        if c:
            q = v[1] // c
            xs.append(v[0] - q * comb[0])
        else:
            xs.append(v[0])
    a = 0
    for x in xs:
        a = math.gcd(a, x)
    if a == 0 or c == 0:
        raise ValueError("lattice not of full rank")
    b = comb[0] % a
    return a, b, c


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def ideal_lattice(field: QuadField, gens):
    """HNF lattice of the O_K-ideal generated by `gens` (ints or QuadInts)."""
    vecs = []
    omega = field.element(0, 1)
    for g in gens:
        z = field.element(g, 0) if isinstance(g, int) else g
        vecs.append((z.x, z.y))
        zw = z * omega
        vecs.append((zw.x, zw.y))
    return hnf_from_vectors(vecs)


def lattice_contains(lat, x, y) -> bool:
    a, b, c = lat
    if y % c:
        return False
    return (x - (y // c) * b) % a == 0


def lattice_multiply(field: QuadField, lat1, lat2):
    """HNF of the product ideal given two ideal lattices."""
    a1, b1, c1 = lat1
    a2, b2, c2 = lat2
    basis1 = [field.element(a1, 0), field.element(b1, c1)]
    basis2 = [field.element(a2, 0), field.element(b2, c2)]
    vecs = []
    omega = field.element(0, 1)
    for u in basis1:
        for v in basis2:
            z = u * v
            vecs.append((z.x, z.y))
            zw = z * omega
            vecs.append((zw.x, zw.y))
    return hnf_from_vectors(vecs)


def prime_above_two_lattice(field: QuadField):
    data = splitting_and_trace_data(field, 2)
    gens = []
    for rat, g in data.ideal_generators[:1]:
        gens.append(rat)
        if g is not None:
            gens.append(g)
    return ideal_lattice(field, gens)


def valuation_at_prime(field: QuadField, prime_lat, z: QuadInt, cap: int = 12) -> int:
    """v_p(z) computed by membership in successive ideal powers (z != 0)."""
    if z.is_zero():
        raise ValueError("valuation of zero")
    power = prime_lat
    v = 0
    while v < cap:
        if not lattice_contains(power, z.x, z.y):
            return v
        v += 1
        power = lattice_multiply(field, power, prime_lat)
    return v


# ---------------------------------------------------------------------------
# the rings
# ---------------------------------------------------------------------------

class Mod2Ring:
    """Z[s]/(s^2 - w1*s - w0, 2^k): covers O_K/2^k for every field (s is the
    integral-basis generator) and the class rings Z[sqrt(dbar)]/2^k used in
    the unit/genus tables, where only dbar mod 2^k matters."""

    def __init__(self, w0: int, w1: int, k: int, dbar_mod=None, label=""):
        self.w0 = w0 % (1 << k)
        self.w1 = w1 % 2  # 0 for sqrt-basis, 1 for (1+sqrt d)/2-basis
        self.k = k
        self.M = 1 << k
        self.dbar_mod = dbar_mod  # set for sqrt-basis rings: s^2 = dbar
        self.label = label
        self._units = None

    # elements are plain pairs (x, y) with 0 <= x, y < M
    def reduce(self, el):
        return (el[0] % self.M, el[1] % self.M)

    def one(self):
        return (1, 0)

    def neg(self, el):
        return self.reduce((-el[0], -el[1]))

    def mul(self, e1, e2):
        x1, y1 = e1
        x2, y2 = e2
        yy = y1 * y2
        return ((x1 * x2 + self.w0 * yy) % self.M,
                (x1 * y2 + y1 * x2 + self.w1 * yy) % self.M)

    def pow(self, el, n: int):
        r = self.one()
        b = el
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def norm(self, el) -> int:
        """norm mod 2^k (well-defined on residues)."""
        x, y = el
        return (x * x + self.w1 * x * y - self.w0 * y * y) % self.M

    def is_unit(self, el) -> bool:
        return self.norm(el) % 2 == 1

    def elements(self):
        for x in range(self.M):
            for y in range(self.M):
                yield (x, y)

    def units(self):
        if self._units is None:
            self._units = [e for e in self.elements() if self.is_unit(e)]
        return self._units

    @property
    def unit_count(self) -> int:
        return len(self.units())

    def order(self, u) -> int:
        if not self.is_unit(u):
            raise ValueError("not a unit")
        n = 1
        acc = u
        while acc != self.one():
            acc = self.mul(acc, u)
            n += 1
            if n > 4 * self.M * self.M:
                raise RuntimeError("order runaway")
        return n

    def val2_is_one(self, el) -> bool:
        """v_p2(el) == 1 in a ring where 2 ramifies (sqrt-basis only)."""
        if self.dbar_mod is None:
            raise ValueError("valuation rule needs a sqrt-basis ring")
        x, y = el
        if self.dbar_mod % 2 == 1:
            return x % 2 == 1 and y % 2 == 1
        return x % 2 == 0 and y % 2 == 1

    def embed(self, z: QuadInt):
        return self.reduce((z.x, z.y))

    def embed_int(self, n: int):
        return self.reduce((n, 0))


def class_ring(dbar: int, k: int = 4) -> Mod2Ring:
    """Z[sqrt(dbar)]/2^k with dbar taken mod 2^k (ring depends only on it)."""
    return Mod2Ring(w0=dbar, w1=0, k=k, dbar_mod=dbar % (1 << k),
                    label=f"Z[sqrt({dbar})]/{1 << k}")


def field_mod2_ring(field: QuadField, k: int) -> Mod2Ring:
    """O_K / 2^k over the integral basis."""
    if field.omega_is_half:
        return Mod2Ring(w0=(field.d - 1) // 4, w1=1, k=k,
                        label=f"O({field.d})/2^{k}")
    return Mod2Ring(w0=field.d, w1=0, k=k, dbar_mod=field.d % (1 << k),
                    label=f"O({field.d})/2^{k}")


class QuotientByIdealRing:
    """O_K / p^k for p a prime above 2, via the HNF lattice of p^k."""

    def __init__(self, field: QuadField, k: int):
        self.field = field
        self.k = k
        self.prime_lat = prime_above_two_lattice(field)
        lat = self.prime_lat
        for _ in range(k - 1):
            lat = lattice_multiply(field, self.prime_lat, lat)
        self.lat = lat
        self.a, self.b, self.c = lat
        self._units = None

    def reduce(self, el):
        x, y = el
        ym = y % self.c
        x = (x - ((y - ym) // self.c) * self.b) % self.a
        return (x, ym)

    def one(self):
        return self.reduce((1, 0))

    def neg(self, el):
        return self.reduce((-el[0], -el[1]))

    def mul(self, e1, e2):
        z = self.field.element(*e1) * self.field.element(*e2)
        return self.reduce((z.x, z.y))

    def pow(self, el, n: int):
        r = self.one()
        b = el
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def norm(self, el) -> int:
        return self.field.element(*el).norm() % (1 << self.k)

    def is_unit(self, el) -> bool:
        x, y = el
        return not lattice_contains(self.prime_lat, x, y)

    def elements(self):
        for x in range(self.a):
            for y in range(self.c):
                yield (x, y)

    def units(self):
        if self._units is None:
            self._units = [e for e in self.elements() if self.is_unit(e)]
        return self._units

    @property
    def unit_count(self):
        return len(self.units())

    def order(self, u) -> int:
        n = 1
        acc = u
        while acc != self.one():
            acc = self.mul(acc, u)
            n += 1
            if n > 4 * self.a * self.c:
                raise RuntimeError("order runaway")
        return n

    def embed(self, z: QuadInt):
        return self.reduce((z.x, z.y))

    def embed_int(self, n: int):
        return self.reduce((n, 0))


class OddRamifiedRing:
    """O_K / <p, sqrt(d)> = Z/p for an odd ramified prime p."""

    def __init__(self, field: QuadField, p: int):
        if p % 2 == 0 or field.d % p != 0:
            raise ValueError(f"{p} is not an odd ramified prime of d={field.d}")
        self.field = field
        self.p = p

    def reduce(self, el):
        return el % self.p

    def one(self):
        return 1

    def neg(self, el):
        return (-el) % self.p

    def mul(self, e1, e2):
        return (e1 * e2) % self.p

    def pow(self, el, n):
        return pow(el, n, self.p)

    def norm(self, el):
        return el % self.p

    def is_unit(self, el):
        return el % self.p != 0

    def elements(self):
        return range(self.p)

    def units(self):
        return list(range(1, self.p))

    @property
    def unit_count(self):
        return self.p - 1

    def order(self, u):
        n = 1
        acc = u
        while acc != 1:
            acc = acc * u % self.p
            n += 1
        return n

    def embed(self, z: QuadInt):
        return residue_mod_ramified_odd(z, self.p)

    def embed_int(self, n: int):
        return n % self.p


def build_ring(field: QuadField, modulus):
    """Quotient ring for a supported modulus descriptor:

    ("2k", k)     O_K / 2^k
    ("p2k", k)    O_K / p^k for p the/a prime above 2
    ("oddram", p) O_K / p for an odd ramified prime
    """
    kind, arg = modulus
    if kind == "2k":
        return field_mod2_ring(field, arg)
    if kind == "p2k":
        if field.two_splitting == SplittingType.INERT:
            return field_mod2_ring(field, arg)  # p = (2)
        return QuotientByIdealRing(field, arg)
    if kind == "oddram":
        return OddRamifiedRing(field, arg)
    raise ValueError(f"unsupported modulus descriptor {modulus!r}")


# ---------------------------------------------------------------------------
# decomposition over generators
# ---------------------------------------------------------------------------

def generator_closure(ring, generators):
    """Map element -> exponent vector over the generators (first found in
    lexicographic order of exponents), by full box enumeration."""
    orders = [ring.order(g) for g in generators]
    table = {}

    def rec(i, acc, vec):
        if i == len(generators):
            if acc not in table:
                table[acc] = tuple(vec)
            return
        g = generators[i]
        cur = acc
        for e in range(orders[i]):
            rec(i + 1, cur, vec + [e])
            cur = ring.mul(cur, g)

    rec(0, ring.one(), [])
    return table, orders


def decompose(ring, u, generators) -> ExponentVector:
    """Exponents (e_i) with u = prod g_i^e_i, after verifying the generators
    span the whole unit group; raises NotGeneratedError otherwise."""
    u = ring.reduce(u) if isinstance(u, tuple) else u
    table, _ = generator_closure(ring, generators)
    if len(table) != ring.unit_count:
        raise NotGeneratedError(
            f"generators span {len(table)} of {ring.unit_count} units")
    if u not in table:
        raise ValueError("element is not a unit of the ring")
    return ExponentVector(table[u])


# ---------------------------------------------------------------------------
# norm classes
# ---------------------------------------------------------------------------

NORM_FORM_PLAIN = "n = norm(alpha)"
NORM_FORM_DOUBLE = "2n = norm(alpha)"


def norm_classes_with_constraint(ring: Mod2Ring, form: str) -> frozenset:
    """Residues n mod 8 attainable as norm(alpha) (odd alpha) or as
    norm(alpha)/2 over alpha of valuation one, in a mod-2^k ring (k >= 4)."""
    if not isinstance(ring, Mod2Ring) or ring.k < 4:
        raise ValueError("norm classes need a 2^k ring with k >= 4")
    out = set()
    for el in ring.elements():
        nm = ring.norm(el)
        if form == NORM_FORM_PLAIN:
            if nm % 2 == 1:
                out.add(nm % 8)
        elif form == NORM_FORM_DOUBLE:
            if nm % 4 == 2:
                out.add((nm // 2) % 8)
        else:
            raise ValueError(f"unknown norm form {form!r}")
    return frozenset(out)
