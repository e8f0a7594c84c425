"""The Frey curve y^2 = x^3 + 4A x^2 + 2(A^2 + B sqrt(d)) x attached to a
candidate solution of x^4 - d y^2 = z^p: reductions and Frobenius traces at
odd primes, the level/Nebentypus recipe after lowering, the 3- and
5-division-polynomial discriminant identities, and the conjugation isogeny.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from . import counting
from .hecke import NebentypusSpec, build_nebentypus
from .polys import (
    padd,
    pmul,
    poly_discriminant,
    pscale,
    psi3_poly,
    psi5_poly,
    psub,
    ptrim,
    quadint_div_exact,
)
from .quadfield import QuadField, QuadInt, SplittingType, make_field, sqrt_mod_prime

GOOD = "good"
MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


@dataclass(frozen=True)
class FreyCurve:
    A: int
    B: int
    field: QuadField
    a2: QuadInt  # 4A
    a4: QuadInt  # 2(A^2 + B sqrt(d))

    def discriminant(self) -> QuadInt:
        # 16 b^2 (a^2 - 4b) = 2^9 (A^2 + rB)^2 (A^2 - rB)
        b = self.a4
        e = self.a2 * self.a2 - 4 * b
        return 16 * b * b * e

    def j_invariant(self) -> tuple[Fraction, Fraction]:
        """j as (rational part, sqrt(d) coefficient) over Q."""
        a2s = self.a2 * self.a2
        c4 = 16 * (a2s - 3 * self.a4)
        delta = self.discriminant()
        num = c4 * c4 * c4
        nd = delta.norm()
        z = num * delta.conjugate()  # j = z / norm(delta)
        zx, zy = z.sqrt_coords()
        return (zx / nd, zy / nd)


def build_curve(A: int, B: int, field: QuadField) -> FreyCurve:
    A, B = int(A), int(B)
    if (A, B) == (0, 0) or math.gcd(A, B) != 1:
        raise ValueError(f"(A, B) = ({A}, {B}) is not a primitive pair")
    a2 = field.element(4 * A, 0)
    a4 = field.from_sqrt_coords(2 * A * A, 2 * B)
    curve = FreyCurve(A=A, B=B, field=field, a2=a2, a4=a4)
    delta = curve.discriminant()
    assert delta.norm() == (1 << 18) * (A ** 4 - field.d * B * B) ** 3
    return curve


@dataclass(frozen=True)
class LocalTrace:
    prime: str        # human-readable label of the prime above q
    reduction: str
    a: int | None     # trace of Frobenius when reduction is good
    residue_degree: int


@dataclass(frozen=True)
class TraceResult:
    q: int
    splitting: str
    entries: tuple  # LocalTrace per prime above q

    def hasse_ok(self) -> bool:
        return all(e.reduction != GOOD or e.a * e.a <= 4 * self.q ** e.residue_degree
                   for e in self.entries)


def reduce_and_trace(curve: FreyCurve, q: int) -> TraceResult:
    """Reduction type and trace at every prime above the odd prime q."""
    if q == 2 or q < 3:
        raise ValueError("only odd primes are supported")
    field = curve.field
    typ = field.splitting(q)
    A, B = curve.A % q, curve.B % q
    entries = []
    if typ == SplittingType.RAMIFIED:
        entries.append(_reduce_at_root(A, B, 0, q, f"<{q}, sqrt({field.d})>"))
    elif typ == SplittingType.SPLIT:
        s = sqrt_mod_prime(field.d, q)
        for root in (s, (q - s) % q):
            entries.append(_reduce_at_root(A, B, root, q,
                                           f"<{q}, sqrt({field.d})-{root}>"))
    else:
        if A == 0 and B == 0:
            entries.append(LocalTrace(prime=f"({q})", reduction=ADDITIVE,
                                      a=None, residue_degree=2))
        else:
            nr = counting.least_nonresidue(q)
            a = counting.trace_fq2(4 * A, 0, 2 * A * A, 2 * B, q, nr)
            entries.append(LocalTrace(prime=f"({q})", reduction=GOOD, a=a,
                                      residue_degree=2))
    return TraceResult(q=q, splitting=typ, entries=tuple(entries))


def _reduce_at_root(A: int, B: int, root: int, q: int, label: str) -> LocalTrace:
    b = 2 * (A * A + root * B) % q
    e = (A * A - root * B) % q
    a = 4 * A % q
    if b == 0 and a == 0:
        return LocalTrace(prime=label, reduction=ADDITIVE, a=None, residue_degree=1)
    if b == 0 or e == 0:
        return LocalTrace(prime=label, reduction=MULTIPLICATIVE, a=None,
                          residue_degree=1)
    return LocalTrace(prime=label, reduction=GOOD,
                      a=counting.trace_fq(a, b, q), residue_degree=1)


@dataclass(frozen=True)
class TraceSet:
    q: int
    splitting: str
    residue_degree: int
    good: tuple          # sorted distinct good traces over all residue pairs
    has_multiplicative: bool


@lru_cache(maxsize=None)
def _trace_set_cached(d: int, q: int) -> TraceSet:
    field = make_field(d)
    typ = field.splitting(q)
    if typ == SplittingType.RAMIFIED:
        good, mult = counting.traceset_ramified(q)
        f = 1
    elif typ == SplittingType.SPLIT:
        good, mult = counting.traceset_split(q, sqrt_mod_prime(d, q))
        f = 1
    else:
        good, mult = counting.traceset_inert(q, d, counting.least_nonresidue(q))
        f = 2
    return TraceSet(q=q, splitting=typ, residue_degree=f,
                    good=good, has_multiplicative=mult)


def trace_set(field: QuadField, q: int) -> TraceSet:
    """All possible local trace data of Frey curves at q, by enumerating the
    residue pairs (A, B) mod q (additive pairs dropped, multiplicative
    collapsed to a flag).  Ramified q are allowed and are in fact the best
    sieve inputs (the curve always has good reduction there)."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be an odd prime")
    return _trace_set_cached(field.d, q)


# ---------------------------------------------------------------------------
# level recipe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelRecipe:
    d: int
    odd_part: int
    odd_part_factored: dict
    e_options: tuple
    levels: tuple
    nebentypus: NebentypusSpec
    c_even: bool | None
    remark_flag: str | None  # 5-torsion remark for d in {3, 6}; d = 2 conjectural


def level_recipe(field: QuadField, c_even: bool | None = None) -> LevelRecipe:
    """Post-lowering level 2^e * prod_{Q3} q * prod_{Q1 u Q5 u Q7} q^2 with
    the e options determined by the splitting of 2; when stated, the parity
    of C picks the small split option."""
    d = field.d
    remark = None
    if not any(p > 3 for p in field.ramified_odd_primes):
        if d in (3, 6):
            remark = "descent via 5-torsion instead of 3-torsion"
        elif d == 2:
            remark = "conjectural: no order-two inertia choice is available"
        else:
            raise ValueError(f"d={d}: no prime > 3 ramifies and no remark applies")
    fac = {}
    for p in sorted(field.Qi[3]):
        fac[p] = 1
    for p in sorted(field.Qi[1] | field.Qi[5] | field.Qi[7]):
        fac[p] = 2
    odd_part = prod(p ** e for p, e in fac.items())
    if field.two_splitting == SplittingType.SPLIT:
        e_options = (1, 8)
    elif field.two_splitting == SplittingType.INERT:
        e_options = (8,)
    elif d % 2 == 1:
        e_options = (6, 7)
    else:
        e_options = (8, 9)
    if c_even is not None and len(e_options) > 1 and field.two_splitting == SplittingType.SPLIT:
        e_options = (min(e_options),) if c_even else (max(e_options),)
    levels = tuple((1 << e) * odd_part for e in e_options)
    return LevelRecipe(d=d, odd_part=odd_part, odd_part_factored=fac,
                       e_options=e_options, levels=levels,
                       nebentypus=build_nebentypus(field), c_even=c_even,
                       remark_flag=remark)


# ---------------------------------------------------------------------------
# division-polynomial identities and the conjugation isogeny
# ---------------------------------------------------------------------------

def division_poly_constant(curve: FreyCurve, ell: int) -> QuadInt:
    """disc(psi_ell) divided by its predicted monomial in b and a^2-4b;
    equals -3 for ell = 3 and 5 for ell = 5, exactly."""
    field = curve.field
    a, b = curve.a2, curve.a4
    e = a * a - 4 * b
    if b.is_zero() or e.is_zero():
        raise ValueError("degenerate curve: b = 0 or a^2 = 4b")
    if ell == 3:
        # disc(psi3) = -3 * 2^8 * 3^2 * b^4 * (a^2-4b)^2 identically; with
        # bbar = (a^2-4b)/4 this is 2^12 * 3^2 * b^4 * bbar^2
        disc = poly_discriminant(psi3_poly(a, b))
        den = (field.element(2, 0) ** 8) * (field.element(3, 0) ** 2) * b ** 4 * e ** 2
    elif ell == 5:
        disc = poly_discriminant(psi5_poly(a, b))
        den = (field.element(2, 0) ** 88) * (field.element(5, 0) ** 10) * b ** 44 * e ** 22
    else:
        raise ValueError("ell must be 3 or 5")
    return quadint_div_exact(disc, den)


def isogeny_identity_check(curve: FreyCurve) -> bool:
    """Checks, as a polynomial identity modulo the curve equation, that
    (x, y) -> (-y^2/2x^2, y(2A^2 + 2B sqrt(d) - x^2)/(2 sqrt(-2) x^2)) lands
    on the conjugate curve y^2 = x^3 + 4A x^2 + 2(A^2 - B sqrt(d)) x.
    Clearing denominators turns this into
    x^2 (c - x^2)^2 = f^2 - 8A x^2 f + 8 (A^2 - B sqrt(d)) x^4
    with c = 2(A^2 + B sqrt(d)) and f = x^3 + 4A x^2 + c x."""
    field = curve.field
    one = field.one()
    zero = field.zero()
    c = curve.a4
    cconj = c.conjugate()
    f = [zero, c, curve.a2, one]
    lhs = pmul([zero, zero, one], pmul([c, zero, -one], [c, zero, -one]))
    rhs = psub(pmul(f, f), pscale(pmul([zero, zero, one], f), field.element(8 * curve.A, 0)))
    rhs = padd(rhs, pscale([zero, zero, zero, zero, one], 4 * cconj))
    return ptrim(psub(lhs, rhs)) == [zero]
