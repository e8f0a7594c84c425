"""Dense polynomial helpers and fraction-free resultants.

Works over any integral domain whose elements support +, -, * and an exact
division supplied by the caller (plain ints and QuadInts here).  Resultants
go through Bareiss elimination on the Sylvester matrix, so every
intermediate division is exact.
"""

from __future__ import annotations

from .quadfield import QuadInt


def int_div_exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division {a} / {b}")
    return q


def quadint_div_exact(z: QuadInt, w: QuadInt) -> QuadInt:
    nw = w.norm()
    if nw == 0:
        raise ZeroDivisionError("division by zero element")
    num = z * w.conjugate()
    return z.field.element(int_div_exact(num.x, nw), int_div_exact(num.y, nw))


def div_exact_for(x):
    return quadint_div_exact if isinstance(x, QuadInt) else int_div_exact


# polynomials are coefficient lists, constant term first
def ptrim(f):
    while len(f) > 1 and _is_zero(f[-1]):
        f = f[:-1]
    return f


def _is_zero(c):
    return c.is_zero() if isinstance(c, QuadInt) else c == 0


def padd(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        if i < len(f) and i < len(g):
            out.append(f[i] + g[i])
        elif i < len(f):
            out.append(f[i])
        else:
            out.append(g[i])
    return ptrim(out)


def pneg(f):
    return [-c for c in f]


def psub(f, g):
    return padd(f, pneg(g))


def pmul(f, g):
    zero = f[0] - f[0]
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if _is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return ptrim(out)


def pscale(f, c):
    return ptrim([a * c for a in f])


def pderiv(f):
    if len(f) == 1:
        return [f[0] - f[0]]
    return ptrim([f[i] * i for i in range(1, len(f))])


def bareiss_det(rows):
    """Fraction-free determinant; entries are ints or QuadInts."""
    n = len(rows)
    m = [list(r) for r in rows]
    if n == 0:
        raise ValueError("empty matrix")
    div = div_exact_for(m[0][0])
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                zero = m[k][k] - m[k][k]
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else div(num, prev)
            m[i][k] = m[i][k] - m[i][k]
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_resultant(f, g):
    """Res(f, g) for coefficient lists (constant first), via Bareiss."""
    f, g = ptrim(f), ptrim(g)
    n, m = len(f) - 1, len(g) - 1
    if n == 0:
        return f[0] ** m if m >= 0 else f[0]
    if m == 0:
        return g[0] ** n
    zero = f[0] - f[0]
    size = n + m
    rows = []
    frev = list(reversed(f))
    grev = list(reversed(g))
    for i in range(m):
        rows.append([zero] * i + frev + [zero] * (size - i - len(frev)))
    for i in range(n):
        rows.append([zero] * i + grev + [zero] * (size - i - len(grev)))
    return bareiss_det(rows)


def poly_discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    f = ptrim(f)
    n = len(f) - 1
    res = sylvester_resultant(f, pderiv(f))
    div = div_exact_for(f[0])
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d = div(res, f[-1])
    return d if sign == 1 else -d


# division polynomials of y^2 = x^3 + a*x^2 + b*x -------------------------

def psi3_poly(a, b):
    """3-division polynomial 3x^4 + 4a x^3 + 6b x^2 - b^2."""
    one = _one_like(a)
    return [-(b * b), b - b, b * 6, a * 4, one * 3]


def psi5_poly(a, b):
    """5-division polynomial from the standard recurrence:
    psi5 = 16 (x^3+ax^2+bx)^2 (2x^6+4a x^5+10b x^4-10b^2 x^2-4ab^2 x-2b^3)
           - psi3^3."""
    one = _one_like(a)
    zero = one - one
    f = [zero, b, a, one]
    g = [-(b * b * b) * 2, -(a * b * b) * 4, -(b * b) * 10, zero, b * 10, a * 4, one * 2]
    t = pscale(pmul(pmul(f, f), g), one * 16)
    p3 = psi3_poly(a, b)
    return psub(t, pmul(pmul(p3, p3), p3))


def _one_like(a):
    if isinstance(a, QuadInt):
        return a.field.one()
    return 1
