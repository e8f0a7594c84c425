"""Pure-Python point-counting kernel for y^2 = x^3 + a*x^2 + b*x over F_q
and F_{q^2}.  Mirrors the compiled extension's interface exactly; the
compiled module is preferred at import when available.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def _chi_table(q: int):
    """tbl[v] = +1 if v is a nonzero square mod q, -1 if a non-square, 0 at 0."""
    tbl = [-1] * q
    tbl[0] = 0
    for w in range(1, q):
        tbl[w * w % q] = 1
    return tbl


def trace_fq(a: int, b: int, q: int) -> int:
    """Trace of Frobenius over F_q; the curve must be nonsingular mod q."""
    tbl = _chi_table(q)
    a %= q
    b %= q
    s = 0
    for x in range(q):
        s += tbl[x * ((x + a) * x + b) % q]
    return -s


def _chi_table_fq2(q: int, nr: int):
    """Square indicator on F_{q^2} = F_q[t]/(t^2 - nr), indexed x0 + q*x1."""
    tbl = bytearray(q * q)  # 0 = nonsquare, 1 = square, 2 = zero
    tbl[0] = 2
    for w0 in range(q):
        for w1 in range(q):
            if w0 == 0 and w1 == 0:
                continue
            s0 = (w0 * w0 + nr * w1 * w1) % q
            s1 = 2 * w0 * w1 % q
            tbl[s0 + q * s1] = 1
    return tbl


def trace_fq2(a0: int, a1: int, b0: int, b1: int, q: int, nr: int) -> int:
    """Trace of Frobenius over F_{q^2} for curve coefficients
    a = a0 + a1*t, b = b0 + b1*t."""
    tbl = _chi_table_fq2(q, nr)
    a0 %= q; a1 %= q; b0 %= q; b1 %= q
    s = 0
    for x0 in range(q):
        for x1 in range(q):
            # v = x * ((x + a) * x + b) in F_q[t]/(t^2 - nr)
            u0 = (x0 + a0) % q
            u1 = (x1 + a1) % q
            w0 = (u0 * x0 + nr * u1 * x1 + b0) % q
            w1 = (u0 * x1 + u1 * x0 + b1) % q
            v0 = (w0 * x0 + nr * w1 * x1) % q
            v1 = (w0 * x1 + w1 * x0) % q
            c = tbl[v0 + q * v1]
            if c == 1:
                s += 1
            elif c == 0:
                s -= 1
    return -s


def traceset_ramified(q: int) -> tuple:
    """Good traces over all residue pairs at a ramified odd prime (where the
    curve reduces to y^2 = x^3 + 4A x^2 + 2A^2 x); pairs with A = 0 are
    additive and never arise from genuine solutions, so they are dropped.
    Returns (sorted good traces, has_multiplicative)."""
    tbl = _chi_table(q)
    traces = set()
    for A in range(1, q):
        a = 4 * A % q
        b = 2 * A * A % q
        s = 0
        for x in range(q):
            s += tbl[x * ((x + a) * x + b) % q]
        traces.add(-s)
    return tuple(sorted(traces)), False


def traceset_split(q: int, root: int) -> tuple:
    """Good traces plus multiplicative flag at a prime where sqrt(d) = root."""
    tbl = _chi_table(q)
    traces = set()
    has_mult = False
    for A in range(q):
        for B in range(q):
            if A == 0 and B == 0:
                continue
            b = 2 * (A * A + root * B) % q
            e = (A * A - root * B) % q
            if b == 0 or e == 0:
                has_mult = True
                continue
            a = 4 * A % q
            s = 0
            for x in range(q):
                s += tbl[x * ((x + a) * x + b) % q]
            traces.add(-s)
    return tuple(sorted(traces)), has_mult


def traceset_inert(q: int, d: int, nr: int) -> tuple:
    """Good traces over F_{q^2} at an inert prime (every pair is good)."""
    tbl = _chi_table_fq2(q, nr)
    d %= q
    traces = set()
    for A in range(q):
        for B in range(q):
            if A == 0 and B == 0:
                continue
            a0 = 4 * A % q
            b0 = 2 * A * A % q
            b1 = 2 * B % q
            s = 0
            for x0 in range(q):
                for x1 in range(q):
                    u0 = (x0 + a0) % q
                    w0 = (u0 * x0 + nr * x1 * x1 + b0) % q
                    w1 = (u0 * x1 + x1 * x0 + b1) % q
                    v0 = (w0 * x0 + nr * w1 * x1) % q
                    v1 = (w0 * x1 + w1 * x0) % q
                    c = tbl[v0 + q * v1]
                    if c == 1:
                        s += 1
                    elif c == 0:
                        s -= 1
            traces.add(-s)
    return tuple(sorted(traces)), False
