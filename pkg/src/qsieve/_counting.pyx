# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled point-counting kernel; same interface as _counting_py."""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


cdef signed char *_chi_table_c(long q) except NULL:
    cdef signed char *tbl = <signed char *> malloc(q * sizeof(signed char))
    if tbl == NULL:
        raise MemoryError()
    cdef long v, w
    for v in range(q):
        tbl[v] = -1
    tbl[0] = 0
    for w in range(1, q):
        tbl[(w * w) % q] = 1
    return tbl


cdef long _trace_fq_c(long a, long b, long q, signed char *tbl) nogil:
    cdef long s = 0, x
    for x in range(q):
        s += tbl[(x * (((x + a) % q) * x + b)) % q]
    return -s


def trace_fq(long a, long b, long q):
    """Trace of Frobenius over F_q; the curve must be nonsingular mod q."""
    cdef signed char *tbl = _chi_table_c(q)
    cdef long t
    try:
        t = _trace_fq_c(a % q, b % q, q, tbl)
    finally:
        free(tbl)
    return t


cdef signed char *_chi_table_fq2_c(long q, long nr) except NULL:
    cdef signed char *tbl = <signed char *> malloc(q * q * sizeof(signed char))
    if tbl == NULL:
        raise MemoryError()
    cdef long i, w0, w1, s0, s1
    for i in range(q * q):
        tbl[i] = 0
    tbl[0] = 2
    for w0 in range(q):
        for w1 in range(q):
            if w0 == 0 and w1 == 0:
                continue
            s0 = (w0 * w0 + nr * w1 * w1) % q
            s1 = (2 * w0 * w1) % q
            tbl[s0 + q * s1] = 1
    return tbl


cdef long _trace_fq2_c(long a0, long a1, long b0, long b1, long q, long nr,
                       signed char *tbl) nogil:
    cdef long s = 0, x0, x1, u0, u1, w0, w1, v0, v1
    cdef signed char c
    for x0 in range(q):
        for x1 in range(q):
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


def trace_fq2(long a0, long a1, long b0, long b1, long q, long nr):
    """Trace of Frobenius over F_{q^2} = F_q[t]/(t^2 - nr)."""
    cdef signed char *tbl = _chi_table_fq2_c(q, nr)
    cdef long t
    try:
        t = _trace_fq2_c(a0 % q, a1 % q, b0 % q, b1 % q, q, nr % q, tbl)
    finally:
        free(tbl)
    return t


def traceset_ramified(long q):
    """Good traces over all residue pairs at a ramified odd prime.  A = 0
    gives additive reduction (never from a genuine solution) and is dropped."""
    cdef signed char *tbl = _chi_table_c(q)
    cdef long A
    traces = set()
    try:
        for A in range(1, q):
            traces.add(_trace_fq_c((4 * A) % q, (2 * A * A) % q, q, tbl))
    finally:
        free(tbl)
    return tuple(sorted(traces)), False


def traceset_split(long q, long root):
    """Good traces plus a multiplicative flag where sqrt(d) reduces to root."""
    cdef signed char *tbl = _chi_table_c(q)
    cdef long A, B, a, b, e
    cdef bint has_mult = False
    traces = set()
    try:
        for A in range(q):
            for B in range(q):
                if A == 0 and B == 0:
                    continue
                b = (2 * (A * A + root * B)) % q
                e = (A * A - root * B) % q
                if b == 0 or e == 0:
                    has_mult = True
                    continue
                a = (4 * A) % q
                traces.add(_trace_fq_c(a, b, q, tbl))
    finally:
        free(tbl)
    return tuple(sorted(traces)), has_mult


def traceset_inert(long q, long d, long nr):
    """Good traces over F_{q^2} at an inert prime (every pair is good)."""
    cdef signed char *tbl = _chi_table_fq2_c(q, nr)
    cdef long A, B
    traces = set()
    try:
        for A in range(q):
            for B in range(q):
                if A == 0 and B == 0:
                    continue
                traces.add(_trace_fq2_c((4 * A) % q, 0, (2 * A * A) % q,
                                        (2 * B) % q, q, nr, tbl))
    finally:
        free(tbl)
    return tuple(sorted(traces)), False
