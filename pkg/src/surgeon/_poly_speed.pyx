# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernel for integer Laurent-polynomial arithmetic.

Mirrors surgeon._poly_pure function for function.  Coefficients stay
Python ints (they must not overflow), so the win over the pure module
comes from typed loop indices and reduced interpreter dispatch in the
convolution and Bareiss inner loops.
"""

BACKEND = "speed"

PZERO = (0, [])
PONE = (0, [1])


cpdef tuple pnorm(Py_ssize_t off, list coeffs):
    cdef Py_ssize_t lo = 0
    cdef Py_ssize_t hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    if lo == hi:
        return (0, [])
    return (off + lo, coeffs[lo:hi])


cpdef bint pis_zero(tuple p):
    return not p[1]


cpdef tuple pmono(c, Py_ssize_t e):
    if c == 0:
        return (0, [])
    return (e, [c])


cpdef tuple padd(tuple a, tuple b):
    cdef Py_ssize_t ao = a[0]
    cdef Py_ssize_t bo = b[0]
    cdef list ac = a[1]
    cdef list bc = b[1]
    cdef Py_ssize_t i, off, end
    if not ac:
        return (bo, list(bc))
    if not bc:
        return (ao, list(ac))
    off = ao if ao < bo else bo
    end = ao + len(ac)
    if bo + len(bc) > end:
        end = bo + len(bc)
    cdef list out = [0] * (end - off)
    for i in range(len(ac)):
        out[ao - off + i] = ac[i]
    for i in range(len(bc)):
        out[bo - off + i] = out[bo - off + i] + bc[i]
    return pnorm(off, out)


cpdef tuple pneg(tuple a):
    cdef list ac = a[1]
    cdef Py_ssize_t i
    cdef list out = [0] * len(ac)
    for i in range(len(ac)):
        out[i] = -ac[i]
    return (a[0], out)


cpdef tuple psub(tuple a, tuple b):
    return padd(a, pneg(b))


cpdef tuple pmul(tuple a, tuple b):
    cdef Py_ssize_t ao = a[0]
    cdef Py_ssize_t bo = b[0]
    cdef list ac = a[1]
    cdef list bc = b[1]
    cdef Py_ssize_t i, j, na, nb
    na = len(ac)
    nb = len(bc)
    if na == 0 or nb == 0:
        return (0, [])
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ci = ac[i]
        if ci != 0:
            for j in range(nb):
                cj = bc[j]
                if cj != 0:
                    out[i + j] = out[i + j] + ci * cj
    return pnorm(ao + bo, out)


cpdef tuple pdivexact(tuple a, tuple b):
    cdef Py_ssize_t ao = a[0]
    cdef Py_ssize_t bo = b[0]
    cdef list ac = a[1]
    cdef list bc = b[1]
    cdef Py_ssize_t k, j, nq, nb
    if not bc:
        raise ZeroDivisionError("division by zero polynomial")
    if not ac:
        return (0, [])
    nb = len(bc)
    if len(ac) < nb:
        raise ArithmeticError("inexact polynomial division")
    cdef list rem = list(ac)
    blead = bc[nb - 1]
    nq = len(ac) - nb + 1
    cdef list q = [0] * nq
    for k in range(nq - 1, -1, -1):
        r = rem[k + nb - 1]
        if r == 0:
            continue
        if r % blead:
            raise ArithmeticError("inexact polynomial division")
        f = r // blead
        q[k] = f
        for j in range(nb):
            rem[k + j] = rem[k + j] - f * bc[j]
    for k in range(len(rem)):
        if rem[k] != 0:
            raise ArithmeticError("inexact polynomial division")
    return pnorm(ao - bo, q)


def bareiss_det(rows):
    """Fraction-free determinant over the Laurent ring (see _poly_pure)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, piv, best, sz
    cdef int sign = 1
    if n == 0:
        return (0, [1])
    cdef list m = [list(r) for r in rows]
    cdef tuple prev = (0, [1])
    cdef tuple pkk, mik, num
    cdef list row_i, row_k
    for k in range(n - 1):
        piv = -1
        best = -1
        for i in range(k, n):
            if (<tuple> (<list> m[i])[k])[1]:
                sz = len((<tuple> (<list> m[i])[k])[1])
                if piv < 0 or sz < best:
                    piv = i
                    best = sz
        if piv < 0:
            return (0, [])
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        row_k = <list> m[k]
        pkk = <tuple> row_k[k]
        for i in range(k + 1, n):
            row_i = <list> m[i]
            mik = <tuple> row_i[k]
            for j in range(k + 1, n):
                num = psub(pmul(<tuple> row_i[j], pkk), pmul(mik, <tuple> row_k[j]))
                row_i[j] = pdivexact(num, prev)
            row_i[k] = (0, [])
        prev = pkk
    cdef tuple d = <tuple> (<list> m[n - 1])[n - 1]
    if sign < 0:
        d = pneg(d)
    return d
