"""Pure-Python kernel for integer Laurent-polynomial arithmetic.

A polynomial is a pair ``(off, coeffs)`` where ``coeffs`` is a list of
ints and the pair represents ``sum(coeffs[i] * t**(off + i))``.  The
normal form has ``coeffs[0] != 0`` and ``coeffs[-1] != 0``; the zero
polynomial is ``(0, [])``.  Coefficients are arbitrary-precision.

The module exists so that surgeon._poly_speed (the compiled twin) can
replace it transparently; both expose the same functions.
"""

BACKEND = "pure"

PZERO = (0, [])
PONE = (0, [1])


def pnorm(off, coeffs):
    """Trim leading/trailing zeros into normal form."""
    lo = 0
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    if lo == hi:
        return (0, [])
    return (off + lo, coeffs[lo:hi])


def pis_zero(p):
    return not p[1]


def pmono(c, e):
    """The monomial c * t**e."""
    if c == 0:
        return (0, [])
    return (e, [c])


def padd(a, b):
    ao, ac = a
    bo, bc = b
    if not ac:
        return (bo, list(bc))
    if not bc:
        return (ao, list(ac))
    off = min(ao, bo)
    end = max(ao + len(ac), bo + len(bc))
    out = [0] * (end - off)
    for i, c in enumerate(ac):
        out[ao - off + i] = c
    for i, c in enumerate(bc):
        out[bo - off + i] += c
    return pnorm(off, out)


def pneg(a):
    return (a[0], [-c for c in a[1]])


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    ao, ac = a
    bo, bc = b
    if not ac or not bc:
        return (0, [])
    out = [0] * (len(ac) + len(bc) - 1)
    for i, ci in enumerate(ac):
        if ci:
            for j, cj in enumerate(bc):
                if cj:
                    out[i + j] += ci * cj
    return pnorm(ao + bo, out)


def pdivexact(a, b):
    """Quotient a / b, assuming the division is exact over Z[t, 1/t].

    Raises ArithmeticError when it is not.
    """
    if not b[1]:
        raise ZeroDivisionError("division by zero polynomial")
    if not a[1]:
        return (0, [])
    ao, ac = a
    bo, bc = b
    if len(ac) < len(bc):
        raise ArithmeticError("inexact polynomial division")
    rem = list(ac)
    blead = bc[-1]
    nq = len(ac) - len(bc) + 1
    q = [0] * nq
    for k in range(nq - 1, -1, -1):
        r = rem[k + len(bc) - 1]
        if r == 0:
            continue
        if r % blead:
            raise ArithmeticError("inexact polynomial division")
        f = r // blead
        q[k] = f
        for j, cj in enumerate(bc):
            rem[k + j] -= f * cj
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return pnorm(ao - bo, q)


def _psize(p):
    return len(p[1])


def bareiss_det(rows):
    """Determinant of a square matrix of polynomials, fraction-free.

    ``rows`` is a list of lists of (off, coeffs) pairs.  The Bareiss
    update keeps every intermediate entry in the ring, dividing by the
    previous pivot at each step (the division is exact by Sylvester's
    identity).  Rows are swapped when a pivot vanishes; among the
    candidates the shortest polynomial is preferred to slow growth.
    """
    n = len(rows)
    if n == 0:
        return (0, [1])
    m = [list(r) for r in rows]
    sign = 1
    prev = (0, [1])
    for k in range(n - 1):
        piv = -1
        best = -1
        for i in range(k, n):
            if m[i][k][1]:
                sz = _psize(m[i][k])
                if piv < 0 or sz < best:
                    piv, best = i, sz
        if piv < 0:
            return (0, [])
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                num = psub(pmul(row_i[j], pkk), pmul(mik, row_k[j]))
                row_i[j] = pdivexact(num, prev)
            row_i[k] = (0, [])
        prev = pkk
    d = m[n - 1][n - 1]
    if sign < 0:
        d = pneg(d)
    return d
