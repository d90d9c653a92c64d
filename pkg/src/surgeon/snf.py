"""Exact integer matrices and Smith normal form.

Matrices are plain lists of lists of Python ints, so every entry is
arbitrary precision by construction.  smith_normal_form returns the
diagonal form together with the unimodular transforms, suitable both
for homology computations and for checking U * A * V = D in tests.
"""


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for s in range(k):
            c = ai[s]
            if c:
                bs = b[s]
                for j in range(m):
                    oi[j] += c * bs[j]
    return out


def det(a):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), -1)
        if piv < 0:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _centered_quotient(a, b):
    """q with |a - q*b| <= |b| / 2.

    Centered remainders make every re-pivot at least halve the pivot,
    which keeps intermediate entries small; plain floor division lets
    them blow up on matrices with large entries.
    """
    q, rem = divmod(a, b)
    if 2 * abs(rem) > abs(b):
        q += 1
    return q


def smith_normal_form(a):
    """Diagonalize an integer matrix: returns (d, u, v) with u*a*v = d.

    d is diagonal with nonnegative entries satisfying d1 | d2 | ... and
    u, v are unimodular.  Works for any shape, including empty.

    >>> d, u, v = smith_normal_form([[2, 0], [0, 3]])
    >>> [d[0][0], d[1][1]]
    [1, 6]
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [row[:] for row in a]
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, c):
        # row i += c * row j, mirrored in u
        for s in range(cols):
            m[i][s] += c * m[j][s]
        for s in range(rows):
            u[i][s] += c * u[j][s]

    def col_op(i, j, c):
        # col i += c * col j, mirrored in v
        for s in range(rows):
            m[s][i] += c * m[s][j]
        for s in range(cols):
            v[s][i] += c * v[s][j]

    def row_swap(i, j):
        if i != j:
            m[i], m[j] = m[j], m[i]
            u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        if i == j:
            return
        for s in range(rows):
            m[s][i], m[s][j] = m[s][j], m[s][i]
        for s in range(cols):
            v[s][i], v[s][j] = v[s][j], v[s][i]

    def row_negate(i):
        for s in range(cols):
            m[i][s] = -m[i][s]
        for s in range(rows):
            u[i][s] = -u[i][s]

    r = 0
    while r < rows and r < cols:
        # smallest magnitude nonzero entry of the block becomes the pivot
        piv = None
        for i in range(r, rows):
            for j in range(r, cols):
                if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(r, piv[0])
        col_swap(r, piv[1])
        while True:
            p = m[r][r]
            for i in range(r + 1, rows):
                if m[i][r]:
                    row_op(i, r, -_centered_quotient(m[i][r], p))
            for j in range(r + 1, cols):
                if m[r][j]:
                    col_op(j, r, -_centered_quotient(m[r][j], p))
            # any residue is at most half the pivot; promote the smallest
            best = None
            for i in range(r + 1, rows):
                if m[i][r] and (best is None or abs(m[i][r]) < best[0]):
                    best = (abs(m[i][r]), "row", i)
            for j in range(r + 1, cols):
                if m[r][j] and (best is None or abs(m[r][j]) < best[0]):
                    best = (abs(m[r][j]), "col", j)
            if best is not None:
                if best[1] == "row":
                    row_swap(r, best[2])
                else:
                    col_swap(r, best[2])
                continue
            # row and column are clear; force the pivot to divide the
            # rest of the block so the diagonal comes out chained
            offender = None
            for i in range(r + 1, rows):
                for j in range(r + 1, cols):
                    if m[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(r, offender, 1)
        if m[r][r] < 0:
            row_negate(r)
        r += 1
    return m, u, v


def divisors(a):
    """The diagonal of the Smith form of a, without the transforms."""
    d, _, _ = smith_normal_form(a)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]
