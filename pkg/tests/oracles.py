"""Independent reference computations used to freeze and cross-check values.

Nothing here imports the elimination or inertia kernels under test; matrices
are plain nested lists of ``fractions.Fraction`` / ``GaussianRational``.
"""

from fractions import Fraction

from hexpansive.scalars import GaussianRational as G


def naive_rref(rows):
    """Textbook Gauss-Jordan over the field, pivot = first nonzero in column."""
    a = [list(r) for r in rows]
    n = len(a)
    m = len(a[0]) if a else 0
    r = 0
    pivots = []
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if a[i][c]), None)
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        d = a[r][c]
        a[r] = [x / d for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def naive_rank(rows):
    return len(naive_rref(rows)[1]) if rows else 0


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), G(0)) for j in range(len(b[0]))] for i in range(len(a))]


def charpoly(rows):
    """Faddeev-LeVerrier: coefficients ``c[0..n]`` of det(xI - M), c[n] = 1."""
    n = len(rows)
    m = [[x if isinstance(x, G) else G(x) for x in r] for r in rows]
    c = [G(0)] * (n + 1)
    c[n] = G(1)
    mk = [[G(0)] * n for _ in range(n)]
    eye = [[G(1) if i == j else G(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prev = [[mk[i][j] + c[n - k + 1] * eye[i][j] for j in range(n)] for i in range(n)]
        mk = matmul(m, prev)
        tr = sum((mk[i][i] for i in range(n)), G(0))
        c[n - k] = tr * Fraction(-1, k)
    return c


def _sign_changes(seq):
    nz = [x for x in seq if x != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def charpoly_inertia(rows):
    """Inertia from the characteristic polynomial of a Hermitian matrix.

    All roots are real, so Descartes' rule of signs is exact: positive roots
    equal the sign changes of the coefficients, negative roots those of
    p(-x), and the zero root multiplicity is the lowest nonzero degree.
    """
    n = len(rows)
    c = charpoly(rows)
    assert all(z.im == 0 for z in c)
    coeffs = [z.re for z in c]
    zero = next(i for i, x in enumerate(coeffs) if x != 0)
    pos = _sign_changes(coeffs)
    neg = _sign_changes([x * (-1) ** i for i, x in enumerate(coeffs)])
    assert pos + neg + zero == n
    return pos, neg, zero
