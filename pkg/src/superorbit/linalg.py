"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of scalars (see scalar.Q); all routines
are fraction-free in spirit but happily divide, since every scalar is an
exact rational.  Row spaces are canonicalized by reduced row echelon form,
so subspace equality is literal row equality.
"""

from .scalar import ONE, Q, ZERO


def zeros(rows: int, cols: int):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_copy(a):
    return [list(row) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            ait = ai[t]
            if ait == 0:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j] != 0:
                    oi[j] += ait * bt[j]
    return out


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j] != 0), ZERO) for row in a]


def vec_mat(v, a):
    """Row vector times matrix: (v @ a)_j = sum_i v_i a[i][j]."""
    if not a:
        return []
    out = [ZERO] * len(a[0])
    for i, vi in enumerate(v):
        if vi == 0:
            continue
        row = a[i]
        for j in range(len(out)):
            if row[j] != 0:
                out[j] += vi * row[j]
    return out


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a != 0 and b != 0), ZERO)


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns (rows, pivots): zero rows dropped, pivot entries 1, pivot
    columns cleared above and below, rows ordered by pivot column.  The
    result is the canonical basis of the row space.
    """
    m = [list(r) for r in rows if not is_zero_vec(r)]
    if not m:
        return [], []
    n = ncols if ncols is not None else len(m[0])
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    m = [row for row in m[:r]]
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[0])


def reduce_vector(v, rows, pivots):
    """Residual of v after elimination by an rref basis."""
    out = list(v)
    for row, p in zip(rows, pivots):
        f = out[p]
        if f != 0:
            out = [a - f * b for a, b in zip(out, row)]
    return out


def coordinates_in_rref(v, rows, pivots):
    """Coordinates of v in the rref row basis, or None if v is outside."""
    coeffs = [v[p] for p in pivots]
    res = list(v)
    for coef, row in zip(coeffs, rows):
        if coef != 0:
            res = [a - coef * b for a, b in zip(res, row)]
    if not is_zero_vec(res):
        return None
    return coeffs


def kernel(a, ncols=None):
    """Canonical basis of the right null space {x : a @ x = 0}."""
    if not a:
        if ncols is None:
            return []
        return identity(ncols)
    n = ncols if ncols is not None else len(a[0])
    rows, pivots = rref(a, n)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for row, p in zip(rows, pivots):
            if row[free] != 0:
                v[p] = -row[free]
        basis.append(v)
    return rref(basis, n)[0]


def solve(a, b):
    """One exact solution of a @ x = b (free variables 0), or None."""
    if not a:
        return None
    n = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    rows, pivots = rref(aug, n + 1)
    x = [ZERO] * n
    for row, p in zip(rows, pivots):
        if p == n:
            return None
        x[p] = row[n]
    return x


def congruence_diagonalize(g):
    """Simultaneous row/column reduction of a symmetric matrix.

    Returns (p, d) with p.T @ g @ p == diag(d), exactly.  Zero diagonal
    pivots with a nonzero residual row are repaired by adding another
    basis vector (works in characteristic 0); fully zero rows yield d_i=0.
    """
    n = len(g)
    a = mat_copy(g)
    p = identity(n)

    def add_col(i, j, f):
        # column op: col_i += f*col_j applied congruently, p updated
        for r in range(n):
            a[r][i] += f * a[r][j]
        for r in range(n):
            a[i][r] += f * a[j][r]
        for r in range(n):
            p[r][i] += f * p[r][j]

    def swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for i in range(n):
        if a[i][i] == 0:
            pivot = None
            for j in range(i + 1, n):
                if a[j][j] != 0:
                    pivot = j
                    break
            if pivot is not None:
                swap(i, pivot)
            else:
                off = None
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        off = j
                        break
                if off is None:
                    continue
                # diag is all zero here, so this makes a[i][i] = 2*a[i][off] != 0
                add_col(i, off, ONE)
        piv = a[i][i]
        for j in range(i + 1, n):
            if a[i][j] != 0:
                add_col(j, i, -a[i][j] / piv)
    d = [a[i][i] for i in range(n)]
    return p, d


def sign_verdict(d):
    """Classify a diagonalized symmetric form by the signs of d."""
    pos = any(x > 0 for x in d)
    neg = any(x < 0 for x in d)
    zero = any(x == 0 for x in d)
    if not pos and not neg:
        return "zero"
    if pos and neg:
        return "indefinite"
    if pos:
        return "positive_definite" if not zero else "positive_semidefinite"
    return "negative_semidefinite"


def intersect_rowspaces(rows_a, rows_b, n):
    """Canonical basis of rowspace(a) ∩ rowspace(b) in ambient dimension n."""
    ann_a = kernel(rows_a, n)
    ann_b = kernel(rows_b, n)
    return kernel(ann_a + ann_b, n)


def gauss_rational_inverse(a):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(a)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rows]
