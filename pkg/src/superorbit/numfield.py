"""Exact multiquadratic coefficient field.

Clifford modules need square roots of positive rationals and a formal
imaginary unit, but never numerics.  Elements here live in
Q(i, sqrt(p_1), sqrt(p_2), ...) for the primes that actually occur: a
dictionary from square-free prime monomials (frozensets of primes) to
Gaussian-rational coefficients.  sqrt(q) of any positive rational is the
rational multiple of the monomial of primes with odd exponent in q, so
sqrt is total and products reduce eagerly.  Distinct-prime monomials keep
the ring a genuine field, which makes ranks, determinants and linear
solves over it well defined.
"""

from dataclasses import dataclass

import sympy

from .scalar import ONE, Q, ZERO, qstr

_EMPTY = frozenset()


@dataclass(frozen=True)
class FieldElem:
    coeffs: tuple  # sorted tuple of (monomial frozenset, re, im)

    def __add__(self, other):
        other = as_field(other)
        acc = {m: (re, im) for (m, re, im) in self.coeffs}
        for m, re, im in other.coeffs:
            r0, i0 = acc.get(m, (ZERO, ZERO))
            acc[m] = (r0 + re, i0 + im)
        return _from_dict(acc)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return FieldElem(tuple((m, -re, -im) for (m, re, im) in self.coeffs))

    def __sub__(self, other):
        return self + (-as_field(other))

    def __rsub__(self, other):
        return as_field(other) + (-self)

    def __mul__(self, other):
        other = as_field(other)
        acc = {}
        for m1, r1, i1 in self.coeffs:
            for m2, r2, i2 in other.coeffs:
                shared = m1 & m2
                scale = ONE
                for p in shared:
                    scale *= p
                mono = m1 ^ m2
                re = scale * (r1 * r2 - i1 * i2)
                im = scale * (r1 * i2 + i1 * r2)
                r0, i0 = acc.get(mono, (ZERO, ZERO))
                acc[mono] = (r0 + re, i0 + im)
        return _from_dict(acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * as_field(other).inverse()

    def __rtruediv__(self, other):
        return as_field(other) * self.inverse()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def conjugate(self):
        """Complex conjugation i -> -i (the sqrt generators are real)."""
        return FieldElem(tuple((m, re, -im) for (m, re, im) in self.coeffs))

    def flip(self, p):
        """Galois conjugation sqrt(p) -> -sqrt(p)."""
        return FieldElem(
            tuple((m, -re, -im) if p in m else (m, re, im) for (m, re, im) in self.coeffs)
        )

    def primes(self):
        out = set()
        for m, _, _ in self.coeffs:
            out |= m
        return out

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero field element")
        primes = self.primes()
        if not primes:
            (_, re, im) = self.coeffs[0]
            nrm = re * re + im * im
            return FieldElem(((_EMPTY, re / nrm, -im / nrm),))
        p = max(primes)
        conj = self.flip(p)
        reduced = self * conj
        return conj * reduced.inverse()

    def rational_part(self):
        """(re, im) coefficient of the empty monomial."""
        for m, re, im in self.coeffs:
            if m == _EMPTY:
                return re, im
        return ZERO, ZERO

    def as_rational(self):
        """The element as a rational, or None if it is not one."""
        if not self.coeffs:
            return ZERO
        if len(self.coeffs) == 1:
            m, re, im = self.coeffs[0]
            if m == _EMPTY and im == 0:
                return re
        return None

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m, re, im in self.coeffs:
            root = "*".join("sqrt(%d)" % p for p in sorted(m))
            for val, unit in ((re, ""), (im, "i")):
                if val == 0:
                    continue
                body = qstr(val) + unit
                parts.append(body + ("*" + root if root else ""))
        return " + ".join(parts)

    __repr__ = __str__


def _from_dict(acc):
    items = []
    for m, (re, im) in acc.items():
        if re == 0 and im == 0:
            continue
        items.append((m, re, im))
    items.sort(key=lambda t: (len(t[0]), sorted(t[0])))
    return FieldElem(tuple(items))


F_ZERO = FieldElem(())
F_ONE = FieldElem(((_EMPTY, ONE, ZERO),))
F_I = FieldElem(((_EMPTY, ZERO, ONE),))


def f_rat(x):
    x = Q(x)
    if x == 0:
        return F_ZERO
    return FieldElem(((_EMPTY, x, ZERO),))


def f_gauss(re, im):
    re, im = Q(re), Q(im)
    if re == 0 and im == 0:
        return F_ZERO
    return FieldElem(((_EMPTY, re, im),))


def as_field(x):
    if isinstance(x, FieldElem):
        return x
    return f_rat(x)


def f_sqrt(q):
    """Exact square root of a nonnegative rational as a field element."""
    q = Q(q)
    if q < 0:
        raise ValueError("square roots of negative rationals are not used here")
    if q == 0:
        return F_ZERO
    num = int(q.numerator)
    den = int(q.denominator)
    inner = num * den
    outer = Q(1, den)
    mono = set()
    for p, e in sympy.factorint(inner).items():
        outer *= Q(int(p)) ** (e // 2)
        if e % 2:
            mono.add(int(p))
    return FieldElem(((frozenset(mono), outer, ZERO),))


# ---------------------------------------------------------------------------
# matrices over the field


def fmat_zeros(r, c):
    return [[F_ZERO] * c for _ in range(r)]


def fmat_identity(n):
    m = fmat_zeros(n, n)
    for i in range(n):
        m[i][i] = F_ONE
    return m


def fmat_scale(c, a):
    c = as_field(c)
    return [[c * x for x in row] for row in a]


def fmat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def fmat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def fmat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = fmat_zeros(n, m)
    for i in range(n):
        for t in range(k):
            ait = a[i][t]
            if not ait:
                continue
            for j in range(m):
                if b[t][j]:
                    out[i][j] = out[i][j] + ait * b[t][j]
    return out

def fmat_eq(a, b) -> bool:
    return all(
        (x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def fmat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def fmat_conj_transpose(a):
    if not a:
        return []
    return [[a[r][c].conjugate() for r in range(len(a))] for c in range(len(a[0]))]


def f_rank(rows) -> int:
    """Rank of a matrix over the field, by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        m[rank] = [inv * x for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def f_nullspace(rows, ncols):
    """Canonical null-space basis over the field."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        m[rank] = [inv * x for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(c)
        rank += 1
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F_ZERO] * ncols
        v[free] = F_ONE
        for row, p in zip(m[:rank], pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def f_det(a):
    """Determinant over the field, by fraction-free-ish elimination."""
    n = len(a)
    m = [list(r) for r in a]
    det = F_ONE
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return F_ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det
