"""Finite-dimensional Lie superalgebras over exact rationals.

The universe of every other module: a basis-indexed structure-constant
tensor with Z2 grading (even block first, odd block second), validated on
construction against grading compatibility, super-antisymmetry and the
super-Jacobi identity.  Subspaces are kept in reduced row echelon form so
that equality of subspaces is equality of matrices.
"""

from dataclasses import dataclass, field

from . import linalg
from .errors import (
    DimensionMismatch,
    GradingViolation,
    InconsistentAntisymmetry,
    JacobiViolation,
    NotAnIdeal,
    NotGraded,
    PreconditionFailed,
)
from .scalar import ONE, Q, ZERO, qstr


class LieSuperalgebra:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim_even", "dim_odd", "names", "structure", "_pair_nonzero", "_cache")

    def __init__(self, dim_even, dim_odd, names, structure, _validate=True):
        self.dim_even = dim_even
        self.dim_odd = dim_odd
        self.names = tuple(names)
        self.structure = tuple(tuple(tuple(row) for row in plane) for plane in structure)
        d = dim_even + dim_odd
        if len(self.names) != d or len(self.structure) != d:
            raise DimensionMismatch("names/structure size does not match dimensions")
        self._pair_nonzero = tuple(
            tuple(any(x != 0 for x in self.structure[i][j]) for j in range(d))
            for i in range(d)
        )
        self._cache = {}
        if _validate:
            self._validate()

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    def even_indices(self):
        return range(self.dim_even)

    def odd_indices(self):
        return range(self.dim_even, self.dim)

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def bracket_basis(self, i, j):
        return list(self.structure[i][j])

    def bracket(self, x, y):
        """Bilinear expansion of [x, y] through the structure tensor."""
        d = self.dim
        if len(x) != d or len(y) != d:
            raise DimensionMismatch("element length %d/%d, algebra dimension %d"
                                    % (len(x), len(y), d))
        out = [ZERO] * d
        for i in range(d):
            xi = x[i]
            if xi == 0:
                continue
            nz = self._pair_nonzero[i]
            for j in range(d):
                yj = y[j]
                if yj == 0 or not nz[j]:
                    continue
                c = xi * yj
                row = self.structure[i][j]
                for k in range(d):
                    if row[k] != 0:
                        out[k] += c * row[k]
        return out

    def _validate(self):
        d = self.dim
        c = self.structure
        for i in range(d):
            for j in range(d):
                pij = (self.parity(i) + self.parity(j)) % 2
                for k in range(d):
                    if c[i][j][k] != 0 and self.parity(k) != pij:
                        raise GradingViolation(
                            "nonzero c[%d][%d][%d] has parity %d, expected %d"
                            % (i, j, k, self.parity(k), pij)
                        )
        for i in range(d):
            for j in range(i, d):
                s = -ONE if (self.parity(i) and self.parity(j)) else ONE
                # super-antisymmetry: [e_j,e_i] = -(-1)^{|i||j|} [e_i,e_j]
                for k in range(d):
                    if c[j][i][k] != -s * c[i][j][k]:
                        raise InconsistentAntisymmetry(
                            "c[%d][%d] incompatible with c[%d][%d]" % (j, i, i, j)
                        )
        self._check_jacobi()

    def _check_jacobi(self):
        d = self.dim
        nz = self._pair_nonzero
        for i in range(d):
            pi = self.parity(i)
            for j in range(d):
                pj = self.parity(j)
                for k in range(d):
                    pk = self.parity(k)
                    if not (nz[j][k] or nz[k][i] or nz[i][j]):
                        continue
                    t1 = self.bracket(self.basis_vector(i), self.bracket_basis(j, k))
                    t2 = self.bracket(self.basis_vector(j), self.bracket_basis(k, i))
                    t3 = self.bracket(self.basis_vector(k), self.bracket_basis(i, j))
                    s1 = -ONE if (pi and pk) else ONE
                    s2 = -ONE if (pj and pi) else ONE
                    s3 = -ONE if (pk and pj) else ONE
                    res = [s1 * a + s2 * b + s3 * cc for a, b, cc in zip(t1, t2, t3)]
                    if not linalg.is_zero_vec(res):
                        raise JacobiViolation((i, j, k), [qstr(x) for x in res])

    def __repr__(self):
        return "LieSuperalgebra(dim_even=%d, dim_odd=%d)" % (self.dim_even, self.dim_odd)


@dataclass(frozen=True)
class Subspace:
    """Row space in canonical (reduced echelon) form."""

    ambient: int
    rows: tuple
    pivots: tuple
    graded: bool | None = field(default=None, compare=False)

    @staticmethod
    def from_vectors(vectors, ambient, graded=None):
        rows, pivots = linalg.rref(vectors, ambient)
        return Subspace(ambient, tuple(tuple(r) for r in rows), tuple(pivots), graded)

    @staticmethod
    def zero(ambient):
        return Subspace(ambient, (), (), True)

    @staticmethod
    def full(ambient):
        return Subspace.from_vectors(linalg.identity(ambient), ambient, True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        return linalg.is_zero_vec(linalg.reduce_vector(v, self.rows, self.pivots))

    def contains_subspace(self, other) -> bool:
        return all(self.contains(r) for r in other.rows)

    def reduce(self, v):
        return linalg.reduce_vector(v, self.rows, self.pivots)

    def add(self, other):
        return Subspace.from_vectors(list(self.rows) + list(other.rows), self.ambient)

    def intersect(self, other):
        rows = linalg.intersect_rowspaces(list(self.rows), list(other.rows), self.ambient)
        return Subspace.from_vectors(rows, self.ambient)

    def __iter__(self):
        return iter(self.rows)


def is_homogeneous(L, v):
    """True if the support of v lies in one parity block."""
    even = any(v[i] != 0 for i in L.even_indices())
    odd = any(v[i] != 0 for i in L.odd_indices())
    return not (even and odd)


def parity_of(L, v):
    """Parity of a homogeneous element, None for 0 or mixed elements."""
    even = any(v[i] != 0 for i in L.even_indices())
    odd = any(v[i] != 0 for i in L.odd_indices())
    if even and not odd:
        return 0
    if odd and not even:
        return 1
    return None


def parity_projections(L, v):
    ev = [v[i] if i < L.dim_even else ZERO for i in range(L.dim)]
    od = [v[i] if i >= L.dim_even else ZERO for i in range(L.dim)]
    return ev, od


def even_block(L) -> Subspace:
    rows = [L.basis_vector(i) for i in L.even_indices()]
    return Subspace.from_vectors(rows, L.dim, graded=True)


def odd_block(L) -> Subspace:
    rows = [L.basis_vector(i) for i in L.odd_indices()]
    return Subspace.from_vectors(rows, L.dim, graded=True)


def subspace_is_graded(L, s: Subspace) -> bool:
    ev = s.intersect(even_block(L))
    od = s.intersect(odd_block(L))
    return ev.dim + od.dim == s.dim


def graded(L, s: Subspace) -> Subspace:
    """Return s with its graded flag decided."""
    if s.graded is not None:
        return s
    return Subspace(s.ambient, s.rows, s.pivots, subspace_is_graded(L, s))


def build_algebra(dim_even, dim_odd, bracket_table, names=None):
    """Assemble and validate an algebra from a sparse upper bracket table.

    bracket_table is an iterable of (i, j, out) with out either a vector of
    length dim_even+dim_odd or a mapping {k: scalar}.  Each unordered pair
    may appear at most once; the other half of the tensor is filled in by
    super-antisymmetry.
    """
    d = dim_even + dim_odd
    if names is None:
        names = ["e%d" % i for i in range(d)]
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    seen = set()
    for i, j, out in bracket_table:
        if not (0 <= i < d and 0 <= j < d):
            raise DimensionMismatch("bracket index out of range: (%d, %d)" % (i, j))
        key = (min(i, j), max(i, j))
        if key in seen:
            raise InconsistentAntisymmetry(
                "unordered pair (%d, %d) specified more than once" % key
            )
        seen.add(key)
        vec = [ZERO] * d
        if isinstance(out, dict):
            for k, val in out.items():
                vec[int(k)] = Q(val)
        else:
            for k, val in enumerate(out):
                vec[k] = Q(val)
        pi = 0 if i < dim_even else 1
        pj = 0 if j < dim_even else 1
        if i == j and pi == 0 and not linalg.is_zero_vec(vec):
            raise InconsistentAntisymmetry(
                "[e_%d, e_%d] must vanish for an even basis vector" % (i, i)
            )
        c[i][j] = vec
        if i != j:
            s = -ONE if (pi and pj) else ONE
            c[j][i] = [-s * x for x in vec]
    return LieSuperalgebra(dim_even, dim_odd, names, c)


def from_tensor(dim_even, dim_odd, structure, names=None):
    """Validate a complete structure tensor (used by perturbation tests)."""
    d = dim_even + dim_odd
    if names is None:
        names = ["e%d" % i for i in range(d)]
    return LieSuperalgebra(dim_even, dim_odd, names, structure)


def bracket(L, x, y):
    return L.bracket(x, y)


def bracket_span(L, s: Subspace, t: Subspace) -> Subspace:
    """Span of all [u, v], u in s, v in t."""
    vecs = []
    for u in s.rows:
        for v in t.rows:
            w = L.bracket(list(u), list(v))
            if not linalg.is_zero_vec(w):
                vecs.append(w)
    out = Subspace.from_vectors(vecs, L.dim)
    return graded(L, out)


def lower_central_series(L):
    """Descending chain L, [L,L], [L,[L,L]], ... until it stabilizes."""
    series = L._cache.get("lcs")
    if series is not None:
        return series
    full = Subspace.full(L.dim)
    series = [full]
    while True:
        nxt = bracket_span(L, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    L._cache["lcs"] = series
    return series


def is_nilpotent(L) -> bool:
    return lower_central_series(L)[-1].dim == 0


def nilpotency_class(L) -> int:
    """Number of nonzero terms of the lower central series (0 for dim 0)."""
    series = lower_central_series(L)
    return len([s for s in series if s.dim > 0])


def center(L) -> Subspace:
    """{x : [x, e_j] = 0 for all j}, via the kernel of the stacked adjoints."""
    d = L.dim
    eqs = []
    for j in range(d):
        for k in range(d):
            eqs.append([L.structure[i][j][k] for i in range(d)])
    ker = linalg.kernel(eqs, d)
    return graded(L, Subspace.from_vectors(ker, d))


def ad_matrix(L, i):
    """Matrix of ad(e_i): column j holds [e_i, e_j]."""
    d = L.dim
    m = linalg.zeros(d, d)
    for j in range(d):
        col = L.structure[i][j]
        for k in range(d):
            m[k][j] = col[k]
    return m


def ad_of(L, x):
    """Matrix of ad(x) for a coordinate vector x."""
    d = L.dim
    m = linalg.zeros(d, d)
    for i in range(d):
        if x[i] == 0:
            continue
        a = ad_matrix(L, i)
        for r in range(d):
            for c in range(d):
                if a[r][c] != 0:
                    m[r][c] += x[i] * a[r][c]
    return m


def ideal_closure(L, generators) -> Subspace:
    """Smallest graded ideal containing the generators.

    Non-homogeneous generators are replaced by their parity projections so
    the result is always graded.
    """
    vecs = []
    for g in generators:
        ev, od = parity_projections(L, list(g))
        if not linalg.is_zero_vec(ev):
            vecs.append(ev)
        if not linalg.is_zero_vec(od):
            vecs.append(od)
    span = Subspace.from_vectors(vecs, L.dim, graded=True)
    while True:
        new = list(span.rows)
        for v in span.rows:
            for i in range(L.dim):
                w = L.bracket(L.basis_vector(i), list(v))
                if not span.contains(w):
                    new.append(w)
        nxt = Subspace.from_vectors(new, L.dim)
        if nxt == span:
            return graded(L, span)
        span = nxt


def subalgebra_closure(L, generators) -> Subspace:
    """Smallest subalgebra containing the generators (bracket within the span)."""
    span = Subspace.from_vectors([list(g) for g in generators], L.dim)
    while True:
        new = list(span.rows)
        for u in span.rows:
            for v in span.rows:
                w = L.bracket(list(u), list(v))
                if not span.contains(w):
                    new.append(w)
        nxt = Subspace.from_vectors(new, L.dim)
        if nxt == span:
            return graded(L, span)
        span = nxt


def is_subalgebra(L, s: Subspace) -> bool:
    for u in s.rows:
        for v in s.rows:
            if not s.contains(L.bracket(list(u), list(v))):
                return False
    return True


def is_ideal(L, s: Subspace) -> bool:
    for i in range(L.dim):
        for v in s.rows:
            if not s.contains(L.bracket(L.basis_vector(i), list(v))):
                return False
    return True


@dataclass(frozen=True)
class Quotient:
    """Quotient algebra together with the projection and a linear section."""

    algebra: LieSuperalgebra
    projection: tuple  # (dim quotient) x (dim L)
    section: tuple  # (dim L) x (dim quotient): representatives of the kept basis
    kept: tuple  # ambient indices of the complementary coordinate section
    ideal: Subspace

    def project(self, v):
        return linalg.mat_vec([list(r) for r in self.projection], list(v))

    def lift(self, w):
        return linalg.mat_vec([list(r) for r in self.section], list(w))


def quotient(L, ideal: Subspace) -> Quotient:
    """Quotient by a graded ideal, on the non-pivot coordinate section."""
    if not subspace_is_graded(L, ideal):
        raise NotGraded("quotient ideal is not graded")
    if not is_ideal(L, ideal):
        raise NotAnIdeal("subspace is not an ideal")
    d = L.dim
    pivset = set(ideal.pivots)
    kept = [i for i in range(d) if i not in pivset]
    q = len(kept)
    qe = sum(1 for i in kept if i < L.dim_even)
    qo = q - qe
    # projection: reduce mod the ideal, then read off the kept coordinates
    proj = linalg.zeros(q, d)
    for j in range(d):
        red = ideal.reduce(L.basis_vector(j))
        for a, i in enumerate(kept):
            proj[a][j] = red[i]
    section = linalg.zeros(d, q)
    for a, i in enumerate(kept):
        section[i][a] = ONE
    c = [[[ZERO] * q for _ in range(q)] for _ in range(q)]
    for a, i in enumerate(kept):
        for b, j in enumerate(kept):
            w = L.bracket_basis(i, j)
            pw = linalg.mat_vec(proj, w)
            c[a][b] = pw
    names = [L.names[i] for i in kept]
    alg = LieSuperalgebra(qe, qo, names, c)
    return Quotient(
        alg,
        tuple(tuple(r) for r in proj),
        tuple(tuple(r) for r in section),
        tuple(kept),
        ideal,
    )


@dataclass(frozen=True)
class SubalgebraView:
    """A graded subalgebra of L presented on its own basis.

    rows are the echelon basis (homogeneous because the subspace is graded,
    even rows first); coordinates in this basis are read off the pivots.
    """

    algebra: LieSuperalgebra
    rows: tuple
    pivots: tuple
    ambient_dim: int

    def to_sub(self, v):
        coeffs = linalg.coordinates_in_rref(list(v), [list(r) for r in self.rows], list(self.pivots))
        return coeffs

    def to_ambient(self, w):
        return linalg.vec_mat(list(w), [list(r) for r in self.rows])


def subalgebra_view(L, s: Subspace) -> SubalgebraView:
    if not subspace_is_graded(L, s):
        raise NotGraded("subalgebra basis is not graded")
    if not is_subalgebra(L, s):
        raise PreconditionFailed("subspace is not closed under the bracket")
    rows = [list(r) for r in s.rows]
    de = sum(1 for r in rows if any(r[i] != 0 for i in L.even_indices()))
    do = len(rows) - de
    n = len(rows)
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            w = L.bracket(rows[a], rows[b])
            coeffs = linalg.coordinates_in_rref(w, rows, list(s.pivots))
            if coeffs is None:
                raise PreconditionFailed("bracket leaves the subspace")
            c[a][b] = coeffs
    names = ["s%d" % a for a in range(n)]
    alg = LieSuperalgebra(de, do, names, c)
    return SubalgebraView(alg, tuple(tuple(r) for r in rows), tuple(s.pivots), L.dim)
