"""Explicit irreducible Z2-graded Clifford modules over the exact
multiquadratic field, parity change, and intertwiner-based equivalence.

Generators come from the standard pair-doubling construction (sigma_x /
sigma_y on successive tensor slots, sigma_z strings to the left); the total
chirality operator grades the space, and the basis is permuted so the even
block comes first, making every generator block-antidiagonal.  Scaling by
exact square roots realizes the consistency normalization
rho_j^2 = (d_j * a / 2) * I.
"""

import itertools
from dataclasses import dataclass

from . import linalg, numfield, reduction
from .errors import (
    DimensionMismatch,
    NegativeCentralValue,
    NotCliffordType,
    NotPositiveDefinite,
    VerificationFailed,
)
from .numfield import (
    F_I,
    F_ONE,
    F_ZERO,
    FieldElem,
    as_field,
    f_det,
    f_gauss,
    f_nullspace,
    f_rat,
    f_sqrt,
    fmat_add,
    fmat_eq,
    fmat_identity,
    fmat_mul,
    fmat_scale,
    fmat_sub,
    fmat_zeros,
)
from .scalar import ONE, Q, ZERO


def diagonalize_form(gram):
    """Rational congruence P with P^T G P diagonal and positive, for a
    positive definite G; raises NotPositiveDefinite otherwise."""
    n = len(gram)
    p, d = linalg.congruence_diagonalize([list(r) for r in gram])
    if any(x <= 0 for x in d):
        raise NotPositiveDefinite("gram matrix is not positive definite")
    return p, d


_SX = ((F_ZERO, F_ONE), (F_ONE, F_ZERO))
_SY = ((F_ZERO, -F_I), (F_I, F_ZERO))
_SZ = ((F_ONE, F_ZERO), (F_ZERO, -F_ONE))
_ID2 = ((F_ONE, F_ZERO), (F_ZERO, F_ONE))


def _kron(a, b):
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = fmat_zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if not a[i][j]:
                continue
            for k in range(rb):
                for l in range(cb):
                    if b[k][l]:
                        out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def _chain(ms):
    out = [[F_ONE]]
    for m in ms:
        out = _kron(out, [list(r) for r in m])
    return out


def gamma_matrices(l: int):
    """l anticommuting odd involutions on a 2^ceil(l/2)-dimensional graded
    space: Gamma_i Gamma_j + Gamma_j Gamma_i = 2 delta_ij, entries Gaussian
    rational, even block first.

    Returns (matrices, (even_dim, odd_dim)).
    """
    if l < 0:
        raise DimensionMismatch("generator count must be nonnegative")
    if l == 0:
        return [], (1, 0)
    m = (l + 1) // 2
    mats = []
    for j in range(m):
        pre = [_SZ] * j
        post = [_ID2] * (m - j - 1)
        mats.append(_chain(pre + [_SX] + post))
        if len(mats) < l:
            mats.append(_chain(pre + [_SY] + post))
    mats = mats[:l]
    dim = 2**m
    evens = [b for b in range(dim) if bin(b).count("1") % 2 == 0]
    odds = [b for b in range(dim) if bin(b).count("1") % 2 == 1]
    perm = evens + odds
    permuted = [
        [[mat[perm[r]][perm[c]] for c in range(dim)] for r in range(dim)]
        for mat in mats
    ]
    return permuted, (len(evens), len(odds))


@dataclass(frozen=True)
class CliffordModule:
    dim: int
    grading: tuple  # (even block size, odd block size)
    rho: tuple  # matrices over the field, one per diagonalized odd generator
    a: object  # value of mu on the oriented central generator
    congruence: tuple  # rational change of basis diagonalizing the gram matrix
    diagonal: tuple  # the positive diagonal values d_i
    algebra: object  # the Clifford-type algebra being represented
    z_sign: int  # orientation of the central generator relative to e_0
    mu: tuple

    @property
    def odd_count(self) -> int:
        return len(self.rho)

    def parity(self, index: int) -> int:
        return 0 if index < self.grading[0] else 1

    def rho_of(self, coords):
        """Image of an odd element given in the algebra's odd basis."""
        n = len(self.rho)
        pinv = linalg.gauss_rational_inverse([list(r) for r in self.congruence])
        newco = linalg.mat_vec(pinv, list(coords))
        out = fmat_zeros(self.dim, self.dim)
        for j, cj in enumerate(newco):
            if cj != 0:
                out = fmat_add(out, fmat_scale(f_rat(cj), [list(r) for r in self.rho[j]]))
        return out


def _is_odd_matrix(mat, grading):
    p, q = grading
    for r in range(p + q):
        for c in range(p + q):
            same = (r < p) == (c < p)
            if same and mat[r][c]:
                return False
    return True


def _verify_module(mod: CliffordModule):
    n = len(mod.rho)
    ident = fmat_identity(mod.dim)
    for i in range(n):
        for j in range(n):
            anti = fmat_add(
                fmat_mul([list(r) for r in mod.rho[i]], [list(r) for r in mod.rho[j]]),
                fmat_mul([list(r) for r in mod.rho[j]], [list(r) for r in mod.rho[i]]),
            )
            target = (
                fmat_scale(f_rat(mod.diagonal[i] * mod.a), ident)
                if i == j
                else fmat_zeros(mod.dim, mod.dim)
            )
            if not fmat_eq(anti, target):
                raise VerificationFailed(
                    "anticommutation fails on generators (%d, %d)" % (i, j)
                )
    for j in range(n):
        mat = [list(r) for r in mod.rho[j]]
        if not _is_odd_matrix(mat, mod.grading):
            raise VerificationFailed("generator %d is not odd" % j)
        if not fmat_eq(mat, numfield.fmat_conj_transpose(mat)):
            raise VerificationFailed("generator %d is not symmetric" % j)


def _verify_irreducible(l: int, gammas, dim: int):
    """The 2^l subset products must be linearly independent over Q(i):
    the generated associative algebra is the full Clifford algebra."""
    vecs = []
    for subset in itertools.product((0, 1), repeat=l):
        prod = fmat_identity(dim)
        for j, take in enumerate(subset):
            if take:
                prod = fmat_mul(prod, [list(r) for r in gammas[j]])
        vecs.append([prod[r][c] for r in range(dim) for c in range(dim)])
    if numfield.f_rank(vecs) != 2**l:
        raise VerificationFailed("generated algebra does not have dimension 2^l")


def clifford_module(c, mu) -> CliffordModule:
    """The irreducible graded module consistent with mu.

    mu is a functional on the even part of the Clifford-type algebra c.
    With a = mu evaluated on the oriented central generator: a > 0 yields
    the 2^ceil(l/2)-dimensional module with rho_j^2 = (d_j a / 2) I; a = 0
    yields the trivial (1|0) module; a < 0 admits no consistent module when
    there are odd generators.
    """
    rec = reduction.recognize_clifford(c)
    if not rec.is_clifford:
        raise NotCliffordType(rec.reason or "not of Clifford type")
    l = c.dim_odd
    if c.dim_even == 0:
        return CliffordModule(1, (1, 0), (), ZERO, (), (), c, 1, tuple(mu))
    mu = [Q(x) for x in mu]
    if len(mu) != c.dim_even:
        raise DimensionMismatch("mu length does not match the even dimension")
    zsign = 1 if (l == 0 or rec.z_generator[0] > 0) else -1
    a = mu[0] * zsign
    if l == 0:
        return CliffordModule(
            1, (1, 0), (), a, (), (), c, zsign, tuple(mu)
        )
    if a < 0:
        raise NegativeCentralValue(
            "mu gives the central generator a negative value; no consistent module"
        )
    if a == 0:
        zero = tuple(
            tuple((F_ZERO,) for _ in range(1)) for _ in range(1)
        )
        rho = tuple(((F_ZERO,),) for _ in range(l))
        return CliffordModule(
            1, (1, 0), rho, a, tuple(tuple(r) for r in linalg.identity(l)),
            tuple([ONE] * l), c, zsign, tuple(mu)
        )
    gram = [list(r) for r in rec.gram]
    p, d = diagonalize_form(gram)
    gammas, grading = gamma_matrices(l)
    dim = 2 ** ((l + 1) // 2)
    rho = []
    for j in range(l):
        scale = f_sqrt(d[j] * a / 2)
        rho.append(
            tuple(tuple(scale * x for x in row) for row in gammas[j])
        )
    mod = CliffordModule(
        dim,
        grading,
        tuple(rho),
        a,
        tuple(tuple(r) for r in p),
        tuple(d),
        c,
        zsign,
        tuple(mu),
    )
    _verify_module(mod)
    _verify_irreducible(l, gammas, dim)
    return mod


def parity_change(mod: CliffordModule) -> CliffordModule:
    """Swap the grading blocks (conjugating by the block swap); involutive."""
    p, q = mod.grading
    dim = mod.dim
    if dim != p + q:
        raise DimensionMismatch("inconsistent grading")
    perm = list(range(p, p + q)) + list(range(p))
    rho = tuple(
        tuple(tuple(mat[perm[r]][perm[c]] for c in range(dim)) for r in range(dim))
        for mat in mod.rho
    )
    return CliffordModule(
        dim,
        (q, p),
        rho,
        mod.a,
        mod.congruence,
        mod.diagonal,
        mod.algebra,
        mod.z_sign,
        mod.mu,
    )


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    intertwiner: tuple | None = None


def module_equivalent(m1: CliffordModule, m2: CliffordModule) -> Equivalence:
    """Decide graded equivalence by the exact linear system T rho1 = rho2 T
    over even invertible T.

    Both modules must represent the same number of odd generators on spaces
    of the same dimension; the anticommutation targets are compared through
    each module's own congruence, so modules built from different
    diagonalizations of one gram matrix are comparable.
    """
    if m1.dim != m2.dim or m1.odd_count != m2.odd_count:
        raise DimensionMismatch("modules of different size")
    dim = m1.dim
    n = m1.odd_count
    # express both generator families on the shared original odd basis
    if m1.congruence and m2.congruence:
        fam1 = [m1.rho_of(linalg.identity(n)[k]) for k in range(n)]
        fam2 = [m2.rho_of(linalg.identity(n)[k]) for k in range(n)]
    else:
        fam1 = [[list(r) for r in m] for m in m1.rho]
        fam2 = [[list(r) for r in m] for m in m2.rho]
    unknowns = [
        (r, c)
        for r in range(dim)
        for c in range(dim)
        if m2.parity(r) == m1.parity(c)
    ]
    index = {rc: k for k, rc in enumerate(unknowns)}
    rows = []
    for g1, g2 in zip(fam1, fam2):
        # (T g1 - g2 T)[r][c] = sum_k T[r][k] g1[k][c] - g2[r][k] T[k][c]
        for r in range(dim):
            for c in range(dim):
                row = [F_ZERO] * len(unknowns)
                for k in range(dim):
                    if (r, k) in index and g1[k][c]:
                        row[index[(r, k)]] = row[index[(r, k)]] + g1[k][c]
                    if (k, c) in index and g2[r][k]:
                        row[index[(k, c)]] = row[index[(k, c)]] - g2[r][k]
                if any(x for x in row):
                    rows.append(row)
    basis = f_nullspace(rows, len(unknowns))
    for sol in basis:
        t = fmat_zeros(dim, dim)
        for (r, c), k in index.items():
            t[r][c] = sol[k]
        if f_det(t):
            return Equivalence(True, tuple(tuple(row) for row in t))
    return Equivalence(False, None)
