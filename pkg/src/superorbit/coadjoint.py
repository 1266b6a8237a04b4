"""Functionals on the even part: the symmetric odd form and skew even form,
exact semidefiniteness certificates, radicals, polynomial coadjoint flows,
and greedy orbit canonicalization.

Convention: (Ad*(g) lam)(W) = lam(Ad(g^{-1}) W), so flows compose
contravariantly; exp(-t ad_X) is an exact finite sum because the algebra is
nilpotent.
"""

import math
import random
from dataclasses import dataclass

from . import linalg, superalg
from .errors import DimensionMismatch, NotNilpotent
from .scalar import ONE, Q, ZERO
from .superalg import Subspace


def check_functional(L, lam):
    if len(lam) != L.dim_even:
        raise DimensionMismatch(
            "functional length %d, even dimension %d" % (len(lam), L.dim_even)
        )
    return [Q(x) for x in lam]


def lam_apply(L, lam, v):
    """Evaluate a covector on the even coordinates of an ambient vector."""
    return sum((lam[k] * v[k] for k in range(L.dim_even) if v[k] != 0), ZERO)


@dataclass(frozen=True)
class SymFormReport:
    gram: tuple
    verdict: str
    congruence: tuple  # P with P^T G P = diag(d)
    diagonal: tuple
    witness: tuple | None  # odd ambient vector with v^T G v < 0 when indefinite


def b_form(L, lam) -> SymFormReport:
    """Symmetric form lam([.,.]) on the odd basis with an exact congruence
    certificate; an indefinite verdict always carries a negative witness."""
    lam = check_functional(L, lam)
    no = L.dim_odd
    e0 = L.dim_even
    gram = [
        [lam_apply(L, lam, L.bracket_basis(e0 + a, e0 + b)) for b in range(no)]
        for a in range(no)
    ]
    p, d = linalg.congruence_diagonalize(gram)
    verdict = linalg.sign_verdict(d)
    witness = None
    if verdict == "indefinite":
        for k, dk in enumerate(d):
            if dk < 0:
                w = [ZERO] * L.dim
                for r in range(no):
                    w[e0 + r] = p[r][k]
                witness = tuple(w)
                break
    return SymFormReport(
        tuple(tuple(r) for r in gram),
        verdict,
        tuple(tuple(r) for r in p),
        tuple(d),
        witness,
    )


def in_n0_plus(L, lam) -> bool:
    return b_form(L, lam).verdict in ("zero", "positive_semidefinite", "positive_definite")


def radical_odd(L, lam) -> Subspace:
    """Kernel of the odd gram matrix, embedded in ambient coordinates."""
    rep = b_form(L, lam)
    ker = linalg.kernel([list(r) for r in rep.gram], L.dim_odd)
    rows = []
    for v in ker:
        w = [ZERO] * L.dim
        for a, x in enumerate(v):
            w[L.dim_even + a] = x
        rows.append(w)
    return Subspace.from_vectors(rows, L.dim, graded=True)


def omega_radical(L, lam, restrict_to: Subspace) -> Subspace:
    """Radical of the skew form lam([.,.]) on a subspace of the even part."""
    lam = check_functional(L, lam)
    rows = [list(r) for r in restrict_to.rows]
    k = len(rows)
    m = [
        [lam_apply(L, lam, L.bracket(rows[a], rows[b])) for b in range(k)]
        for a in range(k)
    ]
    ker = linalg.kernel(m, k)
    amb = [linalg.vec_mat(v, rows) for v in ker]
    return Subspace.from_vectors(amb, L.dim)


def omega_rank(L, lam) -> int:
    even = superalg.even_block(L)
    return even.dim - omega_radical(L, lam, even).dim


def flow_matrix(L, x, t):
    """exp(-t ad_x) as an exact truncated series (x even, L nilpotent)."""
    if not superalg.is_nilpotent(L):
        raise NotNilpotent("coadjoint flows need a nilpotent algebra")
    if any(x[i] != 0 for i in L.odd_indices()):
        raise DimensionMismatch("flow direction must be even")
    d = L.dim
    ad = superalg.ad_of(L, list(x))
    out = linalg.identity(d)
    term = linalg.identity(d)
    nc = superalg.nilpotency_class(L)
    for p in range(1, nc + 1):
        term = linalg.mat_mul(term, ad)
        coef = Q((-t) ** p, math.factorial(p))
        for r in range(d):
            for c in range(d):
                if term[r][c] != 0:
                    out[r][c] += coef * term[r][c]
    return out


def coadjoint_flow(L, lam, x, t):
    """(Ad*(exp tX) lam)(W) = lam(exp(-t ad_X) W)."""
    lam = check_functional(L, lam)
    t = Q(t)
    e = flow_matrix(L, x, t)
    full = lam + [ZERO] * L.dim_odd
    moved = linalg.vec_mat(full, e)
    return moved[: L.dim_even]


@dataclass(frozen=True)
class OrbitRepresentative:
    canonical: tuple
    normalization_log: tuple  # (direction index, parameter value) pairs
    exact: bool


def _coordinate_polynomials(L, lam, i, nc):
    """Per even coordinate j: coefficients of lam(exp(-t ad_{e_i}) e_j)."""
    d = L.dim
    ad = superalg.ad_matrix(L, i)
    polys = [[lam[j]] for j in range(L.dim_even)]
    vecs = [L.basis_vector(j) for j in range(L.dim_even)]
    for p in range(1, nc + 1):
        coef = Q((-1) ** p, math.factorial(p))
        for j in range(L.dim_even):
            vecs[j] = linalg.mat_vec(ad, vecs[j])
            polys[j].append(coef * lam_apply(L, lam, vecs[j]))
    for po in polys:
        while po and po[-1] == 0:
            po.pop()
    return polys


def canonical_orbit_rep(L, lam) -> OrbitRepresentative:
    """Greedy deterministic orbit representative.

    Even directions are consumed in input order; at each step the highest
    covector coordinate that depends affinely (degree exactly one) on the
    flow parameter is zeroed by an exact solve.  The result is always in
    the orbit of lam (the log replays it); ``exact`` flags that the number
    of pinned coordinates equals the orbit dimension (rank of the skew
    form), in which case the normalization reaches a full cross-section.
    """
    lam = check_functional(L, lam)
    if not superalg.is_nilpotent(L):
        raise NotNilpotent("orbit canonicalization needs a nilpotent algebra")
    nc = superalg.nilpotency_class(L)
    cur = list(lam)
    used = set()
    log = []
    while True:
        moved = False
        for i in range(L.dim_even):
            if i in used:
                continue
            polys = _coordinate_polynomials(L, cur, i, nc)
            for j in range(L.dim_even - 1, -1, -1):
                po = polys[j]
                if len(po) == 2 and po[1] != 0:
                    t = -po[0] / po[1]
                    cur = coadjoint_flow(L, cur, L.basis_vector(i), t)
                    used.add(i)
                    log.append((i, t))
                    moved = True
                    break
            if moved:
                break
        if not moved:
            break
    exact = len(log) == omega_rank(L, lam)
    return OrbitRepresentative(tuple(cur), tuple(log), exact)


@dataclass(frozen=True)
class OrbitComparison:
    verdict: str  # "equal" | "distinct" | "inconclusive"
    reason: str
    rep_a: OrbitRepresentative | None = None
    rep_b: OrbitRepresentative | None = None


def orbit_invariants(L, lam):
    """Data constant along a coadjoint orbit: the functional on the center,
    the rank of the even skew form, the odd form verdict and radical size."""
    cen = superalg.center(L).intersect(superalg.even_block(L))
    on_center = tuple(lam_apply(L, lam, list(r)) for r in cen.rows)
    rep = b_form(L, lam)
    return {
        "center_values": on_center,
        "omega_rank": omega_rank(L, lam),
        "b_verdict": rep.verdict,
        "odd_radical_dim": radical_odd(L, lam).dim,
    }


def orbit_equal(L, lam_a, lam_b) -> OrbitComparison:
    """Decide coadjoint-orbit equality.

    Equal comes from matching canonical representatives (always sound:
    representatives are reachable from their inputs).  Distinct comes from
    a differing orbit invariant, or from differing representatives when
    both canonicalizations reached a full cross-section.  Otherwise
    inconclusive.
    """
    lam_a = check_functional(L, lam_a)
    lam_b = check_functional(L, lam_b)
    inv_a = orbit_invariants(L, lam_a)
    inv_b = orbit_invariants(L, lam_b)
    for key in inv_a:
        if inv_a[key] != inv_b[key]:
            return OrbitComparison("distinct", "orbit invariant differs: %s" % key)
    if in_n0_plus(L, lam_a) and in_n0_plus(L, lam_b):
        from .polarize import kappa

        ka, kb = kappa(L, lam_a), kappa(L, lam_b)
        if ka != kb:
            return OrbitComparison("distinct", "kappa differs: %d vs %d" % (ka, kb))
    ra = canonical_orbit_rep(L, lam_a)
    rb = canonical_orbit_rep(L, lam_b)
    if ra.canonical == rb.canonical:
        return OrbitComparison("equal", "canonical representatives coincide", ra, rb)
    if ra.exact and rb.exact:
        return OrbitComparison(
            "distinct", "distinct representatives on a full cross-section", ra, rb
        )
    return OrbitComparison(
        "inconclusive", "representatives differ but normalization is not exact", ra, rb
    )


def sample_functionals(L, seed, count, require_nonneg=True, bound=4, max_tries=20000):
    """Seeded rejection sampler for covectors with small rational entries.

    With require_nonneg, only functionals whose odd form is nonnegative
    definite are kept.
    """
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        lam = [
            Q(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(L.dim_even)
        ]
        if require_nonneg and not in_n0_plus(L, lam):
            continue
        out.append(lam)
    return out


def sample_flows(L, seed, count, bound=3):
    """Seeded (X, t) pairs: X a small even combination, t a small rational."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        x = [ZERO] * L.dim
        for i in range(L.dim_even):
            x[i] = Q(rng.randint(-bound, bound))
        t = Q(rng.randint(-bound, bound), rng.randint(1, bound))
        out.append((x, t))
    return out
