"""Vergne polarizations through the odd-square ideal, polarizing systems
with their Clifford quotients, the consistency functional, and the kappa
invariant.

The polarizing subalgebra m0 is the sum of radicals of the skew form along
a complete flag of ideals of the even part passing through [n1, n1]; the
system quotients m = m0 + n1 by j = (m0 ∩ ker lam) + (odd radical) and
certifies every defining condition exactly before returning.
"""

from dataclasses import dataclass

from . import coadjoint, linalg, reduction, superalg
from .errors import LambdaNotNonnegative, TargetNotIdeal, VerificationFailed
from .scalar import ONE, ZERO
from .superalg import LieSuperalgebra, Subspace


def _is_even_ideal(L, s: Subspace) -> bool:
    for v in s.rows:
        if any(v[i] != 0 for i in L.odd_indices()):
            return False
        for i in L.even_indices():
            if not s.contains(L.bracket(L.basis_vector(i), list(v))):
                return False
    return True


def ideal_flag_through(L, target: Subspace):
    """Complete flag of ideals of the even part through the target ideal.

    Returned descending: even part = F[0] > F[1] > ... > F[-1] = 0 with
    one-dimensional steps, and target appears among the F[k].  Each step
    extends the current ideal by the lowest-echelon vector that centralizes
    the quotient, which keeps every step an ideal (verified).
    """
    if not superalg.is_nilpotent(L):
        raise TargetNotIdeal("flag construction needs a nilpotent algebra")
    if not _is_even_ideal(L, target):
        raise TargetNotIdeal("target is not an ideal of the even part")
    even = superalg.even_block(L)
    ascending = [Subspace.zero(L.dim)]
    current = ascending[0]
    for bound in (target, even):
        while current.dim < bound.dim:
            rows = [list(r) for r in bound.rows]
            k = len(rows)
            eqs = []
            for i in L.even_indices():
                brs = [L.bracket(L.basis_vector(i), r) for r in rows]
                red = [current.reduce(b) for b in brs]
                for coord in range(L.dim):
                    eqs.append([red[a][coord] for a in range(k)])
            ker = linalg.kernel(eqs, k)
            cand = Subspace.from_vectors(
                [linalg.vec_mat(v, rows) for v in ker] + [list(r) for r in current.rows],
                L.dim,
            )
            step = None
            for r in cand.rows:
                if not current.contains(list(r)):
                    step = list(r)
                    break
            if step is None:
                raise VerificationFailed("no central refinement step found")
            nxt = Subspace.from_vectors([step] + [list(r) for r in current.rows], L.dim)
            if nxt.dim != current.dim + 1 or not _is_even_ideal(L, nxt):
                raise VerificationFailed("flag refinement step is not an ideal")
            current = nxt
            ascending.append(current)
    return list(reversed(ascending))


@dataclass(frozen=True)
class Polarization:
    m0: Subspace
    flag: tuple
    radicals: tuple


def vergne_polarization(L, lam) -> Polarization:
    """Sum of the skew-form radicals along the flag through [n1, n1].

    All defining properties are certified before returning: m0 is a
    subalgebra, isotropic for the skew form, of dimension
    (dim even + dim radical)/2, and contains [n1, n1].
    """
    lam = coadjoint.check_functional(L, lam)
    odd = superalg.odd_block(L)
    target = superalg.bracket_span(L, odd, odd)
    flag = ideal_flag_through(L, target)
    radicals = [
        coadjoint.omega_radical(L, lam, f) for f in flag if f.dim > 0
    ]
    rows = []
    for r in radicals:
        rows.extend(list(v) for v in r.rows)
    m0 = Subspace.from_vectors(rows, L.dim)
    even = superalg.even_block(L)
    s_lam = coadjoint.omega_radical(L, lam, even)
    checks = [
        ("m0 is a subalgebra", superalg.is_subalgebra(L, m0)),
        (
            "m0 is isotropic",
            all(
                coadjoint.lam_apply(L, lam, L.bracket(list(u), list(v))) == 0
                for u in m0.rows
                for v in m0.rows
            ),
        ),
        ("dimension identity", 2 * m0.dim == even.dim + s_lam.dim),
        ("contains [n1,n1]", m0.contains_subspace(target)),
    ]
    for name, ok in checks:
        if not ok:
            raise VerificationFailed("Vergne polarization check failed: %s" % name)
    return Polarization(m0, tuple(flag), tuple(radicals))


@dataclass(frozen=True)
class PolarizingSystem:
    """The 6-tuple data (m0+n1, quotient map, Clifford quotient, lam, mu)
    together with the intermediate subspaces that make its defining
    conditions separately testable."""

    m0: Subspace
    k_lambda: Subspace
    r_lambda: Subspace
    j: Subspace
    clifford: LieSuperalgebra
    phi: tuple  # (dim clifford) x (dim L); valid on m = m0 + n1
    lam: tuple
    mu: tuple  # functional on the even part of the Clifford quotient
    m: Subspace
    kappa: int


def _phi_matrix(L, m_view, quot):
    rows = [list(r) for r in m_view.rows]
    pivots = list(m_view.pivots)
    dm = len(rows)
    coords = linalg.zeros(dm, L.dim)
    for a, p in enumerate(pivots):
        coords[a][p] = ONE
    proj = [list(r) for r in quot.projection]
    return linalg.mat_mul(proj, coords)


def build_polarizing_system(L, lam) -> PolarizingSystem:
    """Construct and certify the canonical polarizing system for lam.

    Requires the odd symmetric form of lam to be nonnegative definite;
    otherwise no system with a consistent representation exists and
    LambdaNotNonnegative is raised.
    """
    lam = coadjoint.check_functional(L, lam)
    if not coadjoint.in_n0_plus(L, lam):
        raise LambdaNotNonnegative(
            "the odd symmetric form of lam is not nonnegative definite"
        )
    pol = vergne_polarization(L, lam)
    m0 = pol.m0
    # ker lam inside the even part, in ambient coordinates
    ker_rows = linalg.kernel([list(lam) + [ZERO] * L.dim_odd], L.dim)
    ker_even = Subspace.from_vectors(ker_rows, L.dim).intersect(superalg.even_block(L))
    k_lam = m0.intersect(ker_even)
    r_lam = coadjoint.radical_odd(L, lam)
    j = k_lam.add(r_lam)
    m = m0.add(superalg.odd_block(L))
    m = superalg.graded(L, m)
    jg = superalg.graded(L, j)

    m_view = superalg.subalgebra_view(L, m)
    j_in_m = Subspace.from_vectors(
        [m_view.to_sub(list(r)) for r in jg.rows], m_view.algebra.dim
    )
    if any(r is None for r in j_in_m.rows):
        raise VerificationFailed("j does not lie inside m")
    if not superalg.is_ideal(m_view.algebra, j_in_m):
        raise VerificationFailed("j is not an ideal of m")
    quot = superalg.quotient(m_view.algebra, j_in_m)
    cliff = quot.algebra
    rec = reduction.recognize_clifford(cliff)
    if not rec.is_clifford:
        raise VerificationFailed("quotient m/j is not of Clifford type")
    red = reduction.is_reduced(cliff)
    if red.status != "reduced":
        raise VerificationFailed("quotient m/j is not certified reduced")
    phi = _phi_matrix(L, m_view, quot)
    # mu on the even part of the quotient: well defined because
    # m0 ∩ ker(phi) = m0 ∩ ker(lam)
    mu = []
    for a in range(cliff.dim_even):
        rep_m = quot.lift(cliff.basis_vector(a))
        rep_ambient = m_view.to_ambient(rep_m)
        mu.append(coadjoint.lam_apply(L, lam, rep_ambient))
    kap = cliff.dim if cliff.dim > 0 else 1
    system = PolarizingSystem(
        m0=m0,
        k_lambda=k_lam,
        r_lambda=r_lam,
        j=jg,
        clifford=cliff,
        phi=tuple(tuple(r) for r in phi),
        lam=tuple(lam),
        mu=tuple(mu),
        m=m,
        kappa=kap,
    )
    report = verify_polarizing_system(L, system)
    if report.violations:
        raise VerificationFailed(
            "polarizing system failed self-verification: %s"
            % "; ".join(report.violations)
        )
    return system


def kappa(L, lam) -> int:
    """Dimension of the Clifford quotient; 1 exactly when the induced
    representation is purely even (in particular for lam = 0 and for
    algebras with no odd part)."""
    return build_polarizing_system(L, lam).kappa


@dataclass(frozen=True)
class SystemReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_polarizing_system(L, sys: PolarizingSystem) -> SystemReport:
    """Check every defining condition of a candidate system and report all
    violations (an empty report means a certified system)."""
    out = []
    lam = list(sys.lam)
    cliff = sys.clifford
    phi = [list(r) for r in sys.phi]
    m = sys.m
    m0 = sys.m0

    def phi_of(v):
        return linalg.mat_vec(phi, list(v))

    # (a) special subalgebra: m contains the whole odd part and is closed
    if not m.contains_subspace(superalg.odd_block(L)):
        out.append("(a) m does not contain the odd part")
    if not superalg.is_subalgebra(L, m):
        out.append("(a) m is not a subalgebra")
    if any(any(v[i] != 0 for i in L.odd_indices()) for v in m0.rows):
        out.append("(a) m0 is not contained in the even part")

    # (b) m0 is a polarizing subalgebra for lam
    if not superalg.is_subalgebra(L, m0):
        out.append("(b) m0 is not a subalgebra")
    if any(
        coadjoint.lam_apply(L, lam, L.bracket(list(u), list(v))) != 0
        for u in m0.rows
        for v in m0.rows
    ):
        out.append("(b) lam does not vanish on [m0, m0]")
    even = superalg.even_block(L)
    s_lam = coadjoint.omega_radical(L, lam, even)
    if 2 * m0.dim != even.dim + s_lam.dim:
        out.append("(b) m0 is not maximal isotropic (dimension identity fails)")

    # (c) Clifford type and surjective graded homomorphism
    rec = reduction.recognize_clifford(cliff)
    if not rec.is_clifford:
        out.append("(c) quotient is not of Clifford type")
    image = Subspace.from_vectors([phi_of(list(r)) for r in m.rows], cliff.dim)
    if image.dim != cliff.dim:
        out.append("(c) phi is not surjective onto the quotient")
    for u in m.rows:
        for v in m.rows:
            lhs = phi_of(L.bracket(list(u), list(v)))
            rhs = cliff.bracket(phi_of(list(u)), phi_of(list(v)))
            if lhs != rhs:
                out.append("(c) phi is not a homomorphism")
                break
        else:
            continue
        break
    for r in m.rows:
        par = superalg.parity_of(L, list(r))
        img = phi_of(list(r))
        ipar = superalg.parity_of(cliff, img)
        if ipar is not None and par is not None and ipar != par:
            out.append("(c) phi does not preserve parity")
            break

    # (d) m0 ∩ ker phi = m0 ∩ ker lam
    ker_phi = Subspace.from_vectors(linalg.kernel(phi, L.dim), L.dim)
    lhs = m0.intersect(ker_phi)
    ker_lam_rows = linalg.kernel([lam + [ZERO] * L.dim_odd], L.dim)
    rhs = m0.intersect(Subspace.from_vectors(ker_lam_rows, L.dim))
    if lhs != rhs:
        out.append("(d) m0 ∩ ker(phi) differs from m0 ∩ ker(lam)")

    # consistency: mu(phi(W)) = lam(W) on m0, and mu([V,V]) >= 0 on the quotient
    mu = list(sys.mu)
    for w in m0.rows:
        img = phi_of(list(w))
        val = sum(
            (mu[a] * img[a] for a in range(cliff.dim_even) if img[a] != 0), ZERO
        )
        if val != coadjoint.lam_apply(L, lam, list(w)):
            out.append("consistency mu∘phi = lam fails on m0")
            break
    if cliff.dim_odd > 0 and cliff.dim_even > 0:
        mgram = [
            [
                sum(
                    (
                        mu[k] * cliff.bracket_basis(cliff.dim_even + a, cliff.dim_even + b)[k]
                        for k in range(cliff.dim_even)
                    ),
                    ZERO,
                )
                for b in range(cliff.dim_odd)
            ]
            for a in range(cliff.dim_odd)
        ]
        _, dvals = linalg.congruence_diagonalize(mgram)
        if any(x < 0 for x in dvals):
            out.append("consistency mu([V,V]) >= 0 fails")

    # j is an ideal of m and splits as k_lambda ⊕ r_lambda
    if sys.k_lambda.add(sys.r_lambda) != sys.j:
        out.append("j does not equal k_lambda + r_lambda")
    if sys.k_lambda.intersect(sys.r_lambda).dim != 0:
        out.append("k_lambda and r_lambda are not independent")
    for u in sys.j.rows:
        for v in m.rows:
            if not sys.j.contains(L.bracket(list(u), list(v))):
                out.append("j is not an ideal of m")
                break
        else:
            continue
        break

    # the quotient is reduced
    red = reduction.is_reduced(cliff)
    if red.status != "reduced":
        out.append("quotient m/j is not certified reduced")

    # phi kills [n1, [n1, n1]]
    odd = superalg.odd_block(L)
    nn = superalg.bracket_span(L, odd, odd)
    nnn = superalg.bracket_span(L, odd, nn)
    for r in nnn.rows:
        if not linalg.is_zero_vec(phi_of(list(r))):
            out.append("phi does not vanish on [n1,[n1,n1]]")
            break

    return SystemReport(tuple(out))
