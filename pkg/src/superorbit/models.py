"""Heisenberg-Clifford builders, the Stone-von Neumann decision procedure,
the symbolic Schrodinger-Weyl (x) Clifford model with exhaustive relation
checking, and the induced-representation data package.

The infinitesimal model assigns X_i -> d_i, Y_i -> i b t_i, Z -> i b on the
polynomial-coefficient operator factor and V_j -> rho_j on the Clifford
factor; every bracket relation then becomes a finitely checkable operator
identity.  The anticommutator target for odd pairs is -i times the image
of the bracket, which on the central generator works out to the scalar
b * B(V,V) -- the negative-control test pins this convention.
"""

from dataclasses import dataclass

from . import cliffmod, coadjoint, linalg, polarize, superalg
from .cliffmod import CliffordModule
from .errors import NotAdmissible, PreconditionFailed
from .numfield import F_I, F_ONE, F_ZERO, as_field, f_gauss, f_rat, fmat_identity
from .scalar import ONE, Q, ZERO, sign
from .superalg import LieSuperalgebra, build_algebra
from .weyl import WeylOp, weyl_commutator


@dataclass(frozen=True)
class HCSpec:
    """m symplectic pairs, n odd generators with square signs c_j."""

    m: int
    n: int
    signs: tuple

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or (self.m == 0 and self.n == 0):
            raise PreconditionFailed("need m, n >= 0 and not both zero")
        if len(self.signs) != self.n or any(s not in (1, -1) for s in self.signs):
            raise PreconditionFailed("signs must be n values in {1, -1}")

    @property
    def dim_even(self) -> int:
        return 1 + 2 * self.m

    def names(self):
        out = ["Z"]
        out += ["X%d" % (i + 1) for i in range(self.m)]
        out += ["Y%d" % (i + 1) for i in range(self.m)]
        out += ["V%d" % (j + 1) for j in range(self.n)]
        return out


def heisenberg_clifford(spec: HCSpec) -> LieSuperalgebra:
    """Basis {Z, X_i, Y_i, V_j} with [X_i,Y_i] = Z, [V_j,V_j] = c_j Z."""
    m, n = spec.m, spec.n
    table = [(1 + i, 1 + m + i, {0: 1}) for i in range(m)]
    table += [(1 + 2 * m + j, 1 + 2 * m + j, {0: spec.signs[j]}) for j in range(n)]
    return build_algebra(1 + 2 * m, n, table, names=spec.names())


def hc_spec_of(L) -> HCSpec:
    """Recover the (m, n, signs) presentation of an algebra given on the
    canonical Heisenberg-Clifford basis, or fail."""
    if L.dim_even % 2 != 1:
        raise PreconditionFailed("even dimension must be odd (2m + 1)")
    m = (L.dim_even - 1) // 2
    n = L.dim_odd
    signs = []
    for j in range(n):
        c = L.structure[L.dim_even + j][L.dim_even + j][0]
        if c == 1:
            signs.append(1)
        elif c == -1:
            signs.append(-1)
        else:
            raise PreconditionFailed("odd square is not +/-Z")
    spec = HCSpec(m, n, tuple(signs))
    expected = heisenberg_clifford(spec)
    if expected.structure != L.structure:
        raise PreconditionFailed("not on the canonical Heisenberg-Clifford basis")
    return spec


@dataclass(frozen=True)
class SvnReport:
    form_verdict: str  # "definite" | "indefinite" | "zero_odd_part"
    agrees: bool
    conclusion: str  # "no_representation" | "unique_up_to_parity_and_equivalence"
    #                  | "characters_only"
    count: int | None  # classes up to unitary equivalence alone (1 or 2)


def svn_classify(spec: HCSpec, b) -> SvnReport:
    """Existence and multiplicity of irreducible representations with
    central parameter b.

    b = 0: characters only.  An indefinite odd form admits none.  A definite
    form admits one (up to equivalence and parity change) exactly when the
    central character matches the form's sign; without odd generators this
    is the classical theorem.  The finer count is 2 when the odd dimension
    is even and positive, else 1.
    """
    b = Q(b)
    if spec.n == 0:
        fv = "zero_odd_part"
    elif all(s == spec.signs[0] for s in spec.signs):
        fv = "definite"
    else:
        fv = "indefinite"
    if b == 0:
        return SvnReport(fv, False, "characters_only", None)
    if fv == "indefinite":
        return SvnReport(fv, False, "no_representation", None)
    if fv == "zero_odd_part":
        return SvnReport(fv, True, "unique_up_to_parity_and_equivalence", 1)
    agrees = sign(b) * spec.signs[0] > 0
    if not agrees:
        return SvnReport(fv, False, "no_representation", None)
    count = 2 if spec.n % 2 == 0 else 1
    return SvnReport(fv, True, "unique_up_to_parity_and_equivalence", count)


@dataclass(frozen=True)
class SchrodingerModel:
    spec: HCSpec
    b: object
    algebra: LieSuperalgebra
    module: CliffordModule
    images: tuple  # per basis index: dim x dim matrix of WeylOps


def _tensor(nvars, w: WeylOp, mat):
    return tuple(tuple(w.scale(x) if x else WeylOp.zero(nvars) for x in row) for row in mat)


def _op_mul(a, b, nvars):
    n = len(a)
    out = [[WeylOp.zero(nvars) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            for j in range(n):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _op_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _op_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _op_scale(c, a):
    return [[x.scale(c) for x in row] for row in a]


def _op_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def schrodinger_model(spec: HCSpec, b) -> SchrodingerModel:
    """X_i -> d_i (x) I, Y_i -> (i b t_i) (x) I, Z -> (i b) (x) I,
    V_j -> 1 (x) rho_j, with rho from the consistent Clifford module of the
    odd quotient."""
    b = Q(b)
    rep = svn_classify(spec, b)
    if rep.conclusion != "unique_up_to_parity_and_equivalence":
        raise NotAdmissible("no admissible model: %s" % rep.conclusion)
    L = heisenberg_clifford(spec)
    m, n = spec.m, spec.n
    ctable = [(1 + j, 1 + j, {0: spec.signs[j]}) for j in range(n)]
    codd = build_algebra(1, n, ctable, names=["Z"] + ["V%d" % (j + 1) for j in range(n)])
    module = cliffmod.clifford_module(codd, [b])
    dim = module.dim
    ident = fmat_identity(dim)
    images = []
    iden_w = WeylOp.constant(m, 1)
    ib = f_gauss(0, b)
    images.append(_tensor(m, WeylOp.constant(m, ib), ident))  # Z
    for i in range(m):
        images.append(_tensor(m, WeylOp.derivative(m, i), ident))  # X_i
    for i in range(m):
        ti = WeylOp.variable(m, i).scale(ib)
        images.append(_tensor(m, ti, ident))  # Y_i
    for j in range(n):
        coords = linalg.identity(n)[j]
        mat = module.rho_of(coords)
        images.append(_tensor(m, iden_w, mat))  # V_j
    return SchrodingerModel(spec, b, L, module, tuple(images))


@dataclass(frozen=True)
class ModelReport:
    checks: tuple  # (i, j, relation, ok)

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[3]]


def verify_model(model: SchrodingerModel) -> ModelReport:
    """Exhaustive exact relation check on all basis pairs: even-even and
    even-odd commutators match the image of the bracket; odd-odd
    anticommutators match -i times the image of the bracket."""
    L = model.algebra
    m = model.spec.m
    d = L.dim
    imgs = [
        [[x for x in row] for row in mat] for mat in model.images
    ]
    dim = model.module.dim

    def image_of_vector(v):
        out = [[WeylOp.zero(m) for _ in range(dim)] for _ in range(dim)]
        for k in range(d):
            if v[k] != 0:
                out = _op_add(out, _op_scale(f_rat(v[k]), imgs[k]))
        return out

    checks = []
    for i in range(d):
        for j in range(i, d):
            pi, pj = L.parity(i), L.parity(j)
            br = L.bracket_basis(i, j)
            if pi == 1 and pj == 1:
                lhs = _op_add(_op_mul(imgs[i], imgs[j], m), _op_mul(imgs[j], imgs[i], m))
                rhs = _op_scale(-F_I, image_of_vector(br))
                relation = "anticommutator"
            else:
                lhs = _op_sub(_op_mul(imgs[i], imgs[j], m), _op_mul(imgs[j], imgs[i], m))
                rhs = image_of_vector(br)
                relation = "commutator"
            ok = _op_is_zero(_op_sub(lhs, rhs))
            checks.append((i, j, relation, ok))
    return ModelReport(tuple(checks))


def misscaled(model: SchrodingerModel, factor=2) -> SchrodingerModel:
    """Negative control: scale the last odd generator image by a factor."""
    if model.spec.n == 0:
        raise PreconditionFailed("no odd generator to tamper with")
    images = list(model.images)
    images[-1] = tuple(
        tuple(x.scale(f_rat(factor)) for x in row) for row in images[-1]
    )
    return SchrodingerModel(
        model.spec, model.b, model.algebra, model.module, tuple(images)
    )


@dataclass(frozen=True)
class InducedRepData:
    """The complete finite data of the induced representation: the
    polarizing system, its consistent Clifford module, the fiber dimension,
    the number of transverse (L^2) variables, and kappa."""

    system: polarize.PolarizingSystem
    module: CliffordModule
    fiber_dim: int
    transverse_dim: int
    kappa: int


def induced_rep_data(L, lam) -> InducedRepData:
    system = polarize.build_polarizing_system(L, lam)
    module = cliffmod.clifford_module(system.clifford, system.mu)
    transverse = L.dim_even - system.m0.dim
    return InducedRepData(system, module, module.dim, transverse, system.kappa)
