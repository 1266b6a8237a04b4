"""The shared JSON document format.

Algebras: {"dim_even": k, "dim_odd": r, "names": [...], "brackets":
[{"i": i, "j": j, "out": {"k": "p/q", ...}}]} with 0-based indices,
rationals as strings, unlisted pairs zero, and only one direction of each
pair listed (the other follows by super-antisymmetry).  All emitters sort
keys and produce byte-identical output for identical inputs.
"""

import json

from .scalar import Q, qstr
from .superalg import LieSuperalgebra, Subspace, build_algebra


def algebra_to_doc(L) -> dict:
    brackets = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            row = L.structure[i][j]
            out = {str(k): qstr(row[k]) for k in range(L.dim) if row[k] != 0}
            if out:
                brackets.append({"i": i, "j": j, "out": out})
    return {
        "dim_even": L.dim_even,
        "dim_odd": L.dim_odd,
        "names": list(L.names),
        "brackets": brackets,
    }


def algebra_from_doc(doc) -> LieSuperalgebra:
    table = []
    for ent in doc.get("brackets", []):
        out = {int(k): Q(v) for k, v in ent["out"].items()}
        table.append((int(ent["i"]), int(ent["j"]), out))
    return build_algebra(
        int(doc["dim_even"]), int(doc["dim_odd"]), table, names=doc.get("names")
    )


def functional_to_doc(lam) -> list:
    return [qstr(x) for x in lam]


def functional_from_doc(vals) -> list:
    return [Q(v) for v in vals]


def subspace_to_doc(s: Subspace) -> list:
    return [[qstr(x) for x in row] for row in s.rows]


def subspace_from_doc(rows, ambient) -> Subspace:
    vecs = [[Q(x) for x in row] for row in rows]
    return Subspace.from_vectors(vecs, ambient)


def matrix_to_doc(m) -> list:
    return [[qstr(x) for x in row] for row in m]


def matrix_from_doc(rows) -> list:
    return [[Q(x) for x in row] for row in rows]


def system_to_doc(L, sys) -> dict:
    return {
        "algebra": algebra_to_doc(L),
        "lambda": functional_to_doc(sys.lam),
        "m0": subspace_to_doc(sys.m0),
        "m": subspace_to_doc(sys.m),
        "k_lambda": subspace_to_doc(sys.k_lambda),
        "r_lambda": subspace_to_doc(sys.r_lambda),
        "j": subspace_to_doc(sys.j),
        "clifford": algebra_to_doc(sys.clifford),
        "phi": matrix_to_doc(sys.phi),
        "mu": functional_to_doc(sys.mu),
        "kappa": sys.kappa,
    }


def system_from_doc(doc):
    """Parse a polarizing-system document; returns (algebra, system)."""
    from .polarize import PolarizingSystem

    L = algebra_from_doc(doc["algebra"])
    cliff = algebra_from_doc(doc["clifford"])
    sys = PolarizingSystem(
        m0=subspace_from_doc(doc["m0"], L.dim),
        k_lambda=subspace_from_doc(doc["k_lambda"], L.dim),
        r_lambda=subspace_from_doc(doc["r_lambda"], L.dim),
        j=subspace_from_doc(doc["j"], L.dim),
        clifford=cliff,
        phi=tuple(tuple(r) for r in matrix_from_doc(doc["phi"])),
        lam=tuple(functional_from_doc(doc["lambda"])),
        mu=tuple(functional_from_doc(doc["mu"])),
        m=subspace_from_doc(doc["m"], L.dim),
        kappa=int(doc["kappa"]),
    )
    return L, sys


def fieldelem_to_doc(x) -> list:
    return [
        {"monomial": sorted(m), "re": qstr(re), "im": qstr(im)}
        for (m, re, im) in x.coeffs
    ]


def module_to_doc(mod) -> dict:
    primes = sorted({p for mat in mod.rho for row in mat for x in row for p in x.primes()})
    return {
        "extension": [{"generator": "sqrt(%d)" % p, "square": p} for p in primes],
        "dim": mod.dim,
        "grading": list(mod.grading),
        "a": qstr(mod.a),
        "z_sign": mod.z_sign,
        "congruence": [[qstr(x) for x in row] for row in mod.congruence],
        "diagonal": [qstr(x) for x in mod.diagonal],
        "mu": [qstr(x) for x in mod.mu],
        "rho": [
            [[fieldelem_to_doc(x) for x in row] for row in mat] for mat in mod.rho
        ],
    }


def svn_to_doc(rep) -> dict:
    return {
        "form_verdict": rep.form_verdict,
        "agrees": rep.agrees,
        "conclusion": rep.conclusion,
        "count": rep.count,
    }


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
