"""Built-in example corpus.

The Heisenberg-Clifford family over m <= 2, n <= 3 with all sign patterns,
the classical Heisenberg algebras, a mixed (3|2) example with a central
isotropic odd vector, a 6-dimensional filiform algebra with an odd part,
and a graded abelian algebra.  ``sampling_names`` deduplicates sign
patterns up to permutation (those algebras are isomorphic) for the heavier
property suites.
"""

from .models import HCSpec, heisenberg_clifford
from .superalg import build_algebra


def heisenberg(m=1):
    return heisenberg_clifford(HCSpec(m, 0, ()))


def mixed5():
    """(3|2): [X,Y] = Z, [V1,V1] = Z, V2 central and isotropic."""
    return build_algebra(
        3, 2, [(1, 2, {0: 1}), (3, 3, {0: 1})], names=["Z", "X", "Y", "V1", "V2"]
    )


def filiform6():
    """(4|2) filiform: [e1,e2] = e3, [e1,e3] = e4, with odd part
    [e1,V1] = V2, [V1,V1] = e4 (so V2 is isotropic)."""
    return build_algebra(
        4,
        2,
        [(0, 1, {2: 1}), (0, 2, {3: 1}), (0, 4, {5: 1}), (4, 4, {3: 1})],
        names=["e1", "e2", "e3", "e4", "V1", "V2"],
    )


def abelian(p, q):
    return build_algebra(p, q, [])


def _hc_name(m, n, signs):
    if n == 0:
        return "hc_%d_0" % m
    return "hc_%d_%d_%s" % (m, n, "".join("p" if s == 1 else "m" for s in signs))


def _sign_patterns(n):
    out = [()]
    for _ in range(n):
        out = [pat + (s,) for pat in out for s in (1, -1)]
    return out


def _build_registry():
    reg = {}
    reg["heisenberg"] = lambda: heisenberg(1)
    for m in range(3):
        for n in range(4):
            if m == 0 and n == 0:
                continue
            for signs in _sign_patterns(n):
                spec = HCSpec(m, n, signs)
                reg[_hc_name(m, n, signs)] = (
                    lambda s=spec: heisenberg_clifford(s)
                )
    reg["mixed5"] = mixed5
    reg["filiform6"] = filiform6
    reg["abelian_2_2"] = lambda: abelian(2, 2)
    return reg


REGISTRY = _build_registry()


def corpus_names():
    return sorted(REGISTRY)


def get(name):
    try:
        factory = REGISTRY[name]
    except KeyError:
        raise KeyError("unknown corpus algebra %r" % name) from None
    return factory()


def describe(name) -> str:
    L = get(name)
    return "(%d|%d)" % (L.dim_even, L.dim_odd)


def sampling_names():
    """Corpus with HC sign patterns deduplicated up to permutation."""
    out = []
    seen = set()
    for name in corpus_names():
        if name.startswith("hc_") and name.count("_") == 3:
            m, n, pat = name.split("_")[1:]
            key = (m, n, "".join(sorted(pat)))
            if key in seen:
                continue
            seen.add(key)
        out.append(name)
    return out
