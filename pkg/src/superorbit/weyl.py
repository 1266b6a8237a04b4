"""Normal-ordered polynomial differential operators in finitely many
variables (derivatives on the right), with coefficients in the exact
field.  Products expand by the Leibniz rule, so commutators of operator
polynomials are exact identities."""

from dataclasses import dataclass
from math import comb, factorial

from .numfield import F_ONE, F_ZERO, as_field, f_rat
from .scalar import Q


@dataclass(frozen=True)
class WeylOp:
    """Sum of terms coeff * t^alpha * d^beta over a fixed variable count."""

    nvars: int
    terms: tuple  # sorted tuple of (alpha tuple, beta tuple, FieldElem)

    @staticmethod
    def zero(nvars):
        return WeylOp(nvars, ())

    @staticmethod
    def constant(nvars, value):
        return _from_dict(nvars, {((0,) * nvars, (0,) * nvars): as_field(value)})

    @staticmethod
    def variable(nvars, i):
        alpha = tuple(1 if j == i else 0 for j in range(nvars))
        return _from_dict(nvars, {(alpha, (0,) * nvars): F_ONE})

    @staticmethod
    def derivative(nvars, i):
        beta = tuple(1 if j == i else 0 for j in range(nvars))
        return _from_dict(nvars, {((0,) * nvars, beta): F_ONE})

    def __add__(self, other):
        other = _coerce(self.nvars, other)
        acc = {(a, b): c for (a, b, c) in self.terms}
        for a, b, c in other.terms:
            acc[(a, b)] = acc.get((a, b), F_ZERO) + c
        return _from_dict(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp(self.nvars, tuple((a, b, -c) for (a, b, c) in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(self.nvars, other))

    def __rsub__(self, other):
        return _coerce(self.nvars, other) + (-self)

    def __mul__(self, other):
        other = _coerce(self.nvars, other)
        acc = {}
        for a1, b1, c1 in self.terms:
            for a2, b2, c2 in other.terms:
                base = c1 * c2
                # move each d^b1 past t^a2 one variable at a time
                for ks in _leibniz_indices(b1, a2):
                    coef = base
                    alpha = list(a1)
                    beta = list(b2)
                    for v in range(self.nvars):
                        k = ks[v]
                        coef = coef * f_rat(
                            factorial(k) * comb(b1[v], k) * comb(a2[v], k)
                        )
                        alpha[v] += a2[v] - k
                        beta[v] += b1[v] - k
                    key = (tuple(alpha), tuple(beta))
                    acc[key] = acc.get(key, F_ZERO) + coef
        return _from_dict(self.nvars, acc)

    def __rmul__(self, other):
        return _coerce(self.nvars, other) * self

    def scale(self, c):
        c = as_field(c)
        return WeylOp(self.nvars, tuple((a, b, c * x) for (a, b, x) in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, b, c in self.terms:
            factors = ["(%s)" % c]
            for v, e in enumerate(a):
                if e:
                    factors.append("t%d%s" % (v, "^%d" % e if e > 1 else ""))
            for v, e in enumerate(b):
                if e:
                    factors.append("d%d%s" % (v, "^%d" % e if e > 1 else ""))
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


def _coerce(nvars, x):
    if isinstance(x, WeylOp):
        return x
    return WeylOp.constant(nvars, x)


def _from_dict(nvars, acc):
    items = [(a, b, c) for (a, b), c in acc.items() if c]
    items.sort(key=lambda t: (t[0], t[1]))
    return WeylOp(nvars, tuple(items))


def _leibniz_indices(b1, a2):
    """All per-variable contraction orders 0 <= k_v <= min(b1_v, a2_v)."""
    ranges = [range(min(p, q) + 1) for p, q in zip(b1, a2)]
    out = [[]]
    for r in ranges:
        out = [xs + [k] for xs in out for k in r]
    return [tuple(xs) for xs in out]


def weyl_commutator(p: WeylOp, q: WeylOp) -> WeylOp:
    """pq - qp, normal-ordered exactly."""
    return p * q - q * p
